#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <span>
#include <vector>

#include "passnim/checks.hpp"
#include "passnim/closed_form.hpp"
#include "passnim/conjectures.hpp"
#include "passnim/errors.hpp"
#include "passnim/grundy.hpp"
#include "passnim/periodicity.hpp"
#include "passnim/report_io.hpp"
#include "passnim/subtraction_set.hpp"

namespace py = pybind11;
using namespace passnim;

namespace {

std::optional<DetectBounds> make_bounds(std::int64_t max_preperiod, std::int64_t max_period) {
  if (max_preperiod < 0 && max_period < 0) return std::nullopt;
  if (max_preperiod < 0 || max_period < 0) {
    throw std::invalid_argument("give both max_preperiod and max_period, or neither");
  }
  return DetectBounds{max_preperiod, max_period};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Grundy values, periodicity certificates and conjecture sweeps for subtraction "
            "games with a one-time pass move";

  py::register_exception<capacity_error>(m, "CapacityError", PyExc_MemoryError);
  py::register_exception<period_not_found_error>(m, "PeriodNotFoundError", PyExc_RuntimeError);

  py::class_<SubtractionSet>(m, "SubtractionSet")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("amounts"))
      .def_property_readonly("amounts", &SubtractionSet::amounts)
      .def("__len__", &SubtractionSet::size)
      .def("__eq__", [](const SubtractionSet& a, const SubtractionSet& b) { return a == b; })
      .def("__repr__",
           [](const SubtractionSet& s) { return "SubtractionSet(" + s.to_string() + ")"; });

  py::enum_<Outcome>(m, "Outcome").value("P", Outcome::P).value("N", Outcome::N);

  py::class_<Move>(m, "Move")
      .def_readonly("amount", &Move::amount)
      .def_readonly("is_pass", &Move::is_pass)
      .def("__eq__", [](const Move& a, const Move& b) { return a == b; })
      .def("__repr__", [](const Move& mv) {
        return mv.is_pass ? std::string("Move(pass)")
                          : "Move(remove " + std::to_string(mv.amount) + ")";
      });

  py::class_<GrundyTable>(m, "GrundyTable")
      .def_readonly("rule", &GrundyTable::rule)
      .def_readonly("values", &GrundyTable::values)
      .def_property_readonly("limit", &GrundyTable::limit);

  py::class_<PassGrundyTable>(m, "PassGrundyTable")
      .def_readonly("rule", &PassGrundyTable::rule)
      .def_readonly("row0", &PassGrundyTable::row0)
      .def_readonly("row1", &PassGrundyTable::row1)
      .def_property_readonly("limit", &PassGrundyTable::limit);

  m.def(
      "mex",
      [](const std::vector<std::int64_t>& values) {
        std::vector<GrundyValue> copy;
        copy.reserve(values.size());
        for (std::int64_t v : values) {
          if (v < 0) throw std::invalid_argument("mex inputs must be >= 0");
          copy.push_back(static_cast<GrundyValue>(std::min<std::int64_t>(v, 0xFFFF)));
        }
        return mex(std::span<const GrundyValue>(copy));
      },
      py::arg("values"));
  m.def("moves", &moves, py::arg("x"), py::arg("rule"));
  m.def("grundy_table", &grundy_table, py::arg("rule"), py::arg("limit"),
        py::arg("entry_budget") = kDefaultEntryBudget);
  m.def("pass_grundy_table", &pass_grundy_table, py::arg("rule"), py::arg("limit"),
        py::arg("entry_budget") = kDefaultEntryBudget);
  m.def("outcome_by_grundy",
        py::overload_cast<const GrundyTable&, std::int64_t>(&outcome_by_grundy), py::arg("table"),
        py::arg("x"));
  m.def("outcome_by_grundy_pass",
        py::overload_cast<const PassGrundyTable&, std::int64_t, bool>(&outcome_by_grundy),
        py::arg("table"), py::arg("x"), py::arg("pass_available"));
  m.def("outcome_by_search", &outcome_by_search, py::arg("rule"), py::arg("x"),
        py::arg("pass_available") = false);
  m.def("winning_moves", py::overload_cast<const GrundyTable&, std::int64_t>(&winning_moves),
        py::arg("table"), py::arg("x"));
  m.def("winning_moves_pass",
        py::overload_cast<const PassGrundyTable&, std::int64_t, bool>(&winning_moves),
        py::arg("table"), py::arg("x"), py::arg("pass_available"));

  py::class_<PeriodCertificate>(m, "PeriodCertificate")
      .def(py::init<>())
      .def_readwrite("preperiod", &PeriodCertificate::preperiod)
      .def_readwrite("period", &PeriodCertificate::period)
      .def_readwrite("window_lo", &PeriodCertificate::window_lo)
      .def_readwrite("window_hi", &PeriodCertificate::window_hi)
      .def_readwrite("certified", &PeriodCertificate::certified)
      .def("__repr__", [](const PeriodCertificate& c) {
        return "PeriodCertificate(q=" + std::to_string(c.preperiod) +
               ", p=" + std::to_string(c.period) + (c.certified ? ")" : ", uncertified)");
      });

  m.def(
      "detect_period",
      [](const GrundyTable& table, std::int64_t max_preperiod, std::int64_t max_period) {
        return detect_period(table, make_bounds(max_preperiod, max_period));
      },
      py::arg("table"), py::arg("max_preperiod") = -1, py::arg("max_period") = -1);
  m.def(
      "detect_period_values",
      [](const std::vector<GrundyValue>& values, const SubtractionSet& rule,
         std::int64_t max_preperiod, std::int64_t max_period) {
        return detect_period(values, rule, make_bounds(max_preperiod, max_period));
      },
      py::arg("values"), py::arg("rule"), py::arg("max_preperiod") = -1,
      py::arg("max_period") = -1);
  m.def(
      "detect_period_pass",
      [](const PassGrundyTable& table, std::int64_t max_preperiod, std::int64_t max_period) {
        return detect_period_pass(table, make_bounds(max_preperiod, max_period));
      },
      py::arg("table"), py::arg("max_preperiod") = -1, py::arg("max_period") = -1);
  m.def("window_mod", &window_mod, py::arg("v"), py::arg("cert"));
  m.def("value_at", py::overload_cast<const GrundyTable&, const PeriodCertificate&, std::int64_t>(
                        &value_at),
        py::arg("table"), py::arg("cert"), py::arg("x"));
  m.def("value_at_pass", &value_at_pass, py::arg("table"), py::arg("cert"), py::arg("x"));

  py::class_<BlockSegment>(m, "BlockSegment")
      .def_readonly("name", &BlockSegment::name)
      .def_readonly("values", &BlockSegment::values)
      .def_readonly("n_coeff", &BlockSegment::n_coeff)
      .def_readonly("n_offset", &BlockSegment::n_offset)
      .def("repeats", &BlockSegment::repeats, py::arg("n"));
  py::class_<BlockPattern>(m, "BlockPattern")
      .def_readonly("segments", &BlockPattern::segments)
      .def("expanded_length", &BlockPattern::expanded_length, py::arg("n"))
      .def("expand", &BlockPattern::expand, py::arg("n"));

  m.def("closed_form_rule", &closed_form_rule, py::arg("n"));
  m.def("grundy_closed", &grundy_closed, py::arg("n"), py::arg("x"));
  m.def("pass_prefix_pattern", &pass_prefix_pattern);
  m.def("pass_loop_pattern", &pass_loop_pattern);
  m.def("pass_prefix_values", &pass_prefix_values, py::arg("n"));
  m.def("pass_loop_values", &pass_loop_values, py::arg("n"));
  m.def("grundy_pass_closed", &grundy_pass_closed, py::arg("n"), py::arg("x"));

  py::class_<Violation>(m, "Violation")
      .def_readonly("x", &Violation::x)
      .def_readonly("expected", &Violation::expected)
      .def_readonly("actual", &Violation::actual)
      .def("__repr__", [](const Violation& v) {
        return "Violation(x=" + std::to_string(v.x) + ", expected=" + std::to_string(v.expected) +
               ", actual=" + std::to_string(v.actual) + ")";
      });
  py::class_<CheckReport>(m, "CheckReport")
      .def_readonly("property_name", &CheckReport::property_name)
      .def_readonly("rule", &CheckReport::rule)
      .def_readonly("lo", &CheckReport::lo)
      .def_readonly("hi", &CheckReport::hi)
      .def_readonly("violations", &CheckReport::violations)
      .def_property_readonly("passed", &CheckReport::passed)
      .def("json", [](const CheckReport& r) { return render_report(r, OutputFormat::Json); });

  m.def("check_reverse_mex",
        py::overload_cast<const GrundyTable&, std::int64_t, std::int64_t>(&check_reverse_mex),
        py::arg("table"), py::arg("lo"), py::arg("hi"));
  m.def("check_reverse_mex_pass", &check_reverse_mex_pass, py::arg("table"), py::arg("lo"),
        py::arg("hi"));
  m.def("check_pass_independence", &check_pass_independence, py::arg("table"), py::arg("lo"),
        py::arg("hi"));
  m.def("last_independence_violation", &last_independence_violation, py::arg("table"),
        py::arg("hi"));
  m.def("empirical_independence_threshold", &empirical_independence_threshold, py::arg("table"),
        py::arg("hi"));
  m.def("verify_block_theorem", &verify_block_theorem, py::arg("n"), py::arg("table"));
  m.def("verify_closed_form_theorem", &verify_closed_form_theorem, py::arg("n"), py::arg("table"),
        py::arg("periods"));

  m.def("dist", &dist, py::arg("table"), py::arg("cert"), py::arg("w"));

  py::class_<ConditionAWitness>(m, "ConditionAWitness")
      .def_readonly("w", &ConditionAWitness::w)
      .def_readonly("steps", &ConditionAWitness::steps)
      .def_readonly("plus_s3_minus_s1_is_p", &ConditionAWitness::plus_s3_minus_s1_is_p)
      .def_readonly("plus_s3_minus_3s1_is_p", &ConditionAWitness::plus_s3_minus_3s1_is_p)
      .def_property_readonly("ok", &ConditionAWitness::ok);
  py::class_<ConditionAReport>(m, "ConditionAReport")
      .def_readonly("rule", &ConditionAReport::rule)
      .def_readonly("holds", &ConditionAReport::holds)
      .def_readonly("witnesses", &ConditionAReport::witnesses);
  m.def("check_condition_a", &check_condition_a, py::arg("table"), py::arg("cert"));

  py::class_<AgreementRecord>(m, "AgreementRecord")
      .def_readonly("rule", &AgreementRecord::rule)
      .def_readonly("cert", &AgreementRecord::cert)
      .def_readonly("reverse_mex_holds", &AgreementRecord::reverse_mex_holds)
      .def_readonly("reverse_mex_from_one", &AgreementRecord::reverse_mex_from_one)
      .def_readonly("condition_a_holds", &AgreementRecord::condition_a_holds)
      .def_property_readonly("agree", &AgreementRecord::agree);
  m.def("test_reverse_mex_iff_condition_a",
        py::overload_cast<const SubtractionSet&>(&test_reverse_mex_iff_condition_a),
        py::arg("rule"));

  py::enum_<Family>(m, "Family")
      .value("A", Family::A)
      .value("B", Family::B)
      .value("C", Family::C);
  m.def("family_rule", &family_rule, py::arg("family"), py::arg("a"), py::arg("n"));
  m.def("family_pass_threshold", &family_pass_threshold, py::arg("family"), py::arg("a"),
        py::arg("n"));

  py::class_<SweepCell>(m, "SweepCell")
      .def_readonly("family", &SweepCell::family)
      .def_readonly("a", &SweepCell::a)
      .def_readonly("n", &SweepCell::n)
      .def_readonly("rule", &SweepCell::rule)
      .def_readonly("stated_threshold", &SweepCell::stated_threshold)
      .def_readonly("skip_reason", &SweepCell::skip_reason)
      .def_readonly("reverse_mex_all", &SweepCell::reverse_mex_all)
      .def_readonly("reverse_mex_from_threshold", &SweepCell::reverse_mex_from_threshold)
      .def_readonly("independence_from_threshold", &SweepCell::independence_from_threshold)
      .def_readonly("pass_reverse_mex_from_threshold",
                    &SweepCell::pass_reverse_mex_from_threshold)
      .def_readonly("empirical_threshold", &SweepCell::empirical_threshold)
      .def_readonly("max_pass_value", &SweepCell::max_pass_value)
      .def_readonly("loop_certified", &SweepCell::loop_certified)
      .def_readonly("loop_preperiod", &SweepCell::loop_preperiod)
      .def_readonly("loop_period", &SweepCell::loop_period)
      .def_readonly("loop_within_threshold", &SweepCell::loop_within_threshold)
      .def_readonly("checked_limit", &SweepCell::checked_limit)
      .def_property_readonly("computed", &SweepCell::computed)
      .def_property_readonly("all_checks_pass", &SweepCell::all_checks_pass);
  py::class_<FamilySweepReport>(m, "FamilySweepReport")
      .def_readonly("family", &FamilySweepReport::family)
      .def_readonly("cells", &FamilySweepReport::cells)
      .def("csv", [](const FamilySweepReport& r) { return render_sweep(r, OutputFormat::Csv); })
      .def("json", [](const FamilySweepReport& r) { return render_sweep(r, OutputFormat::Json); });
  m.def("sweep_family", &sweep_family, py::arg("family"), py::arg("a_lo"), py::arg("a_hi"),
        py::arg("n_lo"), py::arg("n_hi"), py::arg("periods") = 3);
}
