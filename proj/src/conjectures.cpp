#include "passnim/conjectures.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "passnim/errors.hpp"

namespace passnim {

std::optional<std::int64_t> dist(const GrundyTable& table, const PeriodCertificate& cert,
                                 std::int64_t w) {
  if (!cert.certified) throw std::invalid_argument("dist needs a certified period");
  const std::int64_t q = cert.preperiod;
  const std::int64_t p = cert.period;
  if (w < q + 1 || w > table.limit()) {
    throw std::invalid_argument("w must lie in [q+1, limit]");
  }
  if (table.values[static_cast<std::size_t>(w)] != 0) {
    throw std::invalid_argument("dist is defined for P-positions only, G(" + std::to_string(w) +
                                ") != 0");
  }
  const std::int64_t s1 = table.rule.min();
  const std::int64_t k_max = p * s1;  // reduced positions cycle by then
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::int64_t rep = window_mod(w - k * s1, cert);
    if (rep > table.limit()) {
      throw std::out_of_range("window reduction left the table");
    }
    if (table.values[static_cast<std::size_t>(rep)] == 0) return k;
  }
  return std::nullopt;
}

DistTable dist_table(const GrundyTable& table, const PeriodCertificate& cert) {
  if (!cert.certified) throw std::invalid_argument("dist_table needs a certified period");
  DistTable out{cert, {}};
  for (std::int64_t w = cert.preperiod + 1; w <= cert.preperiod + cert.period; ++w) {
    if (table.values[static_cast<std::size_t>(w)] != 0) continue;
    out.entries.push_back({w, dist(table, cert, w)});
  }
  return out;
}

ConditionAReport check_condition_a(const GrundyTable& table, const PeriodCertificate& cert) {
  if (!cert.certified) throw std::invalid_argument("condition (a) needs a certified period");
  const std::int64_t q = cert.preperiod;
  const std::int64_t p = cert.period;
  const std::int64_t s1 = table.rule.min();
  const std::int64_t s3 = table.rule.max();
  // w + s3 - s1 passes through unreduced when above q, so the table must
  // reach q + p + s3 - s1.
  if (table.limit() < q + p + s3 - s1) {
    throw std::out_of_range("condition (a) needs the table up to " +
                            std::to_string(q + p + s3 - s1));
  }
  ConditionAReport report{table.rule, true, {}};
  for (std::int64_t w = q + 1; w <= q + p; ++w) {
    if (table.values[static_cast<std::size_t>(w)] != 0) continue;
    const auto steps = dist(table, cert, w);
    if (!steps || *steps < 4 || *steps % 2 != 0) continue;
    const std::int64_t up = window_mod(w + s3 - s1, cert);
    const std::int64_t down = window_mod(w + s3 - 3 * s1, cert);
    ConditionAWitness witness{w, *steps, table.values[static_cast<std::size_t>(up)] == 0,
                              table.values[static_cast<std::size_t>(down)] == 0};
    if (!witness.ok()) report.holds = false;
    report.witnesses.push_back(witness);
  }
  return report;
}

AgreementRecord test_reverse_mex_iff_condition_a(const GrundyTable& table,
                                                 const PeriodCertificate& cert) {
  if (!cert.certified) throw std::invalid_argument("agreement test needs a certified period");
  const std::int64_t q = cert.preperiod;
  const std::int64_t p = cert.period;
  AgreementRecord record;
  record.rule = table.rule;
  record.cert = cert;
  record.reverse_mex_report = check_reverse_mex(table, q + 1, q + 3 * p);
  record.reverse_mex_holds = record.reverse_mex_report.passed();
  record.reverse_mex_from_one = check_reverse_mex(table, 1, q + 3 * p).passed();
  record.condition_a_report = check_condition_a(table, cert);
  record.condition_a_holds = record.condition_a_report.holds;
  return record;
}

AgreementRecord test_reverse_mex_iff_condition_a(const SubtractionSet& rule) {
  const DetectBounds bounds = default_bounds(rule);
  const std::int64_t maxs = rule.max();
  GrundyTable table =
      grundy_table(rule, bounds.max_preperiod + 2 * bounds.max_period + maxs);
  const PeriodCertificate cert = detect_period(table, bounds);
  const std::int64_t need =
      std::max(cert.preperiod + 3 * cert.period + maxs, cert.preperiod + cert.period + maxs);
  if (need > table.limit()) table = grundy_table(rule, need);
  return test_reverse_mex_iff_condition_a(table, cert);
}

char family_code(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::C: return 'C';
  }
  throw std::invalid_argument("unknown family");
}

Family parse_family(std::string_view text) {
  if (text == "A" || text == "a") return Family::A;
  if (text == "B" || text == "b") return Family::B;
  if (text == "C" || text == "c") return Family::C;
  throw std::invalid_argument("family must be one of A, B, C");
}

namespace {

void require_family_params(std::int64_t a, std::int64_t n) {
  if (a < 1 || n < 1) throw std::invalid_argument("family parameters require a >= 1 and n >= 1");
}

}  // namespace

SubtractionSet family_rule(Family f, std::int64_t a, std::int64_t n) {
  require_family_params(a, n);
  switch (f) {
    case Family::A: return SubtractionSet{a, 2 * a * n, 2 * a * n + a};
    case Family::B: return SubtractionSet{a, (2 * n + 1) * a, (2 * n + 3) * a};
    case Family::C: return SubtractionSet{a, (2 * n + 1) * a, (2 * n + 5) * a};
  }
  throw std::invalid_argument("unknown family");
}

std::int64_t family_pass_threshold(Family f, std::int64_t a, std::int64_t n) {
  require_family_params(a, n);
  switch (f) {
    case Family::A: return 6 * a * n + 4 * a + 1;
    case Family::B: return a * (2 * n + 3) + 1;
    case Family::C: return a * (2 * n + 5) + 1;
  }
  throw std::invalid_argument("unknown family");
}

bool SweepCell::all_checks_pass() const noexcept {
  return computed() && reverse_mex_all && reverse_mex_from_threshold &&
         independence_from_threshold && pass_reverse_mex_from_threshold && loop_certified &&
         loop_within_threshold;
}

namespace {

void compute_cell(SweepCell& cell, std::int64_t periods) {
  const SubtractionSet& rule = cell.rule;
  const std::int64_t maxs = rule.max();
  const DetectBounds bounds = default_bounds(rule);

  PassGrundyTable table =
      pass_grundy_table(rule, bounds.max_preperiod + 2 * bounds.max_period + maxs);
  const PeriodCertificate cert = detect_period_pass(table, bounds);

  const std::int64_t hi =
      std::max(cell.stated_threshold, cert.preperiod + 1) + periods * cert.period;
  if (hi + maxs > table.limit()) table = pass_grundy_table(rule, hi + maxs);

  cell.reverse_mex_all = check_reverse_mex(table.row0, rule, 1, hi).passed();
  cell.reverse_mex_from_threshold =
      check_reverse_mex(table.row0, rule, cell.stated_threshold, hi).passed();
  cell.independence_from_threshold =
      check_pass_independence(table, cell.stated_threshold, hi).passed();
  cell.pass_reverse_mex_from_threshold =
      check_reverse_mex_pass(table, cell.stated_threshold, hi).passed();
  cell.empirical_threshold = empirical_independence_threshold(table, hi);
  cell.max_pass_value = *std::max_element(table.row1.begin(), table.row1.end());
  cell.loop_certified = cert.certified;
  cell.loop_preperiod = cert.preperiod;
  cell.loop_period = cert.period;
  cell.loop_within_threshold = cert.preperiod + 1 <= cell.stated_threshold;
  cell.checked_limit = table.limit();
}

}  // namespace

FamilySweepReport sweep_family(Family f, std::int64_t a_lo, std::int64_t a_hi, std::int64_t n_lo,
                               std::int64_t n_hi, std::int64_t periods) {
  if (a_lo < 1 || n_lo < 1 || a_hi < a_lo || n_hi < n_lo) {
    throw std::invalid_argument("sweep grid requires 1 <= a_lo <= a_hi and 1 <= n_lo <= n_hi");
  }
  if (periods < 1) throw std::invalid_argument("periods must be >= 1");
  FamilySweepReport report{f, {}};
  for (std::int64_t a = a_lo; a <= a_hi; ++a) {
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
      SweepCell cell;
      cell.family = f;
      cell.a = a;
      cell.n = n;
      cell.rule = family_rule(f, a, n);
      cell.stated_threshold = family_pass_threshold(f, a, n);
      try {
        compute_cell(cell, periods);
      } catch (const std::exception& e) {
        cell.skip_reason = e.what();
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace passnim
