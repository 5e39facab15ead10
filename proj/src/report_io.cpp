#include "passnim/report_io.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace passnim {

namespace {

using nlohmann::json;

json rule_json(const SubtractionSet& rule) { return json(rule.amounts()); }

json violations_json(const std::vector<Violation>& violations) {
  json out = json::array();
  for (const Violation& v : violations) {
    out.push_back({{"x", v.x}, {"expected", v.expected}, {"actual", v.actual}});
  }
  return out;
}

std::string sanitize_csv(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n') c = ';';
  }
  return text;
}

std::int64_t parse_int(std::string_view text, const char* what) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument(std::string("bad ") + what + ": '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = line.find(sep, pos);
    if (next == std::string_view::npos) {
      out.push_back(line.substr(pos));
      return out;
    }
    out.push_back(line.substr(pos, next - pos));
    pos = next + 1;
  }
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "ascii") return OutputFormat::Ascii;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  throw std::invalid_argument("format must be one of ascii, csv, json");
}

std::string render_table(const GrundyTable& table, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "x,g\n";
      for (std::int64_t x = 0; x <= table.limit(); ++x) {
        out << x << ',' << table.values[x] << '\n';
      }
      break;
    case OutputFormat::Ascii:
      out << "x\tg\n";
      for (std::int64_t x = 0; x <= table.limit(); ++x) {
        out << x << '\t' << table.values[x] << '\n';
      }
      break;
    case OutputFormat::Json: {
      json j{{"rule", rule_json(table.rule)},
             {"limit", table.limit()},
             {"values", json(table.values)}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_table(const PassGrundyTable& table, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Csv:
      out << "x,g0,g1\n";
      for (std::int64_t x = 0; x <= table.limit(); ++x) {
        out << x << ',' << table.row0[x] << ',' << table.row1[x] << '\n';
      }
      break;
    case OutputFormat::Ascii:
      out << "x\tg0\tg1\n";
      for (std::int64_t x = 0; x <= table.limit(); ++x) {
        out << x << '\t' << table.row0[x] << '\t' << table.row1[x] << '\n';
      }
      break;
    case OutputFormat::Json: {
      json j{{"rule", rule_json(table.rule)},
             {"limit", table.limit()},
             {"row0", json(table.row0)},
             {"row1", json(table.row1)}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

ParsedGrundyCsv parse_table_csv(std::string_view text) {
  ParsedGrundyCsv parsed;
  std::size_t pos = 0;
  bool saw_header = false;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;
    if (!saw_header) {
      if (line == "x,g") {
        parsed.has_pass = false;
      } else if (line == "x,g0,g1") {
        parsed.has_pass = true;
      } else {
        throw std::invalid_argument("unrecognized header: '" + std::string(line) + "'");
      }
      saw_header = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != (parsed.has_pass ? 3u : 2u)) {
      throw std::invalid_argument("bad row: '" + std::string(line) + "'");
    }
    parsed.xs.push_back(parse_int(fields[0], "x"));
    if (parsed.has_pass) {
      parsed.g0.push_back(static_cast<GrundyValue>(parse_int(fields[1], "g0")));
      parsed.g1.push_back(static_cast<GrundyValue>(parse_int(fields[2], "g1")));
    } else {
      parsed.g.push_back(static_cast<GrundyValue>(parse_int(fields[1], "g")));
    }
  }
  if (!saw_header) throw std::invalid_argument("empty table");
  return parsed;
}

std::string render_report(const CheckReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Ascii:
      out << "property: " << report.property_name << '\n'
          << "rule: " << report.rule.to_string() << '\n'
          << "range: [" << report.lo << ", " << report.hi << "]\n"
          << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.violations.size()
          << " violation" << (report.violations.size() == 1 ? "" : "s") << ")\n";
      for (const Violation& v : report.violations) {
        out << "  x=" << v.x << ": expected " << v.expected << ", actual " << v.actual << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "x,expected,actual\n";
      for (const Violation& v : report.violations) {
        out << v.x << ',' << v.expected << ',' << v.actual << '\n';
      }
      break;
    case OutputFormat::Json: {
      json j{{"property_name", report.property_name},
             {"rule", rule_json(report.rule)},
             {"range", json::array({report.lo, report.hi})},
             {"violations", violations_json(report.violations)},
             {"passed", report.passed()}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_condition_a(const ConditionAReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Ascii:
      out << "property: condition-a\n"
          << "rule: " << report.rule.to_string() << '\n'
          << "result: " << (report.holds ? "HOLDS" : "FAILS") << " (" << report.witnesses.size()
          << " witness" << (report.witnesses.size() == 1 ? "" : "es") << ")\n";
      for (const ConditionAWitness& w : report.witnesses) {
        out << "  w=" << w.w << " dist=" << w.steps << " w+s3-s1 "
            << (w.plus_s3_minus_s1_is_p ? "P" : "not-P") << " w+s3-3s1 "
            << (w.plus_s3_minus_3s1_is_p ? "P" : "not-P") << (w.ok() ? "" : "  <- violates")
            << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "w,dist,plus_s3_minus_s1_is_p,plus_s3_minus_3s1_is_p,ok\n";
      for (const ConditionAWitness& w : report.witnesses) {
        out << w.w << ',' << w.steps << ',' << (w.plus_s3_minus_s1_is_p ? 1 : 0) << ','
            << (w.plus_s3_minus_3s1_is_p ? 1 : 0) << ',' << (w.ok() ? 1 : 0) << '\n';
      }
      break;
    case OutputFormat::Json: {
      json witnesses = json::array();
      for (const ConditionAWitness& w : report.witnesses) {
        witnesses.push_back({{"w", w.w},
                             {"dist", w.steps},
                             {"plus_s3_minus_s1_is_p", w.plus_s3_minus_s1_is_p},
                             {"plus_s3_minus_3s1_is_p", w.plus_s3_minus_3s1_is_p},
                             {"ok", w.ok()}});
      }
      json j{{"property_name", "condition-a"},
             {"rule", rule_json(report.rule)},
             {"holds", report.holds},
             {"witnesses", witnesses}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_agreement(const AgreementRecord& record, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Ascii:
      out << "rule: " << record.rule.to_string() << '\n'
          << "period: q=" << record.cert.preperiod << " p=" << record.cert.period << '\n'
          << "reverse-mex (periodic window): " << (record.reverse_mex_holds ? "yes" : "no")
          << '\n'
          << "reverse-mex (from x=1): " << (record.reverse_mex_from_one ? "yes" : "no") << '\n'
          << "condition (a): " << (record.condition_a_holds ? "yes" : "no") << '\n'
          << "agreement: " << (record.agree() ? "AGREE" : "DISAGREE") << '\n';
      break;
    case OutputFormat::Csv:
      out << "s,preperiod,period,reverse_mex,reverse_mex_from_one,condition_a,agree\n"
          << sanitize_csv(record.rule.to_string()) << ',' << record.cert.preperiod << ','
          << record.cert.period << ',' << (record.reverse_mex_holds ? 1 : 0) << ','
          << (record.reverse_mex_from_one ? 1 : 0) << ',' << (record.condition_a_holds ? 1 : 0)
          << ',' << (record.agree() ? 1 : 0) << '\n';
      break;
    case OutputFormat::Json: {
      json j{{"rule", rule_json(record.rule)},
             {"preperiod", record.cert.preperiod},
             {"period", record.cert.period},
             {"reverse_mex", record.reverse_mex_holds},
             {"reverse_mex_from_one", record.reverse_mex_from_one},
             {"condition_a", record.condition_a_holds},
             {"agree", record.agree()}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

namespace {

json cell_json(const SweepCell& cell) {
  json j{{"family", std::string(1, family_code(cell.family))},
         {"a", cell.a},
         {"n", cell.n},
         {"rule", rule_json(cell.rule)},
         {"stated_threshold", cell.stated_threshold}};
  if (!cell.computed()) {
    j["skip"] = cell.skip_reason;
    return j;
  }
  j["reverse_mex_all"] = cell.reverse_mex_all;
  j["reverse_mex_from_threshold"] = cell.reverse_mex_from_threshold;
  j["independence_from_threshold"] = cell.independence_from_threshold;
  j["pass_reverse_mex_from_threshold"] = cell.pass_reverse_mex_from_threshold;
  j["empirical_threshold"] = cell.empirical_threshold;
  j["max_pass_value"] = cell.max_pass_value;
  j["loop_preperiod"] = cell.loop_preperiod;
  j["loop_period"] = cell.loop_period;
  j["loop_within_threshold"] = cell.loop_within_threshold;
  j["checked_limit"] = cell.checked_limit;
  return j;
}

}  // namespace

std::string render_sweep(const FamilySweepReport& report, OutputFormat format) {
  std::ostringstream out;
  switch (format) {
    case OutputFormat::Ascii:
      out << "family " << family_code(report.family) << " sweep (" << report.cells.size()
          << " cells)\n";
      for (const SweepCell& cell : report.cells) {
        out << "  a=" << cell.a << " n=" << cell.n << " rule=" << cell.rule.to_string()
            << " threshold=" << cell.stated_threshold;
        if (!cell.computed()) {
          out << " SKIP: " << cell.skip_reason << '\n';
          continue;
        }
        out << " | rm-all=" << (cell.reverse_mex_all ? "ok" : "FAIL")
            << " rm-thr=" << (cell.reverse_mex_from_threshold ? "ok" : "FAIL")
            << " indep=" << (cell.independence_from_threshold ? "ok" : "FAIL")
            << " pass-rm=" << (cell.pass_reverse_mex_from_threshold ? "ok" : "FAIL")
            << " onset=" << cell.empirical_threshold << " max-g1=" << cell.max_pass_value
            << " loop=(q=" << cell.loop_preperiod << ",p=" << cell.loop_period << ")"
            << (cell.loop_within_threshold ? "" : " loop-onset-past-threshold")
            << (cell.all_checks_pass() ? "" : "  <- counterexample candidate") << '\n';
      }
      break;
    case OutputFormat::Csv:
      out << "family,a,n,s1,s2,s3,stated_threshold,reverse_mex_all,reverse_mex_from_threshold,"
             "independence_from_threshold,pass_reverse_mex_from_threshold,empirical_threshold,"
             "max_pass_value,loop_preperiod,loop_period,loop_within_threshold,checked_limit,"
             "skip\n";
      for (const SweepCell& cell : report.cells) {
        out << family_code(cell.family) << ',' << cell.a << ',' << cell.n;
        for (std::int64_t amount : cell.rule.amounts()) out << ',' << amount;
        out << ',' << cell.stated_threshold;
        if (cell.computed()) {
          out << ',' << (cell.reverse_mex_all ? 1 : 0) << ','
              << (cell.reverse_mex_from_threshold ? 1 : 0) << ','
              << (cell.independence_from_threshold ? 1 : 0) << ','
              << (cell.pass_reverse_mex_from_threshold ? 1 : 0) << ','
              << cell.empirical_threshold << ',' << cell.max_pass_value << ','
              << cell.loop_preperiod << ',' << cell.loop_period << ','
              << (cell.loop_within_threshold ? 1 : 0) << ',' << cell.checked_limit << ",\n";
        } else {
          out << ",,,,,,,,,," << sanitize_csv(cell.skip_reason) << '\n';
        }
      }
      break;
    case OutputFormat::Json: {
      json cells = json::array();
      for (const SweepCell& cell : report.cells) cells.push_back(cell_json(cell));
      json j{{"family", std::string(1, family_code(report.family))}, {"cells", cells}};
      out << j.dump() << '\n';
      break;
    }
  }
  return out.str();
}

std::string render_moves(const std::vector<Move>& moves) {
  if (moves.empty()) return "P-position (no winning move)\n";
  std::ostringstream out;
  for (const Move& m : moves) {
    if (m.is_pass) {
      out << "pass\n";
    } else {
      out << "remove " << m.amount << '\n';
    }
  }
  return out.str();
}

}  // namespace passnim
