#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "passnim/checks.hpp"
#include "passnim/conjectures.hpp"
#include "passnim/grundy.hpp"

namespace passnim {

enum class OutputFormat { Ascii, Csv, Json };

OutputFormat parse_format(std::string_view text);

// Grundy tables. CSV headers are exactly "x,g" and "x,g0,g1"; rows ordered
// by x; newline is '\n' throughout.
std::string render_table(const GrundyTable& table, OutputFormat format);
std::string render_table(const PassGrundyTable& table, OutputFormat format);

struct ParsedGrundyCsv {
  bool has_pass = false;
  std::vector<std::int64_t> xs;
  std::vector<GrundyValue> g;   // plain tables
  std::vector<GrundyValue> g0;  // pass tables
  std::vector<GrundyValue> g1;
};
ParsedGrundyCsv parse_table_csv(std::string_view text);

std::string render_report(const CheckReport& report, OutputFormat format);
std::string render_condition_a(const ConditionAReport& report, OutputFormat format);
std::string render_agreement(const AgreementRecord& record, OutputFormat format);
std::string render_sweep(const FamilySweepReport& report, OutputFormat format);

std::string render_moves(const std::vector<Move>& moves);

}  // namespace passnim
