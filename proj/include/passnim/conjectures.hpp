#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "passnim/checks.hpp"
#include "passnim/grundy.hpp"
#include "passnim/periodicity.hpp"

namespace passnim {

/// Least k >= 1 such that the window reduction of w - k*s1 is a P-position.
/// w must itself be a P-position with w >= q+1. Returns nullopt if no
/// k <= p*s1 qualifies (the reduced positions cycle, so the search is
/// exhaustive by then).
std::optional<std::int64_t> dist(const GrundyTable& table, const PeriodCertificate& cert,
                                 std::int64_t w);

struct DistEntry {
  std::int64_t w = 0;
  std::optional<std::int64_t> steps;
};

/// dist for every P-position representative in [q+1, q+p].
struct DistTable {
  PeriodCertificate cert;
  std::vector<DistEntry> entries;
};
DistTable dist_table(const GrundyTable& table, const PeriodCertificate& cert);

struct ConditionAWitness {
  std::int64_t w = 0;
  std::int64_t steps = 0;             // dist(w), even and >= 4
  bool plus_s3_minus_s1_is_p = false;  // must be false for the clause to hold
  bool plus_s3_minus_3s1_is_p = false; // must be true
  bool ok() const noexcept { return !plus_s3_minus_s1_is_p && plus_s3_minus_3s1_is_p; }
};

struct ConditionAReport {
  SubtractionSet rule;
  bool holds = false;  // vacuously true when no witness is in scope
  std::vector<ConditionAWitness> witnesses;
};

/// Evaluates condition (a) over one representative window: every P-position
/// w with even dist(w) >= 4 must have w+s3-s1 reduced to a non-P position
/// and w+s3-3s1 reduced to a P-position.
ConditionAReport check_condition_a(const GrundyTable& table, const PeriodCertificate& cert);

struct AgreementRecord {
  SubtractionSet rule;
  PeriodCertificate cert;
  bool reverse_mex_holds = false;     // over the periodic window [q+1, q+3p]
  bool reverse_mex_from_one = false;  // same check started at x = 1, recorded
  bool condition_a_holds = false;
  CheckReport reverse_mex_report;
  ConditionAReport condition_a_report;
  bool agree() const noexcept { return reverse_mex_holds == condition_a_holds; }
};

/// Computes both sides of the reverse-mex <=> condition (a) conjecture
/// independently and records whether they agree. The reverse-mex side is
/// evaluated over three certified periods starting at q+1, the regime the
/// conjecture is stated in; the x>=1 variant is recorded alongside.
AgreementRecord test_reverse_mex_iff_condition_a(const SubtractionSet& rule);
AgreementRecord test_reverse_mex_iff_condition_a(const GrundyTable& table,
                                                 const PeriodCertificate& cert);

/// The three conjectured families: A = {a, 2an, 2an+a},
/// B = {a, (2n+1)a, (2n+3)a}, C = {a, (2n+1)a, (2n+5)a}.
enum class Family { A, B, C };

char family_code(Family f);
Family parse_family(std::string_view text);

SubtractionSet family_rule(Family f, std::int64_t a, std::int64_t n);
/// Conjectured onset of pass-independence, pass reverse-mex and the loop:
/// 6an+4a+1, a(2n+3)+1, a(2n+5)+1 respectively.
std::int64_t family_pass_threshold(Family f, std::int64_t a, std::int64_t n);

struct SweepCell {
  Family family = Family::A;
  std::int64_t a = 0;
  std::int64_t n = 0;
  SubtractionSet rule;
  std::int64_t stated_threshold = 0;
  std::string skip_reason;  // nonempty when the cell could not be computed

  bool reverse_mex_all = false;             // row0 reverse-mex on [1, hi]
  bool reverse_mex_from_threshold = false;  // same from the stated threshold
  bool independence_from_threshold = false; // pass term droppable from there
  bool pass_reverse_mex_from_threshold = false;
  std::int64_t empirical_threshold = 0;     // measured independence onset
  int max_pass_value = 0;                   // largest row1 value seen
  bool loop_certified = false;
  std::int64_t loop_preperiod = 0;
  std::int64_t loop_period = 0;
  bool loop_within_threshold = false;       // loop start <= stated threshold
  std::int64_t checked_limit = 0;

  bool computed() const noexcept { return skip_reason.empty(); }
  /// True when every conjectured per-cell claim checks out.
  bool all_checks_pass() const noexcept;
};

struct FamilySweepReport {
  Family family = Family::A;
  std::vector<SweepCell> cells;
};

/// One DP per (a, n) grid cell; checks each conjectured claim against three
/// certified periods past the stated threshold. Failing conjectural cells
/// are counterexample candidates, recorded rather than thrown.
FamilySweepReport sweep_family(Family f, std::int64_t a_lo, std::int64_t a_hi, std::int64_t n_lo,
                               std::int64_t n_hi, std::int64_t periods = 3);

}  // namespace passnim
