#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polyapery/expr.hpp"

namespace polyapery {

enum class Verdict { kPass, kFail, kUncertain };

std::string to_string(Verdict v);

/// One concrete comparison. A limit case passes when |lhs - rhs| stays inside
/// the envelope instead of the digit threshold.
struct IdentityCase {
  std::string label;  // "u=-1/2", empty for a single unparameterized check
  ConstExpr lhs;
  ConstExpr rhs;
  ParamPoint params;
  ConstExpr envelope;  // set for limit cases
};

struct IdentityRecord {
  std::string id;
  std::string description;
  std::string paper_ref;
  /// Representative sides; parameters are bound by the grid.
  ConstExpr lhs;
  ConstExpr rhs;
  std::vector<ParamPoint> grid;
  /// Real parameter replaced by an override grid ("u"), empty if none.
  std::string grid_param;
  /// Cases that do not fit the lhs/rhs/grid shape.
  std::vector<IdentityCase> extra_cases;
  /// Exact identities: returns an empty string on success or a diagnostic.
  std::function<std::string()> exact;
  std::size_t exact_terms = 0;
};

struct VerificationReport {
  std::string id;
  std::string paper_ref;
  long digits = 0;
  Real abs_difference{64};
  Real certified_bound{64};
  Real threshold{64};
  std::size_t terms_used = 0;
  double elapsed_seconds = 0;
  Verdict verdict = Verdict::kFail;
  std::string diagnostic;
};

/// The built-in catalogue, in id order.
const std::vector<IdentityRecord>& builtin_registry();
const IdentityRecord* lookup(const std::string& id);

/// 10^-(digits-5).
Real pass_threshold(long digits);

/// UNCERTAIN when the bound exceeds the threshold but covers the difference,
/// PASS when both difference and bound are within the threshold, FAIL otherwise.
Verdict decide(const Real& abs_difference, const Real& certified_bound, const Real& threshold);

/// Expands a record into concrete cases. A non-empty override replaces the
/// values of the record's grid parameter; it is ignored by records without one.
std::vector<IdentityCase> expand_cases(const IdentityRecord& rec, const std::vector<std::string>& grid_override = {});

/// Evaluates one case. Evaluation failures become FAIL reports with a diagnostic.
VerificationReport verify_case(const IdentityRecord& rec, const IdentityCase& c, long digits);

/// One report per case. DomainError when digits < 10.
std::vector<VerificationReport> verify(const IdentityRecord& rec, long digits,
                                       const std::vector<std::string>& grid_override = {});

/// Runs the given records on up to `jobs` worker threads (0 picks the hardware
/// concurrency). Reports come back in id order, cases in grid order.
std::vector<VerificationReport> verify_many(const std::vector<const IdentityRecord*>& records, long digits,
                                            const std::vector<std::string>& grid_override = {},
                                            unsigned jobs = 0);

std::vector<VerificationReport> verify_all(long digits, unsigned jobs = 0);

/// "I2" < "I10".
bool natural_less(const std::string& a, const std::string& b);

}  // namespace polyapery
