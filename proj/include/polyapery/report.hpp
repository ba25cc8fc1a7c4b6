#pragma once

#include <string>

#include "polyapery/registry.hpp"

namespace polyapery {

enum class OutputFormat { kText, kMachine };

/// Plain decimal or scientific string with a few significant digits; "inf" for no bound.
std::string format_number(const Real& x, int digits = 6);

/// One JSON object per line with exactly the fields id, paper_ref, digits,
/// abs_difference, certified_bound, terms_used, elapsed_seconds, verdict.
std::string to_machine_line(const VerificationReport& r);
std::string to_text_line(const VerificationReport& r);

/// Listing lines: id, description, citation.
std::string to_machine_line(const IdentityRecord& r);
std::string to_text_line(const IdentityRecord& r);

}  // namespace polyapery
