#include "polyapery/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace polyapery {

std::string format_number(const Real& x, int digits) {
  if (!x.is_finite()) return x.sign() < 0 ? "-inf" : "inf";
  return x.to_string(digits);
}

std::string to_machine_line(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["paper_ref"] = r.paper_ref;
  j["digits"] = r.digits;
  j["abs_difference"] = format_number(r.abs_difference);
  j["certified_bound"] = format_number(r.certified_bound);
  j["terms_used"] = r.terms_used;
  j["elapsed_seconds"] = r.elapsed_seconds;
  j["verdict"] = to_string(r.verdict);
  return j.dump();
}

std::string to_text_line(const VerificationReport& r) {
  char elapsed[32];
  std::snprintf(elapsed, sizeof elapsed, "%.3fs", r.elapsed_seconds);
  std::ostringstream os;
  os << r.id << "  " << to_string(r.verdict) << "  digits=" << r.digits
     << "  abs_difference=" << format_number(r.abs_difference)
     << "  certified_bound=" << format_number(r.certified_bound) << "  terms_used=" << r.terms_used
     << "  elapsed=" << elapsed << "  ref: " << r.paper_ref;
  if (!r.diagnostic.empty()) os << "  (" << r.diagnostic << ")";
  return os.str();
}

std::string to_machine_line(const IdentityRecord& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["description"] = r.description;
  j["paper_ref"] = r.paper_ref;
  j["cases"] = expand_cases(r).size();
  return j.dump();
}

std::string to_text_line(const IdentityRecord& r) {
  return r.id + "  " + r.description + "  [" + r.paper_ref + "]";
}

}  // namespace polyapery
