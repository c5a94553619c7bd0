#ifndef RTF_REPORT_HPP
#define RTF_REPORT_HPP

// Report serialization.  The JSON writer emits a fixed field order and
// shortest-round-trip numbers, so byte-identical inputs give
// byte-identical files.  CSV flattens complex values into paired columns.

#include <string>
#include <vector>

#include "rtf/verify.hpp"

namespace rtf {

std::string to_json(const VerificationReport& rep);
std::string to_json(const std::vector<VerificationReport>& reps);

std::string csv_header();
std::string to_csv_row(const VerificationReport& rep);
std::string to_csv(const std::vector<VerificationReport>& reps);

} // namespace rtf

#endif
