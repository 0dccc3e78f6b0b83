#ifndef SECPROJ_REPORTS_HPP
#define SECPROJ_REPORTS_HPP

#include <string>

#include "secproj/betti.hpp"
#include "secproj/projsec.hpp"
#include "secproj/stratify.hpp"

namespace secproj {

// JSON serializations (stable field order; no timestamps, so identical runs
// produce identical bytes).
std::string verification_to_json(const VerificationReport& rep, bool emit_ideals);
std::string stratification_to_json(const StratificationReport& rep);
std::string betti_to_json(const BettiTable& t);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace secproj

#endif
