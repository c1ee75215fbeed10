#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gentle/complexes.hpp"
#include "gentle/presentation.hpp"
#include "gentle/resolve.hpp"

namespace gentle {

struct ReportOptions {
  bool human = false;       // angle brackets and infinity signs instead of the ASCII grammar
  bool flip_signs = false;  // the global initial sign is -1
};

std::string report_validate(const Presentation& pres);
std::string report_signs(const Presentation& pres, const ReportOptions& opts);
std::string report_word(const Presentation& pres, const std::string& word, const ReportOptions& opts);
std::string report_module(const Presentation& pres, const std::string& word, const std::optional<TModule>& v,
                          const ReportOptions& opts);
std::string report_resolve(const Presentation& pres, const std::string& word, const ReportOptions& opts);
std::string report_complex(const Presentation& pres, const std::string& genword, const std::optional<DegreeWindow>& window,
                           const std::optional<TModule>& v, const ReportOptions& opts);
std::string report_homword(const Presentation& pres, const std::string& genword, const ReportOptions& opts);
std::string report_kernel(const Presentation& pres, const std::string& genword, long degree, const ReportOptions& opts);

// `string "<word>"` or `band "<word>" <matrix file>`.
ModuleSpec parse_module_spec(const Presentation& pres, const std::string& text);
std::string report_iso(const Presentation& pres, const std::string& lhs, const std::string& rhs, const ReportOptions& opts);

struct VerifyOptions {
  int prime = 2;
  int max_len = 6;
  std::uint64_t seed = 1;
  int max_rank = 2;
};

struct VerifyOutcome {
  std::string text;
  bool ok = true;
};

// Oracle suite over a finite-dimensional presentation: every string word up to max_len and every
// band word of period up to max_len with one T-module per similarity class up to max_rank plus a
// seeded random T-module of rank max_rank + 1.
VerifyOutcome report_verify(const Presentation& pres, const VerifyOptions& vopts, const ReportOptions& opts);

}  // namespace gentle
