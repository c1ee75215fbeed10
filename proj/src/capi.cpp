#include "gentle/gentle.h"

#include <cstdlib>
#include <cstring>
#include <functional>
#include <string>

#include "gentle/report.hpp"

struct gentle_presentation {
  gentle::Presentation pres;
};

namespace {

thread_local std::string last_error;

gentle_status status_of(gentle::ErrorKind kind) { return static_cast<gentle_status>(static_cast<int>(kind) + 1); }

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

gentle_status invalid(const char* what) {
  last_error = std::string("invalid argument: ") + what;
  return GENTLE_E_INVALID_ARGUMENT;
}

gentle_status guard(const std::function<gentle_status()>& body) {
  try {
    last_error.clear();
    return body();
  } catch (const gentle::Error& e) {
    last_error = e.what();
    return status_of(e.kind());
  } catch (const std::exception& e) {
    last_error = std::string("InternalError: ") + e.what();
    return GENTLE_E_INTERNAL;
  }
}

gentle_status produce(const gentle_presentation* pres, char** out, const std::function<std::string()>& body) {
  if (!pres) return invalid("presentation is null");
  if (!out) return invalid("output pointer is null");
  *out = nullptr;
  return guard([&] {
    *out = copy_out(body());
    return GENTLE_OK;
  });
}

gentle::ReportOptions options(unsigned flags) {
  gentle::ReportOptions o;
  o.human = (flags & GENTLE_FLAG_HUMAN) != 0;
  o.flip_signs = (flags & GENTLE_FLAG_FLIP_SIGNS) != 0;
  return o;
}

std::optional<gentle::TModule> maybe_matrix(const char* path) {
  if (!path) return std::nullopt;
  return gentle::load_tmodule(path);
}

}  // namespace

extern "C" {

const char* gentle_status_name(gentle_status status) {
  if (status == GENTLE_OK) return "Ok";
  if (status == GENTLE_E_INVALID_ARGUMENT) return "InvalidArgument";
  if (status == GENTLE_E_VERIFICATION_FAILED) return "VerificationFailed";
  const int k = static_cast<int>(status) - 1;
  if (k >= 0 && k <= static_cast<int>(gentle::ErrorKind::Internal))
    return gentle::error_kind_name(static_cast<gentle::ErrorKind>(k));
  return "UnknownStatus";
}

const char* gentle_last_error(void) { return last_error.c_str(); }

void gentle_string_free(char* s) { std::free(s); }

gentle_status gentle_presentation_load(const char* path, gentle_presentation** out) {
  if (!path || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = new gentle_presentation{gentle::load_presentation(path)};
    return GENTLE_OK;
  });
}

gentle_status gentle_presentation_parse(const char* text, gentle_presentation** out) {
  if (!text || !out) return invalid("null argument");
  *out = nullptr;
  return guard([&] {
    *out = new gentle_presentation{gentle::parse_presentation(text)};
    return GENTLE_OK;
  });
}

void gentle_presentation_free(gentle_presentation* pres) { delete pres; }

int gentle_presentation_vertex_count(const gentle_presentation* pres) { return pres ? pres->pres.num_vertices() : -1; }

int gentle_presentation_arrow_count(const gentle_presentation* pres) { return pres ? pres->pres.num_arrows() : -1; }

gentle_status gentle_validate(const gentle_presentation* pres, char** out) {
  return produce(pres, out, [&] { return gentle::report_validate(pres->pres); });
}

gentle_status gentle_signs(const gentle_presentation* pres, unsigned flags, char** out) {
  return produce(pres, out, [&] { return gentle::report_signs(pres->pres, options(flags)); });
}

gentle_status gentle_word(const gentle_presentation* pres, const char* word, unsigned flags, char** out) {
  if (!word) return invalid("word is null");
  return produce(pres, out, [&] { return gentle::report_word(pres->pres, word, options(flags)); });
}

gentle_status gentle_module(const gentle_presentation* pres, const char* word, const char* matrix_path, unsigned flags,
                            char** out) {
  if (!word) return invalid("word is null");
  return produce(pres, out,
                 [&] { return gentle::report_module(pres->pres, word, maybe_matrix(matrix_path), options(flags)); });
}

gentle_status gentle_resolve(const gentle_presentation* pres, const char* word, unsigned flags, char** out) {
  if (!word) return invalid("word is null");
  return produce(pres, out, [&] { return gentle::report_resolve(pres->pres, word, options(flags)); });
}

gentle_status gentle_complex(const gentle_presentation* pres, const char* genword, int has_window, long lo, long hi,
                             const char* matrix_path, unsigned flags, char** out) {
  if (!genword) return invalid("generalised word is null");
  std::optional<gentle::DegreeWindow> window;
  if (has_window) window = gentle::DegreeWindow{lo, hi};
  return produce(pres, out, [&] {
    return gentle::report_complex(pres->pres, genword, window, maybe_matrix(matrix_path), options(flags));
  });
}

gentle_status gentle_homword(const gentle_presentation* pres, const char* genword, unsigned flags, char** out) {
  if (!genword) return invalid("generalised word is null");
  return produce(pres, out, [&] { return gentle::report_homword(pres->pres, genword, options(flags)); });
}

gentle_status gentle_kernel(const gentle_presentation* pres, const char* genword, long degree, unsigned flags,
                            char** out) {
  if (!genword) return invalid("generalised word is null");
  return produce(pres, out, [&] { return gentle::report_kernel(pres->pres, genword, degree, options(flags)); });
}

gentle_status gentle_iso(const gentle_presentation* pres, const char* lhs, const char* rhs, unsigned flags, char** out) {
  if (!lhs || !rhs) return invalid("module spec is null");
  return produce(pres, out, [&] { return gentle::report_iso(pres->pres, lhs, rhs, options(flags)); });
}

gentle_status gentle_verify(const gentle_presentation* pres, int prime, int max_len, int max_rank, uint64_t seed,
                            unsigned flags, char** out) {
  if (max_len < 0 || max_rank < 1) return invalid("max_len must be >= 0 and max_rank >= 1");
  bool ok = true;
  gentle_status s = produce(pres, out, [&] {
    gentle::VerifyOptions v;
    v.prime = prime;
    v.max_len = max_len;
    v.max_rank = max_rank;
    v.seed = seed;
    auto outcome = gentle::report_verify(pres->pres, v, options(flags));
    ok = outcome.ok;
    return outcome.text;
  });
  if (s == GENTLE_OK && !ok) {
    last_error = "VerificationFailed: at least one oracle check failed";
    return GENTLE_E_VERIFICATION_FAILED;
  }
  return s;
}

}  // extern "C"
