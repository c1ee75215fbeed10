// Command-line front end over the C interface.
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "gentle/gentle.h"

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

struct Window {
  long lo = 0;
  long hi = 0;
};

std::optional<Window> parse_window(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    Window w;
    const std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    w.lo = std::stol(a, &used);
    if (used != a.size()) return std::nullopt;
    w.hi = std::stol(b, &used);
    if (used != b.size() || w.lo > w.hi) return std::nullopt;
    return w;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Word calculus for gentle presentations: string and band words, modules, complexes and resolutions"};
  app.require_subcommand(1);
  std::string format = "human";
  bool flip = false;
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "line-exact"}));
  app.add_flag("--flip-signs", flip, "Use -1 as the global initial sign");
  app.add_option("--seed", seed, "Seed for randomized test generation");

  std::string pres_path, word, genword, lhs, rhs, matrix, window_text;
  long degree = 0;
  int prime = 2, max_len = 6, max_rank = 2;

  auto* validate = app.add_subcommand("validate", "Check the gentle axioms");
  validate->add_option("pres", pres_path, "Presentation file")->required();
  auto* signs = app.add_subcommand("signs", "Print the sign function");
  signs->add_option("pres", pres_path, "Presentation file")->required();
  auto* wordc = app.add_subcommand("word", "Check, classify and decompose a word");
  wordc->add_option("pres", pres_path, "Presentation file")->required();
  wordc->add_option("word", word, "Word")->required();
  auto* module = app.add_subcommand("module", "Presentation of the string or band module of a word");
  module->add_option("pres", pres_path, "Presentation file")->required();
  module->add_option("word", word, "Word")->required();
  module->add_option("--matrix", matrix, "T-module matrix file for band words")->check(CLI::ExistingFile);
  auto* resolve = app.add_subcommand("resolve", "Resolution word R_C and its degree");
  resolve->add_option("pres", pres_path, "Presentation file")->required();
  resolve->add_option("word", word, "Word")->required();
  auto* complex = app.add_subcommand("complex", "Dump the complex of a generalised word");
  complex->add_option("pres", pres_path, "Presentation file")->required();
  complex->add_option("genword", genword, "Generalised word")->required();
  complex->add_option("--window", window_text, "Degree window a:b");
  complex->add_option("--matrix", matrix, "T-module matrix file for periodic words")->check(CLI::ExistingFile);
  auto* homword = app.add_subcommand("homword", "Homology word H of a resolution word");
  homword->add_option("pres", pres_path, "Presentation file")->required();
  homword->add_option("genword", genword, "Generalised word")->required();
  auto* kernel = app.add_subcommand("kernel", "Kernel generators in one degree");
  kernel->add_option("pres", pres_path, "Presentation file")->required();
  kernel->add_option("genword", genword, "Generalised word")->required();
  kernel->add_option("--deg", degree, "Degree")->required();
  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two string or band modules");
  iso->add_option("pres", pres_path, "Presentation file")->required();
  iso->add_option("lhs", lhs, "Module spec: string \"<word>\" or band \"<word>\" <matrix file>")->required();
  iso->add_option("rhs", rhs, "Module spec")->required();
  auto* verify = app.add_subcommand("verify", "Run the finite-field oracle suite");
  verify->add_option("pres", pres_path, "Presentation file")->required();
  verify->add_option("--prime", prime, "Field characteristic")->required();
  verify->add_option("--max-len", max_len, "Longest word length")->check(CLI::Range(0, 12));
  verify->add_option("--max-rank", max_rank, "Largest T-module rank enumerated by similarity class")
      ->check(CLI::Range(1, 3));

  try {
    app.parse(argc, argv);
    if (verify->parsed() && !is_prime(prime)) throw CLI::ValidationError("--prime", std::to_string(prime) + " is not a prime");
    if (complex->parsed() && !window_text.empty() && !parse_window(window_text))
      throw CLI::ValidationError("--window", "expected a:b with integers a <= b");
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  unsigned flags = 0;
  if (format == "human") flags |= GENTLE_FLAG_HUMAN;
  if (flip) flags |= GENTLE_FLAG_FLIP_SIGNS;

  gentle_presentation* pres = nullptr;
  gentle_status s = gentle_presentation_load(pres_path.c_str(), &pres);
  if (s != GENTLE_OK) {
    std::cerr << "error: " << gentle_last_error() << "\n";
    return 1;
  }
  const char* mat = matrix.empty() ? nullptr : matrix.c_str();
  char* out = nullptr;
  if (validate->parsed()) {
    s = gentle_validate(pres, &out);
  } else if (signs->parsed()) {
    s = gentle_signs(pres, flags, &out);
  } else if (wordc->parsed()) {
    s = gentle_word(pres, word.c_str(), flags, &out);
  } else if (module->parsed()) {
    s = gentle_module(pres, word.c_str(), mat, flags, &out);
  } else if (resolve->parsed()) {
    s = gentle_resolve(pres, word.c_str(), flags, &out);
  } else if (complex->parsed()) {
    auto w = window_text.empty() ? std::nullopt : parse_window(window_text);
    s = gentle_complex(pres, genword.c_str(), w ? 1 : 0, w ? w->lo : 0, w ? w->hi : 0, mat, flags, &out);
  } else if (homword->parsed()) {
    s = gentle_homword(pres, genword.c_str(), flags, &out);
  } else if (kernel->parsed()) {
    s = gentle_kernel(pres, genword.c_str(), degree, flags, &out);
  } else if (iso->parsed()) {
    s = gentle_iso(pres, lhs.c_str(), rhs.c_str(), flags, &out);
  } else if (verify->parsed()) {
    s = gentle_verify(pres, prime, max_len, max_rank, seed, flags, &out);
  }
  if (out) std::fputs(out, stdout);
  gentle_string_free(out);
  gentle_presentation_free(pres);
  if (s != GENTLE_OK) {
    std::cerr << "error: " << gentle_last_error() << "\n";
    return s == GENTLE_E_INVALID_ARGUMENT ? 2 : 1;
  }
  return 0;
}
