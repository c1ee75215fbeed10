#pragma once

#include <string>
#include <vector>

#include "gentle/fp.hpp"
#include "gentle/presentation.hpp"
#include "gentle/words.hpp"

namespace gentle {

// An invertible T-action on F_p^n: T e_w = sum_t plus[t][w] e_t, and minus is the inverse matrix.
struct TModule {
  int prime = 2;
  int rank = 1;
  fp::Mat plus;
  fp::Mat minus;

  bool operator==(const TModule& o) const { return prime == o.prime && plus == o.plus; }
};

TModule make_tmodule(int prime, const fp::Mat& matrix);
TModule identity_tmodule(int prime, int rank);
// The T-module with T and T^-1 exchanged.
TModule res(const TModule& v);
// `p <prime> n <rank>` followed by n rows of n integers.
TModule parse_tmodule(const std::string& text);
TModule load_tmodule(const std::string& file_path);
std::string render_tmodule(const TModule& v);

struct ModuleGenerator {
  std::string label;
  int vertex = -1;
};

struct ModuleTerm {
  long coeff = 1;
  Path path;
  int generator = 0;
};

struct ModuleRelation {
  std::vector<ModuleTerm> terms;
};

// Generators and relations; prime is 0 for integer coefficients.
struct ModulePresentation {
  std::vector<ModuleGenerator> generators;
  std::vector<ModuleRelation> relations;
  int prime = 0;
};

// M(C) for a string word C; the word is shift-normalized by classify_word first.
ModulePresentation string_module(const Presentation& pres, const Signs& signs, const Word& c);
// M(C, V) for a band word C; the word is rotated so that a peak sits at 0.
ModulePresentation band_module(const Presentation& pres, const Signs& signs, const Word& c, const TModule& v);

// `gen <label> @ <vertex>` and `rel <c>*<path>*<gen> + ...` lines.
std::string render_module(const Presentation& pres, const ModulePresentation& m);
// A readable form of one relation such as `y^3 g0 - x^2 g1`.
std::string render_relation(const Presentation& pres, const ModulePresentation& m, const ModuleRelation& r);

}  // namespace gentle
