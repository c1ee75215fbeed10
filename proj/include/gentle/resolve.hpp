#pragma once

#include <optional>
#include <vector>

#include "gentle/complexes.hpp"
#include "gentle/fp.hpp"
#include "gentle/genwords.hpp"
#include "gentle/modpres.hpp"
#include "gentle/words.hpp"

namespace gentle {

enum class Side { Left, Right, Both };

// Maximal extension of a finite generalised word by inverse (left) or direct (right) arrow letters.
GenWord extend_up(const Presentation& pres, const Signs& signs, const GenWord& e, Side side);
// Maximal extension of a finite word by direct letters on the left or inverse letters on the right.
Word extend_down(const Presentation& pres, const Signs& signs, const Word& a, Side side);

struct StringResolution {
  GenWord word;
  long degree = 0;
  ResolutionDecomposition decomposition;
};

StringResolution resolution_of_string(const Presentation& pres, const Signs& signs, const Word& c);
GenWord resolution_of_band(const Presentation& pres, const Signs& signs, const Word& c);
// H(C) for a string resolution (with its interval starting at 0 for Z-words) or a band resolution.
Word homology_word(const Presentation& pres, const Signs& signs, const GenWord& g);

struct ModuleSpec {
  enum class Kind { String, Band };
  Kind kind = Kind::String;
  Word word;
  std::optional<TModule> v;
};

struct IsoWitness {
  long shift = 0;
  bool inverted = false;
  std::vector<fp::Poly> invariant_factors;  // band modules: the shared invariant factors
};

// Some witness exactly when the two modules are isomorphic.
std::optional<IsoWitness> modules_isomorphic(const Presentation& pres, const Signs& signs, const ModuleSpec& lhs,
                                             const ModuleSpec& rhs);
// The common invariant factors when V and W are similar; RankMismatch for different ranks or primes.
std::optional<std::vector<fp::Poly>> similarity_certificate(const TModule& v, const TModule& w);
std::string render_poly(const fp::Poly& f);

}  // namespace gentle
