#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/seq.hpp"
#include "gentle/words.hpp"

namespace gentle {

// <path> (direct) or <path>^-1 (inverse), with path nontrivial and nonzero.
struct GenLetter {
  Path path;
  bool inv = false;

  bool operator==(const GenLetter& o) const { return inv == o.inv && path.arrows == o.path.arrows; }
  bool operator!=(const GenLetter& o) const { return !(*this == o); }
  bool operator<(const GenLetter& o) const {
    if (path.arrows != o.path.arrows) return path.arrows < o.path.arrows;
    return inv < o.inv;
  }
};

inline GenLetter inverse_letter(const GenLetter& l) { return GenLetter{l.path, !l.inv}; }

using GenWord = Seq<GenLetter>;

GenLetter gen_letter(const Presentation& pres, const std::vector<int>& arrows, bool inv);
int gen_head(const Presentation& pres, const GenLetter& l);
int gen_tail(const Presentation& pres, const GenLetter& l);
// +1 for inverse and -1 for direct generalised letters.
int gen_degree(const GenLetter& l);
int gen_letter_sign(const Presentation& pres, const Signs& signs, const GenLetter& l);
std::string render_gen_letter(const Presentation& pres, const GenLetter& l, bool human = false);

// Validates adjacency rules, nonzero paths and uniform tails, then normalizes. Periodic words
// whose cycle has nonzero total degree raise WeakCyclic.
GenWord check_genword(const Presentation& pres, GenWord raw);
std::optional<std::string> genword_defect(const Presentation& pres, const GenWord& g);
GenWord parse_genword(const Presentation& pres, const std::string& text);
std::string render_genword(const Presentation& pres, const GenWord& g, bool human = false);

int gen_vertex(const Presentation& pres, const GenWord& g, long i);
int gen_position_sign(const Presentation& pres, const Signs& signs, const GenWord& g, long i);
int gen_sign(const Presentation& pres, const Signs& signs, const GenWord& g);
int gen_inverse_sign(const Presentation& pres, const Signs& signs, const GenWord& g);
bool gen_composable(const Presentation& pres, const Signs& signs, const GenWord& c, const GenWord& d);

GenWord gen_subword(const Presentation& pres, const Signs& signs, const GenWord& g, long a, long b);
GenWord gen_left_part(const Presentation& pres, const Signs& signs, const GenWord& g, long i);
GenWord gen_right_part(const Presentation& pres, const Signs& signs, const GenWord& g, long i);

// The homological degree H(i), anchored at H(0) = 0.
long hdeg(const GenWord& g, long i);
// Indices i with H(i) = n inside [lo, hi].
std::vector<long> hdeg_preimage(const GenWord& g, long n, long lo, long hi);
// Total degree of one period of a periodic word.
long cycle_degree(const GenWord& g);

bool is_direct_genword(const GenWord& g);
bool is_inverse_genword(const GenWord& g);
// A finite run of single letters <m1><e1>^-1 ... <mn><en>^-1.
bool is_alternating_letters(const std::vector<GenLetter>& letters);

struct ResolutionDecomposition {
  GenWord B, A, D;
  long lo = 0;  // iota(-)
  long hi = 0;  // iota(+)
  long degree = 0;
};

// The decomposition C = B^-1 (A D) when C is a string resolution.
std::optional<ResolutionDecomposition> is_string_resolution(const Presentation& pres, const Signs& signs,
                                                            const GenWord& g, std::string* reason = nullptr);
// The alternating cycle when C is a band resolution.
std::optional<std::vector<GenLetter>> is_band_resolution(const GenWord& g);

// Left (iota(-)) and right (iota(+)) anchors of the inverse prefix and direct suffix, if defined.
std::optional<long> iota_minus(const GenWord& g);
std::optional<long> iota_plus(const GenWord& g);

}  // namespace gentle
