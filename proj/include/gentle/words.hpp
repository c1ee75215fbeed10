#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/presentation.hpp"
#include "gentle/seq.hpp"

namespace gentle {

struct Letter {
  int arrow = -1;
  bool inv = false;

  bool operator==(const Letter& o) const { return arrow == o.arrow && inv == o.inv; }
  bool operator!=(const Letter& o) const { return !(*this == o); }
  bool operator<(const Letter& o) const { return arrow != o.arrow ? arrow < o.arrow : inv < o.inv; }
};

inline Letter inverse_letter(const Letter& l) { return Letter{l.arrow, !l.inv}; }

using Word = Seq<Letter>;

int letter_head(const Presentation& pres, const Letter& l);
int letter_tail(const Presentation& pres, const Letter& l);
std::string render_letter(const Presentation& pres, const Letter& l);

class Signs {
 public:
  Signs() = default;
  explicit Signs(std::vector<int> values) : values_(std::move(values)) {}
  int of(const Letter& l) const { return values_.at(static_cast<std::size_t>(l.arrow) * 2 + (l.inv ? 1 : 0)); }
  const std::vector<int>& values() const { return values_; }

 private:
  std::vector<int> values_;
};

// Deterministic sign function. Each head-vertex group is solved by exhaustive search for the
// lexicographically least vector (letters ordered direct before inverse, then by arrow name;
// +1 preferred to -1). With flip set, -1 is preferred, negating every sign.
Signs assign_signs(const Presentation& pres, bool flip = false);
bool signs_valid(const Presentation& pres, const Signs& signs);
std::string render_signs(const Presentation& pres, const Signs& signs);

// Parses the word grammar and validates it; the result is in normal form.
Word parse_word(const Presentation& pres, const std::string& text);
// Validates a raw word (adjacency of every pair, uniform tails) and normalizes it.
Word check_word(const Presentation& pres, Word raw);
std::optional<std::string> word_defect(const Presentation& pres, const Word& w);
std::string render_word(const Presentation& pres, const Word& w);
// Letter a may be followed by letter b inside a word.
bool letters_adjacent(const Presentation& pres, const Letter& a, const Letter& b);

// v_C(i) and the sign of C_{>i} at position i.
int word_vertex(const Presentation& pres, const Word& w, long i);
int position_sign(const Presentation& pres, const Signs& signs, const Word& w, long i);
// s(C) for words bounded below and s(C^-1) for words bounded above.
int word_sign(const Presentation& pres, const Signs& signs, const Word& w);
int word_inverse_sign(const Presentation& pres, const Signs& signs, const Word& w);

bool composable(const Presentation& pres, const Signs& signs, const Word& c, const Word& d);

// The letters a+1..b as a finite word; a trivial result carries the sign at position a.
Word subword(const Presentation& pres, const Signs& signs, const Word& w, long a, long b);
// C_{<=i} (finite or -N) and C_{>i} (finite or N).
Word left_part(const Presentation& pres, const Signs& signs, const Word& w, long i);
Word right_part(const Presentation& pres, const Signs& signs, const Word& w, long i);

bool is_peak(const Word& w, long i);

struct PeakReport {
  enum class Kind { Finite, Periodic };
  Kind kind = Kind::Finite;
  std::vector<long> peaks;  // all peaks, or the peaks in [0, period) for periodic words
  long period = 0;
  bool peak_finite = true;
};
PeakReport peaks(const Word& w);

struct AlternatingPair {
  Path gamma;
  Path sigma;
};
// Splits a finite word gamma_1^-1 sigma_1 ... gamma_n^-1 sigma_n into its pairs.
std::optional<std::vector<AlternatingPair>> alternating_pairs(const Presentation& pres,
                                                              const std::vector<Letter>& letters);
bool is_inverse_word(const Word& w);
bool is_direct_word(const Word& w);

// The finite word of a path (direct) or of its inverse.
std::vector<Letter> path_letters(const Path& p);
std::vector<Letter> inverse_path_letters(const Path& p);

struct StringDecomposition {
  Word B, A, D;
  std::vector<long> peaks;
  std::vector<AlternatingPair> pairs;
};

struct Classification {
  enum class Kind { StringWord, BandWord, EventuallyUpward, PrimitivePeriodic, NotClassifiable };
  Kind kind = Kind::NotClassifiable;
  long shift = 0;
  Word normalized;  // C[shift]
  StringDecomposition decomposition;  // string words
  std::vector<long> band_shifts;      // every n in [0, p) with C[n] a band word
};
const char* classification_name(Classification::Kind k);

Classification classify_word(const Presentation& pres, const Signs& signs, const Word& w);
StringDecomposition string_decomposition(const Presentation& pres, const Signs& signs, const Word& w);
bool is_band_word_at_zero(const Word& w);

struct EquivalenceWitness {
  long shift = 0;
  bool inverted = false;
  bool operator==(const EquivalenceWitness& o) const { return shift == o.shift && inverted == o.inverted; }
};
std::optional<EquivalenceWitness> words_equivalent(const Word& c, const Word& e);

// Letter order by arrow name, direct before inverse.
bool letter_name_less(const Presentation& pres, const Letter& a, const Letter& b);

}  // namespace gentle

namespace gentle {

// The arrow w with w C a word (C bounded below), resp. the arrow z with C z^-1 a word (C bounded
// above). At most one exists in a gentle presentation; Internal is raised otherwise.
std::optional<int> left_arrow_extension(const Presentation& pres, const Signs& signs, const Word& w);
std::optional<int> right_arrow_extension(const Presentation& pres, const Signs& signs, const Word& w);

}  // namespace gentle
