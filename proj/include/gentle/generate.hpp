#pragma once

#include <random>
#include <vector>

#include "gentle/modpres.hpp"
#include "gentle/presentation.hpp"
#include "gentle/words.hpp"

namespace gentle {

using Rng = std::mt19937_64;

struct RandomPresentationOptions {
  int vertices = 3;
  int arrows = 4;
  bool finite_dimensional = false;  // reject presentations with primitive cycles
  int attempts = 20000;
};

// A gentle presentation drawn by rejection sampling over random quivers and relation subsets.
// Vertices are named 1..n and arrows a, b, c, ...
Presentation random_presentation(Rng& rng, const RandomPresentationOptions& options);

// Every finite word of length <= max_len (trivial words with both signs), in a fixed order.
std::vector<Word> enumerate_finite_words(const Presentation& pres, int max_len);

// One periodic word per rotation class of valid cycles with primitive period <= max_period.
std::vector<Word> enumerate_cyclic_words(const Presentation& pres, int max_period);

// A string word: a random finite walk, random downward tails, a random inversion and shift.
Word random_string_word(const Presentation& pres, const Signs& signs, Rng& rng, int max_len);

// All invertible n x n matrices over F_p.
std::vector<TModule> all_tmodules(int prime, int rank);
// One T-module per similarity class for each rank 1..max_rank.
std::vector<TModule> similarity_representatives(int prime, int max_rank);

}  // namespace gentle
