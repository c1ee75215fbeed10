#include "gentle/generate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gentle/resolve.hpp"

namespace gentle {

Presentation random_presentation(Rng& rng, const RandomPresentationOptions& options) {
  if (options.vertices < 1 || options.arrows < 1 || options.arrows > 26)
    fail(ErrorKind::Parse, "random presentations need at least one vertex and 1..26 arrows");
  std::uniform_int_distribution<int> vertex(0, options.vertices - 1);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < options.attempts; ++attempt) {
    Quiver q;
    for (int v = 0; v < options.vertices; ++v) q.vertices.push_back(std::to_string(v + 1));
    std::vector<int> out_deg(static_cast<std::size_t>(options.vertices), 0), in_deg = out_deg;
    for (int a = 0; a < options.arrows; ++a) {
      const int t = vertex(rng), h = vertex(rng);
      ++out_deg[static_cast<std::size_t>(t)];
      ++in_deg[static_cast<std::size_t>(h)];
      q.arrows.push_back({std::string(1, static_cast<char>('a' + a)), q.vertices[static_cast<std::size_t>(t)],
                          q.vertices[static_cast<std::size_t>(h)]});
    }
    if (*std::max_element(out_deg.begin(), out_deg.end()) > 2 || *std::max_element(in_deg.begin(), in_deg.end()) > 2)
      continue;
    std::vector<std::pair<std::string, std::string>> rels;
    for (const auto& x : q.arrows)
      for (const auto& y : q.arrows)
        if (x.tail == y.head && coin(rng)) rels.push_back({x.name, y.name});
    auto [pres, violations] = check_presentation(q, rels);
    if (!pres) continue;
    if (options.finite_dimensional && !primitive_cycles(*pres).empty()) continue;
    return *pres;
  }
  fail(ErrorKind::Internal, "no gentle presentation found within the attempt budget");
}

namespace {

std::vector<Letter> all_letters(const Presentation& pres) {
  std::vector<Letter> out;
  for (int a : pres.arrows_by_name()) {
    out.push_back({a, false});
    out.push_back({a, true});
  }
  return out;
}

void extend_walks(const Presentation& pres, const std::vector<Letter>& letters, std::vector<Letter>& walk,
                  int max_len, std::vector<Word>& out) {
  out.push_back(make_finite(walk));
  if (static_cast<int>(walk.size()) >= max_len) return;
  for (const Letter& l : letters) {
    if (!letters_adjacent(pres, walk.back(), l)) continue;
    walk.push_back(l);
    extend_walks(pres, letters, walk, max_len, out);
    walk.pop_back();
  }
}

void extend_cycles(const Presentation& pres, const std::vector<Letter>& letters, std::vector<Letter>& walk,
                   int max_len, std::set<std::vector<Letter>>& seen, std::vector<Word>& out) {
  if (letters_adjacent(pres, walk.back(), walk.front())) {
    std::vector<Letter> root = primitive_root(walk);
    if (root.size() == walk.size() && least_rotation(root) == 0 && seen.insert(root).second)
      out.push_back(make_periodic(root));
  }
  if (static_cast<int>(walk.size()) >= max_len) return;
  for (const Letter& l : letters) {
    if (l < walk.front()) continue;  // the least rotation starts with its least letter
    if (!letters_adjacent(pres, walk.back(), l)) continue;
    walk.push_back(l);
    extend_cycles(pres, letters, walk, max_len, seen, out);
    walk.pop_back();
  }
}

}  // namespace

std::vector<Word> enumerate_finite_words(const Presentation& pres, int max_len) {
  std::vector<Word> out;
  for (int v = 0; v < pres.num_vertices(); ++v) {
    out.push_back(make_trivial<Letter>(v, 1));
    out.push_back(make_trivial<Letter>(v, -1));
  }
  if (max_len < 1) return out;
  const auto letters = all_letters(pres);
  for (const Letter& l : letters) {
    std::vector<Letter> walk{l};
    extend_walks(pres, letters, walk, max_len, out);
  }
  return out;
}

std::vector<Word> enumerate_cyclic_words(const Presentation& pres, int max_period) {
  std::vector<Word> out;
  std::set<std::vector<Letter>> seen;
  const auto letters = all_letters(pres);
  for (const Letter& l : letters) {
    std::vector<Letter> walk{l};
    extend_cycles(pres, letters, walk, max_period, seen, out);
  }
  return out;
}

Word random_string_word(const Presentation& pres, const Signs& signs, Rng& rng, int max_len) {
  const auto letters = all_letters(pres);
  std::uniform_int_distribution<int> len_dist(0, std::max(0, max_len));
  std::bernoulli_distribution coin(0.5);
  std::uniform_int_distribution<long> shift_dist(-4, 4);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const int len = len_dist(rng);
    Word w;
    if (len == 0) {
      std::uniform_int_distribution<int> vd(0, pres.num_vertices() - 1);
      w = make_trivial<Letter>(vd(rng), coin(rng) ? 1 : -1);
    } else {
      std::uniform_int_distribution<std::size_t> ld(0, letters.size() - 1);
      std::vector<Letter> walk{letters[ld(rng)]};
      while (static_cast<int>(walk.size()) < len) {
        std::vector<Letter> options;
        for (const Letter& l : letters)
          if (letters_adjacent(pres, walk.back(), l)) options.push_back(l);
        if (options.empty()) break;
        std::uniform_int_distribution<std::size_t> od(0, options.size() - 1);
        walk.push_back(options[od(rng)]);
      }
      w = make_finite(walk);
    }
    const bool left = coin(rng), right = coin(rng);
    if (left && right) w = extend_down(pres, signs, w, Side::Both);
    else if (left) w = extend_down(pres, signs, w, Side::Left);
    else if (right) w = extend_down(pres, signs, w, Side::Right);
    if (coin(rng)) w = invert(w);
    w = shift(w, shift_dist(rng));
    if (classify_word(pres, signs, w).kind == Classification::Kind::StringWord) return w;
  }
  fail(ErrorKind::Internal, "no string word sampled within the attempt budget");
}

std::vector<TModule> all_tmodules(int prime, int rank) {
  std::vector<TModule> out;
  const std::size_t n = static_cast<std::size_t>(rank);
  const std::size_t cells = n * n;
  std::vector<int> digits(cells, 0);
  while (true) {
    fp::Mat m = fp::zeros(n, n);
    for (std::size_t k = 0; k < cells; ++k) m[k / n][k % n] = digits[k];
    if (auto inv = fp::inverse(m, prime)) out.push_back(TModule{prime, rank, m, *inv});
    std::size_t k = 0;
    while (k < cells && ++digits[k] == prime) digits[k++] = 0;
    if (k == cells) break;
  }
  return out;
}

std::vector<TModule> similarity_representatives(int prime, int max_rank) {
  std::vector<TModule> out;
  for (int r = 1; r <= max_rank; ++r) {
    std::map<std::vector<fp::Poly>, TModule> classes;
    for (const TModule& v : all_tmodules(prime, r)) classes.emplace(fp::invariant_factors(v.plus, prime), v);
    for (auto& [key, v] : classes) out.push_back(v);
  }
  return out;
}

}  // namespace gentle
