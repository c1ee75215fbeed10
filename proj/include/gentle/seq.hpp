#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "gentle/error.hpp"

namespace gentle {

// Index shapes for words and generalised words.
//   Finite:   letters 1..m, positions {0..m}; an empty core is a trivial word 1_{vertex,delta}.
//   Right:    letters 1,2,... (core, then the right tail repeated), positions N.
//   Left:     letters ...,-1,0 (left tail repeated, then core ending at 0), positions -N.
//   Bi:       letters over Z; core occupies letters start+1..start+|core|.
//   Periodic: letter i is core[(i-1) mod |core|]; the core is primitive.
enum class Shape { Finite, Right, Left, Bi, Periodic };

inline long floor_mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

template <class L>
std::vector<L> rotate_left(const std::vector<L>& v, long n) {
  std::vector<L> out(v.size());
  if (v.empty()) return out;
  long k = floor_mod(n, static_cast<long>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[(i + k) % v.size()];
  return out;
}

template <class L>
std::vector<L> primitive_root(const std::vector<L>& v) {
  const std::size_t n = v.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (n % k) continue;
    bool ok = true;
    for (std::size_t i = k; i < n && ok; ++i) ok = v[i] == v[i - k];
    if (ok) return std::vector<L>(v.begin(), v.begin() + static_cast<long>(k));
  }
  return v;
}

template <class L>
std::vector<L> inverse_letters(const std::vector<L>& v) {
  std::vector<L> out;
  out.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

template <class L>
struct Seq {
  Shape shape = Shape::Finite;
  std::vector<L> left, core, right;
  long start = 0;
  int vertex = -1;
  int delta = 1;

  bool trivial() const { return shape == Shape::Finite && core.empty(); }
  bool bounded_below() const { return shape == Shape::Finite || shape == Shape::Right; }
  bool bounded_above() const { return shape == Shape::Finite || shape == Shape::Left; }
  bool is_z() const { return shape == Shape::Bi || shape == Shape::Periodic; }
  long length() const { return static_cast<long>(core.size()); }
  long period() const { return static_cast<long>(core.size()); }

  // Highest position of a word bounded above.
  long hi() const { return shape == Shape::Finite ? length() : 0; }

  bool has_position(long i) const {
    switch (shape) {
      case Shape::Finite: return i >= 0 && i <= length();
      case Shape::Right: return i >= 0;
      case Shape::Left: return i <= 0;
      default: return true;
    }
  }

  bool has_letter(long i) const {
    switch (shape) {
      case Shape::Finite: return i >= 1 && i <= length();
      case Shape::Right: return i >= 1;
      case Shape::Left: return i <= 0;
      default: return true;
    }
  }

  const L& letter(long i) const {
    if (!has_letter(i)) fail(ErrorKind::IndexOutOfShape, "letter index " + std::to_string(i) + " outside the word");
    const long c = length();
    switch (shape) {
      case Shape::Finite: return core[i - 1];
      case Shape::Right: {
        long j = i - 1;
        if (j < c) return core[j];
        return right[floor_mod(j - c, static_cast<long>(right.size()))];
      }
      case Shape::Left: {
        long j = i + c;
        if (j >= 1) return core[j - 1];
        return left[floor_mod(j - 1, static_cast<long>(left.size()))];
      }
      case Shape::Bi: {
        long j = i - start;
        if (j >= 1 && j <= c) return core[j - 1];
        if (j <= 0) return left[floor_mod(j - 1, static_cast<long>(left.size()))];
        return right[floor_mod(j - c - 1, static_cast<long>(right.size()))];
      }
      case Shape::Periodic: return core[floor_mod(i - 1, c)];
    }
    return core[0];
  }

  bool operator==(const Seq& o) const {
    if (shape != o.shape) return false;
    if (trivial()) return o.trivial() && vertex == o.vertex && delta == o.delta;
    return left == o.left && core == o.core && right == o.right && start == o.start;
  }
  bool operator!=(const Seq& o) const { return !(*this == o); }
};

// Canonical form: primitive tails, cores absorbed into tails, bi-infinite words whose tails meet
// become periodic.
template <class L>
void normalize(Seq<L>& w) {
  if (!w.trivial()) {
    w.vertex = -1;
    w.delta = 1;
  }
  if (w.shape != Shape::Bi) w.start = 0;
  if (!w.left.empty()) w.left = primitive_root(w.left);
  if (!w.right.empty()) w.right = primitive_root(w.right);
  switch (w.shape) {
    case Shape::Finite:
      w.left.clear();
      w.right.clear();
      return;
    case Shape::Periodic:
      w.left.clear();
      w.right.clear();
      w.core = primitive_root(w.core);
      return;
    case Shape::Right:
      w.left.clear();
      while (!w.core.empty() && w.core.back() == w.right.back()) {
        w.right = rotate_left(w.right, -1);
        w.core.pop_back();
      }
      return;
    case Shape::Left:
      w.right.clear();
      while (!w.core.empty() && w.core.front() == w.left.front()) {
        w.left = rotate_left(w.left, 1);
        w.core.erase(w.core.begin());
      }
      return;
    case Shape::Bi: {
      while (!w.core.empty() && w.core.back() == w.right.back()) {
        w.right = rotate_left(w.right, -1);
        w.core.pop_back();
      }
      while (!w.core.empty() && w.core.front() == w.left.front()) {
        w.left = rotate_left(w.left, 1);
        w.core.erase(w.core.begin());
        ++w.start;
      }
      if (!w.core.empty()) return;
      const std::size_t bound = w.left.size() + w.right.size() + 1;
      for (std::size_t step = 0; step <= bound; ++step) {
        if (w.left == w.right) {
          std::vector<L> cycle = rotate_left(w.right, -w.start);
          w.shape = Shape::Periodic;
          w.core = primitive_root(cycle);
          w.left.clear();
          w.right.clear();
          w.start = 0;
          return;
        }
        if (!(w.right.front() == w.left.front())) return;
        w.left = rotate_left(w.left, 1);
        w.right = rotate_left(w.right, 1);
        ++w.start;
      }
      return;
    }
  }
}

template <class L>
Seq<L> make_finite(std::vector<L> letters) {
  Seq<L> w;
  w.shape = Shape::Finite;
  w.core = std::move(letters);
  return w;
}

template <class L>
Seq<L> make_trivial(int vertex, int delta) {
  Seq<L> w;
  w.shape = Shape::Finite;
  w.vertex = vertex;
  w.delta = delta;
  return w;
}

template <class L>
Seq<L> make_periodic(std::vector<L> cycle) {
  Seq<L> w;
  w.shape = Shape::Periodic;
  w.core = std::move(cycle);
  normalize(w);
  return w;
}

template <class L>
Seq<L> invert(const Seq<L>& w) {
  Seq<L> r;
  switch (w.shape) {
    case Shape::Finite:
      r = w;
      r.core = inverse_letters(w.core);
      if (w.trivial()) r.delta = -w.delta;
      return r;
    case Shape::Right:
      r.shape = Shape::Left;
      r.core = inverse_letters(w.core);
      r.left = inverse_letters(w.right);
      break;
    case Shape::Left:
      r.shape = Shape::Right;
      r.core = inverse_letters(w.core);
      r.right = inverse_letters(w.left);
      break;
    case Shape::Bi:
      r.shape = Shape::Bi;
      r.left = inverse_letters(w.right);
      r.core = inverse_letters(w.core);
      r.right = inverse_letters(w.left);
      r.start = -w.start - w.length();
      break;
    case Shape::Periodic:
      r.shape = Shape::Periodic;
      r.core = inverse_letters(w.core);
      break;
  }
  normalize(r);
  return r;
}

// C[n]: letters C[n]_i = C_{i+n}; the identity for shapes other than Z.
template <class L>
Seq<L> shift(const Seq<L>& w, long n) {
  Seq<L> r = w;
  if (w.shape == Shape::Bi) {
    r.start = w.start - n;
  } else if (w.shape == Shape::Periodic) {
    r.core = rotate_left(w.core, n);
  }
  return r;
}

// Concatenation of a finite-or-(-N) word with a finite-or-N word. For (-N)(N) the junction is
// position 0; a (-N) part keeps its right-end anchoring; a finite left factor starts at 1.
template <class L>
Seq<L> concat(const Seq<L>& a, const Seq<L>& b) {
  if (!a.bounded_above() || !b.bounded_below())
    fail(ErrorKind::ShapeMismatch, "concatenation needs a left factor bounded above and a right factor bounded below");
  if (a.trivial()) return b;
  if (b.trivial()) return a;
  Seq<L> r;
  r.core = a.core;
  r.core.insert(r.core.end(), b.core.begin(), b.core.end());
  if (a.shape == Shape::Finite && b.shape == Shape::Finite) {
    r.shape = Shape::Finite;
  } else if (a.shape == Shape::Finite) {
    r.shape = Shape::Right;
    r.right = b.right;
  } else if (b.shape == Shape::Finite) {
    r.shape = Shape::Left;
    r.left = a.left;
  } else {
    r.shape = Shape::Bi;
    r.left = a.left;
    r.right = b.right;
    r.start = -a.length();
  }
  normalize(r);
  return r;
}

// A finite run of letters sampling every adjacent pair of the word, with the letter index of
// each sampled entry.
template <class L>
void adjacency_window(const Seq<L>& w, std::vector<L>& letters, std::vector<long>& index) {
  letters.clear();
  index.clear();
  auto push_range = [&](long from, long to) {
    for (long i = from; i <= to; ++i) {
      letters.push_back(w.letter(i));
      index.push_back(i);
    }
  };
  const long c = w.length();
  switch (w.shape) {
    case Shape::Finite: push_range(1, c); break;
    case Shape::Right: push_range(1, c + 2 * static_cast<long>(w.right.size())); break;
    case Shape::Left: push_range(1 - c - 2 * static_cast<long>(w.left.size()), 0); break;
    case Shape::Bi:
      push_range(w.start + 1 - 2 * static_cast<long>(w.left.size()),
                 w.start + c + 2 * static_cast<long>(w.right.size()));
      break;
    case Shape::Periodic: push_range(1, 2 * c); break;
  }
}

// The lexicographically least rotation offset of a cycle.
template <class L>
long least_rotation(const std::vector<L>& cycle) {
  long best = 0;
  const long n = static_cast<long>(cycle.size());
  for (long k = 1; k < n; ++k) {
    for (long i = 0; i < n; ++i) {
      const L& x = cycle[(k + i) % n];
      const L& y = cycle[(best + i) % n];
      if (x == y) continue;
      if (x < y) best = k;
      break;
    }
  }
  return best;
}

// Some n with shift(a, n) == b (the least n >= 0 for periodic words).
template <class L>
std::optional<long> shift_between(const Seq<L>& a, const Seq<L>& b) {
  if (a.shape != b.shape) return std::nullopt;
  if (a.shape == Shape::Periodic) {
    if (a.core.size() != b.core.size()) return std::nullopt;
    for (long n = 0; n < a.period(); ++n)
      if (rotate_left(a.core, n) == b.core) return n;
    return std::nullopt;
  }
  if (a.shape == Shape::Bi) {
    if (a.left != b.left || a.core != b.core || a.right != b.right) return std::nullopt;
    return a.start - b.start;
  }
  if (a == b) return 0;
  return std::nullopt;
}

// Letters <= i of a word that is not bounded below, as a (-N)-word with letter i at index 0.
template <class L>
Seq<L> infinite_left_part(const Seq<L>& w, long i) {
  Seq<L> r;
  r.shape = Shape::Left;
  long tail_end;  // highest letter index inside the left tail region
  if (w.shape == Shape::Left) tail_end = -w.length();
  else if (w.shape == Shape::Bi) tail_end = w.start;
  else tail_end = i;
  tail_end = std::min(tail_end, i);
  const long l = w.shape == Shape::Periodic ? w.period() : static_cast<long>(w.left.size());
  for (long k = tail_end - l + 1; k <= tail_end; ++k) r.left.push_back(w.letter(k));
  for (long k = tail_end + 1; k <= i; ++k) r.core.push_back(w.letter(k));
  normalize(r);
  return r;
}

// Letters > i of a word that is not bounded above, as an N-word with letter i+1 at index 1.
template <class L>
Seq<L> infinite_right_part(const Seq<L>& w, long i) {
  Seq<L> r;
  r.shape = Shape::Right;
  long tail_begin;  // lowest letter index inside the right tail region
  if (w.shape == Shape::Right) tail_begin = w.length() + 1;
  else if (w.shape == Shape::Bi) tail_begin = w.start + w.length() + 1;
  else tail_begin = i + 1;
  tail_begin = std::max(tail_begin, i + 1);
  const long rlen = w.shape == Shape::Periodic ? w.period() : static_cast<long>(w.right.size());
  for (long k = i + 1; k < tail_begin; ++k) r.core.push_back(w.letter(k));
  for (long k = tail_begin; k < tail_begin + rlen; ++k) r.right.push_back(w.letter(k));
  normalize(r);
  return r;
}

// A finite run of letters closing into a periodic tail: the letters are generated one at a time
// by `next` until it returns nothing or a state repeats. The result lists the letters in generation
// order together with the start of the repeating cycle (or -1 if the run stopped).
template <class L, class Key, class Next, class KeyFn>
std::pair<std::vector<L>, long> greedy_run(std::optional<L> first, Next next, KeyFn key, std::size_t bound) {
  std::vector<L> out;
  std::vector<Key> keys;
  std::optional<L> cur = first;
  while (cur) {
    Key k = key(*cur);
    for (std::size_t j = 0; j < keys.size(); ++j)
      if (keys[j] == k) return {out, static_cast<long>(j)};
    if (out.size() > bound) fail(ErrorKind::Internal, "extension walk exceeded the number of arrows without repeating");
    keys.push_back(k);
    out.push_back(*cur);
    cur = next(*cur);
  }
  return {out, -1};
}

// The letters of a greedy run placed to the right of a word (generation order is left to right).
template <class L>
Seq<L> run_as_right(const std::pair<std::vector<L>, long>& run) {
  Seq<L> r;
  const auto& [letters, cycle] = run;
  if (cycle < 0) return make_finite(letters);
  r.shape = Shape::Right;
  r.core.assign(letters.begin(), letters.begin() + cycle);
  r.right.assign(letters.begin() + cycle, letters.end());
  normalize(r);
  return r;
}

// The letters of a greedy run placed to the left of a word (generation order is right to left).
template <class L>
Seq<L> run_as_left(const std::pair<std::vector<L>, long>& run) {
  const auto& [letters, cycle] = run;
  if (cycle < 0) return make_finite(std::vector<L>(letters.rbegin(), letters.rend()));
  Seq<L> r;
  r.shape = Shape::Left;
  r.core.assign(letters.rend() - cycle, letters.rend());
  r.left.assign(letters.rbegin(), letters.rend() - cycle);
  normalize(r);
  return r;
}

}  // namespace gentle
