#include "gentle/words.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "syntax.hpp"

namespace gentle {

int letter_head(const Presentation& pres, const Letter& l) {
  return l.inv ? pres.arrow(l.arrow).tail : pres.arrow(l.arrow).head;
}

int letter_tail(const Presentation& pres, const Letter& l) {
  return l.inv ? pres.arrow(l.arrow).head : pres.arrow(l.arrow).tail;
}

std::string render_letter(const Presentation& pres, const Letter& l) {
  return pres.arrow_name(l.arrow) + (l.inv ? "^-1" : "");
}

bool letter_name_less(const Presentation& pres, const Letter& a, const Letter& b) {
  const std::string& an = pres.arrow_name(a.arrow);
  const std::string& bn = pres.arrow_name(b.arrow);
  if (an != bn) return an < bn;
  return a.inv < b.inv;
}

namespace {

// Required sign relation between two distinct letters sharing a head: equal exactly for the
// pairs {x^-1, y} with (x, y) a relation.
bool must_agree(const Presentation& pres, const Letter& l1, const Letter& l2) {
  if (l1.inv && !l2.inv) return pres.is_relation(l1.arrow, l2.arrow);
  if (!l1.inv && l2.inv) return pres.is_relation(l2.arrow, l1.arrow);
  return false;
}

}  // namespace

Signs assign_signs(const Presentation& pres, bool flip) {
  std::vector<int> values(static_cast<std::size_t>(pres.num_arrows()) * 2, 0);
  for (int v = 0; v < pres.num_vertices(); ++v) {
    std::vector<Letter> group;
    for (int a : pres.arrows_by_name())
      if (pres.arrow(a).head == v) group.push_back({a, false});
    for (int a : pres.arrows_by_name())
      if (pres.arrow(a).tail == v) group.push_back({a, true});
    if (group.empty()) continue;
    const std::size_t n = group.size();
    bool found = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n) && !found; ++mask) {
      // bit k of mask set means the k-th letter takes the non-preferred value
      std::vector<int> cand(n);
      for (std::size_t k = 0; k < n; ++k) {
        bool second = (mask >> (n - 1 - k)) & 1;
        cand[k] = (second != flip) ? -1 : 1;
      }
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = i + 1; j < n && ok; ++j)
          ok = (cand[i] == cand[j]) == must_agree(pres, group[i], group[j]);
      if (!ok) continue;
      for (std::size_t k = 0; k < n; ++k)
        values[static_cast<std::size_t>(group[k].arrow) * 2 + (group[k].inv ? 1 : 0)] = cand[k];
      found = true;
    }
    if (!found) fail(ErrorKind::NoValidAssignment, "no sign assignment exists at vertex " + pres.vertex_name(v));
  }
  return Signs(values);
}

bool signs_valid(const Presentation& pres, const Signs& signs) {
  std::vector<Letter> all;
  for (int a = 0; a < pres.num_arrows(); ++a) {
    all.push_back({a, false});
    all.push_back({a, true});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    int si = signs.of(all[i]);
    if (si != 1 && si != -1) return false;
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (letter_head(pres, all[i]) != letter_head(pres, all[j])) continue;
      if ((si == signs.of(all[j])) != must_agree(pres, all[i], all[j])) return false;
    }
  }
  return true;
}

std::string render_signs(const Presentation& pres, const Signs& signs) {
  std::ostringstream out;
  for (bool inv : {false, true})
    for (int a : pres.arrows_by_name()) {
      Letter l{a, inv};
      out << "s(" << render_letter(pres, l) << ") = " << (signs.of(l) > 0 ? "+1" : "-1") << "\n";
    }
  return out.str();
}

namespace {

Letter parse_letter_atom(const Presentation& pres, const syntax::Token& t) {
  if (t.kind != syntax::Token::Kind::Ident)
    fail(ErrorKind::Parse, "expected an arrow name at column " + std::to_string(t.pos + 1));
  auto a = pres.find_arrow(t.text);
  if (!a) fail(ErrorKind::Parse, "unknown arrow '" + t.text + "' at column " + std::to_string(t.pos + 1));
  return Letter{*a, false};
}

std::optional<std::pair<ErrorKind, std::string>> pair_defect(const Presentation& pres, const Letter& a,
                                                             const Letter& b, long i) {
  const std::string at = "(" + std::to_string(i) + ")";
  if (letter_tail(pres, a) != letter_head(pres, b))
    return std::make_pair(ErrorKind::HeadTailMismatch, at + ": t(" + render_letter(pres, a) + ") != h(" +
                                                           render_letter(pres, b) + ")");
  if (inverse_letter(a) == b)
    return std::make_pair(ErrorKind::InverseCancellation,
                          at + ": " + render_letter(pres, a) + " followed by its inverse");
  if (!a.inv && !b.inv && pres.is_relation(a.arrow, b.arrow))
    return std::make_pair(ErrorKind::RelationCrossed, at + ": " + pres.arrow_name(a.arrow) + "*" +
                                                          pres.arrow_name(b.arrow) + " is a relation");
  if (a.inv && b.inv && pres.is_relation(b.arrow, a.arrow))
    return std::make_pair(ErrorKind::RelationCrossed, at + ": " + pres.arrow_name(b.arrow) + "*" +
                                                          pres.arrow_name(a.arrow) + " is a relation");
  return std::nullopt;
}

bool uniform(const std::vector<Letter>& v) {
  return std::all_of(v.begin(), v.end(), [&](const Letter& l) { return l.inv == v.front().inv; });
}

std::optional<std::pair<ErrorKind, std::string>> raw_defect(const Presentation& pres, const Word& w) {
  if (w.trivial()) {
    if (w.vertex < 0 || w.vertex >= pres.num_vertices()) return std::make_pair(ErrorKind::Parse, "unknown vertex");
    if (w.delta != 1 && w.delta != -1) return std::make_pair(ErrorKind::Parse, "trivial sign must be +1 or -1");
    return std::nullopt;
  }
  auto check_letters = [&](const std::vector<Letter>& v) {
    for (const Letter& l : v)
      if (l.arrow < 0 || l.arrow >= pres.num_arrows()) return false;
    return true;
  };
  if (!check_letters(w.left) || !check_letters(w.core) || !check_letters(w.right))
    return std::make_pair(ErrorKind::Parse, "letter refers to an unknown arrow");
  if ((w.shape == Shape::Right || w.shape == Shape::Bi) && w.right.empty())
    return std::make_pair(ErrorKind::Parse, "missing right tail");
  if ((w.shape == Shape::Left || w.shape == Shape::Bi) && w.left.empty())
    return std::make_pair(ErrorKind::Parse, "missing left tail");
  if (w.shape == Shape::Periodic && w.core.empty()) return std::make_pair(ErrorKind::Parse, "empty cycle");
  std::vector<Letter> letters;
  std::vector<long> index;
  adjacency_window(w, letters, index);
  for (std::size_t k = 0; k + 1 < letters.size(); ++k)
    if (auto d = pair_defect(pres, letters[k], letters[k + 1], index[k])) return d;
  if (!w.left.empty() && !uniform(w.left))
    return std::make_pair(ErrorKind::TailNotPeriodicizable, "left tail mixes direct and inverse letters");
  if (!w.right.empty() && !uniform(w.right))
    return std::make_pair(ErrorKind::TailNotPeriodicizable, "right tail mixes direct and inverse letters");
  return std::nullopt;
}

}  // namespace

bool letters_adjacent(const Presentation& pres, const Letter& a, const Letter& b) {
  return !pair_defect(pres, a, b, 0);
}

Word check_word(const Presentation& pres, Word raw) {
  if (auto d = raw_defect(pres, raw)) fail(d->first, d->second);
  normalize(raw);
  return raw;
}

std::optional<std::string> word_defect(const Presentation& pres, const Word& w) {
  auto d = raw_defect(pres, w);
  if (!d) return std::nullopt;
  return std::string(error_kind_name(d->first)) + ": " + d->second;
}

Word parse_word(const Presentation& pres, const std::string& text) {
  syntax::Parser<Letter> parser(syntax::lex(text),
                                [&](const syntax::Token& t) { return parse_letter_atom(pres, t); });
  syntax::RawSeq<Letter> raw = parser.parse();
  if (raw.trivial) {
    auto v = pres.find_vertex(raw.trivial_vertex);
    if (!v) fail(ErrorKind::Parse, "unknown vertex '" + raw.trivial_vertex + "'");
    return make_trivial<Letter>(*v, raw.trivial_delta);
  }
  return check_word(pres, syntax::to_seq(raw));
}

std::string render_word(const Presentation& pres, const Word& w) {
  if (w.trivial()) return "1_" + pres.vertex_name(w.vertex) + (w.delta < 0 ? "^-1" : "");
  return syntax::render_seq<Letter>(
      w, [&](const Letter& l) { return pres.arrow_name(l.arrow); }, [](const Letter& l) { return l.inv; }, " ");
}

int word_vertex(const Presentation& pres, const Word& w, long i) {
  if (!w.has_position(i)) fail(ErrorKind::IndexOutOfShape, "position " + std::to_string(i) + " outside the word");
  if (w.trivial()) return w.vertex;
  if (w.has_letter(i)) return letter_tail(pres, w.letter(i));
  return letter_head(pres, w.letter(i + 1));
}

int position_sign(const Presentation& pres, const Signs& signs, const Word& w, long i) {
  (void)pres;
  if (w.has_letter(i + 1)) return signs.of(w.letter(i + 1));
  if (w.has_letter(i)) return -signs.of(inverse_letter(w.letter(i)));
  return w.delta;
}

int word_sign(const Presentation& pres, const Signs& signs, const Word& w) {
  if (!w.bounded_below()) fail(ErrorKind::ShapeMismatch, "s(C) needs a word bounded below");
  return position_sign(pres, signs, w, 0);
}

int word_inverse_sign(const Presentation& pres, const Signs& signs, const Word& w) {
  (void)pres;
  if (!w.bounded_above()) fail(ErrorKind::ShapeMismatch, "s(C^-1) needs a word bounded above");
  if (w.trivial()) return -w.delta;
  return signs.of(inverse_letter(w.letter(w.hi())));
}

bool composable(const Presentation& pres, const Signs& signs, const Word& c, const Word& d) {
  if (!c.bounded_above() || !d.bounded_below())
    fail(ErrorKind::ShapeMismatch, "composable needs C finite or -N and D finite or N");
  return word_vertex(pres, c, c.hi()) == word_vertex(pres, d, 0) &&
         word_inverse_sign(pres, signs, c) == -word_sign(pres, signs, d);
}

Word subword(const Presentation& pres, const Signs& signs, const Word& w, long a, long b) {
  if (a > b) fail(ErrorKind::IndexOutOfShape, "subword bounds reversed");
  if (a == b) return make_trivial<Letter>(word_vertex(pres, w, a), position_sign(pres, signs, w, a));
  std::vector<Letter> letters;
  for (long i = a + 1; i <= b; ++i) letters.push_back(w.letter(i));
  return make_finite(letters);
}

Word left_part(const Presentation& pres, const Signs& signs, const Word& w, long i) {
  if (w.bounded_below()) return subword(pres, signs, w, 0, i);
  return infinite_left_part(w, i);
}

Word right_part(const Presentation& pres, const Signs& signs, const Word& w, long i) {
  if (w.bounded_above()) return subword(pres, signs, w, i, w.hi());
  return infinite_right_part(w, i);
}

bool is_peak(const Word& w, long i) {
  if (!w.has_position(i)) return false;
  bool left_ok = !w.has_letter(i) || !w.letter(i).inv;
  bool right_ok = !w.has_letter(i + 1) || w.letter(i + 1).inv;
  return left_ok && right_ok;
}

PeakReport peaks(const Word& w) {
  PeakReport r;
  auto scan = [&](long from, long to) {
    for (long i = from; i <= to; ++i)
      if (is_peak(w, i)) r.peaks.push_back(i);
  };
  const long c = w.length();
  switch (w.shape) {
    case Shape::Finite: scan(0, c); break;
    case Shape::Right: scan(0, c + static_cast<long>(w.right.size())); break;
    case Shape::Left: scan(-c - static_cast<long>(w.left.size()), 0); break;
    case Shape::Bi:
      scan(w.start - static_cast<long>(w.left.size()), w.start + c + static_cast<long>(w.right.size()));
      break;
    case Shape::Periodic:
      r.kind = PeakReport::Kind::Periodic;
      r.period = c;
      scan(0, c - 1);
      r.peak_finite = r.peaks.empty();
      break;
  }
  return r;
}

std::vector<Letter> path_letters(const Path& p) {
  std::vector<Letter> out;
  for (int a : p.arrows) out.push_back({a, false});
  return out;
}

std::vector<Letter> inverse_path_letters(const Path& p) {
  std::vector<Letter> out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) out.push_back({*it, true});
  return out;
}

std::optional<std::vector<AlternatingPair>> alternating_pairs(const Presentation& pres,
                                                              const std::vector<Letter>& letters) {
  std::vector<AlternatingPair> out;
  std::size_t k = 0;
  while (k < letters.size()) {
    std::size_t j = k;
    while (j < letters.size() && letters[j].inv) ++j;
    if (j == k) return std::nullopt;
    std::size_t m = j;
    while (m < letters.size() && !letters[m].inv) ++m;
    if (m == j) return std::nullopt;
    AlternatingPair pr;
    for (std::size_t q = j; q > k; --q) pr.gamma.arrows.push_back(letters[q - 1].arrow);
    for (std::size_t q = j; q < m; ++q) pr.sigma.arrows.push_back(letters[q].arrow);
    pr.gamma.vertex = pres.arrow(pr.gamma.arrows.front()).head;
    pr.sigma.vertex = pres.arrow(pr.sigma.arrows.front()).head;
    out.push_back(pr);
    k = m;
  }
  return out;
}

bool is_inverse_word(const Word& w) {
  auto all_inv = [](const std::vector<Letter>& v) {
    return std::all_of(v.begin(), v.end(), [](const Letter& l) { return l.inv; });
  };
  return all_inv(w.left) && all_inv(w.core) && all_inv(w.right);
}

bool is_direct_word(const Word& w) {
  auto all_dir = [](const std::vector<Letter>& v) {
    return std::all_of(v.begin(), v.end(), [](const Letter& l) { return !l.inv; });
  };
  return all_dir(w.left) && all_dir(w.core) && all_dir(w.right);
}

const char* classification_name(Classification::Kind k) {
  switch (k) {
    case Classification::Kind::StringWord: return "StringWord";
    case Classification::Kind::BandWord: return "BandWord";
    case Classification::Kind::EventuallyUpward: return "EventuallyUpward";
    case Classification::Kind::PrimitivePeriodic: return "PrimitivePeriodic";
    case Classification::Kind::NotClassifiable: return "NotClassifiable";
  }
  return "?";
}

StringDecomposition string_decomposition(const Presentation& pres, const Signs& signs, const Word& w) {
  PeakReport pr = peaks(w);
  if (pr.kind != PeakReport::Kind::Finite || pr.peaks.empty())
    fail(ErrorKind::NotAStringWord, "word has no finite peak set");
  const long p0 = pr.peaks.front(), pd = pr.peaks.back();
  if (w.is_z() && p0 != 0) fail(ErrorKind::NotAStringWord, "Z-word whose first peak is not at 0");
  StringDecomposition d;
  d.peaks = pr.peaks;
  d.B = invert(left_part(pres, signs, w, p0));
  d.A = subword(pres, signs, w, p0, pd);
  d.D = right_part(pres, signs, w, pd);
  if (!is_inverse_word(d.B) || !is_inverse_word(d.D)) fail(ErrorKind::NotAStringWord, "outer parts are not inverse words");
  if (!d.A.trivial()) {
    auto pairs = alternating_pairs(pres, d.A.core);
    if (!pairs) fail(ErrorKind::NotAStringWord, "middle part is not alternating");
    d.pairs = *pairs;
  }
  return d;
}

bool is_band_word_at_zero(const Word& w) {
  if (w.shape != Shape::Periodic || !is_peak(w, 0)) return false;
  return !is_inverse_word(w) && !is_direct_word(w);
}

Classification classify_word(const Presentation& pres, const Signs& signs, const Word& w) {
  Classification c;
  c.normalized = w;
  auto tail_dir = [](const std::vector<Letter>& t) { return t.front().inv; };  // true: inverse
  switch (w.shape) {
    case Shape::Finite: break;
    case Shape::Right:
      if (!tail_dir(w.right)) {
        c.kind = Classification::Kind::EventuallyUpward;
        return c;
      }
      break;
    case Shape::Left:
      if (tail_dir(w.left)) {
        c.kind = Classification::Kind::EventuallyUpward;
        return c;
      }
      break;
    case Shape::Bi:
      if (tail_dir(w.left) || !tail_dir(w.right)) {
        c.kind = Classification::Kind::EventuallyUpward;
        return c;
      }
      break;
    case Shape::Periodic: {
      if (is_inverse_word(w) || is_direct_word(w)) {
        c.kind = Classification::Kind::PrimitivePeriodic;
        return c;
      }
      PeakReport pr = peaks(w);
      c.band_shifts = pr.peaks;
      if (pr.peaks.empty()) return c;
      long best = pr.peaks.front();
      if (std::find(pr.peaks.begin(), pr.peaks.end(), 0L) != pr.peaks.end()) {
        best = 0;
      } else {
        for (long n : pr.peaks) {
          auto a = rotate_left(w.core, n), b = rotate_left(w.core, best);
          if (std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [&](const Letter& x, const Letter& y) {
                return letter_name_less(pres, x, y);
              }))
            best = n;
        }
      }
      c.kind = Classification::Kind::BandWord;
      c.shift = best;
      c.normalized = shift(w, best);
      return c;
    }
  }
  PeakReport pr = peaks(w);
  if (pr.peaks.empty()) return c;
  c.shift = w.shape == Shape::Bi ? pr.peaks.front() : 0;
  c.normalized = shift(w, c.shift);
  c.decomposition = string_decomposition(pres, signs, c.normalized);
  c.kind = Classification::Kind::StringWord;
  return c;
}

std::optional<EquivalenceWitness> words_equivalent(const Word& c, const Word& e) {
  if (auto n = shift_between(c, e)) return EquivalenceWitness{*n, false};
  if (auto n = shift_between(invert(c), e)) return EquivalenceWitness{*n, true};
  return std::nullopt;
}

std::optional<int> left_arrow_extension(const Presentation& pres, const Signs& signs, const Word& w) {
  std::optional<int> found;
  for (int a = 0; a < pres.num_arrows(); ++a) {
    if (!composable(pres, signs, make_finite(std::vector<Letter>{{a, false}}), w)) continue;
    if (found) fail(ErrorKind::Internal, "two arrows extend the word on the left");
    found = a;
  }
  return found;
}

std::optional<int> right_arrow_extension(const Presentation& pres, const Signs& signs, const Word& w) {
  std::optional<int> found;
  for (int a = 0; a < pres.num_arrows(); ++a) {
    if (!composable(pres, signs, w, make_finite(std::vector<Letter>{{a, true}}))) continue;
    if (found) fail(ErrorKind::Internal, "two arrows extend the word on the right");
    found = a;
  }
  return found;
}

}  // namespace gentle
