#include "gentle/genwords.hpp"

#include <algorithm>
#include <regex>

#include "syntax.hpp"

namespace gentle {

GenLetter gen_letter(const Presentation& pres, const std::vector<int>& arrows, bool inv) {
  GenLetter l;
  l.path.arrows = arrows;
  l.path.vertex = arrows.empty() ? -1 : pres.arrow(arrows.front()).head;
  l.inv = inv;
  return l;
}

int gen_head(const Presentation& pres, const GenLetter& l) {
  return l.inv ? path_head(pres, l.path) : path_tail(pres, l.path);
}

int gen_tail(const Presentation& pres, const GenLetter& l) {
  return l.inv ? path_tail(pres, l.path) : path_head(pres, l.path);
}

int gen_degree(const GenLetter& l) { return l.inv ? 1 : -1; }

int gen_letter_sign(const Presentation& pres, const Signs& signs, const GenLetter& l) {
  (void)pres;
  if (l.inv) return -signs.of(Letter{last_arrow(l.path), false});
  return signs.of(Letter{first_arrow(l.path), true});
}

std::string render_gen_letter(const Presentation& pres, const GenLetter& l, bool human) {
  std::string body = render_path(pres, l.path, PathStyle::Compact);
  std::string out = human ? "⟨" + body + "⟩" : "<" + body + ">";
  return l.inv ? out + "^-1" : out;
}

namespace {

std::optional<std::pair<ErrorKind, std::string>> letter_defect(const Presentation& pres, const GenLetter& l, long i) {
  const std::string at = "(" + std::to_string(i) + ")";
  for (int a : l.path.arrows)
    if (a < 0 || a >= pres.num_arrows()) return std::make_pair(ErrorKind::Parse, at + ": unknown arrow");
  if (l.path.trivial()) return std::make_pair(ErrorKind::PathNotInP, at + ": generalised letters need a nontrivial path");
  for (std::size_t k = 0; k + 1 < l.path.arrows.size(); ++k) {
    int x = l.path.arrows[k], y = l.path.arrows[k + 1];
    if (!pres.chained(x, y))
      return std::make_pair(ErrorKind::PathNotInP, at + ": " + pres.arrow_name(x) + "*" + pres.arrow_name(y) + " is not a path");
    if (pres.is_relation(x, y))
      return std::make_pair(ErrorKind::PathNotInP, at + ": " + render_path(pres, l.path) + " contains the relation " +
                                                       pres.arrow_name(x) + "*" + pres.arrow_name(y));
  }
  return std::nullopt;
}

std::optional<std::pair<ErrorKind, std::string>> pair_defect(const Presentation& pres, const GenLetter& a,
                                                             const GenLetter& b, long i) {
  int rule = !a.inv ? (b.inv ? 1 : 4) : (b.inv ? 2 : 3);
  const std::string at = "(" + std::to_string(i) + ", rule " + std::to_string(rule) + "): ";
  auto bad = [&](const std::string& why) { return std::make_pair(ErrorKind::AdjacencyRuleViolated, at + why); };
  const std::string pair = render_gen_letter(pres, a) + render_gen_letter(pres, b);
  if (gen_tail(pres, a) != gen_head(pres, b)) return bad("vertices do not match in " + pair);
  const Path &g = a.path, &s = b.path;
  switch (rule) {
    case 1:
      if (last_arrow(g) == last_arrow(s)) return bad("equal last arrows in " + pair);
      break;
    case 2:
      if (!pres.is_relation(first_arrow(g), last_arrow(s))) return bad("f(γ)l(σ) is nonzero in " + pair);
      break;
    case 3:
      if (first_arrow(g) == first_arrow(s)) return bad("equal first arrows in " + pair);
      break;
    case 4:
      if (!pres.is_relation(first_arrow(s), last_arrow(g))) return bad("f(σ)l(γ) is nonzero in " + pair);
      break;
  }
  return std::nullopt;
}

bool uniform(const std::vector<GenLetter>& v) {
  return std::all_of(v.begin(), v.end(), [&](const GenLetter& l) { return l.inv == v.front().inv; });
}

std::optional<std::pair<ErrorKind, std::string>> raw_defect(const Presentation& pres, const GenWord& g) {
  if (g.trivial()) {
    if (g.vertex < 0 || g.vertex >= pres.num_vertices()) return std::make_pair(ErrorKind::Parse, "unknown vertex");
    if (g.delta != 1 && g.delta != -1) return std::make_pair(ErrorKind::Parse, "trivial sign must be +1 or -1");
    return std::nullopt;
  }
  if ((g.shape == Shape::Right || g.shape == Shape::Bi) && g.right.empty())
    return std::make_pair(ErrorKind::Parse, "missing right tail");
  if ((g.shape == Shape::Left || g.shape == Shape::Bi) && g.left.empty())
    return std::make_pair(ErrorKind::Parse, "missing left tail");
  if (g.shape == Shape::Periodic && g.core.empty()) return std::make_pair(ErrorKind::Parse, "empty cycle");
  std::vector<GenLetter> letters;
  std::vector<long> index;
  adjacency_window(g, letters, index);
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (auto d = letter_defect(pres, letters[k], index[k])) return d;
  for (std::size_t k = 0; k + 1 < letters.size(); ++k)
    if (auto d = pair_defect(pres, letters[k], letters[k + 1], index[k])) return d;
  if (!g.left.empty() && !uniform(g.left))
    return std::make_pair(ErrorKind::TailNotPeriodicizable, "left tail mixes direct and inverse letters");
  if (!g.right.empty() && !uniform(g.right))
    return std::make_pair(ErrorKind::TailNotPeriodicizable, "right tail mixes direct and inverse letters");
  if (g.shape == Shape::Periodic) {
    long total = 0;
    for (const auto& l : g.core) total += gen_degree(l);
    if (total != 0)
      return std::make_pair(ErrorKind::WeakCyclic, "cycle has total degree " + std::to_string(total) +
                                                       "; periodic generalised words need degree 0");
  }
  return std::nullopt;
}

}  // namespace

GenWord check_genword(const Presentation& pres, GenWord raw) {
  if (auto d = raw_defect(pres, raw)) fail(d->first, d->second);
  normalize(raw);
  return raw;
}

std::optional<std::string> genword_defect(const Presentation& pres, const GenWord& g) {
  auto d = raw_defect(pres, g);
  if (!d) return std::nullopt;
  return std::string(error_kind_name(d->first)) + ": " + d->second;
}

GenWord parse_genword(const Presentation& pres, const std::string& text) {
  static const std::regex trivial_angle(R"(<\s*1_([A-Za-z0-9_']+)\s*>)");
  std::string src = std::regex_replace(syntax::ascii_form(text), trivial_angle, "1_$1");
  syntax::Parser<GenLetter> parser(syntax::lex(src), [&](const syntax::Token& t) {
    if (t.kind != syntax::Token::Kind::Angle)
      fail(ErrorKind::Parse, "expected <path> at column " + std::to_string(t.pos + 1));
    Path p = parse_path(pres, t.text);
    if (p.trivial()) fail(ErrorKind::PathNotInP, "generalised letters need a nontrivial path at column " + std::to_string(t.pos + 1));
    return gen_letter(pres, p.arrows, false);
  });
  syntax::RawSeq<GenLetter> raw = parser.parse();
  if (raw.trivial) {
    auto v = pres.find_vertex(raw.trivial_vertex);
    if (!v) fail(ErrorKind::Parse, "unknown vertex '" + raw.trivial_vertex + "'");
    return make_trivial<GenLetter>(*v, raw.trivial_delta);
  }
  return check_genword(pres, syntax::to_seq(raw));
}

std::string render_genword(const Presentation& pres, const GenWord& g, bool human) {
  if (g.trivial()) {
    std::string body = "1_" + pres.vertex_name(g.vertex);
    std::string out = human ? "⟨" + body + "⟩" : "<" + body + ">";
    return g.delta < 0 ? out + "^-1" : out;
  }
  std::string out = syntax::render_seq<GenLetter>(
      g,
      [&](const GenLetter& l) {
        std::string body = render_path(pres, l.path, PathStyle::Compact);
        return human ? "⟨" + body + "⟩" : "<" + body + ">";
      },
      [](const GenLetter& l) { return l.inv; }, "");
  if (human) out = syntax::replace_all(out, "inf", "∞");
  return out;
}

int gen_vertex(const Presentation& pres, const GenWord& g, long i) {
  if (!g.has_position(i)) fail(ErrorKind::IndexOutOfShape, "position " + std::to_string(i) + " outside the word");
  if (g.trivial()) return g.vertex;
  if (g.has_letter(i)) return gen_tail(pres, g.letter(i));
  return gen_head(pres, g.letter(i + 1));
}

int gen_position_sign(const Presentation& pres, const Signs& signs, const GenWord& g, long i) {
  if (g.has_letter(i + 1)) return gen_letter_sign(pres, signs, g.letter(i + 1));
  if (g.has_letter(i)) return -gen_letter_sign(pres, signs, inverse_letter(g.letter(i)));
  return g.delta;
}

int gen_sign(const Presentation& pres, const Signs& signs, const GenWord& g) {
  if (!g.bounded_below()) fail(ErrorKind::ShapeMismatch, "s(C) needs a generalised word bounded below");
  return gen_position_sign(pres, signs, g, 0);
}

int gen_inverse_sign(const Presentation& pres, const Signs& signs, const GenWord& g) {
  if (!g.bounded_above()) fail(ErrorKind::ShapeMismatch, "s(C^-1) needs a generalised word bounded above");
  if (g.trivial()) return -g.delta;
  return gen_letter_sign(pres, signs, inverse_letter(g.letter(g.hi())));
}

bool gen_composable(const Presentation& pres, const Signs& signs, const GenWord& c, const GenWord& d) {
  if (!c.bounded_above() || !d.bounded_below())
    fail(ErrorKind::ShapeMismatch, "composable needs C finite or -N and D finite or N");
  return gen_vertex(pres, c, c.hi()) == gen_vertex(pres, d, 0) &&
         gen_inverse_sign(pres, signs, c) == -gen_sign(pres, signs, d);
}

GenWord gen_subword(const Presentation& pres, const Signs& signs, const GenWord& g, long a, long b) {
  if (a > b) fail(ErrorKind::IndexOutOfShape, "subword bounds reversed");
  if (a == b) return make_trivial<GenLetter>(gen_vertex(pres, g, a), gen_position_sign(pres, signs, g, a));
  std::vector<GenLetter> letters;
  for (long i = a + 1; i <= b; ++i) letters.push_back(g.letter(i));
  return make_finite(letters);
}

GenWord gen_left_part(const Presentation& pres, const Signs& signs, const GenWord& g, long i) {
  if (g.bounded_below()) return gen_subword(pres, signs, g, 0, i);
  return infinite_left_part(g, i);
}

GenWord gen_right_part(const Presentation& pres, const Signs& signs, const GenWord& g, long i) {
  if (g.bounded_above()) return gen_subword(pres, signs, g, i, g.hi());
  return infinite_right_part(g, i);
}

long hdeg(const GenWord& g, long i) {
  if (!g.has_position(i)) fail(ErrorKind::IndexOutOfShape, "position " + std::to_string(i) + " outside the word");
  long h = 0;
  if (i > 0)
    for (long k = 1; k <= i; ++k) h += gen_degree(g.letter(k));
  else
    for (long k = 0; k > i; --k) h -= gen_degree(g.letter(k));
  return h;
}

std::vector<long> hdeg_preimage(const GenWord& g, long n, long lo, long hi) {
  std::vector<long> out;
  for (long i = lo; i <= hi; ++i)
    if (g.has_position(i) && hdeg(g, i) == n) out.push_back(i);
  return out;
}

long cycle_degree(const GenWord& g) {
  long total = 0;
  for (const auto& l : g.core) total += gen_degree(l);
  return total;
}

bool is_direct_genword(const GenWord& g) {
  auto dir = [](const std::vector<GenLetter>& v) {
    return std::all_of(v.begin(), v.end(), [](const GenLetter& l) { return !l.inv; });
  };
  return dir(g.left) && dir(g.core) && dir(g.right);
}

bool is_inverse_genword(const GenWord& g) {
  auto inv = [](const std::vector<GenLetter>& v) {
    return std::all_of(v.begin(), v.end(), [](const GenLetter& l) { return l.inv; });
  };
  return inv(g.left) && inv(g.core) && inv(g.right);
}

bool is_alternating_letters(const std::vector<GenLetter>& letters) {
  if (letters.empty() || letters.size() % 2) return false;
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k].inv != (k % 2 == 1)) return false;
  return true;
}

namespace {

// Lowest index of a direct letter, or of an inverse letter when `inverse` is set. The first
// component is false when such letters are unbounded below; the second is empty when none exist.
std::pair<bool, std::optional<long>> lowest_with(const GenWord& g, bool inverse) {
  if (g.shape == Shape::Left || g.shape == Shape::Bi) {
    if (g.left.front().inv == inverse) return {false, std::nullopt};
  }
  std::vector<GenLetter> letters;
  std::vector<long> index;
  adjacency_window(g, letters, index);
  for (std::size_t k = 0; k < letters.size(); ++k)
    if (letters[k].inv == inverse) return {true, index[k]};
  return {true, std::nullopt};
}

std::pair<bool, std::optional<long>> highest_with(const GenWord& g, bool inverse) {
  if (g.shape == Shape::Right || g.shape == Shape::Bi) {
    if (g.right.front().inv == inverse) return {false, std::nullopt};
  }
  std::vector<GenLetter> letters;
  std::vector<long> index;
  adjacency_window(g, letters, index);
  for (std::size_t k = letters.size(); k > 0; --k)
    if (letters[k - 1].inv == inverse) return {true, index[k - 1]};
  return {true, std::nullopt};
}

}  // namespace

std::optional<long> iota_minus(const GenWord& g) {
  if (g.shape == Shape::Periodic) return std::nullopt;
  if (g.trivial()) return 0L;
  auto [bounded, j] = lowest_with(g, false);
  if (!bounded) return std::nullopt;
  if (j) return *j - 1;
  if (g.bounded_above()) return g.hi();
  return std::nullopt;
}

std::optional<long> iota_plus(const GenWord& g) {
  if (g.shape == Shape::Periodic) return std::nullopt;
  if (g.trivial()) return 0L;
  auto [bounded, j] = highest_with(g, true);
  if (!bounded) return std::nullopt;
  if (j) return *j;
  if (g.bounded_below()) return 0L;
  return std::nullopt;
}

namespace {

bool arrows_after_first(const GenWord& part_direct) {
  // part_direct is B or D: direct, and every letter after the first is a single arrow
  if (!is_direct_genword(part_direct)) return false;
  auto single = [](const GenLetter& l) { return l.path.arrows.size() == 1; };
  if (!std::all_of(part_direct.right.begin(), part_direct.right.end(), single)) return false;
  for (std::size_t k = 1; k < part_direct.core.size(); ++k)
    if (!single(part_direct.core[k])) return false;
  return true;
}

bool extendable_by_arrow(const Presentation& pres, const GenWord& part_direct) {
  // B<b> (resp. D<d>) is a generalised word for some arrow b: rule 4 against the last letter
  if (part_direct.trivial() || part_direct.shape != Shape::Finite) return false;
  return pres.relation_after(last_arrow(part_direct.core.back().path)).has_value();
}

}  // namespace

std::optional<ResolutionDecomposition> is_string_resolution(const Presentation& pres, const Signs& signs,
                                                            const GenWord& g, std::string* reason) {
  auto no = [&](const std::string& why) -> std::optional<ResolutionDecomposition> {
    if (reason) *reason = why;
    return std::nullopt;
  };
  if (g.shape == Shape::Periodic) return no("periodic generalised words are not string resolutions");
  auto lo = iota_minus(g), hi = iota_plus(g);
  if (!lo) return no("no maximal index with only inverse letters to its left");
  if (!hi) return no("no minimal index with only direct letters to its right");
  if (*lo > *hi) return no("the inverse prefix and the direct suffix overlap");
  if (g.shape == Shape::Bi && *lo != 0) return no("Z-word whose interval does not start at 0");
  ResolutionDecomposition r;
  r.lo = *lo;
  r.hi = *hi;
  r.A = gen_subword(pres, signs, g, *lo, *hi);
  if (!r.A.trivial() && !is_alternating_letters(r.A.core))
    return no("letters " + std::to_string(*lo + 1) + ".." + std::to_string(*hi) + " do not alternate <m><e>^-1");
  r.B = invert(gen_left_part(pres, signs, g, *lo));
  r.D = gen_right_part(pres, signs, g, *hi);
  if (!r.B.trivial() && !arrows_after_first(r.B)) return no("the left part has a non-arrow letter after its first");
  if (extendable_by_arrow(pres, r.B)) return no("the left part extends by an arrow");
  if (!r.D.trivial() && !arrows_after_first(r.D)) return no("the right part has a non-arrow letter after its first");
  if (extendable_by_arrow(pres, r.D)) return no("the right part extends by an arrow");
  r.degree = hdeg(g, *lo);
  return r;
}

std::optional<std::vector<GenLetter>> is_band_resolution(const GenWord& g) {
  if (g.shape != Shape::Periodic || cycle_degree(g) != 0) return std::nullopt;
  if (!is_alternating_letters(g.core)) return std::nullopt;
  return g.core;
}

}  // namespace gentle
