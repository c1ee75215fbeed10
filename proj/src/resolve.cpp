#include "gentle/resolve.hpp"

#include <functional>

namespace gentle {

namespace {

GenWord single(const Presentation& pres, int arrow, bool inv) {
  return make_finite(std::vector<GenLetter>{gen_letter(pres, {arrow}, inv)});
}

std::optional<int> unique_arrow(const Presentation& pres, const std::function<bool(int)>& ok, const char* what) {
  std::optional<int> found;
  for (int a = 0; a < pres.num_arrows(); ++a) {
    if (!ok(a)) continue;
    if (found) fail(ErrorKind::Internal, std::string("two arrows extend the generalised word on the ") + what);
    found = a;
  }
  return found;
}

}  // namespace

GenWord extend_up(const Presentation& pres, const Signs& signs, const GenWord& e, Side side) {
  if (e.shape != Shape::Finite) fail(ErrorKind::ShapeMismatch, "upward extensions need a finite generalised word");
  const std::size_t bound = static_cast<std::size_t>(pres.num_arrows()) + 1;
  auto next = [&](int a) { return pres.relation_after(a); };
  auto key = [](int a) { return a; };
  GenWord left, right;
  auto to_letters = [&](const std::pair<std::vector<int>, long>& run, bool inv) {
    std::vector<GenLetter> letters;
    for (int a : run.first) letters.push_back(gen_letter(pres, {a}, inv));
    return std::make_pair(letters, run.second);
  };
  bool has_left = false, has_right = false;
  if (side != Side::Right) {
    auto first = unique_arrow(pres, [&](int a) { return gen_composable(pres, signs, single(pres, a, true), e); }, "left");
    if (first) {
      left = run_as_left(to_letters(greedy_run<int, int>(first, next, key, bound), true));
      has_left = true;
    }
  }
  if (side != Side::Left) {
    auto first = unique_arrow(pres, [&](int a) { return gen_composable(pres, signs, e, single(pres, a, false)); }, "right");
    if (first) {
      right = run_as_right(to_letters(greedy_run<int, int>(first, next, key, bound), false));
      has_right = true;
    }
  }
  GenWord out = e;
  if (has_right) out = concat(out, right);
  if (has_left) out = concat(left, out);
  return out;
}

Word extend_down(const Presentation& pres, const Signs& signs, const Word& a, Side side) {
  if (a.shape != Shape::Finite) fail(ErrorKind::ShapeMismatch, "downward extensions need a finite word");
  const std::size_t bound = static_cast<std::size_t>(pres.num_arrows()) + 1;
  auto next = [&](int x) { return pres.free_after(x); };
  auto key = [](int x) { return x; };
  auto to_letters = [&](const std::pair<std::vector<int>, long>& run, bool inv) {
    std::vector<Letter> letters;
    for (int x : run.first) letters.push_back({x, inv});
    return std::make_pair(letters, run.second);
  };
  Word out = a;
  if (side != Side::Left) {
    if (auto first = right_arrow_extension(pres, signs, a))
      out = concat(out, run_as_right(to_letters(greedy_run<int, int>(first, next, key, bound), true)));
  }
  if (side != Side::Right) {
    if (auto first = left_arrow_extension(pres, signs, a))
      out = concat(run_as_left(to_letters(greedy_run<int, int>(first, next, key, bound), false)), out);
  }
  return out;
}

namespace {

std::vector<int> arrows_of(const std::vector<Letter>& direct) {
  std::vector<int> out;
  for (const Letter& l : direct) out.push_back(l.arrow);
  return out;
}

}  // namespace

StringResolution resolution_of_string(const Presentation& pres, const Signs& signs, const Word& c) {
  Classification cl = classify_word(pres, signs, c);
  if (cl.kind != Classification::Kind::StringWord)
    fail(ErrorKind::NotAStringWord, std::string("word is classified as ") + classification_name(cl.kind));
  const Word& w = cl.normalized;
  const StringDecomposition& dec = cl.decomposition;
  GenWord alt;
  if (dec.A.trivial()) {
    alt = make_trivial<GenLetter>(dec.A.vertex, dec.A.delta);
  } else {
    std::vector<GenLetter> letters;
    for (const auto& pr : dec.pairs) {
      letters.push_back(GenLetter{pr.gamma, false});
      letters.push_back(GenLetter{pr.sigma, true});
    }
    alt = make_finite(letters);
  }
  std::optional<GenWord> bletter, dletter;
  if (w.bounded_below()) {
    Word b_inv = invert(dec.B);
    if (auto b = left_arrow_extension(pres, signs, b_inv)) {
      std::vector<int> arrows{*b};
      auto rest = arrows_of(b_inv.core);
      arrows.insert(arrows.end(), rest.begin(), rest.end());
      bletter = make_finite(std::vector<GenLetter>{gen_letter(pres, arrows, true)});
    }
  }
  if (w.bounded_above()) {
    if (auto d = right_arrow_extension(pres, signs, dec.D)) {
      std::vector<int> arrows{*d};
      auto rest = arrows_of(inverse_letters(dec.D.core));
      arrows.insert(arrows.end(), rest.begin(), rest.end());
      dletter = make_finite(std::vector<GenLetter>{gen_letter(pres, arrows, false)});
    }
  }
  GenWord r;
  if (bletter && dletter) {
    r = shift(extend_up(pres, signs, concat(concat(*bletter, alt), *dletter), Side::Both), 1);
  } else if (dletter) {
    r = extend_up(pres, signs, concat(alt, *dletter), Side::Right);
  } else if (bletter) {
    r = extend_up(pres, signs, concat(*bletter, alt), Side::Left);
  } else {
    r = alt;
  }
  std::string why;
  auto d = is_string_resolution(pres, signs, r, &why);
  if (!d) fail(ErrorKind::Internal, "constructed resolution " + render_genword(pres, r) + " is not a string resolution: " + why);
  return StringResolution{r, d->degree, *d};
}

GenWord resolution_of_band(const Presentation& pres, const Signs& signs, const Word& c) {
  Classification cl = classify_word(pres, signs, c);
  if (cl.kind != Classification::Kind::BandWord)
    fail(ErrorKind::NotABandWord, std::string("word is classified as ") + classification_name(cl.kind));
  auto pairs = alternating_pairs(pres, cl.normalized.core);
  if (!pairs) fail(ErrorKind::NotABandWord, "cycle is not alternating");
  std::vector<GenLetter> cycle;
  for (const auto& pr : *pairs) {
    cycle.push_back(GenLetter{pr.gamma, false});
    cycle.push_back(GenLetter{pr.sigma, true});
  }
  return make_periodic(cycle);
}

Word homology_word(const Presentation& pres, const Signs& signs, const GenWord& g) {
  if (g.shape == Shape::Periodic) {
    auto cycle = is_band_resolution(g);
    if (!cycle) fail(ErrorKind::NotARecognizedResolution, "periodic generalised word is not a band resolution");
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < cycle->size(); k += 2) {
      auto mu = inverse_path_letters((*cycle)[k].path);
      auto eta = path_letters((*cycle)[k + 1].path);
      letters.insert(letters.end(), mu.begin(), mu.end());
      letters.insert(letters.end(), eta.begin(), eta.end());
    }
    return make_periodic(letters);
  }
  std::string why;
  auto dec = is_string_resolution(pres, signs, g, &why);
  if (!dec) fail(ErrorKind::NotARecognizedResolution, why);
  Word a;
  if (dec->A.trivial()) {
    a = make_trivial<Letter>(dec->A.vertex, dec->A.delta);
  } else {
    std::vector<Letter> letters;
    for (std::size_t k = 0; k < dec->A.core.size(); k += 2) {
      auto mu = inverse_path_letters(dec->A.core[k].path);
      auto eta = path_letters(dec->A.core[k + 1].path);
      letters.insert(letters.end(), mu.begin(), mu.end());
      letters.insert(letters.end(), eta.begin(), eta.end());
    }
    a = make_finite(letters);
  }
  // B_1 = <b sigma> and D_1 = <d mu>: drop the last arrow of the first letter's path
  auto rest = [](const GenWord& part) {
    Path p = part.letter(1).path;
    p.arrows.erase(p.arrows.begin());
    return p;
  };
  const bool b_trivial = dec->B.trivial(), d_trivial = dec->D.trivial();
  Word left = a;
  if (!b_trivial) {
    Path sigma = rest(dec->B);
    if (!sigma.trivial()) left = concat(make_finite(path_letters(sigma)), a);
  }
  Word both = left;
  if (!d_trivial) {
    Path mu = rest(dec->D);
    if (!mu.trivial()) both = concat(left, make_finite(inverse_path_letters(mu)));
  }
  if (b_trivial && d_trivial) return extend_down(pres, signs, a, Side::Both);
  if (b_trivial) return extend_down(pres, signs, both, Side::Left);
  if (d_trivial) return extend_down(pres, signs, both, Side::Right);
  return both;
}

std::optional<std::vector<fp::Poly>> similarity_certificate(const TModule& v, const TModule& w) {
  if (v.rank != w.rank || v.prime != w.prime)
    fail(ErrorKind::RankMismatch, "T-modules of rank " + std::to_string(v.rank) + " over F_" + std::to_string(v.prime) +
                                      " and rank " + std::to_string(w.rank) + " over F_" + std::to_string(w.prime));
  auto fv = fp::invariant_factors(v.plus, v.prime);
  auto fw = fp::invariant_factors(w.plus, w.prime);
  if (fv != fw) return std::nullopt;
  return fv;
}

std::string render_poly(const fp::Poly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t k = f.size(); k > 0; --k) {
    int c = f[k - 1];
    if (!c) continue;
    std::size_t e = k - 1;
    if (!out.empty()) out += " + ";
    if (c != 1 || e == 0) out += std::to_string(c);
    if (e > 0) out += e == 1 ? "T" : "T^" + std::to_string(e);
  }
  return out;
}

std::optional<IsoWitness> modules_isomorphic(const Presentation& pres, const Signs& signs, const ModuleSpec& lhs,
                                             const ModuleSpec& rhs) {
  if (lhs.kind != rhs.kind) return std::nullopt;
  if (lhs.kind == ModuleSpec::Kind::String) {
    auto a = classify_word(pres, signs, lhs.word), b = classify_word(pres, signs, rhs.word);
    if (a.kind != Classification::Kind::StringWord || b.kind != Classification::Kind::StringWord) return std::nullopt;
    auto eq = words_equivalent(lhs.word, rhs.word);
    if (!eq) return std::nullopt;
    return IsoWitness{eq->shift, eq->inverted, {}};
  }
  if (!lhs.v || !rhs.v) fail(ErrorKind::Parse, "band modules need a T-module");
  if (lhs.v->rank != rhs.v->rank || lhs.v->prime != rhs.v->prime) return std::nullopt;
  auto a = classify_word(pres, signs, lhs.word), b = classify_word(pres, signs, rhs.word);
  if (a.kind != Classification::Kind::BandWord || b.kind != Classification::Kind::BandWord) return std::nullopt;
  if (auto n = shift_between(lhs.word, rhs.word))
    if (auto cert = similarity_certificate(*lhs.v, *rhs.v)) return IsoWitness{*n, false, *cert};
  if (auto n = shift_between(invert(lhs.word), rhs.word))
    if (auto cert = similarity_certificate(*lhs.v, res(*rhs.v))) return IsoWitness{*n, true, *cert};
  return std::nullopt;
}

}  // namespace gentle
