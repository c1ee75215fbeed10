#include "gentle/oracle.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gentle {

std::size_t ExpandedAlgebra::find(const Path& p) const {
  if (p.trivial()) return trivial_index.at(static_cast<std::size_t>(p.vertex));
  auto it = index.find(p.arrows);
  if (it == index.end()) fail(ErrorKind::Internal, "path missing from the expanded basis");
  return it->second;
}

ExpandedAlgebra expand_algebra(const Presentation& pres, int prime) {
  if (!fp::is_prime(prime)) fail(ErrorKind::Parse, std::to_string(prime) + " is not a prime");
  auto cycles = primitive_cycles(pres);
  if (!cycles.empty()) {
    std::string list;
    for (const Path& c : cycles) list += (list.empty() ? "" : ", ") + render_path(pres, c, PathStyle::Joined);
    fail(ErrorKind::InfiniteDimensional, "primitive cycles {" + list + "}");
  }
  ExpandedAlgebra alg;
  alg.prime = prime;
  alg.by_tail.resize(static_cast<std::size_t>(pres.num_vertices()));
  for (int v = 0; v < pres.num_vertices(); ++v) {
    alg.trivial_index.push_back(alg.basis.size());
    alg.by_tail[static_cast<std::size_t>(v)].push_back(alg.basis.size());
    alg.basis.push_back(trivial_path(v));
  }
  for (const Path& p : enumerate_P(pres, pres.num_arrows()).paths) {
    alg.index[p.arrows] = alg.basis.size();
    alg.by_tail[static_cast<std::size_t>(path_tail(pres, p))].push_back(alg.basis.size());
    alg.basis.push_back(p);
  }
  return alg;
}

std::vector<long> ExpandedModule::dimension_vector(int vertices) const {
  std::vector<long> out(static_cast<std::size_t>(vertices), 0);
  for (std::size_t q : quotient) ++out[static_cast<std::size_t>(ambient_vertex[q])];
  return out;
}

namespace {

using Ambient = std::vector<std::pair<int, std::size_t>>;

Ambient ambient_basis(const ExpandedAlgebra& alg, const ModulePresentation& m) {
  Ambient out;
  for (std::size_t j = 0; j < m.generators.size(); ++j) {
    const int v = m.generators[j].vertex;
    if (v < 0 || static_cast<std::size_t>(v) >= alg.by_tail.size())
      fail(ErrorKind::VertexUnknown, "generator " + m.generators[j].label + " sits at an unknown vertex");
    for (std::size_t b : alg.by_tail[static_cast<std::size_t>(v)]) out.push_back({static_cast<int>(j), b});
  }
  return out;
}

std::map<std::pair<int, std::size_t>, std::size_t> ambient_lookup(const Ambient& a) {
  std::map<std::pair<int, std::size_t>, std::size_t> out;
  for (std::size_t k = 0; k < a.size(); ++k) out[a[k]] = k;
  return out;
}

void check_prime(int declared, int prime) {
  if (declared != 0 && declared != prime)
    fail(ErrorKind::RankMismatch, "coefficients over F_" + std::to_string(declared) + " used over F_" +
                                      std::to_string(prime));
}

// Reduces an ambient vector modulo the echelon rows and returns its quotient coordinates.
std::vector<int> reduce_to_quotient(const ExpandedModule& e, std::vector<int> v) {
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    const int c = v[e.pivots[r]];
    if (!c) continue;
    for (std::size_t k = 0; k < v.size(); ++k)
      v[k] = fp::mod(v[k] - static_cast<long>(c) * e.relations[r][k], e.prime);
  }
  std::vector<int> out;
  out.reserve(e.quotient.size());
  for (std::size_t q : e.quotient) out.push_back(v[q]);
  return out;
}

// Matrix of left multiplication by a path on M in quotient coordinates (columns are images).
fp::Mat path_action(const Presentation& pres, const ExpandedAlgebra& alg, const ExpandedModule& e, const Path& path) {
  auto lookup = ambient_lookup(e.ambient);
  fp::Mat out = fp::zeros(e.dim(), e.dim());
  for (std::size_t col = 0; col < e.quotient.size(); ++col) {
    const auto [j, b] = e.ambient[e.quotient[col]];
    auto prod = compose(pres, path, alg.basis[b]);
    if (!prod) continue;
    std::vector<int> v(e.ambient.size(), 0);
    v[lookup.at({j, alg.find(*prod)})] = 1;
    auto q = reduce_to_quotient(e, v);
    for (std::size_t row = 0; row < q.size(); ++row) out[row][col] = q[row];
  }
  return out;
}

std::string join_degrees(const std::vector<long>& ds) {
  std::string s;
  for (long d : ds) s += (s.empty() ? "" : ",") + std::to_string(d);
  return s;
}

}  // namespace

fp::Mat submodule_rows(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                       const Ambient& ambient) {
  auto lookup = ambient_lookup(ambient);
  fp::Mat rows;
  for (const ModuleRelation& r : m.relations) {
    for (const Path& lambda : alg.basis) {
      std::vector<int> v(ambient.size(), 0);
      bool any = false;
      for (const ModuleTerm& t : r.terms) {
        auto prod = compose(pres, lambda, t.path);
        if (!prod) continue;
        const std::size_t k = lookup.at({t.generator, alg.find(*prod)});
        v[k] = fp::mod(v[k] + t.coeff, alg.prime);
        any = true;
      }
      if (any && std::any_of(v.begin(), v.end(), [](int x) { return x != 0; })) rows.push_back(std::move(v));
    }
  }
  return rows;
}

ExpandedModule expand_module(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m) {
  check_prime(m.prime, alg.prime);
  ExpandedModule e;
  e.prime = alg.prime;
  e.ambient = ambient_basis(alg, m);
  for (const auto& [j, b] : e.ambient) e.ambient_vertex.push_back(path_head(pres, alg.basis[b]));
  e.relations = submodule_rows(pres, alg, m, e.ambient);
  for (auto& row : e.relations) row.resize(e.ambient.size(), 0);
  e.pivots = fp::rref(e.relations, alg.prime);
  std::vector<bool> is_pivot(e.ambient.size(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  for (std::size_t k = 0; k < e.ambient.size(); ++k)
    if (!is_pivot[k]) e.quotient.push_back(k);
  return e;
}

std::size_t ExpandedComplex::dim(long n) const {
  auto it = bases.find(n);
  return it == bases.end() ? 0 : it->second.size();
}

fp::Mat ExpandedComplex::matrix(long n) const {
  auto it = d.find(n);
  if (it != d.end()) return it->second;
  return fp::zeros(dim(n + 1), dim(n));
}

ExpandedComplex expand_complex(const Presentation& pres, const ExpandedAlgebra& alg, const PathMatrixComplex& cx) {
  check_prime(cx.prime, alg.prime);
  ExpandedComplex e;
  e.prime = alg.prime;
  e.lo_degree = cx.lo_degree;
  e.hi_degree = cx.hi_degree;
  std::map<long, std::map<std::pair<std::size_t, std::size_t>, std::size_t>> lookup;
  for (long n = cx.lo_degree; n <= cx.hi_degree; ++n) {
    const auto& comp = cx.component(n);
    auto& basis = e.bases[n];
    for (std::size_t s = 0; s < comp.size(); ++s) {
      const int v = comp[s].vertex;
      if (v < 0 || static_cast<std::size_t>(v) >= alg.by_tail.size())
        fail(ErrorKind::VertexUnknown, "complex generator " + comp[s].label + " sits at an unknown vertex");
      for (std::size_t b : alg.by_tail[static_cast<std::size_t>(v)]) {
        lookup[n][{s, b}] = basis.size();
        basis.push_back({s, b});
      }
    }
  }
  for (long n = cx.lo_degree; n < cx.hi_degree; ++n) {
    fp::Mat m = fp::zeros(e.dim(n + 1), e.dim(n));
    auto dn = cx.differentials.find(n);
    if (dn != cx.differentials.end()) {
      const auto& cols = e.bases[n];
      for (std::size_t c = 0; c < cols.size(); ++c) {
        const auto [slot, b] = cols[c];
        for (const auto& [rc, sum] : dn->second) {
          if (rc.second != slot) continue;
          for (const PathTerm& t : sum) {
            auto prod = compose(pres, alg.basis[b], t.path);
            if (!prod) continue;
            const std::size_t r = lookup[n + 1].at({rc.first, alg.find(*prod)});
            m[r][c] = fp::mod(m[r][c] + t.coeff, alg.prime);
          }
        }
      }
    }
    e.d[n] = std::move(m);
  }
  return e;
}

std::map<long, long> homology_report(const ExpandedComplex& e, long from, long to) {
  for (long n = from - 1; n <= to; ++n) {
    fp::Mat a = e.matrix(n), b = e.matrix(n + 1);
    if (a.empty() || b.empty() || e.dim(n) == 0) continue;
    if (!fp::is_zero(fp::multiply(b, a, e.prime)))
      fail(ErrorKind::NotAComplex, "d" + std::to_string(n + 1) + "*d" + std::to_string(n) + " is nonzero");
  }
  std::map<long, long> out;
  for (long n = from; n <= to; ++n) {
    const long dim = static_cast<long>(e.dim(n));
    const long out_rank = static_cast<long>(fp::rank(e.matrix(n), e.prime));
    const long in_rank = static_cast<long>(fp::rank(e.matrix(n - 1), e.prime));
    out[n] = dim - out_rank - in_rank;
  }
  return out;
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check* VerificationReport::first_failure() const {
  for (const Check& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const Check& c : checks) {
    out << "check " << c.name << ": " << (c.pass ? "pass" : "fail");
    if (!c.detail.empty()) out << " " << c.detail;
    out << "\n";
  }
  return out.str();
}

VerificationReport compare_resolution(const Presentation& pres, const ExpandedAlgebra& alg, const PathMatrixComplex& cx,
                                      long t, const ModulePresentation& m, bool whole_complex) {
  VerificationReport rep;
  ExpandedComplex e = expand_complex(pres, alg, cx);

  std::vector<long> bad;
  for (long n = cx.lo_degree; n + 1 < cx.hi_degree; ++n)
    if (!fp::is_zero(fp::multiply(e.matrix(n + 1), e.matrix(n), alg.prime))) bad.push_back(n);
  rep.checks.push_back({"d_squared_zero", bad.empty(), bad.empty() ? "" : "failing at degrees " + join_degrees(bad)});
  if (!bad.empty()) return rep;

  std::vector<long> above;
  for (const auto& [n, comp] : cx.components)
    if (n > t && !comp.empty()) above.push_back(n);
  rep.checks.push_back({"concentrated_at_or_below_t", above.empty(),
                        above.empty() ? "t = " + std::to_string(t) : "generators in degrees " + join_degrees(above)});

  const long from = whole_complex ? cx.lo_degree : cx.lo_degree + 1;
  const long to = whole_complex ? cx.hi_degree : cx.hi_degree - 1;
  auto hom = homology_report(e, from, to);
  std::vector<long> nonzero;
  for (const auto& [n, h] : hom)
    if (n != t && h != 0) nonzero.push_back(n);
  rep.checks.push_back({"homology_vanishes_off_t", nonzero.empty(),
                        nonzero.empty() ? "degrees " + std::to_string(from) + ".." + std::to_string(to)
                                        : "nonzero in degrees " + join_degrees(nonzero)});

  ExpandedModule em = expand_module(pres, alg, m);
  const long ht = hom.count(t) ? hom.at(t) : 0;
  rep.checks.push_back({"top_homology_dimension", ht == static_cast<long>(em.dim()),
                        "dim H^t = " + std::to_string(ht) + ", dim M = " + std::to_string(em.dim())});

  const auto& top = cx.component(t);
  bool shapes = top.size() == m.generators.size();
  for (std::size_t k = 0; shapes && k < top.size(); ++k) shapes = top[k].vertex == m.generators[k].vertex;
  if (!shapes) {
    rep.checks.push_back({"image_equals_relations", false, "generators of P^t and of M do not correspond"});
    return rep;
  }
  // Generator k of P^t corresponds to (-1)^j g_k, j the ordinal of its position among P^t positions.
  std::vector<int> sign(top.size(), 1);
  long ordinal = -1;
  for (std::size_t k = 0; k < top.size(); ++k) {
    if (k == 0 || top[k].index != top[k - 1].index) ++ordinal;
    sign[k] = ordinal % 2 ? alg.prime - 1 : 1;
  }
  const Ambient ambient = ambient_basis(alg, m);
  auto lookup = ambient_lookup(ambient);
  fp::Mat image;
  fp::Mat d = e.matrix(t - 1);
  const auto& rows = e.bases[t];
  for (std::size_t c = 0; c < e.dim(t - 1); ++c) {
    std::vector<int> v(ambient.size(), 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!d[r][c]) continue;
      const auto [slot, b] = rows[r];
      const std::size_t k = lookup.at({static_cast<int>(slot), b});
      v[k] = fp::mod(static_cast<long>(d[r][c]) * sign[slot], alg.prime);
    }
    image.push_back(std::move(v));
  }
  fp::Mat l = submodule_rows(pres, alg, m, ambient);
  const std::size_t ri = fp::rank(image, alg.prime), rl = fp::rank(l, alg.prime);
  bool same = ri == rl && (rl == 0 || fp::row_space_contains(l, image, alg.prime));
  rep.checks.push_back({"image_equals_relations", same,
                        "rank im d^(t-1) = " + std::to_string(ri) + ", rank L = " + std::to_string(rl)});
  return rep;
}

VerificationReport verify_string_resolution(const Presentation& pres, const Signs& signs, const ExpandedAlgebra& alg,
                                            const Word& c) {
  StringResolution res = resolution_of_string(pres, signs, c);
  const long t = res.degree;
  const bool finite = res.word.shape == Shape::Finite;
  PathMatrixComplex cx = finite ? string_complex(pres, res.word) : string_complex(pres, res.word, DegreeWindow{t - 3, t + 1});
  ModulePresentation m = over_prime(string_module(pres, signs, c), alg.prime);
  return compare_resolution(pres, alg, cx, t, m, finite);
}

VerificationReport verify_band_resolution(const Presentation& pres, const Signs& signs, const ExpandedAlgebra& alg,
                                          const Word& c, const TModule& v, const TModule* module_v) {
  if (v.prime != alg.prime) fail(ErrorKind::RankMismatch, "T-module prime differs from the oracle prime");
  GenWord g = resolution_of_band(pres, signs, c);
  PathMatrixComplex cx = band_complex(pres, g, v);
  VerificationReport rep;
  std::vector<long> degrees;
  for (const auto& [n, comp] : cx.components)
    if (!comp.empty()) degrees.push_back(n);
  const bool two = degrees == std::vector<long>{-1, 0};
  rep.checks.push_back({"two_adjacent_degrees", two, "populated degrees " + join_degrees(degrees)});
  ExpandedComplex e = expand_complex(pres, alg, cx);
  const std::size_t rk = fp::rank(e.matrix(-1), alg.prime);
  rep.checks.push_back({"d_minus_one_injective", rk == e.dim(-1),
                        "rank " + std::to_string(rk) + " of " + std::to_string(e.dim(-1)) + " columns"});
  ModulePresentation m = band_module(pres, signs, c, module_v ? *module_v : v);
  VerificationReport cmp = compare_resolution(pres, alg, cx, 0, m, true);
  rep.checks.insert(rep.checks.end(), cmp.checks.begin(), cmp.checks.end());
  return rep;
}

bool brute_force_equivalence(const Word& c, const Word& e, long shift_bound) {
  std::vector<Word> candidates{c, invert(c)};
  for (const Word& x : candidates) {
    if (x.shape != e.shape) continue;
    switch (x.shape) {
      case Shape::Finite: {
        if (x.trivial() || e.trivial()) {
          if (x.trivial() && e.trivial() && x.vertex == e.vertex && x.delta == e.delta) return true;
          continue;
        }
        if (x.length() != e.length()) continue;
        bool same = true;
        for (long i = 1; i <= x.length() && same; ++i) same = x.letter(i) == e.letter(i);
        if (same) return true;
        continue;
      }
      case Shape::Right:
      case Shape::Left: {
        const long span = shift_bound + x.length() + e.length() +
                          2 * static_cast<long>(x.left.size() + x.right.size() + e.left.size() + e.right.size()) + 2;
        bool same = true;
        for (long k = 0; k < span && same; ++k) {
          const long i = x.shape == Shape::Right ? k + 1 : -k;
          same = x.letter(i) == e.letter(i);
        }
        if (same) return true;
        continue;
      }
      case Shape::Bi: {
        const long reach = std::labs(x.start) + std::labs(e.start) + x.length() + e.length() +
                           2 * static_cast<long>(x.left.size() + x.right.size() + e.left.size() + e.right.size()) + 2;
        for (long n = -shift_bound; n <= shift_bound; ++n) {
          bool same = true;
          for (long i = -reach - std::labs(n); i <= reach + std::labs(n) && same; ++i) same = x.letter(i + n) == e.letter(i);
          if (same) return true;
        }
        continue;
      }
      case Shape::Periodic: {
        const long span = x.period() * e.period();
        for (long n = 0; n < x.period(); ++n) {
          bool same = true;
          for (long i = 1; i <= span && same; ++i) same = x.letter(i + n) == e.letter(i);
          if (same) return true;
        }
        continue;
      }
    }
  }
  return false;
}

fp::Mat arrow_action(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                     const ExpandedModule& e, int arrow) {
  (void)m;
  return path_action(pres, alg, e, arrow_path(pres, arrow));
}

long hom_dimension(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& x,
                   const ModulePresentation& m) {
  ExpandedModule em = expand_module(pres, alg, m);
  // Unknowns: the image of generator j of X, a vector of e_{u_j} M.
  std::vector<std::vector<std::size_t>> slots(x.generators.size());
  std::size_t unknowns = 0;
  std::vector<std::size_t> offset(x.generators.size());
  for (std::size_t j = 0; j < x.generators.size(); ++j) {
    offset[j] = unknowns;
    for (std::size_t q = 0; q < em.quotient.size(); ++q)
      if (em.ambient_vertex[em.quotient[q]] == x.generators[j].vertex) slots[j].push_back(q);
    unknowns += slots[j].size();
  }
  if (unknowns == 0) return 0;
  std::map<std::vector<int>, fp::Mat> actions;
  fp::Mat eqs;
  for (const ModuleRelation& r : x.relations) {
    fp::Mat block = fp::zeros(em.dim(), unknowns);
    for (const ModuleTerm& t : r.terms) {
      auto it = actions.find(t.path.arrows);
      if (it == actions.end()) it = actions.emplace(t.path.arrows, path_action(pres, alg, em, t.path)).first;
      const fp::Mat& a = it->second;
      const std::size_t j = static_cast<std::size_t>(t.generator);
      for (std::size_t s = 0; s < slots[j].size(); ++s)
        for (std::size_t row = 0; row < em.dim(); ++row)
          if (a[row][slots[j][s]])
            block[row][offset[j] + s] =
                fp::mod(block[row][offset[j] + s] + t.coeff * a[row][slots[j][s]], alg.prime);
    }
    eqs.insert(eqs.end(), block.begin(), block.end());
  }
  return static_cast<long>(unknowns) - static_cast<long>(fp::rank(eqs, alg.prime));
}

Fingerprint& Fingerprint::operator+=(const Fingerprint& o) {
  dim += o.dim;
  if (by_vertex.size() < o.by_vertex.size()) by_vertex.resize(o.by_vertex.size(), 0);
  for (std::size_t k = 0; k < o.by_vertex.size(); ++k) by_vertex[k] += o.by_vertex[k];
  if (homs.size() < o.homs.size()) homs.resize(o.homs.size(), 0);
  for (std::size_t k = 0; k < o.homs.size(); ++k) homs[k] += o.homs[k];
  return *this;
}

Fingerprint fingerprint(const Presentation& pres, const ExpandedAlgebra& alg, const ModulePresentation& m,
                        const std::vector<ModulePresentation>& family) {
  ModulePresentation mm = over_prime(m, alg.prime);
  ExpandedModule e = expand_module(pres, alg, mm);
  Fingerprint f;
  f.dim = static_cast<long>(e.dim());
  f.by_vertex = e.dimension_vector(pres.num_vertices());
  for (const ModulePresentation& x : family) f.homs.push_back(hom_dimension(pres, alg, over_prime(x, alg.prime), mm));
  return f;
}

ModulePresentation over_prime(const ModulePresentation& m, int prime) {
  check_prime(m.prime, prime);
  ModulePresentation out = m;
  out.prime = prime;
  for (auto& r : out.relations)
    for (auto& t : r.terms) t.coeff = fp::mod(t.coeff, prime);
  return out;
}

}  // namespace gentle
