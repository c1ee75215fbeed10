#include "gentle/complexes.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace gentle {

const std::vector<ComplexGenerator>& PathMatrixComplex::component(long n) const {
  static const std::vector<ComplexGenerator> empty;
  auto it = components.find(n);
  return it == components.end() ? empty : it->second;
}

PathSum PathMatrixComplex::entry(long n, std::size_t row, std::size_t col) const {
  auto it = differentials.find(n);
  if (it == differentials.end()) return {};
  auto e = it->second.find({row, col});
  return e == it->second.end() ? PathSum{} : e->second;
}

namespace {

long normalize_coeff(long c, int prime) { return prime ? fp::mod(c, prime) : c; }

void add_term(PathSum& sum, const PathTerm& t, int prime) {
  for (auto it = sum.begin(); it != sum.end(); ++it) {
    if (it->path == t.path) {
      it->coeff = normalize_coeff(it->coeff + t.coeff, prime);
      if (it->coeff == 0) sum.erase(it);
      return;
    }
  }
  long c = normalize_coeff(t.coeff, prime);
  if (c != 0) sum.push_back({c, t.path});
}

void add_entry(PathMatrixComplex& cx, long n, std::size_t row, std::size_t col, const PathTerm& t) {
  auto& m = cx.differentials[n];
  PathSum& s = m[{row, col}];
  add_term(s, t, cx.prime);
  if (s.empty()) m.erase({row, col});
}

}  // namespace

std::vector<long> window_positions(const GenWord& g, long lo_degree, long hi_degree) {
  long s = 0, e = 0;
  const long c = g.length();
  if (g.shape == Shape::Finite) {
    s = 0;
    e = c;
  } else {
    long core_lo = 0, core_hi = 0;
    switch (g.shape) {
      case Shape::Right: core_lo = 0; core_hi = c; break;
      case Shape::Left: core_lo = -c; core_hi = 0; break;
      case Shape::Bi: core_lo = std::min(g.start, 0L); core_hi = std::max(g.start + c, 0L); break;
      default: fail(ErrorKind::PeriodicInput, "periodic generalised words give band complexes");
    }
    long maxabs = 0;
    for (long i = core_lo; i <= core_hi; ++i) maxabs = std::max(maxabs, std::labs(hdeg(g, i)));
    const long tails = static_cast<long>(g.left.size() + g.right.size());
    const long extra = (maxabs + std::labs(lo_degree) + std::labs(hi_degree) + 2) * std::max(1L, tails) + tails;
    s = g.bounded_below() ? 0 : core_lo - extra;
    e = g.bounded_above() ? g.hi() : core_hi + extra;
  }
  std::vector<long> out;
  long h = hdeg(g, s);
  for (long i = s; i <= e; ++i) {
    if (i > s) h += gen_degree(g.letter(i));
    if (h >= lo_degree && h <= hi_degree) out.push_back(i);
  }
  return out;
}

PathMatrixComplex string_complex(const Presentation& pres, const GenWord& g, std::optional<DegreeWindow> window) {
  if (g.shape == Shape::Periodic) fail(ErrorKind::PeriodicInput, "periodic generalised words give band complexes");
  if (!window) {
    if (g.shape != Shape::Finite) fail(ErrorKind::WindowRequired, "infinite generalised words need a degree window");
    long lo = 0, hi = 0;
    for (long i = 0; i <= g.hi(); ++i) {
      long h = hdeg(g, i);
      lo = std::min(lo, h);
      hi = std::max(hi, h);
    }
    window = DegreeWindow{lo, hi};
  }
  if (window->first > window->second) fail(ErrorKind::Parse, "empty degree window");
  PathMatrixComplex cx;
  cx.lo_degree = window->first;
  cx.hi_degree = window->second;
  std::map<long, std::pair<long, std::size_t>> where;  // position -> (degree, slot)
  for (long i : window_positions(g, cx.lo_degree, cx.hi_degree)) {
    long n = hdeg(g, i);
    auto& comp = cx.components[n];
    where[i] = {n, comp.size()};
    comp.push_back({"g" + std::to_string(i), gen_vertex(pres, g, i), i, 0});
  }
  for (const auto& [i, loc] : where) {
    const auto [n, col] = loc;
    if (n + 1 > cx.hi_degree) continue;
    if (g.has_letter(i + 1) && g.letter(i + 1).inv) {
      auto r = where.find(i + 1);
      if (r != where.end()) add_entry(cx, n, r->second.second, col, {1, g.letter(i + 1).path});
    }
    if (g.has_letter(i) && !g.letter(i).inv) {
      auto r = where.find(i - 1);
      if (r != where.end()) add_entry(cx, n, r->second.second, col, {1, g.letter(i).path});
    }
  }
  return cx;
}

PathMatrixComplex band_complex(const Presentation& pres, const GenWord& g, const TModule& v) {
  if (g.shape != Shape::Periodic) fail(ErrorKind::NotCyclic, "band complexes need a periodic generalised word");
  if (cycle_degree(g) != 0) fail(ErrorKind::NotCyclic, "cycle has nonzero total degree");
  if (auto inv = fp::inverse(v.plus, v.prime); !inv || *inv != v.minus)
    fail(ErrorKind::SingularMatrix, "T-module matrix and inverse do not match");
  const long p = g.period();
  const int r = v.rank;
  PathMatrixComplex cx;
  cx.prime = v.prime;
  cx.period = p;
  std::vector<long> h(static_cast<std::size_t>(p));
  std::vector<std::size_t> slot(static_cast<std::size_t>(p));
  cx.lo_degree = 0;
  cx.hi_degree = 0;
  for (long i = 0; i < p; ++i) {
    h[i] = hdeg(g, i);
    cx.lo_degree = std::min(cx.lo_degree, h[i]);
    cx.hi_degree = std::max(cx.hi_degree, h[i]);
  }
  for (long i = 0; i < p; ++i) {
    auto& comp = cx.components[h[i]];
    slot[i] = comp.size();
    for (int w = 0; w < r; ++w) {
      std::string label = "g" + std::to_string(i);
      if (r > 1) label += "." + std::to_string(w + 1);
      comp.push_back({label, gen_vertex(pres, g, i), i, w});
    }
  }
  auto at = [&](long i, int w) { return slot[i] + static_cast<std::size_t>(w); };
  for (long i = 0; i < p; ++i) {
    const long n = h[i];
    const GenLetter& next = g.letter(i + 1);
    const GenLetter& here = g.letter(i);
    for (int w = 0; w < r; ++w) {
      if (next.inv) {
        if (i + 1 < p) {
          add_entry(cx, n, at(i + 1, w), at(i, w), {1, next.path});
        } else {
          for (int t = 0; t < r; ++t)
            if (long a = v.minus[t][w]) add_entry(cx, n, at(0, t), at(i, w), {a, next.path});
        }
      }
      if (!here.inv) {
        if (i > 0) {
          add_entry(cx, n, at(i - 1, w), at(i, w), {1, here.path});
        } else {
          for (int t = 0; t < r; ++t)
            if (long a = v.plus[t][w]) add_entry(cx, n, at(p - 1, t), at(i, w), {a, here.path});
        }
      }
    }
  }
  return cx;
}

bool composes_to_zero(const Presentation& pres, const PathMatrixComplex& cx, std::string* where) {
  for (const auto& [n, dn] : cx.differentials) {
    auto next = cx.differentials.find(n + 1);
    if (next == cx.differentials.end()) continue;
    std::map<std::pair<std::size_t, std::size_t>, PathSum> prod;
    for (const auto& [rc1, s1] : dn)
      for (const auto& [rc2, s2] : next->second) {
        if (rc2.second != rc1.first) continue;
        for (const auto& t1 : s1)
          for (const auto& t2 : s2)
            if (auto q = compose(pres, t1.path, t2.path))
              add_term(prod[{rc2.first, rc1.second}], {t1.coeff * t2.coeff, *q}, cx.prime);
      }
    for (const auto& [rc, s] : prod)
      if (!s.empty()) {
        if (where)
          *where = "d" + std::to_string(n + 1) + "*d" + std::to_string(n) + " is nonzero at [" +
                   std::to_string(rc.first) + "," + std::to_string(rc.second) + "]";
        return false;
      }
  }
  return true;
}

std::string render_complex(const Presentation& pres, const PathMatrixComplex& cx) {
  std::ostringstream out;
  for (const auto& [n, comp] : cx.components) {
    out << "deg " << n << ":";
    for (const auto& g : comp) out << " " << pres.vertex_name(g.vertex);
    out << "\n";
  }
  for (const auto& [n, dn] : cx.differentials)
    for (const auto& [rc, s] : dn) {
      out << "d" << n << "[" << rc.first << "," << rc.second << "] = ";
      for (std::size_t k = 0; k < s.size(); ++k)
        out << (k ? " + " : "") << s[k].coeff << "*" << render_path(pres, s[k].path, PathStyle::Joined);
      out << "\n";
    }
  return out.str();
}

KernelEntry kernel_at(const Presentation& pres, const GenWord& g, long i) {
  if (g.shape == Shape::Periodic) fail(ErrorKind::PeriodicInput, "kernel formula applies to string complexes");
  KernelEntry k;
  k.index = i;
  k.vertex = gen_vertex(pres, g, i);
  const bool has_left = g.has_letter(i), has_right = g.has_letter(i + 1);
  const GenLetter* l = has_left ? &g.letter(i) : nullptr;
  const GenLetter* r = has_right ? &g.letter(i + 1) : nullptr;
  auto arrow = [&](std::optional<int> a) {
    if (a) {
      k.kind = KernelEntry::Kind::Arrow;
      k.arrow = *a;
    }
    return k;
  };
  if ((!l || l->inv) && (!r || !r->inv)) {
    k.kind = KernelEntry::Kind::Trivial;
    return k;
  }
  if (l && r && l->inv && r->inv) return arrow(first_arrow(l->path));
  if (l && r && !l->inv && !r->inv) return arrow(first_arrow(r->path));
  if (!l && r && r->inv) return arrow(pres.relation_after(last_arrow(r->path)));
  if (!r && l && !l->inv) return arrow(pres.relation_after(last_arrow(l->path)));
  return k;
}

std::vector<KernelEntry> kernel_generators(const Presentation& pres, const GenWord& g, long n) {
  if (g.shape == Shape::Periodic) fail(ErrorKind::PeriodicInput, "kernel formula applies to string complexes");
  std::vector<KernelEntry> out;
  for (long i : window_positions(g, n, n)) out.push_back(kernel_at(pres, g, i));
  return out;
}

std::string render_kernel_entry(const Presentation& pres, const KernelEntry& k) {
  switch (k.kind) {
    case KernelEntry::Kind::Trivial: return "e_" + pres.vertex_name(k.vertex);
    case KernelEntry::Kind::Arrow: return pres.arrow_name(k.arrow);
    case KernelEntry::Kind::Zero: return "0";
  }
  return "?";
}

ResolutionVerdict recognize_resolution(const Presentation& pres, const Signs& signs, const GenWord& g) {
  ResolutionVerdict v;
  if (g.shape == Shape::Periodic) {
    if (cycle_degree(g) != 0) {
      v.reason = "cycle has nonzero total degree";
      return v;
    }
    if (is_alternating_letters(g.core)) {
      v.kind = ResolutionVerdict::Kind::BandResolutionAt;
      return v;
    }
    if (is_alternating_letters(rotate_left(g.core, -1))) {
      v.kind = ResolutionVerdict::Kind::BandResolutionAt;
      v.shift = -1;
      v.degree = hdeg(g, -1);
      return v;
    }
    for (long i = 1; i <= g.period(); ++i)
      if (g.letter(i).inv == g.letter(i + 1).inv) {
        v.reason = "letters " + std::to_string(i) + " and " + std::to_string(i + 1) + " have the same direction";
        break;
      }
    return v;
  }
  long n = 0;
  if (g.shape == Shape::Bi)
    if (auto lo = iota_minus(g)) n = *lo;
  GenWord h = shift(g, n);
  std::string why;
  if (auto d = is_string_resolution(pres, signs, h, &why)) {
    v.kind = ResolutionVerdict::Kind::StringResolutionAt;
    v.shift = n;
    v.degree = hdeg(g, g.shape == Shape::Bi ? n : d->lo);
    return v;
  }
  v.reason = why;
  return v;
}

std::string render_verdict(const ResolutionVerdict& v) {
  switch (v.kind) {
    case ResolutionVerdict::Kind::StringResolutionAt:
      return "StringResolutionAt(" + std::to_string(v.shift) + ", " + std::to_string(v.degree) + ")";
    case ResolutionVerdict::Kind::BandResolutionAt:
      return "BandResolutionAt(" + std::to_string(v.shift) + ", " + std::to_string(v.degree) + ")";
    case ResolutionVerdict::Kind::NotAResolution: return "NotAResolution(" + v.reason + ")";
  }
  return "?";
}

}  // namespace gentle
