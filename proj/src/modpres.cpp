#include "gentle/modpres.hpp"

#include <fstream>
#include <sstream>

namespace gentle {

TModule make_tmodule(int prime, const fp::Mat& matrix) {
  if (!fp::is_prime(prime)) fail(ErrorKind::Parse, std::to_string(prime) + " is not a prime");
  const std::size_t n = matrix.size();
  if (n == 0) fail(ErrorKind::Parse, "T-module of rank 0");
  TModule v;
  v.prime = prime;
  v.rank = static_cast<int>(n);
  v.plus = fp::zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) fail(ErrorKind::Parse, "matrix is not square");
    for (std::size_t j = 0; j < n; ++j) v.plus[i][j] = fp::mod(matrix[i][j], prime);
  }
  auto inv = fp::inverse(v.plus, prime);
  if (!inv) fail(ErrorKind::SingularMatrix, "T-action matrix is not invertible over F_" + std::to_string(prime));
  v.minus = *inv;
  return v;
}

TModule identity_tmodule(int prime, int rank) { return make_tmodule(prime, fp::identity(static_cast<std::size_t>(rank))); }

TModule res(const TModule& v) {
  TModule r = v;
  std::swap(r.plus, r.minus);
  return r;
}

TModule parse_tmodule(const std::string& text) {
  std::istringstream in(text);
  std::string kp, kn;
  long p = 0, n = 0;
  if (!(in >> kp >> p >> kn >> n) || kp != "p" || kn != "n")
    fail(ErrorKind::Parse, "matrix file must start with `p <prime> n <rank>`");
  if (n < 1) fail(ErrorKind::Parse, "rank must be positive");
  fp::Mat m = fp::zeros(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) {
      long x;
      if (!(in >> x)) fail(ErrorKind::Parse, "matrix file has fewer than n*n entries");
      m[i][j] = static_cast<int>(x % static_cast<long>(p));
    }
  std::string extra;
  if (in >> extra) fail(ErrorKind::Parse, "unexpected trailing entry '" + extra + "' in matrix file");
  return make_tmodule(static_cast<int>(p), m);
}

TModule load_tmodule(const std::string& file_path) {
  std::ifstream in(file_path);
  if (!in) fail(ErrorKind::Parse, "cannot open matrix file " + file_path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_tmodule(ss.str());
}

std::string render_tmodule(const TModule& v) {
  std::ostringstream out;
  out << "p " << v.prime << " n " << v.rank << "\n";
  for (const auto& row : v.plus) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
  return out.str();
}

namespace {

Path letters_path(const Presentation& pres, int first, const std::vector<Letter>& direct) {
  Path p;
  p.arrows.push_back(first);
  for (const Letter& l : direct) p.arrows.push_back(l.arrow);
  p.vertex = pres.arrow(first).head;
  return p;
}

}  // namespace

ModulePresentation string_module(const Presentation& pres, const Signs& signs, const Word& c) {
  Classification cl = classify_word(pres, signs, c);
  if (cl.kind != Classification::Kind::StringWord)
    fail(ErrorKind::NotAStringWord, std::string("word is classified as ") + classification_name(cl.kind));
  const Word& w = cl.normalized;
  const StringDecomposition& dec = cl.decomposition;
  ModulePresentation m;
  const std::size_t d = dec.peaks.size() - 1;
  for (std::size_t i = 0; i <= d; ++i)
    m.generators.push_back({"g" + std::to_string(i), word_vertex(pres, w, dec.peaks[i])});
  if (w.bounded_below()) {
    Word b_inv = invert(dec.B);
    if (auto a = left_arrow_extension(pres, signs, b_inv))
      m.relations.push_back({{{1, letters_path(pres, *a, b_inv.core), 0}}});
  }
  for (std::size_t i = 0; i < dec.pairs.size(); ++i)
    m.relations.push_back({{{1, dec.pairs[i].gamma, static_cast<int>(i)},
                            {-1, dec.pairs[i].sigma, static_cast<int>(i + 1)}}});
  if (w.bounded_above()) {
    if (auto z = right_arrow_extension(pres, signs, dec.D))
      m.relations.push_back({{{1, letters_path(pres, *z, inverse_letters(dec.D.core)), static_cast<int>(d)}}});
  }
  return m;
}

ModulePresentation band_module(const Presentation& pres, const Signs& signs, const Word& c, const TModule& v) {
  Classification cl = classify_word(pres, signs, c);
  if (cl.kind != Classification::Kind::BandWord)
    fail(ErrorKind::NotABandWord, std::string("word is classified as ") + classification_name(cl.kind));
  auto pairs = alternating_pairs(pres, cl.normalized.core);
  if (!pairs) fail(ErrorKind::NotABandWord, "cycle is not alternating");
  const int n = static_cast<int>(pairs->size());
  const int r = v.rank;
  const int p = v.prime;
  ModulePresentation m;
  m.prime = p;
  auto gen = [&](int i, int omega) { return i * r + omega; };
  for (int i = 0; i < n; ++i) {
    const int vertex = path_tail(pres, (*pairs)[static_cast<std::size_t>(i)].gamma);
    for (int omega = 0; omega < r; ++omega) {
      std::string label = "g" + std::to_string(i);
      if (r > 1) label += "." + std::to_string(omega + 1);
      m.generators.push_back({label, vertex});
    }
  }
  for (int i = 0; i + 1 < n; ++i)
    for (int omega = 0; omega < r; ++omega)
      m.relations.push_back({{{1, (*pairs)[static_cast<std::size_t>(i)].gamma, gen(i, omega)},
                              {p - 1, (*pairs)[static_cast<std::size_t>(i)].sigma, gen(i + 1, omega)}}});
  const AlternatingPair& last = pairs->back();
  for (int omega = 0; omega < r; ++omega) {
    ModuleRelation rel;
    rel.terms.push_back({1, last.gamma, gen(n - 1, omega)});
    for (int tau = 0; tau < r; ++tau) {
      int a = v.minus[static_cast<std::size_t>(tau)][static_cast<std::size_t>(omega)];
      if (a) rel.terms.push_back({fp::mod(-a, p), last.sigma, gen(0, tau)});
    }
    m.relations.push_back(rel);
  }
  return m;
}

std::string render_module(const Presentation& pres, const ModulePresentation& m) {
  std::ostringstream out;
  for (const auto& g : m.generators) out << "gen " << g.label << " @ " << pres.vertex_name(g.vertex) << "\n";
  for (const auto& r : m.relations) {
    out << "rel ";
    for (std::size_t k = 0; k < r.terms.size(); ++k) {
      const ModuleTerm& t = r.terms[k];
      out << (k ? " + " : "") << t.coeff << "*" << render_path(pres, t.path, PathStyle::Joined) << "*"
          << m.generators[static_cast<std::size_t>(t.generator)].label;
    }
    out << "\n";
  }
  return out.str();
}

std::string render_relation(const Presentation& pres, const ModulePresentation& m, const ModuleRelation& r) {
  std::string out;
  for (std::size_t k = 0; k < r.terms.size(); ++k) {
    const ModuleTerm& t = r.terms[k];
    long c = t.coeff;
    if (m.prime && c > m.prime / 2) c -= m.prime;
    if (k == 0) out += c < 0 ? "-" : "";
    else out += c < 0 ? " - " : " + ";
    long a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += render_path(pres, t.path, PathStyle::Compact) + " " + m.generators[static_cast<std::size_t>(t.generator)].label;
  }
  return out;
}

}  // namespace gentle
