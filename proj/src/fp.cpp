#include "gentle/fp.hpp"

#include <algorithm>

#include "gentle/error.hpp"

namespace gentle::fp {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int mod(long a, int p) {
  long r = a % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse(int a, int p) {
  a = mod(a, p);
  if (a == 0) fail(ErrorKind::SingularMatrix, "division by zero in F_" + std::to_string(p));
  long result = 1, base = a;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

Mat zeros(std::size_t rows, std::size_t cols) { return Mat(rows, std::vector<int>(cols, 0)); }

Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat multiply(const Mat& a, const Mat& b, int p) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  Mat c = zeros(a.size(), cols);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      int x = a[i][k];
      if (!x) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] = static_cast<int>((c[i][j] + static_cast<long>(x) * b[k][j]) % p);
    }
  return c;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t = zeros(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

bool is_zero(const Mat& a) {
  for (const auto& row : a)
    for (int x : row)
      if (x) return false;
  return true;
}

std::vector<std::size_t> rref(Mat& a, int p) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    int s = inverse(a[r][c], p);
    for (std::size_t j = c; j < cols; ++j) a[r][j] = static_cast<int>(static_cast<long>(a[r][j]) * s % p);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      long f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod(a[i][j] - f * a[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  return pivots;
}

std::size_t rank(Mat a, int p) { return rref(a, p).size(); }

std::optional<Mat> inverse(const Mat& a, int p) {
  const std::size_t n = a.size();
  Mat aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = mod(a[i][j], p);
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug, p);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Mat nullspace(const Mat& a, std::size_t cols, int p) {
  Mat r = a;
  for (auto& row : r) row.resize(cols, 0);
  auto piv = rref(r, p);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv) is_piv[c] = true;
  Mat basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    std::vector<int> v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = mod(-static_cast<long>(r[i][f]), p);
    basis.push_back(v);
  }
  return basis;
}

bool row_space_contains(const Mat& a, const Mat& b, int p) {
  Mat both = a;
  both.insert(both.end(), b.begin(), b.end());
  return rank(a, p) == rank(both, p);
}

bool same_row_space(const Mat& a, const Mat& b, int p) {
  return rank(a, p) == rank(b, p) && row_space_contains(a, b, p);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly poly_sub(const Poly& f, const Poly& g, int p) {
  Poly r(std::max(f.size(), g.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    long x = i < f.size() ? f[i] : 0, y = i < g.size() ? g[i] : 0;
    r[i] = mod(x - y, p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& f, const Poly& g, int p) {
  if (f.empty() || g.empty()) return {};
  Poly r(f.size() + g.size() - 1, 0);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) r[i + j] = mod(r[i + j] + static_cast<long>(f[i]) * g[j], p);
  trim(r);
  return r;
}

void poly_divmod(const Poly& f, const Poly& g, int p, Poly& q, Poly& r) {
  if (g.empty()) fail(ErrorKind::Internal, "polynomial division by zero");
  r = f;
  trim(r);
  q.assign(r.size() >= g.size() ? r.size() - g.size() + 1 : 0, 0);
  int lead_inv = inverse(g.back(), p);
  while (!r.empty() && r.size() >= g.size()) {
    std::size_t shift = r.size() - g.size();
    int c = static_cast<int>(static_cast<long>(r.back()) * lead_inv % p);
    q[shift] = c;
    for (std::size_t i = 0; i < g.size(); ++i) r[shift + i] = mod(r[shift + i] - static_cast<long>(c) * g[i], p);
    trim(r);
  }
  trim(q);
}

Poly monic(const Poly& f, int p) {
  Poly r = f;
  trim(r);
  if (r.empty()) return r;
  int s = inverse(r.back(), p);
  for (auto& x : r) x = static_cast<int>(static_cast<long>(x) * s % p);
  return r;
}

std::vector<Poly> invariant_factors(const Mat& a, int p) {
  const std::size_t n = a.size();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Poly e{mod(-static_cast<long>(a[i][j]), p)};
      if (i == j) e = Poly{e[0], 1};
      trim(e);
      m[i][j] = e;
    }
  auto row_op = [&](std::size_t dst, std::size_t src, const Poly& f) {  // row dst -= f * row src
    for (std::size_t j = 0; j < n; ++j) m[dst][j] = poly_sub(m[dst][j], poly_mul(f, m[src][j], p), p);
  };
  auto col_op = [&](std::size_t dst, std::size_t src, const Poly& f) {
    for (std::size_t i = 0; i < n; ++i) m[i][dst] = poly_sub(m[i][dst], poly_mul(f, m[i][src], p), p);
  };
  for (std::size_t k = 0; k < n; ++k) {
    while (true) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].empty() && (bi == n || m[i][j].size() < m[bi][bj].size())) {
            bi = i;
            bj = j;
          }
      if (bi == n) break;
      std::swap(m[k], m[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][bj]);
      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].empty()) continue;
        Poly q, r;
        poly_divmod(m[i][k], m[k][k], p, q, r);
        row_op(i, k, q);
        if (!m[i][k].empty()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].empty()) continue;
        Poly q, r;
        poly_divmod(m[k][j], m[k][k], p, q, r);
        col_op(j, k, q);
        if (!m[k][j].empty()) clean = false;
      }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n && divides; ++j) {
          Poly q, r;
          poly_divmod(m[i][j], m[k][k], p, q, r);
          if (!r.empty()) {
            divides = false;
            for (std::size_t jj = 0; jj < n; ++jj) m[k][jj] = poly_sub(m[k][jj], poly_mul(Poly{mod(-1, p)}, m[i][jj], p), p);
          }
        }
      if (divides) break;
    }
  }
  std::vector<Poly> out;
  for (std::size_t k = 0; k < n; ++k) {
    Poly d = monic(m[k][k], p);
    if (d.size() > 1) out.push_back(d);
  }
  std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x < y;
  });
  return out;
}

}  // namespace gentle::fp
