#pragma once

#include <optional>
#include <vector>

namespace gentle::fp {

using Mat = std::vector<std::vector<int>>;
using Poly = std::vector<int>;  // coefficients, constant term first, no trailing zeros

bool is_prime(int p);
int mod(long a, int p);
int inverse(int a, int p);

Mat zeros(std::size_t rows, std::size_t cols);
Mat identity(std::size_t n);
Mat multiply(const Mat& a, const Mat& b, int p);
Mat transpose(const Mat& a);
bool is_zero(const Mat& a);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Mat& a, int p);
std::size_t rank(Mat a, int p);
std::optional<Mat> inverse(const Mat& a, int p);
// Basis of {x : a x = 0}, one vector per row.
Mat nullspace(const Mat& a, std::size_t cols, int p);
// Row spaces of a and b (same width) coincide.
bool same_row_space(const Mat& a, const Mat& b, int p);
// Each row of b lies in the row space of a.
bool row_space_contains(const Mat& a, const Mat& b, int p);

void trim(Poly& f);
int degree(const Poly& f);
Poly poly_sub(const Poly& f, const Poly& g, int p);
Poly poly_mul(const Poly& f, const Poly& g, int p);
void poly_divmod(const Poly& f, const Poly& g, int p, Poly& q, Poly& r);
Poly monic(const Poly& f, int p);

// Invariant factors of the F_p[T]-module given by the matrix: the nonconstant monic diagonal
// entries of the Smith normal form of T*I - a, in divisibility order.
std::vector<Poly> invariant_factors(const Mat& a, int p);

}  // namespace gentle::fp
