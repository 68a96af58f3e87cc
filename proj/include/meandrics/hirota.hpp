// Generating functions for vertex-bicolored planar maps: an exact lattice of
// tau functions built from a bilinear three-term recursion, an independent
// multi-index sum for the same quantities, trivariate polynomial extraction
// of the free-energy coefficients, and the genus-zero three-variable system
// with its one-variable quadratic reduction.
#pragma once

#include <array>
#include <map>
#include <vector>

#include "meandrics/numeric.hpp"

namespace meandrics {

// Truncated power series with exact rational coefficients; coeff[k] is the
// order-k coefficient, so a vector of length L is trusted through order L-1.
// Binary operations truncate to the shorter operand.
struct TSeries {
    std::vector<Rational> coeff;

    int order() const { return static_cast<int>(coeff.size()) - 1; }
    // Order-k coefficient; k must lie within the truncation order.
    const Rational& at(int k) const;
    bool operator==(const TSeries& other) const { return coeff == other.coeff; }
    bool operator!=(const TSeries& other) const { return !(*this == other); }
};

TSeries ts_constant(const Rational& value, int order);
TSeries ts_add(const TSeries& x, const TSeries& y);
TSeries ts_sub(const TSeries& x, const TSeries& y);
TSeries ts_mul(const TSeries& x, const TSeries& y);
TSeries ts_scale(const TSeries& x, const Rational& c);
// Quotient series; y must have a nonzero constant term.
TSeries ts_div(const TSeries& x, const TSeries& y);
// Divide by the series variable k times; the first k coefficients must
// vanish exactly. The truncation order drops by k.
TSeries ts_shift_down(const TSeries& x, int k);
// Logarithm of a series with constant term 1.
TSeries ts_log(const TSeries& x);
// Exponential of a series with constant term 0.
TSeries ts_exp(const TSeries& x);
TSeries ts_truncate(const TSeries& x, int order);

// Closed form for the first lattice level:
//   Z_1(a, b) = sum_k s^k (a)_k (b)_k / k!
// with rising factorials (a)_k = a (a+1) ... (a+k-1).
TSeries z1_series(const Rational& a, const Rational& b, int order);

// Lattice of partition-function series Z_n(a0 + i, b0 + j) for n = 0..n_max
// and i, j in [0, extent]. Level 0 is identically 1 and level 1 has a closed
// form; each higher level comes from the bilinear recursion
//   n s Z_{n+1}(a+1, b+1) Z_{n-1}(a, b)
//     = Z_n(a+1, b+1) Z_n(a, b) - Z_n(a, b+1) Z_n(a+1, b),
// whose right-hand side must vanish at order zero before the division by s
// (checked, never assumed). An interior point needs all four level-n
// neighbours, so the computable window loses its first row and column at
// each level -- except that a vanishing offset pins an exact boundary: the
// lines a = 0 and b = 0 carry the constant value 1 and are refilled, which
// keeps the whole grid alive when a0 = b0 = 0. Stored series are trusted
// through `order`.
struct GridSeries {
    Rational a0, b0;
    int extent = 0;
    int n_max = 0;
    int order = 0;
    std::map<std::array<int, 3>, TSeries> z;  // key {n, i, j}

    bool has(int n, int i, int j) const;
    // Stored series at a computed point; throws ValidationError otherwise.
    const TSeries& at(int n, int i, int j) const;
    // log of the stored series (the free energy F_n at that point).
    TSeries log_at(int n, int i, int j) const;
};

GridSeries hirota_grid(const Rational& a0, const Rational& b0, int extent,
                       int n_max, int order);

// Independent route to the same series: a Vandermonde-squared sum over
// n-tuples of distinct non-negative integers k_i with weights
//   prod_i s^{k_i + 1 - i} / (i! k_i!) * R(a; k_i, i) * R(b; k_i, i),
// where R(c; k, i) is the ratio of Gamma factors shifted by k - n + 1 and
// 1 - i, evaluated as a finite product. Integer parameters that place a
// ratio on a pole are rejected with ValidationError; non-integer values and
// integers >= n are always safe.
TSeries zndetf_oracle(int n, const Rational& a, const Rational& b, int order);

// One coefficient of the lattice free energy,
//   log Z_n(a, b) = sum_m s^m omega_m(a, b, n),
// as an exact polynomial: total degree m + 2, divisible by a*b*n, and
// symmetric under every permutation of (a, b, n).
struct OmegaPolynomial {
    int m = 0;
    std::map<std::array<int, 3>, Rational> coeffs;  // {da, db, dn} -> coeff

    Rational eval(const Rational& a, const Rational& b,
                  const Rational& n) const;
};

// Interpolates omega_1..omega_m_max from lattice values on integer grids
// with per-variable degree bound m, then verifies divisibility by a*b*n and
// re-evaluates the polynomial on grid points outside the interpolation set.
// A bound that fails verification is raised (with a warning on stderr); a
// bound that never closes raises ValidationError.
std::vector<OmegaPolynomial> omega_polynomials(int m_max);

// Genus-zero three-variable system F_i (1 - F_j - F_k) = t x_i solved as
// power series in t with F_i = t x_i + O(t^2), together with the planar
// free energy f0 defined by m^2 [t^m] f0 = [t^{m+2}] F_1 F_2 F_3; its low
// orders are t x1 x2 x3 + t^2 x1 x2 x3 (x1 + x2 + x3) / 2 + ... and the
// order-m coefficient equals the top-degree homogeneous part of omega_m
// evaluated at (x1, x2, x3). All four series are truncated at `order`.
struct GenusZeroTricolor {
    TSeries f1, f2, f3;  // series in t
    TSeries f0;          // planar free energy; zero constant term
};

GenusZeroTricolor genus_zero_system(const Rational& x1, const Rational& x2,
                                    const Rational& x3, int order);

}  // namespace meandrics
