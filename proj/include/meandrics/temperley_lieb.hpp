// Gram matrix of the noncrossing-matching basis in the loop-weight variable
// q, and its determinant computed two independent ways: exact fraction-free
// elimination and the closed Chebyshev product formula.
#pragma once

#include "meandrics/arch.hpp"

#include <map>
#include <vector>

namespace meandrics {

// Univariate polynomial in q: exponent -> exact rational coefficient.
// Invariant: no zero coefficients are stored.
struct QPolynomial {
    std::map<int, Rational> coeffs;

    bool operator==(const QPolynomial&) const = default;
    int degree() const;  // -1 for the zero polynomial
};

QPolynomial qpoly_monomial(int exponent, const Rational& c = Rational(1));
QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b);
QPolynomial qpoly_sub(const QPolynomial& a, const QPolynomial& b);
QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b);
Rational qpoly_eval(const QPolynomial& a, const Rational& q);

// Second-kind Chebyshev polynomial in the 2cos convention:
// U_0 = 1, U_1 = q, U_{m+1} = q U_m - U_{m-1}.
QPolynomial chebyshev_u(int m);

// Scalar products q^{loops(a,b)} over the lexicographic noncrossing basis.
struct GramMatrix {
    int n = 0;
    std::vector<std::vector<QPolynomial>> entries;
};

GramMatrix gram_matrix(int n, int threads = 1, std::uint64_t max_size = 1430);

// Exact determinant of gram_matrix(n) by Bareiss fraction-free elimination
// over integer-coefficient polynomials.
QPolynomial meander_determinant_direct(int n, std::uint64_t max_size = 132);

// The same determinant from the product formula
//   prod_{m=1}^{n} U_m(q)^{a(m,n)},
// a(m,n) = C(2n,n-m) - 2 C(2n,n-m-1) + C(2n,n-m-2), C(N,r<0) = 0.
QPolynomial meander_determinant_formula(int n);
BigInt chebyshev_exponent(int m, int n);

// Determinant with q fixed to an exact rational; scales to sizes where the
// symbolic route is out of reach.
Rational meander_determinant_value(int n, const Rational& q,
                                   std::uint64_t max_size = 1430);

}  // namespace meandrics
