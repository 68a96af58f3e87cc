#include "meandrics/temperley_lieb.hpp"

#include <omp.h>

#include <algorithm>
#include <string>
#include <utility>

namespace meandrics {

namespace {

// Dense integer-coefficient polynomial, index = exponent. The determinant
// routines stay in this representation: every Gram entry is an integer
// monomial and Bareiss elimination keeps all intermediates in Z[q].
using Dense = std::vector<BigInt>;

void dtrim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Dense dmul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(),
                       b[j].get_mpz_t());
        }
    }
    dtrim(out);
    return out;
}

Dense dsub(const Dense& a, const Dense& b) {
    Dense out = a;
    if (out.size() < b.size()) out.resize(b.size(), BigInt(0));
    for (std::size_t j = 0; j < b.size(); ++j) out[j] -= b[j];
    dtrim(out);
    return out;
}

// Exact quotient num/den in Z[q]; the caller guarantees divisibility
// (Sylvester's identity for Bareiss), which the zero-remainder check
// re-verifies.
Dense ddivexact(Dense num, const Dense& den) {
    if (num.empty()) return {};
    if (den.empty()) throw ValidationError("polynomial division by zero");
    if (num.size() < den.size())
        throw ValidationError("inexact polynomial division");
    Dense q(num.size() - den.size() + 1, BigInt(0));
    const BigInt& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        BigInt& top = num[k + den.size() - 1];
        if (top == 0) continue;
        BigInt f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        q[k] = f;
        for (std::size_t j = 0; j < den.size(); ++j) {
            mpz_submul(num[k + j].get_mpz_t(), f.get_mpz_t(),
                       den[j].get_mpz_t());
        }
    }
    for (const BigInt& c : num)
        if (c != 0) throw ValidationError("inexact polynomial division");
    return q;
}

Dense dpow(const Dense& base, unsigned long e) {
    Dense out = {BigInt(1)};
    Dense sq = base;
    while (e) {
        if (e & 1) out = dmul(out, sq);
        e >>= 1;
        if (e) sq = dmul(sq, sq);
    }
    return out;
}

QPolynomial from_dense(const Dense& a) {
    QPolynomial out;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) out.coeffs[static_cast<int>(i)] = Rational(a[i]);
    return out;
}

// Bareiss fraction-free determinant over Z[q]. Consumes the matrix.
Dense bareiss_det_poly(std::vector<std::vector<Dense>>& m) {
    const std::size_t size = m.size();
    if (size == 0) return {BigInt(1)};
    int sign = 1;
    Dense prev = {BigInt(1)};
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].empty()) {
            std::size_t piv = k + 1;
            while (piv < size && m[piv][k].empty()) ++piv;
            if (piv == size) return {};
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                Dense t = dsub(dmul(m[k][k], m[i][j]), dmul(m[i][k], m[k][j]));
                m[i][j] = ddivexact(std::move(t), prev);
            }
            m[i][k].clear();
        }
        prev = m[k][k];
    }
    Dense det = m[size - 1][size - 1];
    if (sign < 0)
        for (BigInt& c : det) c = -c;
    return det;
}

// Bareiss over plain integers; same structure as the polynomial variant.
BigInt bareiss_det_int(std::vector<std::vector<BigInt>>& m) {
    const std::size_t size = m.size();
    if (size == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k] == 0) {
            std::size_t piv = k + 1;
            while (piv < size && m[piv][k] == 0) ++piv;
            if (piv == size) return 0;
            std::swap(m[k], m[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                BigInt t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign < 0 ? BigInt(-m[size - 1][size - 1]) : m[size - 1][size - 1];
}

std::vector<std::vector<int>> loop_exponents(int n, int threads,
                                             std::uint64_t max_size) {
    if (n < 1) throw ValidationError("order must be at least 1");
    BigInt c = catalan(n);
    if (c > BigInt(static_cast<unsigned long>(max_size)))
        throw ResourceLimitError("basis size " + to_decimal(c) +
                                 " exceeds limit " + std::to_string(max_size));
    auto basis = enumerate_arches(n);
    const int size = static_cast<int>(basis.size());
    std::vector<std::vector<int>> expo(size, std::vector<int>(size, 0));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < size; ++i)
        for (int j = i; j < size; ++j)
            expo[i][j] = glue_components(basis[i], basis[j]);
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < i; ++j) expo[i][j] = expo[j][i];
    return expo;
}

}  // namespace

int QPolynomial::degree() const {
    return coeffs.empty() ? -1 : coeffs.rbegin()->first;
}

QPolynomial qpoly_monomial(int exponent, const Rational& c) {
    QPolynomial out;
    if (c != 0) out.coeffs[exponent] = c;
    return out;
}

QPolynomial qpoly_add(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out = a;
    for (const auto& [e, c] : b.coeffs) {
        Rational& slot = out.coeffs[e];
        slot += c;
        if (slot == 0) out.coeffs.erase(e);
    }
    return out;
}

QPolynomial qpoly_sub(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out = a;
    for (const auto& [e, c] : b.coeffs) {
        Rational& slot = out.coeffs[e];
        slot -= c;
        if (slot == 0) out.coeffs.erase(e);
    }
    return out;
}

QPolynomial qpoly_mul(const QPolynomial& a, const QPolynomial& b) {
    QPolynomial out;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            Rational& slot = out.coeffs[ea + eb];
            slot += ca * cb;
            if (slot == 0) out.coeffs.erase(ea + eb);
        }
    return out;
}

Rational qpoly_eval(const QPolynomial& a, const Rational& q) {
    // Horner over the sparse exponent ladder, highest power first.
    Rational acc = 0;
    int at = a.coeffs.empty() ? 0 : a.coeffs.rbegin()->first;
    for (auto it = a.coeffs.rbegin(); it != a.coeffs.rend(); ++it) {
        for (; at > it->first; --at) acc *= q;
        acc += it->second;
    }
    for (; at > 0; --at) acc *= q;
    if (at < 0) {
        Rational inv = 1 / q;
        for (; at < 0; ++at) acc *= inv;
    }
    return acc;
}

QPolynomial chebyshev_u(int m) {
    if (m < 0) throw ValidationError("Chebyshev index must be nonnegative");
    QPolynomial prev = qpoly_monomial(0);
    if (m == 0) return prev;
    QPolynomial cur = qpoly_monomial(1);
    for (int i = 1; i < m; ++i) {
        QPolynomial next =
            qpoly_sub(qpoly_mul(qpoly_monomial(1), cur), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

GramMatrix gram_matrix(int n, int threads, std::uint64_t max_size) {
    auto expo = loop_exponents(n, threads, max_size);
    GramMatrix out;
    out.n = n;
    const int size = static_cast<int>(expo.size());
    out.entries.assign(size, std::vector<QPolynomial>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            out.entries[i][j] = qpoly_monomial(expo[i][j]);
    return out;
}

QPolynomial meander_determinant_direct(int n, std::uint64_t max_size) {
    auto expo = loop_exponents(n, 1, max_size);
    const int size = static_cast<int>(expo.size());
    std::vector<std::vector<Dense>> m(size, std::vector<Dense>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            Dense mono(expo[i][j] + 1, BigInt(0));
            mono.back() = 1;
            m[i][j] = std::move(mono);
        }
    return from_dense(bareiss_det_poly(m));
}

BigInt chebyshev_exponent(int m, int n) {
    return binomial(2 * n, n - m) - 2 * binomial(2 * n, n - m - 1) +
           binomial(2 * n, n - m - 2);
}

QPolynomial meander_determinant_formula(int n) {
    if (n < 1) throw ValidationError("order must be at least 1");
    Dense u_prev = {BigInt(1)};
    Dense u_cur = {BigInt(0), BigInt(1)};
    // Multiplicities can dip below zero at larger orders; the negative powers
    // always cancel against shared factors (odd-index U_m are all divisible
    // by q), so collect numerator and denominator and divide exactly.
    Dense num = {BigInt(1)};
    Dense den = {BigInt(1)};
    for (int m = 1; m <= n; ++m) {
        BigInt a = chebyshev_exponent(m, n);
        if (a >= 0) {
            num = dmul(num, dpow(u_cur, mpz_get_ui(a.get_mpz_t())));
        } else {
            BigInt na = -a;
            den = dmul(den, dpow(u_cur, mpz_get_ui(na.get_mpz_t())));
        }
        Dense u_next(u_cur.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < u_cur.size(); ++i) u_next[i + 1] = u_cur[i];
        u_next = dsub(u_next, u_prev);
        u_prev = std::move(u_cur);
        u_cur = std::move(u_next);
    }
    return from_dense(ddivexact(std::move(num), den));
}

Rational meander_determinant_value(int n, const Rational& q,
                                   std::uint64_t max_size) {
    auto expo = loop_exponents(n, 1, max_size);
    const int size = static_cast<int>(expo.size());
    // Clear denominators: with q = p/r, entry q^c becomes p^c r^{n-c} after
    // multiplying each row by r^n; undo by r^{n * size} at the end.
    BigInt p = q.get_num(), r = q.get_den();
    std::vector<BigInt> ppow(n + 1), rpow(n + 1);
    ppow[0] = 1;
    rpow[0] = 1;
    for (int i = 1; i <= n; ++i) {
        ppow[i] = ppow[i - 1] * p;
        rpow[i] = rpow[i - 1] * r;
    }
    std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size));
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j)
            m[i][j] = ppow[expo[i][j]] * rpow[n - expo[i][j]];
    BigInt det = bareiss_det_int(m);
    BigInt denom;
    mpz_pow_ui(denom.get_mpz_t(), r.get_mpz_t(),
               static_cast<unsigned long>(n) * size);
    return Rational(det) / Rational(denom);
}

}  // namespace meandrics
