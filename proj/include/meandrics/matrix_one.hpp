// One-Hermitian-matrix integrals with an even polynomial potential: the
// finite-size string equation solved order by order in the couplings, the
// planar limit r(z), the planar free energy and moments, and the quartic
// critical data.
#pragma once

#include "meandrics/numeric.hpp"

#include <map>
#include <vector>

namespace meandrics {

// Truncated multivariate power series in the formal couplings u_0..u_{vars-1}
// with exact rational coefficients; keys are exponent tuples, total degree
// capped at `order`. No zero coefficients are stored.
struct CouplingSeries {
    int vars = 0;
    int order = 0;
    std::map<std::vector<int>, Rational> terms;

    bool operator==(const CouplingSeries&) const = default;
    Rational at(const std::vector<int>& key) const;
};

CouplingSeries series_constant(int vars, int order, const Rational& c);
CouplingSeries series_variable(int vars, int order, int index);
CouplingSeries series_add(const CouplingSeries& a, const CouplingSeries& b);
CouplingSeries series_sub(const CouplingSeries& a, const CouplingSeries& b);
CouplingSeries series_mul(const CouplingSeries& a, const CouplingSeries& b);
CouplingSeries series_scale(const CouplingSeries& a, const Rational& c);
// log(1 + s) for a series with zero constant term.
CouplingSeries series_log1p(const CouplingSeries& s);

// The potential x^2/2 + sum_j scale_j * u_j * x^{valency_j} / valency_j,
// with u_j the j-th formal coupling. Valencies must be even and >= 4.
// The classic single quartic coupling of strength g corresponds to
// {4, -1} with u = g.
struct PotentialTerm {
    int valency;
    Rational scale;
};
using Potential = std::vector<PotentialTerm>;

inline Potential quartic_potential() { return {{4, Rational(-1)}}; }

// Recursion data r_m of the orthogonal-polynomial solution at matrix size
// n_size, as coupling series through the given order. Slot [m] of the result
// holds r_m; slot [0] is the zero boundary value.
std::vector<CouplingSeries> string_equation_finite_N(const Potential& pot,
                                                     int n_size, int m_max,
                                                     int order);

// log of the partition function at matrix size n_size, normalized so the
// pure Gaussian gives zero, as a coupling series.
CouplingSeries finite_free_energy(const Potential& pot, int n_size, int order);

// Planar limit r(z): coupling series whose coefficients are polynomials in
// z (dense, index = power of z).
struct ZPolySeries {
    int vars = 0;
    int order = 0;
    std::map<std::vector<int>, std::vector<Rational>> terms;

    bool operator==(const ZPolySeries&) const = default;
    // Substitute a rational z, collapsing to a plain coupling series.
    CouplingSeries at_z(const Rational& z) const;
};

ZPolySeries planar_r_series(const Potential& pot, int order);

// f0 = integral over z in [0,1] of (1-z) log(r(z)/z), termwise exact.
CouplingSeries planar_free_energy(const Potential& pot, int order);

// Planar limit of <Tr M^n>/N: binom(2p,p) * integral of r(z)^p for n = 2p,
// zero for odd n.
CouplingSeries planar_moments(const Potential& pot, int n, int order);

// Critical data of the single-quartic-coupling model plus the free-energy
// coefficient list used for growth-rate fitting.
struct QuarticCritical {
    Rational g_c;                // 1/12
    Rational singular_exponent;  // 5/2
    std::vector<Rational> f0;    // f0[n] = coefficient of u^n, n = 1..order
};

QuarticCritical quartic_critical(int order);

}  // namespace meandrics
