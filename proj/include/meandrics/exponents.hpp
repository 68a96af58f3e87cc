// Closed-form configuration exponents for loop-decorated planar surfaces:
// the string susceptibility, gravitationally dressed scaling dimensions, the
// two-color fully packed central charge, river-and-road asymptotics, and the
// exact folding entropy of the triangular lattice.
#pragma once

#include <string>
#include <vector>

namespace meandrics {

// String susceptibility (c - 1 - sqrt((25-c)(1-c)))/12 for c <= 1.
double kpz_gamma(double c);

// Dressed dimension (sqrt(1-c+24h) - sqrt(1-c))/(sqrt(25-c) - sqrt(1-c))
// for c <= 1 and 1 - c + 24h >= 0.
double dressed_dimension(double h, double c);

// Conformal weight (1-e)/16 - e^2/(4(1-e)) of the operator opening a road
// endpoint, with p = 2 cos(pi e); vanishes at e = 1/3 (p = 1).
double endpoint_conformal_weight(double e);

// Central charge 1 - 6 f^2/(1-f) of the dense loop phase with weight
// q = 2 cos(pi f) per loop.
double dense_loop_central_charge(double q);

// Exponent data for roads of weight q on rivers of weight p, both in [0,2].
// e and f are the electric parameters in [0, 1/2] with p = 2 cos(pi e) and
// q = 2 cos(pi f). alpha governs closed-configuration counts, alpha_bar the
// open (single endpoint pair) counts, r_q1 is the growth rate on one river.
// Central charges above 1, reached near q = p = 2, have their square roots
// of 1 - c clamped to zero. When the endpoint dressing radicand
// 1 - c + 24 h_1 turns negative (winding-dominated regime, e.g. p = 0 with
// q beyond winding_transition()), alpha_bar is NaN.
struct ExponentRecord {
    double q = 0;
    double p = 0;
    double e = 0;
    double f = 0;
    double c = 0;
    double gamma = 0;
    double alpha = 0;
    double alpha_bar = 0;
    double r_q1 = 0;
};

ExponentRecord exponent_point(double q, double p);

// Single-river asymptotics for road weight q in [0,2]: growth rate
// r = 2 sin^2(pi f/2)/f^2 (with the removable f -> 0 limit pi^2/2), the
// exponent alpha = (2-f)/(1-f), the critical cosmological constant x = 1/r,
// and the susceptibility gamma = -f/(1-f).
struct MultiRiverAsymptotics {
    double r = 0;
    double alpha = 0;
    double x = 0;
    double gamma = 0;
};

MultiRiverAsymptotics multi_river(double q);

// Road weight 2 cos(pi (sqrt(97)-1)/48) ~ 1.6738 beyond which winding
// dominates open configurations; the unique root of
// dense_loop_central_charge(q) = 3/4 on [0,2].
double winding_transition();

// One row of the single-river reference table; exact forms are kept as
// strings next to their double values.
struct RiverTableRow {
    std::string q_exact;
    std::string f_exact;
    std::string r_exact;
    std::string alpha_exact;
    double q = 0;
    double f = 0;
    double r = 0;
    double alpha = 0;
};

// The five reference rows q in {0, 1, sqrt(2), sqrt(3), 2}.
std::vector<RiverTableRow> table_two();

// Folding entropy per triangle of the triangular lattice,
// log(sqrt(3) Gamma(1/3)^{3/2}/(2 pi)) ~ 0.18956004831636.
double baxter_folding_entropy();

}  // namespace meandrics
