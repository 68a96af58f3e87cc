// Power-law asymptotics for positive sequences: estimates the growth rate R
// and the polynomial correction exponent alpha in s_k ~ A R^(stride k)
// k^(-alpha) by three-point log-ratio elimination with one Richardson step,
// and evaluates the printed truncated large-q expansions of the meandric
// growth radii for comparison.
#pragma once

#include <vector>

#include "meandrics/numeric.hpp"

namespace meandrics {

struct FitResult {
    double r_estimate = 0.0;      // growth factor per index step
    double alpha_estimate = 0.0;  // power-law correction exponent
    // 1-based positions in the input covered by the refined stream; the
    // estimate at position k consumes values up to position k + 1.
    int window_lo = 0;
    int window_hi = 0;
    // Successive estimates, one per usable position (raw: from position 2;
    // refined: from position 3). The final refined entries are the reported
    // values. Recorded as diagnostics, never asserted monotone.
    std::vector<double> r_raw;
    std::vector<double> alpha_raw;
    std::vector<double> r_refined;
    std::vector<double> alpha_refined;
};

// Fits the model to strictly positive values. Stride 2 treats the sequence
// as indexed by every other integer (entries s_2, s_4, ... of an underlying
// sequence) and halves the fitted growth exponent accordingly. Requires at
// least six terms; nonpositive entries are rejected.
FitResult fit_power_law(const std::vector<double>& values, int stride);
FitResult fit_power_law(const std::vector<BigInt>& values, int stride);

// Truncated reference expansions of the meandric growth radii at large q:
//   R(q)    = 2 sqrt(q) (1 + 1/q + 3/(2q^2) - 3/(2q^3) - 29/(8q^4)
//             - 81/(8q^5) - 89/(16q^6))
//   Rbar(q) = q + 1 + 2/q + 2/q^2 + 2/q^3 - 4/q^5 - 8/q^6 - 12/q^7
//             - 10/q^8 - 4/q^9 + 12/q^10 + 46/q^11 + 98/q^12 + 154/q^13
//             + 124/q^14 + 10/q^15 - 102/q^16 + 20/q^17 - 64/q^18
// evaluated to exactly these printed orders.
struct LargeQReference {
    double r = 0.0;
    double rbar = 0.0;
};

LargeQReference large_q_reference(double q);  // requires q > 0

}  // namespace meandrics
