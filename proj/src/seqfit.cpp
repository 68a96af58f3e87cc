#include "meandrics/seqfit.hpp"

#include <cmath>
#include <cstddef>

namespace meandrics {

namespace {

double log_value(const BigInt& v) {
    const double d = v.get_d();
    if (std::isfinite(d))
        return std::log(d);
    // Entries beyond double range: peel the binary exponent off first.
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

FitResult fit_from_logs(const std::vector<double>& logs, int stride) {
    const int count = static_cast<int>(logs.size());
    // r[k] is the log-ratio of neighbours at 1-based position k; the raw
    // estimates eliminate the k^(-alpha) correction through second order,
    //   log R_k = [r_k + k (r_k - r_{k-1})] / stride
    //   alpha_k = (r_k - r_{k-1}) / log(k^2 / (k^2 - 1))
    // and one Richardson step removes the leading 1/k^2 (resp. 1/k) error.
    std::vector<double> r(static_cast<std::size_t>(count), 0.0);
    for (int k = 1; k < count; ++k)
        r[static_cast<std::size_t>(k)] =
            logs[static_cast<std::size_t>(k)] -
            logs[static_cast<std::size_t>(k) - 1];

    std::vector<double> log_r(static_cast<std::size_t>(count), 0.0);
    std::vector<double> alpha(static_cast<std::size_t>(count), 0.0);
    for (int k = 2; k < count; ++k) {
        const double dr = r[static_cast<std::size_t>(k)] -
                          r[static_cast<std::size_t>(k) - 1];
        log_r[static_cast<std::size_t>(k)] =
            (r[static_cast<std::size_t>(k)] + k * dr) / stride;
        alpha[static_cast<std::size_t>(k)] =
            dr / std::log(static_cast<double>(k) * k /
                          (static_cast<double>(k) * k - 1.0));
    }

    FitResult out;
    for (int k = 2; k < count; ++k) {
        out.r_raw.push_back(std::exp(log_r[static_cast<std::size_t>(k)]));
        out.alpha_raw.push_back(alpha[static_cast<std::size_t>(k)]);
    }
    for (int k = 3; k < count; ++k) {
        const double lr2 =
            (static_cast<double>(k) * k * log_r[static_cast<std::size_t>(k)] -
             static_cast<double>(k - 1) * (k - 1) *
                 log_r[static_cast<std::size_t>(k) - 1]) /
            (2.0 * k - 1.0);
        out.r_refined.push_back(std::exp(lr2));
        out.alpha_refined.push_back(
            k * alpha[static_cast<std::size_t>(k)] -
            (k - 1) * alpha[static_cast<std::size_t>(k) - 1]);
    }
    out.window_lo = 3;
    out.window_hi = count - 1;
    out.r_estimate = out.r_refined.back();
    out.alpha_estimate = out.alpha_refined.back();
    return out;
}

void check_fit_inputs(std::size_t count, int stride) {
    if (stride != 1 && stride != 2)
        throw ValidationError("stride must be 1 or 2");
    if (count < 6)
        throw ValidationError("need at least six sequence terms");
}

}  // namespace

FitResult fit_power_law(const std::vector<double>& values, int stride) {
    check_fit_inputs(values.size(), stride);
    std::vector<double> logs;
    logs.reserve(values.size());
    for (double v : values) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw ValidationError("sequence terms must be positive");
        logs.push_back(std::log(v));
    }
    return fit_from_logs(logs, stride);
}

FitResult fit_power_law(const std::vector<BigInt>& values, int stride) {
    check_fit_inputs(values.size(), stride);
    std::vector<double> logs;
    logs.reserve(values.size());
    for (const BigInt& v : values) {
        if (v <= 0)
            throw ValidationError("sequence terms must be positive");
        logs.push_back(log_value(v));
    }
    return fit_from_logs(logs, stride);
}

LargeQReference large_q_reference(double q) {
    if (!(q > 0.0))
        throw ValidationError("reference expansions need q > 0");
    static const double kR[] = {1.0,         1.0,         3.0 / 2.0,
                                -3.0 / 2.0,  -29.0 / 8.0, -81.0 / 8.0,
                                -89.0 / 16.0};
    static const double kRbar[] = {2.0,  2.0,   2.0,  0.0,  -4.0,  -8.0,
                                   -12.0, -10.0, -4.0, 12.0, 46.0,  98.0,
                                   154.0, 124.0, 10.0, -102.0, 20.0, -64.0};
    const double u = 1.0 / q;
    double r = 0.0;
    for (int k = 6; k >= 0; --k)
        r = r * u + kR[k];
    double rbar = 0.0;
    for (int k = 17; k >= 0; --k)
        rbar = rbar * u + kRbar[k];
    LargeQReference out;
    out.r = 2.0 * std::sqrt(q) * r;
    out.rbar = q + 1.0 + u * rbar;
    return out;
}

}  // namespace meandrics
