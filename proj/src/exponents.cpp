#include "meandrics/exponents.hpp"

#include "meandrics/numeric.hpp"

#include <cmath>
#include <limits>

namespace meandrics {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kClampTol = 1e-12;

// Electric parameter in [0, 1/2] for a loop weight v = 2 cos(pi * result);
// inputs within kClampTol outside [0,2] are clamped onto the interval.
double electric_parameter(double v, const char* what) {
    if (v < -kClampTol || v > 2.0 + kClampTol) {
        throw ValidationError(std::string(what) +
                              " weight must lie in [0, 2]");
    }
    v = std::min(std::max(v, 0.0), 2.0);
    return std::acos(v / 2.0) / kPi;
}

// Radicands of exactly representable inputs can land a rounding error away
// from zero; the square root would amplify 1e-15 to 1e-8, so snap a window
// around zero (and everything below it) to an exact zero.
double sqrt_snapped(double x) {
    return x < 1e-12 ? 0.0 : std::sqrt(x);
}

}  // namespace

double kpz_gamma(double c) {
    if (c > 1.0) {
        throw ValidationError("susceptibility needs central charge <= 1");
    }
    return (c - 1.0 - std::sqrt((25.0 - c) * (1.0 - c))) / 12.0;
}

double dressed_dimension(double h, double c) {
    if (c > 1.0) {
        throw ValidationError("dressing needs central charge <= 1");
    }
    double rad = 1.0 - c + 24.0 * h;
    if (rad < 0.0) {
        throw ValidationError("dressing needs 1 - c + 24h >= 0");
    }
    return (std::sqrt(rad) - std::sqrt(1.0 - c)) /
           (std::sqrt(25.0 - c) - std::sqrt(1.0 - c));
}

double endpoint_conformal_weight(double e) {
    return (1.0 - e) / 16.0 - e * e / (4.0 * (1.0 - e));
}

double dense_loop_central_charge(double q) {
    double f = electric_parameter(q, "loop");
    return 1.0 - 6.0 * f * f / (1.0 - f);
}

ExponentRecord exponent_point(double q, double p) {
    ExponentRecord rec;
    rec.e = electric_parameter(p, "river");
    rec.f = electric_parameter(q, "road");
    rec.q = 2.0 * std::cos(kPi * rec.f);
    rec.p = 2.0 * std::cos(kPi * rec.e);
    rec.c = 2.0 - 6.0 * (rec.e * rec.e / (1.0 - rec.e) +
                         rec.f * rec.f / (1.0 - rec.f));

    const double s1 = sqrt_snapped(1.0 - rec.c);
    const double s25 = std::sqrt(25.0 - rec.c);
    rec.gamma = (rec.c - 1.0 - s25 * s1) / 12.0;
    rec.alpha = 2.0 + s1 * (s25 + s1) / 12.0;

    const double h1 = endpoint_conformal_weight(rec.e);
    const double rad = 1.0 - rec.c + 24.0 * h1;
    if (rad < -1e-12) {
        // Winding-dominated regime: the endpoint dressing turns complex and
        // the open-configuration exponent stops being given by this formula.
        rec.alpha_bar = std::numeric_limits<double>::quiet_NaN();
    } else {
        const double delta1 = (sqrt_snapped(rad) - s1) / (s25 - s1);
        rec.alpha_bar = rec.alpha - 1.0 + 2.0 * delta1;
    }

    rec.r_q1 = multi_river(rec.q).r;
    return rec;
}

MultiRiverAsymptotics multi_river(double q) {
    double f = electric_parameter(q, "road");
    MultiRiverAsymptotics out;
    if (f < 1e-4) {
        // Removable zero-over-zero point: 2 sin^2(pi f/2)/f^2 expanded in
        // y = (pi f/2)^2; the y^3 tail is far below double precision here.
        double y = (kPi * f / 2.0) * (kPi * f / 2.0);
        out.r = (kPi * kPi / 2.0) *
                (1.0 - y / 3.0 + 2.0 * y * y / 45.0);
    } else {
        double s = std::sin(kPi * f / 2.0);
        out.r = 2.0 * s * s / (f * f);
    }
    out.alpha = (2.0 - f) / (1.0 - f);
    out.x = 1.0 / out.r;
    out.gamma = -f / (1.0 - f);
    return out;
}

double winding_transition() {
    return 2.0 * std::cos(kPi * (std::sqrt(97.0) - 1.0) / 48.0);
}

std::vector<RiverTableRow> table_two() {
    std::vector<RiverTableRow> rows;
    auto add = [&rows](std::string q_exact, std::string f_exact,
                       std::string r_exact, std::string alpha_exact,
                       double q) {
        RiverTableRow row;
        row.q_exact = std::move(q_exact);
        row.f_exact = std::move(f_exact);
        row.r_exact = std::move(r_exact);
        row.alpha_exact = std::move(alpha_exact);
        row.q = q;
        MultiRiverAsymptotics mr = multi_river(q);
        row.f = electric_parameter(q, "road");
        row.r = mr.r;
        row.alpha = mr.alpha;
        rows.push_back(std::move(row));
    };
    add("0", "1/2", "4", "3", 0.0);
    add("1", "1/3", "9/2", "5/2", 1.0);
    add("sqrt(2)", "1/4", "16-8*sqrt(2)", "7/3", std::sqrt(2.0));
    add("sqrt(3)", "1/6", "36-18*sqrt(3)", "11/5", std::sqrt(3.0));
    add("2", "0", "pi^2/2", "2", 2.0);
    return rows;
}

double baxter_folding_entropy() {
    return std::log(std::sqrt(3.0) *
                    std::pow(std::tgamma(1.0 / 3.0), 1.5) / (2.0 * kPi));
}

}  // namespace meandrics
