#include "meandrics/hirota.hpp"

#include <algorithm>
#include <cstddef>
#include <iostream>
#include <stdexcept>
#include <utility>

namespace meandrics {

namespace {

std::size_t common_size(const TSeries& x, const TSeries& y) {
    return std::min(x.coeff.size(), y.coeff.size());
}

Rational rational_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i)
        out *= base;
    return out;
}

}  // namespace

const Rational& TSeries::at(int k) const {
    if (k < 0 || k >= static_cast<int>(coeff.size()))
        throw ValidationError("series coefficient index out of range");
    return coeff[static_cast<std::size_t>(k)];
}

TSeries ts_constant(const Rational& value, int order) {
    if (order < 0)
        throw ValidationError("series order must be non-negative");
    TSeries out;
    out.coeff.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    out.coeff[0] = value;
    return out;
}

TSeries ts_add(const TSeries& x, const TSeries& y) {
    TSeries out;
    const std::size_t n = common_size(x, y);
    out.coeff.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.coeff[k] = x.coeff[k] + y.coeff[k];
    return out;
}

TSeries ts_sub(const TSeries& x, const TSeries& y) {
    TSeries out;
    const std::size_t n = common_size(x, y);
    out.coeff.resize(n);
    for (std::size_t k = 0; k < n; ++k)
        out.coeff[k] = x.coeff[k] - y.coeff[k];
    return out;
}

TSeries ts_mul(const TSeries& x, const TSeries& y) {
    TSeries out;
    const std::size_t n = common_size(x, y);
    out.coeff.assign(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        if (x.coeff[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (y.coeff[j] != 0)
                out.coeff[i + j] += x.coeff[i] * y.coeff[j];
        }
    }
    return out;
}

TSeries ts_scale(const TSeries& x, const Rational& c) {
    TSeries out = x;
    for (auto& v : out.coeff)
        v *= c;
    return out;
}

TSeries ts_div(const TSeries& x, const TSeries& y) {
    if (y.coeff.empty() || y.coeff[0] == 0)
        throw ValidationError("series division needs a unit constant term");
    TSeries out;
    const std::size_t n = common_size(x, y);
    out.coeff.assign(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
        Rational acc = x.coeff[k];
        for (std::size_t j = 1; j <= k; ++j)
            acc -= y.coeff[j] * out.coeff[k - j];
        out.coeff[k] = acc / y.coeff[0];
    }
    return out;
}

TSeries ts_shift_down(const TSeries& x, int k) {
    if (k < 0 || k >= static_cast<int>(x.coeff.size()))
        throw ValidationError("series shift amount out of range");
    for (int j = 0; j < k; ++j) {
        if (x.coeff[static_cast<std::size_t>(j)] != 0)
            throw ValidationError(
                "series shift would drop a nonzero coefficient");
    }
    TSeries out;
    out.coeff.assign(x.coeff.begin() + k, x.coeff.end());
    return out;
}

TSeries ts_log(const TSeries& x) {
    if (x.coeff.empty() || x.coeff[0] != 1)
        throw ValidationError("series logarithm needs constant term 1");
    // log x = integral of x'/x.
    const std::size_t n = x.coeff.size();
    TSeries deriv;
    deriv.coeff.assign(n, Rational(0));
    for (std::size_t k = 0; k + 1 < n; ++k)
        deriv.coeff[k] = x.coeff[k + 1] * Rational(static_cast<long>(k) + 1);
    TSeries q = ts_div(deriv, x);
    TSeries out;
    out.coeff.assign(n, Rational(0));
    for (std::size_t k = 1; k < n; ++k)
        out.coeff[k] = q.coeff[k - 1] / Rational(static_cast<long>(k));
    return out;
}

TSeries ts_exp(const TSeries& x) {
    if (x.coeff.empty() || x.coeff[0] != 0)
        throw ValidationError("series exponential needs constant term 0");
    // exp(x) solves y' = x' y with y(0) = 1.
    const std::size_t n = x.coeff.size();
    TSeries out;
    out.coeff.assign(n, Rational(0));
    out.coeff[0] = 1;
    for (std::size_t k = 1; k < n; ++k) {
        Rational acc(0);
        for (std::size_t j = 1; j <= k; ++j)
            acc += Rational(static_cast<long>(j)) * x.coeff[j] *
                   out.coeff[k - j];
        out.coeff[k] = acc / Rational(static_cast<long>(k));
    }
    return out;
}

TSeries ts_truncate(const TSeries& x, int order) {
    if (order < 0 || order > x.order())
        throw ValidationError("series truncation order out of range");
    TSeries out;
    out.coeff.assign(x.coeff.begin(), x.coeff.begin() + order + 1);
    return out;
}

TSeries z1_series(const Rational& a, const Rational& b, int order) {
    if (order < 0)
        throw ValidationError("series order must be non-negative");
    TSeries out;
    out.coeff.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    Rational rise_a(1), rise_b(1), kfact(1);
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            rise_a *= a + Rational(k - 1);
            rise_b *= b + Rational(k - 1);
            kfact *= Rational(k);
        }
        out.coeff[static_cast<std::size_t>(k)] = rise_a * rise_b / kfact;
    }
    return out;
}

bool GridSeries::has(int n, int i, int j) const {
    return z.find({n, i, j}) != z.end();
}

const TSeries& GridSeries::at(int n, int i, int j) const {
    auto it = z.find({n, i, j});
    if (it == z.end())
        throw ValidationError("lattice point not computed at this level");
    return it->second;
}

TSeries GridSeries::log_at(int n, int i, int j) const { return ts_log(at(n, i, j)); }

GridSeries hirota_grid(const Rational& a0, const Rational& b0, int extent,
                       int n_max, int order) {
    if (extent < 0)
        throw ValidationError("grid extent must be non-negative");
    if (n_max < 0)
        throw ValidationError("lattice level count must be non-negative");
    if (order < 0)
        throw ValidationError("series order must be non-negative");

    GridSeries g;
    g.a0 = a0;
    g.b0 = b0;
    g.extent = extent;
    g.n_max = n_max;
    g.order = order;

    // Every division by s in the recursion costs one trusted order, so the
    // base levels carry n_max - 1 guard coefficients.
    const int work_order = order + std::max(n_max - 1, 0);
    const TSeries one = ts_constant(Rational(1), work_order);

    std::map<std::array<int, 3>, TSeries> z;
    for (int i = 0; i <= extent; ++i)
        for (int j = 0; j <= extent; ++j) {
            if (n_max >= 0)
                z[{0, i, j}] = one;
            if (n_max >= 1)
                z[{1, i, j}] =
                    z1_series(a0 + Rational(i), b0 + Rational(j), work_order);
        }

    for (int n = 1; n < n_max; ++n) {
        bool produced = false;
        for (int i = 1; i <= extent; ++i) {
            for (int j = 1; j <= extent; ++j) {
                auto cur = z.find({n, i, j});
                auto dd = z.find({n, i - 1, j - 1});
                auto dl = z.find({n, i - 1, j});
                auto dr = z.find({n, i, j - 1});
                auto prev = z.find({n - 1, i - 1, j - 1});
                if (cur == z.end() || dd == z.end() || dl == z.end() ||
                    dr == z.end() || prev == z.end())
                    continue;
                TSeries num = ts_sub(ts_mul(cur->second, dd->second),
                                     ts_mul(dl->second, dr->second));
                if (num.coeff[0] != 0)
                    throw std::logic_error(
                        "bilinear recursion numerator has a nonzero constant "
                        "term");
                TSeries quot =
                    ts_div(ts_shift_down(num, 1), prev->second);
                z[{n + 1, i, j}] =
                    ts_scale(quot, ratio(BigInt(1), BigInt(n)));
                produced = true;
            }
        }
        // A vanishing offset pins Z = 1 on the corresponding boundary line.
        for (int i = 0; i <= extent; ++i) {
            if (a0 == 0) {
                z.insert({{n + 1, 0, i}, one});
                produced = true;
            }
            if (b0 == 0) {
                z.insert({{n + 1, i, 0}, one});
                produced = true;
            }
        }
        if (!produced)
            throw ValidationError(
                "grid extent too small to reach the requested level");
    }

    for (auto& [key, ser] : z) {
        const int keep = std::min(ser.order(), order);
        g.z.emplace(key, ts_truncate(ser, keep));
    }
    return g;
}

namespace {

// Gamma(c + hi) / Gamma(c + lo) as a finite product of rational shifts;
// a zero factor in the denominator is a genuine pole of the summand.
Rational gamma_shift_ratio(const Rational& c, int hi, int lo) {
    if (hi >= lo) {
        Rational p(1);
        for (int j = lo; j < hi; ++j)
            p *= c + Rational(j);
        return p;
    }
    Rational p(1);
    for (int j = hi; j < lo; ++j) {
        Rational f = c + Rational(j);
        if (f == 0)
            throw ValidationError(
                "shift parameter sits on a pole; use non-integer values or "
                "shifts of at least the level");
        p *= f;
    }
    return Rational(1) / p;
}

}  // namespace

TSeries zndetf_oracle(int n, const Rational& a, const Rational& b, int order) {
    if (n < 0)
        throw ValidationError("lattice level must be non-negative");
    if (order < 0)
        throw ValidationError("series order must be non-negative");
    TSeries out = ts_constant(Rational(1), order);
    if (n == 0)
        return out;

    // s-power of a tuple: sum k_i - n(n-1)/2; distinct entries force it >= 0.
    const int base = n * (n - 1) / 2;
    const int max_sum = order + base;
    std::vector<Rational> inv_fact(static_cast<std::size_t>(max_sum) + 1);
    for (int k = 0; k <= max_sum; ++k)
        inv_fact[static_cast<std::size_t>(k)] =
            ratio(BigInt(1), factorial(k));

    out.coeff[0] = 0;  // rebuilt by the k = (n-1, ..., 0) family of tuples
    std::vector<int> ks(static_cast<std::size_t>(n), 0);
    int sum = 0;
    int pos = 0;
    while (true) {
        if (pos == n) {
            const int power = sum - base;
            bool distinct = true;
            for (int x = 0; x < n && distinct; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (ks[static_cast<std::size_t>(x)] ==
                        ks[static_cast<std::size_t>(y)]) {
                        distinct = false;
                        break;
                    }
            if (power >= 0 && power <= order && distinct) {
                BigInt vand(1);
                for (int x = 0; x < n; ++x)
                    for (int y = x + 1; y < n; ++y)
                        vand *= BigInt(ks[static_cast<std::size_t>(x)] -
                                       ks[static_cast<std::size_t>(y)]);
                Rational term(vand * vand);
                for (int i = 1; i <= n; ++i) {
                    const int k = ks[static_cast<std::size_t>(i - 1)];
                    term *= ratio(BigInt(1), factorial(i));
                    term *= inv_fact[static_cast<std::size_t>(k)];
                    term *= gamma_shift_ratio(a, k - n + 1, 1 - i);
                    term *= gamma_shift_ratio(b, k - n + 1, 1 - i);
                }
                out.coeff[static_cast<std::size_t>(power)] += term;
            }
            --pos;
            if (pos < 0)
                break;
            sum -= ks[static_cast<std::size_t>(pos)];
            ++ks[static_cast<std::size_t>(pos)];
            sum += ks[static_cast<std::size_t>(pos)];
            continue;
        }
        if (sum > max_sum) {
            // Overflow at this digit: reset and carry into the previous one.
            sum -= ks[static_cast<std::size_t>(pos)];
            ks[static_cast<std::size_t>(pos)] = 0;
            --pos;
            if (pos < 0)
                break;
            sum -= ks[static_cast<std::size_t>(pos)];
            ++ks[static_cast<std::size_t>(pos)];
            sum += ks[static_cast<std::size_t>(pos)];
            continue;
        }
        ++pos;
    }
    return out;
}

Rational OmegaPolynomial::eval(const Rational& a, const Rational& b,
                               const Rational& n) const {
    Rational total(0);
    for (const auto& [key, c] : coeffs)
        total += c * rational_pow(a, key[0]) * rational_pow(b, key[1]) *
                 rational_pow(n, key[2]);
    return total;
}

namespace {

// Coefficient vectors of the Lagrange basis over the nodes 0..deg.
std::vector<std::vector<Rational>> lagrange_basis(int deg) {
    std::vector<std::vector<Rational>> basis;
    for (int x = 0; x <= deg; ++x) {
        std::vector<Rational> poly{Rational(1)};
        for (int y = 0; y <= deg; ++y) {
            if (y == x)
                continue;
            // Multiply by (xi - y) / (x - y).
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            const Rational scale = ratio(BigInt(1), BigInt(x - y));
            for (std::size_t p = 0; p < poly.size(); ++p) {
                next[p] += poly[p] * Rational(-y) * scale;
                next[p + 1] += poly[p] * scale;
            }
            poly = std::move(next);
        }
        basis.push_back(std::move(poly));
    }
    return basis;
}

using ValueTable = std::map<std::array<int, 3>, Rational>;  // {n, a, b}

// Free-energy coefficient at integer lattice points, from the value table.
const Rational& table_value(const ValueTable& vals, int n, int a, int b) {
    auto it = vals.find({n, a, b});
    if (it == vals.end())
        throw std::logic_error("interpolation value missing from the table");
    return it->second;
}

OmegaPolynomial interpolate_omega(const ValueTable& vals, int m, int deg) {
    const auto basis = lagrange_basis(deg);
    const int w = deg + 1;
    // Contract one variable at a time: values -> coefficients.
    std::vector<Rational> cube(static_cast<std::size_t>(w) * w * w,
                               Rational(0));
    auto idx = [w](int x, int y, int z) {
        return static_cast<std::size_t>((x * w + y) * w + z);
    };
    for (int xa = 0; xa < w; ++xa)
        for (int xb = 0; xb < w; ++xb)
            for (int xn = 0; xn < w; ++xn)
                cube[idx(xa, xb, xn)] = table_value(vals, xn, xa, xb);
    for (int axis = 0; axis < 3; ++axis) {
        std::vector<Rational> next(cube.size(), Rational(0));
        for (int x = 0; x < w; ++x)
            for (int y = 0; y < w; ++y)
                for (int src = 0; src < w; ++src) {
                    const Rational* v = nullptr;
                    switch (axis) {
                        case 0: v = &cube[idx(src, x, y)]; break;
                        case 1: v = &cube[idx(x, src, y)]; break;
                        default: v = &cube[idx(x, y, src)]; break;
                    }
                    if (*v == 0)
                        continue;
                    const auto& bl = basis[static_cast<std::size_t>(src)];
                    for (std::size_t p = 0; p < bl.size(); ++p) {
                        if (bl[p] == 0)
                            continue;
                        switch (axis) {
                            case 0:
                                next[idx(static_cast<int>(p), x, y)] +=
                                    *v * bl[p];
                                break;
                            case 1:
                                next[idx(x, static_cast<int>(p), y)] +=
                                    *v * bl[p];
                                break;
                            default:
                                next[idx(x, y, static_cast<int>(p))] +=
                                    *v * bl[p];
                                break;
                        }
                    }
                }
        cube = std::move(next);
    }
    OmegaPolynomial omega;
    omega.m = m;
    for (int da = 0; da < w; ++da)
        for (int db = 0; db < w; ++db)
            for (int dn = 0; dn < w; ++dn) {
                const Rational& c = cube[idx(da, db, dn)];
                if (c != 0)
                    omega.coeffs[{da, db, dn}] = c;
            }
    return omega;
}

bool omega_consistent(const OmegaPolynomial& omega, const ValueTable& vals,
                      int deg, int n_top, int extent) {
    for (const auto& entry : omega.coeffs) {
        if (entry.first[0] < 1 || entry.first[1] < 1 || entry.first[2] < 1)
            return false;
    }
    // Re-check on grid points outside the interpolation cube.
    std::vector<std::array<int, 3>> probes;  // {n, a, b}
    if (deg + 1 <= n_top) {
        probes.push_back({deg + 1, 1, 1});
        probes.push_back({deg + 1, std::min(deg + 1, extent), 2});
    }
    if (deg + 1 <= extent) {
        probes.push_back({1, deg + 1, 1});
        probes.push_back({2, deg + 1, std::min(deg + 1, extent)});
        probes.push_back({1, 2, deg + 1});
    }
    for (const auto& pr : probes) {
        const Rational want = table_value(vals, pr[0], pr[1], pr[2]);
        const Rational got =
            omega.eval(Rational(pr[1]), Rational(pr[2]), Rational(pr[0]));
        if (want != got)
            return false;
    }
    return true;
}

}  // namespace

std::vector<OmegaPolynomial> omega_polynomials(int m_max) {
    if (m_max < 1)
        throw ValidationError("coefficient index must be at least 1");
    const int max_deg = m_max + 2;
    const int n_top = max_deg + 1;
    const int extent = max_deg + 1;
    const GridSeries grid =
        hirota_grid(Rational(0), Rational(0), extent, n_top, m_max);

    // vals[m] maps {n, a, b} -> order-m coefficient of log Z_n(a, b).
    std::vector<ValueTable> vals(static_cast<std::size_t>(m_max) + 1);
    for (int n = 0; n <= n_top; ++n)
        for (int i = 0; i <= extent; ++i)
            for (int j = 0; j <= extent; ++j) {
                const TSeries f = grid.log_at(n, i, j);
                for (int m = 1; m <= std::min(m_max, f.order()); ++m)
                    vals[static_cast<std::size_t>(m)][{n, i, j}] = f.at(m);
            }

    std::vector<OmegaPolynomial> out;
    for (int m = 1; m <= m_max; ++m) {
        bool done = false;
        for (int deg = m; deg <= max_deg && !done; ++deg) {
            OmegaPolynomial omega = interpolate_omega(
                vals[static_cast<std::size_t>(m)], m, deg);
            if (omega_consistent(omega, vals[static_cast<std::size_t>(m)],
                                 deg, n_top, extent)) {
                out.push_back(std::move(omega));
                done = true;
            } else {
                std::cerr << "warning: degree bound " << deg
                          << " failed verification for coefficient " << m
                          << "; raising it\n";
            }
        }
        if (!done)
            throw ValidationError(
                "free-energy interpolation never satisfied its degree bound");
    }
    return out;
}

GenusZeroTricolor genus_zero_system(const Rational& x1, const Rational& x2,
                                    const Rational& x3, int order) {
    if (order < 0)
        throw ValidationError("series order must be non-negative");
    // Two extra orders so the product F1 F2 F3, which starts at t^3, still
    // determines f0 through t^order.
    const int work_order = order + 2;
    const std::array<Rational, 3> x{x1, x2, x3};
    std::array<TSeries, 3> f;
    for (auto& s : f)
        s = ts_constant(Rational(0), work_order);
    // Each pass through F_i = t x_i + F_i (F_j + F_k) gains one exact order.
    for (int pass = 0; pass <= work_order; ++pass) {
        std::array<TSeries, 3> next = f;
        for (int i = 0; i < 3; ++i) {
            TSeries rhs = ts_mul(f[static_cast<std::size_t>(i)],
                                 ts_add(f[static_cast<std::size_t>((i + 1) % 3)],
                                        f[static_cast<std::size_t>((i + 2) % 3)]));
            if (work_order >= 1)
                rhs.coeff[1] += x[static_cast<std::size_t>(i)];
            next[static_cast<std::size_t>(i)] = std::move(rhs);
        }
        f = std::move(next);
    }
    TSeries prod = ts_mul(ts_mul(f[0], f[1]), f[2]);
    for (int k = 0; k <= std::min(2, prod.order()); ++k) {
        if (prod.coeff[static_cast<std::size_t>(k)] != 0)
            throw std::logic_error(
                "triple product must start at the third order");
    }
    GenusZeroTricolor out;
    out.f0 = ts_constant(Rational(0), order);
    for (int m = 1; m <= order; ++m)
        out.f0.coeff[static_cast<std::size_t>(m)] =
            prod.at(m + 2) / Rational(m * m);
    out.f1 = ts_truncate(f[0], order);
    out.f2 = ts_truncate(f[1], order);
    out.f3 = ts_truncate(f[2], order);
    return out;
}

}  // namespace meandrics
