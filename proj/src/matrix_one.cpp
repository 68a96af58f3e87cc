#include "meandrics/matrix_one.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

namespace meandrics {

namespace {

int key_total(const std::vector<int>& key) {
    int t = 0;
    for (int e : key) t += e;
    return t;
}

void drop_zeros(CouplingSeries& s) {
    for (auto it = s.terms.begin(); it != s.terms.end();) {
        if (it->second == 0) {
            it = s.terms.erase(it);
        } else {
            ++it;
        }
    }
}

void require_compatible(const CouplingSeries& a, const CouplingSeries& b) {
    if (a.vars != b.vars || a.order != b.order) {
        throw ValidationError("coupling series shapes do not match");
    }
}

void validate_potential(const Potential& pot) {
    for (const PotentialTerm& t : pot) {
        if (t.valency < 4 || t.valency % 2 != 0) {
            throw ValidationError(
                "potential valency must be even and at least 4");
        }
    }
}

int max_valency(const Potential& pot) {
    int v = 0;
    for (const PotentialTerm& t : pot) v = std::max(v, t.valency);
    return v;
}

// All exponent tuples of length `vars` with total degree <= order.
std::vector<std::vector<int>> all_keys(int vars, int order) {
    std::vector<std::vector<int>> out;
    std::vector<int> key(vars, 0);
    while (true) {
        out.push_back(key);
        int pos = vars - 1;
        while (pos >= 0) {
            ++key[pos];
            if (key_total(key) <= order) break;
            key[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    return out;
}

// Sum over +-1 walks of length `len` from level m down to level m-1 that stay
// strictly positive before each down step; a down step from level l carries a
// factor r[l], an up step carries 1.
CouplingSeries walk_sum(const std::vector<CouplingSeries>& r, int m, int len,
                        int vars, int order) {
    CouplingSeries total = series_constant(vars, order, Rational(0));
    const unsigned n_masks = 1u << len;
    for (unsigned mask = 0; mask < n_masks; ++mask) {
        int level = m;
        bool alive = true;
        CouplingSeries prod = series_constant(vars, order, Rational(1));
        for (int s = 0; s < len; ++s) {
            if (mask & (1u << s)) {
                ++level;
            } else {
                if (level <= 0) {
                    alive = false;
                    break;
                }
                prod = series_mul(prod, r[static_cast<size_t>(level)]);
                --level;
            }
            // Abandon walks that can no longer land on m-1; this also caps
            // the levels ever read at m plus half the remaining length.
            if (std::abs(level - (m - 1)) > len - s - 1) {
                alive = false;
                break;
            }
        }
        if (alive && level == m - 1) total = series_add(total, prod);
    }
    return total;
}

using ZPoly = std::vector<Rational>;

void zp_trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly out(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i) {
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    zp_trim(out);
    return out;
}

void zp_add_into(ZPoly& a, const ZPoly& b, const Rational& c) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] += c * b[i];
    zp_trim(a);
}

void zps_drop_zeros(ZPolySeries& s) {
    for (auto it = s.terms.begin(); it != s.terms.end();) {
        zp_trim(it->second);
        if (it->second.empty()) {
            it = s.terms.erase(it);
        } else {
            ++it;
        }
    }
}

ZPolySeries zps_constant_z(int vars, int order) {
    ZPolySeries s;
    s.vars = vars;
    s.order = order;
    s.terms[std::vector<int>(static_cast<size_t>(vars), 0)] = {Rational(0),
                                                               Rational(1)};
    return s;
}

ZPolySeries zps_add(const ZPolySeries& a, const ZPolySeries& b,
                    const Rational& c) {
    ZPolySeries out = a;
    for (const auto& [key, poly] : b.terms) {
        zp_add_into(out.terms[key], poly, c);
    }
    zps_drop_zeros(out);
    return out;
}

ZPolySeries zps_mul(const ZPolySeries& a, const ZPolySeries& b) {
    ZPolySeries out;
    out.vars = a.vars;
    out.order = a.order;
    for (const auto& [ka, pa] : a.terms) {
        for (const auto& [kb, pb] : b.terms) {
            if (key_total(ka) + key_total(kb) > out.order) continue;
            std::vector<int> key(ka);
            for (size_t i = 0; i < key.size(); ++i) key[i] += kb[i];
            zp_add_into(out.terms[key], zp_mul(pa, pb), Rational(1));
        }
    }
    zps_drop_zeros(out);
    return out;
}

ZPolySeries zps_pow(const ZPolySeries& a, int p) {
    ZPolySeries out = a;
    for (int i = 1; i < p; ++i) out = zps_mul(out, a);
    return out;
}

// Shift the exponent of coupling `index` up by one, dropping overflow.
ZPolySeries zps_mul_var(const ZPolySeries& a, int index) {
    ZPolySeries out;
    out.vars = a.vars;
    out.order = a.order;
    for (const auto& [key, poly] : a.terms) {
        if (key_total(key) + 1 > a.order) continue;
        std::vector<int> k2(key);
        ++k2[static_cast<size_t>(index)];
        out.terms[k2] = poly;
    }
    return out;
}

// log(1 + w) for a series with no constant part (the empty-key polynomial
// must itself vanish).
ZPolySeries zps_log1p(const ZPolySeries& w) {
    ZPolySeries total;
    total.vars = w.vars;
    total.order = w.order;
    ZPolySeries power = w;
    for (int j = 1; j <= w.order && !power.terms.empty(); ++j) {
        Rational c(((j % 2) == 1) ? 1 : -1, j);
        total = zps_add(total, power, c);
        if (j < w.order) power = zps_mul(power, w);
    }
    return total;
}

ZPolySeries planar_fixed_point(const Potential& pot, int order) {
    validate_potential(pot);
    if (order < 0) throw ValidationError("order must be nonnegative");
    const int vars = static_cast<int>(pot.size());
    const ZPolySeries z = zps_constant_z(vars, order);
    ZPolySeries r = z;
    for (int sweep = 0; sweep < order; ++sweep) {
        ZPolySeries next = z;
        for (size_t j = 0; j < pot.size(); ++j) {
            const int v = pot[j].valency;
            Rational c = -pot[j].scale * Rational(binomial(v - 1, v / 2));
            ZPolySeries piece =
                zps_mul_var(zps_pow(r, v / 2), static_cast<int>(j));
            next = zps_add(next, piece, c);
        }
        r = std::move(next);
    }
    return r;
}

}  // namespace

Rational CouplingSeries::at(const std::vector<int>& key) const {
    auto it = terms.find(key);
    return it == terms.end() ? Rational(0) : it->second;
}

CouplingSeries series_constant(int vars, int order, const Rational& c) {
    CouplingSeries s;
    s.vars = vars;
    s.order = order;
    if (c != 0) s.terms[std::vector<int>(static_cast<size_t>(vars), 0)] = c;
    return s;
}

CouplingSeries series_variable(int vars, int order, int index) {
    if (index < 0 || index >= vars) {
        throw ValidationError("coupling index out of range");
    }
    CouplingSeries s;
    s.vars = vars;
    s.order = order;
    if (order >= 1) {
        std::vector<int> key(static_cast<size_t>(vars), 0);
        key[static_cast<size_t>(index)] = 1;
        s.terms[key] = Rational(1);
    }
    return s;
}

CouplingSeries series_add(const CouplingSeries& a, const CouplingSeries& b) {
    require_compatible(a, b);
    CouplingSeries out = a;
    for (const auto& [key, c] : b.terms) out.terms[key] += c;
    drop_zeros(out);
    return out;
}

CouplingSeries series_sub(const CouplingSeries& a, const CouplingSeries& b) {
    require_compatible(a, b);
    CouplingSeries out = a;
    for (const auto& [key, c] : b.terms) out.terms[key] -= c;
    drop_zeros(out);
    return out;
}

CouplingSeries series_mul(const CouplingSeries& a, const CouplingSeries& b) {
    require_compatible(a, b);
    CouplingSeries out;
    out.vars = a.vars;
    out.order = a.order;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            if (key_total(ka) + key_total(kb) > out.order) continue;
            std::vector<int> key(ka);
            for (size_t i = 0; i < key.size(); ++i) key[i] += kb[i];
            out.terms[key] += ca * cb;
        }
    }
    drop_zeros(out);
    return out;
}

CouplingSeries series_scale(const CouplingSeries& a, const Rational& c) {
    CouplingSeries out;
    out.vars = a.vars;
    out.order = a.order;
    if (c == 0) return out;
    out.terms = a.terms;
    for (auto& [key, v] : out.terms) v *= c;
    return out;
}

CouplingSeries series_log1p(const CouplingSeries& s) {
    const std::vector<int> zero_key(static_cast<size_t>(s.vars), 0);
    if (s.at(zero_key) != 0) {
        throw ValidationError("log expansion needs a zero constant term");
    }
    CouplingSeries total = series_constant(s.vars, s.order, Rational(0));
    CouplingSeries power = s;
    for (int j = 1; j <= s.order && !power.terms.empty(); ++j) {
        Rational c(((j % 2) == 1) ? 1 : -1, j);
        total = series_add(total, series_scale(power, c));
        if (j < s.order) power = series_mul(power, s);
    }
    return total;
}

std::vector<CouplingSeries> string_equation_finite_N(const Potential& pot,
                                                     int n_size, int m_max,
                                                     int order) {
    validate_potential(pot);
    if (n_size < 1) throw ValidationError("matrix size must be positive");
    if (m_max < 0) throw ValidationError("m_max must be nonnegative");
    if (order < 0) throw ValidationError("order must be nonnegative");

    const int vars = static_cast<int>(pot.size());
    const int reach = pot.empty() ? 0 : (max_valency(pot) - 2) / 2;
    const int m_store = m_max + order * reach;

    std::vector<CouplingSeries> r(static_cast<size_t>(m_store) + 1);
    r[0] = series_constant(vars, order, Rational(0));
    for (int m = 1; m <= m_store; ++m) {
        r[static_cast<size_t>(m)] =
            series_constant(vars, order, ratio(m, n_size));
    }

    for (int sweep = 1; sweep <= order; ++sweep) {
        const int m_hi = m_max + (order - sweep) * reach;
        const std::vector<CouplingSeries> prev = r;
        for (int m = 1; m <= m_hi; ++m) {
            CouplingSeries val =
                series_constant(vars, order, ratio(m, n_size));
            for (size_t j = 0; j < pot.size(); ++j) {
                CouplingSeries piece =
                    walk_sum(prev, m, pot[j].valency - 1, vars, order);
                piece = series_mul(
                    piece, series_variable(vars, order, static_cast<int>(j)));
                val = series_sub(val, series_scale(piece, pot[j].scale));
            }
            r[static_cast<size_t>(m)] = std::move(val);
        }
    }

    r.resize(static_cast<size_t>(m_max) + 1);
    return r;
}

CouplingSeries finite_free_energy(const Potential& pot, int n_size,
                                  int order) {
    validate_potential(pot);
    if (n_size < 1) throw ValidationError("matrix size must be positive");
    if (order < 0) throw ValidationError("order must be nonnegative");
    const int vars = static_cast<int>(pot.size());

    // Leading normalization: the ratio of the lowest orthogonal-polynomial
    // norm to its Gaussian value, via one-dimensional Gaussian moments.
    CouplingSeries h0 = series_constant(vars, order, Rational(0));
    for (const std::vector<int>& key : all_keys(vars, order)) {
        Rational c(1);
        int star_total = 0;
        for (size_t j = 0; j < key.size(); ++j) {
            const int k = key[j];
            if (k == 0) continue;
            Rational base =
                Rational(-n_size) * pot[j].scale / Rational(pot[j].valency);
            for (int i = 0; i < k; ++i) c *= base;
            c /= Rational(factorial(k));
            star_total += pot[j].valency * k;
        }
        c *= Rational(double_factorial_odd(star_total));
        BigInt scale_pow;
        mpz_ui_pow_ui(scale_pow.get_mpz_t(), static_cast<unsigned>(n_size),
                      static_cast<unsigned>(star_total / 2));
        c /= Rational(scale_pow);
        if (c != 0) h0.terms[key] = c;
    }
    CouplingSeries total = series_scale(
        series_log1p(
            series_sub(h0, series_constant(vars, order, Rational(1)))),
        Rational(n_size));

    // Tail: sum of (n_size - i) * log(n_size * r_i / i) over i < n_size.
    std::vector<CouplingSeries> r =
        string_equation_finite_N(pot, n_size, n_size - 1, order);
    for (int i = 1; i < n_size; ++i) {
        CouplingSeries w = series_sub(
            series_scale(r[static_cast<size_t>(i)], ratio(n_size, i)),
            series_constant(vars, order, Rational(1)));
        total = series_add(
            total, series_scale(series_log1p(w), Rational(n_size - i)));
    }
    return total;
}

CouplingSeries ZPolySeries::at_z(const Rational& z) const {
    CouplingSeries out;
    out.vars = vars;
    out.order = order;
    for (const auto& [key, poly] : terms) {
        Rational acc(0);
        for (size_t i = poly.size(); i-- > 0;) acc = acc * z + poly[i];
        if (acc != 0) out.terms[key] = acc;
    }
    return out;
}

ZPolySeries planar_r_series(const Potential& pot, int order) {
    return planar_fixed_point(pot, order);
}

CouplingSeries planar_free_energy(const Potential& pot, int order) {
    ZPolySeries r = planar_fixed_point(pot, order);
    // Form r/z - 1; every term of r carries at least one power of z.
    ZPolySeries w;
    w.vars = r.vars;
    w.order = r.order;
    for (const auto& [key, poly] : r.terms) {
        if (!poly.empty() && poly[0] != 0) {
            throw ValidationError("planar recursion data not divisible by z");
        }
        ZPoly shifted(poly.begin() + (poly.empty() ? 0 : 1), poly.end());
        w.terms[key] = std::move(shifted);
    }
    const std::vector<int> zero_key(static_cast<size_t>(w.vars), 0);
    auto it = w.terms.find(zero_key);
    if (it != w.terms.end()) {
        if (it->second.empty() || it->second[0] != 1) {
            throw ValidationError("planar recursion data must start at z");
        }
        it->second[0] = 0;
        zp_trim(it->second);
        if (it->second.empty()) w.terms.erase(it);
    }

    ZPolySeries lg = zps_log1p(w);
    CouplingSeries out;
    out.vars = w.vars;
    out.order = w.order;
    for (const auto& [key, poly] : lg.terms) {
        Rational acc(0);
        for (size_t a = 0; a < poly.size(); ++a) {
            acc += poly[a] * (Rational(1, static_cast<int>(a) + 1) -
                              Rational(1, static_cast<int>(a) + 2));
        }
        if (acc != 0) out.terms[key] = acc;
    }
    return out;
}

CouplingSeries planar_moments(const Potential& pot, int n, int order) {
    validate_potential(pot);
    if (n < 0) throw ValidationError("moment index must be nonnegative");
    if (order < 0) throw ValidationError("order must be nonnegative");
    const int vars = static_cast<int>(pot.size());
    if (n == 0) return series_constant(vars, order, Rational(1));
    if (n % 2 == 1) return series_constant(vars, order, Rational(0));

    const int p = n / 2;
    ZPolySeries rp = zps_pow(planar_fixed_point(pot, order), p);
    CouplingSeries out;
    out.vars = vars;
    out.order = order;
    const Rational lead = Rational(binomial(n, p));
    for (const auto& [key, poly] : rp.terms) {
        Rational acc(0);
        for (size_t a = 0; a < poly.size(); ++a) {
            acc += poly[a] * Rational(1, static_cast<int>(a) + 1);
        }
        acc *= lead;
        if (acc != 0) out.terms[key] = acc;
    }
    return out;
}

QuarticCritical quartic_critical(int order) {
    if (order < 1) throw ValidationError("order must be positive");
    CouplingSeries fe = planar_free_energy(quartic_potential(), order);
    QuarticCritical out;
    out.g_c = Rational(1, 12);
    out.singular_exponent = Rational(5, 2);
    out.f0.assign(static_cast<size_t>(order) + 1, Rational(0));
    for (int n = 1; n <= order; ++n) out.f0[static_cast<size_t>(n)] = fe.at({n});
    return out;
}

}  // namespace meandrics
