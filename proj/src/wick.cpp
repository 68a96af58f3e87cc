#include "meandrics/wick.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace meandrics {

int StarSystem::total_half_edges() const {
    int h = 0;
    for (const auto& s : stars) h += static_cast<int>(s.size());
    return h;
}

int StarSystem::max_color() const {
    int k = 0;
    for (const auto& s : stars)
        for (int c : s) k = std::max(k, c);
    return k;
}

PropagatorTable PropagatorTable::identity(int k) {
    PropagatorTable t;
    t.p.assign(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i) t.p[i][i] = 1;
    return t;
}

Rational laurent_eval(const LaurentN& l, const Rational& n) {
    Rational out = 0;
    for (const auto& [pow, c] : l) {
        Rational term = c;
        Rational base = pow >= 0 ? n : Rational(1) / n;
        for (int i = 0; i < std::abs(pow); ++i) term *= base;
        out += term;
    }
    return out;
}

LaurentN laurent_mul(const LaurentN& x, const LaurentN& y) {
    LaurentN out;
    for (const auto& [px, cx] : x)
        for (const auto& [py, cy] : y) out[px + py] += cx * cy;
    for (auto it = out.begin(); it != out.end();)
        it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

int count_cycles(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (size_t s = 0; s < perm.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (size_t i = s; !seen[i]; i = perm[i]) seen[i] = 1;
    }
    return cycles;
}

namespace {

// Cyclic successor around each star, on global half-edge indices.
std::vector<int> rotation(const StarSystem& s) {
    std::vector<int> next(s.total_half_edges());
    int base = 0;
    for (const auto& st : s.stars) {
        int len = static_cast<int>(st.size());
        for (int i = 0; i < len; ++i) next[base + i] = base + (i + 1) % len;
        base += len;
    }
    return next;
}

std::vector<int> star_of_half_edge(const StarSystem& s) {
    std::vector<int> owner(s.total_half_edges());
    int base = 0, idx = 0;
    for (const auto& st : s.stars) {
        for (size_t i = 0; i < st.size(); ++i) owner[base + i] = idx;
        base += static_cast<int>(st.size());
        ++idx;
    }
    return owner;
}

int find_root(std::vector<int>& up, int x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
}

}  // namespace

int count_faces(const StarSystem& s, const std::vector<int>& pairing) {
    auto next = rotation(s);
    std::vector<int> face(pairing.size());
    for (size_t h = 0; h < pairing.size(); ++h) face[h] = next[pairing[h]];
    return count_cycles(face);
}

FacesGenus faces_and_genus(const StarSystem& s, const std::vector<int>& pairing) {
    int H = s.total_half_edges();
    if (static_cast<int>(pairing.size()) != H)
        throw ValidationError("faces_and_genus: pairing size mismatch");
    for (int h = 0; h < H; ++h)
        if (pairing[h] < 0 || pairing[h] >= H || pairing[pairing[h]] != h ||
            pairing[h] == h)
            throw ValidationError("faces_and_genus: not an involution");

    auto next = rotation(s);
    auto owner = star_of_half_edge(s);
    int V = static_cast<int>(s.stars.size());
    std::vector<int> up(V);
    std::iota(up.begin(), up.end(), 0);
    for (int h = 0; h < H; ++h)
        up[find_root(up, owner[h])] = find_root(up, owner[pairing[h]]);

    // Tally V and E per component, then distribute face cycles.
    std::map<int, FacesGenus::Component> comp;
    for (int v = 0; v < V; ++v) comp[find_root(up, v)].vertices++;
    for (int h = 0; h < H; ++h)
        if (h < pairing[h]) comp[find_root(up, owner[h])].edges++;

    FacesGenus out;
    std::vector<char> seen(H, 0);
    for (int h0 = 0; h0 < H; ++h0) {
        if (seen[h0]) continue;
        out.faces++;
        comp[find_root(up, owner[h0])].faces++;
        for (int h = h0; !seen[h]; h = next[pairing[h]]) seen[h] = 1;
    }
    for (auto& [root, c] : comp) {
        int chi = c.vertices - c.edges + c.faces;
        if (chi % 2 != 0 || chi > 2)
            throw ValidationError("faces_and_genus: non-orientable Euler count");
        c.genus = (2 - chi) / 2;
        out.components.push_back(c);
    }
    return out;
}

void for_each_pairing(int half_edges,
                      const std::function<void(const std::vector<int>&)>& fn,
                      WorkBudget* budget) {
    if (half_edges % 2 != 0) return;
    std::vector<int> pairing(half_edges, -1);
    std::function<void(int)> rec = [&](int lo) {
        while (lo < half_edges && pairing[lo] >= 0) ++lo;
        if (lo == half_edges) {
            if (budget) budget->charge();
            fn(pairing);
            return;
        }
        for (int j = lo + 1; j < half_edges; ++j) {
            if (pairing[j] >= 0) continue;
            pairing[lo] = j;
            pairing[j] = lo;
            rec(lo + 1);
            pairing[lo] = pairing[j] = -1;
        }
    };
    rec(0);
}

namespace {

// Depth-first over pairings with weight accumulation and zero pruning.
// `colors` is the flattened color list; weight = product of propagator
// entries over edges. On completion adds weight * N^{F-E} into `acc`.
struct AverageWalker {
    const StarSystem& sys;
    const PropagatorTable& prop;
    std::vector<int> colors;
    std::vector<int> pairing;
    int H;
    WorkBudget budget;
    LaurentN acc;

    AverageWalker(const StarSystem& s, const PropagatorTable& p, std::uint64_t mw)
        : sys(s), prop(p), budget(mw) {
        for (const auto& st : s.stars)
            colors.insert(colors.end(), st.begin(), st.end());
        H = static_cast<int>(colors.size());
        pairing.assign(H, -1);
        int k = prop.colors();
        for (int c : colors)
            if (c < 1 || c > k) throw ValidationError("star color outside propagator table");
    }

    void run(int lo, Rational weight) {
        budget.charge();
        while (lo < H && pairing[lo] >= 0) ++lo;
        if (lo == H) {
            int F = count_faces(sys, pairing);
            acc[F - H / 2] += weight;
            return;
        }
        for (int j = lo + 1; j < H; ++j) {
            if (pairing[j] >= 0) continue;
            const Rational& w = prop.weight(colors[lo], colors[j]);
            if (w == 0) continue;
            pairing[lo] = j;
            pairing[j] = lo;
            run(lo + 1, weight * w);
            pairing[lo] = pairing[j] = -1;
        }
    }
};

void strip_zeros(LaurentN& l) {
    for (auto it = l.begin(); it != l.end();)
        it = it->second == 0 ? l.erase(it) : std::next(it);
}

}  // namespace

LaurentN gaussian_average_serial(const StarSystem& s, const PropagatorTable& p,
                                 std::uint64_t max_work) {
    int H = s.total_half_edges();
    if (H % 2 != 0) return {};
    if (H == 0) return {{0, Rational(1)}};
    AverageWalker w(s, p, max_work);
    w.run(0, Rational(1));
    strip_zeros(w.acc);
    return w.acc;
}

LaurentN gaussian_average(const StarSystem& s, const PropagatorTable& p,
                          std::uint64_t max_work, int threads) {
    int H = s.total_half_edges();
    if (H % 2 != 0) return {};
    if (H == 0) return {{0, Rational(1)}};
    if (threads <= 0) threads = omp_get_max_threads();
    if (threads == 1 || H < 6) return gaussian_average_serial(s, p, max_work);

    // Shard on the partner of half-edge 0; each branch walks serially and the
    // branch results are folded in index order for determinism.
    std::vector<int> flat;
    for (const auto& st : s.stars) flat.insert(flat.end(), st.begin(), st.end());
    std::vector<LaurentN> partial(H);
    bool limit_hit = false;
    std::string limit_msg;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int j = 1; j < H; ++j) {
        const Rational& w0 = p.weight(flat[0], flat[j]);
        if (w0 == 0) continue;
        try {
            AverageWalker w(s, p, max_work / static_cast<std::uint64_t>(H));
            w.pairing[0] = j;
            w.pairing[j] = 0;
            w.run(1, w0);
            partial[j] = std::move(w.acc);
        } catch (const ResourceLimitError& e) {
#pragma omp critical
            {
                limit_hit = true;
                limit_msg = e.what();
            }
        }
    }
    if (limit_hit) throw ResourceLimitError(limit_msg);
    LaurentN acc;
    for (const auto& part : partial)
        for (const auto& [pw, c] : part) acc[pw] += c;
    strip_zeros(acc);
    return acc;
}

namespace {

using Series = std::map<CouplingKey, LaurentN>;

Series series_mul(const Series& x, const Series& y, int order) {
    Series out;
    for (const auto& [kx, cx] : x) {
        int dx = std::accumulate(kx.begin(), kx.end(), 0);
        for (const auto& [ky, cy] : y) {
            int dy = std::accumulate(ky.begin(), ky.end(), 0);
            if (dx + dy > order) continue;
            CouplingKey k(kx.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = kx[i] + ky[i];
            LaurentN prod = laurent_mul(cx, cy);
            LaurentN& slot = out[k];
            for (const auto& [pw, c] : prod) slot[pw] += c;
        }
    }
    for (auto& [k, l] : out) strip_zeros(l);
    return out;
}

// Multi-indices with given length and total sum <= order.
void all_keys(int len, int order, CouplingKey& cur, int pos,
              const std::function<void(const CouplingKey&)>& fn) {
    if (pos == len) {
        fn(cur);
        return;
    }
    int used = std::accumulate(cur.begin(), cur.begin() + pos, 0);
    for (int v = 0; v + used <= order; ++v) {
        cur[pos] = v;
        all_keys(len, order, cur, pos + 1, fn);
    }
    cur[pos] = 0;
}

}  // namespace

std::map<CouplingKey, LaurentN> connected_free_energy(
    const std::vector<VertexFamily>& families, const PropagatorTable& p,
    int order, std::uint64_t max_work) {
    if (order < 0) throw ValidationError("connected_free_energy: negative order");
    int nf = static_cast<int>(families.size());
    Series z;
    CouplingKey cur(nf, 0);
    all_keys(nf, order, cur, 0, [&](const CouplingKey& key) {
        int V = std::accumulate(key.begin(), key.end(), 0);
        long H = 0;
        for (int f = 0; f < nf; ++f) H += static_cast<long>(key[f]) * families[f].valency;
        if (H % 2 != 0) return;  // odd half-edge count averages to zero
        StarSystem sys;
        for (int f = 0; f < nf; ++f)
            for (int c = 0; c < key[f]; ++c)
                sys.stars.push_back(std::vector<int>(families[f].valency, families[f].color));
        LaurentN avg = gaussian_average_serial(sys, p, max_work);
        // Vertex normalization: N^V / (prod valency^count * count!).
        Rational norm = 1;
        for (int f = 0; f < nf; ++f) {
            for (int c = 0; c < key[f]; ++c) norm /= families[f].valency;
            norm /= Rational(factorial(key[f]));
        }
        LaurentN shifted;
        for (const auto& [pw, c] : avg) {
            Rational v = c * norm;
            if (v != 0) shifted[pw + V] = v;
        }
        if (!shifted.empty()) z[key] = std::move(shifted);
    });

    // log Z = sum_{j>=1} (-1)^{j+1} (Z-1)^j / j, truncated at total degree.
    Series zm1 = z;
    zm1.erase(CouplingKey(nf, 0));
    Series logz, powj;
    powj[CouplingKey(nf, 0)] = {{0, Rational(1)}};
    for (int j = 1; j <= order; ++j) {
        powj = series_mul(powj, zm1, order);
        Rational c = Rational((j % 2 == 1) ? 1 : -1, j);
        for (const auto& [k, l] : powj)
            for (const auto& [pw, v] : l) logz[k][pw] += c * v;
    }
    for (auto& [k, l] : logz) strip_zeros(l);
    for (auto it = logz.begin(); it != logz.end();)
        it = it->second.empty() ? logz.erase(it) : std::next(it);
    return logz;
}

std::map<CouplingKey, LaurentN> connected_free_energy(
    const std::vector<int>& valencies, const PropagatorTable& p, int order,
    std::uint64_t max_work) {
    std::vector<VertexFamily> fams;
    for (int v : valencies) fams.push_back({1, v});
    return connected_free_energy(fams, p, order, max_work);
}

}  // namespace meandrics
