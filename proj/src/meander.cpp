#include "meandrics/meander.hpp"

#include "meandrics/wick.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace meandrics {

BigInt eval_poly(const ComponentPolynomial& poly, const BigInt& q) {
    BigInt out = 0;
    for (const auto& [k, c] : poly) {
        BigInt pw;
        mpz_pow_ui(pw.get_mpz_t(), q.get_mpz_t(), k);
        out += c * pw;
    }
    return out;
}

namespace {

void check_pair_budget(int n, std::uint64_t max_work) {
    BigInt pairs = catalan(n) * catalan(n);
    if (pairs > BigInt(static_cast<unsigned long>(max_work)))
        throw ResourceLimitError("meander pair sum needs " + pairs.get_str() +
                                 " gluings, budget is " + std::to_string(max_work));
}

}  // namespace

ComponentPolynomial meander_polynomial_serial(int n, std::uint64_t max_work) {
    if (n < 1) throw ValidationError("meander_polynomial: order must be >= 1");
    check_pair_budget(n, max_work);
    auto all = enumerate_arches(n);
    ComponentPolynomial poly;
    for (const auto& a : all)
        for (const auto& b : all) poly[glue_components(a, b)] += 1;
    return poly;
}

ComponentPolynomial meander_polynomial(int n, int threads, std::uint64_t max_work) {
    if (n < 1) throw ValidationError("meander_polynomial: order must be >= 1");
    check_pair_budget(n, max_work);
    if (threads <= 0) threads = omp_get_max_threads();
    auto all = enumerate_arches(n);
    int sz = static_cast<int>(all.size());
    // One loop-count tally per upper configuration; merged in index order.
    std::vector<std::vector<long>> tally(sz);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
    for (int i = 0; i < sz; ++i) {
        std::vector<long> local(n + 1, 0);
        for (const auto& b : all) ++local[glue_components(all[i], b)];
        tally[i] = std::move(local);
    }
    ComponentPolynomial poly;
    for (int i = 0; i < sz; ++i)
        for (int k = 1; k <= n; ++k)
            if (tally[i][k]) poly[k] += tally[i][k];
    return poly;
}

ComponentPolynomial semimeander_polynomial(int n, std::uint64_t max_work) {
    if (n < 1) throw ValidationError("semimeander_polynomial: order must be >= 1");
    if (catalan(n) > BigInt(static_cast<unsigned long>(max_work)))
        throw ResourceLimitError("semi-meander sum exceeds work budget");
    ComponentPolynomial poly;
    auto r = rainbow(n);
    for_each_arch(n, [&](const ArchConfig& a) { poly[glue_components(a, r)] += 1; });
    return poly;
}

namespace {

// Growth moves taking an order-2k configuration to its order-2(k+1)
// children: either wrap everything in one new outer arch (loop count +1),
// or, for each external arch, reroute its two ends to the new outer bridges
// (loop count unchanged). Children are emitted in a fixed order: wrap first,
// then external arches left to right.
void children_of(const std::vector<int>& match,
                 std::vector<std::pair<std::vector<int>, int>>& out) {
    int n2 = static_cast<int>(match.size());
    out.clear();
    std::vector<int> shifted(n2 + 2);
    for (int i = 0; i < n2; ++i) shifted[i + 1] = match[i] + 1;

    std::vector<int> big = shifted;
    big[0] = n2 + 1;
    big[n2 + 1] = 0;
    out.emplace_back(std::move(big), 1);

    for (int i = 0; i < n2; i = match[i] + 1) {
        int j = match[i];
        std::vector<int> ch = shifted;
        ch[0] = i + 1;
        ch[i + 1] = 0;
        ch[j + 1] = n2 + 1;
        ch[n2 + 1] = j + 1;
        out.emplace_back(std::move(ch), 0);
    }
}

int winding_of(const std::vector<int>& match) {
    int n = static_cast<int>(match.size()) / 2, w = 0;
    for (int i = 0; i < n; ++i)
        if (match[i] >= n) ++w;
    return w;
}

struct FlatTable {
    int n_max;
    std::vector<std::uint64_t> counts;  // [(n*(n_max+1) + k)*(n_max+1) + w]

    explicit FlatTable(int nm)
        : n_max(nm),
          counts(static_cast<size_t>(nm + 1) * (nm + 1) * (nm + 1), 0) {}
    std::uint64_t& at(int n, int k, int w) {
        return counts[(static_cast<size_t>(n) * (n_max + 1) + k) * (n_max + 1) + w];
    }
    void merge(const FlatTable& o) {
        for (size_t i = 0; i < counts.size(); ++i) counts[i] += o.counts[i];
    }
};

void dfs_count(const std::vector<int>& match, int n, int k, int n_max,
               FlatTable& table) {
    table.at(n, k, winding_of(match))++;
    if (n == n_max) return;
    std::vector<std::pair<std::vector<int>, int>> kids;
    children_of(match, kids);
    for (auto& [child, dk] : kids) dfs_count(child, n + 1, k + dk, n_max, table);
}

// Largest depth whose cumulative node count fits in the budget.
int affordable_depth(int n_max, std::uint64_t max_work) {
    BigInt nodes = 0;
    int depth = 0;
    for (int d = 1; d <= n_max; ++d) {
        nodes += catalan(d);
        if (nodes > BigInt(static_cast<unsigned long>(max_work))) break;
        depth = d;
    }
    return depth;
}

SemiMeanderTable finalize(const FlatTable& flat, int n_max) {
    SemiMeanderTable out;
    out.n_max = n_max;
    for (int n = 1; n <= n_max; ++n)
        for (int k = 1; k <= n; ++k)
            for (int w = 0; w <= n; ++w)
                if (auto c = flat.counts[(static_cast<size_t>(n) * (n_max + 1) + k) *
                                             (n_max + 1) +
                                         w])
                    out.rows[{n, k, w}] = BigInt(static_cast<unsigned long>(c));
    return out;
}

}  // namespace

ComponentPolynomial SemiMeanderTable::marginal(int n) const {
    ComponentPolynomial poly;
    for (const auto& [key, c] : rows)
        if (key[0] == n) poly[key[1]] += c;
    return poly;
}

std::string SemiMeanderTable::csv() const {
    std::ostringstream os;
    os << "n,k,w,count\n";
    for (const auto& [key, c] : rows)
        os << key[0] << "," << key[1] << "," << key[2] << "," << c.get_str() << "\n";
    return os.str();
}

SemiMeanderTable semimeander_table_serial(int n_max, std::uint64_t max_work) {
    if (n_max < 1) throw ValidationError("semimeander_table: order must be >= 1");
    int depth = affordable_depth(n_max, max_work);
    if (depth < 1) throw ResourceLimitError("semi-meander tree budget too small for depth 1");
    FlatTable flat(depth);
    dfs_count({1, 0}, 1, 1, depth, flat);
    if (depth < n_max)
        throw TableLimitError("semi-meander tree budget covers depth " +
                                  std::to_string(depth) + " of requested " +
                                  std::to_string(n_max),
                              finalize(flat, depth));
    return finalize(flat, n_max);
}

SemiMeanderTable semimeander_table(int n_max, int threads, std::uint64_t max_work) {
    if (n_max < 1) throw ValidationError("semimeander_table: order must be >= 1");
    if (threads <= 0) threads = omp_get_max_threads();
    int depth = affordable_depth(n_max, max_work);
    if (depth < 1) throw ResourceLimitError("semi-meander tree budget too small for depth 1");

    // Walk serially down to a small frontier depth, tallying along the way,
    // then hand each frontier subtree to a worker. Worker tables are merged
    // in frontier order, so the result does not depend on the thread count.
    int d0 = std::min(depth, 6);
    FlatTable head(depth);
    std::vector<std::pair<std::vector<int>, int>> frontier;
    std::function<void(const std::vector<int>&, int, int)> seed =
        [&](const std::vector<int>& match, int n, int k) {
            head.at(n, k, winding_of(match))++;
            if (n == depth) return;
            std::vector<std::pair<std::vector<int>, int>> kids;
            children_of(match, kids);
            for (auto& [child, dk] : kids) {
                if (n == d0)
                    frontier.emplace_back(std::move(child), k + dk);
                else
                    seed(child, n + 1, k + dk);
            }
        };
    seed({1, 0}, 1, 1);

    std::vector<FlatTable> parts(frontier.size(), FlatTable(depth));
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (size_t i = 0; i < frontier.size(); ++i)
        dfs_count(frontier[i].first, d0 + 1, frontier[i].second, depth, parts[i]);
    for (const auto& part : parts) head.merge(part);

    if (depth < n_max)
        throw TableLimitError("semi-meander tree budget covers depth " +
                                  std::to_string(depth) + " of requested " +
                                  std::to_string(n_max),
                              finalize(head, depth));
    return finalize(head, n_max);
}

namespace {

// Loop count between two arbitrary fixpoint-free involutions; every loop is
// covered by exactly two orbits of (lower o upper).
int loops_of_pair(const std::vector<int>& a, const std::vector<int>& b) {
    int n2 = static_cast<int>(a.size());
    std::vector<char> seen(n2, 0);
    int orbits = 0;
    for (int s = 0; s < n2; ++s) {
        if (seen[s]) continue;
        ++orbits;
        for (int i = s; !seen[i]; i = b[a[i]]) seen[i] = 1;
    }
    return orbits / 2;
}

// Genus of the closed surface made by thickening the river circle through
// all 2n bridges and attaching the chords of `a` above and `b` below. Each
// bridge vertex carries four half-edge slots in rotation order: river-right,
// upper chord, river-left, lower chord.
int genus_of_pair(const std::vector<int>& a, const std::vector<int>& b) {
    int n2 = static_cast<int>(a.size());
    int H = 4 * n2;
    auto slot = [](int v, int s) { return 4 * v + s; };
    std::vector<int> next(H), edge(H);
    for (int v = 0; v < n2; ++v)
        for (int s = 0; s < 4; ++s) next[slot(v, s)] = slot(v, (s + 1) % 4);
    for (int v = 0; v < n2; ++v) {
        int w = (v + 1) % n2;
        edge[slot(v, 0)] = slot(w, 2);
        edge[slot(w, 2)] = slot(v, 0);
    }
    for (int i = 0; i < n2; ++i) {
        if (a[i] > i) {
            edge[slot(i, 1)] = slot(a[i], 1);
            edge[slot(a[i], 1)] = slot(i, 1);
        }
        if (b[i] > i) {
            edge[slot(i, 3)] = slot(b[i], 3);
            edge[slot(b[i], 3)] = slot(i, 3);
        }
    }
    std::vector<int> face(H);
    for (int h = 0; h < H; ++h) face[h] = next[edge[h]];
    int F = count_cycles(face);  // shared face-walk primitive
    int V = n2, E = 2 * n2;
    int chi = V - E + F;
    return (2 - chi) / 2;
}

void all_involutions(int n2, const std::function<void(const std::vector<int>&)>& fn,
                     WorkBudget& budget) {
    for_each_pairing(n2, fn, &budget);
}

}  // namespace

std::map<std::array<int, 2>, BigInt> genus_component_histogram(int n,
                                                               std::uint64_t max_work) {
    if (n < 1) throw ValidationError("genus histogram: order must be >= 1");
    std::map<std::array<int, 2>, BigInt> hist;
    WorkBudget budget(max_work);
    std::vector<std::vector<int>> uppers;
    all_involutions(2 * n, [&](const std::vector<int>& a) { uppers.push_back(a); },
                    budget);
    for (const auto& a : uppers)
        for (const auto& b : uppers) {
            budget.charge();
            hist[{genus_of_pair(a, b), loops_of_pair(a, b)}] += 1;
        }
    return hist;
}

ComponentPolynomial genus_meander_polynomial(int n, int g, std::uint64_t max_work) {
    if (g < 0) throw ValidationError("genus must be >= 0");
    ComponentPolynomial poly;
    for (const auto& [key, c] : genus_component_histogram(n, max_work))
        if (key[0] == g) poly[key[1]] += c;
    return poly;
}

}  // namespace meandrics
