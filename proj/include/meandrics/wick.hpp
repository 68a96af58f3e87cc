// Finite-size Gaussian matrix averages by exhaustive half-edge pairing:
// exact Laurent polynomials in the matrix size N, face/genus resolution per
// pairing, and connected free-energy series with exact symmetry factors.
#pragma once

#include "meandrics/numeric.hpp"

#include <functional>
#include <map>
#include <vector>

namespace meandrics {

// One trace word per star; each entry is the matrix label (color) in 1..k of
// a half-edge pocket, listed in the cyclic order around the star.
struct StarSystem {
    std::vector<std::vector<int>> stars;

    int total_half_edges() const;
    int max_color() const;
};

// Symmetric k x k table of contraction weights between matrix labels.
struct PropagatorTable {
    std::vector<std::vector<Rational>> p;

    static PropagatorTable identity(int k);
    int colors() const { return static_cast<int>(p.size()); }
    const Rational& weight(int a, int b) const { return p[a - 1][b - 1]; }
};

// Finitely supported Laurent polynomial in N: power -> exact coefficient.
using LaurentN = std::map<int, Rational>;

Rational laurent_eval(const LaurentN& l, const Rational& n);
LaurentN laurent_mul(const LaurentN& x, const LaurentN& y);

// Number of cycles of a permutation given as an image table.
int count_cycles(const std::vector<int>& perm);

// A pairing is an involution on the global half-edge indices (stars
// concatenated in order). Faces are the cycles of (pairing, then cyclic
// successor around the star).
int count_faces(const StarSystem& s, const std::vector<int>& pairing);

struct FacesGenus {
    int faces = 0;
    // One entry per connected component: (vertices, edges, faces, genus).
    struct Component {
        int vertices, edges, faces, genus;
    };
    std::vector<Component> components;
};
FacesGenus faces_and_genus(const StarSystem& s, const std::vector<int>& pairing);

// Sum over all complete pairings of the product of propagator weights times
// N^{F-E}. Zero-weight contractions are pruned. The empty system gives 1.
LaurentN gaussian_average(const StarSystem& s, const PropagatorTable& p,
                          std::uint64_t max_work = kDefaultMaxWork,
                          int threads = 1);
LaurentN gaussian_average_serial(const StarSystem& s, const PropagatorTable& p,
                                 std::uint64_t max_work = kDefaultMaxWork);

// Visit every complete pairing (colors with zero propagator weight are not
// pruned here); used by the genus classifier and by tests.
void for_each_pairing(int half_edges,
                      const std::function<void(const std::vector<int>&)>& fn,
                      WorkBudget* budget = nullptr);

// A family of identical single-color stars: all vertices Tr M_color^valency.
struct VertexFamily {
    int color;
    int valency;
};

// Coefficient series of log Z in the formal couplings attached to the
// families. Key: per-family vertex counts (same length as `families`).
// Each coefficient already contains the N^{V} / (valency^{count} * count!)
// vertex normalization, so a connected graph with genus h contributes at
// N^{2-2h}.
using CouplingKey = std::vector<int>;
std::map<CouplingKey, LaurentN> connected_free_energy(
    const std::vector<VertexFamily>& families, const PropagatorTable& p,
    int order, std::uint64_t max_work = kDefaultMaxWork);

// One-matrix convenience: couplings indexed by valency, color fixed to 1.
std::map<CouplingKey, LaurentN> connected_free_energy(
    const std::vector<int>& valencies, const PropagatorTable& p, int order,
    std::uint64_t max_work = kDefaultMaxWork);

}  // namespace meandrics
