// Meander and semi-meander counting: component-resolved polynomials from
// exhaustive gluing, the growth-tree traversal with winding statistics, and
// genus-resolved counts over arbitrary (crossing) matchings.
#pragma once

#include "meandrics/arch.hpp"

#include <array>
#include <map>
#include <string>

namespace meandrics {

// coefficient[k] = number of configurations with exactly k closed loops.
using ComponentPolynomial = std::map<int, BigInt>;

BigInt eval_poly(const ComponentPolynomial& poly, const BigInt& q);

// Sum of q^{loops(a,b)} over all ordered pairs of order-2n configurations.
ComponentPolynomial meander_polynomial(int n, int threads = 1,
                                       std::uint64_t max_work = kDefaultMaxWork);
ComponentPolynomial meander_polynomial_serial(int n,
                                              std::uint64_t max_work = kDefaultMaxWork);

// Sum of q^{loops(a, rainbow)} over all order-2n configurations.
ComponentPolynomial semimeander_polynomial(int n,
                                           std::uint64_t max_work = kDefaultMaxWork);

// Counts by (order n, loops k, winding w) accumulated along the growth tree
// rooted at the one-arch configuration.
struct SemiMeanderTable {
    int n_max = 0;
    std::map<std::array<int, 3>, BigInt> rows;  // {n, k, w} -> count

    ComponentPolynomial marginal(int n) const;  // sum over w at fixed n
    std::string csv() const;                    // header n,k,w,count
};

// Thrown when the node budget cannot cover the requested depth; carries the
// table completed through the deepest affordable order.
struct TableLimitError : ResourceLimitError {
    TableLimitError(const std::string& msg, SemiMeanderTable partial_table)
        : ResourceLimitError(msg), partial(std::move(partial_table)) {}
    SemiMeanderTable partial;
};

SemiMeanderTable semimeander_table(int n_max, int threads = 1,
                                   std::uint64_t max_work = kDefaultMaxWork);
SemiMeanderTable semimeander_table_serial(int n_max,
                                          std::uint64_t max_work = kDefaultMaxWork);

// Loop-count polynomial restricted to pairs of matchings (crossings allowed)
// whose glued ribbon surface has genus exactly g.
ComponentPolynomial genus_meander_polynomial(int n, int g,
                                             std::uint64_t max_work = kDefaultMaxWork);

// Full (genus, loops) histogram over all matching pairs; test-scale only.
std::map<std::array<int, 2>, BigInt> genus_component_histogram(
    int n, std::uint64_t max_work = kDefaultMaxWork);

}  // namespace meandrics
