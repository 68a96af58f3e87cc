// Planar averages of trace words over several matrices, computed as counts
// of noncrossing same-letter matchings, and the word sums that rebuild the
// loop polynomials letter by letter.
#pragma once

#include "meandrics/numeric.hpp"

#include <vector>

namespace meandrics {

// Letters are matrix labels, 1-based.
using ColorWord = std::vector<int>;

// Number of noncrossing perfect matchings of the word's positions in which
// matched positions carry equal letters; 0 for odd length.
BigInt gamma_word(const ColorWord& w);

// gamma of the block word whose block colors cycle through 1..k.
BigInt eta_blocks(const std::vector<int>& block_sizes, int k);

// Reconstruct eta_blocks(...) for 2 <= k <= 4 from the root-of-unity
// splitting identity, evaluated in exact cyclotomic integers; throws
// ValidationError if the combination fails to land on an integer. This is a
// cross-check only: the interval dynamic program above is normative.
BigInt eta_blocks_by_splitting(const std::vector<int>& block_sizes, int k);

// Sum of gamma(w)^2 over all q^{2n} words w of length 2n.
BigInt meander_poly_via_words(int n, int q, int threads = 1,
                              std::uint64_t max_work = kDefaultMaxWork);

// Sum of gamma(w ++ reverse(w)) over all q^n words w of length n.
BigInt semimeander_poly_via_words(int n, int q, int threads = 1,
                                  std::uint64_t max_work = kDefaultMaxWork);

}  // namespace meandrics
