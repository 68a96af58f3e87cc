#include "meandrics/words.hpp"

#include <omp.h>

#include <algorithm>
#include <string>

namespace meandrics {

namespace {

void validate_letters(const ColorWord& w) {
    for (int c : w)
        if (c < 1) throw ValidationError("letters are 1-based matrix labels");
}

BigInt pow_words(int q, int len) {
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(len));
    return out;
}

void check_word_budget(int q, int len, std::uint64_t max_work) {
    BigInt limit(static_cast<unsigned long>(max_work));
    if (pow_words(q, len) > limit)
        throw ResourceLimitError("word sum over " + std::to_string(q) + "^" +
                                 std::to_string(len) +
                                 " words exceeds the work limit");
}

// Advance positions [from, len) of the word through all q^size values;
// returns false once the odometer wraps around.
bool advance(ColorWord& w, int from, int q) {
    int pos = static_cast<int>(w.size()) - 1;
    while (pos >= from && w[pos] == q) w[pos--] = 1;
    if (pos < from) return false;
    ++w[pos];
    return true;
}

}  // namespace

BigInt gamma_word(const ColorWord& w) {
    validate_letters(w);
    const int len = static_cast<int>(w.size());
    if (len % 2) return 0;
    if (len == 0) return 1;
    // dp[i][j] counts matchings of the half-open range [i, j)
    std::vector<std::vector<BigInt>> dp(
        len + 1, std::vector<BigInt>(len + 1, BigInt(0)));
    for (int i = 0; i <= len; ++i) dp[i][i] = 1;
    for (int span = 2; span <= len; span += 2)
        for (int i = 0; i + span <= len; ++i) {
            const int j = i + span;
            BigInt total = 0;
            for (int m = i + 1; m < j; m += 2)
                if (w[m] == w[i]) total += dp[i + 1][m] * dp[m + 1][j];
            dp[i][j] = total;
        }
    return dp[0][len];
}

BigInt eta_blocks(const std::vector<int>& block_sizes, int k) {
    if (k < 1) throw ValidationError("alphabet size must be at least 1");
    ColorWord w;
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        if (block_sizes[i] < 0)
            throw ValidationError("block sizes must be nonnegative");
        w.insert(w.end(), block_sizes[i], static_cast<int>(i % k) + 1);
    }
    return gamma_word(w);
}

BigInt eta_blocks_by_splitting(const std::vector<int>& block_sizes, int k) {
    if (k < 2 || k > 4)
        throw ValidationError("splitting identity implemented for k in 2..4");
    const int nb = static_cast<int>(block_sizes.size());
    if (nb == 0 || nb % k != 0)
        throw ValidationError("block count must be a positive multiple of k");
    // Coefficient of omega^{i mod k} contributed by the split after block i.
    std::vector<BigInt> t(k, BigInt(0));
    for (int i = 1; i < nb; ++i) {
        std::vector<int> pre(block_sizes.begin(), block_sizes.begin() + i);
        std::vector<int> suf(block_sizes.begin() + i, block_sizes.end());
        t[i % k] += eta_blocks(pre, k) * eta_blocks(suf, k);
    }
    // Negate and reduce modulo the k-th cyclotomic polynomial; the imaginary
    // basis coefficients must cancel for the identity to yield an integer.
    switch (k) {
        case 2:  // omega = -1
            return t[1] - t[0];
        case 3:  // omega^2 = -1 - omega
            if (t[1] != t[2])
                throw ValidationError("cyclotomic combination is not an integer");
            return t[2] - t[0];
        default:  // k == 4, omega = i, omega^2 = -1
            if (t[1] != t[3])
                throw ValidationError("cyclotomic combination is not an integer");
            return t[2] - t[0];
    }
}

BigInt meander_poly_via_words(int n, int q, int threads,
                              std::uint64_t max_work) {
    if (n < 1) throw ValidationError("order must be at least 1");
    if (q < 1) throw ValidationError("color count must be at least 1");
    const int len = 2 * n;
    check_word_budget(q, len, max_work);
    // Words with w[0] != 1 contribute the same as their color-permuted
    // images, so fix w[0] = 1 and scale by q; shard on the second letter.
    std::vector<BigInt> partial(q);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int c = 1; c <= q; ++c) {
        ColorWord w(len, 1);
        w[1] = c;
        BigInt acc = 0;
        do {
            BigInt g = gamma_word(w);
            acc += g * g;
        } while (advance(w, 2, q));
        partial[c - 1] = acc;
    }
    BigInt total = 0;
    for (const BigInt& p : partial) total += p;
    return total * q;
}

BigInt semimeander_poly_via_words(int n, int q, int threads,
                                  std::uint64_t max_work) {
    if (n < 1) throw ValidationError("order must be at least 1");
    if (q < 1) throw ValidationError("color count must be at least 1");
    check_word_budget(q, n, max_work);
    auto folded = [](const ColorWord& w) {
        ColorWord d = w;
        d.insert(d.end(), w.rbegin(), w.rend());
        return gamma_word(d);
    };
    if (n == 1) return BigInt(q);  // each single-letter fold closes one loop
    std::vector<BigInt> partial(q);
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int c = 1; c <= q; ++c) {
        ColorWord w(n, 1);
        w[1] = c;
        BigInt acc = 0;
        do {
            acc += folded(w);
        } while (advance(w, 2, q));
        partial[c - 1] = acc;
    }
    BigInt total = 0;
    for (const BigInt& p : partial) total += p;
    return total * q;
}

}  // namespace meandrics
