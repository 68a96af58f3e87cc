#include "meandrics/numeric.hpp"

#include <mutex>

namespace meandrics {

BigInt catalan(int p) {
    if (p < 0) throw ValidationError("catalan: negative index");
    // Grow a shared cache; Catalan numbers are requested constantly by the
    // enumeration layers and the recurrence is integer-exact.
    static std::vector<BigInt> cache{1};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (static_cast<int>(cache.size()) <= p) {
        int n = static_cast<int>(cache.size()) - 1;
        // c_{n+1} = c_n * 2(2n+1)/(n+2), always divides exactly.
        BigInt next = cache.back() * 2 * (2 * n + 1);
        mpz_divexact_ui(next.get_mpz_t(), next.get_mpz_t(), n + 2);
        cache.push_back(next);
    }
    return cache[p];
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(int n) {
    if (n < 0) throw ValidationError("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt double_factorial_odd(int k) {
    if (k < 0 || k % 2 != 0) throw ValidationError("double_factorial_odd: need even k >= 0");
    BigInt r = 1;
    for (int v = k - 1; v > 1; v -= 2) r *= v;
    return r;
}

Rational ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ValidationError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_decimal(const BigInt& v) { return v.get_str(); }

std::string to_decimal(const Rational& v) {
    Rational c(v);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

}  // namespace meandrics
