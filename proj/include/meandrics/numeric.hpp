// Shared numeric foundation: arbitrary-precision integers/rationals (GMP),
// Catalan/binomial helpers, error taxonomy, and the work-limit guard used by
// every enumeration kernel.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace meandrics {

using BigInt = mpz_class;
using Rational = mpq_class;

// Raised on malformed or out-of-contract inputs. CLI maps this to exit 2.
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Raised when an enumeration exceeds its configured budget. CLI maps this to
// exit 3; partially accumulated results are preserved where meaningful.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultMaxWork = 200'000'000;

// Cheap cooperative budget counter shared by enumeration loops. Not
// thread-safe by design: parallel kernels give each worker a slice.
class WorkBudget {
  public:
    explicit WorkBudget(std::uint64_t limit = kDefaultMaxWork) : limit_(limit) {}

    void charge(std::uint64_t units = 1) {
        used_ += units;
        if (used_ > limit_)
            throw ResourceLimitError("work limit of " + std::to_string(limit_) +
                                     " units exceeded");
    }
    std::uint64_t used() const { return used_; }
    std::uint64_t limit() const { return limit_; }

  private:
    std::uint64_t limit_;
    std::uint64_t used_ = 0;
};

BigInt catalan(int p);
BigInt binomial(int n, int k);
BigInt factorial(int n);
// (k-1)!! for even k >= 0; the number of pairings of k points.
BigInt double_factorial_odd(int k);

// Reduced fraction num/den. The raw two-argument Rational constructor keeps
// the operands as given, which breaks equality tests; route fractions with
// non-coprime parts through here.
Rational ratio(const BigInt& num, const BigInt& den);

std::string to_decimal(const BigInt& v);
std::string to_decimal(const Rational& v);  // "num/den", or "num" when den==1

}  // namespace meandrics
