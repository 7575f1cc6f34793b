#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace symtens {

// Canonical arbitrary-precision rational (reduced, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

// Configuration / cap violations requested by the caller.
struct config_error : std::runtime_error {
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A request that is valid in form but does not apply to the given object
// (e.g. asking for an improper-rotation split of a proper-rotation group).
struct inapplicable_error : std::runtime_error {
    explicit inapplicable_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violation of an internal self-check; indicates a bug, never bad input.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (n)!! with the usual conventions (-1)!! = 0!! = 1.
inline Integer double_factorial(long n) {
    if (n <= 0) return 1;
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Integer binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace symtens
