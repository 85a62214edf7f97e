#ifndef COBORD_RATIONAL_HPP
#define COBORD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cobord/errors.hpp"

namespace cobord {

// Exact arithmetic only: arbitrary-precision integers and rationals.
// mpq_class keeps values in lowest terms with positive denominator as long
// as every value is built through the helpers below.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0)
        throw InvalidState("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

// Accepts "p", "-p", "p/q" (decimal digits only).
Rational parse_rational(std::string_view text);

// "p/q" with "/q" omitted for integers.
std::string to_string(const Rational& q);
std::string to_string(const Int& n);

Int binomial(const Int& n, const Int& k);
Int factorial(long n);

} // namespace cobord

#endif
