#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace polyc {

using BigInt = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// Raised when operands disagree structurally (variable spaces, missing
// assignments, unknown variables).
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

// Parses "p/q" or "p" with optional sign; the denominator must be nonzero.
inline Rational parse_rational(const std::string& s)
{
    if (s.empty())
        throw structural_error("empty rational literal");
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw structural_error("bad rational literal: " + s);
    }
}

inline BigInt factorial(unsigned n)
{
    BigInt r = 1;
    for (unsigned k = 2; k <= n; ++k)
        r *= k;
    return r;
}

} // namespace polyc
