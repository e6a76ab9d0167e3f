#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace polyc {

using Real = boost::multiprecision::mpfr_float;

// Scoped default-precision override, in bits.
class PrecisionGuard {
public:
    explicit PrecisionGuard(unsigned bits)
        : old_digits_(Real::default_precision())
    {
        Real::default_precision(bits_to_digits10(bits));
    }
    ~PrecisionGuard() { Real::default_precision(old_digits_); }
    PrecisionGuard(const PrecisionGuard&) = delete;
    PrecisionGuard& operator=(const PrecisionGuard&) = delete;

    static unsigned bits_to_digits10(unsigned bits)
    {
        return static_cast<unsigned>(bits * 0.30103) + 4;
    }

private:
    unsigned old_digits_;
};

// Truncated derivative tower of a scalar function at a point: derivs[k] holds
// g^(k)(x), k = 0..order. Arithmetic is exact truncated Taylor algebra at the
// working precision.
class Jet {
public:
    explicit Jet(int order) : d_(order + 1, Real(0)) {}

    static Jet constant(const Real& c, int order)
    {
        Jet j(order);
        j.d_[0] = c;
        return j;
    }

    static Jet identity(const Real& x, int order)
    {
        Jet j(order);
        j.d_[0] = x;
        if (order >= 1)
            j.d_[1] = 1;
        return j;
    }

    int order() const { return static_cast<int>(d_.size()) - 1; }
    const Real& deriv(int k) const { return d_.at(k); }
    Real& deriv(int k) { return d_.at(k); }
    const Real& value() const { return d_[0]; }

    Jet operator+(const Jet& o) const;
    Jet operator-(const Jet& o) const;
    Jet operator*(const Jet& o) const;
    Jet operator*(const Real& c) const;
    Jet operator+(const Real& c) const;

    Jet reciprocal() const;       // value must be nonzero
    Jet log_abs() const;          // ln|g|; value must be nonzero
    Jet exp() const;
    Jet pow(const Real& alpha) const; // value must be positive

    // One order lower: the jet of g'.
    Jet derivative() const;

    // Jet of f(g(x)): outer is the jet of f at the point g(x).
    static Jet compose(const Jet& outer, const Jet& inner);

private:
    std::vector<Real> d_;
};

} // namespace polyc
