#include "polyc/jet.hpp"

#include <stdexcept>

namespace polyc {

namespace {

using Series = std::vector<Real>; // Taylor coefficients a_k = g^(k)/k!

Series to_series(const Jet& j)
{
    Series s(j.order() + 1);
    Real fact = 1;
    for (int k = 0; k <= j.order(); ++k) {
        if (k > 1)
            fact *= k;
        s[k] = j.deriv(k) / fact;
    }
    return s;
}

Jet from_series(const Series& s)
{
    Jet j(static_cast<int>(s.size()) - 1);
    Real fact = 1;
    for (int k = 0; k < static_cast<int>(s.size()); ++k) {
        if (k > 1)
            fact *= k;
        j.deriv(k) = s[k] * fact;
    }
    return j;
}

Series mul(const Series& a, const Series& b)
{
    Series r(a.size(), Real(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; i + j < a.size() && j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Series recip(const Series& a)
{
    if (a[0] == 0)
        throw std::domain_error("jet reciprocal: zero value");
    Series b(a.size(), Real(0));
    b[0] = 1 / a[0];
    for (size_t k = 1; k < a.size(); ++k) {
        Real acc = 0;
        for (size_t j = 1; j <= k; ++j)
            acc += a[j] * b[k - j];
        b[k] = -acc / a[0];
    }
    return b;
}

Series log_abs(Series a)
{
    if (a[0] == 0)
        throw std::domain_error("jet log: zero value");
    if (a[0] < 0)
        for (auto& c : a)
            c = -c;
    Series c(a.size(), Real(0));
    c[0] = log(a[0]);
    if (a.size() == 1)
        return c;
    // c' = a'/a, integrated termwise
    Series da(a.size() - 1);
    for (size_t k = 0; k + 1 < a.size(); ++k)
        da[k] = a[k + 1] * Real(k + 1);
    Series inv = recip(a);
    inv.resize(a.size() - 1);
    Series e = mul(da, inv);
    for (size_t k = 1; k < a.size(); ++k)
        c[k] = e[k - 1] / Real(k);
    return c;
}

Series exp_(const Series& a)
{
    Series b(a.size(), Real(0));
    b[0] = exp(a[0]);
    for (size_t k = 1; k < a.size(); ++k) {
        Real acc = 0;
        for (size_t j = 1; j <= k; ++j)
            acc += Real(j) * a[j] * b[k - j];
        b[k] = acc / Real(k);
    }
    return b;
}

} // namespace

Jet Jet::operator+(const Jet& o) const
{
    if (o.order() != order())
        throw std::invalid_argument("jet add: order mismatch");
    Jet r(order());
    for (int k = 0; k <= order(); ++k)
        r.d_[k] = d_[k] + o.d_[k];
    return r;
}

Jet Jet::operator-(const Jet& o) const
{
    if (o.order() != order())
        throw std::invalid_argument("jet sub: order mismatch");
    Jet r(order());
    for (int k = 0; k <= order(); ++k)
        r.d_[k] = d_[k] - o.d_[k];
    return r;
}

Jet Jet::operator*(const Jet& o) const
{
    if (o.order() != order())
        throw std::invalid_argument("jet mul: order mismatch");
    return from_series(mul(to_series(*this), to_series(o)));
}

Jet Jet::operator*(const Real& c) const
{
    Jet r(order());
    for (int k = 0; k <= order(); ++k)
        r.d_[k] = d_[k] * c;
    return r;
}

Jet Jet::operator+(const Real& c) const
{
    Jet r = *this;
    r.d_[0] += c;
    return r;
}

Jet Jet::reciprocal() const { return from_series(recip(to_series(*this))); }

Jet Jet::log_abs() const { return from_series(polyc::log_abs(to_series(*this))); }

Jet Jet::exp() const { return from_series(exp_(to_series(*this))); }

Jet Jet::pow(const Real& alpha) const
{
    if (value() <= 0)
        throw std::domain_error("jet pow: nonpositive base for real exponent");
    Series ln = polyc::log_abs(to_series(*this));
    for (auto& c : ln)
        c *= alpha;
    return from_series(exp_(ln));
}

Jet Jet::derivative() const
{
    if (order() < 1)
        throw std::invalid_argument("jet derivative: order 0");
    Jet r(order() - 1);
    for (int k = 0; k < order(); ++k)
        r.d_[k] = d_[k + 1];
    return r;
}

Jet Jet::compose(const Jet& outer, const Jet& inner)
{
    if (outer.order() != inner.order())
        throw std::invalid_argument("jet compose: order mismatch");
    Series b = to_series(outer);
    Series a = to_series(inner);
    Series shifted = a;
    shifted[0] = 0; // (g - g(x)) as a series in h
    // Horner over truncated series
    Series acc(a.size(), Real(0));
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
        acc = mul(acc, shifted);
        acc[0] += b[k];
    }
    return from_series(acc);
}

} // namespace polyc
