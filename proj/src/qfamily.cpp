#include "polyc/qfamily.hpp"

#include <stdexcept>

namespace polyc {

namespace {

void require_n(int n)
{
    if (n < 1)
        throw std::invalid_argument("n must be >= 1");
}

MPoly extend_space(const MPoly& p, const VariableSpace& s)
{
    return p.substitute({}, s);
}

} // namespace

MPoly p_initial(int n)
{
    require_n(n);
    VariableSpace s{n, 1, false};
    MPoly acc = MPoly::zero(s);
    for (int i = 1; i <= n; ++i)
        acc = acc + MPoly::var(s, Variable::mu(i, 1)) * MPoly::var(s, Variable::z(i));
    return acc;
}

MPoly p_step(int n, const MPoly& P)
{
    require_n(n);
    const int l = std::max(P.degree_in(Block::Z), P.space().q_max);
    VariableSpace s{n, l + 1, P.space().has_aux};
    if (P.space().n != n)
        throw structural_error("p_step: polynomial has wrong lambda count");
    MPoly p = extend_space(P, s);

    MPoly acc = MPoly::zero(s);
    for (int i = 1; i <= n; ++i) {
        MPoly zi = MPoly::var(s, Variable::z(i));
        for (int q = 1; q <= l; ++q) {
            MPoly dp = p.partial_derivative(Variable::mu(i, q));
            if (dp.is_zero())
                continue;
            MPoly coeff = MPoly::var(s, Variable::mu(i, q)) * Rational(q) +
                          MPoly::var(s, Variable::mu(i, q + 1));
            acc = acc + coeff * zi * dp;
        }
        MPoly dz = p.partial_derivative(Variable::z(i));
        if (dz.is_zero())
            continue;
        MPoly coeff = -zi;
        for (int j = 1; j < i; ++j)
            coeff = coeff + MPoly::var(s, Variable::mu(j, 1)) * MPoly::var(s, Variable::z(j));
        acc = acc + coeff * zi * dz;
    }
    return acc;
}

MPoly mu_specialize(const MPoly& P)
{
    VariableSpace out{P.space().n, 0, P.space().has_aux};
    std::map<Variable, MPoly> repl;
    for (int i = 1; i <= P.space().n; ++i) {
        MPoly lam1 = MPoly::var(out, Variable::lambda(i)) - MPoly::constant(out, 1);
        Rational sign = 1;
        Rational fact = 1; // (q-1)!
        for (int q = 1; q <= P.space().q_max; ++q) {
            if (q > 1) {
                fact *= (q - 1);
                sign = -sign;
            }
            repl.emplace(Variable::mu(i, q), lam1 * (sign * fact));
        }
    }
    return P.substitute(repl, out);
}

MPoly q_initial(int n)
{
    require_n(n);
    VariableSpace s{n, 0, false};
    MPoly acc = MPoly::zero(s);
    for (int i = 1; i <= n; ++i)
        acc = acc + (MPoly::var(s, Variable::lambda(i)) - MPoly::constant(s, 1)) *
                        MPoly::var(s, Variable::z(i));
    return acc;
}

MPoly q_step(int n, const MPoly& Q)
{
    require_n(n);
    const VariableSpace& s = Q.space();
    if (s.n != n)
        throw structural_error("q_step: polynomial has wrong lambda count");
    MPoly acc = MPoly::zero(s);
    for (int i = 1; i <= n; ++i) {
        MPoly dz = Q.partial_derivative(Variable::z(i));
        if (dz.is_zero())
            continue;
        MPoly coeff = -MPoly::var(s, Variable::z(i));
        for (int j = 1; j < i; ++j)
            coeff = coeff + (MPoly::var(s, Variable::lambda(j)) - MPoly::constant(s, 1)) *
                                MPoly::var(s, Variable::z(j));
        acc = acc + coeff * MPoly::var(s, Variable::z(i)) * dz;
    }
    return acc;
}

QFamily q_family(int n, int l_max)
{
    require_n(n);
    if (l_max < 1)
        throw std::invalid_argument("l_max must be >= 1");
    QFamily fam{n, {q_initial(n)}};
    for (int l = 1; l < l_max; ++l)
        fam.polys.push_back(q_step(n, fam.polys.back()));
    return fam;
}

PFamily p_family(int n, int l_max)
{
    require_n(n);
    if (l_max < 1)
        throw std::invalid_argument("l_max must be >= 1");
    PFamily fam{n, {p_initial(n)}};
    for (int l = 1; l < l_max; ++l)
        fam.polys.push_back(p_step(n, fam.polys.back()));
    return fam;
}

bool link_property_holds(int n, int l)
{
    if (n < 2)
        throw std::invalid_argument("link property needs n >= 2");
    MPoly q_n = q_family(n, l).at(l);
    MPoly q_small = q_family(n - 1, l).at(l);
    const VariableSpace& big = q_n.space();
    VariableSpace small = q_small.space();

    for (int j = 1; j <= n; ++j) {
        // relabel: index k of the n-variable family maps to k (k<j) or k-1 (k>j)
        std::map<Variable, MPoly> relabel;
        for (int k = 1; k <= n; ++k) {
            if (k == j)
                continue;
            int target = k < j ? k : k - 1;
            relabel.emplace(Variable::lambda(k), MPoly::var(small, Variable::lambda(target)));
            relabel.emplace(Variable::z(k), MPoly::var(small, Variable::z(target)));
        }

        // branch z_j = 0: after the cut, lambda_j must be gone too
        MPoly cut_z = q_n.substitute({{Variable::z(j), MPoly::zero(big)}}, big);
        if (cut_z.degree_in(Variable::lambda(j)) > 0)
            return false;
        auto with_z = relabel;
        with_z.emplace(Variable::lambda(j), MPoly::zero(small));
        if (cut_z.substitute(with_z, small) != q_small)
            return false;

        // branch lambda_j = 1: z_j must drop out
        MPoly cut_l = q_n.substitute({{Variable::lambda(j), MPoly::constant(big, 1)}}, big);
        if (cut_l.degree_in(Variable::z(j)) > 0)
            return false;
        auto with_l = relabel;
        with_l.emplace(Variable::z(j), MPoly::zero(small));
        if (cut_l.substitute(with_l, small) != q_small)
            return false;
    }
    return true;
}

MPoly big_lambda(int n)
{
    require_n(n);
    VariableSpace s{n, 0, false};
    MPoly acc = MPoly::constant(s, 1);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        MPoly prod = MPoly::constant(s, 1);
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i))
                prod = prod * MPoly::var(s, Variable::lambda(i + 1));
        acc = acc * (prod - MPoly::constant(s, 1));
    }
    return acc;
}

MPoly m_poly(const VariableSpace& s, int i, int j, int k)
{
    MPoly li = MPoly::var(s, Variable::lambda(i));
    MPoly lj = MPoly::var(s, Variable::lambda(j));
    MPoly lk = MPoly::var(s, Variable::lambda(k));
    MPoly one = MPoly::constant(s, 1);
    return (li * lj * lk - one) * Rational(4) - (li - one) * (lj - one) * (lk - one);
}

MPoly l_small(int n)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("l_small: closed form known only for n = 1..4");
    if (n <= 3)
        return big_lambda(n);
    VariableSpace s{4, 0, false};
    MPoly acc = big_lambda(4);
    acc = acc * m_poly(s, 1, 2, 3);
    acc = acc * m_poly(s, 1, 2, 4);
    acc = acc * m_poly(s, 1, 3, 4);
    acc = acc * m_poly(s, 2, 3, 4);
    return acc;
}

MPoly l_general(int n, const MPoly& resultant)
{
    require_n(n);
    if (resultant.space().n != n - 1)
        throw std::invalid_argument("l_general: resultant must have n-1 lambda variables");
    if (resultant.degree_in(Block::Z) > 0 || resultant.space().q_max > 0)
        throw std::invalid_argument("l_general: resultant must involve lambdas only");

    VariableSpace s{n, 0, false};
    MPoly prod_all = MPoly::constant(s, 1);
    for (int i = 1; i <= n; ++i)
        prod_all = prod_all * MPoly::var(s, Variable::lambda(i));
    MPoly acc = prod_all - MPoly::constant(s, 1);

    for (int j = 1; j <= n; ++j) {
        std::map<Variable, MPoly> relabel;
        for (int k = 1; k <= n - 1; ++k) {
            int src = k < j ? k : k + 1; // lambda list with slot j omitted
            relabel.emplace(Variable::lambda(k), MPoly::var(s, Variable::lambda(src)));
        }
        acc = acc * resultant.substitute(relabel, s);
    }
    return acc;
}

MPoly power_sum(const VariableSpace& s, int l)
{
    MPoly acc = MPoly::zero(s);
    for (int i = 1; i <= s.n; ++i)
        acc = acc + MPoly::var(s, Variable::z(i)).pow(l);
    return acc;
}

MPoly elementary_symmetric(const VariableSpace& s, int l)
{
    if (l == 0)
        return MPoly::constant(s, 1);
    if (l > s.n)
        return MPoly::zero(s);
    MPoly acc = MPoly::zero(s);
    std::vector<int> idx(l);
    // iterate l-subsets of 1..n
    for (int i = 0; i < l; ++i)
        idx[i] = i + 1;
    while (true) {
        MPoly prod = MPoly::constant(s, 1);
        for (int i : idx)
            prod = prod * MPoly::var(s, Variable::z(i));
        acc = acc + prod;
        int k = l - 1;
        while (k >= 0 && idx[k] == s.n - (l - 1 - k))
            --k;
        if (k < 0)
            break;
        ++idx[k];
        for (int t = k + 1; t < l; ++t)
            idx[t] = idx[t - 1] + 1;
    }
    return acc;
}

MPoly power_sum_limit(int n, int l)
{
    if (n < 2 || l < 1 || l > n - 1)
        throw std::invalid_argument("power_sum_limit: need n >= 2 and 1 <= l <= n-1");
    const int m = n - 1;
    MPoly q = q_family(m, l).at(l);
    VariableSpace aux{m, 0, true};
    std::map<Variable, MPoly> repl;
    for (int i = 1; i <= m; ++i)
        repl.emplace(Variable::lambda(i),
                     MPoly::constant(aux, 1) + MPoly::var(aux, Variable::aux()));
    MPoly shifted = q.substitute(repl, aux);

    // every term must carry at least one factor t
    MPoly t = MPoly::var(aux, Variable::aux());
    auto quotient = shifted.exact_divide(t);
    if (!quotient)
        throw structural_error("power_sum_limit: polynomial not divisible by t");
    MPoly at_zero = quotient->substitute({{Variable::aux(), MPoly::zero(aux)}}, aux);
    return at_zero.substitute({}, VariableSpace{m, 0, false});
}

} // namespace polyc
