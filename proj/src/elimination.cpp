#include "polyc/elimination.hpp"

#include <bit>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polyc {

namespace {

using UPoly = std::vector<Rational>; // ascending coefficients

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly rem(UPoly a, const UPoly& b)
{
    while (deg(a) >= deg(b)) {
        Rational q = a.back() / b.back();
        int shift = deg(a) - deg(b);
        for (int i = 0; i <= deg(b); ++i)
            a[i + shift] -= q * b[i];
        trim(a);
        if (a.empty())
            break;
    }
    return a;
}

UPoly gcd(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a)
            c /= lead;
    }
    return a;
}

// f restricted to the chart v_one = 1, as a univariate polynomial in v_free.
UPoly dehomogenize(const MPoly& f, const Variable& v_free, const Variable& v_one)
{
    UPoly out;
    for (const auto& [m, c] : f.terms()) {
        for (const auto& [v, e] : m.exps)
            if (v != v_free && v != v_one)
                throw structural_error("dehomogenize: extra variable " + v.name());
        int k = m.exponent(v_free);
        if (static_cast<int>(out.size()) <= k)
            out.resize(k + 1, Rational(0));
        out[k] += c;
    }
    trim(out);
    return out;
}

std::vector<Variable> z_variables_used(const std::vector<MPoly>& polys)
{
    std::set<Variable> vars;
    for (const auto& p : polys)
        for (const auto& [m, c] : p.terms())
            for (const auto& [v, e] : m.exps) {
                if (v.block != Block::Z)
                    throw structural_error("homogeneous system: non-Z variable " + v.name());
                vars.insert(v);
            }
    return {vars.begin(), vars.end()};
}

MPoly det_by_expansion(const std::vector<std::vector<MPoly>>& mat, const VariableSpace& s)
{
    const int N = static_cast<int>(mat.size());
    std::map<std::uint32_t, MPoly> memo;
    // det over rows r..N-1 and the columns still available in mask
    auto rec = [&](auto&& self, std::uint32_t mask) -> MPoly {
        int r = N - std::popcount(mask);
        if (r == N)
            return MPoly::constant(s, 1);
        auto it = memo.find(mask);
        if (it != memo.end())
            return it->second;
        MPoly acc = MPoly::zero(s);
        int pos = 0;
        for (int c = 0; c < N; ++c) {
            if (!(mask & (1u << c)))
                continue;
            if (!mat[r][c].is_zero()) {
                MPoly sub = self(self, mask & ~(1u << c));
                MPoly term = mat[r][c] * sub;
                acc = (pos % 2 == 0) ? acc + term : acc - term;
            }
            ++pos;
        }
        memo.emplace(mask, acc);
        return acc;
    };
    return rec(rec, (1u << N) - 1);
}

} // namespace

HomSystem numeric_q_system(int n, int l_max, const std::vector<Rational>& lambdas)
{
    if (static_cast<int>(lambdas.size()) != n)
        throw std::invalid_argument("numeric_q_system: need exactly n lambda values");
    QFamily fam = q_family(n, l_max);
    VariableSpace s = fam.at(1).space();
    std::map<Variable, Rational> assign;
    for (int i = 1; i <= n; ++i)
        assign.emplace(Variable::lambda(i), lambdas[i - 1]);
    HomSystem sys{s, {}};
    for (const auto& q : fam.polys)
        sys.polys.push_back(q.substitute_values(assign, s));
    return sys;
}

MPoly sylvester_resultant(const MPoly& a, const MPoly& b, const Variable& v)
{
    if (a.is_zero() || b.is_zero())
        throw std::invalid_argument("sylvester_resultant: zero polynomial input");
    const int da = a.degree_in(v);
    const int db = b.degree_in(v);
    if (da < 1 || db < 1)
        throw std::invalid_argument("sylvester_resultant: inputs must have positive degree in " +
                                    v.name());
    const VariableSpace& s = a.space();
    const int N = da + db;
    std::vector<std::vector<MPoly>> mat(N, std::vector<MPoly>(N, MPoly::zero(s)));
    for (int r = 0; r < db; ++r)
        for (int k = 0; k <= da; ++k)
            mat[r][r + k] = a.coefficient_of(v, da - k);
    for (int r = 0; r < da; ++r)
        for (int k = 0; k <= db; ++k)
            mat[db + r][r + k] = b.coefficient_of(v, db - k);
    return det_by_expansion(mat, s);
}

bool has_nontrivial_zero_m2_chart(const std::vector<MPoly>& polys, int chart)
{
    std::vector<Variable> vars = z_variables_used(polys);
    if (vars.size() != 2)
        throw std::invalid_argument("m2 chart check: expected exactly 2 z-variables");
    Variable v_one = chart == 1 ? vars[0] : vars[1];
    Variable v_free = chart == 1 ? vars[1] : vars[0];

    // the point missed by this chart: v_one = 0, v_free = 1
    bool all_vanish_at_missed = true;
    UPoly g;
    for (const auto& p : polys) {
        if (p.is_zero())
            continue;
        if (p.coefficient_of(v_one, 0).is_zero() == false)
            all_vanish_at_missed = false;
        g = gcd(g, dehomogenize(p, v_free, v_one));
    }
    if (all_vanish_at_missed)
        return true; // includes the all-zero system
    return deg(g) >= 1;
}

namespace {

bool has_zero_m2(const std::vector<MPoly>& polys)
{
    std::vector<MPoly> nz;
    for (const auto& p : polys)
        if (!p.is_zero())
            nz.push_back(p);
    if (nz.empty())
        return true;
    // all members in a single variable: they vanish where that variable does,
    // and the other coordinate stays free
    if (z_variables_used(nz).size() < 2)
        return true;
    return has_nontrivial_zero_m2_chart(nz, 2);
}

} // namespace

bool has_nontrivial_zero(const HomSystem& sys)
{
    const int m = sys.space.n;
    if (m < 1 || m > 3)
        throw std::invalid_argument("has_nontrivial_zero: supported for 1..3 z-variables");

    std::vector<MPoly> nz;
    for (const auto& p : sys.polys)
        if (!p.is_zero())
            nz.push_back(p);
    if (nz.empty())
        return true;

    if (m == 1)
        return false; // a nonzero c*z1^d has no nonzero root

    if (m == 2)
        return has_zero_m2(nz);

    // m == 3: two or fewer hypersurfaces in P^2 always intersect
    if (nz.size() <= 2)
        return true;

    // eliminate through a linear member
    const MPoly* lin = nullptr;
    for (const auto& p : nz)
        if (p.degree_in(Block::Z) == 1 && p.is_homogeneous(Block::Z, 1)) {
            lin = &p;
            break;
        }
    if (!lin)
        throw std::invalid_argument("has_nontrivial_zero: m=3 needs a linear member");

    // pick pivot variable with nonzero coefficient
    Variable pivot = Variable::z(1);
    Rational c_pivot = 0;
    for (int i = 1; i <= 3; ++i) {
        MPoly c = lin->coefficient_of(Variable::z(i), 1);
        if (!c.is_zero()) {
            pivot = Variable::z(i);
            c_pivot = c.terms().begin()->second;
            break;
        }
    }

    // z_pivot := -(1/c_pivot) * (rest of the linear form)
    MPoly rest = *lin - MPoly::var(sys.space, pivot) * c_pivot;
    MPoly repl = rest * (Rational(-1) / c_pivot);
    std::vector<MPoly> reduced;
    for (const auto& p : nz) {
        if (&p == lin)
            continue;
        MPoly q = p.substitute({{pivot, repl}}, sys.space);
        if (!q.is_zero())
            reduced.push_back(q);
    }
    if (reduced.empty())
        return true; // every point of the line L = 0 solves the system
    if (z_variables_used(reduced).size() == 1)
        return true; // forms c*z_a^d all vanish at z_a = 0, a point of the line
    return has_zero_m2(reduced);
}

MPoly eliminant_n2()
{
    MPoly q11 = q_initial(1); // (l1 - 1) z1
    return q11.coefficient_of(Variable::z(1), 1);
}

MPoly eliminant_n3()
{
    QFamily fam = q_family(2, 2);
    const VariableSpace& s = fam.at(1).space();
    MPoly z1 = MPoly::var(s, Variable::z(1));
    MPoly z2 = MPoly::var(s, Variable::z(2));

    // Q22 + (z1+z2) Q21 = (l1 l2 - 1) z1 z2
    MPoly combined = fam.at(2) + (z1 + z2) * fam.at(1);
    auto factor = combined.exact_divide(z1 * z2);
    if (!factor || factor->degree_in(Block::Z) > 0)
        throw structural_error("eliminant_n3: combination is not (l1 l2 - 1) z1 z2");

    // solvability split: z1 z2 = 0 branches reduce Q21 to a single coefficient
    MPoly on_z1 = fam.at(1)
                      .substitute({{Variable::z(1), MPoly::zero(s)}}, s)
                      .coefficient_of(Variable::z(2), 1);
    MPoly on_z2 = fam.at(1)
                      .substitute({{Variable::z(2), MPoly::zero(s)}}, s)
                      .coefficient_of(Variable::z(1), 1);
    return *factor * on_z1 * on_z2;
}

MPoly r2_closed_form(const VariableSpace& s, int i, int j)
{
    MPoly li = MPoly::var(s, Variable::lambda(i));
    MPoly lj = MPoly::var(s, Variable::lambda(j));
    MPoly one = MPoly::constant(s, 1);
    return (li * lj - one) * (li - one) * (lj - one);
}

MPoly r3_closed_form()
{
    VariableSpace s{3, 0, false};
    MPoly one = MPoly::constant(s, 1);
    MPoly l1 = MPoly::var(s, Variable::lambda(1));
    MPoly l2 = MPoly::var(s, Variable::lambda(2));
    MPoly l3 = MPoly::var(s, Variable::lambda(3));
    MPoly acc = (l1 * l2 * l3 - one) * (l1 * l2 - one) * (l1 * l3 - one) * (l2 * l3 - one) *
                (l1 - one) * (l2 - one) * (l3 - one);
    return acc * ((l1 * l2 * l3 - one) * Rational(4) - (l1 - one) * (l2 - one) * (l3 - one));
}

MPoly eliminant_n4()
{
    QFamily fam = q_family(3, 3);
    const VariableSpace& s = fam.at(1).space();
    MPoly one = MPoly::constant(s, 1);
    MPoly l1 = MPoly::var(s, Variable::lambda(1));
    MPoly l2 = MPoly::var(s, Variable::lambda(2));
    MPoly l3 = MPoly::var(s, Variable::lambda(3));
    MPoly z1 = MPoly::var(s, Variable::z(1));
    MPoly z2 = MPoly::var(s, Variable::z(2));
    MPoly z3 = MPoly::var(s, Variable::z(3));

    MPoly q31 = fam.at(1);
    MPoly q32t = fam.at(2) + (z1 + z2 + z3) * q31; // ~Q32
    MPoly q33t = q_step(3, q32t);                  // ~Q33 = D_3 ~Q32

    // exact combination reducing ~Q33 modulo (~Q32, ~Q31) to z1 z3 L; the
    // multipliers are the unique choice with polynomial cofactors
    MPoly comb_mult = z1 * (l1 - one * 2) - z2 - z3 * l3;
    MPoly c1 = l1 * l2 * l3 * 2 + l2 * l3 - l2 - l3 - one;
    MPoly c2 = -(l1 * l3 - one) * (l3 - one);
    MPoly big_l = c1 * z2 - c2 * z3;
    MPoly residue =
        q33t - comb_mult * q32t - (l2 * l3 - one) * z2 * z3 * q31 - z1 * z3 * big_l;
    if (!residue.is_zero())
        throw structural_error("eliminant_n4: combination identity failed");

    // eliminate z3 along L = 0 via (z1, z2, z3) -> (c2 z1, c2 z2, c1 z2)
    std::map<Variable, MPoly> sigma{{Variable::z(1), c2 * z1},
                                    {Variable::z(2), c2 * z2},
                                    {Variable::z(3), c1 * z2}};
    MPoly eq_a = q31.substitute(sigma, s);
    MPoly eq_b_full = q32t.substitute(sigma, s);
    auto eq_b = eq_b_full.exact_divide(c2 * z2);
    if (!eq_b)
        throw structural_error("eliminant_n4: reduced quadratic not divisible by c2*z2");

    auto lin_coeff = [&](const MPoly& p, int i) { return p.coefficient_of(Variable::z(i), 1); };
    MPoly det = lin_coeff(eq_a, 1) * lin_coeff(*eq_b, 2) -
                lin_coeff(eq_a, 2) * lin_coeff(*eq_b, 1);

    // boundary branches z_j = 0 contribute the pairwise R_2 factors; the sign
    // normalizes det to (l3-1)(l1 l3-1)(l1 l2 l3-1) M
    return -det * r2_closed_form(s, 1, 2) * r2_closed_form(s, 1, 3) * r2_closed_form(s, 2, 3);
}

namespace {

Rational random_rational(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> den_d(1, 64);
    int den = den_d(rng);
    std::uniform_int_distribution<int> num_d(1, 4 * den - 1);
    return Rational(num_d(rng), den);
}

std::set<Variable> lambda_vars(const MPoly& p)
{
    std::set<Variable> vars;
    for (const auto& [m, c] : p.terms())
        for (const auto& [v, e] : m.exps)
            vars.insert(v);
    return vars;
}

} // namespace

ZeroSetReport zero_set_compare(const MPoly& a, const MPoly& b,
                               const std::vector<MPoly>& factors_a,
                               const std::vector<MPoly>& factors_b,
                               int samples, std::uint64_t seed)
{
    if (samples < 1)
        throw std::invalid_argument("zero_set_compare: samples must be >= 1");
    std::set<Variable> vars = lambda_vars(a);
    vars.merge(lambda_vars(b));

    std::vector<MPoly> factors = factors_a;
    factors.insert(factors.end(), factors_b.begin(), factors_b.end());

    std::mt19937_64 rng(seed);
    ZeroSetReport rep;
    rep.seed = seed;

    for (int sidx = 0; sidx < samples; ++sidx) {
        std::map<Variable, Rational> point;
        bool structured = !factors.empty() && sidx % 2 == 1;
        if (!structured) {
            for (const auto& v : vars)
                point.emplace(v, random_rational(rng));
        } else {
            const MPoly& f = factors[(sidx / 2) % factors.size()];
            // solve the factor for a variable in which it is linear
            Variable solve_var = Variable::lambda(1);
            bool found = false;
            for (const auto& v : vars)
                if (f.degree_in(v) == 1) {
                    solve_var = v;
                    found = true;
                    break;
                }
            if (!found)
                throw std::invalid_argument("zero_set_compare: factor not linear in any variable");
            MPoly fa = f.coefficient_of(solve_var, 1);
            MPoly fb = f.coefficient_of(solve_var, 0);
            while (true) {
                point.clear();
                for (const auto& v : vars)
                    if (v != solve_var)
                        point.emplace(v, random_rational(rng));
                Rational av = fa.eval_rational(point);
                if (av == 0) {
                    ++rep.redraw_count;
                    continue;
                }
                point.emplace(solve_var, -fb.eval_rational(point) / av);
                break;
            }
        }
        SamplePoint sp;
        sp.values = point;
        sp.vanish_a = a.eval_rational(point) == 0;
        sp.vanish_b = b.eval_rational(point) == 0;
        ++rep.sample_count;
        if (sp.vanish_a == sp.vanish_b)
            ++rep.agree_count;
        else
            rep.disagreements.push_back(std::move(sp));
    }
    return rep;
}

NewtonReport newton_no_common_zero(int m)
{
    if (m < 1)
        throw std::invalid_argument("newton_no_common_zero: m must be >= 1");
    VariableSpace s{m, 0, false};
    NewtonReport rep;

    std::vector<MPoly> sigma, psum;
    sigma.push_back(MPoly::constant(s, 1));
    psum.push_back(MPoly::constant(s, Rational(m))); // p_0 = m, unused below
    for (int l = 1; l <= m; ++l) {
        sigma.push_back(elementary_symmetric(s, l));
        psum.push_back(power_sum(s, l));
    }

    // Newton identities: l sigma_l = sum_{i=1..l} (-1)^{i-1} sigma_{l-i} p_i.
    // Verified exactly; under p_1 = ... = p_m = 0 they force sigma_l = 0.
    for (int l = 1; l <= m; ++l) {
        MPoly rhs = MPoly::zero(s);
        for (int i = 1; i <= l; ++i) {
            MPoly term = sigma[l - i] * psum[i];
            rhs = (i % 2 == 1) ? rhs + term : rhs - term;
        }
        if (sigma[l] * Rational(l) != rhs) {
            rep.ok = false;
            rep.trace.push_back("Newton identity FAILED at l=" + std::to_string(l));
            return rep;
        }
        rep.trace.push_back("Newton identity l=" + std::to_string(l) +
                            " verified; under p_1..p_" + std::to_string(l) +
                            " = 0 it gives sigma_" + std::to_string(l) + " = 0");
    }

    // Vieta: prod (t - z_i) = sum_{l} (-1)^l sigma_l t^{m-l}; with all sigma
    // zero this is t^m, so every root is zero.
    VariableSpace saux{m, 0, true};
    MPoly t = MPoly::var(saux, Variable::aux());
    MPoly lhs = MPoly::constant(saux, 1);
    for (int i = 1; i <= m; ++i)
        lhs = lhs * (t - MPoly::var(saux, Variable::z(i)));
    MPoly rhs = MPoly::zero(saux);
    for (int l = 0; l <= m; ++l) {
        MPoly term = sigma[l].substitute({}, saux) * t.pow(m - l);
        rhs = (l % 2 == 0) ? rhs + term : rhs - term;
    }
    if (lhs != rhs) {
        rep.ok = false;
        rep.trace.push_back("Vieta identity FAILED");
        return rep;
    }
    rep.trace.push_back("Vieta identity verified; sigma_1..sigma_" + std::to_string(m) +
                        " = 0 forces prod(t - z_i) = t^" + std::to_string(m) +
                        ", so only the trivial zero remains");
    rep.ok = true;
    return rep;
}

} // namespace polyc
