#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyc/json_io.hpp"
#include "polyc/mpoly.hpp"

#include <random>

using namespace polyc;

namespace {

MPoly v(const VariableSpace& s, const Variable& var) { return MPoly::var(s, var); }
MPoly c(const VariableSpace& s, const Rational& r) { return MPoly::constant(s, r); }

// Random polynomial with small integer coefficients over the full variable set.
MPoly random_poly(const VariableSpace& s, std::mt19937_64& rng, int terms, int max_deg)
{
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> deg(0, max_deg);
    auto vars = s.variables();
    std::uniform_int_distribution<size_t> pick(0, vars.size() - 1);
    MPoly p = MPoly::zero(s);
    for (int t = 0; t < terms; ++t) {
        MPoly mono = c(s, coeff(rng));
        int d = deg(rng);
        for (int k = 0; k < d; ++k)
            mono = mono * v(s, vars[pick(rng)]);
        p = p + mono;
    }
    return p;
}

std::map<Variable, Rational> random_point(const VariableSpace& s, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    std::map<Variable, Rational> pt;
    for (const auto& var : s.variables())
        pt[var] = Rational(num(rng), den(rng));
    return pt;
}

} // namespace

TEST_CASE("constants and variables")
{
    VariableSpace s{2, 0, false};
    CHECK(MPoly::zero(s).is_zero());
    CHECK(c(s, 0).is_zero());
    CHECK(c(s, 5).to_string() == "5");
    CHECK(v(s, Variable::z(1)).to_string() == "z1");
    CHECK_THROWS_AS(MPoly::var(s, Variable::z(3)), structural_error);
}

TEST_CASE("additive inverse and doubling")
{
    VariableSpace s{2, 0, false};
    MPoly z1 = v(s, Variable::z(1));
    MPoly z2 = v(s, Variable::z(2));
    CHECK((z1 + (-z1)).is_zero());
    CHECK((z1 * z2 + z1 * z2) == z1 * z2 * Rational(2));
}

TEST_CASE("sum builds the degree-1 family member")
{
    VariableSpace s{2, 0, false};
    MPoly one = c(s, 1);
    MPoly q21 = (v(s, Variable::lambda(1)) - one) * v(s, Variable::z(1))
              + (v(s, Variable::lambda(2)) - one) * v(s, Variable::z(2));
    CHECK(q21.to_string() == "l1*z1 + l2*z2 - z1 - z2");
}

TEST_CASE("space mismatch is a structural error")
{
    VariableSpace s2{2, 0, false}, s3{3, 0, false};
    CHECK_THROWS_AS(MPoly::var(s2, Variable::z(1)) + MPoly::var(s3, Variable::z(1)),
                    structural_error);
    CHECK_THROWS_AS(MPoly::var(s2, Variable::z(1)) * MPoly::var(s3, Variable::z(1)),
                    structural_error);
}

TEST_CASE("binomial square")
{
    VariableSpace s{2, 0, false};
    MPoly z1 = v(s, Variable::z(1)), z2 = v(s, Variable::z(2));
    MPoly sq = (z1 + z2).pow(2);
    CHECK(sq == z1 * z1 + z1 * z2 * Rational(2) + z2 * z2);
    CHECK((sq * MPoly::zero(s)).is_zero());
}

TEST_CASE("ring axioms on randomized instances")
{
    VariableSpace s{3, 2, false};
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        MPoly a = random_poly(s, rng, 4, 3);
        MPoly b = random_poly(s, rng, 4, 3);
        MPoly cc = random_poly(s, rng, 4, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + cc == a + (b + cc));
        CHECK((a * b) * cc == a * (b * cc));
        CHECK(a * (b + cc) == a * b + a * cc);
    }
}

TEST_CASE("partial derivative basics and Leibniz rule")
{
    VariableSpace s{2, 0, false};
    MPoly z1 = v(s, Variable::z(1)), z2 = v(s, Variable::z(2));
    CHECK((z1 * z1 * z2).partial_derivative(Variable::z(1)) == z1 * z2 * Rational(2));
    CHECK((v(s, Variable::lambda(1)) * z2).partial_derivative(Variable::z(1)).is_zero());
    CHECK_THROWS_AS(z1.partial_derivative(Variable::z(5)), structural_error);

    std::mt19937_64 rng(12);
    VariableSpace big{3, 2, false};
    for (int trial = 0; trial < 20; ++trial) {
        MPoly a = random_poly(big, rng, 4, 3);
        MPoly b = random_poly(big, rng, 4, 3);
        Variable var = Variable::z(1 + trial % 3);
        CHECK((a * b).partial_derivative(var)
              == a.partial_derivative(var) * b + a * b.partial_derivative(var));
    }
}

TEST_CASE("substitution identities")
{
    VariableSpace s{2, 0, false};
    MPoly one = c(s, 1);
    MPoly l1 = v(s, Variable::lambda(1)), l2 = v(s, Variable::lambda(2));
    MPoly z1 = v(s, Variable::z(1)), z2 = v(s, Variable::z(2));
    MPoly q22 = -(l1 - one) * z1 * z1 + (l1 - one) * (l2 - one) * z1 * z2
              - (l2 - one) * z2 * z2;

    MPoly cut = q22.substitute({{Variable::z(2), MPoly::zero(s)}}, s);
    CHECK(cut == -(l1 - one) * z1 * z1);

    MPoly q21 = (l1 - one) * z1 + (l2 - one) * z2;
    CHECK(q21.substitute({{Variable::lambda(1), one}}, s) == (l2 - one) * z2);
    CHECK(q21.substitute({}, s) == q21);
}

TEST_CASE("substitute then eval equals eval of composed assignment")
{
    VariableSpace s{3, 1, false};
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        MPoly p = random_poly(s, rng, 5, 3);
        MPoly repl = random_poly(s, rng, 3, 2);
        Variable target = Variable::z(1 + trial % 3);
        MPoly sub = p.substitute({{target, repl}}, s);
        auto pt = random_point(s, rng);
        auto pt2 = pt;
        pt2[target] = repl.eval_rational(pt);
        CHECK(sub.eval_rational(pt) == p.eval_rational(pt2));
    }
}

TEST_CASE("exact evaluation examples")
{
    VariableSpace s{2, 0, false};
    MPoly one = c(s, 1);
    MPoly l1 = v(s, Variable::lambda(1)), l2 = v(s, Variable::lambda(2));
    MPoly lam2 = (l1 - one) * (l2 - one) * (l1 * l2 - one);
    CHECK(lam2.eval_rational({{Variable::lambda(1), 2}, {Variable::lambda(2), 3}})
          == Rational(10));

    MPoly q21 = (l1 - one) * v(s, Variable::z(1)) + (l2 - one) * v(s, Variable::z(2));
    CHECK(q21.eval_rational({{Variable::lambda(1), 1},
                             {Variable::lambda(2), 1},
                             {Variable::z(1), 5},
                             {Variable::z(2), 7}}) == Rational(0));

    MPoly r2 = (l1 * l2 - one) * (l1 - one) * (l2 - one);
    CHECK(r2.eval_rational({{Variable::lambda(1), 2},
                            {Variable::lambda(2), Rational(1, 2)}}) == Rational(0));

    CHECK_THROWS_AS(q21.eval_rational({{Variable::lambda(1), 1}}), structural_error);
}

TEST_CASE("homogeneity in the z block")
{
    VariableSpace s{2, 0, false};
    MPoly one = c(s, 1);
    MPoly l1 = v(s, Variable::lambda(1)), l2 = v(s, Variable::lambda(2));
    MPoly z1 = v(s, Variable::z(1)), z2 = v(s, Variable::z(2));
    MPoly q22 = -(l1 - one) * z1 * z1 + (l1 - one) * (l2 - one) * z1 * z2
              - (l2 - one) * z2 * z2;
    CHECK(q22.is_homogeneous(Block::Z, 2));
    CHECK_FALSE((z1 + z1 * z2).is_homogeneous(Block::Z, 1));
    CHECK_FALSE((z1 + z1 * z2).is_homogeneous(Block::Z, 2));
    for (int l = 0; l < 4; ++l)
        CHECK(MPoly::zero(s).is_homogeneous(Block::Z, l));
}

TEST_CASE("degrees, coefficients, exact division")
{
    VariableSpace s{2, 0, false};
    MPoly z1 = v(s, Variable::z(1)), z2 = v(s, Variable::z(2));
    MPoly p = z1 * z1 * z2 + z1 * Rational(3);
    CHECK(p.degree_in(Block::Z) == 3);
    CHECK(p.degree_in(Variable::z(1)) == 2);
    CHECK(MPoly::zero(s).degree_in(Block::Z) == -1);
    CHECK(p.coefficient_of(Variable::z(1), 2) == z2);
    CHECK(p.coefficient_of(Variable::z(1), 1) == c(s, 3));
    CHECK(p.has_integer_coefficients());
    CHECK_FALSE((p * Rational(1, 2)).has_integer_coefficients());

    MPoly prod = (z1 + z2) * (z1 - z2);
    auto quot = prod.exact_divide(z1 + z2);
    REQUIRE(quot.has_value());
    CHECK(*quot == z1 - z2);
    CHECK_FALSE(prod.exact_divide(z1 + c(s, 1)).has_value());
}

TEST_CASE("serialization round-trip is bit-exact")
{
    VariableSpace s{3, 2, true};
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 10; ++trial) {
        MPoly p = random_poly(s, rng, 6, 4) * Rational(1, 3);
        nlohmann::json j = poly_to_json(p);
        MPoly back = poly_from_json(j);
        CHECK(back == p);
        CHECK(poly_to_json(back).dump() == j.dump());
    }
    CHECK(poly_from_json(poly_to_json(MPoly::zero(s))) == MPoly::zero(s));
}

TEST_CASE("serialized terms carry big integers as decimal strings")
{
    VariableSpace s{1, 0, false};
    MPoly p = v(s, Variable::z(1)).pow(3) * Rational(BigInt("123456789012345678901234567890"));
    nlohmann::json j = poly_to_json(p);
    CHECK(j["terms"][0]["num"] == "123456789012345678901234567890");
    CHECK(j["terms"][0]["den"] == "1");
    CHECK(poly_from_json(j) == p);
}

TEST_CASE("variable name parsing")
{
    CHECK(parse_variable("l3") == Variable::lambda(3));
    CHECK(parse_variable("z12") == Variable::z(12));
    CHECK(parse_variable("mu2_4") == Variable::mu(2, 4));
    CHECK(parse_variable("t") == Variable::aux());
    CHECK_THROWS_AS(parse_variable("bogus"), structural_error);
}
