#pragma once

#include "polyc/mpoly.hpp"
#include "polyc/qfamily.hpp"

#include <cstdint>
#include <random>

namespace polyc {

// A system of Z-homogeneous polynomials with rational coefficients (any
// lambda parameters already substituted numerically).
struct HomSystem {
    VariableSpace space;
    std::vector<MPoly> polys;
};

// Instantiates {Q_{n,l} = 0, l = 1..l_max} at a numeric lambda point.
HomSystem numeric_q_system(int n, int l_max, const std::vector<Rational>& lambdas);

// Determinant of the Sylvester matrix of a and b in v. Both inputs must have
// positive degree in v.
MPoly sylvester_resultant(const MPoly& a, const MPoly& b, const Variable& v);

// Existence of a common zero in CP^{m-1}, m = number of z-variables (1..3).
// m=1: all coefficients vanish; m=2: chart gcd plus the point at infinity;
// m=3: eliminate through a linear member, then the m=2 test.
bool has_nontrivial_zero(const HomSystem& sys);

// m=2 verdict computed on a single chart (z_other = 1) plus the point that
// chart misses. Exposed for the chart-invariance property test.
bool has_nontrivial_zero_m2_chart(const std::vector<MPoly>& polys, int chart);

// Symbolic eliminants of the Q-systems via explicit combination pipelines.
MPoly eliminant_n2(); // mu_1 - 1, over a 1-lambda space
MPoly eliminant_n3(); // (mu_1 mu_2 - 1)(mu_1 - 1)(mu_2 - 1)
MPoly eliminant_n4(); // R* = reduced-system determinant times the boundary R_2 factors

// The closed forms the eliminants reduce to (up to repeated factors).
MPoly r2_closed_form(const VariableSpace& s, int i, int j);
MPoly r3_closed_form();

struct SamplePoint {
    std::map<Variable, Rational> values;
    bool vanish_a = false;
    bool vanish_b = false;
};

struct ZeroSetReport {
    std::uint64_t seed = 0;
    int sample_count = 0;
    int agree_count = 0;
    int redraw_count = 0;
    std::vector<SamplePoint> disagreements;
    bool passed() const { return agree_count == sample_count; }
};

// Compares the vanishing loci of a and b on random rational points in (0,4)
// with denominator <= 64, plus points constructed on each supplied factor
// (factors must be degree 1 in at least one variable).
ZeroSetReport zero_set_compare(const MPoly& a, const MPoly& b,
                               const std::vector<MPoly>& factors_a,
                               const std::vector<MPoly>& factors_b,
                               int samples, std::uint64_t seed);

struct NewtonReport {
    bool ok = false;
    std::vector<std::string> trace;
};

// Derives sigma_l = 0 for l = 1..m from p_l = 0 via the Newton identities
// (verified symbolically), then the Vieta identity; true means the power-sum
// system has no nontrivial complex zero.
NewtonReport newton_no_common_zero(int m);

} // namespace polyc
