#pragma once

#include "polyc/jet.hpp"
#include "polyc/rational.hpp"

#include <json.hpp>

#include <vector>

namespace polyc {

// One power-like map f(x) = tau + sign * C * x^lambda * (1 + a_1 x + a_2 x^2 + ...).
// Evaluated only for x > 0 and while the correction factor stays above 1/2.
struct SaddleModel {
    Rational lambda{1};
    Rational c{1};
    Rational tau{0};
    int sign = 1;
    std::vector<Rational> corrections;
};

// An ordered chain of saddle maps plus the numeric working parameters.
struct PolycycleModel {
    std::vector<SaddleModel> saddles;
    unsigned precision_bits = 256;
    int jet_order = 6; // r; must be >= n+1

    int n() const { return static_cast<int>(saddles.size()); }
    void validate() const;
};

PolycycleModel model_from_json(const nlohmann::json& j);
nlohmann::json model_to_json(const PolycycleModel& m);

// Jet of the map at the jet x (composition when x is itself a chain jet).
// An optional tau override supports solving for offsets.
Jet apply_saddle(const SaddleModel& m, const Jet& x, const Real* tau_override = nullptr);

// mu_q = y^q (d/dy)^q ln|f'(y)| for q = 1..q_max (index 0 unused).
std::vector<Real> log_deriv_mu(const SaddleModel& m, const Real& y, int q_max);

struct ChainResult {
    std::vector<Jet> F;              // F[0] = id, ..., F[n]
    std::vector<Real> Z;             // Z[i-1] = F_{i-1}'/F_{i-1}, i = 1..n
    std::vector<std::vector<Real>> mu; // mu[i-1][q-1], q = 1..r-1
    std::vector<Real> D;             // D[l] = (ln Delta')^{(l)}, l = 0..r-1
};

ChainResult chain(const PolycycleModel& model, const Real& x0);

struct MuLimitProbe {
    std::vector<Real> xs;
    std::vector<Real> estimates;
    Real extrapolated{0};
    Real target{0};
    unsigned used_bits = 0;
};

// Evaluates x^q (d/dx)^q ln f_i'(x) along the geometric sequence
// x_k = x_start * ratio^k and extrapolates the limit; target is
// (-1)^{q-1} (q-1)! (lambda_i - 1). Escalates precision on cancellation.
MuLimitProbe mu_limit_probe(const PolycycleModel& model, int i, int q,
                            const Rational& x_start, const Rational& ratio, int count);

struct IdentityCheckRow {
    int l = 0;
    Real jet_value{0};
    Real poly_value{0};
    Real rel_error{0};
};

// D^{(l)} from the jet route vs the symbolic P_{nl} evaluated at the numeric
// mu_{iq}, Z_i. The identity is exact; errors must sit at rounding level.
std::vector<IdentityCheckRow> identity_check(const PolycycleModel& model,
                                             const Rational& x0, int l_max);

struct DivergenceProbe {
    std::vector<Real> xs;
    std::vector<Real> ln_delta_prime;
    bool diverges = false;      // |ln Delta'| eventually monotonically increasing
    int direction = 0;          // sign of the divergence; 0 when bounded
};

DivergenceProbe divergence_probe_n1(const PolycycleModel& model,
                                    const Rational& x_start, const Rational& ratio, int count);

struct DoubleCyclePoint {
    Real x0{0};
    Real tau1{0}, tau2{0};
    Real z1{0}, z2{0};          // normalized direction (Z1 : Z2)
    Real min_ratio{0};          // min(|z1|,|z2|) / ||z||
    Real res_fixed{0};          // |Delta(x0) - x0|
    Real res_deriv{0};          // |Delta'(x0) - 1|
    bool converged = false;
};

// For each x0 solves Delta(x0) = x0, Delta'(x0) = 1 for (tau1, tau2) by
// damped Newton (continuation from the previous grid point) and reports the
// projective direction of (Z1, Z2). Requires n = 2 and lambda1*lambda2 != 1.
std::vector<DoubleCyclePoint> double_cycle_family_probe(const PolycycleModel& model,
                                                        const std::vector<Rational>& x0s);

} // namespace polyc
