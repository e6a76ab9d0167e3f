#include "polyc/saddle.hpp"

#include "polyc/qfamily.hpp"

#include <sstream>
#include <stdexcept>

namespace polyc {

void PolycycleModel::validate() const
{
    if (saddles.empty())
        throw std::invalid_argument("model: needs at least one saddle");
    if (jet_order < n() + 1)
        throw std::invalid_argument("model: jet_order must be >= n+1");
    if (precision_bits < 64)
        throw std::invalid_argument("model: precision_bits must be >= 64");
    for (const auto& s : saddles) {
        if (s.lambda <= 0)
            throw std::invalid_argument("model: lambda must be positive");
        if (s.c <= 0)
            throw std::invalid_argument("model: c must be positive");
        if (s.sign != 1 && s.sign != -1)
            throw std::invalid_argument("model: sign must be +1 or -1");
    }
}

PolycycleModel model_from_json(const nlohmann::json& j)
{
    PolycycleModel m;
    if (!j.contains("saddles") || !j["saddles"].is_array())
        throw std::invalid_argument("model: missing field 'saddles'");
    for (const auto& sj : j["saddles"]) {
        SaddleModel s;
        if (!sj.contains("lambda"))
            throw std::invalid_argument("model: saddle missing field 'lambda'");
        s.lambda = parse_rational(sj.at("lambda").get<std::string>());
        if (sj.contains("c"))
            s.c = parse_rational(sj.at("c").get<std::string>());
        if (sj.contains("tau"))
            s.tau = parse_rational(sj.at("tau").get<std::string>());
        if (sj.contains("sign"))
            s.sign = sj.at("sign").get<int>();
        if (sj.contains("corrections"))
            for (const auto& a : sj.at("corrections"))
                s.corrections.push_back(parse_rational(a.get<std::string>()));
        m.saddles.push_back(std::move(s));
    }
    if (j.contains("precision_bits"))
        m.precision_bits = j.at("precision_bits").get<unsigned>();
    if (j.contains("jet_order"))
        m.jet_order = j.at("jet_order").get<int>();
    m.validate();
    return m;
}

nlohmann::json model_to_json(const PolycycleModel& m)
{
    nlohmann::json saddles = nlohmann::json::array();
    auto rat = [](const Rational& r) {
        std::ostringstream os;
        os << r;
        return os.str();
    };
    for (const auto& s : m.saddles) {
        nlohmann::json corr = nlohmann::json::array();
        for (const auto& a : s.corrections)
            corr.push_back(rat(a));
        saddles.push_back({{"lambda", rat(s.lambda)},
                           {"c", rat(s.c)},
                           {"tau", rat(s.tau)},
                           {"sign", s.sign},
                           {"corrections", corr}});
    }
    return {{"saddles", saddles},
            {"precision_bits", m.precision_bits},
            {"jet_order", m.jet_order}};
}

Jet apply_saddle(const SaddleModel& m, const Jet& x, const Real* tau_override)
{
    if (x.value() <= 0)
        throw std::domain_error("saddle map: argument must be positive");
    Jet p = x.pow(Real(m.lambda));
    Jet corr = Jet::constant(Real(1), x.order());
    if (!m.corrections.empty()) {
        Jet xp = Jet::constant(Real(1), x.order());
        for (const auto& a : m.corrections) {
            xp = xp * x;
            corr = corr + xp * Real(a);
        }
        if (corr.value() <= Real(1) / 2)
            throw std::domain_error("saddle map: outside correction radius");
    }
    Real tau = tau_override ? *tau_override : Real(m.tau);
    return p * corr * (Real(m.c) * m.sign) + tau;
}

std::vector<Real> log_deriv_mu(const SaddleModel& m, const Real& y, int q_max)
{
    Jet id = Jet::identity(y, q_max + 1);
    Jet f = apply_saddle(m, id);
    Jet fp = f.derivative();    // order q_max
    Jet lg = fp.log_abs();
    std::vector<Real> mu(q_max + 1, Real(0));
    Real yq = 1;
    for (int q = 1; q <= q_max; ++q) {
        yq *= y;
        mu[q] = yq * lg.deriv(q);
    }
    return mu;
}

ChainResult chain(const PolycycleModel& model, const Real& x0)
{
    model.validate();
    const int r = model.jet_order;
    ChainResult out;
    out.F.push_back(Jet::identity(x0, r));
    for (int i = 1; i <= model.n(); ++i) {
        const Jet& prev = out.F.back();
        if (prev.value() <= 0) {
            throw std::domain_error("chain: nonpositive intermediate value entering stage " +
                                    std::to_string(i));
        }
        out.Z.push_back(prev.deriv(1) / prev.value());
        out.mu.push_back(log_deriv_mu(model.saddles[i - 1], prev.value(), r - 1));
        try {
            out.F.push_back(apply_saddle(model.saddles[i - 1], prev));
        } catch (const std::domain_error& e) {
            throw std::domain_error("chain: stage " + std::to_string(i) + ": " + e.what());
        }
    }
    Jet delta_prime = out.F.back().derivative(); // order r-1
    Jet d_jet = delta_prime.log_abs();
    for (int l = 0; l <= r - 1; ++l)
        out.D.push_back(d_jet.deriv(l));
    return out;
}

namespace {

Real richardson(const std::vector<Real>& estimates, const Real& ratio)
{
    std::vector<Real> t = estimates;
    const int n = static_cast<int>(t.size());
    const int levels = std::min(n - 1, 4);
    Real rj = 1;
    for (int j = 1; j <= levels; ++j) {
        rj *= ratio;
        for (int k = n - 1; k >= j; --k)
            t[k] = (t[k] - rj * t[k - 1]) / (1 - rj);
    }
    return t[n - 1];
}

MuLimitProbe mu_probe_at_bits(const PolycycleModel& model, int i, int q,
                              const Rational& x_start, const Rational& ratio, int count,
                              unsigned bits)
{
    PrecisionGuard guard(bits);
    const SaddleModel& s = model.saddles.at(i - 1);
    MuLimitProbe probe;
    probe.used_bits = bits;
    Rational x = x_start;
    for (int k = 0; k < count; ++k) {
        Real xr(x);
        probe.xs.push_back(xr);
        probe.estimates.push_back(log_deriv_mu(s, xr, q)[q]);
        x *= ratio;
    }
    probe.extrapolated = richardson(probe.estimates, Real(ratio));
    Real sign = (q % 2 == 1) ? 1 : -1;
    probe.target = sign * Real(factorial(q - 1)) * (Real(s.lambda) - 1);
    return probe;
}

} // namespace

MuLimitProbe mu_limit_probe(const PolycycleModel& model, int i, int q,
                            const Rational& x_start, const Rational& ratio, int count)
{
    model.validate();
    if (q < 1 || q > model.jet_order - 1)
        throw std::invalid_argument("mu_limit_probe: need 1 <= q <= r-1");
    if (i < 1 || i > model.n())
        throw std::invalid_argument("mu_limit_probe: saddle index out of range");
    if (x_start <= 0 || ratio <= 0 || ratio >= 1 || count < 3)
        throw std::invalid_argument("mu_limit_probe: need x_start > 0, 0 < ratio < 1, count >= 3");

    MuLimitProbe probe = mu_probe_at_bits(model, i, q, x_start, ratio, count,
                                          model.precision_bits);
    {
        PrecisionGuard guard(model.precision_bits);
        auto bad = [](const Real& v) { return isnan(v) || isinf(v); };
        Real last_gap = abs(probe.estimates.back() - probe.extrapolated);
        Real scale = Real(1) + abs(probe.target);
        // cancellation escalation: deep x with high q can burn the budget
        if ((bad(probe.extrapolated) || last_gap > scale) && model.precision_bits < 512)
            probe = mu_probe_at_bits(model, i, q, x_start, ratio, count, 512);
        if (bad(probe.extrapolated))
            throw std::domain_error(
                "mu_limit_probe: precision exhausted; increase precision_bits");
    }
    return probe;
}

std::vector<IdentityCheckRow> identity_check(const PolycycleModel& model,
                                             const Rational& x0, int l_max)
{
    model.validate();
    if (l_max < 1 || l_max > model.jet_order - 1)
        throw std::invalid_argument("identity_check: need 1 <= l_max <= r-1");
    PrecisionGuard guard(model.precision_bits);
    ChainResult ch = chain(model, Real(x0));
    PFamily fam = p_family(model.n(), l_max);

    std::vector<IdentityCheckRow> rows;
    for (int l = 1; l <= l_max; ++l) {
        const MPoly& p = fam.at(l);
        std::map<Variable, Real> point;
        for (int i = 1; i <= model.n(); ++i) {
            point.emplace(Variable::z(i), ch.Z[i - 1]);
            for (int q = 1; q <= l; ++q)
                point.emplace(Variable::mu(i, q), ch.mu[i - 1][q]);
        }
        IdentityCheckRow row;
        row.l = l;
        row.jet_value = ch.D[l];
        row.poly_value = p.eval<Real>(point);
        Real denom = abs(row.jet_value);
        if (denom < 1)
            denom = 1;
        row.rel_error = abs(row.jet_value - row.poly_value) / denom;
        rows.push_back(std::move(row));
    }
    return rows;
}

DivergenceProbe divergence_probe_n1(const PolycycleModel& model,
                                    const Rational& x_start, const Rational& ratio, int count)
{
    model.validate();
    if (model.n() != 1)
        throw std::invalid_argument("divergence_probe_n1: model must have exactly one saddle");
    if (x_start <= 0 || ratio <= 0 || ratio >= 1 || count < 4)
        throw std::invalid_argument("divergence_probe_n1: bad sequence parameters");
    PrecisionGuard guard(model.precision_bits);

    DivergenceProbe probe;
    Rational x = x_start;
    for (int k = 0; k < count; ++k) {
        Real xr(x);
        Jet f = apply_saddle(model.saddles[0], Jet::identity(xr, 2));
        probe.xs.push_back(xr);
        probe.ln_delta_prime.push_back(log(abs(f.deriv(1))));
        x *= ratio;
    }
    // monotone growth of |ln Delta'| over the tail
    bool monotone = true;
    const size_t tail = probe.ln_delta_prime.size() / 2;
    for (size_t k = tail; k + 1 < probe.ln_delta_prime.size(); ++k)
        if (abs(probe.ln_delta_prime[k + 1]) <= abs(probe.ln_delta_prime[k]))
            monotone = false;
    Real last = probe.ln_delta_prime.back();
    probe.diverges = monotone && abs(last) > 10;
    probe.direction = probe.diverges ? (last > 0 ? 1 : -1) : 0;
    return probe;
}

std::vector<DoubleCyclePoint> double_cycle_family_probe(const PolycycleModel& model,
                                                        const std::vector<Rational>& x0s)
{
    model.validate();
    if (model.n() != 2)
        throw std::invalid_argument("double_cycle_family_probe: model must have two saddles");
    if (model.saddles[0].lambda * model.saddles[1].lambda == 1)
        throw std::invalid_argument(
            "double_cycle_family_probe: requires lambda1*lambda2 != 1");
    PrecisionGuard guard(model.precision_bits);

    const SaddleModel& s1 = model.saddles[0];
    const SaddleModel& s2 = model.saddles[1];
    const Real tol = pow(Real(10), -30);

    std::vector<DoubleCyclePoint> out;
    Real tau1_guess = 0, tau2_guess = 0;
    bool have_guess = false;

    for (const Rational& x0r : x0s) {
        Real x0(x0r);
        DoubleCyclePoint pt;
        pt.x0 = x0;

        // f1 at x0 with tau1 = 0; tau1 only shifts the value
        Jet f1 = apply_saddle(s1, Jet::identity(x0, 2), nullptr);
        Real f1_val_tau0 = f1.value() - Real(s1.tau);
        Real f1p = f1.deriv(1);

        // starting points: the power-map closed form where available, then the
        // previous grid point (continuation), then zero offsets
        std::vector<std::pair<Real, Real>> guesses;
        if (s2.lambda != 1) {
            Real lam1(s1.lambda), lam2(s2.lambda), c1(s1.c), c2(s2.c);
            Real y1 = pow(1 / (c1 * c2 * lam1 * lam2 * pow(x0, lam1 - 1)),
                          1 / (lam2 - 1));
            guesses.emplace_back(y1 - f1_val_tau0, x0 - c2 * pow(y1, lam2) * s2.sign);
        }
        if (have_guess)
            guesses.emplace_back(tau1_guess, tau2_guess);
        guesses.emplace_back(Real(0), Real(0));

        auto residuals = [&](const Real& t1, const Real& t2, Real& r1, Real& r2,
                             Real& y1_out, Real& f2p_out, Real& f2pp_out) {
            Real y1 = f1_val_tau0 + t1;
            if (y1 <= 0)
                throw std::domain_error("negative composition value");
            Jet g = apply_saddle(s2, Jet::identity(y1, 3), &t2);
            y1_out = y1;
            f2p_out = g.deriv(1);
            f2pp_out = g.deriv(2);
            r1 = g.value() - x0;
            r2 = g.deriv(1) * f1p - 1;
        };

        bool converged = false;
        Real tau1, tau2, r1, r2, y1, f2p, f2pp;
        auto newton_from = [&](const Real& t1_start, const Real& t2_start) -> bool {
            tau1 = t1_start;
            tau2 = t2_start;
            residuals(tau1, tau2, r1, r2, y1, f2p, f2pp);
            for (int iter = 0; iter < 200; ++iter) {
                Real norm = abs(r1) + abs(r2);
                if (norm < tol)
                    return true;
                // J = [f2'(y1) 1; f2''(y1) f1' 0]
                Real det = -f2pp * f1p;
                if (det == 0)
                    break;
                Real d1 = -r2 / (f2pp * f1p);
                Real d2 = -r1 - f2p * d1;
                // damped step with halving
                Real step = 1;
                bool accepted = false;
                for (int h = 0; h < 60; ++h) {
                    Real n1 = tau1 + step * d1;
                    Real n2 = tau2 + step * d2;
                    Real q1, q2, qy, qp, qpp;
                    try {
                        residuals(n1, n2, q1, q2, qy, qp, qpp);
                    } catch (const std::domain_error&) {
                        step /= 2;
                        continue;
                    }
                    if (abs(q1) + abs(q2) < norm) {
                        tau1 = n1;
                        tau2 = n2;
                        r1 = q1;
                        r2 = q2;
                        y1 = qy;
                        f2p = qp;
                        f2pp = qpp;
                        accepted = true;
                        break;
                    }
                    step /= 2;
                }
                if (!accepted)
                    break;
            }
            return abs(r1) + abs(r2) < tol;
        };
        for (const auto& [g1, g2] : guesses) {
            try {
                if (newton_from(g1, g2)) {
                    converged = true;
                    break;
                }
            } catch (const std::domain_error&) {
            }
        }

        if (!converged) {
            std::ostringstream os;
            os << "double_cycle_family_probe: Newton failed at x0 = " << x0
               << " (residuals " << r1 << ", " << r2 << ")";
            throw std::runtime_error(os.str());
        }

        pt.converged = true;
        pt.tau1 = tau1;
        pt.tau2 = tau2;
        pt.res_fixed = abs(r1);
        pt.res_deriv = abs(r2);
        Real z1 = 1 / x0;         // Z_1 = F_0'/F_0
        Real z2 = f1p / y1;       // Z_2 = F_1'/F_1
        Real norm = sqrt(z1 * z1 + z2 * z2);
        pt.z1 = z1 / norm;
        pt.z2 = z2 / norm;
        Real az1 = abs(z1), az2 = abs(z2);
        pt.min_ratio = (az1 < az2 ? az1 : az2) / norm;
        out.push_back(pt);

        tau1_guess = tau1;
        tau2_guess = tau2;
        have_guess = true;
    }
    return out;
}

} // namespace polyc
