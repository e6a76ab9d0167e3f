#include "polyc/mpoly.hpp"

#include <sstream>

namespace polyc {

Variable parse_variable(const std::string& name)
{
    if (name == "t")
        return Variable::aux();
    if (name.size() < 2)
        throw structural_error("bad variable name: " + name);
    if (name[0] == 'l')
        return Variable::lambda(std::stoi(name.substr(1)));
    if (name[0] == 'z')
        return Variable::z(std::stoi(name.substr(1)));
    if (name.rfind("mu", 0) == 0) {
        auto sep = name.find('_');
        if (sep == std::string::npos)
            throw structural_error("bad variable name: " + name);
        return Variable::mu(std::stoi(name.substr(2, sep - 2)), std::stoi(name.substr(sep + 1)));
    }
    throw structural_error("bad variable name: " + name);
}

MPoly MPoly::constant(const VariableSpace& s, const Rational& c)
{
    MPoly p(s);
    if (c != 0)
        p.terms_.emplace(Monomial{}, c);
    return p;
}

MPoly MPoly::var(const VariableSpace& s, const Variable& v)
{
    if (!s.contains(v))
        throw structural_error("variable " + v.name() + " not in " + s.describe());
    MPoly p(s);
    Monomial m;
    m.exps[v] = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

void MPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void MPoly::check_same_space(const MPoly& o, const char* op) const
{
    if (space_ != o.space_)
        throw structural_error(std::string(op) + ": mismatched variable spaces " +
                               space_.describe() + " vs " + o.space_.describe());
}

MPoly MPoly::operator+(const MPoly& o) const
{
    check_same_space(o, "add");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const
{
    check_same_space(o, "sub");
    MPoly r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

MPoly MPoly::operator-() const
{
    MPoly r(space_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const
{
    check_same_space(o, "mul");
    MPoly r(space_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma.times(mb), ca * cb);
    return r;
}

MPoly MPoly::operator*(const Rational& c) const
{
    MPoly r(space_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

MPoly MPoly::pow(int e) const
{
    if (e < 0)
        throw structural_error("pow: negative exponent");
    MPoly r = constant(space_, 1);
    for (int k = 0; k < e; ++k)
        r = r * *this;
    return r;
}

MPoly MPoly::partial_derivative(const Variable& v) const
{
    if (!space_.contains(v))
        throw structural_error("partial_derivative: unknown variable " + v.name());
    MPoly r(space_);
    for (const auto& [m, c] : terms_) {
        int e = m.exponent(v);
        if (e == 0)
            continue;
        Monomial dm = m;
        if (e == 1)
            dm.exps.erase(v);
        else
            dm.exps[v] = e - 1;
        r.add_term(dm, c * e);
    }
    return r;
}

MPoly MPoly::substitute(const std::map<Variable, MPoly>& repl, const VariableSpace& out_space) const
{
    for (const auto& [v, p] : repl) {
        if (!space_.contains(v))
            throw structural_error("substitute: unknown variable " + v.name());
        if (p.space() != out_space)
            throw structural_error("substitute: replacement for " + v.name() +
                                   " not over the declared result space");
    }
    MPoly acc(out_space);
    for (const auto& [m, c] : terms_) {
        MPoly term = MPoly::constant(out_space, c);
        for (const auto& [v, e] : m.exps) {
            auto it = repl.find(v);
            if (it != repl.end()) {
                term = term * it->second.pow(e);
            } else {
                if (!out_space.contains(v))
                    throw structural_error("substitute: passthrough variable " + v.name() +
                                           " missing from result space");
                term = term * MPoly::var(out_space, v).pow(e);
            }
        }
        acc = acc + term;
    }
    return acc;
}

MPoly MPoly::substitute_values(const std::map<Variable, Rational>& repl,
                               const VariableSpace& out_space) const
{
    std::map<Variable, MPoly> m;
    for (const auto& [v, c] : repl)
        m.emplace(v, MPoly::constant(out_space, c));
    return substitute(m, out_space);
}

bool MPoly::is_homogeneous(Block b, int d) const
{
    for (const auto& [m, c] : terms_)
        if (m.degree_in(b) != d)
            return false;
    return true;
}

int MPoly::degree_in(Block b) const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.degree_in(b));
    return d;
}

int MPoly::degree_in(const Variable& v) const
{
    int d = -1;
    for (const auto& [m, c] : terms_)
        d = std::max(d, m.exponent(v));
    return d;
}

bool MPoly::has_integer_coefficients() const
{
    for (const auto& [m, c] : terms_)
        if (denominator(c) != 1)
            return false;
    return true;
}

MPoly MPoly::coefficient_of(const Variable& v, int k) const
{
    MPoly r(space_);
    for (const auto& [m, c] : terms_) {
        if (m.exponent(v) != k)
            continue;
        Monomial rm = m;
        rm.exps.erase(v);
        r.add_term(rm, c);
    }
    return r;
}

std::optional<MPoly> MPoly::exact_divide(const MPoly& divisor) const
{
    check_same_space(divisor, "exact_divide");
    if (divisor.is_zero())
        throw structural_error("exact_divide: division by zero polynomial");
    MPoly rem = *this;
    MPoly quo(space_);
    const auto& [lm, lc] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [rm, rc] = *rem.terms_.begin();
        // leading monomial of rem must be divisible by that of divisor
        Monomial qm;
        bool divides = true;
        for (const auto& [v, e] : lm.exps) {
            int re = rm.exponent(v);
            if (re < e) {
                divides = false;
                break;
            }
        }
        if (!divides)
            return std::nullopt;
        qm = rm;
        for (const auto& [v, e] : lm.exps) {
            int& slot = qm.exps[v];
            slot -= e;
            if (slot == 0)
                qm.exps.erase(v);
        }
        Rational qc = rc / lc;
        MPoly t(space_);
        t.terms_.emplace(qm, qc);
        quo = quo + t;
        rem = rem - t * divisor;
    }
    return quo;
}

static std::string default_namer(const Variable& v) { return v.name(); }

std::string MPoly::to_string() const { return to_string(&default_namer); }

std::string MPoly::to_string(std::string (*namer)(const Variable&)) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        bool wrote_coeff = false;
        if (a != 1 || m.exps.empty()) {
            out << a;
            wrote_coeff = true;
        }
        for (const auto& [v, e] : m.exps) {
            if (wrote_coeff)
                out << "*";
            out << namer(v);
            if (e > 1)
                out << "^" << e;
            wrote_coeff = true;
        }
    }
    return out.str();
}

MPoly from_terms(VariableSpace s, std::vector<std::pair<Monomial, Rational>> ts)
{
    MPoly p(s);
    for (auto& [m, c] : ts) {
        for (const auto& [v, e] : m.exps) {
            if (!s.contains(v))
                throw structural_error("from_terms: variable " + v.name() + " not in space");
            if (e < 0)
                throw structural_error("from_terms: negative exponent");
        }
        p.add_term(m, c);
    }
    return p;
}

} // namespace polyc
