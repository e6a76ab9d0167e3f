#pragma once

#include "polyc/rational.hpp"
#include "polyc/variable.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyc {

// Sparse exponent vector. Zero exponents are never stored.
struct Monomial {
    std::map<Variable, int> exps;

    bool operator==(const Monomial&) const = default;

    int total_degree() const
    {
        int d = 0;
        for (const auto& [v, e] : exps)
            d += e;
        return d;
    }

    int degree_in(Block b) const
    {
        int d = 0;
        for (const auto& [v, e] : exps)
            if (v.block == b)
                d += e;
        return d;
    }

    int exponent(const Variable& v) const
    {
        auto it = exps.find(v);
        return it == exps.end() ? 0 : it->second;
    }

    Monomial times(const Monomial& o) const
    {
        Monomial r = *this;
        for (const auto& [v, e] : o.exps) {
            int& slot = r.exps[v];
            slot += e;
            if (slot == 0)
                r.exps.erase(v);
        }
        return r;
    }
};

// Graded lexicographic order, leading monomial first. Used only for the
// canonical serialization order, never semantically.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        int da = a.total_degree(), db = b.total_degree();
        if (da != db)
            return da > db;
        auto ia = a.exps.begin(), ib = b.exps.begin();
        while (ia != a.exps.end() && ib != b.exps.end()) {
            if (ia->first != ib->first)
                return ia->first < ib->first; // earlier variable present => larger
            if (ia->second != ib->second)
                return ia->second > ib->second;
            ++ia;
            ++ib;
        }
        return ia != a.exps.end();
    }
};

// Exact sparse multivariate polynomial over Q. Immutable in practice: all
// operations return new values. Canonical form: no zero coefficients, term
// map keyed by the canonical monomial order.
class MPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    explicit MPoly(VariableSpace space) : space_(space) {}

    static MPoly zero(const VariableSpace& s) { return MPoly(s); }
    static MPoly constant(const VariableSpace& s, const Rational& c);
    static MPoly var(const VariableSpace& s, const Variable& v);

    const VariableSpace& space() const { return space_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const MPoly& o) const { return space_ == o.space_ && terms_ == o.terms_; }

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator-() const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Rational& c) const;
    MPoly pow(int e) const;

    MPoly partial_derivative(const Variable& v) const;

    // Simultaneous substitution. Unmapped variables pass through and must
    // exist in the target space.
    MPoly substitute(const std::map<Variable, MPoly>& repl, const VariableSpace& out_space) const;
    MPoly substitute_values(const std::map<Variable, Rational>& repl,
                            const VariableSpace& out_space) const;

    // Exact evaluation; every variable of the polynomial must be assigned.
    // Works over any commutative ring type constructible from Rational.
    template <class T>
    T eval(const std::map<Variable, T>& point) const
    {
        T acc = T(0);
        for (const auto& [m, c] : terms_) {
            T term = T(c);
            for (const auto& [v, e] : m.exps) {
                auto it = point.find(v);
                if (it == point.end())
                    throw structural_error("eval: missing assignment for " + v.name());
                for (int k = 0; k < e; ++k)
                    term *= it->second;
            }
            acc += term;
        }
        return acc;
    }

    Rational eval_rational(const std::map<Variable, Rational>& point) const
    {
        return eval<Rational>(point);
    }

    // True iff every term has Z-degree (resp. block degree) exactly d.
    // The zero polynomial is homogeneous of every degree.
    bool is_homogeneous(Block b, int d) const;

    int degree_in(Block b) const; // max over terms; -1 for zero
    int degree_in(const Variable& v) const;

    bool has_integer_coefficients() const;

    // Coefficient of v^k, a polynomial in the remaining variables.
    MPoly coefficient_of(const Variable& v, int k) const;

    // Exact division; nullopt when the divisor does not divide exactly.
    std::optional<MPoly> exact_divide(const MPoly& divisor) const;

    // Human-readable form: sorted monomials, explicit signs.
    std::string to_string() const;
    // Same with a custom variable renamer (e.g. mu/w names used in the
    // elimination displays).
    std::string to_string(std::string (*namer)(const Variable&)) const;

private:
    void add_term(const Monomial& m, const Rational& c);
    void check_same_space(const MPoly& o, const char* op) const;

    VariableSpace space_;
    TermMap terms_;

    friend MPoly from_terms(VariableSpace, std::vector<std::pair<Monomial, Rational>>);
};

MPoly from_terms(VariableSpace s, std::vector<std::pair<Monomial, Rational>> ts);

} // namespace polyc
