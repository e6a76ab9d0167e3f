#pragma once

#include "polyc/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace polyc {

// Variable blocks, in canonical order: L (lambda_1..lambda_n), Z (z_1..z_n),
// MU (mu_{iq}, i = 1..n, q = 1..q_max), AUX (single helper variable t).
enum class Block : unsigned char { L = 0, Z = 1, MU = 2, AUX = 3 };

struct Variable {
    Block block = Block::L;
    int i = 1; // 1-based saddle index; 0 for AUX
    int q = 0; // derivative order, MU only

    auto operator<=>(const Variable&) const = default;

    static Variable lambda(int i) { return {Block::L, i, 0}; }
    static Variable z(int i) { return {Block::Z, i, 0}; }
    static Variable mu(int i, int q) { return {Block::MU, i, q}; }
    static Variable aux() { return {Block::AUX, 0, 0}; }

    std::string name() const;
};

// A fixed, totally ordered set of named variables. n sizes the L and Z
// blocks; q_max > 0 enables the MU block; has_aux appends the helper t.
struct VariableSpace {
    int n = 1;
    int q_max = 0;
    bool has_aux = false;

    bool operator==(const VariableSpace&) const = default;

    bool contains(const Variable& v) const
    {
        switch (v.block) {
        case Block::L:
        case Block::Z:
            return v.i >= 1 && v.i <= n;
        case Block::MU:
            return v.i >= 1 && v.i <= n && v.q >= 1 && v.q <= q_max;
        case Block::AUX:
            return has_aux;
        }
        return false;
    }

    std::vector<Variable> variables() const
    {
        std::vector<Variable> out;
        for (int i = 1; i <= n; ++i)
            out.push_back(Variable::lambda(i));
        for (int i = 1; i <= n; ++i)
            out.push_back(Variable::z(i));
        for (int i = 1; i <= n; ++i)
            for (int q = 1; q <= q_max; ++q)
                out.push_back(Variable::mu(i, q));
        if (has_aux)
            out.push_back(Variable::aux());
        return out;
    }

    std::string describe() const;
};

inline std::string Variable::name() const
{
    switch (block) {
    case Block::L:
        return "l" + std::to_string(i);
    case Block::Z:
        return "z" + std::to_string(i);
    case Block::MU:
        return "mu" + std::to_string(i) + "_" + std::to_string(q);
    case Block::AUX:
        return "t";
    }
    return "?";
}

inline std::string VariableSpace::describe() const
{
    std::string s = "space(n=" + std::to_string(n) + ",q_max=" + std::to_string(q_max);
    if (has_aux)
        s += ",aux";
    return s + ")";
}

// Parses the names produced by Variable::name().
Variable parse_variable(const std::string& name);

} // namespace polyc
