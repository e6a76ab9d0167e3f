#include "polyc/json_io.hpp"

namespace polyc {

using nlohmann::json;

json space_to_json(const VariableSpace& s)
{
    json blocks = json::array();
    blocks.push_back({{"name", "L"}, {"count", s.n}});
    blocks.push_back({{"name", "Z"}, {"count", s.n}});
    if (s.q_max > 0)
        blocks.push_back({{"name", "MU"}, {"count", s.n}, {"q_max", s.q_max}});
    if (s.has_aux)
        blocks.push_back({{"name", "AUX"}, {"count", 1}});
    return {{"n", s.n}, {"blocks", blocks}};
}

VariableSpace space_from_json(const json& j)
{
    VariableSpace s;
    s.n = j.at("n").get<int>();
    for (const auto& b : j.at("blocks")) {
        const std::string name = b.at("name").get<std::string>();
        if (name == "MU")
            s.q_max = b.at("q_max").get<int>();
        else if (name == "AUX")
            s.has_aux = true;
    }
    return s;
}

json poly_to_json(const MPoly& p)
{
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m.exps)
            exps[v.name()] = e;
        terms.push_back({{"exps", exps},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
    }
    return {{"space", space_to_json(p.space())}, {"terms", terms}};
}

MPoly poly_from_json(const json& j)
{
    VariableSpace s = space_from_json(j.at("space"));
    std::vector<std::pair<Monomial, Rational>> ts;
    for (const auto& t : j.at("terms")) {
        Monomial m;
        for (const auto& [name, e] : t.at("exps").items())
            m.exps[parse_variable(name)] = e.get<int>();
        BigInt num(t.at("num").get<std::string>());
        BigInt den(t.at("den").get<std::string>());
        if (den == 0)
            throw structural_error("poly_from_json: zero denominator");
        ts.emplace_back(std::move(m), Rational(num, den));
    }
    return from_terms(s, std::move(ts));
}

} // namespace polyc
