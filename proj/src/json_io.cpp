#include "qtmoments/json_io.hpp"

namespace qtmoments {

nlohmann::json polynomial_to_json(const Polynomial& p)
{
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [m, c] : p.terms()) {
        if (m[Var::S] != 0) throw UnresolvedHalfPower("polynomial still contains sqrt(lambda)");
        nlohmann::json exps = nlohmann::json::object();
        for (Var v : kAllVars) {
            if (m[v] != 0) exps[std::string(var_name(v))] = m[v];
        }
        terms.push_back({{"coeff", c.get_str(10)}, {"exps", exps}});
    }
    return {{"terms", terms}};
}

Polynomial polynomial_from_json(const nlohmann::json& j)
{
    Polynomial p;
    try {
        for (const auto& t : j.at("terms")) {
            Monomial m;
            for (const auto& [name, e] : t.at("exps").items()) {
                m.set(var_from_name(name), e.get<unsigned>());
            }
            p.add_term(Integer(t.at("coeff").get<std::string>(), 10), m);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed polynomial json: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed coefficient in polynomial json");
    }
    return p;
}

}  // namespace qtmoments
