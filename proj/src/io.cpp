#include "sleib/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>

namespace sleib {

ParamVector params_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("beta") || !j.contains("gamma"))
        throw ParseError("expected an object with dim, beta and gamma");
    int dim = j.at("dim").get<int>();
    std::vector<GaussianRational> beta;
    for (const auto& item : j.at("beta")) beta.push_back(parse_scalar(item.get<std::string>()));
    ParamVector p(dim, std::move(beta), parse_scalar(j.at("gamma").get<std::string>()));
    return p;
}

nlohmann::json params_to_json(const ParamVector& p) {
    nlohmann::json beta = nlohmann::json::array();
    for (int t = 3; t <= p.n(); ++t) beta.push_back(format_scalar(p.beta_at(t)));
    return {{"dim", p.dim}, {"beta", beta}, {"gamma", format_scalar(p.gamma)}};
}

ParamVector parse_point(const std::string& text) {
    if (text.size() < 4 || (text[0] != 'L' && text[0] != 'l') || text[1] != '(' ||
        text.back() != ')')
        throw ParseError("expected a point of the form L(b3,...,bn,g): " + text);
    std::vector<GaussianRational> entries;
    std::string tok;
    for (size_t i = 2; i < text.size(); ++i) {
        char c = text[i];
        if (c == ',' || c == ')') {
            entries.push_back(parse_scalar(tok));
            tok.clear();
        } else {
            tok += c;
        }
    }
    GaussianRational gamma = entries.back();
    entries.pop_back();
    const int dim = static_cast<int>(entries.size()) + 3;
    return ParamVector(dim, std::move(entries), std::move(gamma));
}

ParamVector load_point(const std::string& arg) {
    if (arg.size() > 1 && (arg[0] == 'L' || arg[0] == 'l') && arg[1] == '(')
        return parse_point(arg);
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot open point file: " + arg);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invalid JSON in " + arg + ": " + e.what());
    }
    return params_from_json(j);
}

}  // namespace sleib
