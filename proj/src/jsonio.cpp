#include "jacklaurent/jsonio.hpp"

#include <sstream>

namespace jl {

Json to_json(const Partition& p) {
    Json j = Json::array();
    for (int x : p.parts()) j.push_back(x);
    return j;
}

Json to_json(const Bipartition& a) {
    return Json{{"lambda", to_json(a.lambda)}, {"mu", to_json(a.mu)}};
}

Json to_json(Box b) { return Json::array({b.i, b.j}); }

Json to_json(const BoxSet& s) {
    Json j = Json::array();
    for (const Box& b : s) j.push_back(to_json(b));
    return j;
}

Json to_json(const EquivClass& E) {
    Json comps = Json::array();
    for (const auto& c : E.components)
        comps.push_back(Json{{"nu", to_json(c.nu)}, {"tau", to_json(c.tau)}});
    Json members = Json::array();
    for (const auto& m : E.members) members.push_back(to_json(m));
    return Json{{"rect", {{"n", E.rect.n}, {"m", E.rect.m}}},
                {"alpha_min", to_json(E.alpha_min)},
                {"alpha_max", to_json(E.alpha_max)},
                {"components", comps},
                {"members", members},
                {"outside", {{"lambda", to_json(E.outside.first)}, {"mu", to_json(E.outside.second)}}},
                {"r", E.r()}};
}

Json to_json(const OrderReport& r) {
    return Json{{"numerator_zero_order", r.numerator_zero_order},
                {"denominator_zero_order", r.denominator_zero_order},
                {"triggered_conditions", r.triggered_conditions}};
}

Json to_json(const MatKP& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const MatK& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Json to_json(const TransitionMatrix& A, const MatKP& ainv, const PoleReport& poles) {
    Json basis = Json::array();
    for (const auto& m : A.cls.members) basis.push_back(to_json(m));
    Json entries = Json::array();
    for (const auto& e : poles.entries)
        entries.push_back(Json{{"beta", e.beta_index},
                               {"alpha", e.alpha_index},
                               {"neg_valuation", e.neg_valuation},
                               {"components", e.component_count},
                               {"pass", e.pass}});
    return Json{{"basis", basis},
                {"matrix", to_json(A.a)},
                {"inverse", to_json(ainv)},
                {"pole_report", {{"entries", entries}, {"all_pass", poles.all_pass}}}};
}

Partition partition_from_json(const Json& j) {
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

Bipartition bipartition_from_json(const Json& j) {
    return {partition_from_json(j.at("lambda")), partition_from_json(j.at("mu"))};
}

namespace {

Partition parse_parts(const std::string& s) {
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        tok = tok.substr(a, b - a + 1);
        try {
            size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw Error("bad partition part '" + tok + "'");
            parts.push_back(v);
        } catch (const std::invalid_argument&) {
            throw Error("bad partition part '" + tok + "'");
        } catch (const std::out_of_range&) {
            throw Error("bad partition part '" + tok + "'");
        }
    }
    return Partition(std::move(parts));
}

}  // namespace

Bipartition parse_bipartition(const std::string& s) {
    auto semi = s.find(';');
    if (semi == std::string::npos) throw Error("bipartition syntax is 'parts;parts'");
    return {parse_parts(s.substr(0, semi)), parse_parts(s.substr(semi + 1))};
}

std::string bipartition_to_cli(const Bipartition& a) {
    auto side = [](const Partition& p) {
        std::string s;
        for (int i = 0; i < p.length(); ++i) {
            if (i) s += ",";
            s += std::to_string(p.parts()[i]);
        }
        return s;
    };
    return side(a.lambda) + ";" + side(a.mu);
}

}  // namespace jl
