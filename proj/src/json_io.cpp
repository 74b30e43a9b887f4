#include "matvar/json_io.hpp"

namespace matvar {

using nlohmann::json;

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw input_error("graph JSON needs \"vertices\" and \"edges\"");
    Graph g;
    try {
        g.vertices = j.at("vertices").get<int>();
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw input_error("each edge is a pair [u, v]");
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            g.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
    } catch (const json::exception& ex) {
        throw input_error(std::string("malformed graph JSON: ") + ex.what());
    }
    g.validate();
    return g;
}

PointConfiguration config_from_json(const json& j) {
    if (!j.is_object() || !j.contains("field") || !j.contains("ambient_dim") ||
        !j.contains("points"))
        throw input_error("configuration JSON needs \"field\", \"ambient_dim\" and \"points\"");
    PointConfiguration cfg;
    try {
        cfg.field = Field::parse(j.at("field").get<std::string>());
        cfg.ambient_dim = j.at("ambient_dim").get<int>();
        for (const auto& row : j.at("points")) {
            std::vector<Scalar> pt;
            for (const auto& s : row) {
                if (s.is_number_integer())
                    pt.push_back(Scalar(cfg.field, s.get<long>()));
                else
                    pt.push_back(Scalar::parse(cfg.field, s.get<std::string>()));
            }
            cfg.points.push_back(std::move(pt));
        }
    } catch (const json::exception& ex) {
        throw input_error(std::string("malformed configuration JSON: ") + ex.what());
    }
    cfg.validate();
    return cfg;
}

json polynomial_to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(c.get_str());
    return json{{"variable", "t"}, {"coeffs", coeffs}};
}

json poset_to_json(const ArrangementPoset& p) {
    json elems = json::array();
    for (const auto& e : p.elems) {
        json atoms = json::array();
        for (size_t i = 0; i < p.config.points.size(); ++i)
            if (e.atoms & (1ull << i)) atoms.push_back(i);
        const char* kind = e.kind == ElemKind::Bottom  ? "bottom"
                           : e.kind == ElemKind::Flat ? "L"
                                                      : "M";
        elems.push_back({{"id", e.id}, {"kind", kind}, {"rank", e.rank}, {"atoms", atoms}});
    }
    json order = json::array();
    for (size_t a = 0; a < p.elems.size(); ++a)
        for (size_t b = 0; b < p.elems.size(); ++b)
            if (a != b && p.leq(static_cast<int>(a), static_cast<int>(b)))
                order.push_back({a, b});
    return json{{"elements", elems}, {"order", order}, {"top", p.top}};
}

json divisor_to_json(const DivisorClass& d) {
    json coeffs = json::object();
    for (size_t i = 0; i < d.coeff.size(); ++i)
        if (!d.coeff[i].is_zero()) coeffs[std::to_string(i)] = polynomial_to_json(d.coeff[i]);
    return json{{"basis", d.basis == Basis::E ? "E" : "H"}, {"coeffs", coeffs}};
}

json report_to_json(const IdentityReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"identity", f.identity}, {"entry", f.entry}, {"detail", f.detail}});
    return json{{"checks", r.checks},
                {"failures", fails},
                {"notes", r.notes},
                {"ok", r.ok()}};
}

json metadata_json(const ArrangementPoset& p, int n) {
    json meta{{"field", p.config.field.name()},
              {"ambient_dim", p.config.ambient_dim},
              {"rank", p.rank()},
              {"fingerprint", p.fingerprint()}};
    if (n >= 0) meta["n"] = n;
    return meta;
}

}  // namespace matvar
