#include "schurkit/json_io.hpp"

namespace schurkit {

using nlohmann::json;

json to_json(const SymFunc& f) {
    json terms = json::array();
    for (const auto& [p, c] : f.terms()) {
        json t;
        t["partition"] = p.parts();
        t["coeff"] = rat_to_string(c);
        terms.push_back(std::move(t));
    }
    json out;
    out["basis"] = std::string(1, basis_letter(f.basis()));
    out["terms"] = std::move(terms);
    if (f.cap()) out["cap"] = *f.cap();
    return out;
}

json to_json(const TensorExp& t) {
    json terms = json::array();
    for (const auto& [key, c] : t.terms()) {
        json slots = json::array();
        for (const auto& p : key) slots.push_back(p.parts());
        json term;
        term["slots"] = std::move(slots);
        term["coeff"] = rat_to_string(c);
        terms.push_back(std::move(term));
    }
    json out;
    out["arity"] = t.arity();
    json bases = json::array();
    for (Basis b : t.slot_bases()) bases.push_back(std::string(1, basis_letter(b)));
    out["bases"] = std::move(bases);
    out["terms"] = std::move(terms);
    if (t.cap()) out["cap"] = *t.cap();
    return out;
}

SymFunc symfunc_from_json(const json& j) {
    if (!j.is_object() || !j.contains("basis") || !j.contains("terms"))
        throw domain_error("symmetric function JSON needs basis and terms");
    std::string b = j.at("basis").get<std::string>();
    if (b.size() != 1) throw domain_error("basis must be a single letter");
    std::optional<int> cap;
    if (j.contains("cap")) cap = j.at("cap").get<int>();
    SymFunc out(basis_from_letter(b[0]), cap);
    for (const auto& t : j.at("terms")) {
        std::vector<int> parts = t.at("partition").get<std::vector<int>>();
        Rat c = rat_from_string(t.at("coeff").get<std::string>());
        out.add(Partition(std::move(parts)), c);
    }
    return out;
}

}  // namespace schurkit
