#include "fqgamma/json_io.hpp"

namespace fqgamma {

json series_json(const LaurentSeries& s) {
    json terms = json::array();
    for (const auto& [e, c] : s.terms()) terms.push_back(json::array({e, s.field()->to_string(c)}));
    json j = json::object();
    j["var"] = var_name(s.var());
    j["q"] = s.field()->q();
    j["terms"] = std::move(terms);
    j["prec"] = s.prec();
    return j;
}

json gamma_json(const GammaValue& g) {
    json j = series_json(g.series);
    j["cutoff"] = g.cutoff;
    j["stabilized_at"] = g.stabilized_at;
    return j;
}

json classification_json(const Classification& c) {
    json classes = json::array();
    for (const auto& cls : c.classes) {
        json row = json::array();
        for (const Poly& rep : cls) row.push_back(rep.to_string());
        classes.push_back(std::move(row));
    }
    json j = json::object();
    j["q"] = c.f.field()->q();
    j["f"] = c.f.to_string();
    j["simple"] = c.simple;
    j["m"] = c.m;
    j["dim_E"] = c.dim_E;
    j["rank_E"] = c.rank_E;
    j["dim_H"] = c.dim_H;
    j["rank_H"] = c.rank_H;
    j["n_quasiperiods"] = c.n_quasiperiods;
    j["classes"] = std::move(classes);
    return j;
}

json bracket_json(const BracketCheck& b) {
    json j = json::object();
    j["is_relation"] = b.is_relation;
    j["sigma_plus"] = b.sigma_plus;
    if (b.witness) j["witness"] = b.witness->to_string();
    return j;
}

json cert_json(const CertReport& r) {
    json j = json::object();
    j["recognized"] = r.recognized;
    j["stable"] = r.stable;
    if (r.candidate) {
        json c = json::object();
        c["num"] = r.candidate->num.to_string();
        c["den"] = r.candidate->den.to_string();
        c["var"] = r.candidate->var == SeriesVar::eta_inv ? "eta" : "theta";
        j["candidate"] = std::move(c);
    } else {
        j["candidate"] = nullptr;
    }
    j["prec_used"] = json::array({r.prec_lo, r.prec_hi});
    return j;
}

json equiv_json(bool equivalent) {
    json j = json::object();
    j["equivalent"] = equivalent;
    return j;
}

json isogeny_json(const IsogenyResult& r) {
    json j = json::object();
    j["isogenous"] = r.isogenous;
    if (r.witness)
        j["witness"] = r.witness->to_string();
    else
        j["witness"] = nullptr;
    return j;
}

json error_json(const std::string& kind, const std::string& message) {
    json inner = json::object();
    inner["kind"] = kind;
    inner["message"] = message;
    json j = json::object();
    j["error"] = std::move(inner);
    return j;
}

}  // namespace fqgamma
