#include "fjoin/serialize.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fjoin {

Json to_json(Integer value) { return Json(value.to_int64()); }

Json to_json(const GraphInvariants& inv) {
    Json out = Json::object();
    out["n"] = to_json(inv.n);
    out["m"] = to_json(inv.m);
    out["M1"] = to_json(inv.M1);
    out["M2"] = to_json(inv.M2);
    out["F"] = to_json(inv.F);
    out["HM"] = to_json(inv.HM);
    out["ReZM"] = to_json(inv.ReZM);
    out["M4"] = to_json(inv.M4);
    return out;
}

Json to_json(const VerificationReport& report) {
    Json records = Json::array();
    for (const auto& r : report.records) {
        Json rec = Json::object();
        rec["g1"] = r.g1;
        rec["g2"] = r.g2;
        rec["kind"] = std::string(to_string(r.spec.kind));
        rec["mode"] = std::string(to_string(r.spec.mode));
        rec["closed_form"] = to_json(r.closed_form);
        rec["oracle"] = to_json(r.oracle);
        rec["match"] = r.match;
        records.push_back(std::move(rec));
    }
    Json out = Json::object();
    out["records"] = std::move(records);
    out["summary"] = Json{{"total", report.total()}, {"mismatches", report.mismatches()}};
    return out;
}

namespace {

Json point_json(const AuditPoint& p) {
    return Json{{"n", p.n}, {"m", p.m}, {"family_value", to_json(p.family_value)},
                {"oracle_value", to_json(p.oracle_value)}};
}

}  // namespace

Json to_json(const AuditReport& report) {
    Json cases = Json::array();
    for (const AuditCase& c : report.cases) {
        const FamilyExample& ex = *c.example;
        Json item = Json::object();
        item["case"] = ex.id();
        item["group"] = ex.group;
        item["numeral"] = std::string(ex.roman);
        item["kind"] = std::string(to_string(ex.spec.kind));
        item["mode"] = std::string(to_string(ex.spec.mode));
        item["operands"] = std::string(ex.first == ExampleFamily::P ? "P" : "C") +
                           (ex.second == ExampleFamily::P ? "P" : "C");
        item["heading_theorem"] = ex.heading_theorem;
        item["range"] = Json{{"n_min", ex.n_min}, {"m_min", ex.m_min}, {"printed", ex.range_printed}};
        item["grid"] = Json{{"n", {c.n_lo, c.n_hi}}, {"m", {c.m_lo, c.m_hi}}};
        item["points"] = c.points;
        item["verdict"] = c.is_verified() ? "verified" : "mismatch";
        Json bad = Json::array();
        for (const auto& p : c.mismatches) bad.push_back(point_json(p));
        item["mismatches"] = std::move(bad);
        cases.push_back(std::move(item));
    }
    Json out = Json::object();
    out["cases"] = std::move(cases);
    out["summary"] = Json{{"cases", report.cases.size()},
                          {"verified", report.verified_count()},
                          {"mismatched", report.mismatch_count()}};
    return out;
}

Json provenance_json(const ProvenancedGraph& graph) {
    Json tags = Json::array();
    Json origin = Json::array();
    for (std::size_t v = 0; v < graph.tags.size(); ++v) {
        tags.push_back(std::string(to_string(graph.tags[v])));
        if (const auto& e = graph.origin_edge[v]) {
            origin.push_back(Json::array({e->u, e->v}));
        } else {
            origin.push_back(nullptr);
        }
    }
    Json out = Json::object();
    out["tags"] = std::move(tags);
    out["origin"] = std::move(origin);
    return out;
}

CorpusConfig corpus_config_from_json(const Json& json) {
    if (!json.is_object()) throw DomainError("corpus config must be a JSON object");
    CorpusConfig config;
    const auto read = [&](const char* key, std::size_t& field) {
        if (json.contains(key)) field = json.at(key).get<std::size_t>();
    };
    read("path_max", config.path_max);
    read("cycle_max", config.cycle_max);
    read("complete_max", config.complete_max);
    read("star_max", config.star_max);
    read("random_trials", config.random_trials);
    read("random_max_n", config.random_max_n);
    if (json.contains("random_max_m") && !json.at("random_max_m").is_null()) {
        config.random_max_m = json.at("random_max_m").get<std::size_t>();
    }
    if (json.contains("seed")) config.seed = json.at("seed").get<std::uint64_t>();
    for (const auto& [key, _] : json.items()) {
        static constexpr std::string_view known[] = {"path_max",     "cycle_max",    "complete_max",
                                                     "star_max",     "random_trials", "random_max_n",
                                                     "random_max_m", "seed"};
        if (std::find(std::begin(known), std::end(known), key) == std::end(known)) {
            throw DomainError("corpus config: unknown key '" + key + "'");
        }
    }
    config.validate();
    return config;
}

std::string dump_line(const Json& json) { return json.dump() + "\n"; }

std::string to_text(const GraphInvariants& inv) {
    const std::pair<const char*, Integer> rows[] = {{"n", inv.n},   {"m", inv.m},   {"M1", inv.M1},
                                                    {"M2", inv.M2}, {"F", inv.F},   {"HM", inv.HM},
                                                    {"ReZM", inv.ReZM}, {"M4", inv.M4}};
    std::ostringstream out;
    for (const auto& [name, value] : rows) out << std::left << std::setw(6) << name << value.to_string() << '\n';
    return out.str();
}

}  // namespace fjoin
