#pragma once

// JSON encodings of weights, Bott results, expansions and reports.
// Dimensions and multiplicities are decimal strings.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "bbw/bott.hpp"
#include "bbw/grassmann.hpp"
#include "bbw/schur.hpp"
#include "bbw/totalspace.hpp"
#include "bbw/weights.hpp"

namespace bbw {

using json = nlohmann::json;

inline json big_to_json(const BigInt& v) { return v.str(); }
inline BigInt big_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a decimal string");
    return BigInt(j.get<std::string>());
}

inline void to_json(json& j, const Weight& w) { j = w.vec(); }
inline void from_json(const json& j, Weight& w) { w = Weight(j.get<std::vector<Entry>>()); }

inline void to_json(json& j, const Partition& p) { j = p.weight(); }
inline void from_json(const json& j, Partition& p) { p = Partition::from_weight(j.get<Weight>()); }

inline void to_json(json& j, const GrassmannContext& c) { j = json{{"k", c.k()}, {"n", c.n()}}; }
inline GrassmannContext context_from_json(const json& j) {
    return GrassmannContext(j.at("k").get<std::size_t>(), j.at("n").get<std::size_t>());
}

inline void to_json(json& j, const BottResult& r) {
    if (r.is_vanishing()) {
        j = json{{"vanishes", true}};
        return;
    }
    j = json{{"degree", r.degree()}, {"dominant", r.dominant()}, {"dim", big_to_json(r.dimension())}};
}
inline void from_json(const json& j, BottResult& r) {
    if (j.contains("vanishes")) {
        r = BottResult::vanishes();
        return;
    }
    r = BottResult::concentrated(j.at("degree").get<std::size_t>(), j.at("dominant").get<Weight>(),
                                 big_from_json(j.at("dim")));
}

inline void to_json(json& j, const SchurExpansion& e) {
    j = json::array();
    for (const auto& [w, mult] : e) j.push_back(json{{"weight", w}, {"mult", big_to_json(mult)}});
}
inline void from_json(const json& j, SchurExpansion& e) {
    e = SchurExpansion();
    for (const json& term : j) e.add(term.at("weight").get<Weight>(), big_from_json(term.at("mult")));
}

inline json degree_map_to_json(const DegreeMap& h) {
    json out = json::object();
    for (const auto& [i, dim] : h) out[std::to_string(i)] = big_to_json(dim);
    return out;
}
inline DegreeMap degree_map_from_json(const json& j) {
    DegreeMap h;
    for (const auto& [key, value] : j.items()) h[std::stoul(key)] = big_from_json(value);
    return h;
}

/// The hom-grassmann report.
inline json hom_grassmann_to_json(const GrassmannContext& ctx, const Weight& alpha, const Weight& beta,
                                  std::size_t sym_degree, const DegreeMap& h) {
    return json{{"context", ctx}, {"alpha", alpha}, {"beta", beta}, {"sym_degree", sym_degree},
                {"h", degree_map_to_json(h)}};
}

inline void to_json(json& j, const GradedPiece& p) {
    j = json{{"i", p.degree}, {"n", p.sym_degree}, {"lambda", p.lambda}, {"dim", big_to_json(p.dim)}};
}
inline void from_json(const json& j, GradedPiece& p) {
    p = GradedPiece{j.at("i").get<std::size_t>(), j.at("n").get<std::size_t>(), j.at("lambda").get<Partition>(),
                    big_from_json(j.at("dim"))};
}

inline void to_json(json& j, const GradedHomProfile& p) {
    json entries = json::array();
    for (const auto& [key, dim] : p.entries())
        entries.push_back(json{{"i", key.first}, {"n", key.second}, {"dim", big_to_json(dim)}});
    j = json{{"context", p.context()}, {"alpha", p.alpha()}, {"beta", p.beta()}, {"cutoff", p.cutoff()},
             {"entries", std::move(entries)}, {"pieces", p.pieces()}};
}
inline GradedHomProfile profile_from_json(const json& j) {
    GradedHomProfile p(context_from_json(j.at("context")), j.at("alpha").get<Weight>(), j.at("beta").get<Weight>(),
                       j.at("cutoff").get<std::size_t>());
    for (const json& piece : j.at("pieces")) p.add_piece(piece.get<GradedPiece>());
    return p;
}

inline void to_json(json& j, const Verdict& v) {
    const bool zero = v.status == VerdictStatus::certified_zero;
    j = json{{"src", v.source}, {"dst", v.target}, {"i", v.degree}, {"status", zero ? "certified-zero" : "nonzero"},
             {"x0", zero ? "zero" : "exact"}, {"x", zero ? "zero" : "upper-bound"}};
    if (v.witness)
        j["witness"] = json{{"n", v.witness->sym_degree}, {"lambda", v.witness->lambda},
                            {"dim", big_to_json(v.witness->dim)}};
}
inline void from_json(const json& j, Verdict& v) {
    const std::string status = j.at("status").get<std::string>();
    if (status != "certified-zero" && status != "nonzero") throw std::invalid_argument("bad verdict status " + status);
    v.source = j.at("src").get<Weight>();
    v.target = j.at("dst").get<Weight>();
    v.degree = j.at("i").get<std::size_t>();
    v.status = status == "nonzero" ? VerdictStatus::nonzero : VerdictStatus::certified_zero;
    v.witness.reset();
    if (j.contains("witness")) {
        const json& w = j.at("witness");
        v.witness = GradedPiece{v.degree, w.at("n").get<std::size_t>(), w.at("lambda").get<Partition>(),
                                big_from_json(w.at("dim"))};
    }
}

inline void to_json(json& j, const TiltingReport& r) {
    j = json{{"context", r.context}, {"collection", r.collection}, {"cutoff", r.cutoff},
             {"tilting_up_to_cutoff", r.all_vanish()}, {"verdicts", r.verdicts}};
}
inline TiltingReport tilting_report_from_json(const json& j) {
    return TiltingReport{context_from_json(j.at("context")), j.at("collection").get<std::vector<Weight>>(),
                         j.at("cutoff").get<std::size_t>(), j.at("verdicts").get<std::vector<Verdict>>()};
}

inline void to_json(json& j, const VanishingReport& r) {
    json violations = json::array();
    for (const VanishingViolation& v : r.violations) {
        json piece = v.piece;
        piece["j"] = v.twist;
        violations.push_back(std::move(piece));
    }
    j = json{{"context", r.context}, {"jmax", r.j_max}, {"cutoff", r.cutoff}, {"holds", r.holds()},
             {"violations", std::move(violations)}};
}
inline VanishingReport vanishing_report_from_json(const json& j) {
    VanishingReport r{context_from_json(j.at("context")), j.at("jmax").get<Entry>(), j.at("cutoff").get<std::size_t>(),
                      {}};
    for (const json& v : j.at("violations")) r.violations.push_back(VanishingViolation{v.at("j").get<Entry>(), v.get<GradedPiece>()});
    return r;
}

inline void to_json(json& j, const G24CaseTable& t) {
    json cells = json::array();
    for (const G24Cell& c : t.cells)
        cells.push_back(json{{"j", c.j},
                             {"lambda", {c.lambda1, c.lambda2}},
                             {"delta", c.flag_weight},
                             {"case", to_string(c.which)},
                             {"prediction", to_string(c.prediction)},
                             {"bott", c.cohomology},
                             {"consistent", c.consistent},
                             {"agrees", c.agrees}});
    j = json{{"max_size", t.max_size}, {"all_agree", t.all_agree()}, {"cells", std::move(cells)}};
}

inline G24CaseTable g24_table_from_json(const json& j) {
    G24CaseTable t{j.at("max_size").get<std::size_t>(), {}};
    for (const json& c : j.at("cells")) {
        const auto lambda = c.at("lambda").get<std::vector<Entry>>();
        G24Cell cell = classify_g24(c.at("j").get<Entry>(), lambda.at(0), lambda.at(1));
        if (to_string(cell.which) != c.at("case").get<std::string>() ||
            !(cell.cohomology == c.at("bott").get<BottResult>()))
            throw std::invalid_argument("case table cell does not match its recomputation");
        cell.consistent = c.at("consistent").get<bool>();
        cell.agrees = c.at("agrees").get<bool>();
        t.cells.push_back(std::move(cell));
    }
    return t;
}

inline json beilinson_to_json(std::size_t n, const std::vector<BeilinsonEntry>& table) {
    json rows = json::array();
    bool ok = true;
    for (const BeilinsonEntry& e : table) {
        ok = ok && e.ok;
        rows.push_back(json{{"a", e.a}, {"b", e.b}, {"ext", degree_map_to_json(e.ext)},
                            {"expected_hom", big_to_json(e.expected_hom)}, {"ok", e.ok}});
    }
    return json{{"n", n}, {"all_ok", ok}, {"entries", std::move(rows)}};
}

}  // namespace bbw
