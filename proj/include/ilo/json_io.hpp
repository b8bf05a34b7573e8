#pragma once

#include <variant>

#include "ilo/brace.hpp"
#include "ilo/enumeration.hpp"
#include "ilo/internal.hpp"
#include "ilo/relations.hpp"

#include <json.hpp>

// JSON formats. All documents are objects with a "kind" discriminator:
//   {"kind":"ilo"|"magma","order":n,"d":[[...]],"unit":u?,"flags":[...]?}
//   {"kind":"group","order":n,"mult":[[...]],"unit":0}
//   {"kind":"alexander","group":{...},"f":[...]}
//   {"kind":"split-epi","total":{...},"base":{...},"f":[...],"s":[...]}
//   {"kind":"relation","base":{...},"pairs":[[x,y],...]}
//   {"kind":"internal","ambient":{...},"op":[[...]]}
//   {"kind":"brace","order":n,"star":[[...]],"circ":[[...]],"unit":0}
// Serialization is canonical: compact, keys sorted, pointed carriers
// normalized to unit 0; parsing then serializing a canonical document is the
// identity byte-for-byte.

namespace ilo {

using json = nlohmann::json;

// ---- low-level helpers -----------------------------------------------------------

inline json table_to_json(const OpTable& t) {
    json rows = json::array();
    for (int a = 0; a < t.order; ++a) {
        json row = json::array();
        for (int b = 0; b < t.order; ++b) row.push_back(t.at(a, b));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline OpTable table_from_json(const json& j, int expected_order = -1) {
    if (!j.is_array() || j.empty()) fail(errc::bad_input, "table must be a non-empty array");
    const int n = static_cast<int>(j.size());
    if (expected_order >= 0 && n != expected_order)
        fail(errc::bad_input, "table order does not match the declared order");
    OpTable t(n, 0);
    for (int a = 0; a < n; ++a) {
        const json& row = j[a];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(errc::bad_input, "table is not square");
        for (int b = 0; b < n; ++b) {
            if (!row[b].is_number_integer()) fail(errc::bad_input, "table entry is not an integer");
            t.at(a, b) = row[b].get<int>();
        }
    }
    validate_table(t);
    return t;
}

inline json map_to_json(const std::vector<int>& v) {
    return json(v);
}

inline std::vector<int> map_from_json(const json& j, const char* what) {
    if (!j.is_array()) fail(errc::bad_input, std::string(what) + " must be an array");
    std::vector<int> v;
    for (const auto& e : j) {
        if (!e.is_number_integer()) fail(errc::bad_input, std::string(what) + " entry not integer");
        v.push_back(e.get<int>());
    }
    return v;
}

inline std::string require_kind(const json& j, const char* expected) {
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        fail(errc::bad_input, "document has no kind");
    std::string k = j.at("kind").get<std::string>();
    if (expected && k != expected)
        fail(errc::bad_input, std::string("expected kind ") + expected + ", got " + k);
    return k;
}

// ---- tables / models ---------------------------------------------------------------

// A parsed "ilo"/"magma" document before model construction.
struct TableDoc {
    std::string kind;  // "ilo" or "magma"
    OpTable d;
    std::optional<int> unit;
    std::optional<std::vector<std::string>> flags;
    std::optional<std::vector<int>> relabeling;  // set when the unit was normalized
};

inline TableDoc parse_table_doc(const json& j) {
    std::string kind = require_kind(j, nullptr);
    if (kind != "ilo" && kind != "magma") fail(errc::bad_input, "expected an ilo or magma document");
    TableDoc doc;
    doc.kind = kind;
    if (!j.contains("order") || !j.at("order").is_number_integer())
        fail(errc::bad_input, "missing order");
    doc.d = table_from_json(j.at("d"), j.at("order").get<int>());
    if (j.contains("unit")) {
        int u = j.at("unit").get<int>();
        if (u < 0 || u >= doc.d.order) fail(errc::bad_input, "unit out of range", u);
        if (u != 0) {
            // normalize the carrier so the unit sits at 0, recording the swap
            std::vector<int> sigma = identity_permutation(doc.d.order);
            std::swap(sigma[0], sigma[u]);
            doc.d = relabel(doc.d, sigma);
            doc.relabeling = sigma;
        }
        doc.unit = 0;
    }
    if (j.contains("flags")) {
        std::vector<std::string> fl;
        for (const auto& e : j.at("flags")) fl.push_back(e.get<std::string>());
        doc.flags = std::move(fl);
    }
    return doc;
}

inline IloModel model_from_json(const json& j) {
    TableDoc doc = parse_table_doc(j);
    if (doc.kind != "ilo") fail(errc::bad_input, "expected kind ilo");
    return make_model(doc.d, doc.unit);
}

inline json model_to_json(const IloModel& m, bool with_flags = false) {
    json j;
    j["kind"] = "ilo";
    j["order"] = m.order();
    j["d"] = table_to_json(m.d);
    if (m.unit) j["unit"] = *m.unit;
    if (with_flags) j["flags"] = m.flags.names();
    return j;
}

// Raw table emission for enumeration streams.
inline json table_doc_to_json(const OpTable& t, std::optional<int> unit, bool ilo_kind) {
    json j;
    j["kind"] = ilo_kind ? "ilo" : "magma";
    j["order"] = t.order;
    j["d"] = table_to_json(t);
    if (unit) j["unit"] = *unit;
    return j;
}

// ---- groups -------------------------------------------------------------------------

struct GroupDoc {
    FiniteGroup group;
    std::optional<std::vector<int>> relabeling;
};

inline GroupDoc parse_group_doc(const json& j) {
    require_kind(j, "group");
    if (!j.contains("order")) fail(errc::bad_input, "missing order");
    OpTable mult = table_from_json(j.at("mult"), j.at("order").get<int>());
    int unit = j.contains("unit") ? j.at("unit").get<int>() : 0;
    GroupDoc doc;
    if (unit != 0) {
        std::vector<int> sigma = identity_permutation(mult.order);
        std::swap(sigma[0], sigma[unit]);
        mult = relabel(mult, sigma);
        doc.relabeling = sigma;
    }
    doc.group = make_group(std::move(mult));
    return doc;
}

inline FiniteGroup group_from_json(const json& j) { return parse_group_doc(j).group; }

inline json group_to_json(const FiniteGroup& g) {
    json j;
    j["kind"] = "group";
    j["order"] = g.order;
    j["mult"] = table_to_json(g.mult);
    j["unit"] = g.unit;
    return j;
}

// ---- alexander ------------------------------------------------------------------------

inline AlexanderDatum alexander_from_json(const json& j) {
    require_kind(j, "alexander");
    AlexanderDatum a;
    a.group = group_from_json(j.at("group"));
    a.f = map_from_json(j.at("f"), "f");
    validate_alexander(a);
    return a;
}

inline json alexander_to_json(const AlexanderDatum& a) {
    json j;
    j["kind"] = "alexander";
    j["group"] = group_to_json(a.group);
    j["f"] = map_to_json(a.f);
    return j;
}

// ---- braces ------------------------------------------------------------------------------

inline SkewBrace brace_from_json(const json& j) {
    require_kind(j, "brace");
    if (!j.contains("order")) fail(errc::bad_input, "missing order");
    int n = j.at("order").get<int>();
    if (j.contains("unit") && j.at("unit").get<int>() != 0)
        fail(errc::bad_input, "brace documents use the normalized unit 0");
    return make_skew_brace(
        make_digroup(table_from_json(j.at("star"), n), table_from_json(j.at("circ"), n)));
}

inline json brace_to_json(const SkewBrace& b) {
    json j;
    j["kind"] = "brace";
    j["order"] = b.order();
    j["star"] = table_to_json(b.dg.star.mult);
    j["circ"] = table_to_json(b.dg.circ.mult);
    j["unit"] = b.dg.unit();
    return j;
}

// ---- split epis ----------------------------------------------------------------------------

// Typed by the shared kind of total and base.
using AnySplitEpi = std::variant<GroupSplitEpi, ModelSplitEpi, BraceSplitEpi>;

inline AnySplitEpi split_epi_from_json(const json& j) {
    require_kind(j, "split-epi");
    const json& total = j.at("total");
    const json& base = j.at("base");
    std::vector<int> f = map_from_json(j.at("f"), "f");
    std::vector<int> s = map_from_json(j.at("s"), "s");
    std::string tk = require_kind(total, nullptr);
    std::string bk = require_kind(base, nullptr);
    if (tk != bk) fail(errc::bad_input, "total and base have different kinds");
    if (tk == "group")
        return make_group_split_epi(group_from_json(total), group_from_json(base), f, s);
    if (tk == "ilo")
        return make_model_split_epi(model_from_json(total), model_from_json(base), f, s);
    if (tk == "brace")
        return make_brace_split_epi(brace_from_json(total), brace_from_json(base), f, s);
    fail(errc::bad_input, "split-epi total must be a group, ilo model, or brace");
}

inline json split_epi_to_json(const GroupSplitEpi& e) {
    json j;
    j["kind"] = "split-epi";
    j["total"] = group_to_json(e.total);
    j["base"] = group_to_json(e.base);
    j["f"] = map_to_json(e.f);
    j["s"] = map_to_json(e.s);
    return j;
}

inline json split_epi_to_json(const ModelSplitEpi& e) {
    json j;
    j["kind"] = "split-epi";
    j["total"] = model_to_json(e.total);
    j["base"] = model_to_json(e.base);
    j["f"] = map_to_json(e.f);
    j["s"] = map_to_json(e.s);
    return j;
}

inline json split_epi_to_json(const BraceSplitEpi& e) {
    json j;
    j["kind"] = "split-epi";
    j["total"] = brace_to_json(e.total);
    j["base"] = brace_to_json(e.base);
    j["f"] = map_to_json(e.f);
    j["s"] = map_to_json(e.s);
    return j;
}

// ---- relations and internal ops ---------------------------------------------------------------

inline ReflexiveRelation relation_from_json(const json& j) {
    require_kind(j, "relation");
    IloModel base = model_from_json(j.at("base"));
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("pairs")) {
        if (!e.is_array() || e.size() != 2) fail(errc::bad_input, "pair must be [x,y]");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return make_relation(std::move(base), std::move(pairs));
}

inline json relation_to_json(const ReflexiveRelation& r) {
    json j;
    j["kind"] = "relation";
    j["base"] = model_to_json(r.base);
    json pairs = json::array();
    for (auto [x, y] : r.pairs) pairs.push_back(json::array({x, y}));
    j["pairs"] = std::move(pairs);
    return j;
}

inline InternalOpDatum internal_from_json(const json& j) {
    require_kind(j, "internal");
    InternalOpDatum d;
    d.ambient = group_from_json(j.at("ambient"));
    d.op = table_from_json(j.at("op"), d.ambient.order);
    return d;
}

inline json internal_to_json(const InternalOpDatum& d) {
    json j;
    j["kind"] = "internal";
    j["ambient"] = group_to_json(d.ambient);
    j["op"] = table_to_json(d.op);
    return j;
}

// ---- reports ------------------------------------------------------------------------------------

inline json witness_to_json(const IndexWitness& w) {
    json j;
    j["gamma"] = map_to_json(w.gamma);
    j["is_index"] = w.is_index;
    j["is_hyperindex"] = w.is_hyperindex;
    return j;
}

inline json relation_report_to_json(const RelationReport& r) {
    json j;
    j["acupuncturing"] = r.acupuncturing;
    j["transitive"] = r.transitive;
    j["equivalence"] = r.equivalence;
    j["classes_latin"] = r.classes_latin;
    return j;
}

inline json pullback_report_to_json(const PullbackOfSplitEpis& p) {
    json j;
    j["size"] = p.model.order();
    j["jointly_strongly_epic"] = jointly_strongly_epic_check(p);
    json trace = json::array();
    for (auto [x, y] : pullback_closure_trace(p)) trace.push_back(json::array({x, y}));
    j["closure"] = std::move(trace);
    return j;
}

}  // namespace ilo
