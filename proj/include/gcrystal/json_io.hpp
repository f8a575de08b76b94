#pragma once

// JSON encodings of the library's public data, used by the CLI and tests.
// All object keys are emitted in a fixed order so identical inputs produce
// byte-identical output.

#include "gcrystal/cartan.hpp"
#include "gcrystal/d43.hpp"
#include "gcrystal/schubert.hpp"
#include "gcrystal/tropical.hpp"
#include "gcrystal/ud.hpp"

#include <json.hpp>

#include <string>

namespace gcrystal {

using Json = nlohmann::ordered_json;

inline Json to_json(const LinForm& f) {
    Json coeffs = Json::object();
    for (const auto& [v, k] : f.coeffs) coeffs[v] = k;
    return Json{{"coeffs", coeffs}, {"const", f.constant}};
}

inline Json to_json(const MaxPlusPoly& p) {
    Json arr = Json::array();
    for (const auto& f : p.forms()) arr.push_back(to_json(f));
    return arr;
}

inline Json to_json(const PLFunction& f) {
    return Json{{"plus", to_json(f.plus)}, {"minus", to_json(f.minus)}};
}

inline Json to_json(const CartanData& c) {
    return Json{{"labels", c.labels},
                {"matrix", c.matrix},
                {"marks", c.marks},
                {"comarks", c.comarks}};
}

inline Json to_json(const ClassicalWeight& w) { return Json(w.k); }

inline Json elem_to_json(const d43::Elem& b, const d43::Ctx& ctx) {
    Json j;
    j["b"] = b;
    if (ctx.limit) j["context"] = "limit";
    else j["context"] = Json{{"level", ctx.level}};
    return j;
}

inline std::string elem_node_id(const d43::Elem& b) {
    std::string s;
    for (size_t i = 0; i < 6; ++i) {
        if (i) s += "_";
        s += std::to_string(b[i]);
    }
    return s;
}

inline std::string graph_to_dot(const d43::Graph& g) {
    std::string out = "digraph crystal {\n";
    for (const auto& n : g.nodes) out += "  \"" + elem_node_id(n) + "\";\n";
    for (const auto& e : g.edges)
        out += "  \"" + elem_node_id(g.nodes[e.from]) + "\" -> \"" + elem_node_id(g.nodes[e.to]) +
               "\" [label=\"" + std::to_string(e.label) + "\"];\n";
    out += "}\n";
    return out;
}

inline Json graph_to_json(const d43::Graph& g, const d43::Ctx& ctx) {
    Json nodes = Json::array();
    for (const auto& n : g.nodes) {
        Json jn = elem_to_json(n, ctx);
        jn["id"] = elem_node_id(n);
        nodes.push_back(jn);
    }
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back(Json{{"from", elem_node_id(g.nodes[e.from])},
                             {"to", elem_node_id(g.nodes[e.to])},
                             {"label", e.label}});
    return Json{{"nodes", nodes}, {"edges", edges}};
}

inline Json to_json(const ud::IsoReport& r) {
    Json j;
    j["status"] = r.verified ? "verified" : "failed";
    j["box"] = r.box;
    j["ops"] = r.ops;
    j["points"] = r.points;
    j["checks"] = r.checks;
    if (r.counterexample) {
        j["counterexample"] = Json{{"x", r.counterexample->x},
                                   {"index", r.counterexample->index},
                                   {"check", r.counterexample->check}};
    }
    return j;
}

inline Json to_json(const VermaReport& r) {
    Json variants = Json::array();
    for (const auto& v : r.variants) {
        Json jv{{"name", v.name}, {"holds", v.holds}};
        if (!v.holds) {
            jv["first_failed_sample"] = v.first_failed_sample;
            jv["counterexample"] = v.counterexample;
        }
        variants.push_back(jv);
    }
    return Json{{"i", r.i},       {"j", r.j},
                {"a_ij", r.aij},  {"a_ji", r.aji},
                {"samples", r.samples}, {"variants", variants},
                {"holds", r.holds},     {"variant_used", r.variant_used}};
}

inline Json to_json(const d43::PerfectReport& r) {
    Json j;
    j["level"] = r.level;
    j["connected"] = r.connected;
    j["tensor_nodes"] = r.tensor_nodes;
    j["weight_condition"] = r.weight_condition;
    j["lambda0"] = to_json(r.lambda0);
    j["minimal_bijections"] = r.minimal_bijections;
    j["pseudo_base"] = r.pseudo_base;
    j["perfect"] = r.ok();
    if (!r.failure.empty()) j["failure"] = r.failure;
    return j;
}

}  // namespace gcrystal
