#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "canonical.hpp"
#include "circuit.hpp"
#include "graph.hpp"
#include "minor.hpp"
#include "obstructions.hpp"

namespace f4g {

using Json = nlohmann::json;

// Certificates are JSON documents {question, input_fingerprint, verdict,
// witness}. Chords are always reported as host vertex numbers. A component
// witness names its vertices and the transition at each of them; the
// circuit these transitions trace fixes the diagram the split refers to.

inline Json step_to_json(const MinorStep& s) {
    if (const auto* c = std::get_if<SmoothingChoice>(&s))
        return {{"op", "smooth"}, {"vertex", c->vertex}, {"pairing", to_string(c->pairing)}};
    return {{"op", "delete_component"}, {"index", std::get<DeleteComponent>(s).index}};
}

inline MinorStep step_from_json(const Json& j) {
    const std::string op = j.at("op").get<std::string>();
    if (op == "smooth") {
        const std::string p = j.at("pairing").get<std::string>();
        if (p != "A" && p != "B") throw std::invalid_argument("unknown pairing '" + p + "'");
        return SmoothingChoice{j.at("vertex").get<int>(), p == "A" ? Pairing::A : Pairing::B};
    }
    if (op == "delete_component") return DeleteComponent{j.at("index").get<int>()};
    throw std::invalid_argument("unknown step '" + op + "'");
}

inline Json steps_to_json(const std::vector<MinorStep>& steps) {
    Json out = Json::array();
    for (const auto& s : steps) out.push_back(step_to_json(s));
    return out;
}

inline std::vector<MinorStep> steps_from_json(const Json& j) {
    std::vector<MinorStep> out;
    for (const auto& s : j) out.push_back(step_from_json(s));
    return out;
}

inline std::string transitions_string(const std::vector<Pairing>& t) {
    std::string s;
    for (Pairing p : t) s += to_string(p);
    return s;
}

namespace detail {

inline std::vector<int> to_host(const std::vector<int>& chords, const std::vector<int>& vertices) {
    std::vector<int> out;
    for (int c : chords) out.push_back(vertices.at(c));
    return out;
}

inline Json obstruction_json(const Obstruction& ob, const std::vector<int>& vertices) {
    Json j{{"kind", to_string(ob.kind)}, {"chords", to_host(ob.chords, vertices)}};
    if (ob.minor) j["steps"] = steps_to_json(ob.minor->steps);
    return j;
}

inline Json component_json(const ComponentVerdict& cv, const char* split_key) {
    Json j{{"vertices", cv.vertices}, {"transitions", transitions_string(cv.circuit.transitions)}};
    if (cv.split) {
        const auto first = to_host(cv.split->first, cv.vertices);
        const auto second = to_host(cv.split->second, cv.vertices);
        if (std::string(split_key) == "split")
            j["split"] = {{"d1", first}, {"d2", second}};
        else
            j["bipartition"] = Json::array({first, second});
    }
    return j;
}

// Positive witness: one entry per vertex component, bare when there is one.
inline Json positive_witness(const std::vector<ComponentVerdict>& comps, const char* split_key) {
    if (comps.size() == 1) return component_json(comps.front(), split_key);
    Json list = Json::array();
    for (const auto& cv : comps) list.push_back(component_json(cv, split_key));
    return {{"components", list}};
}

inline Json first_obstruction(const std::vector<ComponentVerdict>& comps) {
    for (const auto& cv : comps)
        if (cv.obstruction) return {{"obstruction", obstruction_json(*cv.obstruction, cv.vertices)}};
    return nullptr;
}

}  // namespace detail

inline Json planarity_certificate(const FramedFourGraph& g, const PlanarityVerdict& v) {
    Json doc{{"question", "planar"}, {"input_fingerprint", fingerprint(g)}, {"verdict", v.planar}};
    doc["witness"] = v.planar ? detail::positive_witness(v.components, "bipartition") : detail::first_obstruction(v.components);
    return doc;
}

// Under the multi-component policy a graph whose components all embed can
// still fail by having two non-planar components; the witness then carries a
// planarity obstruction for each of two such components.
inline Json rp2_certificate(const FramedFourGraph& g, const Rp2Verdict& v) {
    Json doc{{"question", "rp2"},
             {"policy", v.multi_component ? "multi" : "per_component"},
             {"input_fingerprint", fingerprint(g)},
             {"verdict", v.embeddable}};
    if (v.embeddable) {
        doc["witness"] = detail::positive_witness(v.components, "split");
    } else if (!v.multiple_nonplanar || std::any_of(v.components.begin(), v.components.end(), [](const auto& c) { return !c.holds; })) {
        doc["witness"] = detail::first_obstruction(v.components);
    } else {
        Json list = Json::array();
        for (const auto& cv : v.components) {
            if (cv.planar) continue;
            const PlanarityVerdict pv = is_planar(induced(g, cv.vertices));
            const Obstruction& ob = *pv.components.front().obstruction;
            ObstructionConflict conflict{ob.kind, detail::to_host(ob.chords, cv.vertices)};
            const Obstruction host{ob.kind, ob.chords, materialize_obstruction(g, conflict)};
            Json entry = detail::obstruction_json(host, cv.vertices);
            entry["vertices"] = cv.vertices;
            list.push_back(entry);
            if (list.size() == 2) break;
        }
        doc["witness"] = {{"nonplanar_components", list}};
    }
    return doc;
}

inline Json minor_certificate(const FramedFourGraph& g, const FramedFourGraph& pattern, const std::optional<MinorWitness>& w) {
    Json doc{{"question", "minor"}, {"input_fingerprint", fingerprint(g)}, {"pattern_fingerprint", fingerprint(pattern)}, {"verdict", w.has_value()}};
    doc["witness"] = w ? Json{{"steps", steps_to_json(w->steps)}} : Json(nullptr);
    return doc;
}

inline Json s_minor_certificate(const FramedFourGraph& g, const FramedFourGraph& pattern, const std::optional<SMinorWitness>& w) {
    Json doc{{"question", "sminor"}, {"input_fingerprint", fingerprint(g)}, {"pattern_fingerprint", fingerprint(pattern)}, {"verdict", w.has_value()}};
    if (!w) {
        doc["witness"] = nullptr;
        return doc;
    }
    Json smoothings = Json::array();
    for (const auto& c : w->smoothings) smoothings.push_back(step_to_json(c));
    doc["witness"] = {{"smoothings", smoothings},
                      {"kept_edges", w->kept_edges},
                      {"suppressed_vertices", w->suppressed_vertices},
                      {"deleted_components", w->deleted_components}};
    return doc;
}

inline Json circuit_document(const FramedFourGraph& g) {
    Json list = Json::array();
    for (const auto& vs : vertex_components(g)) {
        const RotatingCircuit c = rotating_circuit(induced(g, vs));
        Json passages = Json::array();
        for (const Passage& p : c.passages) passages.push_back({vs[p.vertex], p.entry, p.exit});
        const FramedChordDiagram d = chord_diagram(c);
        list.push_back({{"vertices", vs},
                        {"transitions", transitions_string(c.transitions)},
                        {"passages", passages},
                        {"diagram", {{"word", detail::to_host(d.word(), vs)}, {"framings", d.framings()}}}});
    }
    return {{"question", "circuit"}, {"input_fingerprint", fingerprint(g)}, {"verdict", true}, {"witness", {{"components", list}}}};
}

namespace detail {

struct CertificateCheck {
    const FramedFourGraph& g;

    // Checks a component entry and returns its diagram with chords local.
    std::pair<FramedChordDiagram, std::vector<int>> diagram_of(const Json& entry) const {
        const auto vertices = entry.at("vertices").get<std::vector<int>>();
        const auto tr = entry.at("transitions").get<std::string>();
        if (tr.size() != vertices.size()) throw std::invalid_argument("one transition per vertex required");
        std::vector<Pairing> transitions;
        for (char ch : tr) {
            if (ch != 'A' && ch != 'B') throw std::invalid_argument("bad transition letter");
            transitions.push_back(ch == 'A' ? Pairing::A : Pairing::B);
        }
        const FramedFourGraph part = induced(g, vertices);
        auto c = circuit_from_transitions(part, transitions);
        if (!c) throw std::invalid_argument("transitions do not trace a single circuit");
        return {chord_diagram(*c), vertices};
    }

    static std::vector<int> to_local(const Json& chords, const std::vector<int>& vertices) {
        std::vector<int> out;
        for (int h : chords.get<std::vector<int>>()) {
            auto it = std::find(vertices.begin(), vertices.end(), h);
            if (it == vertices.end()) throw std::invalid_argument("chord outside its component");
            out.push_back(static_cast<int>(it - vertices.begin()));
        }
        return out;
    }

    std::vector<Json> entries(const Json& w) const {
        if (w.contains("components")) return w.at("components").get<std::vector<Json>>();
        return {w};
    }

    bool covers_components(const std::vector<Json>& list) const {
        std::set<std::vector<int>> want, got;
        for (auto vs : vertex_components(g)) {
            std::sort(vs.begin(), vs.end());
            want.insert(vs);
        }
        for (const auto& e : list) {
            auto vs = e.at("vertices").get<std::vector<int>>();
            std::sort(vs.begin(), vs.end());
            if (!got.insert(vs).second) return false;
        }
        return want == got;
    }

    bool obstruction_replays(const Json& ob, std::initializer_list<ObstructionKind> allowed) const {
        const ObstructionKind kind = obstruction_kind_from_string(ob.at("kind").get<std::string>());
        if (std::find(allowed.begin(), allowed.end(), kind) == allowed.end()) return false;
        return is_isomorphic(replay(g, steps_from_json(ob.at("steps"))), obstruction_graph(kind));
    }
};

}  // namespace detail

// Re-checks a certificate against the graph it claims to be about: the
// fingerprint must match, splits must be valid for the diagram of the named
// circuit, obstruction steps must replay to the named obstruction, and
// minor witnesses must replay to the pattern. Returns an empty string on
// success and the reason otherwise.
inline std::string certificate_problem(const FramedFourGraph& g, const Json& doc, const FramedFourGraph* pattern = nullptr) {
    try {
        if (doc.at("input_fingerprint").get<std::string>() != fingerprint(g)) return "fingerprint mismatch";
        const std::string q = doc.at("question").get<std::string>();
        const bool verdict = doc.at("verdict").get<bool>();
        const Json& w = doc.at("witness");
        detail::CertificateCheck check{g};

        if (q == "planar" || q == "rp2") {
            const bool planar = q == "planar";
            if (!verdict) {
                if (w.contains("obstruction")) {
                    if (planar) return check.obstruction_replays(w.at("obstruction"), {ObstructionKind::gamma, ObstructionKind::delta}) ? "" : "obstruction does not replay";
                    return check.obstruction_replays(w.at("obstruction"), {ObstructionKind::delta, ObstructionKind::gamma1}) ? "" : "obstruction does not replay";
                }
                if (planar || doc.value("policy", "") != "multi" || !w.contains("nonplanar_components")) return "missing obstruction";
                const auto list = w.at("nonplanar_components").get<std::vector<Json>>();
                if (list.size() < 2) return "fewer than two non-planar components";
                std::set<int> used;
                for (const auto& e : list) {
                    if (!check.obstruction_replays(e, {ObstructionKind::gamma, ObstructionKind::delta})) return "obstruction does not replay";
                    const auto vs = e.at("vertices").get<std::vector<int>>();
                    if (!is_connected(induced(g, vs)) || vs.empty() || used.contains(vs.front())) return "components not distinct";
                    for (int v : vs) used.insert(v);
                    for (int c : e.at("chords").get<std::vector<int>>())
                        if (std::find(vs.begin(), vs.end(), c) == vs.end()) return "chord outside its component";
                }
                return "";
            }
            const auto list = check.entries(w);
            if (!check.covers_components(list))
                return "witness does not cover the components";
            int nonplanar = 0;
            for (const auto& e : list) {
                const auto [d, vertices] = check.diagram_of(e);
                ChordSplit split;
                if (planar) {
                    const auto& b = e.at("bipartition");
                    if (b.size() != 2) return "bipartition needs two sides";
                    split = {check.to_local(b[0], vertices), check.to_local(b[1], vertices)};
                    if (!is_valid_planar_split(d, split)) return "invalid bipartition";
                } else {
                    split = {check.to_local(e.at("split").at("d1"), vertices), check.to_local(e.at("split").at("d2"), vertices)};
                    if (!is_valid_rp2_split(d, split)) return "invalid split";
                    nonplanar += !decide_planarity(d).holds;
                }
            }
            if (!planar && doc.value("policy", "") == "multi" && nonplanar > 1) return "two non-planar components";
            return "";
        }

        if (q == "minor" || q == "sminor") {
            if (!pattern) return "pattern required";
            if (doc.at("pattern_fingerprint").get<std::string>() != fingerprint(*pattern)) return "pattern fingerprint mismatch";
            if (!verdict) return w.is_null() ? "" : "negative verdict with a witness";
            if (q == "minor") return is_isomorphic(replay(g, steps_from_json(w.at("steps"))), *pattern) ? "" : "steps do not replay to the pattern";
            SMinorWitness sw;
            for (const auto& s : w.at("smoothings")) sw.smoothings.push_back(std::get<SmoothingChoice>(step_from_json(s)));
            sw.kept_edges = w.at("kept_edges").get<std::vector<int>>();
            sw.suppressed_vertices = w.at("suppressed_vertices").get<std::vector<int>>();
            sw.deleted_components = w.at("deleted_components").get<std::vector<int>>();
            return verify_s_minor_witness(g, *pattern, sw) ? "" : "s-minor witness does not reduce to the pattern";
        }

        if (q == "circuit") {
            const auto list = check.entries(w);
            if (!check.covers_components(list)) return "witness does not cover the components";
            for (const auto& e : list) check.diagram_of(e);
            return "";
        }
        return "unknown question '" + q + "'";
    } catch (const std::exception& e) {
        return std::string("malformed certificate: ") + e.what();
    }
}

inline bool validate_certificate(const FramedFourGraph& g, const Json& doc, const FramedFourGraph* pattern = nullptr) {
    return certificate_problem(g, doc, pattern).empty();
}

}  // namespace f4g
