#pragma once

// JSON and DOT renderings of the library's value types.

#include "braid.hpp"
#include "errors.hpp"
#include "inner.hpp"
#include "laurent.hpp"
#include "mfw.hpp"
#include "resolve.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace posbraid {

using ojson = nlohmann::ordered_json;

inline ojson to_json(const Laurent2& p) {
    ojson terms = ojson::array();
    for (const auto& t : p.terms()) terms.push_back(ojson{{"v", t.m.v}, {"z", t.m.z}, {"c", t.c}});
    return ojson{{"terms", terms}};
}

inline Laurent2 laurent_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array()) {
        throw parse_error("polynomial JSON must be an object with a \"terms\" array");
    }
    std::vector<Term> terms;
    for (const auto& t : j["terms"]) {
        if (!t.is_object()) throw parse_error("polynomial term must be an object");
        for (const char* key : {"v", "z", "c"}) {
            if (!t.contains(key) || !t[key].is_number_integer()) {
                throw parse_error(std::string("polynomial term needs integer field \"") + key + "\"");
            }
        }
        terms.push_back(Term{{t["v"].get<int>(), t["z"].get<int>()}, t["c"].get<std::int64_t>()});
    }
    return Laurent2::from_terms(std::move(terms));
}

inline Laurent2 laurent_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error(std::string("malformed JSON: ") + e.what());
    }
    return laurent_from_json(j);
}

inline ojson to_json(const Permutation& a) { return ojson(a.images()); }

inline std::string to_text(const Permutation& a) {
    std::string out = "[";
    for (int k = 1; k <= a.size(); ++k) {
        if (k > 1) out += ',';
        out += std::to_string(a(k));
    }
    return out + "]";
}

// Resolution trees ------------------------------------------------------------

inline ojson to_json(const ResolutionTree& t) {
    if (t.is_leaf()) return ojson{{"word", to_text(t.word())}, {"split", nullptr}};
    const auto& b = t.branch();
    return ojson{{"word", to_text(t.word())},
                 {"i", b.generator},
                 {"left", to_json(b.left)},
                 {"right", to_json(b.right)},
                 {"left_label", "v^2"},
                 {"right_label", "v*z"}};
}

namespace detail {

inline std::string dot_label(const BraidWord& w) { return w.empty() ? "1" : to_text(w); }

inline void write_dot(const ResolutionTree& t, const std::string& path, std::ostream& os) {
    os << "  \"" << path << "\" [label=\"" << dot_label(t.word()) << "\"];\n";
    if (t.is_leaf()) return;
    const auto& b = t.branch();
    os << "  \"" << path << "\" -> \"" << path << "L\" [label=\"v^2\"];\n";
    os << "  \"" << path << "\" -> \"" << path << "R\" [label=\"v z\"];\n";
    write_dot(b.left, path + "L", os);
    write_dot(b.right, path + "R", os);
}

inline void write_outline(const ResolutionTree& t, const std::string& edge, int depth, std::ostream& os) {
    os << std::string(static_cast<std::size_t>(depth) * 2, ' ') << edge << dot_label(t.word());
    os << (t.is_leaf() ? "  [leaf " + to_text(perm_of_word(t.word())) + "]" : "") << '\n';
    if (t.is_leaf()) return;
    write_outline(t.branch().left, "v^2: ", depth + 1, os);
    write_outline(t.branch().right, "v*z: ", depth + 1, os);
}

} // namespace detail

/// Nodes are keyed by their root path (r, rL, rLR, ...); labels are the words.
inline std::string to_dot(const ResolutionTree& t) {
    std::ostringstream os;
    os << "digraph resolution_tree {\n  node [shape=box];\n";
    detail::write_dot(t, "r", os);
    os << "}\n";
    return os.str();
}

inline std::string to_outline(const ResolutionTree& t) {
    std::ostringstream os;
    detail::write_outline(t, "", 0, os);
    return os.str();
}

// Decompositions and reports -----------------------------------------------------

inline ojson to_json(const HeckeDecomposition& d) {
    ojson terms = ojson::array();
    for (const auto& [a, c] : d) {
        terms.push_back(ojson{{"permutation", to_json(a)}, {"word", to_text(reduced_word(a))}, {"coeff", to_json(c)}});
    }
    return ojson{{"n", d.strands()}, {"terms", terms}};
}

inline ojson to_json(const MfwReport& r) {
    return ojson{{"lower", r.lower}, {"upper", r.upper}, {"dv_min", r.dv_min},
                 {"dv_max", r.dv_max}, {"mfw", r.mfw}, {"sharp", r.sharp}};
}

inline std::string to_text(const MfwReport& r) {
    return "lower=" + std::to_string(r.lower) + " upper=" + std::to_string(r.upper) +
           " dv_min=" + std::to_string(r.dv_min) + " dv_max=" + std::to_string(r.dv_max) +
           " mfw=" + std::to_string(r.mfw) + " sharp=" + (r.sharp ? "true" : "false");
}

inline std::string to_string(RelationKind k) { return k == RelationKind::Commute ? "commute" : "braid"; }

inline ojson to_json(const CertificateStep& step) {
    if (const auto* ins = std::get_if<InsertSquare>(&step)) {
        return ojson{{"op", "InsertSquare"}, {"generator", ins->generator}, {"position", ins->position}};
    }
    if (const auto* dbl = std::get_if<DoubleLetter>(&step)) {
        return ojson{{"op", "DoubleLetter"}, {"position", dbl->position}};
    }
    const auto& rel = std::get<BraidRelation>(step);
    return ojson{{"op", "BraidRelation"}, {"position", rel.position}, {"kind", to_string(rel.kind)}};
}

inline std::string to_text(const CertificateStep& step) {
    if (const auto* ins = std::get_if<InsertSquare>(&step)) {
        return "InsertSquare(" + std::to_string(ins->generator) + "," + std::to_string(ins->position) + ")";
    }
    if (const auto* dbl = std::get_if<DoubleLetter>(&step)) return "DoubleLetter(" + std::to_string(dbl->position) + ")";
    const auto& rel = std::get<BraidRelation>(step);
    return "BraidRelation(" + std::to_string(rel.position) + "," + to_string(rel.kind) + ")";
}

inline ojson to_json(const Certificate& c) {
    ojson steps = ojson::array();
    for (const auto& s : c.steps) steps.push_back(to_json(s));
    return ojson{{"strands", c.strands}, {"steps", steps}};
}

inline std::string to_text(const Certificate& c) {
    std::string out;
    for (const auto& s : c.steps) {
        if (!out.empty()) out += ' ';
        out += to_text(s);
    }
    return out;
}

inline ojson to_json(const GramMatrix& g) {
    ojson perms = ojson::array();
    for (const auto& p : g.permutations) perms.push_back(to_json(p));
    ojson entries = ojson::array();
    for (const auto& e : g.entries) entries.push_back(to_string(e));
    return ojson{{"n", g.n}, {"permutations", perms}, {"entries", entries}, {"identity", g.is_identity()}};
}

inline ojson to_json(const Classification3& c) {
    ojson j{{"index", c.index}, {"family", nullptr}, {"normal_form", nullptr}};
    if (c.family) {
        const auto& f = *c.family;
        j["family"] = ojson{{"kind", f.kind == ThreeStrandFamilyKind::Family1 ? "Family1" : "Family2"},
                            {"leading", f.leading},
                            {"p", f.p},
                            {"q", f.q},
                            {"shift", f.shift}};
    }
    if (c.normal_form) j["normal_form"] = ojson{{"p", *c.normal_form}, {"word", normal_form_text(*c.normal_form)}};
    return j;
}

inline std::string to_text(const Classification3& c) {
    return "index=" + std::to_string(c.index) + " family=" + (c.family ? to_string(*c.family) : "none") +
           " normal_form=" + (c.normal_form ? normal_form_text(*c.normal_form) : "none");
}

} // namespace posbraid
