#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "json.hpp"

#include "devlat/amalgam.hpp"
#include "devlat/deviation.hpp"
#include "devlat/lattice.hpp"
#include "devlat/poset.hpp"
#include "devlat/semilinear.hpp"
#include "devlat/witness.hpp"

namespace devlat {

using Json = nlohmann::ordered_json;

inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

namespace detail {

inline std::string id_of(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw InputError("element ids must be strings or integers, got " + j.dump());
}

inline const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline const Json& array_field(const Json& j, const char* key) {
    const Json& a = field(j, key);
    if (!a.is_array()) throw InputError(std::string("field '") + key + "' must be an array");
    return a;
}

inline ElementSet id_set(const FinitePoset& p, const Json& a) {
    if (!a.is_array()) throw InputError("expected an array of ids, got " + a.dump());
    std::vector<Element> xs;
    for (const Json& x : a) xs.push_back(p.index_of(id_of(x)));
    return make_set(std::move(xs));
}

inline Json id_array(const FinitePoset& p, const ElementSet& s) {
    Json a = Json::array();
    for (Element x : s) a.push_back(p.id(x));
    return a;
}

} // namespace detail

// ---- posets ----------------------------------------------------------------
//   {"elements": [ids], "leq": [[lower, upper], ...]}   (closed on load)

inline FinitePoset poset_from_json(const Json& j) {
    std::vector<std::string> ids;
    for (const Json& x : detail::array_field(j, "elements")) ids.push_back(detail::id_of(x));
    std::unordered_map<std::string, Element> index;
    for (Element i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
    std::vector<std::pair<Element, Element>> pairs;
    if (j.contains("leq")) {
        for (const Json& pr : detail::array_field(j, "leq")) {
            if (!pr.is_array() || pr.size() != 2) throw InputError("leq entries must be pairs, got " + pr.dump());
            auto lookup = [&](const Json& x) {
                auto it = index.find(detail::id_of(x));
                if (it == index.end()) throw InputError("leq mentions unknown element " + x.dump());
                return it->second;
            };
            pairs.emplace_back(lookup(pr[0]), lookup(pr[1]));
        }
    }
    return FinitePoset::from_relation(std::move(ids), pairs);
}

/// Written with the cover relation only.
inline Json poset_to_json(const FinitePoset& p) {
    Json j;
    j["elements"] = p.ids();
    Json leq = Json::array();
    for (auto [x, y] : p.covers()) leq.push_back({p.id(x), p.id(y)});
    j["leq"] = std::move(leq);
    return j;
}

// ---- lattices ----------------------------------------------------------------
//   {"downsets_of": poset}  or  {"elements", "leq", "bottom"?}

inline FiniteDistributiveLattice lattice_from_json(const Json& j, bool require_distributive = true) {
    FiniteDistributiveLattice d;
    if (j.is_object() && j.contains("downsets_of")) {
        d = lattice_from_downsets(poset_from_json(j.at("downsets_of")));
    } else {
        d = FiniteDistributiveLattice::from_order(poset_from_json(j), require_distributive);
    }
    if (j.contains("bottom") && detail::id_of(j.at("bottom")) != d.id(d.bottom())) {
        throw InputError("declared bottom " + j.at("bottom").dump() + " is not the least element");
    }
    return d;
}

inline Json lattice_to_json(const FiniteDistributiveLattice& d) {
    Json j = poset_to_json(d.carrier());
    j["bottom"] = d.id(d.bottom());
    j["top"] = d.id(d.top());
    return j;
}

// ---- binary maps -------------------------------------------------------------
//   {"d": {"x,y": "z", ...}}   total on M × M

namespace detail {

// Splits "x,y" at a comma where both sides are known ids.
inline std::pair<Element, Element> split_pair_key(const FinitePoset& m, const std::string& key) {
    std::optional<std::pair<Element, Element>> found;
    for (std::size_t at = key.find(','); at != std::string::npos; at = key.find(',', at + 1)) {
        const std::string a = key.substr(0, at), b = key.substr(at + 1);
        if (m.has_id(a) && m.has_id(b)) {
            if (found) throw InputError("ambiguous pair key '" + key + "'");
            found.emplace(m.index_of(a), m.index_of(b));
        }
    }
    if (!found) throw InputError("pair key '" + key + "' does not name two elements");
    return *found;
}

} // namespace detail

inline BinaryMap map_from_json(const FinitePoset& m, const FiniteDistributiveLattice& d, const Json& j) {
    const Json& table = detail::field(j, "d");
    if (!table.is_object()) throw InputError("field 'd' must be an object");
    const std::size_t n = m.size();
    BinaryMap out(n, 0);
    std::vector<bool> seen(n * n, false);
    for (auto it = table.begin(); it != table.end(); ++it) {
        auto [x, y] = detail::split_pair_key(m, it.key());
        if (seen[x * n + y]) throw InputError("pair '" + it.key() + "' listed twice");
        seen[x * n + y] = true;
        out.at(x, y) = d.index_of(detail::id_of(it.value()));
    }
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (!seen[x * n + y]) throw InputError("map is missing the pair '" + m.id(x) + "," + m.id(y) + "'");
        }
    }
    return out;
}

inline Json map_to_json(const FinitePoset& m, const FiniteDistributiveLattice& d, const BinaryMap& map) {
    Json table = Json::object();
    for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) table[m.id(x) + "," + m.id(y)] = d.id(map.at(x, y));
    }
    return Json{{"d", std::move(table)}};
}

// ---- separability witnesses ----------------------------------------------------
//   {"A": {x: [ids]}, "B": {x: [ids]}}

inline SeparabilityWitness witness_from_json(const FinitePoset& p, const Json& j) {
    SeparabilityWitness w;
    w.upper.assign(p.size(), {});
    w.lower.assign(p.size(), {});
    std::vector<bool> seen_a(p.size(), false), seen_b(p.size(), false);
    for (auto [key, target, seen] : {std::tuple{"A", &w.upper, &seen_a}, std::tuple{"B", &w.lower, &seen_b}}) {
        const Json& m = detail::field(j, key);
        if (!m.is_object()) throw InputError(std::string("field '") + key + "' must be an object");
        for (auto it = m.begin(); it != m.end(); ++it) {
            const Element x = p.index_of(it.key());
            (*target)[x] = detail::id_set(p, it.value());
            (*seen)[x] = true;
        }
        for (Element x = 0; x < p.size(); ++x) {
            if (!(*seen)[x]) throw InputError(std::string(key) + " is missing '" + p.id(x) + "'");
        }
    }
    return w;
}

inline Json witness_to_json(const FinitePoset& p, const SeparabilityWitness& w) {
    Json a = Json::object(), b = Json::object();
    for (Element x = 0; x < p.size(); ++x) {
        a[p.id(x)] = detail::id_array(p, w.upper[x]);
        b[p.id(x)] = detail::id_array(p, w.lower[x]);
    }
    return Json{{"A", std::move(a)}, {"B", std::move(b)}};
}

// ---- strong amalgams -------------------------------------------------------------
//   {"carrier": poset, "index": poset, "family": {p: [ids]}, "nu"?: {x: p}}

struct AmalgamInput {
    StrongAmalgamSpec spec;
    std::optional<std::vector<Element>> nu;
};

inline AmalgamInput amalgam_from_json(const Json& j) {
    AmalgamInput in;
    in.spec.carrier = poset_from_json(detail::field(j, "carrier"));
    in.spec.index = poset_from_json(detail::field(j, "index"));
    const FinitePoset& m = in.spec.carrier;
    const FinitePoset& idx = in.spec.index;
    const Json& fam = detail::field(j, "family");
    if (!fam.is_object()) throw InputError("field 'family' must be an object");
    in.spec.family.assign(idx.size(), {});
    std::vector<bool> seen(idx.size(), false);
    for (auto it = fam.begin(); it != fam.end(); ++it) {
        const Element p = idx.index_of(it.key());
        in.spec.family[p] = detail::id_set(m, it.value());
        seen[p] = true;
    }
    for (Element p = 0; p < idx.size(); ++p) {
        if (!seen[p]) throw InputError("family has no member for index '" + idx.id(p) + "'");
    }
    if (j.contains("nu")) {
        const Json& nu = j.at("nu");
        if (!nu.is_object()) throw InputError("field 'nu' must be an object");
        std::vector<Element> v(m.size(), idx.size());
        for (auto it = nu.begin(); it != nu.end(); ++it) v[m.index_of(it.key())] = idx.index_of(detail::id_of(it.value()));
        for (Element x = 0; x < m.size(); ++x) {
            if (v[x] == idx.size()) throw InputError("nu is missing '" + m.id(x) + "'");
        }
        in.nu = std::move(v);
    }
    return in;
}

// ---- semilinear sets ---------------------------------------------------------------
//   {"dimension": n, "cells": [["x0 > 0", "x1 - x0 >= 0"], ...]}

inline SemilinearSet semilinear_from_json(const Json& j) {
    const Json& dim = detail::field(j, "dimension");
    if (!dim.is_number_unsigned()) throw InputError("dimension must be a non-negative integer");
    const std::size_t n = dim.get<std::size_t>();
    SemilinearSet s = SemilinearSet::empty(n);
    for (const Json& cell : detail::array_field(j, "cells")) {
        if (!cell.is_array()) throw InputError("each cell must be an array of atoms");
        Cell c;
        for (const Json& a : cell) {
            if (!a.is_string()) throw InputError("atoms must be strings, got " + a.dump());
            c.atoms.push_back(parse_atom(a.get<std::string>(), n));
        }
        s.cells.push_back(std::move(c));
    }
    return s;
}

inline Json semilinear_to_json(const SemilinearSet& s) {
    Json cells = Json::array();
    for (const Cell& c : s.cells) {
        Json atoms = Json::array();
        for (const Atom& a : c.atoms) atoms.push_back(format_atom(a));
        cells.push_back(std::move(atoms));
    }
    return Json{{"dimension", s.dimension}, {"cells", std::move(cells)}};
}

inline Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const Rational& q : p) a.push_back(to_string(q));
    return a;
}

// ---- DOT -----------------------------------------------------------------------------

/// Hasse diagram, drawn bottom to top.
inline std::string to_dot(const FinitePoset& p, const std::string& name = "poset") {
    auto quote = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out + "\"";
    };
    std::ostringstream os;
    os << "digraph " << quote(name) << " {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (Element x = 0; x < p.size(); ++x) os << "  " << quote(p.id(x)) << ";\n";
    for (auto [x, y] : p.covers()) os << "  " << quote(p.id(x)) << " -> " << quote(p.id(y)) << " [arrowhead=none];\n";
    os << "}\n";
    return os.str();
}

} // namespace devlat
