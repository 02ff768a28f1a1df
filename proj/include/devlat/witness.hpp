#pragma once

#include <optional>
#include <string>
#include <vector>

#include "devlat/poset.hpp"

namespace devlat {

/// Separability witness (A, B): A(z) is a finite set of upper bounds of z,
/// B(z) a finite set of lower bounds, and x <= y forces A(x) ∩ B(y) ≠ ∅.
/// Both maps are indexed by element.
struct SeparabilityWitness {
    std::vector<ElementSet> upper;  // A
    std::vector<ElementSet> lower;  // B

    friend bool operator==(const SeparabilityWitness&, const SeparabilityWitness&) = default;
};

/// A listing of every element exactly once; the finite stand-in for a
/// well-ordering of the carrier.
using Enumeration = std::vector<Element>;

/// Set-valued map on a poset, indexed by element.
using SetMap = std::vector<ElementSet>;

enum class WitnessViolationKind { not_upper_bound, not_lower_bound, empty_intersection };

struct WitnessViolation {
    WitnessViolationKind kind;
    Element first;   // the element z, or x of the pair x <= y
    Element second;  // the offending member of A(z)/B(z), or y
};

inline const char* to_string(WitnessViolationKind k) {
    switch (k) {
        case WitnessViolationKind::not_upper_bound: return "not_upper_bound";
        case WitnessViolationKind::not_lower_bound: return "not_lower_bound";
        case WitnessViolationKind::empty_intersection: return "empty_intersection";
    }
    return "?";
}

inline void check_witness_shape(const FinitePoset& p, const SeparabilityWitness& w) {
    if (w.upper.size() != p.size() || w.lower.size() != p.size()) {
        throw InputError("witness maps must be total on the poset");
    }
    for (Element z = 0; z < p.size(); ++z) {
        p.check_set(w.upper[z]);
        p.check_set(w.lower[z]);
    }
}

/// Checks the three clauses of a separability witness. Bound clauses are
/// checked element by element first; the separation clause is then checked
/// on strict comparabilities in lexicographic order, then on the diagonal.
inline std::optional<WitnessViolation> check_separability_witness(const FinitePoset& p,
                                                                  const SeparabilityWitness& w) {
    check_witness_shape(p, w);
    for (Element z = 0; z < p.size(); ++z) {
        for (Element a : w.upper[z]) {
            if (!p.leq(z, a)) return WitnessViolation{WitnessViolationKind::not_upper_bound, z, a};
        }
        for (Element b : w.lower[z]) {
            if (!p.leq(b, z)) return WitnessViolation{WitnessViolationKind::not_lower_bound, z, b};
        }
    }
    for (auto [x, y] : p.strict_pairs()) {
        if (set_intersection(w.upper[x], w.lower[y]).empty()) {
            return WitnessViolation{WitnessViolationKind::empty_intersection, x, y};
        }
    }
    for (Element x = 0; x < p.size(); ++x) {
        if (set_intersection(w.upper[x], w.lower[x]).empty()) {
            return WitnessViolation{WitnessViolationKind::empty_intersection, x, x};
        }
    }
    return std::nullopt;
}

inline bool is_separability_witness(const FinitePoset& p, const SeparabilityWitness& w) {
    return !check_separability_witness(p, w).has_value();
}

inline SeparabilityWitness identity_witness(const FinitePoset& p) {
    SeparabilityWitness w;
    for (Element x = 0; x < p.size(); ++x) {
        w.upper.push_back({x});
        w.lower.push_back({x});
    }
    return w;
}

/// Position of each element in the enumeration. Throws if `e` is not a
/// bijection onto the elements of `p`.
inline std::vector<std::size_t> enumeration_positions(const FinitePoset& p, const Enumeration& e) {
    if (e.size() != p.size()) throw InputError("enumeration must list every element exactly once");
    std::vector<std::size_t> pos(p.size(), p.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        p.check_element(e[i]);
        if (pos[e[i]] != p.size()) throw InputError("enumeration lists '" + p.id(e[i]) + "' twice");
        pos[e[i]] = i;
    }
    return pos;
}

inline Enumeration identity_enumeration(const FinitePoset& p) { return p.all(); }

/// Minimal upper and lower shadows of every element on its strict prefix
/// in an enumeration.
struct PrefixShadows {
    std::vector<ElementSet> upper;  // U_c = Min(prefix(c) ∩ ↑c)
    std::vector<ElementSet> lower;  // V_c = Max(prefix(c) ∩ ↓c)
};

inline PrefixShadows prefix_shadows(const FinitePoset& p, const Enumeration& e) {
    enumeration_positions(p, e);
    PrefixShadows s;
    s.upper.resize(p.size());
    s.lower.resize(p.size());
    ElementSet prefix;
    for (Element c : e) {
        s.upper[c] = shadow(p, prefix, c, ShadowSide::upper);
        s.lower[c] = shadow(p, prefix, c, ShadowSide::lower);
        prefix.insert(std::upper_bound(prefix.begin(), prefix.end(), c), c);
    }
    return s;
}

/// Witness induced by an enumeration:
///   A(c) = {c} ∪ ⋃_{u ∈ U_c} A(u),   B(c) = {c} ∪ ⋃_{v ∈ V_c} B(v),
/// with U_c, V_c the minimal shadows of c on its strict prefix.
inline SeparabilityWitness witness_from_order(const FinitePoset& p, const Enumeration& e) {
    const PrefixShadows s = prefix_shadows(p, e);
    SeparabilityWitness w;
    w.upper.resize(p.size());
    w.lower.resize(p.size());
    for (Element c : e) {
        ElementSet a{c};
        for (Element u : s.upper[c]) a = set_union(a, w.upper[u]);
        ElementSet b{c};
        for (Element v : s.lower[c]) b = set_union(b, w.lower[v]);
        w.upper[c] = std::move(a);
        w.lower[c] = std::move(b);
    }
    return w;
}

/// Checks that x ∈ A(y) ∪ B(y) implies x comes no later than y in `e`.
/// Returns the first offending (x, y) otherwise.
inline std::optional<std::pair<Element, Element>> check_order_bound(const FinitePoset& p,
                                                                    const SeparabilityWitness& w,
                                                                    const Enumeration& e) {
    check_witness_shape(p, w);
    const auto pos = enumeration_positions(p, e);
    for (Element y = 0; y < p.size(); ++y) {
        for (const ElementSet* s : {&w.upper[y], &w.lower[y]}) {
            for (Element x : *s) {
                if (pos[x] > pos[y]) return std::make_pair(x, y);
            }
        }
    }
    return std::nullopt;
}

/// Closure ⋃_{x ∈ X} C^ω(x), where C^0(x) = {x} and C^{n+1}(x) = ⋃_{y ∈ C(x)} C^n(y).
inline ElementSet locally_finite_closure(const FinitePoset& p, const SetMap& c, const ElementSet& xs) {
    if (c.size() != p.size()) throw InputError("set map must be total on the poset");
    p.check_set(xs);
    std::vector<bool> seen(p.size(), false);
    std::vector<Element> stack(xs.begin(), xs.end());
    for (Element x : xs) seen[x] = true;
    while (!stack.empty()) {
        Element x = stack.back();
        stack.pop_back();
        p.check_set(c[x]);
        for (Element y : c[x]) {
            if (!seen[y]) {
                seen[y] = true;
                stack.push_back(y);
            }
        }
    }
    ElementSet out;
    for (Element x = 0; x < p.size(); ++x) {
        if (seen[x]) out.push_back(x);
    }
    return out;
}

inline SetMap witness_union_map(const SeparabilityWitness& w) {
    SetMap c(w.upper.size());
    for (std::size_t z = 0; z < c.size(); ++z) c[z] = set_union(w.upper[z], w.lower[z]);
    return c;
}

struct BlockOrder {
    Enumeration order;
    std::vector<ElementSet> blocks;
    PrefixShadows shadows;  // minimal shadows of each element on its strict prefix
};

/// Well-ordering built from a witness: seeds are taken in ascending index
/// order, each block is the closure of its seed under z ↦ A(z) ∪ B(z) minus
/// earlier blocks, and elements inside a block are listed by index.
inline BlockOrder order_from_witness(const FinitePoset& p, const SeparabilityWitness& w) {
    if (auto v = check_separability_witness(p, w)) {
        throw InputError(std::string("invalid separability witness: ") + to_string(v->kind) + " at ('" +
                         p.id(v->first) + "', '" + p.id(v->second) + "')");
    }
    const SetMap step = witness_union_map(w);
    BlockOrder out;
    std::vector<bool> placed(p.size(), false);
    for (Element seed = 0; seed < p.size(); ++seed) {
        if (placed[seed]) continue;
        std::vector<bool> in_block(p.size(), false);
        std::vector<Element> stack{seed};
        in_block[seed] = true;
        while (!stack.empty()) {
            Element z = stack.back();
            stack.pop_back();
            for (Element y : step[z]) {
                if (!placed[y] && !in_block[y]) {
                    in_block[y] = true;
                    stack.push_back(y);
                }
            }
        }
        ElementSet block;
        for (Element x = 0; x < p.size(); ++x) {
            if (in_block[x]) {
                block.push_back(x);
                placed[x] = true;
                out.order.push_back(x);
            }
        }
        out.blocks.push_back(std::move(block));
    }
    out.shadows = prefix_shadows(p, out.order);
    return out;
}

/// A poset together with a witness on it, as produced by the transforms.
struct TransformedWitness {
    FinitePoset poset;
    SeparabilityWitness witness;
};

inline TransformedWitness transform_dual(const FinitePoset& p, const SeparabilityWitness& w) {
    check_witness_shape(p, w);
    return {p.dual(), SeparabilityWitness{w.lower, w.upper}};
}

/// Product poset with coordinatewise order; element (i, j) has index
/// i * |P2| + j and id "(a,b)". A(x1, x2) = A1(x1) × A2(x2), same for B.
inline TransformedWitness transform_product(const FinitePoset& p1, const SeparabilityWitness& w1,
                                            const FinitePoset& p2, const SeparabilityWitness& w2) {
    check_witness_shape(p1, w1);
    check_witness_shape(p2, w2);
    const std::size_t n1 = p1.size();
    const std::size_t n2 = p2.size();
    const std::size_t n = n1 * n2;
    std::vector<std::string> ids;
    ids.reserve(n);
    for (Element i = 0; i < n1; ++i) {
        for (Element j = 0; j < n2; ++j) ids.push_back("(" + p1.id(i) + "," + p2.id(j) + ")");
    }
    std::vector<bool> rel(n * n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            rel[a * n + b] = p1.leq(a / n2, b / n2) && p2.leq(a % n2, b % n2);
        }
    }
    auto cross = [n2](const ElementSet& s1, const ElementSet& s2) {
        ElementSet out;
        for (Element x : s1) {
            for (Element y : s2) out.push_back(x * n2 + y);
        }
        return out;  // already sorted
    };
    SeparabilityWitness w;
    for (Element a = 0; a < n; ++a) {
        w.upper.push_back(cross(w1.upper[a / n2], w2.upper[a % n2]));
        w.lower.push_back(cross(w1.lower[a / n2], w2.lower[a % n2]));
    }
    return {FinitePoset(std::move(ids), std::move(rel)), std::move(w)};
}

/// Adjoins a new top element (index size(), given id); A'(x) = A(x) ∪ {⊤}.
inline TransformedWitness transform_add_top(const FinitePoset& p, const SeparabilityWitness& w,
                                            const std::string& top_id = "top") {
    check_witness_shape(p, w);
    const std::size_t n = p.size() + 1;
    const Element top = p.size();
    std::vector<std::string> ids = p.ids();
    ids.push_back(top_id);
    std::vector<bool> rel(n * n, false);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            rel[x * n + y] = (y == top) || (x != top && p.leq(x, y));
        }
    }
    SeparabilityWitness out = w;
    for (auto& a : out.upper) a.push_back(top);
    out.upper.push_back({top});
    out.lower.push_back({top});
    return {FinitePoset(std::move(ids), std::move(rel)), std::move(out)};
}

/// Adjoins a new bottom element (index size(), given id); B'(x) = B(x) ∪ {⊥}.
inline TransformedWitness transform_add_bottom(const FinitePoset& p, const SeparabilityWitness& w,
                                               const std::string& bottom_id = "bottom") {
    check_witness_shape(p, w);
    const std::size_t n = p.size() + 1;
    const Element bottom = p.size();
    std::vector<std::string> ids = p.ids();
    ids.push_back(bottom_id);
    std::vector<bool> rel(n * n, false);
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            rel[x * n + y] = (x == bottom) || (y != bottom && p.leq(x, y));
        }
    }
    SeparabilityWitness out = w;
    for (auto& b : out.lower) b.push_back(bottom);
    out.upper.push_back({bottom});
    out.lower.push_back({bottom});
    return {FinitePoset(std::move(ids), std::move(rel)), std::move(out)};
}

/// Restriction to an order-convex subset: x ↦ A(x) ∩ S, x ↦ B(x) ∩ S,
/// reindexed onto the induced subposet (element i is subset[i]).
inline TransformedWitness transform_convex_restrict(const FinitePoset& p, const SeparabilityWitness& w,
                                                    const ElementSet& subset) {
    check_witness_shape(p, w);
    p.check_set(subset);
    if (!p.is_convex(subset)) throw InputError("subset is not order-convex");
    std::vector<std::size_t> local(p.size(), p.size());
    for (std::size_t i = 0; i < subset.size(); ++i) local[subset[i]] = i;
    auto restrict = [&](const ElementSet& s) {
        ElementSet out;
        for (Element x : s) {
            if (local[x] != p.size()) out.push_back(local[x]);
        }
        return out;
    };
    SeparabilityWitness out;
    for (Element x : subset) {
        out.upper.push_back(restrict(w.upper[x]));
        out.lower.push_back(restrict(w.lower[x]));
    }
    return {p.induced(subset), std::move(out)};
}

} // namespace devlat
