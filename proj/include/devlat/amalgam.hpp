#pragma once

#include <optional>
#include <string>
#include <vector>

#include "devlat/poset.hpp"
#include "devlat/witness.hpp"

namespace devlat {

/// A carrier M covered by a family (M_p) of subsets indexed by a poset P.
struct StrongAmalgamSpec {
    FinitePoset carrier;
    FinitePoset index;
    std::vector<ElementSet> family;  // family[p] ⊆ carrier
};

enum class AmalgamClause {
    covering,       // M = ⋃ M_p
    shadowing,      // p <= q: M_p ⊆ M_q and every x ∈ M_q has shadows on M_p
    interpolation,  // x ∈ M_p, y ∈ M_q, x <= y: some r <= p, q and z ∈ M_r with x <= z <= y
};

inline const char* to_string(AmalgamClause c) {
    switch (c) {
        case AmalgamClause::covering: return "covering";
        case AmalgamClause::shadowing: return "shadowing";
        case AmalgamClause::interpolation: return "interpolation";
    }
    return "?";
}

struct AmalgamViolation {
    AmalgamClause clause;
    std::optional<Element> p;  // index elements involved
    std::optional<Element> q;
    std::optional<Element> x;  // carrier elements involved
    std::optional<Element> y;
    std::string detail;
};

inline void check_amalgam_shape(const StrongAmalgamSpec& spec) {
    if (spec.family.size() != spec.index.size()) {
        throw InputError("family must have one member per index element");
    }
    for (const auto& m : spec.family) {
        for (Element x : m) {
            if (x >= spec.carrier.size()) throw InputError("family member is not a subset of the carrier");
        }
        if (make_set(m) != m) throw InputError("family members must be sorted and duplicate-free");
    }
}

/// Verifies the three strong-amalgam clauses and reports the first failure.
/// The shadowing clause recomputes the minimal shadows of every x ∈ M_q on
/// M_p and checks the defining equality.
inline std::optional<AmalgamViolation> check_strong_amalgam(const StrongAmalgamSpec& spec) {
    check_amalgam_shape(spec);
    const FinitePoset& m = spec.carrier;
    const FinitePoset& idx = spec.index;

    ElementSet covered;
    for (const auto& mp : spec.family) covered = set_union(covered, mp);
    for (Element x = 0; x < m.size(); ++x) {
        if (!set_contains(covered, x)) {
            return AmalgamViolation{AmalgamClause::covering, {}, {}, x, {}, "element not in any member"};
        }
    }

    for (Element p = 0; p < idx.size(); ++p) {
        for (Element q = 0; q < idx.size(); ++q) {
            if (!idx.leq(p, q)) continue;
            const ElementSet& mp = spec.family[p];
            const ElementSet& mq = spec.family[q];
            for (Element x : mp) {
                if (!set_contains(mq, x)) {
                    return AmalgamViolation{AmalgamClause::shadowing, p, q, x, {}, "M_p is not a subset of M_q"};
                }
            }
            for (Element x : mq) {
                for (ShadowSide side : {ShadowSide::lower, ShadowSide::upper}) {
                    const ElementSet u = shadow(m, mp, x, side);
                    if (!is_shadow(m, mp, u, x, side)) {
                        return AmalgamViolation{AmalgamClause::shadowing, p, q, x, {}, "shadow equality fails"};
                    }
                }
            }
        }
    }

    for (Element p = 0; p < idx.size(); ++p) {
        for (Element q = 0; q < idx.size(); ++q) {
            ElementSet common;  // ⋃ { M_r : r <= p, q }
            for (Element r = 0; r < idx.size(); ++r) {
                if (idx.leq(r, p) && idx.leq(r, q)) common = set_union(common, spec.family[r]);
            }
            for (Element x : spec.family[p]) {
                for (Element y : spec.family[q]) {
                    if (!m.leq(x, y)) continue;
                    bool found = false;
                    for (Element z : common) {
                        if (m.leq(x, z) && m.leq(z, y)) {
                            found = true;
                            break;
                        }
                    }
                    if (!found) {
                        return AmalgamViolation{AmalgamClause::interpolation, p, q, x, y, "no interpolant"};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// Glues witnesses of the members into a witness of the carrier:
///   A(x) = ⋃ { A_p(u) : p <= ν(x), u ∈ U_{x,p} },
///   B(x) = ⋃ { B_p(v) : p <= ν(x), v ∈ V_{x,p} },
/// where U_{x,p}, V_{x,p} are the minimal upper/lower shadows of x on M_p.
///
/// `block_witnesses[p]` is a witness on the induced subposet
/// carrier.induced(family[p]) (local indices); `nu[x]` is an index element
/// whose member contains x.
inline SeparabilityWitness witness_from_amalgam(const StrongAmalgamSpec& spec,
                                                const std::vector<SeparabilityWitness>& block_witnesses,
                                                const std::vector<Element>& nu) {
    check_amalgam_shape(spec);
    const FinitePoset& m = spec.carrier;
    const FinitePoset& idx = spec.index;
    if (nu.size() != m.size()) throw InputError("nu must be total on the carrier");
    for (Element x = 0; x < m.size(); ++x) {
        idx.check_element(nu[x]);
        if (!set_contains(spec.family[nu[x]], x)) {
            throw InputError("nu('" + m.id(x) + "') = '" + idx.id(nu[x]) + "' does not contain it");
        }
    }
    if (block_witnesses.size() != idx.size()) throw InputError("need one block witness per index element");
    for (Element p = 0; p < idx.size(); ++p) {
        const FinitePoset sub = m.induced(spec.family[p]);
        if (auto v = check_separability_witness(sub, block_witnesses[p])) {
            throw InputError("block witness for '" + idx.id(p) + "' is invalid: " + to_string(v->kind));
        }
    }
    if (auto v = check_strong_amalgam(spec)) {
        throw ContractError(std::string("not a strong amalgam: ") + to_string(v->clause) + " clause fails");
    }

    SeparabilityWitness w;
    w.upper.resize(m.size());
    w.lower.resize(m.size());
    for (Element x = 0; x < m.size(); ++x) {
        for (Element p = 0; p < idx.size(); ++p) {
            if (!idx.leq(p, nu[x])) continue;
            const ElementSet& mp = spec.family[p];
            const SeparabilityWitness& wp = block_witnesses[p];
            auto global = [&](const ElementSet& local) {
                ElementSet out;
                for (Element i : local) out.push_back(mp[i]);
                return out;
            };
            auto local_index = [&](Element u) {
                return static_cast<Element>(std::lower_bound(mp.begin(), mp.end(), u) - mp.begin());
            };
            for (Element u : shadow(m, mp, x, ShadowSide::upper)) {
                w.upper[x] = set_union(w.upper[x], global(wp.upper[local_index(u)]));
            }
            for (Element v : shadow(m, mp, x, ShadowSide::lower)) {
                w.lower[x] = set_union(w.lower[x], global(wp.lower[local_index(v)]));
            }
        }
    }
    return w;
}

/// Some valid ν: for each x, the first index (by position) whose member contains x.
inline std::vector<Element> first_member_assignment(const StrongAmalgamSpec& spec) {
    check_amalgam_shape(spec);
    std::vector<Element> nu(spec.carrier.size(), spec.index.size());
    for (Element p = 0; p < spec.index.size(); ++p) {
        for (Element x : spec.family[p]) {
            if (nu[x] == spec.index.size()) nu[x] = p;
        }
    }
    for (Element x = 0; x < nu.size(); ++x) {
        if (nu[x] == spec.index.size()) throw InputError("element '" + spec.carrier.id(x) + "' is not covered");
    }
    return nu;
}

} // namespace devlat
