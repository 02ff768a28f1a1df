#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "devlat/deviation.hpp"
#include "devlat/lattice.hpp"
#include "devlat/witness.hpp"

namespace devlat {

// A one- or two-element subset {x, y} of M, given by any of its members.
using PairSet = std::pair<Element, Element>;

/// The total order ⊴ on one- and two-element subsets induced by an
/// enumeration ⊑ of M: compare the ⊑-larger members first, then the
/// ⊑-smaller ones.
class PairOrder {
public:
    PairOrder(const FinitePoset& m, Enumeration e) : m_(&m), e_(std::move(e)) {
        pos_ = enumeration_positions(m, e_);
    }

    const Enumeration& enumeration() const { return e_; }
    std::size_t position(Element x) const { return pos_.at(x); }

    std::pair<std::size_t, std::size_t> key(PairSet s) const {
        m_->check_element(s.first);
        m_->check_element(s.second);
        const std::size_t a = pos_[s.first], b = pos_[s.second];
        return {std::max(a, b), std::min(a, b)};
    }

    bool leq(PairSet s, PairSet t) const { return key(s) <= key(t); }
    bool lt(PairSet s, PairSet t) const { return key(s) < key(t); }

    /// Every set in M_{1,2} once, ⊴-ascending, as (⊑-smaller, ⊑-larger).
    std::vector<PairSet> ascending() const {
        std::vector<PairSet> out;
        for (std::size_t j = 0; j < e_.size(); ++j) {
            for (std::size_t i = 0; i <= j; ++i) out.emplace_back(e_[i], e_[j]);
        }
        return out;
    }

private:
    const FinitePoset* m_;
    Enumeration e_;
    std::vector<std::size_t> pos_;
};

inline bool pair_leq(const PairOrder& ctx, PairSet s, PairSet t) { return ctx.leq(s, t); }

struct AdjustmentStep {
    Element a = 0;
    Element b = 0;
    std::vector<PairSet> meetands;  // ordered pairs (x, y) whose d′ enters the meet
    std::vector<PairSet> joinands;  // ordered pairs (x, y) whose d′ enters the join
    Element meet_part = 0;          // d(a,b) ∧ ⋀ meetands
    Element join_part = 0;          // ⋁ joinands
    Element value = 0;
};

struct AdjustmentResult {
    BinaryMap d_prime;
    std::vector<AdjustmentStep> trace;  // one step per ordered pair, in processing order
};

enum class AdjustStrategy { full_sweep, finitary_bounds };

struct FinitaryBounds {
    std::vector<PairSet> coinitial;  // 𝒜′
    std::vector<PairSet> cofinal;    // 𝒝′
};

/// Small index sets realizing the meet and join at (a, b), built from the
/// minimal shadows of a and b on their strict ⊑-prefixes:
///   𝒜′ = {(x, b) : x ∈ U_a} ∪ {(a, y) : y ∈ V_b},
///   𝒝′ = {(x, b) : x ∈ V_a} ∪ {(a, y) : y ∈ U_b}.
/// Every listed pair must already be decided.
inline FinitaryBounds finitary_bounds(const PairOrder& ctx, const FinitePoset& m, const PrefixShadows& shadows,
                                      const std::vector<bool>& decided, Element a, Element b) {
    m.check_element(a);
    m.check_element(b);
    FinitaryBounds out;
    for (Element x : shadows.upper[a]) out.coinitial.emplace_back(x, b);
    for (Element y : shadows.lower[b]) out.coinitial.emplace_back(a, y);
    for (Element x : shadows.lower[a]) out.cofinal.emplace_back(x, b);
    for (Element y : shadows.upper[b]) out.cofinal.emplace_back(a, y);
    for (const auto* list : {&out.coinitial, &out.cofinal}) {
        for (auto [x, y] : *list) {
            if (!ctx.lt({x, y}, {a, b}) || !decided[x * m.size() + y]) {
                throw ContractError("pair ('" + m.id(x) + "', '" + m.id(y) + "') is not decided before ('" +
                                    m.id(a) + "', '" + m.id(b) + "')");
            }
        }
    }
    return out;
}

/// Monotone adjustment of a total map d : M × M → D along the enumeration e:
///   d′(a,b) = [d(a,b) ∧ ⋀{d′(x,y) : {x,y} ◁ {a,b}, a <= x, y <= b}]
///           ∨ ⋁{d′(x,y) : {x,y} ◁ {a,b}, x <= a, b <= y}.
/// An empty meet leaves d(a,b) unchanged and an empty join is the bottom.
inline AdjustmentResult monotone_adjustment(const FinitePoset& m, const FiniteDistributiveLattice& d,
                                            const BinaryMap& map, const Enumeration& e,
                                            AdjustStrategy strategy = AdjustStrategy::full_sweep) {
    const std::size_t n = m.size();
    if (map.n != n || map.values.size() != n * n) throw InputError("map must be total on M x M");
    for (Element v : map.values) d.carrier().check_element(v);
    const PairOrder ctx(m, e);
    PrefixShadows shadows;
    if (strategy == AdjustStrategy::finitary_bounds) shadows = prefix_shadows(m, e);

    AdjustmentResult r;
    r.d_prime = BinaryMap(n, d.bottom());
    std::vector<bool> decided(n * n, false);

    auto step = [&](Element a, Element b) {
        AdjustmentStep s;
        s.a = a;
        s.b = b;
        if (strategy == AdjustStrategy::full_sweep) {
            for (Element x = 0; x < n; ++x) {
                for (Element y = 0; y < n; ++y) {
                    if (!ctx.lt({x, y}, {a, b})) continue;
                    if (m.leq(a, x) && m.leq(y, b)) s.meetands.emplace_back(x, y);
                    if (m.leq(x, a) && m.leq(b, y)) s.joinands.emplace_back(x, y);
                }
            }
        } else {
            FinitaryBounds fb = finitary_bounds(ctx, m, shadows, decided, a, b);
            s.meetands = std::move(fb.coinitial);
            s.joinands = std::move(fb.cofinal);
        }
        s.meet_part = map.at(a, b);
        for (auto [x, y] : s.meetands) s.meet_part = d.meet(s.meet_part, r.d_prime.at(x, y));
        s.join_part = d.bottom();
        for (auto [x, y] : s.joinands) s.join_part = d.join(s.join_part, r.d_prime.at(x, y));
        s.value = d.join(s.meet_part, s.join_part);
        return s;
    };

    for (auto [a, b] : ctx.ascending()) {
        // Both orientations only read strictly earlier pairs.
        AdjustmentStep forward = step(a, b);
        std::optional<AdjustmentStep> backward;
        if (a != b) backward = step(b, a);
        for (AdjustmentStep* s : {&forward, backward ? &*backward : nullptr}) {
            if (!s) continue;
            r.d_prime.at(s->a, s->b) = s->value;
            decided[s->a * n + s->b] = true;
            r.trace.push_back(std::move(*s));
        }
    }
    return r;
}

/// Monotone in the sense: x <= x' and y' <= y imply d(x,y) <= d(x',y').
/// Returns the first counterexample (x, x', y, y') in lexicographic order.
inline std::optional<std::array<Element, 4>> monotonicity_violation(const FinitePoset& m,
                                                                    const FiniteDistributiveLattice& d,
                                                                    const BinaryMap& map) {
    const std::size_t n = m.size();
    for (Element x = 0; x < n; ++x) {
        for (Element x2 = 0; x2 < n; ++x2) {
            if (!m.leq(x, x2)) continue;
            for (Element y = 0; y < n; ++y) {
                for (Element y2 = 0; y2 < n; ++y2) {
                    if (m.leq(y2, y) && !d.leq(map.at(x, y), map.at(x2, y2))) {
                        return std::array<Element, 4>{x, x2, y, y2};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

/// f(x) <= f(y) ∨ map(x, y) for all x, y; first failing pair otherwise.
inline std::optional<PairSet> section_violation(const FinitePoset& m, const FiniteDistributiveLattice& d,
                                                const std::vector<Element>& f, const BinaryMap& map) {
    for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
            if (!d.leq(f[x], d.join(f[y], map.at(x, y)))) return PairSet{x, y};
        }
    }
    return std::nullopt;
}

/// map(x, y) ∧ map(y, x) = 0 for all x, y; first failing pair otherwise.
inline std::optional<PairSet> disjointness_violation(const FiniteDistributiveLattice& d, const BinaryMap& map) {
    for (Element x = 0; x < map.n; ++x) {
        for (Element y = 0; y < map.n; ++y) {
            if (d.meet(map.at(x, y), map.at(y, x)) != d.bottom()) return PairSet{x, y};
        }
    }
    return std::nullopt;
}

} // namespace devlat
