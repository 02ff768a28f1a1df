#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "devlat/errors.hpp"

namespace devlat {

// Elements of a finite poset are dense indices 0..size()-1; the external
// id of each index is kept alongside.
using Element = std::size_t;

// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

inline ElementSet make_set(std::vector<Element> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
}

inline bool set_contains(const ElementSet& s, Element x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

enum class ShadowSide { lower, upper };

/// A finite partially ordered set with opaque string ids.
///
/// The order is stored as a dense relation matrix and is validated on
/// construction (reflexive, antisymmetric, transitive, ids distinct).
/// Instances are immutable after construction.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Validates a full relation matrix given row-major: `leq[x * n + y]`
    /// holds iff x <= y.
    FinitePoset(std::vector<std::string> ids, std::vector<bool> relation)
        : ids_(std::move(ids)), leq_(std::move(relation)) {
        const std::size_t n = ids_.size();
        if (leq_.size() != n * n) {
            throw InputError("relation matrix has wrong size");
        }
        index_ids();
        for (Element x = 0; x < n; ++x) {
            if (!leq(x, x)) {
                throw InputError("order is not reflexive at '" + ids_[x] + "'");
            }
        }
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
                if (x != y && leq(x, y) && leq(y, x)) {
                    throw InputError("order is not antisymmetric on '" + ids_[x] + "', '" + ids_[y] + "'");
                }
                if (!leq(x, y)) continue;
                for (Element z = 0; z < n; ++z) {
                    if (leq(y, z) && !leq(x, z)) {
                        throw InputError("order is not transitive on '" + ids_[x] + "' <= '" + ids_[y] +
                                         "' <= '" + ids_[z] + "'");
                    }
                }
            }
        }
    }

    /// Builds the reflexive-transitive closure of the given pairs
    /// (lower, upper). Fails if the closure is not antisymmetric.
    static FinitePoset from_relation(std::vector<std::string> ids,
                                     std::initializer_list<std::pair<Element, Element>> pairs) {
        return from_relation(std::move(ids), std::span<const std::pair<Element, Element>>(pairs.begin(), pairs.size()));
    }

    static FinitePoset from_relation(std::vector<std::string> ids,
                                     std::span<const std::pair<Element, Element>> pairs) {
        const std::size_t n = ids.size();
        std::vector<bool> rel(n * n, false);
        for (Element x = 0; x < n; ++x) rel[x * n + x] = true;
        for (auto [a, b] : pairs) {
            if (a >= n || b >= n) throw InputError("relation mentions an unknown element");
            rel[a * n + b] = true;
        }
        for (Element k = 0; k < n; ++k) {
            for (Element i = 0; i < n; ++i) {
                if (!rel[i * n + k]) continue;
                for (Element j = 0; j < n; ++j) {
                    if (rel[k * n + j]) rel[i * n + j] = true;
                }
            }
        }
        return FinitePoset(std::move(ids), std::move(rel));
    }

    /// Antichain on the given ids.
    static FinitePoset antichain(std::vector<std::string> ids) {
        return from_relation(std::move(ids), {});
    }

    /// Chain ids[0] < ids[1] < ...
    static FinitePoset chain(std::vector<std::string> ids) {
        std::vector<std::pair<Element, Element>> pairs;
        for (Element i = 0; i + 1 < ids.size(); ++i) pairs.emplace_back(i, i + 1);
        return from_relation(std::move(ids), pairs);
    }

    std::size_t size() const { return ids_.size(); }

    bool leq(Element x, Element y) const { return leq_[x * size() + y]; }
    bool lt(Element x, Element y) const { return x != y && leq(x, y); }
    bool comparable(Element x, Element y) const { return leq(x, y) || leq(y, x); }

    const std::string& id(Element x) const { return ids_.at(x); }
    const std::vector<std::string>& ids() const { return ids_; }

    bool has_id(std::string_view id) const { return by_id_.find(std::string(id)) != by_id_.end(); }

    Element index_of(std::string_view id) const {
        auto it = by_id_.find(std::string(id));
        if (it == by_id_.end()) throw InputError("unknown element id '" + std::string(id) + "'");
        return it->second;
    }

    void check_element(Element x) const {
        if (x >= size()) throw InputError("element index " + std::to_string(x) + " out of range");
    }

    void check_set(const ElementSet& s) const {
        for (Element x : s) check_element(x);
    }

    ElementSet all() const {
        ElementSet out(size());
        for (Element x = 0; x < size(); ++x) out[x] = x;
        return out;
    }

    ElementSet down_set(Element x) const {
        ElementSet out;
        for (Element y = 0; y < size(); ++y) {
            if (leq(y, x)) out.push_back(y);
        }
        return out;
    }

    ElementSet up_set(Element x) const {
        ElementSet out;
        for (Element y = 0; y < size(); ++y) {
            if (leq(x, y)) out.push_back(y);
        }
        return out;
    }

    ElementSet down_closure(const ElementSet& s) const {
        ElementSet out;
        for (Element y = 0; y < size(); ++y) {
            if (std::any_of(s.begin(), s.end(), [&](Element x) { return leq(y, x); })) out.push_back(y);
        }
        return out;
    }

    ElementSet up_closure(const ElementSet& s) const {
        ElementSet out;
        for (Element y = 0; y < size(); ++y) {
            if (std::any_of(s.begin(), s.end(), [&](Element x) { return leq(x, y); })) out.push_back(y);
        }
        return out;
    }

    ElementSet maximal(const ElementSet& s) const {
        ElementSet out;
        for (Element x : s) {
            if (std::none_of(s.begin(), s.end(), [&](Element y) { return lt(x, y); })) out.push_back(x);
        }
        return out;
    }

    ElementSet minimal(const ElementSet& s) const {
        ElementSet out;
        for (Element x : s) {
            if (std::none_of(s.begin(), s.end(), [&](Element y) { return lt(y, x); })) out.push_back(x);
        }
        return out;
    }

    bool is_down_set(const ElementSet& s) const { return down_closure(s) == s; }
    bool is_up_set(const ElementSet& s) const { return up_closure(s) == s; }

    // x <= z <= y with x, y in s forces z in s.
    bool is_convex(const ElementSet& s) const {
        for (Element x : s) {
            for (Element y : s) {
                if (!leq(x, y)) continue;
                for (Element z = 0; z < size(); ++z) {
                    if (leq(x, z) && leq(z, y) && !set_contains(s, z)) return false;
                }
            }
        }
        return true;
    }

    bool is_chain(const ElementSet& s) const {
        for (Element x : s) {
            for (Element y : s) {
                if (!comparable(x, y)) return false;
            }
        }
        return true;
    }

    FinitePoset dual() const {
        const std::size_t n = size();
        std::vector<bool> rel(n * n);
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) rel[x * n + y] = leq(y, x);
        }
        return FinitePoset(ids_, std::move(rel));
    }

    /// Induced subposet on `s`; element i of the result is s[i].
    FinitePoset induced(const ElementSet& s) const {
        check_set(s);
        std::vector<std::string> sub_ids;
        sub_ids.reserve(s.size());
        for (Element x : s) sub_ids.push_back(ids_[x]);
        std::vector<bool> rel(s.size() * s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            for (std::size_t j = 0; j < s.size(); ++j) rel[i * s.size() + j] = leq(s[i], s[j]);
        }
        return FinitePoset(std::move(sub_ids), std::move(rel));
    }

    /// Cover pairs (x, y): x < y with nothing strictly between.
    std::vector<std::pair<Element, Element>> covers() const {
        std::vector<std::pair<Element, Element>> out;
        for (Element x = 0; x < size(); ++x) {
            for (Element y = 0; y < size(); ++y) {
                if (!lt(x, y)) continue;
                bool between = false;
                for (Element z = 0; z < size() && !between; ++z) between = lt(x, z) && lt(z, y);
                if (!between) out.emplace_back(x, y);
            }
        }
        return out;
    }

    /// Strict comparabilities (x, y), x < y, in lexicographic order.
    std::vector<std::pair<Element, Element>> strict_pairs() const {
        std::vector<std::pair<Element, Element>> out;
        for (Element x = 0; x < size(); ++x) {
            for (Element y = 0; y < size(); ++y) {
                if (lt(x, y)) out.emplace_back(x, y);
            }
        }
        return out;
    }

    friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
        return a.ids_ == b.ids_ && a.leq_ == b.leq_;
    }

private:
    void index_ids() {
        by_id_.clear();
        for (Element x = 0; x < ids_.size(); ++x) {
            if (!by_id_.emplace(ids_[x], x).second) {
                throw InputError("duplicate element id '" + ids_[x] + "'");
            }
        }
    }

    std::vector<std::string> ids_;
    std::vector<bool> leq_;
    std::unordered_map<std::string, Element> by_id_;
};

/// Minimal shadow of `x` on `a`: Max(a ∩ ↓x) on the lower side,
/// Min(a ∩ ↑x) on the upper side. Any other shadow contains it.
inline ElementSet shadow(const FinitePoset& p, const ElementSet& a, Element x, ShadowSide side) {
    p.check_set(a);
    p.check_element(x);
    ElementSet cut;
    for (Element y : a) {
        if (side == ShadowSide::lower ? p.leq(y, x) : p.leq(x, y)) cut.push_back(y);
    }
    return side == ShadowSide::lower ? p.maximal(cut) : p.minimal(cut);
}

/// True iff `u` ⊆ `a` and a ∩ ↓x = a ∩ ↓u (lower), dually for upper.
inline bool is_shadow(const FinitePoset& p, const ElementSet& a, const ElementSet& u, Element x,
                      ShadowSide side) {
    if (!is_subset(u, a)) return false;
    if (side == ShadowSide::lower) {
        return set_intersection(a, p.down_set(x)) == set_intersection(a, p.down_closure(u));
    }
    return set_intersection(a, p.up_set(x)) == set_intersection(a, p.up_closure(u));
}

} // namespace devlat
