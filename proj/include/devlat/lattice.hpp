#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "devlat/poset.hpp"

namespace devlat {

/// Outcome of a universally quantified check: `holds`, or the first
/// counterexample tuple in lexicographic order.
template <std::size_t N>
struct Verdict {
    bool holds = true;
    std::array<Element, N> counterexample{};

    explicit operator bool() const { return holds; }

    static Verdict ok() { return {}; }
    static Verdict fail(std::array<Element, N> c) { return {false, c}; }
};

/// Finite lattice with bottom, stored as join/meet tables over a carrier
/// poset. The tables are cross-checked against the order on construction.
/// Distributivity is checked unless explicitly waived (used for negative
/// fixtures such as M3).
class FiniteDistributiveLattice {
public:
    FiniteDistributiveLattice() = default;

    /// Derives join and meet as lub/glb of the carrier order.
    static FiniteDistributiveLattice from_order(FinitePoset carrier, bool require_distributive = true) {
        const std::size_t n = carrier.size();
        if (n == 0) throw InputError("a lattice must have at least one element");
        std::vector<Element> join(n * n), meet(n * n);
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
                ElementSet ub = set_intersection(carrier.up_set(x), carrier.up_set(y));
                ElementSet lb = set_intersection(carrier.down_set(x), carrier.down_set(y));
                ElementSet lub = carrier.minimal(ub);
                ElementSet glb = carrier.maximal(lb);
                if (lub.size() != 1 || glb.size() != 1) {
                    throw InputError("not a lattice: '" + carrier.id(x) + "' and '" + carrier.id(y) +
                                     "' lack a unique join or meet");
                }
                join[x * n + y] = lub.front();
                meet[x * n + y] = glb.front();
            }
        }
        return from_tables(std::move(carrier), std::move(join), std::move(meet), require_distributive);
    }

    /// Accepts explicit tables; they must be the lub/glb of the carrier order.
    static FiniteDistributiveLattice from_tables(FinitePoset carrier, std::vector<Element> join,
                                                 std::vector<Element> meet, bool require_distributive = true) {
        FiniteDistributiveLattice d;
        const std::size_t n = carrier.size();
        if (n == 0) throw InputError("a lattice must have at least one element");
        if (join.size() != n * n || meet.size() != n * n) throw InputError("operation table has wrong size");
        d.carrier_ = std::move(carrier);
        d.join_ = std::move(join);
        d.meet_ = std::move(meet);
        const FinitePoset& p = d.carrier_;
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) {
                const Element j = d.join(x, y);
                const Element m = d.meet(x, y);
                p.check_element(j);
                p.check_element(m);
                if (!p.leq(x, j) || !p.leq(y, j) || !p.leq(m, x) || !p.leq(m, y)) {
                    throw InputError("join/meet table disagrees with the order at ('" + p.id(x) + "', '" +
                                     p.id(y) + "')");
                }
                for (Element z = 0; z < n; ++z) {
                    if ((p.leq(x, z) && p.leq(y, z) && !p.leq(j, z)) ||
                        (p.leq(z, x) && p.leq(z, y) && !p.leq(z, m))) {
                        throw InputError("join/meet table is not lub/glb at ('" + p.id(x) + "', '" + p.id(y) + "')");
                    }
                }
            }
        }
        d.bottom_ = n;
        d.top_ = n;
        for (Element x = 0; x < n; ++x) {
            if (p.down_set(x).size() == 1 && p.up_set(x).size() == n) d.bottom_ = x;
            if (p.up_set(x).size() == 1 && p.down_set(x).size() == n) d.top_ = x;
        }
        if (d.bottom_ == n || d.top_ == n) throw InputError("lattice lacks a bottom or a top");
        d.distributive_ = true;
        for (Element x = 0; x < n && d.distributive_; ++x) {
            for (Element y = 0; y < n && d.distributive_; ++y) {
                for (Element z = 0; z < n; ++z) {
                    if (d.meet(x, d.join(y, z)) != d.join(d.meet(x, y), d.meet(x, z))) {
                        d.distributive_ = false;
                        break;
                    }
                }
            }
        }
        if (require_distributive && !d.distributive_) throw InputError("lattice is not distributive");
        return d;
    }

    const FinitePoset& carrier() const { return carrier_; }
    std::size_t size() const { return carrier_.size(); }
    bool leq(Element x, Element y) const { return carrier_.leq(x, y); }
    Element join(Element x, Element y) const { return join_[x * size() + y]; }
    Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
    Element bottom() const { return bottom_; }
    Element top() const { return top_; }
    bool is_distributive() const { return distributive_; }
    const std::string& id(Element x) const { return carrier_.id(x); }
    Element index_of(std::string_view id) const { return carrier_.index_of(id); }

    template <class Range>
    Element join_all(const Range& xs) const {
        Element acc = bottom_;
        for (Element x : xs) acc = join(acc, x);
        return acc;
    }

    template <class Range>
    Element meet_all(const Range& xs) const {
        Element acc = top_;
        for (Element x : xs) acc = meet(acc, x);
        return acc;
    }

private:
    FinitePoset carrier_;
    std::vector<Element> join_;
    std::vector<Element> meet_;
    Element bottom_ = 0;
    Element top_ = 0;
    bool distributive_ = true;
};

/// All down-sets of `p`, smallest first (ties broken by bitmask).
inline std::vector<ElementSet> downsets(const FinitePoset& p) {
    const std::size_t n = p.size();
    // Enumerate along a linear extension so an element may enter only
    // after everything below it has been decided.
    std::vector<Element> ext = p.all();
    std::stable_sort(ext.begin(), ext.end(),
                     [&](Element a, Element b) { return p.down_set(a).size() < p.down_set(b).size(); });
    std::vector<ElementSet> out;
    std::vector<bool> in(n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            ElementSet s;
            for (Element x = 0; x < n; ++x) {
                if (in[x]) s.push_back(x);
            }
            out.push_back(std::move(s));
            return;
        }
        const Element x = ext[i];
        rec(i + 1);
        bool below_in = true;
        for (Element y = 0; y < n && below_in; ++y) {
            if (p.lt(y, x) && !in[y]) below_in = false;
        }
        if (below_in) {
            in[x] = true;
            rec(i + 1);
            in[x] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

/// Name of a down-set in a Birkhoff lattice: its maximal elements joined
/// with '+', or `empty_name` for the empty set.
inline std::string downset_name(const FinitePoset& j, const ElementSet& s, const std::string& empty_name) {
    if (s.empty()) return empty_name;
    std::string out;
    for (Element x : j.maximal(s)) {
        if (!out.empty()) out += '+';
        out += j.id(x);
    }
    return out;
}

/// Lattice of down-sets of `j` under inclusion (join = ∪, meet = ∩,
/// bottom = ∅). The bottom is named "0" unless `j` already uses that id.
inline FiniteDistributiveLattice lattice_from_downsets(const FinitePoset& j) {
    const std::vector<ElementSet> ds = downsets(j);
    const std::string empty_name = j.has_id("0") ? "{}" : "0";
    const std::size_t n = ds.size();
    std::vector<std::string> ids;
    ids.reserve(n);
    for (const auto& s : ds) ids.push_back(downset_name(j, s, empty_name));
    std::vector<bool> rel(n * n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) rel[a * n + b] = is_subset(ds[a], ds[b]);
    }
    auto find = [&](const ElementSet& s) {
        return static_cast<Element>(std::find(ds.begin(), ds.end(), s) - ds.begin());
    };
    std::vector<Element> join(n * n), meet(n * n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            join[a * n + b] = find(set_union(ds[a], ds[b]));
            meet[a * n + b] = find(set_intersection(ds[a], ds[b]));
        }
    }
    return FiniteDistributiveLattice::from_tables(FinitePoset(std::move(ids), std::move(rel)), std::move(join),
                                                  std::move(meet));
}

/// x ∧ z = y ∧ z = 0 implies (x ∨ y) ∧ z = 0; counterexample (x, y, z).
inline Verdict<3> is_zero_distributive(const FiniteDistributiveLattice& d) {
    const Element zero = d.bottom();
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            for (Element z = 0; z < d.size(); ++z) {
                if (d.meet(x, z) == zero && d.meet(y, z) == zero && d.meet(d.join(x, y), z) != zero) {
                    return Verdict<3>::fail({x, y, z});
                }
            }
        }
    }
    return Verdict<3>::ok();
}

/// For all a, b there are x, y with a ∨ b = a ∨ y = x ∨ b and x ∧ y = 0;
/// counterexample (a, b).
inline Verdict<2> is_completely_normal(const FiniteDistributiveLattice& d) {
    const Element zero = d.bottom();
    for (Element a = 0; a < d.size(); ++a) {
        for (Element b = 0; b < d.size(); ++b) {
            const Element ab = d.join(a, b);
            bool found = false;
            for (Element x = 0; x < d.size() && !found; ++x) {
                if (d.join(x, b) != ab) continue;
                for (Element y = 0; y < d.size(); ++y) {
                    if (d.join(a, y) == ab && d.meet(x, y) == zero) {
                        found = true;
                        break;
                    }
                }
            }
            if (!found) return Verdict<2>::fail({a, b});
        }
    }
    return Verdict<2>::ok();
}

struct PrimeIdealPoset {
    std::vector<ElementSet> ideals;  // subsets of the lattice carrier
    FinitePoset order;               // inclusion; element i is ideals[i]
};

inline bool is_prime_ideal(const FiniteDistributiveLattice& d, const ElementSet& s) {
    const FinitePoset& p = d.carrier();
    if (s.empty() || s.size() == d.size() || !p.is_down_set(s)) return false;
    for (Element x : s) {
        for (Element y : s) {
            if (!set_contains(s, d.join(x, y))) return false;
        }
    }
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            if (set_contains(s, d.meet(x, y)) && !set_contains(s, x) && !set_contains(s, y)) return false;
        }
    }
    return true;
}

/// Prime ideals of `d` ordered by inclusion, found by filtering all
/// down-sets of the carrier. Ids are "{a,b,...}" listings of members.
inline PrimeIdealPoset prime_ideal_poset(const FiniteDistributiveLattice& d) {
    PrimeIdealPoset out;
    for (auto& s : downsets(d.carrier())) {
        if (is_prime_ideal(d, s)) out.ideals.push_back(std::move(s));
    }
    const std::size_t n = out.ideals.size();
    std::vector<std::string> ids;
    for (const auto& s : out.ideals) {
        std::string name = "{";
        for (std::size_t i = 0; i < s.size(); ++i) name += (i ? "," : "") + d.id(s[i]);
        ids.push_back(name + "}");
    }
    std::vector<bool> rel(n * n);
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) rel[a * n + b] = is_subset(out.ideals[a], out.ideals[b]);
    }
    out.order = FinitePoset(std::move(ids), std::move(rel));
    return out;
}

/// Every principal up-set is a chain; counterexample (x, y, z) with y, z
/// incomparable above x.
inline Verdict<3> is_root_system(const FinitePoset& p) {
    for (Element x = 0; x < p.size(); ++x) {
        const ElementSet up = p.up_set(x);
        for (Element y : up) {
            for (Element z : up) {
                if (!p.comparable(y, z)) return Verdict<3>::fail({x, y, z});
            }
        }
    }
    return Verdict<3>::ok();
}

inline Verdict<3> is_root_system(const PrimeIdealPoset& p) { return is_root_system(p.order); }

} // namespace devlat
