#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "devlat/lattice.hpp"

namespace devlat {

/// Total map M × M → D stored row-major by element index.
struct BinaryMap {
    std::size_t n = 0;
    std::vector<Element> values;

    BinaryMap() = default;
    BinaryMap(std::size_t size, Element fill) : n(size), values(size * size, fill) {}

    Element at(Element x, Element y) const { return values[x * n + y]; }
    Element& at(Element x, Element y) { return values[x * n + y]; }

    friend bool operator==(const BinaryMap&, const BinaryMap&) = default;
};

/// A binary operation on a lattice satisfying x <= y ∨ d(x, y) and
/// d(x, y) ∧ d(y, x) = 0. Only obtainable through check_deviation.
class DeviationTable {
public:
    const BinaryMap& map() const { return map_; }
    Element operator()(Element x, Element y) const { return map_.at(x, y); }
    std::size_t size() const { return map_.n; }

    friend bool operator==(const DeviationTable&, const DeviationTable&) = default;

private:
    explicit DeviationTable(BinaryMap m) : map_(std::move(m)) {}
    friend std::variant<DeviationTable, struct DeviationViolation> check_deviation(const FiniteDistributiveLattice&,
                                                                                   const BinaryMap&);
    BinaryMap map_;
};

struct DeviationViolation {
    int axiom;  // 1: x <= y ∨ d(x,y);  2: d(x,y) ∧ d(y,x) = 0
    Element x;
    Element y;
};

/// Accepts `t` iff both deviation axioms hold; otherwise reports the first
/// failing pair in lexicographic order (axiom 1 checked before axiom 2 at
/// each pair).
inline std::variant<DeviationTable, DeviationViolation> check_deviation(const FiniteDistributiveLattice& d,
                                                                        const BinaryMap& t) {
    if (t.n != d.size() || t.values.size() != d.size() * d.size()) {
        throw InputError("deviation table must be total on the lattice");
    }
    for (Element v : t.values) d.carrier().check_element(v);
    for (Element x = 0; x < d.size(); ++x) {
        for (Element y = 0; y < d.size(); ++y) {
            if (!d.leq(x, d.join(y, t.at(x, y)))) return DeviationViolation{1, x, y};
            if (d.meet(t.at(x, y), t.at(y, x)) != d.bottom()) return DeviationViolation{2, x, y};
        }
    }
    return DeviationTable(t);
}

inline bool is_deviation(const FiniteDistributiveLattice& d, const BinaryMap& t) {
    return std::holds_alternative<DeviationTable>(check_deviation(d, t));
}

struct PropertyReport {
    Verdict<3> left_isotone;    // counterexample (x, x', y): x <= x', d(x,y) ≰ d(x',y)
    Verdict<3> right_antitone;  // counterexample (x, y, y'): y <= y', d(x,y') ≰ d(x,y)
    Verdict<3> cevian;          // counterexample (x, y, z): d(x,z) ≰ d(x,y) ∨ d(y,z)
    bool monotone = true;
};

inline PropertyReport map_properties(const FiniteDistributiveLattice& d, const BinaryMap& t) {
    PropertyReport r;
    const std::size_t n = d.size();
    for (Element x = 0; x < n && r.left_isotone; ++x) {
        for (Element x2 = 0; x2 < n && r.left_isotone; ++x2) {
            if (!d.leq(x, x2)) continue;
            for (Element y = 0; y < n; ++y) {
                if (!d.leq(t.at(x, y), t.at(x2, y))) {
                    r.left_isotone = Verdict<3>::fail({x, x2, y});
                    break;
                }
            }
        }
    }
    for (Element x = 0; x < n && r.right_antitone; ++x) {
        for (Element y = 0; y < n && r.right_antitone; ++y) {
            for (Element y2 = 0; y2 < n; ++y2) {
                if (d.leq(y, y2) && !d.leq(t.at(x, y2), t.at(x, y))) {
                    r.right_antitone = Verdict<3>::fail({x, y, y2});
                    break;
                }
            }
        }
    }
    for (Element x = 0; x < n && r.cevian; ++x) {
        for (Element y = 0; y < n && r.cevian; ++y) {
            for (Element z = 0; z < n; ++z) {
                if (!d.leq(t.at(x, z), d.join(t.at(x, y), t.at(y, z)))) {
                    r.cevian = Verdict<3>::fail({x, y, z});
                    break;
                }
            }
        }
    }
    r.monotone = r.left_isotone.holds && r.right_antitone.holds;
    return r;
}

inline PropertyReport deviation_properties(const FiniteDistributiveLattice& d, const DeviationTable& dev) {
    return map_properties(d, dev.map());
}

struct SearchOptions {
    bool require_monotone = false;
    bool require_cevian = false;
    // When set, candidate values of every pair are tried in a random order
    // drawn from this seed instead of ascending element order.
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

class DynamicBits {
public:
    explicit DynamicBits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    void clear() { std::fill(words_.begin(), words_.end(), 0); }
    void set_below(std::size_t i) {
        for (std::size_t k = 0; k < i; ++k) set(k);
    }
    DynamicBits& operator|=(const DynamicBits& o) {
        for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
        return *this;
    }
    // Highest set bit, or npos.
    std::size_t highest() const {
        for (std::size_t k = words_.size(); k-- > 0;) {
            if (words_[k]) return k * 64 + 63 - static_cast<std::size_t>(std::countl_zero(words_[k]));
        }
        return npos;
    }
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    std::vector<std::uint64_t> words_;
};

// Conflict-directed backjumping over the pairs (x, y) in lexicographic
// order. Backjumping only skips subtrees that contain no solution, so the
// solutions come out in the same order chronological backtracking would
// produce them.
class DeviationSearch {
public:
    DeviationSearch(const FiniteDistributiveLattice& d, const SearchOptions& opt) : d_(d), opt_(opt) {
        n_ = d.size();
        vars_ = n_ * n_;
        domains_.resize(vars_);
        for (Element x = 0; x < n_; ++x) {
            for (Element y = 0; y < n_; ++y) {
                auto& dom = domains_[x * n_ + y];
                for (Element c = 0; c < n_; ++c) {
                    if (!d.leq(x, d.join(y, c))) continue;
                    if (x == y && c != d.bottom()) continue;  // d(x,x) ∧ d(x,x) = 0
                    dom.push_back(c);
                }
            }
        }
        if (opt.shuffle_seed) {
            std::mt19937_64 rng(*opt.shuffle_seed);
            for (auto& dom : domains_) std::shuffle(dom.begin(), dom.end(), rng);
        }
    }

    std::vector<BinaryMap> run(std::size_t limit) {
        std::vector<BinaryMap> found;
        if (limit == 0) return found;
        constexpr Element unassigned = static_cast<Element>(-1);
        val_.assign(vars_, unassigned);
        std::vector<std::size_t> next(vars_, 0);
        std::vector<DynamicBits> conf(vars_, DynamicBits(vars_));
        std::size_t i = 0;
        while (true) {
            if (i == vars_) {
                BinaryMap m(n_, 0);
                m.values = val_;
                found.push_back(std::move(m));
                if (found.size() >= limit || vars_ == 0) return found;
                // Continue chronologically below the solution path.
                for (std::size_t j = 0; j < vars_; ++j) conf[j].set_below(j);
                i = vars_ - 1;
                val_[i] = unassigned;
            }
            bool advanced = false;
            while (next[i] < domains_[i].size()) {
                const Element c = domains_[i][next[i]++];
                if (consistent(i, c, conf[i])) {
                    val_[i] = c;
                    advanced = true;
                    break;
                }
            }
            if (advanced) {
                ++i;
                if (i < vars_) {
                    next[i] = 0;
                    conf[i].clear();
                }
                continue;
            }
            val_[i] = unassigned;
            const std::size_t h = conf[i].highest();
            if (h == DynamicBits::npos) return found;
            DynamicBits carry = conf[i];
            carry.reset(h);
            conf[h] |= carry;
            for (std::size_t j = h; j < i; ++j) val_[j] = unassigned;
            i = h;
        }
    }

private:
    std::size_t var(Element x, Element y) const { return x * n_ + y; }

    // Value of pair u, with pair `self` taking the tentative value `c`.
    // Returns false if u is not yet assigned.
    bool lookup(std::size_t u, std::size_t self, Element c, Element& out) const {
        if (u == self) {
            out = c;
            return true;
        }
        if (u > self) return false;
        out = val_[u];
        return true;
    }

    bool consistent(std::size_t v, Element c, DynamicBits& conflicts) const {
        const Element x = v / n_;
        const Element y = v % n_;
        const Element zero = d_.bottom();
        const std::size_t rev = var(y, x);
        if (rev < v && d_.meet(c, val_[rev]) != zero) {
            conflicts.set(rev);
            return false;
        }
        if (opt_.require_monotone) {
            for (Element x2 = 0; x2 < n_; ++x2) {
                const std::size_t u = var(x2, y);
                if (u >= v) continue;
                if ((d_.leq(x2, x) && !d_.leq(val_[u], c)) || (d_.leq(x, x2) && !d_.leq(c, val_[u]))) {
                    conflicts.set(u);
                    return false;
                }
            }
            for (Element y2 = 0; y2 < n_; ++y2) {
                const std::size_t u = var(x, y2);
                if (u >= v) continue;
                if ((d_.leq(y, y2) && !d_.leq(val_[u], c)) || (d_.leq(y2, y) && !d_.leq(c, val_[u]))) {
                    conflicts.set(u);
                    return false;
                }
            }
        }
        if (opt_.require_cevian) {
            // d(a, z) <= d(a, b) ∨ d(b, z) on every triple whose three pairs are decided.
            auto check = [&](Element a, Element b, Element z) {
                const std::size_t az = var(a, z), ab = var(a, b), bz = var(b, z);
                Element vaz, vab, vbz;
                if (!lookup(az, v, c, vaz) || !lookup(ab, v, c, vab) || !lookup(bz, v, c, vbz)) return true;
                if (d_.leq(vaz, d_.join(vab, vbz))) return true;
                for (std::size_t u : {az, ab, bz}) {
                    if (u != v) conflicts.set(u);
                }
                return false;
            };
            for (Element t = 0; t < n_; ++t) {
                if (!check(x, t, y) || !check(x, y, t) || !check(t, x, y)) return false;
            }
        }
        return true;
    }

    const FiniteDistributiveLattice& d_;
    SearchOptions opt_;
    std::size_t n_ = 0;
    std::size_t vars_ = 0;
    std::vector<std::vector<Element>> domains_;
    std::vector<Element> val_;
};

inline DeviationTable accept_or_throw(const FiniteDistributiveLattice& d, const BinaryMap& m,
                                      const SearchOptions& opt) {
    auto checked = check_deviation(d, m);
    if (!std::holds_alternative<DeviationTable>(checked)) {
        throw std::logic_error("deviation search produced a table violating the axioms");
    }
    DeviationTable t = std::get<DeviationTable>(std::move(checked));
    const PropertyReport r = deviation_properties(d, t);
    if ((opt.require_monotone && !r.monotone) || (opt.require_cevian && !r.cevian.holds)) {
        throw std::logic_error("deviation search produced a table violating the requested properties");
    }
    return t;
}

} // namespace detail

/// First deviation in search order (pairs lexicographic, candidates by
/// element index unless shuffled), or nullopt if none satisfies the
/// constraints. Results are re-verified in full before being returned.
inline std::optional<DeviationTable> search_deviation(const FiniteDistributiveLattice& d,
                                                      const SearchOptions& opt = {}) {
    detail::DeviationSearch s(d, opt);
    auto found = s.run(1);
    if (found.empty()) return std::nullopt;
    return detail::accept_or_throw(d, found.front(), opt);
}

/// Up to `limit` distinct deviations, in search order.
inline std::vector<DeviationTable> enumerate_deviations(const FiniteDistributiveLattice& d, std::size_t limit,
                                                        const SearchOptions& opt = {}) {
    detail::DeviationSearch s(d, opt);
    std::vector<DeviationTable> out;
    for (const auto& m : s.run(limit)) out.push_back(detail::accept_or_throw(d, m, opt));
    return out;
}

} // namespace devlat
