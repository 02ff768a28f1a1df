#pragma once

// Seeded random instances shared by the unit tests and the acceptance gate.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "devlat/devlat.hpp"

namespace devlat::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline std::vector<std::string> numbered_ids(std::size_t n, const std::string& prefix = "e") {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(prefix + std::to_string(i));
    return ids;
}

/// Random poset on n elements: each pair i < j is related with probability p,
/// then closed transitively.
inline FinitePoset random_poset(Rng& rng, std::size_t n, double p = 0.3) {
    std::vector<std::pair<Element, Element>> pairs;
    for (Element i = 0; i < n; ++i) {
        for (Element j = i + 1; j < n; ++j) {
            if (coin(rng, p)) pairs.emplace_back(i, j);
        }
    }
    return FinitePoset::from_relation(numbered_ids(n), pairs);
}

inline Enumeration random_enumeration(Rng& rng, const FinitePoset& p) {
    Enumeration e = p.all();
    std::shuffle(e.begin(), e.end(), rng);
    return e;
}

/// Every naturally labelled poset on up to max_n elements (each isomorphism
/// type appears at least once), as distinct relations.
inline std::vector<FinitePoset> small_posets(std::size_t max_n) {
    std::vector<FinitePoset> out;
    for (std::size_t n = 0; n <= max_n; ++n) {
        std::vector<std::pair<Element, Element>> slots;
        for (Element i = 0; i < n; ++i) {
            for (Element j = i + 1; j < n; ++j) slots.emplace_back(i, j);
        }
        std::set<std::vector<bool>> seen;
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<std::pair<Element, Element>> pairs;
            for (std::size_t k = 0; k < slots.size(); ++k) {
                if (mask >> k & 1) pairs.push_back(slots[k]);
            }
            FinitePoset p = FinitePoset::from_relation(numbered_ids(n, "j"), pairs);
            std::vector<bool> rel;
            for (Element x = 0; x < n; ++x) {
                for (Element y = 0; y < n; ++y) rel.push_back(p.leq(x, y));
            }
            if (seen.insert(rel).second) out.push_back(std::move(p));
        }
    }
    return out;
}

inline FiniteDistributiveLattice random_lattice(Rng& rng, std::size_t max_join_irreducibles = 4) {
    return lattice_from_downsets(random_poset(rng, uniform(rng, 0, max_join_irreducibles), 0.4));
}

inline Element random_element(Rng& rng, const FinitePoset& p) { return uniform(rng, 0, p.size() - 1); }

/// Isotone f : M -> D, built along a linear extension of M.
inline std::vector<Element> random_isotone(Rng& rng, const FinitePoset& m, const FiniteDistributiveLattice& d) {
    std::vector<Element> order = m.all();
    std::stable_sort(order.begin(), order.end(),
                     [&](Element x, Element y) { return m.down_set(x).size() < m.down_set(y).size(); });
    std::vector<Element> f(m.size(), d.bottom());
    for (Element x : order) {
        Element v = coin(rng) ? d.bottom() : random_element(rng, d.carrier());
        for (Element y : m.down_set(x)) {
            if (y != x) v = d.join(v, f[y]);
        }
        f[x] = v;
    }
    return f;
}

/// Map with f(x) <= f(y) ∨ d(x, y) everywhere: a random value joined with
/// f(x) where needed.
inline BinaryMap random_section_map(Rng& rng, const FinitePoset& m, const FiniteDistributiveLattice& d,
                                    const std::vector<Element>& f) {
    BinaryMap map(m.size(), d.bottom());
    for (Element x = 0; x < m.size(); ++x) {
        for (Element y = 0; y < m.size(); ++y) {
            Element v = coin(rng, 0.3) ? d.bottom() : random_element(rng, d.carrier());
            if (!d.leq(f[x], d.join(f[y], v))) v = d.join(v, f[x]);
            map.at(x, y) = v;
        }
    }
    return map;
}

/// Map with d(x, y) ∧ d(y, x) = 0 everywhere.
inline BinaryMap random_disjoint_map(Rng& rng, const FinitePoset& m, const FiniteDistributiveLattice& d) {
    BinaryMap map(m.size(), d.bottom());
    for (Element x = 0; x < m.size(); ++x) {
        for (Element y = x + 1; y < m.size(); ++y) {
            const Element a = random_element(rng, d.carrier());
            std::vector<Element> options;
            for (Element b = 0; b < d.size(); ++b) {
                if (d.meet(a, b) == d.bottom()) options.push_back(b);
            }
            const bool swap = coin(rng);
            map.at(swap ? y : x, swap ? x : y) = a;
            map.at(swap ? x : y, swap ? y : x) = options[uniform(rng, 0, options.size() - 1)];
        }
    }
    return map;
}

inline BinaryMap random_map(Rng& rng, const FinitePoset& m, const FiniteDistributiveLattice& d) {
    BinaryMap map(m.size(), d.bottom());
    for (Element& v : map.values) v = random_element(rng, d.carrier());
    return map;
}

/// Strong amalgam: random index poset, family closed downward along the
/// index, covering forced on maximal indices. Candidates failing the check
/// are redrawn.
struct AmalgamDraw {
    StrongAmalgamSpec spec;
    std::size_t attempts = 0;
};

inline StrongAmalgamSpec random_amalgam_candidate(Rng& rng, std::size_t max_blocks, std::size_t max_block_size) {
    StrongAmalgamSpec spec;
    const std::size_t blocks = uniform(rng, 1, max_blocks);
    spec.index = random_poset(rng, blocks, 0.4);
    spec.carrier = random_poset(rng, uniform(rng, 1, max_block_size + 2), 0.35);
    const std::size_t n = spec.carrier.size();
    spec.family.assign(blocks, {});
    for (Element p = 0; p < blocks; ++p) {
        std::vector<Element> member;
        for (Element x = 0; x < n; ++x) {
            if (coin(rng, 0.4)) member.push_back(x);
        }
        spec.family[p] = make_set(std::move(member));
    }
    // Members grow along the index order.
    for (Element q = 0; q < blocks; ++q) {
        for (Element p : spec.index.down_set(q)) spec.family[q] = set_union(spec.family[q], spec.family[p]);
    }
    const ElementSet tops = spec.index.maximal(spec.index.all());
    for (Element x = 0; x < n; ++x) {
        bool covered = false;
        for (const auto& mem : spec.family) covered = covered || set_contains(mem, x);
        if (!covered) {
            const Element q = tops[uniform(rng, 0, tops.size() - 1)];
            spec.family[q] = set_union(spec.family[q], {x});
        }
    }
    for (auto& mem : spec.family) {
        if (mem.size() > max_block_size) mem.resize(max_block_size);
    }
    return spec;
}

inline AmalgamDraw random_strong_amalgam(Rng& rng, std::size_t max_blocks = 5, std::size_t max_block_size = 8) {
    AmalgamDraw draw;
    while (true) {
        ++draw.attempts;
        StrongAmalgamSpec spec = random_amalgam_candidate(rng, max_blocks, max_block_size);
        if (!check_strong_amalgam(spec)) {
            draw.spec = std::move(spec);
            return draw;
        }
    }
}

inline std::vector<Element> random_assignment(Rng& rng, const StrongAmalgamSpec& spec) {
    std::vector<Element> nu(spec.carrier.size());
    for (Element x = 0; x < spec.carrier.size(); ++x) {
        std::vector<Element> owners;
        for (Element p = 0; p < spec.index.size(); ++p) {
            if (set_contains(spec.family[p], x)) owners.push_back(p);
        }
        nu[x] = owners[uniform(rng, 0, owners.size() - 1)];
    }
    return nu;
}

// ---- semilinear ----------------------------------------------------------------

inline Rational random_small_rational(Rng& rng, int bound = 4, int max_den = 4) {
    std::uniform_int_distribution<int> den(1, max_den);
    const int q = den(rng);
    std::uniform_int_distribution<int> num(-bound * q, bound * q);
    return ratio(num(rng), q);
}

inline Point random_point(Rng& rng, std::size_t n, int bound = 4, int max_den = 4) {
    Point p(n);
    for (auto& c : p) c = random_small_rational(rng, bound, max_den);
    return p;
}

inline Atom random_atom(Rng& rng, std::size_t n, const IndexSet& vars) {
    std::uniform_int_distribution<int> coef(-3, 3);
    Atom a;
    a.form = LinearForm(n);
    for (std::size_t i : vars) a.form.coeffs[i] = coef(rng);
    a.form.constant = coin(rng, 0.4) ? Rational(coef(rng)) : Rational(0);
    const std::size_t r = uniform(rng, 0, 9);
    a.rel = r < 5 ? Rel::gt : (r < 9 ? Rel::ge : Rel::eq);
    return a;
}

/// Up to 3 cells of up to 3 atoms, coefficients in [-3, 3], atoms over `vars`.
inline SemilinearSet random_set_over(Rng& rng, std::size_t n, const IndexSet& vars) {
    SemilinearSet s = SemilinearSet::empty(n);
    const std::size_t cells = uniform(rng, 1, 3);
    for (std::size_t c = 0; c < cells; ++c) {
        Cell cell;
        const std::size_t atoms = uniform(rng, vars.empty() ? 0 : 1, 3);
        for (std::size_t k = 0; k < atoms; ++k) cell.atoms.push_back(random_atom(rng, n, vars));
        s.cells.push_back(std::move(cell));
    }
    return s;
}

inline SemilinearSet random_set(Rng& rng, std::size_t n) {
    IndexSet all;
    for (std::size_t i = 0; i < n; ++i) all.push_back(i);
    return random_set_over(rng, n, all);
}

inline IndexSet random_index_set(Rng& rng, std::size_t n) {
    IndexSet x;
    for (std::size_t i = 0; i < n; ++i) {
        if (coin(rng)) x.push_back(i);
    }
    return x;
}

// ---- vector-lattice terms -------------------------------------------------------

inline VLTerm random_term(Rng& rng, std::size_t n, unsigned depth) {
    std::uniform_int_distribution<int> coef(-3, 3);
    const std::size_t what = depth == 0 ? (coin(rng, 0.85) ? 0 : 1) : uniform(rng, 0, 7);
    auto sub = [&] { return random_term(rng, n, depth - 1); };
    switch (what) {
        case 0: return VLTerm::gen(uniform(rng, 0, n - 1));
        case 1: return VLTerm::constant(ratio(coef(rng), 2));
        case 2: return sub() + sub();
        case 3: return sub() - sub();
        case 4: return join(sub(), sub());
        case 5: return meet(sub(), sub());
        case 6: return pos(sub());
        default: {
            const int c = coef(rng);
            return Rational(c == 0 ? 2 : c) * sub();
        }
    }
}

} // namespace devlat::testing
