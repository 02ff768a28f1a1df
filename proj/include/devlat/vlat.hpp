#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "devlat/errors.hpp"
#include "devlat/rational.hpp"
#include "devlat/semilinear.hpp"
#include "devlat/vlterm.hpp"

namespace devlat {

struct Piece {
    Cell cell;
    LinearForm form;
};

/// Cells covering ℚⁿ, each carrying the affine form the term equals there.
/// Neighbouring cells may share boundary points.
struct PiecewiseForm {
    std::size_t dimension = 0;
    std::vector<Piece> pieces;

    // Value through the first piece containing p.
    Rational evaluate(const Point& p) const {
        for (const Piece& pc : pieces) {
            if (pc.cell.contains(p)) return pc.form.evaluate(p);
        }
        throw std::logic_error("piecewise form does not cover " + point_to_string(p));
    }

    SemilinearSet domain() const {
        SemilinearSet s = SemilinearSet::empty(dimension);
        for (const Piece& pc : pieces) s.cells.push_back(pc.cell);
        return s;
    }
};

namespace detail {

inline void check_arity(const VLTerm& t, std::size_t n) {
    if (t.arity() > n) {
        throw InputError("term uses g" + std::to_string(t.arity() - 1) + " but the dimension is " + std::to_string(n));
    }
}

inline std::optional<Cell> conjoin(const Cell& a, const Cell& b, std::size_t n) {
    Cell c = a;
    c.atoms.insert(c.atoms.end(), b.atoms.begin(), b.atoms.end());
    auto s = simplify(std::move(c));
    if (!s || is_empty(*s, n)) return std::nullopt;
    return s;
}

inline std::optional<Cell> conjoin(const Cell& a, Atom atom, std::size_t n) {
    return conjoin(a, Cell{{std::move(atom)}}, n);
}

inline void check_pieces(std::size_t count, const Limits& lim) {
    if (count > lim.max_pieces) {
        throw ResourceError("piece count " + std::to_string(count) + " exceeds the ceiling of " +
                            std::to_string(lim.max_pieces));
    }
}

} // namespace detail

/// Case-splits every join and meet on the sign of the difference of its
/// arguments (>= 0 versus < 0), discarding empty cells.
inline PiecewiseForm linearize(const VLTerm& t, std::size_t n, const Limits& lim = {}) {
    using K = VLTerm::Kind;
    detail::check_arity(t, n);
    PiecewiseForm out{n, {}};
    switch (t.kind()) {
        case K::generator: out.pieces.push_back({Cell{}, LinearForm::variable(n, t.index())}); break;
        case K::constant: out.pieces.push_back({Cell{}, LinearForm::constant_form(n, t.value())}); break;
        case K::scale:
            out = linearize(t.lhs(), n, lim);
            for (Piece& p : out.pieces) p.form *= t.value();
            break;
        default: {
            const PiecewiseForm a = linearize(t.lhs(), n, lim);
            const PiecewiseForm b = linearize(t.rhs(), n, lim);
            for (const Piece& pa : a.pieces) {
                for (const Piece& pb : b.pieces) {
                    auto base = detail::conjoin(pa.cell, pb.cell, n);
                    if (!base) continue;
                    if (t.kind() == K::add) {
                        out.pieces.push_back({*base, pa.form + pb.form});
                    } else {
                        const LinearForm diff = pa.form - pb.form;
                        const bool is_join = t.kind() == K::join;
                        if (auto c = detail::conjoin(*base, Atom{diff, Rel::ge}, n)) {
                            out.pieces.push_back({std::move(*c), is_join ? pa.form : pb.form});
                        }
                        if (auto c = detail::conjoin(*base, Atom{-diff, Rel::gt}, n)) {
                            out.pieces.push_back({std::move(*c), is_join ? pb.form : pa.form});
                        }
                    }
                    detail::check_pieces(out.pieces.size(), lim);
                }
            }
        }
    }
    return out;
}

namespace detail {

// ∪ (cell ∧ rel(form)) over the pieces.
inline SemilinearSet piece_set(const PiecewiseForm& pf, Rel rel, bool negate) {
    SemilinearSet s = SemilinearSet::empty(pf.dimension);
    for (const Piece& p : pf.pieces) {
        if (auto c = conjoin(p.cell, Atom{negate ? -p.form : p.form, rel}, pf.dimension)) s.cells.push_back(*c);
    }
    return s;
}

} // namespace detail

/// {t = 0}. Provably nonnegative joins, meets and sums are handled through
/// the zero sets of their arguments, |x| and x⁺ through x, so the full
/// linearization is only built where no such shortcut applies.
inline SemilinearSet zero_set(const VLTerm& t, std::size_t n, const Limits& lim = {}) {
    using K = VLTerm::Kind;
    detail::check_arity(t, n);
    if (is_abs_pattern(t)) return zero_set(t.lhs(), n, lim);
    if (is_pos_pattern(t)) return detail::piece_set(linearize(t.lhs(), n, lim), Rel::ge, true);
    if (t.kind() == K::scale) {
        if (t.value() == 0) return SemilinearSet::whole(n);
        return zero_set(t.lhs(), n, lim);
    }
    const bool both_nonneg = (t.kind() == K::join || t.kind() == K::meet || t.kind() == K::add) &&
                             provably_nonnegative(t.lhs()) && provably_nonnegative(t.rhs());
    if (both_nonneg) {
        const SemilinearSet a = zero_set(t.lhs(), n, lim);
        const SemilinearSet b = zero_set(t.rhs(), n, lim);
        return t.kind() == K::meet ? unite(a, b, lim) : intersect(a, b, lim);
    }
    return detail::piece_set(linearize(t, n, lim), Rel::eq, false);
}

/// {t ≠ 0} as {t > 0} ∪ {-t > 0} over the linearization.
inline SemilinearSet cozero_set(const VLTerm& t, std::size_t n, const Limits& lim = {}) {
    const PiecewiseForm pf = linearize(t, n, lim);
    SemilinearSet s = detail::piece_set(pf, Rel::gt, false);
    const SemilinearSet neg = detail::piece_set(pf, Rel::gt, true);
    return unite(s, neg, lim);
}

/// Ω_n: 0 <= u_i <= 1 for every i, and u_γ <= 2 u_β whenever 0 < γ < β.
inline SemilinearSet omega_region(std::size_t n) {
    Cell c;
    for (std::size_t i = 0; i < n; ++i) {
        c.atoms.push_back({LinearForm::variable(n, i), Rel::ge});
        c.atoms.push_back({LinearForm::constant_form(n, 1) - LinearForm::variable(n, i), Rel::ge});
    }
    for (std::size_t g = 1; g < n; ++g) {
        for (std::size_t b = g + 1; b < n; ++b) {
            c.atoms.push_back({LinearForm::variable(n, b, 2) - LinearForm::variable(n, g), Rel::ge});
        }
    }
    return {n, {c}};
}

/// The constraints of Ω restricted to the listed coordinates.
inline bool in_omega(const std::vector<std::pair<std::size_t, Rational>>& u) {
    for (const auto& [i, v] : u) {
        if (v < 0 || v > 1) return false;
    }
    for (const auto& [g, vg] : u) {
        for (const auto& [b, vb] : u) {
            if (0 < g && g < b && vg > 2 * vb) return false;
        }
    }
    return true;
}

/// Extends a point of Ω_M (given as coordinate/value pairs) to Ω_n by
/// v_ξ = u_τ with τ the least coordinate of M at or above ξ, and 1 when
/// there is none.
inline Point omega_extend(std::vector<std::pair<std::size_t, Rational>> u, std::size_t n) {
    std::sort(u.begin(), u.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (u[k].first >= n) throw InputError("coordinate " + std::to_string(u[k].first) + " outside dimension");
        if (k && u[k].first == u[k - 1].first) throw InputError("coordinate listed twice");
    }
    if (!in_omega(u)) throw InputError("partial point violates the region constraints");
    Point v(n);
    for (std::size_t xi = 0; xi < n; ++xi) {
        auto it = std::lower_bound(u.begin(), u.end(), xi, [](const auto& a, std::size_t x) { return a.first < x; });
        v[xi] = it == u.end() ? Rational(1) : it->second;
    }
    if (!omega_region(n).contains(v)) throw std::logic_error("extended point left the region");
    return v;
}

struct IdealComparison {
    bool holds = true;
    std::optional<Point> witness;  // h(z) = 0, g(z) ≠ 0 (and z in the region)

    explicit operator bool() const { return holds; }
};

/// ⟨g⟩ <= ⟨h⟩ iff {h = 0} ⊆ {g = 0}, optionally intersected with a region.
inline IdealComparison ideal_leq(const VLTerm& g, const VLTerm& h, std::size_t n,
                                 const std::optional<SemilinearSet>& region = std::nullopt,
                                 const Limits& lim = {}) {
    const SemilinearSet zg = zero_set(g, n, lim);
    SemilinearSet zh = zero_set(h, n, lim);
    if (region) zh = intersect(zh, *region, lim);
    InclusionResult inc = includes(zg, zh, lim);
    if (inc.holds) return {};
    const Point& z = *inc.witness;
    if (evaluate(h, z) != 0 || evaluate(g, z) == 0 || (region && !region->contains(z))) {
        throw std::logic_error("ideal witness " + point_to_string(z) + " does not re-evaluate");
    }
    return {false, inc.witness};
}

inline VLTerm ideal_join(const VLTerm& g, const VLTerm& h) { return join(abs(g), abs(h)); }
inline VLTerm ideal_meet(const VLTerm& g, const VLTerm& h) { return meet(abs(g), abs(h)); }
inline VLTerm cevian_dev(const VLTerm& g, const VLTerm& h) { return pos(g - h); }

/// ⟨g⟩ ∧ ⟨h⟩ = 0, i.e. g or h vanishes at every point (of the region).
inline IdealComparison ideal_meet_is_zero(const VLTerm& g, const VLTerm& h, std::size_t n,
                                          const std::optional<SemilinearSet>& region = std::nullopt,
                                          const Limits& lim = {}) {
    return ideal_leq(ideal_meet(g, h), VLTerm::zero(), n, region, lim);
}

/// ⟨|g| ∖ |k|⟩ <= ⟨|g| ∖ |h|⟩ ∨ ⟨|h| ∖ |k|⟩ with ⟨a⟩ ∖ ⟨b⟩ = ⟨(a - b)⁺⟩.
inline IdealComparison check_cevian_triple(const VLTerm& g, const VLTerm& h, const VLTerm& k, std::size_t n,
                                           const std::optional<SemilinearSet>& region = std::nullopt,
                                           const Limits& lim = {}) {
    const VLTerm a = abs(g), b = abs(h), c = abs(k);
    return ideal_leq(cevian_dev(a, c), ideal_join(cevian_dev(a, b), cevian_dev(b, c)), n, region, lim);
}

struct IdealAxioms {
    IdealComparison first;   // ⟨g⟩ <= ⟨h⟩ ∨ (⟨g⟩ ∖ ⟨h⟩)
    IdealComparison second;  // (⟨g⟩ ∖ ⟨h⟩) ∧ (⟨h⟩ ∖ ⟨g⟩) = 0
};

inline IdealAxioms check_ideal_axioms(const VLTerm& g, const VLTerm& h, std::size_t n,
                                      const std::optional<SemilinearSet>& region = std::nullopt,
                                      const Limits& lim = {}) {
    const VLTerm a = abs(g), b = abs(h);
    return {ideal_leq(a, ideal_join(b, cevian_dev(a, b)), n, region, lim),
            ideal_meet_is_zero(cevian_dev(a, b), cevian_dev(b, a), n, region, lim)};
}

/// Falsification-only check of ⟨g⟩ <= ⟨h⟩ through multipliers: a point
/// where |g| > max_m·|h| rules out |g| <= m|h| for every m up to max_m.
inline std::optional<Point> multiplier_refutation(const VLTerm& g, const VLTerm& h, const std::vector<Point>& samples,
                                                  unsigned max_m = 64) {
    for (const Point& p : samples) {
        if (abs(evaluate(g, p)) > Rational(max_m) * abs(evaluate(h, p))) return p;
    }
    return std::nullopt;
}

// ---- probes --------------------------------------------------------------

struct ImplicationCheck {
    bool binding = false;            // the hypothesis ⟨t⟩ ∧ ⟨P⟩ = 0 holds
    bool holds = true;               // the conclusion, when binding
    std::optional<Point> witness;    // non-binding: meet ≠ 0 here; failing: conclusion fails here
};

struct ProbeOutcome {
    VLTerm probe;
    ImplicationCheck first;   // ⟨t⟩ ∧ ⟨P⟩ = 0  ⇒  ⟨t⟩ <= ⟨Q⟩
    ImplicationCheck second;  // ⟨t⟩ ∧ ⟨Q⟩ = 0  ⇒  ⟨t⟩ <= ⟨P⟩
};

struct PseudocomplementReport {
    std::size_t n = 0;
    std::size_t alpha = 0;
    Rational c;
    VLTerm p_term;  // (p0 - c·pα)⁺
    VLTerm q_term;  // (c·pα - p0)⁺
    bool disjoint = false;  // ⟨P⟩ ∧ ⟨Q⟩ = 0
    std::vector<ProbeOutcome> outcomes;
    std::size_t counterexamples = 0;
};

/// Checks, relative to Ω_n, that ⟨(p0 - c·pα)⁺⟩ and ⟨(c·pα - p0)⁺⟩ behave
/// as mutual pseudocomplements against each probe term.
inline PseudocomplementReport pseudocomplement_probe(std::size_t n, std::size_t alpha, const Rational& c,
                                                     const std::vector<VLTerm>& probes, const Limits& lim = {}) {
    if (alpha < 1 || alpha >= n) throw InputError("alpha must satisfy 1 <= alpha < n");
    if (c <= 0) throw InputError("c must be positive");
    for (const VLTerm& t : probes) detail::check_arity(t, n);
    const SemilinearSet omega = omega_region(n);
    PseudocomplementReport r;
    r.n = n;
    r.alpha = alpha;
    r.c = c;
    const VLTerm p0 = VLTerm::gen(0), pa = VLTerm::gen(alpha);
    r.p_term = pos(p0 - c * pa);
    r.q_term = pos(c * pa - p0);
    r.disjoint = ideal_meet_is_zero(r.p_term, r.q_term, n, omega, lim).holds;

    auto implication = [&](const VLTerm& t, const VLTerm& hyp, const VLTerm& concl) {
        ImplicationCheck ic;
        IdealComparison meet_zero = ideal_meet_is_zero(t, hyp, n, omega, lim);
        ic.binding = meet_zero.holds;
        if (!ic.binding) {
            ic.witness = meet_zero.witness;
            return ic;
        }
        IdealComparison leq = ideal_leq(t, concl, n, omega, lim);
        ic.holds = leq.holds;
        ic.witness = leq.witness;
        return ic;
    };
    for (const VLTerm& t : probes) {
        ProbeOutcome o{t, implication(t, r.p_term, r.q_term), implication(t, r.q_term, r.p_term)};
        if (!o.first.holds || !o.second.holds) ++r.counterexamples;
        r.outcomes.push_back(std::move(o));
    }
    return r;
}

struct LadderCheck {
    VLTerm lower;                 // claimed smaller ideal
    VLTerm upper;                 // claimed larger ideal
    IdealComparison decided;      // expected to fail
    Point explicit_witness;       // the point built from the closed-form coordinates
    bool explicit_verified = false;
    bool multiplier_refuted = false;
};

struct NoIsoReport {
    unsigned k = 0, m = 0, n_coeff = 0;
    LadderCheck antitone;  // ⟨(2^{k-1} p0 - m pα)⁺⟩ <= ⟨(n p0 - pα)⁺⟩
    LadderCheck isotone;   // ⟨(pα - m p0)⁺⟩ <= ⟨(n pα - 2^{k-1} p0)⁺⟩
};

/// At dimension 2 (coordinates p0 and pα) relative to Ω₂, decides the two
/// ladder inclusions and verifies they fail, at the explicit points
/// (1/n, 1) and (2^{1-k}, 1/n) respectively.
inline NoIsoReport noiso_probe(unsigned k, unsigned m, unsigned n_coeff, const Limits& lim = {}) {
    if (k < 1 || m < 1 || n_coeff < 1) throw InputError("k, m and n must be positive integers");
    if (k > 62) throw InputError("k is too large");
    const Rational pow = Rational(mpz_class(1) << (k - 1));
    if (!(pow > Rational(m) * Rational(n_coeff))) {
        throw InputError("parameters violate 2^(k-1) > m*n (" + std::to_string(k) + ", " + std::to_string(m) + ", " +
                         std::to_string(n_coeff) + ")");
    }
    constexpr std::size_t dim = 2;
    const SemilinearSet omega = omega_region(dim);
    const VLTerm p0 = VLTerm::gen(0), pa = VLTerm::gen(1);
    const Rational mq(m), nq(n_coeff);

    auto run = [&](VLTerm lower, VLTerm upper, Point z) {
        LadderCheck lc{std::move(lower), std::move(upper), {}, {}, false, false};
        lc.decided = ideal_leq(lc.lower, lc.upper, dim, omega, lim);
        lc.explicit_witness = omega_extend({{0, z[0]}, {1, z[1]}}, dim);
        lc.explicit_verified = omega.contains(lc.explicit_witness) && evaluate(lc.upper, lc.explicit_witness) == 0 &&
                               evaluate(lc.lower, lc.explicit_witness) > 0;
        lc.multiplier_refuted = multiplier_refutation(lc.lower, lc.upper, {lc.explicit_witness}).has_value();
        return lc;
    };
    NoIsoReport r;
    r.k = k;
    r.m = m;
    r.n_coeff = n_coeff;
    r.antitone = run(pos(pow * p0 - mq * pa), pos(nq * p0 - pa), {1 / nq, Rational(1)});
    r.isotone = run(pos(pa - mq * p0), pos(nq * pa - pow * p0), {1 / pow, 1 / nq});
    return r;
}

} // namespace devlat
