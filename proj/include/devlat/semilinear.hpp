#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "devlat/errors.hpp"
#include "devlat/rational.hpp"

namespace devlat {

/// Affine form (coeffs | x) + constant over ℚⁿ.
struct LinearForm {
    std::vector<Rational> coeffs;
    Rational constant;

    LinearForm() = default;
    explicit LinearForm(std::size_t n) : coeffs(n) {}

    static LinearForm variable(std::size_t n, std::size_t i, const Rational& c = 1) {
        LinearForm f(n);
        f.coeffs.at(i) = c;
        return f;
    }

    static LinearForm constant_form(std::size_t n, const Rational& c) {
        LinearForm f(n);
        f.constant = c;
        return f;
    }

    std::size_t dimension() const { return coeffs.size(); }

    Rational evaluate(const Point& p) const {
        if (p.size() != coeffs.size()) throw InputError("point has the wrong dimension");
        Rational v = constant;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i] != 0) v += coeffs[i] * p[i];
        }
        return v;
    }

    bool mentions(std::size_t i) const { return coeffs[i] != 0; }

    bool is_constant() const {
        return std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) { return c == 0; });
    }

    LinearForm& operator+=(const LinearForm& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        constant += o.constant;
        return *this;
    }
    LinearForm& operator-=(const LinearForm& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        constant -= o.constant;
        return *this;
    }
    LinearForm& operator*=(const Rational& c) {
        for (auto& a : coeffs) a *= c;
        constant *= c;
        return *this;
    }

    friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
    friend LinearForm operator-(LinearForm a, const LinearForm& b) { return a -= b; }
    friend LinearForm operator*(const Rational& c, LinearForm a) { return a *= c; }
    friend LinearForm operator-(LinearForm a) { return a *= -1; }
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

enum class Rel { gt, ge, eq };  // form > 0, form >= 0, form = 0

struct Atom {
    LinearForm form;
    Rel rel = Rel::gt;

    bool holds(const Point& p) const {
        const Rational v = form.evaluate(p);
        switch (rel) {
            case Rel::gt: return v > 0;
            case Rel::ge: return v >= 0;
            case Rel::eq: return v == 0;
        }
        return false;
    }

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// Conjunction of atoms; no atoms means the whole space.
struct Cell {
    std::vector<Atom> atoms;

    bool contains(const Point& p) const {
        return std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.holds(p); });
    }
};

/// Finite union of cells in a fixed dimension.
struct SemilinearSet {
    std::size_t dimension = 0;
    std::vector<Cell> cells;

    static SemilinearSet empty(std::size_t n) { return {n, {}}; }
    static SemilinearSet whole(std::size_t n) { return {n, {Cell{}}}; }

    bool contains(const Point& p) const {
        if (p.size() != dimension) throw InputError("point has the wrong dimension");
        return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.contains(p); });
    }
};

struct Limits {
    std::size_t max_cells = 10000;
    std::size_t max_pieces = 10000;
};

using IndexSet = std::vector<std::size_t>;  // sorted variable indices

namespace detail {

inline void check_limit(std::size_t count, const Limits& lim) {
    if (count > lim.max_cells) {
        throw ResourceError("cell count " + std::to_string(count) + " exceeds the ceiling of " +
                            std::to_string(lim.max_cells));
    }
}

inline void check_dimension(const SemilinearSet& s, std::size_t n) {
    if (s.dimension != n) throw InputError("semilinear sets of different dimensions");
    for (const Cell& c : s.cells) {
        for (const Atom& a : c.atoms) {
            if (a.form.dimension() != n) throw InputError("atom dimension differs from its set");
        }
    }
}

// Scales to coprime integer coefficients; equalities get a positive
// leading coefficient.
inline void normalize(Atom& a) {
    mpz_class l = 1;
    for (const auto& c : a.form.coeffs) l = lcm(l, c.get_den());
    l = lcm(l, a.form.constant.get_den());
    a.form *= Rational(l);
    mpz_class g = 0;
    for (const auto& c : a.form.coeffs) g = gcd(g, c.get_num());
    g = gcd(g, a.form.constant.get_num());
    if (g != 0 && g != 1) a.form *= Rational(1, 1) / Rational(g);
    if (a.rel == Rel::eq) {
        const Rational* lead = nullptr;
        for (const auto& c : a.form.coeffs) {
            if (c != 0) {
                lead = &c;
                break;
            }
        }
        if ((lead && *lead < 0) || (!lead && a.form.constant < 0)) a.form *= -1;
    }
}

inline bool constant_holds(const Atom& a) { return a.holds(Point(a.form.dimension())); }

// Normalizes atoms, folds constant atoms and keeps only the tightest of
// inequalities sharing a left-hand side. nullopt means visibly empty.
inline std::optional<Cell> simplify(Cell c) {
    std::vector<Atom> kept;
    for (Atom& a : c.atoms) {
        normalize(a);
        if (a.form.is_constant()) {
            if (!constant_holds(a)) return std::nullopt;
            continue;
        }
        bool absorbed = false;
        for (Atom& k : kept) {
            if (k.form.coeffs != a.form.coeffs) continue;
            const bool k_eq = k.rel == Rel::eq, a_eq = a.rel == Rel::eq;
            if (k_eq && a_eq) {
                if (k.form.constant != a.form.constant) return std::nullopt;
                absorbed = true;
            } else if (!k_eq && !a_eq) {
                // smaller constant is the stronger bound; at a tie, strict wins
                if (a.form.constant < k.form.constant ||
                    (a.form.constant == k.form.constant && a.rel == Rel::gt)) {
                    k = a;
                }
                absorbed = true;
            }
            if (absorbed) break;
        }
        if (!absorbed) kept.push_back(std::move(a));
    }
    c.atoms = std::move(kept);
    return c;
}

inline std::optional<Cell> eliminate_variable(const Cell& c, std::size_t j) {
    const Atom* pivot = nullptr;
    for (const Atom& a : c.atoms) {
        if (a.rel == Rel::eq && a.form.mentions(j)) {
            pivot = &a;
            break;
        }
    }
    Cell out;
    if (pivot) {
        for (const Atom& a : c.atoms) {
            if (&a == pivot) continue;
            Atom b = a;
            if (b.form.mentions(j)) b.form -= (a.form.coeffs[j] / pivot->form.coeffs[j]) * pivot->form;
            out.atoms.push_back(std::move(b));
        }
        return simplify(std::move(out));
    }
    std::vector<const Atom*> pos, neg;
    for (const Atom& a : c.atoms) {
        if (a.form.coeffs[j] > 0) {
            pos.push_back(&a);
        } else if (a.form.coeffs[j] < 0) {
            neg.push_back(&a);
        } else {
            out.atoms.push_back(a);
        }
    }
    for (const Atom* p : pos) {
        for (const Atom* q : neg) {
            Atom comb;
            comb.form = (Rational(1) / p->form.coeffs[j]) * p->form + (Rational(-1) / q->form.coeffs[j]) * q->form;
            comb.form.coeffs[j] = 0;
            comb.rel = (p->rel == Rel::gt || q->rel == Rel::gt) ? Rel::gt : Rel::ge;
            out.atoms.push_back(std::move(comb));
        }
    }
    return simplify(std::move(out));
}

// Next variable to eliminate among `candidates`: one with an equality if
// possible, otherwise the one producing the fewest combined atoms.
inline std::optional<std::size_t> pick_variable(const Cell& c, const IndexSet& candidates) {
    std::optional<std::size_t> best;
    std::size_t best_cost = 0;
    for (std::size_t j : candidates) {
        std::size_t pos = 0, neg = 0;
        bool has_eq = false, mentioned = false;
        for (const Atom& a : c.atoms) {
            if (!a.form.mentions(j)) continue;
            mentioned = true;
            if (a.rel == Rel::eq) has_eq = true;
            (a.form.coeffs[j] > 0 ? pos : neg) += 1;
        }
        if (!mentioned) continue;
        const std::size_t cost = has_eq ? 0 : 1 + pos * neg;
        if (!best || cost < best_cost) {
            best = j;
            best_cost = cost;
        }
    }
    return best;
}

inline IndexSet all_indices(std::size_t n) {
    IndexSet out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = i;
    return out;
}

inline std::optional<Cell> eliminate_cell(Cell c, const IndexSet& vars) {
    auto cur = simplify(std::move(c));
    while (cur) {
        auto j = pick_variable(*cur, vars);
        if (!j) break;
        cur = eliminate_variable(*cur, *j);
    }
    return cur;
}

inline Rational floor_q(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

inline Rational ceil_q(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rational(r);
}

struct Bound {
    Rational value;
    bool strict = false;
};

// Picks a value of variable j satisfying every atom of `c` once all other
// coordinates of `p` are fixed.
inline Rational choose_value(const Cell& c, std::size_t j, Point p) {
    std::optional<Bound> lo, hi;
    p[j] = 0;
    for (const Atom& a : c.atoms) {
        const Rational k = a.form.coeffs[j];
        const Rational rest = a.form.evaluate(p);
        if (k == 0) continue;
        const Rational v = -rest / k;
        if (a.rel == Rel::eq) return v;
        const bool strict = a.rel == Rel::gt;
        if (k > 0) {
            if (!lo || v > lo->value || (v == lo->value && strict)) lo = Bound{v, strict};
        } else {
            if (!hi || v < hi->value || (v == hi->value && strict)) hi = Bound{v, strict};
        }
    }
    auto fits = [&](const Rational& x) {
        return (!lo || x > lo->value || (!lo->strict && x == lo->value)) &&
               (!hi || x < hi->value || (!hi->strict && x == hi->value));
    };
    if (fits(0)) return 0;
    if (lo && hi) {
        Rational cand = ceil_q(lo->value);
        if (cand == lo->value && lo->strict) cand += 1;
        if (fits(cand)) return cand;
        return (lo->value + hi->value) / 2;
    }
    if (lo) return floor_q(lo->value) + 1;
    return ceil_q(hi->value) - 1;
}

} // namespace detail

/// A rational point of the cell, or nullopt iff the cell is empty.
/// Variables are eliminated one at a time and the point is rebuilt by
/// back-substitution through the recorded intermediate cells.
inline std::optional<Point> witness_point(const Cell& c, std::size_t n) {
    const IndexSet vars = detail::all_indices(n);
    std::vector<std::pair<std::size_t, Cell>> tower;
    auto cur = detail::simplify(c);
    while (cur) {
        auto j = detail::pick_variable(*cur, vars);
        if (!j) break;
        tower.emplace_back(*j, *cur);
        cur = detail::eliminate_variable(*cur, *j);
    }
    if (!cur) return std::nullopt;
    Point p(n);
    for (auto it = tower.rbegin(); it != tower.rend(); ++it) p[it->first] = detail::choose_value(it->second, it->first, p);
    if (!c.contains(p)) throw std::logic_error("back-substituted point " + point_to_string(p) + " misses its cell");
    return p;
}

inline bool is_empty(const Cell& c, std::size_t n) { return !witness_point(c, n).has_value(); }

inline bool is_empty(const SemilinearSet& s) {
    return std::all_of(s.cells.begin(), s.cells.end(), [&](const Cell& c) { return is_empty(c, s.dimension); });
}

inline std::optional<Point> witness_point(const SemilinearSet& s) {
    for (const Cell& c : s.cells) {
        if (auto p = witness_point(c, s.dimension)) return p;
    }
    return std::nullopt;
}

/// Drops cells that are empty.
inline SemilinearSet prune(SemilinearSet s) {
    std::erase_if(s.cells, [&](const Cell& c) { return is_empty(c, s.dimension); });
    return s;
}

inline SemilinearSet unite(const SemilinearSet& s, const SemilinearSet& t, const Limits& lim = {}) {
    detail::check_dimension(t, s.dimension);
    SemilinearSet out = s;
    out.cells.insert(out.cells.end(), t.cells.begin(), t.cells.end());
    detail::check_limit(out.cells.size(), lim);
    return out;
}

inline SemilinearSet intersect(const SemilinearSet& s, const SemilinearSet& t, const Limits& lim = {}) {
    detail::check_dimension(t, s.dimension);
    SemilinearSet out = SemilinearSet::empty(s.dimension);
    for (const Cell& a : s.cells) {
        for (const Cell& b : t.cells) {
            Cell c = a;
            c.atoms.insert(c.atoms.end(), b.atoms.begin(), b.atoms.end());
            auto simple = detail::simplify(std::move(c));
            if (simple && !is_empty(*simple, s.dimension)) out.cells.push_back(std::move(*simple));
            detail::check_limit(out.cells.size(), lim);
        }
    }
    return out;
}

/// ¬(f > 0) = (-f >= 0), ¬(f >= 0) = (-f > 0), ¬(f = 0) = (f > 0) ∨ (-f > 0).
inline std::vector<Atom> negate_atom(const Atom& a) {
    switch (a.rel) {
        case Rel::gt: return {Atom{-a.form, Rel::ge}};
        case Rel::ge: return {Atom{-a.form, Rel::gt}};
        case Rel::eq: return {Atom{a.form, Rel::gt}, Atom{-a.form, Rel::gt}};
    }
    return {};
}

namespace detail {

// r ∖ sc as disjoint cells r ∧ a₁ ∧ … ∧ aᵢ₋₁ ∧ ¬aᵢ. Atoms of sc already
// implied by r are skipped; r comes back whole when it misses sc.
inline void subtract_cell(const Cell& r, const Cell& sc, std::size_t n, std::vector<Cell>& out, const Limits& lim) {
    Cell meet = r;
    meet.atoms.insert(meet.atoms.end(), sc.atoms.begin(), sc.atoms.end());
    auto both = simplify(std::move(meet));
    if (!both || is_empty(*both, n)) {
        out.push_back(r);
        check_limit(out.size(), lim);
        return;
    }
    Cell prefix = r;
    for (const Atom& a : sc.atoms) {
        bool implied = true;
        for (Atom& neg : negate_atom(a)) {
            Cell c = prefix;
            c.atoms.push_back(std::move(neg));
            auto simple = simplify(std::move(c));
            if (simple && !is_empty(*simple, n)) {
                implied = false;
                out.push_back(std::move(*simple));
                check_limit(out.size(), lim);
            }
        }
        if (!implied) prefix.atoms.push_back(a);
    }
}

} // namespace detail

/// T ∖ S, subtracting one cell of S at a time; empty cells never survive.
inline SemilinearSet difference(const SemilinearSet& t, const SemilinearSet& s, const Limits& lim = {}) {
    detail::check_dimension(t, s.dimension);
    detail::check_dimension(s, t.dimension);
    const std::size_t n = t.dimension;
    std::vector<Cell> cur;
    for (const Cell& c : t.cells) {
        auto simple = detail::simplify(c);
        if (simple && !is_empty(*simple, n)) cur.push_back(std::move(*simple));
    }
    for (const Cell& raw : s.cells) {
        auto sc = detail::simplify(raw);
        if (!sc || is_empty(*sc, n)) continue;
        std::vector<Cell> next;
        for (const Cell& r : cur) detail::subtract_cell(r, *sc, n, next, lim);
        cur = std::move(next);
        if (cur.empty()) break;
    }
    return {n, std::move(cur)};
}

inline SemilinearSet complement(const SemilinearSet& s, const Limits& lim = {}) {
    return difference(SemilinearSet::whole(s.dimension), s, lim);
}

struct InclusionResult {
    bool holds = true;
    std::optional<Point> witness;  // in T ∖ S when !holds

    explicit operator bool() const { return holds; }
};

/// Decides T ⊆ S. A negative answer carries a point of T ∖ S that has
/// been re-evaluated against both sets.
inline InclusionResult includes(const SemilinearSet& s, const SemilinearSet& t, const Limits& lim = {}) {
    const SemilinearSet rest = difference(t, s, lim);
    auto w = witness_point(rest);
    if (!w) return {};
    if (!t.contains(*w) || s.contains(*w)) {
        throw std::logic_error("inclusion witness " + point_to_string(*w) + " does not re-evaluate");
    }
    return {false, std::move(w)};
}

inline bool equivalent(const SemilinearSet& s, const SemilinearSet& t, const Limits& lim = {}) {
    return includes(s, t, lim).holds && includes(t, s, lim).holds;
}

/// Projection along `vars`, kept in dimension n with those coordinates free.
inline SemilinearSet eliminate(const SemilinearSet& s, const IndexSet& vars) {
    for (std::size_t j : vars) {
        if (j >= s.dimension) throw InputError("variable index " + std::to_string(j) + " out of range");
    }
    SemilinearSet out = SemilinearSet::empty(s.dimension);
    for (const Cell& c : s.cells) {
        if (auto e = detail::eliminate_cell(c, vars)) out.cells.push_back(std::move(*e));
    }
    return out;
}

inline IndexSet complement_indices(const IndexSet& x, std::size_t n) {
    IndexSet out;
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::binary_search(x.begin(), x.end(), i)) out.push_back(i);
    }
    return out;
}

inline void check_index_set(const IndexSet& x, std::size_t n) {
    if (!std::is_sorted(x.begin(), x.end()) || std::adjacent_find(x.begin(), x.end()) != x.end()) {
        throw InputError("index set must be sorted and duplicate-free");
    }
    if (!x.empty() && x.back() >= n) throw InputError("index " + std::to_string(x.back()) + " out of range");
}

/// True iff no atom mentions a variable outside `x`.
inline bool mentions_only(const SemilinearSet& s, const IndexSet& x) {
    const IndexSet outside = complement_indices(x, s.dimension);
    for (const Cell& c : s.cells) {
        for (const Atom& a : c.atoms) {
            for (std::size_t j : outside) {
                if (a.form.mentions(j)) return false;
            }
        }
    }
    return true;
}

/// U* : points agreeing on X with some point of U.
inline SemilinearSet upper_shadow(const SemilinearSet& u, const IndexSet& x) {
    check_index_set(x, u.dimension);
    return eliminate(u, complement_indices(x, u.dimension));
}

/// U_* : points all of whose X-agreeing points lie in U.
inline SemilinearSet lower_shadow(const SemilinearSet& u, const IndexSet& x, const Limits& lim = {}) {
    check_index_set(x, u.dimension);
    return complement(upper_shadow(complement(u, lim), x), lim);
}

/// Definable over X, decided semantically: U* ⊆ U.
inline bool definable_over(const SemilinearSet& u, const IndexSet& x, const Limits& lim = {}) {
    return includes(u, upper_shadow(u, x), lim).holds;
}

/// W over X ∩ Y with U ⊆ W ⊆ V, taken as the upper shadow of U on X ∩ Y.
inline SemilinearSet interpolant(const SemilinearSet& u, const IndexSet& x, const SemilinearSet& v,
                                 const IndexSet& y, const Limits& lim = {}) {
    detail::check_dimension(v, u.dimension);
    check_index_set(x, u.dimension);
    check_index_set(y, u.dimension);
    if (auto inc = includes(v, u, lim); !inc) {
        throw ContractError("U is not contained in V; witness " + point_to_string(*inc.witness));
    }
    if (!definable_over(u, x, lim)) throw ContractError("U is not definable over X");
    if (!definable_over(v, y, lim)) throw ContractError("V is not definable over Y");
    IndexSet xy;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(xy));
    SemilinearSet w = upper_shadow(u, xy);
    if (!includes(w, u, lim) || !includes(v, w, lim)) {
        throw std::logic_error("interpolant fails its sandwich postcondition");
    }
    return w;
}

/// Every atom is a strict homogeneous inequality (the atom-free cell
/// stands for the whole space).
inline bool is_op_form(const SemilinearSet& s) {
    for (const Cell& c : s.cells) {
        for (const Atom& a : c.atoms) {
            if (a.rel != Rel::gt || a.form.constant != 0) return false;
        }
    }
    return true;
}

/// In op form and different from the whole space. Such sets never contain
/// the origin, while the whole space does.
inline bool is_proper(const SemilinearSet& s) {
    return is_op_form(s) && !s.contains(Point(s.dimension));
}

// ---- text format -------------------------------------------------------
//
//   atom  := expr rel expr        rel ∈ {>, >=, =, <, <=}
//   expr  := [+|-] term {(+|-) term}
//   term  := rational [* xK] | xK

namespace detail {

class FormParser {
public:
    FormParser(std::string_view text, std::size_t n) : s_(text), n_(n) {}

    LinearForm parse_expr() {
        LinearForm f(n_);
        skip();
        bool first = true;
        while (true) {
            skip();
            Rational sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = get() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                break;
            }
            f += sign * parse_term();
            first = false;
            skip();
            if (peek() != '+' && peek() != '-') break;
        }
        return f;
    }

    bool done() {
        skip();
        return i_ == s_.size();
    }

private:
    LinearForm parse_term() {
        if (peek() == 'x') return LinearForm::variable(n_, parse_var());
        const Rational c = parse_number();
        skip();
        if (peek() == '*') {
            ++i_;
            skip();
            return LinearForm::variable(n_, parse_var(), c);
        }
        return LinearForm::constant_form(n_, c);
    }

    std::size_t parse_var() {
        if (get() != 'x') fail("expected a variable");
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("variable index missing");
        const std::size_t k = std::stoul(std::string(s_.substr(start, i_ - start)));
        if (k >= n_) fail("variable x" + std::to_string(k) + " outside dimension " + std::to_string(n_));
        return k;
    }

    Rational parse_number() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (i_ < s_.size() && s_[i_] == '/') {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        if (start == i_) fail("expected a number or variable");
        return parse_rational(s_.substr(start, i_ - start));
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
    char get() { return i_ < s_.size() ? s_[i_++] : '\0'; }
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(what + " in '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t n_;
    std::size_t i_ = 0;
};

} // namespace detail

inline LinearForm parse_linear_form(std::string_view text, std::size_t n) {
    detail::FormParser p(text, n);
    LinearForm f = p.parse_expr();
    if (!p.done()) throw InputError("trailing input in '" + std::string(text) + "'");
    return f;
}

inline Atom parse_atom(std::string_view text, std::size_t n) {
    const std::size_t at = text.find_first_of("<>=");
    if (at == std::string_view::npos) throw InputError("no relation in '" + std::string(text) + "'");
    std::size_t len = 1;
    if (at + 1 < text.size() && text[at + 1] == '=' && text[at] != '=') len = 2;
    const std::string_view op = text.substr(at, len);
    const LinearForm lhs = parse_linear_form(text.substr(0, at), n);
    const LinearForm rhs = parse_linear_form(text.substr(at + len), n);
    if (op == ">") return {lhs - rhs, Rel::gt};
    if (op == ">=") return {lhs - rhs, Rel::ge};
    if (op == "=") return {lhs - rhs, Rel::eq};
    if (op == "<") return {rhs - lhs, Rel::gt};
    if (op == "<=") return {rhs - lhs, Rel::ge};
    throw InputError("unknown relation in '" + std::string(text) + "'");
}

inline std::string format_form(const LinearForm& f) {
    std::string out;
    auto term = [&](const Rational& c, const std::string& var) {
        if (c == 0) return;
        const Rational a = abs(c);
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (var.empty()) {
            out += to_string(a);
        } else {
            if (a != 1) out += to_string(a) + "*";
            out += var;
        }
    };
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) term(f.coeffs[i], "x" + std::to_string(i));
    term(f.constant, "");
    return out.empty() ? "0" : out;
}

inline std::string format_atom(const Atom& a) {
    const char* rel = a.rel == Rel::gt ? " > 0" : a.rel == Rel::ge ? " >= 0" : " = 0";
    return format_form(a.form) + rel;
}

} // namespace devlat
