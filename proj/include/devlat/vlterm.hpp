#pragma once

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "devlat/errors.hpp"
#include "devlat/rational.hpp"

namespace devlat {

/// Immutable vector-lattice term over generators g0, g1, ... and the unit.
/// Subterms are shared, so |t| = t ∨ (-t) keeps a single copy of t.
class VLTerm {
public:
    enum class Kind { generator, constant, scale, add, join, meet };

    VLTerm() : VLTerm(constant(0)) {}

    static VLTerm gen(std::size_t i) { return make(Kind::generator, i, 0, nullptr, nullptr); }
    static VLTerm constant(const Rational& c) { return make(Kind::constant, 0, c, nullptr, nullptr); }
    static VLTerm one() { return constant(1); }
    static VLTerm zero() { return constant(0); }

    friend VLTerm operator*(const Rational& c, const VLTerm& t) { return make(Kind::scale, 0, c, t.node_, nullptr); }
    friend VLTerm operator+(const VLTerm& a, const VLTerm& b) { return make(Kind::add, 0, 0, a.node_, b.node_); }
    friend VLTerm operator-(const VLTerm& t) { return Rational(-1) * t; }
    friend VLTerm operator-(const VLTerm& a, const VLTerm& b) { return a + (-b); }
    friend VLTerm join(const VLTerm& a, const VLTerm& b) { return make(Kind::join, 0, 0, a.node_, b.node_); }
    friend VLTerm meet(const VLTerm& a, const VLTerm& b) { return make(Kind::meet, 0, 0, a.node_, b.node_); }

    Kind kind() const { return node_->kind; }
    std::size_t index() const { return node_->index; }
    const Rational& value() const { return node_->value; }
    VLTerm lhs() const { return VLTerm(node_->a); }
    VLTerm rhs() const { return VLTerm(node_->b); }

    // Same node, not merely equal structure.
    bool same(const VLTerm& o) const { return node_ == o.node_; }

    /// One more than the largest generator index used (0 if none).
    std::size_t arity() const {
        switch (kind()) {
            case Kind::generator: return index() + 1;
            case Kind::constant: return 0;
            case Kind::scale: return lhs().arity();
            default: return std::max(lhs().arity(), rhs().arity());
        }
    }

    std::size_t depth() const {
        switch (kind()) {
            case Kind::generator:
            case Kind::constant: return 0;
            case Kind::scale: return lhs().depth();
            default: return 1 + std::max(lhs().depth(), rhs().depth());
        }
    }

private:
    struct Node {
        Kind kind;
        std::size_t index;
        Rational value;
        std::shared_ptr<const Node> a, b;
    };

    explicit VLTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

    static VLTerm make(Kind k, std::size_t i, const Rational& v, std::shared_ptr<const Node> a,
                       std::shared_ptr<const Node> b) {
        return VLTerm(std::make_shared<const Node>(Node{k, i, v, std::move(a), std::move(b)}));
    }

    std::shared_ptr<const Node> node_;
};

inline VLTerm pos(const VLTerm& t) { return join(t, VLTerm::zero()); }
inline VLTerm abs(const VLTerm& t) { return join(t, -t); }

inline bool is_abs_pattern(const VLTerm& t) {
    if (t.kind() != VLTerm::Kind::join) return false;
    const VLTerm b = t.rhs();
    return b.kind() == VLTerm::Kind::scale && b.value() == -1 && b.lhs().same(t.lhs());
}

inline bool is_pos_pattern(const VLTerm& t) {
    return t.kind() == VLTerm::Kind::join && t.rhs().kind() == VLTerm::Kind::constant && t.rhs().value() == 0;
}

/// Conservative syntactic test for t >= 0 everywhere.
inline bool provably_nonnegative(const VLTerm& t) {
    using K = VLTerm::Kind;
    switch (t.kind()) {
        case K::generator: return false;
        case K::constant: return t.value() >= 0;
        case K::scale: return t.value() >= 0 && provably_nonnegative(t.lhs());
        case K::add: return provably_nonnegative(t.lhs()) && provably_nonnegative(t.rhs());
        case K::join:
            return is_abs_pattern(t) || provably_nonnegative(t.lhs()) || provably_nonnegative(t.rhs());
        case K::meet: return provably_nonnegative(t.lhs()) && provably_nonnegative(t.rhs());
    }
    return false;
}

inline Rational evaluate(const VLTerm& t, const Point& p) {
    using K = VLTerm::Kind;
    switch (t.kind()) {
        case K::generator:
            if (t.index() >= p.size()) {
                throw InputError("point of dimension " + std::to_string(p.size()) + " has no coordinate for g" +
                                 std::to_string(t.index()));
            }
            return p[t.index()];
        case K::constant: return t.value();
        case K::scale: return t.value() * evaluate(t.lhs(), p);
        case K::add: return evaluate(t.lhs(), p) + evaluate(t.rhs(), p);
        case K::join: return std::max(evaluate(t.lhs(), p), evaluate(t.rhs(), p));
        case K::meet: return std::min(evaluate(t.lhs(), p), evaluate(t.rhs(), p));
    }
    return 0;
}

/// Homomorphic substitution g_i ↦ sigma[i]. The unit stays the unit when
/// `unit_image` is empty; otherwise c·𝟙 ↦ c·unit_image.
inline VLTerm substitute(const VLTerm& t, const std::vector<VLTerm>& sigma,
                         const std::optional<VLTerm>& unit_image = std::nullopt) {
    using K = VLTerm::Kind;
    switch (t.kind()) {
        case K::generator:
            if (t.index() >= sigma.size()) throw InputError("substitution is not total on g" + std::to_string(t.index()));
            return sigma[t.index()];
        case K::constant: return unit_image ? t.value() * *unit_image : t;
        case K::scale: return t.value() * substitute(t.lhs(), sigma, unit_image);
        case K::add: return substitute(t.lhs(), sigma, unit_image) + substitute(t.rhs(), sigma, unit_image);
        case K::join: return join(substitute(t.lhs(), sigma, unit_image), substitute(t.rhs(), sigma, unit_image));
        case K::meet: return meet(substitute(t.lhs(), sigma, unit_image), substitute(t.rhs(), sigma, unit_image));
    }
    return t;
}

// ---- text format -------------------------------------------------------
//
//   join    := meet {'\/' meet}
//   meet    := sum {'/\' sum}
//   sum     := ['-'] product {('+'|'-') product}
//   product := rational ['*' unary] | unary
//   unary   := '-' product | postfix
//   postfix := primary {'^+'}
//   primary := gK | one | rational | '(' join ')' | '|' join '|'

namespace detail {

class TermParser {
public:
    explicit TermParser(std::string_view s) : s_(s) {}

    VLTerm parse() {
        VLTerm t = parse_join();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return t;
    }

private:
    VLTerm parse_join() {
        VLTerm t = parse_meet();
        while (eat("\\/")) t = join(t, parse_meet());
        return t;
    }

    VLTerm parse_meet() {
        VLTerm t = parse_sum();
        while (eat("/\\")) t = meet(t, parse_sum());
        return t;
    }

    VLTerm parse_sum() {
        VLTerm t = parse_product();
        while (true) {
            if (eat("+")) {
                t = t + parse_product();
            } else if (peek_minus()) {
                ++i_;
                t = t - parse_product();
            } else {
                return t;
            }
        }
    }

    VLTerm parse_product() {
        skip();
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            const Rational c = parse_number();
            if (eat("*")) return c * parse_unary();
            return parse_postfix_on(VLTerm::constant(c));
        }
        return parse_unary();
    }

    VLTerm parse_unary() {
        skip();
        if (peek_minus()) {
            ++i_;
            VLTerm t = parse_product();
            if (t.kind() == VLTerm::Kind::constant) return VLTerm::constant(-t.value());
            return -t;
        }
        return parse_postfix_on(parse_primary());
    }

    VLTerm parse_postfix_on(VLTerm t) {
        while (eat("^+")) t = pos(t);
        return t;
    }

    VLTerm parse_primary() {
        skip();
        if (eat("(")) {
            VLTerm t = parse_join();
            if (!eat(")")) fail("missing ')'");
            return t;
        }
        if (eat("|")) {
            VLTerm t = parse_join();
            if (!eat("|")) fail("missing closing '|'");
            return abs(t);
        }
        if (eat("one")) return VLTerm::one();
        if (i_ < s_.size() && s_[i_] == 'g') {
            ++i_;
            const std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            if (start == i_) fail("generator index missing");
            return VLTerm::gen(std::stoul(std::string(s_.substr(start, i_ - start))));
        }
        if (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            return VLTerm::constant(parse_number());
        }
        fail(i_ < s_.size() ? "unexpected '" + std::string(1, s_[i_]) + "'" : "unexpected end of term");
    }

    Rational parse_number() {
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        // '/' starts a fraction only when a digit follows; "/\" is a meet.
        if (i_ + 1 < s_.size() && s_[i_] == '/' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
            ++i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        }
        return parse_rational(s_.substr(start, i_ - start));
    }

    bool peek_minus() {
        skip();
        return i_ < s_.size() && s_[i_] == '-';
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(i_, tok.size()) != tok) return false;
        i_ += tok.size();
        return true;
    }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw InputError(what + " at offset " + std::to_string(i_) + " in term '" + std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

} // namespace detail

inline VLTerm parse_term(std::string_view text) { return detail::TermParser(text).parse(); }

/// Parses and checks that every generator index is below n.
inline VLTerm parse_term(std::string_view text, std::size_t n) {
    VLTerm t = parse_term(text);
    if (t.arity() > n) {
        throw InputError("term '" + std::string(text) + "' uses g" + std::to_string(t.arity() - 1) +
                         " but the dimension is " + std::to_string(n));
    }
    return t;
}

/// Fully parenthesized text accepted by parse_term.
inline std::string format_term(const VLTerm& t) {
    using K = VLTerm::Kind;
    switch (t.kind()) {
        case K::generator: return "g" + std::to_string(t.index());
        case K::constant: {
            if (t.value() == 1) return "one";
            if (t.value() < 0) return "(-" + to_string(-t.value()) + ")";
            return to_string(t.value());
        }
        case K::scale: {
            if (t.value() == -1) return "(-" + format_term(t.lhs()) + ")";
            if (t.value() < 0) return "(-" + to_string(-t.value()) + "*" + format_term(t.lhs()) + ")";
            return "(" + to_string(t.value()) + "*" + format_term(t.lhs()) + ")";
        }
        case K::add: return "(" + format_term(t.lhs()) + " + " + format_term(t.rhs()) + ")";
        case K::join:
            if (is_abs_pattern(t)) return "|" + format_term(t.lhs()) + "|";
            if (is_pos_pattern(t)) return format_term(t.lhs()) + "^+";
            return "(" + format_term(t.lhs()) + " \\/ " + format_term(t.rhs()) + ")";
        case K::meet: return "(" + format_term(t.lhs()) + " /\\ " + format_term(t.rhs()) + ")";
    }
    return "?";
}

} // namespace devlat
