#ifndef HESSEPENCIL_PARSE_HPP
#define HESSEPENCIL_PARSE_HPP

// Text grammar for polynomials:
//   expr   := term (('+'|'-') term)*
//   term   := factor (['*'|'/'] factor)*      juxtaposition multiplies
//   factor := ('-'|'+') factor | atom ('^' integer)?
//   atom   := integer | name | '(' expr ')'
// Division is only allowed by nonzero constants. Over an omega field the
// symbol `w` denotes the cube root of unity unless `w` is a variable.

#include <hessepencil/mpoly.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hesse {

class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

template <FieldElement F>
class PolyParser {
public:
    PolyParser(std::string_view text, const std::vector<std::string>& names, const F& like)
        : s_(text), names_(names), like_(like) {}

    MPoly<F> run() {
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        MPoly<F> p = expr();
        skip();
        if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + " in \"" + std::string(s_) +
                         "\": " + msg);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool starts_atom(char c) const {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(';
    }

    MPoly<F> constant(const Rational& q) const { return MPoly<F>::constant(names_.size(), like_.from_rational(q)); }

    MPoly<F> expr() {
        MPoly<F> acc = term();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc += term();
            } else if (c == '-') {
                ++pos_;
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    MPoly<F> term() {
        MPoly<F> acc = factor();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * factor();
            } else if (c == '/') {
                ++pos_;
                MPoly<F> d = factor();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                acc = d.constant_term().inv() * acc;
            } else if (starts_atom(c)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MPoly<F> factor() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (c == '+') {
            ++pos_;
            return factor();
        }
        MPoly<F> base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a nonnegative integer exponent");
            if (pos_ - start > 4) fail("exponent too large");
            unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
            base = base.pow(e, like_.from_int(1));
        }
        return base;
    }

    MPoly<F> atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            MPoly<F> inner = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return constant(Rational(mpz_class(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            return identifier(std::string(s_.substr(start, pos_ - start)), start);
        }
        if (c == '\0') fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    // A whole identifier that is a known name is that variable; otherwise it
    // is split greedily into known names (so "xyz" reads as x*y*z).
    MPoly<F> identifier(const std::string& id, std::size_t start) {
        MPoly<F> out = constant(Rational(1));
        std::size_t i = 0;
        while (i < id.size()) {
            std::size_t best = 0;
            MPoly<F> piece;
            for (std::size_t k = 0; k < names_.size(); ++k) {
                const auto& nm = names_[k];
                if (nm.size() > best && id.compare(i, nm.size(), nm) == 0) {
                    best = nm.size();
                    piece = MPoly<F>::variable(names_.size(), k, like_.from_int(1));
                }
            }
            if (best == 0 && id[i] == 'w') {
                if constexpr (requires(const F& f) { f.omega(); }) {
                    best = 1;
                    piece = MPoly<F>::constant(names_.size(), like_.omega());
                }
            }
            if (best == 0 && std::isdigit(static_cast<unsigned char>(id[i])) && i > 0) {
                std::size_t j = i;
                while (j < id.size() && std::isdigit(static_cast<unsigned char>(id[j]))) ++j;
                best = j - i;
                piece = constant(Rational(mpz_class(id.substr(i, best))));
            }
            if (best == 0) {
                pos_ = start + i;
                fail("unknown symbol '" + id.substr(i) + "'");
            }
            out = out * piece;
            i += best;
        }
        return out;
    }

    std::string_view s_;
    const std::vector<std::string>& names_;
    F like_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <FieldElement F>
MPoly<F> parse_poly(std::string_view text, const std::vector<std::string>& names, const F& like) {
    return detail::PolyParser<F>(text, names, like).run();
}

/// Parse a single field element (e.g. "-3/4", "1+2w", "-w"): a constant polynomial.
template <FieldElement F>
F parse_scalar(std::string_view text, const F& like) {
    static const std::vector<std::string> none;
    MPoly<F> p = parse_poly(text, none, like);
    return p.is_zero() ? like.from_int(0) : p.constant_term();
}

}  // namespace hesse

#endif
