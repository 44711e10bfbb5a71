#ifndef HESSEPENCIL_MPOLY_HPP
#define HESSEPENCIL_MPOLY_HPP

// Sparse multivariate polynomials over an exact field.
//
// Terms live in a std::map keyed by exponent vectors, so iteration is in
// lexicographic order and the leading (lex-largest) term is the last entry.

#include <hessepencil/field.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace hesse {

using Exponent = std::vector<std::uint16_t>;

class ArityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class F>
class MPoly {
public:
    using Coefficient = F;
    using TermMap = std::map<Exponent, F>;

    MPoly() = default;
    explicit MPoly(std::size_t nvars) : n_(nvars) {}

    static MPoly constant(std::size_t nvars, const F& c) {
        MPoly p(nvars);
        p.proto_ = c;
        if (!c.is_zero()) p.terms_.emplace(Exponent(nvars, 0), c);
        return p;
    }
    static MPoly variable(std::size_t nvars, std::size_t i, const F& one) {
        if (i >= nvars) throw ArityError("variable index out of range");
        Exponent e(nvars, 0);
        e[i] = 1;
        return monomial(std::move(e), one);
    }
    static MPoly monomial(Exponent e, const F& c) {
        MPoly p(e.size());
        p.proto_ = c;
        if (!c.is_zero()) p.terms_.emplace(std::move(e), c);
        return p;
    }

    std::size_t nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
    }

    F coefficient(const Exponent& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? zero_coefficient() : it->second;
    }
    F constant_term() const { return coefficient(Exponent(n_, 0)); }

    /// Lex-largest term. Precondition: nonzero.
    const std::pair<const Exponent, F>& leading() const {
        if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
        return *terms_.rbegin();
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, total(e));
        return d;
    }
    int degree_in(std::size_t v) const {
        check_var(v);
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[v]));
        return d;
    }
    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            if (d < 0) d = total(e);
            else if (total(e) != d) return false;
        }
        return true;
    }

    MPoly from_rational(const Rational& q) const { return constant(n_, proto_.from_rational(q)); }

    /// Zero of the coefficient field (carries the field context, e.g. the modulus).
    F zero_coefficient() const { return proto_ - proto_; }

    MPoly derivative(std::size_t v) const {
        check_var(v);
        MPoly out = blank();
        for (const auto& [e, c] : terms_) {
            if (e[v] == 0) continue;
            Exponent d = e;
            d[v] -= 1;
            out.add_term(std::move(d), c * c.from_int(e[v]));
        }
        return out;
    }

    F evaluate(std::span<const F> vals) const {
        if (vals.size() != n_) throw ArityError("evaluate: expected " + std::to_string(n_) + " values");
        F acc = zero_coefficient();
        for (const auto& [e, c] : terms_) {
            F t = c;
            for (std::size_t i = 0; i < n_; ++i)
                for (unsigned k = 0; k < e[i]; ++k) t = t * vals[i];
            acc = acc + t;
        }
        return acc;
    }
    F evaluate(const std::vector<F>& vals) const { return evaluate(std::span<const F>(vals)); }

    /// Replace variable i by subs[i]; all substitutes share one arity.
    MPoly substitute(const std::vector<MPoly>& subs) const {
        if (subs.size() != n_) throw ArityError("substitute: expected " + std::to_string(n_) + " polynomials");
        std::size_t m = subs.empty() ? 0 : subs[0].nvars();
        for (const auto& s : subs)
            if (s.nvars() != m) throw ArityError("substitute: substitutes disagree on arity");
        std::vector<std::vector<MPoly>> powers(n_);
        MPoly out(m);
        out.proto_ = proto_;
        for (const auto& [e, c] : terms_) {
            MPoly t = constant(m, c);
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(constant(m, c.from_int(1)));
                while (pw.size() <= e[i]) pw.push_back(pw.back() * subs[i]);
                t = t * pw[e[i]];
            }
            out += t;
        }
        return out;
    }

    /// Set variable v to a value; arity is kept.
    MPoly specialize(std::size_t v, const F& value) const {
        check_var(v);
        MPoly out = blank();
        for (const auto& [e, c] : terms_) {
            F t = c;
            for (unsigned k = 0; k < e[v]; ++k) t = t * value;
            Exponent d = e;
            d[v] = 0;
            out.add_term(std::move(d), t);
        }
        return out;
    }

    template <class G, class Fn>
    MPoly<G> map_coefficients(Fn&& fn) const {
        MPoly<G> out(n_);
        for (const auto& [e, c] : terms_) out.add_term(e, fn(c));
        return out;
    }

    void add_term(Exponent e, const F& c) {
        if (terms_.empty()) proto_ = c;
        if (c.is_zero()) return;
        if (e.size() != n_) throw ArityError("term arity mismatch");
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly out = blank();
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }
    MPoly& operator+=(const MPoly& o) {
        adopt_arity(o);
        if (terms_.empty()) proto_ = o.proto_;
        for (const auto& [e, c] : o.terms_) add_term(widen(e), c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        adopt_arity(o);
        if (terms_.empty()) proto_ = o.proto_;
        for (const auto& [e, c] : o.terms_) add_term(widen(e), -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        MPoly lhs = a;
        lhs.adopt_arity(b);
        MPoly out = lhs.blank();
        for (const auto& [ea, ca] : lhs.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e = ea;
                const Exponent w = lhs.widen(eb);
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(e[i] + w[i]);
                out.add_term(std::move(e), ca * cb);
            }
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    friend MPoly operator*(const F& s, const MPoly& p) {
        MPoly out = p.blank();
        out.proto_ = s;
        if (s.is_zero()) return out;
        for (const auto& [e, c] : p.terms_) out.add_term(e, s * c);
        return out;
    }

    MPoly pow(unsigned k, const F& one) const {
        MPoly acc = constant(n_, one);
        for (unsigned i = 0; i < k; ++i) acc = acc * *this;
        return acc;
    }

    friend bool operator==(const MPoly& a, const MPoly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string cs = c.str();
            bool unit = (c == c.from_int(1));
            bool neg_unit = (c == c.from_int(-1));
            std::string mono;
            for (std::size_t i = 0; i < n_; ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += i < names.size() ? names[i] : "v" + std::to_string(i);
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string term;
            if (mono.empty()) term = cs;
            else if (unit) term = mono;
            else if (neg_unit) term = "-" + mono;
            else if (cs.find_first_of("+w") != std::string::npos) term = "(" + cs + ")*" + mono;
            else term = cs + "*" + mono;
            if (!first && term[0] != '-') s += "+";
            s += term;
            first = false;
        }
        return s;
    }

private:
    static int total(const Exponent& e) {
        int t = 0;
        for (auto k : e) t += k;
        return t;
    }
    void check_var(std::size_t v) const {
        if (v >= n_) throw ArityError("variable index " + std::to_string(v) + " out of range");
    }
    // A constant polynomial of arity 0 behaves as a scalar of any arity.
    void adopt_arity(const MPoly& o) {
        if (n_ == o.n_) return;
        if (n_ == 0) {
            TermMap old;
            old.swap(terms_);
            n_ = o.n_;
            for (auto& [e, c] : old) terms_.emplace(Exponent(n_, 0), c);
            return;
        }
        if (o.n_ == 0) return;
        throw ArityError("polynomial arity mismatch: " + std::to_string(n_) + " vs " + std::to_string(o.n_));
    }
    Exponent widen(const Exponent& e) const { return e.size() == n_ ? e : Exponent(n_, 0); }

    MPoly blank() const {
        MPoly p(n_);
        p.proto_ = proto_;
        return p;
    }

    std::size_t n_ = 0;
    TermMap terms_;
    F proto_{};
};

/// Evaluate a rational polynomial at values in any ring that can embed Q.
template <RingElement T>
T evaluate_in(const MPoly<Rational>& p, std::span<const T> vals, const T& like) {
    if (vals.size() != p.nvars()) throw ArityError("evaluate_in: expected " + std::to_string(p.nvars()) + " values");
    T acc = like.from_rational(Rational(0));
    T one = like.from_rational(Rational(1));
    std::vector<std::vector<T>> powers(vals.size());
    for (const auto& [e, c] : p.terms()) {
        T t = like.from_rational(c);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(one);
            while (pw.size() <= e[i]) pw.push_back(pw.back() * vals[i]);
            t = t * pw[e[i]];
        }
        acc = acc + t;
    }
    return acc;
}

template <RingElement T>
T evaluate_in(const MPoly<Rational>& p, const std::vector<T>& vals, const T& like) {
    return evaluate_in(p, std::span<const T>(vals), like);
}

/// Image of a rational polynomial in another field.
template <FieldElement F>
MPoly<F> embed_poly(const MPoly<Rational>& p, const F& like) {
    return p.template map_coefficients<F>([&](const Rational& c) { return like.from_rational(c); });
}

// ---------------------------------------------------------------- determinants

/// 3x3 determinant by cofactor expansion over any ring.
template <RingElement T>
T det3(const std::array<std::array<T, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

/// Division-free determinant (Laplace expansion memoised over column subsets);
/// suitable for polynomial entries. O(n 2^n) ring operations.
template <RingElement T>
T determinant_expand(const std::vector<std::vector<T>>& m, const T& one) {
    const std::size_t n = m.size();
    if (n == 0) return one;
    if (n > 24) throw std::invalid_argument("determinant_expand: matrix too large");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant_expand: matrix not square");
    // minors[mask] = det of rows (n - popcount(mask)).. n-1 restricted to columns in mask
    std::unordered_map<std::uint32_t, T> level, next;
    level.emplace(0u, one);
    T zero = one - one;
    for (std::size_t r = n; r-- > 0;) {
        next.clear();
        for (const auto& [mask, minor] : level) {
            if (minor.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                std::uint32_t bit = 1u << c;
                if (mask & bit) continue;
                if (m[r][c].is_zero()) continue;
                // sign: number of columns in mask that are less than c
                int before = __builtin_popcount(mask & (bit - 1));
                T term = m[r][c] * minor;
                if (before % 2) term = -term;
                auto [it, inserted] = next.try_emplace(mask | bit, term);
                if (!inserted) it->second = it->second + term;
            }
        }
        level.swap(next);
    }
    auto it = level.find((n == 32 ? 0u : (1u << n)) - 1u);
    return it == level.end() ? zero : it->second;
}

// ---------------------------------------------------------------- univariate tools

/// Coefficients of f viewed as a polynomial in variable v: result[k] is the
/// coefficient of v^k (a polynomial of the same arity, free of v).
template <class F>
std::vector<MPoly<F>> coefficients_in(const MPoly<F>& f, std::size_t v) {
    int d = f.degree_in(v);
    std::vector<MPoly<F>> out(d < 0 ? 0 : d + 1, MPoly<F>(f.nvars()));
    for (const auto& [e, c] : f.terms()) {
        Exponent r = e;
        r[v] = 0;
        out[e[v]].add_term(std::move(r), c);
    }
    return out;
}

/// Sylvester resultant of f and g with respect to variable v; the raw
/// Sylvester determinant, no sign normalisation.
template <FieldElement F>
MPoly<F> resultant(const MPoly<F>& f, const MPoly<F>& g, std::size_t v) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    if (f.nvars() != g.nvars()) throw ArityError("resultant: arity mismatch");
    int m = f.degree_in(v), n = g.degree_in(v);
    if (m < 1 || n < 1) throw std::invalid_argument("resultant: both inputs need positive degree in the variable");
    auto fc = coefficients_in(f, v);
    auto gc = coefficients_in(g, v);
    const F one = f.leading().second.from_int(1);
    const std::size_t N = m + n;
    std::vector<std::vector<MPoly<F>>> S(N, std::vector<MPoly<F>>(N, MPoly<F>(f.nvars())));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k <= m; ++k) S[i][i + k] = fc[m - k];
    for (int i = 0; i < m; ++i)
        for (int k = 0; k <= n; ++k) S[n + i][i + k] = gc[n - k];
    return determinant_expand(S, MPoly<F>::constant(f.nvars(), one));
}

/// Univariate division with remainder (nvars == 1).
template <FieldElement F>
std::pair<MPoly<F>, MPoly<F>> divmod_univariate(const MPoly<F>& a, const MPoly<F>& b) {
    if (a.nvars() != 1 || b.nvars() != 1) throw ArityError("divmod_univariate expects univariate polynomials");
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    MPoly<F> q(1), r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero() && r.leading().first[0] >= eb[0]) {
        const auto [er, cr] = r.leading();
        Exponent e{static_cast<std::uint16_t>(er[0] - eb[0])};
        MPoly<F> t = MPoly<F>::monomial(e, cr / cb);
        q += t;
        r -= t * b;
    }
    return {q, r};
}

template <FieldElement F>
MPoly<F> gcd_univariate(MPoly<F> a, MPoly<F> b) {
    while (!b.is_zero()) {
        auto r = divmod_univariate(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    F lc = a.leading().second;
    return lc.inv() * a;  // monic
}

struct RootCount {
    int degree = 0;
    bool squarefree = false;
};

/// Degree and squarefreeness of a univariate polynomial; squarefree of
/// degree d means d distinct roots over an algebraic closure (char 0 or p > d).
template <FieldElement F>
RootCount squarefree_root_count(const MPoly<F>& f) {
    if (f.nvars() != 1) throw ArityError("squarefree_root_count expects a univariate polynomial");
    if (f.is_zero()) throw std::invalid_argument("squarefree_root_count of zero polynomial");
    RootCount rc;
    rc.degree = f.total_degree();
    auto g = gcd_univariate(f, f.derivative(0));
    rc.squarefree = g.total_degree() == 0;
    return rc;
}

/// Exact multivariate division f / g (lex order); throws if g does not divide f.
template <FieldElement F>
MPoly<F> divide_exact(const MPoly<F>& f, const MPoly<F>& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    MPoly<F> q(f.nvars()), r = f;
    const auto& [eg, cg] = g.leading();
    F cg_inv = cg.inv();
    while (!r.is_zero()) {
        const auto [er, cr] = r.leading();
        Exponent e(er.size());
        for (std::size_t i = 0; i < er.size(); ++i) {
            if (er[i] < eg[i]) throw std::domain_error("divide_exact: divisor does not divide dividend");
            e[i] = static_cast<std::uint16_t>(er[i] - eg[i]);
        }
        MPoly<F> t = MPoly<F>::monomial(std::move(e), cr * cg_inv);
        q += t;
        r -= t * g;
    }
    return q;
}

}  // namespace hesse

#endif
