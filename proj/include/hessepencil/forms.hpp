#ifndef HESSEPENCIL_FORMS_HPP
#define HESSEPENCIL_FORMS_HPP

// Binary quartics and ternary cubics in multinomial coefficient convention:
//   quartic  a0 x^4 + 4a1 x^3y + 6a2 x^2y^2 + 4a3 xy^3 + a4 y^4
//   cubic    a0 x^3 + 3a1 x^2y + 3a2 x^2z + 3a3 xy^2 + 6a4 xyz + 3a5 xz^2
//            + a6 y^3 + 3a7 y^2z + 3a8 yz^2 + a9 z^3
// Coefficients may live in any ring (scalars, or polynomials for symbolic checks).

#include <hessepencil/matrix.hpp>
#include <hessepencil/mpoly.hpp>
#include <hessepencil/parse.hpp>

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hesse {

inline constexpr std::array<long, 10> kCubicWeights{1, 3, 3, 3, 6, 3, 1, 3, 3, 1};
inline constexpr std::array<long, 5> kQuarticWeights{1, 4, 6, 4, 1};

/// Exponents (x,y,z) of the cubic convention slots.
inline const std::array<Exponent, 10>& cubic_monomials() {
    static const std::array<Exponent, 10> m{Exponent{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                            {1, 0, 2},         {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    return m;
}
inline const std::array<Exponent, 5>& quartic_monomials() {
    static const std::array<Exponent, 5> m{Exponent{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}};
    return m;
}

inline const std::vector<std::string>& xyz_names() {
    static const std::vector<std::string> n{"x", "y", "z"};
    return n;
}
inline const std::vector<std::string>& xy_names() {
    static const std::vector<std::string> n{"x", "y"};
    return n;
}

template <class T, std::size_t N>
struct Form {
    std::array<T, N> a{};

    static constexpr std::size_t size = N;
    T& operator[](std::size_t i) { return a[i]; }
    const T& operator[](std::size_t i) const { return a[i]; }
    std::vector<T> vec() const { return {a.begin(), a.end()}; }
    static Form from_vec(const std::vector<T>& v) {
        if (v.size() != N) throw std::invalid_argument("coefficient vector has wrong length");
        Form f;
        for (std::size_t i = 0; i < N; ++i) f.a[i] = v[i];
        return f;
    }
    bool is_zero() const {
        for (const auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }
    friend Form operator+(Form l, const Form& r) {
        for (std::size_t i = 0; i < N; ++i) l.a[i] = l.a[i] + r.a[i];
        return l;
    }
    friend Form operator-(Form l, const Form& r) {
        for (std::size_t i = 0; i < N; ++i) l.a[i] = l.a[i] - r.a[i];
        return l;
    }
    friend Form operator*(const T& s, Form f) {
        for (auto& c : f.a) c = s * c;
        return f;
    }
    friend bool operator==(const Form& l, const Form& r) {
        for (std::size_t i = 0; i < N; ++i)
            if (!(l.a[i] - r.a[i]).is_zero()) return false;
        return true;
    }
};

template <class T>
using TernaryCubic = Form<T, 10>;
template <class T>
using BinaryQuartic = Form<T, 5>;

// ---------------------------------------------------------------- conversions

template <FieldElement F>
MPoly<F> to_poly(const TernaryCubic<F>& f) {
    MPoly<F> p(3);
    for (std::size_t i = 0; i < 10; ++i) p.add_term(cubic_monomials()[i], f[i] * f[i].from_int(kCubicWeights[i]));
    return p;
}
template <FieldElement F>
MPoly<F> to_poly(const BinaryQuartic<F>& f) {
    MPoly<F> p(2);
    for (std::size_t i = 0; i < 5; ++i) p.add_term(quartic_monomials()[i], f[i] * f[i].from_int(kQuarticWeights[i]));
    return p;
}

namespace detail {
template <class Out, std::size_t N, FieldElement F>
Out form_from_poly(const MPoly<F>& p, const std::array<Exponent, N>& mons, const std::array<long, N>& w,
                   std::size_t nv, const F& like, const char* what) {
    if (p.nvars() != nv && !(p.is_zero() || p.nvars() == 0)) throw ArityError(std::string(what) + ": wrong variable count");
    Out out;
    for (auto& c : out.a) c = like.from_int(0);
    for (const auto& [e, c] : p.terms()) {
        std::size_t k = 0;
        while (k < N && mons[k] != e) ++k;
        if (k == N) throw std::invalid_argument(std::string(what) + ": polynomial is not homogeneous of the right degree");
        out.a[k] = c / c.from_int(w[k]);
    }
    return out;
}
}  // namespace detail

template <FieldElement F>
TernaryCubic<F> cubic_from_poly(const MPoly<F>& p, const F& like) {
    return detail::form_from_poly<TernaryCubic<F>>(p, cubic_monomials(), kCubicWeights, 3, like, "ternary cubic");
}
template <FieldElement F>
BinaryQuartic<F> quartic_from_poly(const MPoly<F>& p, const F& like) {
    return detail::form_from_poly<BinaryQuartic<F>>(p, quartic_monomials(), kQuarticWeights, 2, like, "binary quartic");
}

template <FieldElement F>
TernaryCubic<F> parse_cubic(std::string_view text, const F& like) {
    return cubic_from_poly(parse_poly(text, xyz_names(), like), like);
}
template <FieldElement F>
BinaryQuartic<F> parse_quartic(std::string_view text, const F& like) {
    return quartic_from_poly(parse_poly(text, xy_names(), like), like);
}

template <FieldElement F>
std::string cubic_str(const TernaryCubic<F>& f) {
    return to_poly(f).str(xyz_names());
}
template <FieldElement F>
std::string quartic_str(const BinaryQuartic<F>& f) {
    return to_poly(f).str(xy_names());
}

/// Map a form's coefficients into another ring.
template <class G, class T, std::size_t N, class Fn>
Form<G, N> map_form(const Form<T, N>& f, Fn&& fn) {
    Form<G, N> out;
    for (std::size_t i = 0; i < N; ++i) out.a[i] = fn(f.a[i]);
    return out;
}

template <FieldElement F, std::size_t N>
Form<F, N> embed_form(const Form<Rational, N>& f, const F& like) {
    return map_form<F>(f, [&](const Rational& q) { return like.from_rational(q); });
}

/// Generic form: coefficient i is the variable a_i of an N-variate ring.
template <std::size_t N>
Form<MPoly<Rational>, N> generic_form(std::size_t nvars = N, std::size_t offset = 0) {
    Form<MPoly<Rational>, N> f;
    for (std::size_t i = 0; i < N; ++i) f.a[i] = MPoly<Rational>::variable(nvars, offset + i, Rational(1));
    return f;
}

// ---------------------------------------------------------------- Hessians

/// Quartic Hessian, defined by the row
/// (-6a1^2+6a0a2, -3a1a2+3a0a3, -3a2^2+2a1a3+a0a4, -3a2a3+3a1a4, -6a3^2+6a2a4);
/// equal to the convention coefficients of det(second partials)/24.
template <RingElement T>
BinaryQuartic<T> hessian_quartic(const BinaryQuartic<T>& f) {
    const auto& a = f.a;
    auto k = [&](long n) { return a[0].from_rational(Rational(n)); };
    BinaryQuartic<T> h;
    h[0] = k(-6) * a[1] * a[1] + k(6) * a[0] * a[2];
    h[1] = k(-3) * a[1] * a[2] + k(3) * a[0] * a[3];
    h[2] = k(-3) * a[2] * a[2] + k(2) * a[1] * a[3] + a[0] * a[4];
    h[3] = k(-3) * a[2] * a[3] + k(3) * a[1] * a[4];
    h[4] = k(-6) * a[3] * a[3] + k(6) * a[2] * a[4];
    return h;
}

/// The ten Hessian coefficients of a generic cubic, as cubic polynomials in
/// a0..a9: det(second partials)/216 with each coefficient divided by its weight.
inline const std::array<MPoly<Rational>, 10>& hessian_cubic_generic() {
    static const std::array<MPoly<Rational>, 10> table = [] {
        // variables a0..a9, x, y, z
        const std::size_t n = 13;
        const Rational one(1);
        MPoly<Rational> f(n);
        for (std::size_t i = 0; i < 10; ++i) {
            Exponent e(n, 0);
            e[i] = 1;
            for (std::size_t v = 0; v < 3; ++v) e[10 + v] = cubic_monomials()[i][v];
            f.add_term(std::move(e), Rational(kCubicWeights[i]));
        }
        std::array<std::array<MPoly<Rational>, 3>, 3> m;
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m[i][j] = f.derivative(10 + i).derivative(10 + j);
        MPoly<Rational> det = det3(m);
        std::array<MPoly<Rational>, 10> out;
        for (auto& p : out) p = MPoly<Rational>(10);
        for (const auto& [e, c] : det.terms()) {
            Exponent xyz{e[10], e[11], e[12]};
            std::size_t k = 0;
            while (cubic_monomials()[k] != xyz) ++k;
            Exponent ae(e.begin(), e.begin() + 10);
            out[k].add_term(std::move(ae), c / Rational(216 * kCubicWeights[k]));
        }
        (void)one;
        return out;
    }();
    return table;
}

template <RingElement T>
TernaryCubic<T> hessian_cubic(const TernaryCubic<T>& f) {
    const auto& table = hessian_cubic_generic();
    TernaryCubic<T> h;
    std::vector<T> vals(f.a.begin(), f.a.end());
    for (std::size_t k = 0; k < 10; ++k) h[k] = evaluate_in(table[k], vals, f[0]);
    return h;
}

// ---------------------------------------------------------------- projective comparison

/// True iff both vectors are nonzero and all 2x2 minors vanish.
template <RingElement T>
bool projectively_equal(const std::vector<T>& u, const std::vector<T>& v) {
    if (u.size() != v.size()) throw std::invalid_argument("projectively_equal: length mismatch");
    bool uz = true, vz = true;
    for (const auto& c : u) uz = uz && c.is_zero();
    for (const auto& c : v) vz = vz && c.is_zero();
    if (uz || vz) return uz && vz;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (!(u[i] * v[j] - u[j] * v[i]).is_zero()) return false;
    return true;
}

template <RingElement T, std::size_t N>
bool projectively_equal(const Form<T, N>& f, const Form<T, N>& g) {
    return projectively_equal(f.vec(), g.vec());
}

// ---------------------------------------------------------------- special loci

/// The seven cubic equations in a0..a4 cutting out squares of quadrics:
/// coefficients of x^(6-k) y^k in det(f_x, f_y; H(f)_x, H(f)_y).
inline const std::array<MPoly<Rational>, 7>& sq_equations() {
    static const std::array<MPoly<Rational>, 7> eqs = [] {
        // variables a0..a4, x, y
        const std::size_t n = 7;
        auto f = generic_form<5>(n);
        auto h = hessian_quartic(f);
        auto as_form = [&](const BinaryQuartic<MPoly<Rational>>& q) {
            MPoly<Rational> p(n);
            for (std::size_t i = 0; i < 5; ++i) {
                Exponent e(n, 0);
                e[5] = quartic_monomials()[i][0];
                e[6] = quartic_monomials()[i][1];
                p += MPoly<Rational>::monomial(e, Rational(kQuarticWeights[i])) * q[i];
            }
            return p;
        };
        MPoly<Rational> F = as_form(f), H = as_form(h);
        MPoly<Rational> d = F.derivative(5) * H.derivative(6) - F.derivative(6) * H.derivative(5);
        std::array<MPoly<Rational>, 7> out;
        for (auto& p : out) p = MPoly<Rational>(5);
        for (const auto& [e, c] : d.terms()) {
            Exponent ae(e.begin(), e.begin() + 5);
            out[e[6]].add_term(std::move(ae), c);
        }
        return out;
    }();
    return eqs;
}

template <FieldElement F>
std::array<F, 7> evaluate_sq(const BinaryQuartic<F>& f) {
    std::array<F, 7> out;
    std::vector<F> vals(f.a.begin(), f.a.end());
    for (std::size_t k = 0; k < 7; ++k) out[k] = sq_equations()[k].evaluate(vals);
    return out;
}

template <FieldElement F>
bool is_cone(const TernaryCubic<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("is_cone: zero cubic");
    return hessian_cubic(f).is_zero();
}

/// Fourth powers of linear forms: catalecticant rows (a0..a3), (a1..a4) have rank 1.
template <FieldElement F>
bool is_cone(const BinaryQuartic<F>& f) {
    if (f.is_zero()) throw std::invalid_argument("is_cone: zero quartic");
    std::vector<F> r0{f[0], f[1], f[2], f[3]}, r1{f[1], f[2], f[3], f[4]};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            if (!(r0[i] * r1[j] - r0[j] * r1[i]).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- canonical families

/// The point at infinity of the quartic pencil x^4 + 6 lambda x^2y^2 + y^4 (the member x^2y^2).
struct Infinity {
    friend bool operator==(Infinity, Infinity) { return true; }
};

template <FieldElement F>
using QuarticParameter = std::variant<F, Infinity>;

/// lambda -> (1 - 3 lambda^2) / (6 lambda): the Hessian on the canonical quartic pencil.
template <FieldElement F>
QuarticParameter<F> quartic_pencil_parameter_map(const QuarticParameter<F>& lambda) {
    if (std::holds_alternative<Infinity>(lambda)) return Infinity{};
    const F& l = std::get<F>(lambda);
    if (l.is_zero()) throw std::domain_error("quartic pencil parameter 0: the Hessian of x^4+y^4 is x^2y^2, outside the affine chart");
    return (l.from_int(1) - l.from_int(3) * l * l) / (l.from_int(6) * l);
}

/// The polynomial 3 l^2 + 6 c l - 1 whose roots form the fiber over c.
template <FieldElement F>
MPoly<F> quartic_parameter_fiber_polynomial(const F& c) {
    MPoly<F> p(1);
    p.add_term({2}, c.from_int(3));
    p.add_term({1}, c.from_int(6) * c);
    p.add_term({0}, c.from_int(-1));
    return p;
}

enum class FamilyKind { quartic_lambda, cubic_t, cubic_6t };

template <FieldElement F>
BinaryQuartic<F> canonical_quartic(const F& lambda) {
    BinaryQuartic<F> f;
    for (auto& c : f.a) c = lambda.from_int(0);
    f[0] = f[4] = lambda.from_int(1);
    f[2] = lambda;
    return f;
}

/// x^3+y^3+z^3 - 3t xyz
template <FieldElement F>
TernaryCubic<F> canonical_cubic_t(const F& t) {
    TernaryCubic<F> f;
    for (auto& c : f.a) c = t.from_int(0);
    f[0] = f[6] = f[9] = t.from_int(1);
    f[4] = -t / t.from_int(2);
    return f;
}

/// x^3+y^3+z^3 + 6t xyz
template <FieldElement F>
TernaryCubic<F> canonical_cubic_6t(const F& t) {
    TernaryCubic<F> f;
    for (auto& c : f.a) c = t.from_int(0);
    f[0] = f[6] = f[9] = t.from_int(1);
    f[4] = t;
    return f;
}

/// Parameter values where the canonical member is singular.
template <FieldElement F>
bool canonical_parameter_excluded(FamilyKind kind, const F& v) {
    switch (kind) {
        case FamilyKind::quartic_lambda: {
            F d = v.from_int(9) * v * v - v.from_int(1);
            return d.is_zero();
        }
        case FamilyKind::cubic_t: return (v * v * v - v.from_int(1)).is_zero();
        case FamilyKind::cubic_6t: {
            // -3t = 6s, so t^3 = 1 becomes -8 s^3 = 1
            F s = v;
            return (v.from_int(-8) * s * s * s - v.from_int(1)).is_zero();
        }
    }
    return false;
}

// ---------------------------------------------------------------- Hessian preimages

/// One row of the description of H^{-1}(target) for the orbit representatives.
struct PreimageRow {
    std::string target;                     // cubic in x,y,z
    std::vector<std::string> parameters;    // family parameters (empty: fixed cubic)
    std::string family;                     // in x,y,z and parameters; empty: no preimage
    std::string constraint;                 // human-readable side condition
    std::string target_scaled;              // target multiplied through when it depends on parameters
    int dimension = -1;                     // dim of the closure of the preimage, -1 for empty
};

inline const std::vector<PreimageRow>& hessian_preimage_families() {
    static const std::vector<PreimageRow> rows{
        {"x^3", {"a0", "a1", "a2", "s", "t"}, "a0*x^3+3*a1*x^2*y+3*a2*x^2*z+3*s^2*x*y^2+6*s*t*x*y*z+3*t^2*x*z^2",
         "a4^2 = a3*a5 (parametrised a3=s^2, a4=s*t, a5=t^2), a2^2*a3-2*a1*a2*a4+a1^2*a5 != 0", "", 4},
        {"x*y*(x+y)", {}, "", "empty", "", -1},
        {"x^2*y", {"a0", "a1", "a2", "a6"}, "a0*x^3+3*a1*x^2*y+3*a2*x^2*z+a6*y^3", "a2*a6 != 0", "", 3},
        {"x*(x^2+y*z)", {}, "x^3-3*x*y*z", "", "", 0},
        {"y*(x^2+y*z)", {}, "", "empty", "", -1},
        {"y^2*z-x^3-x^2*z", {}, "-2*x^3-3*x^2*z+3*x*y^2+3*y^2*z", "", "", 0},
        {"y^2*z-x^3", {}, "", "empty", "", -1},
        {"x^3+y^3+z^3-3*t*x*y*z", {"l"}, "x^3+y^3+z^3-3*l*x*y*z", "4 - l^3 = 3 l^2 t, t^3 != 1",
         "3*l^2*(x^3+y^3+z^3)-3*(4-l^3)*x*y*z", 0},
        {"x*y*z", {"a0", "a6", "a9"}, "a0*x^3+a6*y^3+a9*z^3", "a0*a6*a9 != 0, and xyz itself", "", 2},
    };
    return rows;
}

struct PreimageCheck {
    std::string target;
    bool empty_row = false;
    bool proportional = false;  // H(family) is projectively the target, identically in the parameters
    std::string hessian;        // H(family) printed
};

/// Verifies each non-empty row symbolically: the cubic H(g), with coefficients
/// polynomial in the parameters, is proportional to the target.
inline std::vector<PreimageCheck> check_hessian_preimages() {
    std::vector<PreimageCheck> out;
    for (const auto& row : hessian_preimage_families()) {
        PreimageCheck c;
        c.target = row.target;
        if (row.family.empty()) {
            c.empty_row = true;
            out.push_back(c);
            continue;
        }
        std::vector<std::string> names = xyz_names();
        names.insert(names.end(), row.parameters.begin(), row.parameters.end());
        const std::size_t np = row.parameters.size();
        // Coefficient ring: polynomials in the parameters.
        const MPoly<Rational> one = MPoly<Rational>::constant(np, Rational(1));
        auto split = [&](const std::string& text) {
            MPoly<Rational> p = parse_poly(text, names, Rational(0));
            TernaryCubic<MPoly<Rational>> f;
            for (auto& a : f.a) a = MPoly<Rational>(np);
            for (const auto& [e, coef] : p.terms()) {
                Exponent xyz{e[0], e[1], e[2]};
                std::size_t k = 0;
                while (k < 10 && cubic_monomials()[k] != xyz) ++k;
                if (k == 10) throw std::logic_error("table row is not a cubic in x,y,z");
                Exponent pe(e.begin() + 3, e.end());
                f[k].add_term(pe, coef / Rational(kCubicWeights[k]));
            }
            return f;
        };
        auto g = split(row.family);
        auto target = split(row.target_scaled.empty() ? row.target : row.target_scaled);
        auto h = hessian_cubic(g);
        c.proportional = projectively_equal(h, target);
        std::string s;
        for (std::size_t k = 0; k < 10; ++k)
            if (!h[k].is_zero()) {
                std::vector<std::string> pn(row.parameters);
                s += (s.empty() ? "" : ", ") + std::string("a") + std::to_string(k) + "=" + h[k].str(pn);
            }
        c.hessian = s.empty() ? "0" : s;
        (void)one;
        out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- Hesse closure

/// The 3x3 minors of [f; H(f); H(mu f + lambda H(f))] as polynomials in (mu, lambda).
template <std::size_t N, class HessFn>
std::vector<MPoly<Rational>> hesse_closure_minors(const Form<Rational, N>& f, HessFn hess) {
    const std::size_t nv = 2;  // mu, lambda
    auto lift = [&](const Form<Rational, N>& g) {
        return map_form<MPoly<Rational>>(g, [&](const Rational& q) { return MPoly<Rational>::constant(nv, q); });
    };
    auto F = lift(f);
    auto H = lift(hess(f));
    MPoly<Rational> mu = MPoly<Rational>::variable(nv, 0, Rational(1));
    MPoly<Rational> la = MPoly<Rational>::variable(nv, 1, Rational(1));
    Form<MPoly<Rational>, N> member;
    for (std::size_t i = 0; i < N; ++i) member[i] = mu * F[i] + la * H[i];
    auto HH = hess(member);
    std::vector<MPoly<Rational>> minors;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = i + 1; j < N; ++j)
            for (std::size_t k = j + 1; k < N; ++k) {
                std::array<std::array<MPoly<Rational>, 3>, 3> m{{{F[i], F[j], F[k]}, {H[i], H[j], H[k]}, {HH[i], HH[j], HH[k]}}};
                minors.push_back(det3(m));
            }
    return minors;
}

}  // namespace hesse

#endif
