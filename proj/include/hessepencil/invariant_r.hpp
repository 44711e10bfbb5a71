#ifndef HESSEPENCIL_INVARIANT_R_HPP
#define HESSEPENCIL_INVARIANT_R_HPP

// The alternating trilinear invariant R of three ternary cubics, normalised by
// R(l^3, m^3, n^3) = det(l, m, n)^3, together with the matrix Rbar (linear in a,
// with b . Rbar(a) . c = R(b, a, c)) and the ten linear forms n(p_ij).

#include <hessepencil/forms.hpp>
#include <hessepencil/pluecker.hpp>

#include <array>
#include <string>
#include <vector>

namespace hesse {

/// coeff * [i,j,k], where [i,j,k] is the 3x3 determinant of slots i,j,k of (a,b,c).
struct BracketTerm {
    long coeff;
    int i, j, k;
};

/// R = -(sum of the terms); 9 brackets, 54 monomials.
inline const std::array<BracketTerm, 9>& r_brackets() {
    static const std::array<BracketTerm, 9> t{{{1, 9, 6, 0},
                                               {-3, 8, 7, 0},
                                               {-3, 9, 3, 1},
                                               {6, 8, 4, 1},
                                               {-3, 7, 5, 1},
                                               {3, 8, 3, 2},
                                               {-6, 7, 4, 2},
                                               {3, 6, 5, 2},
                                               {-6, 5, 4, 3}}};
    return t;
}

/// The commonly printed variant of the table, with the signs of [7,5,1] and
/// [6,5,2] reversed; kept to report the difference.
inline const std::array<BracketTerm, 9>& r_brackets_printed() {
    static const std::array<BracketTerm, 9> t = [] {
        auto c = r_brackets();
        c[4].coeff = 3;
        c[7].coeff = -3;
        return c;
    }();
    return t;
}

template <RingElement T>
T evaluate_R(const TernaryCubic<T>& a, const TernaryCubic<T>& b, const TernaryCubic<T>& c,
             const std::array<BracketTerm, 9>& table = r_brackets()) {
    T acc = a[0] - a[0];
    for (const auto& t : table) {
        std::array<std::array<T, 3>, 3> m{{{a[t.i], a[t.j], a[t.k]}, {b[t.i], b[t.j], b[t.k]}, {c[t.i], c[t.j], c[t.k]}}};
        acc = acc + a[0].from_rational(Rational(t.coeff)) * det3(m);
    }
    return -acc;
}

// ---------------------------------------------------------------- Rbar

/// Entry of Rbar: coeff * a_var (coeff 0 means the entry is zero).
struct LinearEntry {
    long coeff = 0;
    int var = 0;
};

using RbarTable = std::array<std::array<LinearEntry, 10>, 10>;

inline const RbarTable& rbar_table() {
    static const RbarTable t = [] {
        RbarTable r{};
        auto set = [&](int i, int j, long c, int v) { r[i][j] = LinearEntry{c, v}; };
        set(0, 6, -1, 9), set(0, 7, 3, 8), set(0, 8, -3, 7), set(0, 9, 1, 6);
        set(1, 3, 3, 9), set(1, 4, -6, 8), set(1, 5, 3, 7), set(1, 7, -3, 5), set(1, 8, 6, 4), set(1, 9, -3, 3);
        set(2, 3, -3, 8), set(2, 4, 6, 7), set(2, 5, -3, 6), set(2, 6, 3, 5), set(2, 7, -6, 4), set(2, 8, 3, 3);
        set(3, 1, -3, 9), set(3, 2, 3, 8), set(3, 4, 6, 5), set(3, 5, -6, 4), set(3, 8, -3, 2), set(3, 9, 3, 1);
        set(4, 1, 6, 8), set(4, 2, -6, 7), set(4, 3, -6, 5), set(4, 5, 6, 3), set(4, 7, 6, 2), set(4, 8, -6, 1);
        set(5, 1, -3, 7), set(5, 2, 3, 6), set(5, 3, 6, 4), set(5, 4, -6, 3), set(5, 6, -3, 2), set(5, 7, 3, 1);
        set(6, 0, 1, 9), set(6, 2, -3, 5), set(6, 5, 3, 2), set(6, 9, -1, 0);
        set(7, 0, -3, 8), set(7, 1, 3, 5), set(7, 2, 6, 4), set(7, 4, -6, 2), set(7, 5, -3, 1), set(7, 8, 3, 0);
        set(8, 0, 3, 7), set(8, 1, -6, 4), set(8, 2, -3, 3), set(8, 3, 3, 2), set(8, 4, 6, 1), set(8, 7, -3, 0);
        set(9, 0, -1, 6), set(9, 1, 3, 3), set(9, 3, -3, 1), set(9, 6, 1, 0);
        return r;
    }();
    return t;
}

/// Printed variant: entry (6,2) reads -a5 instead of -3a5.
inline const RbarTable& rbar_table_printed() {
    static const RbarTable t = [] {
        auto r = rbar_table();
        r[6][2] = LinearEntry{-1, 5};
        return r;
    }();
    return t;
}

template <RingElement T>
std::array<std::array<T, 10>, 10> rbar(const TernaryCubic<T>& a, const RbarTable& table = rbar_table()) {
    std::array<std::array<T, 10>, 10> m;
    T zero = a[0] - a[0];
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            const auto& e = table[i][j];
            m[i][j] = e.coeff == 0 ? zero : a[0].from_rational(Rational(e.coeff)) * a[e.var];
        }
    return m;
}

/// b . Rbar(a) . c
template <RingElement T>
T rbar_pairing(const TernaryCubic<T>& a, const TernaryCubic<T>& b, const TernaryCubic<T>& c,
               const RbarTable& table = rbar_table()) {
    auto m = rbar(a, table);
    T acc = a[0] - a[0];
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j)
            if (!m[i][j].is_zero()) acc = acc + b[i] * m[i][j] * c[j];
    return acc;
}

/// row vector v times Rbar(a)
template <RingElement T>
std::array<T, 10> row_times_rbar(const TernaryCubic<T>& v, const TernaryCubic<T>& a, const RbarTable& table = rbar_table()) {
    auto m = rbar(a, table);
    std::array<T, 10> out;
    for (int j = 0; j < 10; ++j) {
        T acc = a[0] - a[0];
        for (int i = 0; i < 10; ++i)
            if (!m[i][j].is_zero()) acc = acc + v[i] * m[i][j];
        out[j] = acc;
    }
    return out;
}

// ---------------------------------------------------------------- n-vector

/// coeff * p_ij
struct PluckerTerm {
    long coeff;
    int i, j;
};

/// The ten linear forms n(p_ij), in the printed order and signs.
inline const std::array<std::vector<PluckerTerm>, 10>& n_vector_table() {
    static const std::array<std::vector<PluckerTerm>, 10> t{{
        {{3, 7, 8}, {-1, 6, 9}},
        {{3, 5, 7}, {-6, 4, 8}, {3, 3, 9}},
        {{3, 5, 6}, {-6, 4, 7}, {3, 3, 8}},
        {{6, 4, 5}, {3, 2, 8}, {-3, 1, 9}},
        {{6, 3, 5}, {6, 2, 7}, {-6, 1, 8}},
        {{3, 2, 5}, {-1, 0, 9}},
        {{6, 3, 4}, {3, 2, 6}, {-3, 1, 7}},
        {{6, 2, 4}, {3, 1, 5}, {-3, 0, 8}},
        {{3, 2, 3}, {6, 1, 4}, {-3, 0, 7}},
        {{3, 1, 3}, {-1, 0, 6}},
    }};
    return t;
}

template <RingElement T>
std::array<T, 10> n_of(const PluckerVector<T>& v) {
    if (v.n != 9) throw std::invalid_argument("n_of: expected a line in P^9");
    std::array<T, 10> out;
    for (int k = 0; k < 10; ++k) {
        T acc = v.p[0] - v.p[0];
        for (const auto& t : n_vector_table()[k]) acc = acc + v.p[0].from_rational(Rational(t.coeff)) * v.at(t.i, t.j);
        out[k] = acc;
    }
    return out;
}

/// The n-forms as polynomials in the 45 Pluecker variables.
inline std::vector<MPoly<Rational>> n_forms() {
    std::vector<MPoly<Rational>> out;
    for (const auto& terms : n_vector_table()) {
        MPoly<Rational> f(45);
        for (const auto& t : terms) {
            Exponent e(45, 0);
            e[pair_index(9, t.i, t.j)] = 1;
            f.add_term(std::move(e), Rational(t.coeff));
        }
        out.push_back(std::move(f));
    }
    return out;
}

// ---------------------------------------------------------------- symbolic certificates

/// Generic cubics a, b, c in 30 variables (a_i = var i, b_i = var 10+i, c_i = var 20+i).
struct GenericTriple {
    TernaryCubic<MPoly<Rational>> a, b, c;
};

inline GenericTriple generic_triple() {
    return {generic_form<10>(30, 0), generic_form<10>(30, 10), generic_form<10>(30, 20)};
}

/// Coefficients of (l1 x + l2 y + l3 z)^3 for linear forms given by 3 ring elements.
template <RingElement T>
TernaryCubic<T> cube_of_linear(const T& l1, const T& l2, const T& l3) {
    TernaryCubic<T> f;
    const std::array<const T*, 3> l{&l1, &l2, &l3};
    for (std::size_t k = 0; k < 10; ++k) {
        const Exponent& e = cubic_monomials()[k];
        T t = l1.from_rational(Rational(1));
        for (int v = 0; v < 3; ++v)
            for (int r = 0; r < e[v]; ++r) t = t * *l[v];
        f[k] = t;
    }
    return f;
}

/// R(l^3, m^3, n^3) - det(l, m, n)^3 as a polynomial in the 9 entries.
inline MPoly<Rational> r_normalisation_residual(const std::array<BracketTerm, 9>& table = r_brackets()) {
    auto v = [](int i) { return MPoly<Rational>::variable(9, i, Rational(1)); };
    auto L = cube_of_linear(v(0), v(1), v(2));
    auto M = cube_of_linear(v(3), v(4), v(5));
    auto N = cube_of_linear(v(6), v(7), v(8));
    std::array<std::array<MPoly<Rational>, 3>, 3> m{{{v(0), v(1), v(2)}, {v(3), v(4), v(5)}, {v(6), v(7), v(8)}}};
    MPoly<Rational> d = det3(m);
    return evaluate_R(L, M, N, table) - d * d * d;
}

/// The ten entries of abar(a) . Rbar(a), with abar the Hessian coefficients.
inline std::array<MPoly<Rational>, 10> syzygy_residuals(const RbarTable& table = rbar_table()) {
    auto a = generic_form<10>();
    auto h = hessian_cubic(a);
    return row_times_rbar(h, a, table);
}

/// n(p(a, H(a))) for generic a: ten polynomials of degree 4 in a0..a9.
inline std::array<MPoly<Rational>, 10> n_hessian_residuals() {
    auto a = generic_form<10>();
    auto h = hessian_cubic(a);
    return n_of(pluecker_of(a.vec(), h.vec()));
}

/// The gradient of R in c: R(a, b, c) = sum_k grad[k](a, b) c_k.
inline std::array<MPoly<Rational>, 10> r_gradient_in_c() {
    auto g = generic_triple();
    MPoly<Rational> r = evaluate_R(g.a, g.b, g.c);
    std::array<MPoly<Rational>, 10> out;
    for (int k = 0; k < 10; ++k) out[k] = r.derivative(20 + k);
    return out;
}

/// How the printed n-forms relate to the gradient of R: n_k = sign[k] * grad[perm[k]].
struct SignedPermutation {
    bool found = false;
    std::array<int, 10> perm{};
    std::array<int, 10> sign{};
    bool is_identity() const {
        for (int k = 0; k < 10; ++k)
            if (perm[k] != k || sign[k] != 1) return false;
        return true;
    }
};

inline SignedPermutation n_vector_vs_gradient() {
    auto g = generic_triple();
    auto n = n_of(pluecker_of(g.a.vec(), g.b.vec()));
    auto grad = r_gradient_in_c();
    SignedPermutation sp;
    std::array<bool, 10> used{};
    for (int k = 0; k < 10; ++k) {
        bool hit = false;
        for (int m = 0; m < 10 && !hit; ++m) {
            if (used[m]) continue;
            if (n[k] == grad[m]) sp.perm[k] = m, sp.sign[k] = 1, hit = true;
            else if (n[k] == -grad[m]) sp.perm[k] = m, sp.sign[k] = -1, hit = true;
            if (hit) used[m] = true;
        }
        if (!hit) return sp;
    }
    sp.found = true;
    return sp;
}

}  // namespace hesse

#endif
