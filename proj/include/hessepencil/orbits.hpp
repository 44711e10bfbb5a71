#ifndef HESSEPENCIL_ORBITS_HPP
#define HESSEPENCIL_ORBITS_HPP

// Infinitesimal sl(3) / sl(2) action on forms, orbit dimensions of pencils,
// the catalog of orbit representatives, and epsilon-degenerations.

#include <hessepencil/varieties.hpp>

#include <array>
#include <string>
#include <vector>

namespace hesse {

template <FieldElement F>
using Mat3 = std::array<std::array<F, 3>, 3>;

/// Derivation action X.f = -grad(f) . (X v) on forms in `nv` variables,
/// returned as a polynomial. Requires trace(X) = 0.
template <FieldElement F>
MPoly<F> infinitesimal_action_poly(const std::vector<std::vector<F>>& X, const MPoly<F>& f, const F& like) {
    const std::size_t nv = f.nvars();
    if (X.size() != nv) throw std::invalid_argument("infinitesimal_action: matrix size does not match variable count");
    F tr = like.from_int(0);
    for (std::size_t i = 0; i < nv; ++i) tr = tr + X[i][i];
    if (!tr.is_zero()) throw std::invalid_argument("infinitesimal_action: matrix is not traceless");
    MPoly<F> out(nv);
    for (std::size_t i = 0; i < nv; ++i) {
        MPoly<F> xv(nv);  // (X v)_i
        for (std::size_t j = 0; j < nv; ++j) xv += MPoly<F>::constant(nv, X[i][j]) * MPoly<F>::variable(nv, j, like.from_int(1));
        out -= f.derivative(i) * xv;
    }
    return out;
}

template <FieldElement F>
TernaryCubic<F> infinitesimal_action(const std::vector<std::vector<F>>& X, const TernaryCubic<F>& f, const F& like) {
    return cubic_from_poly(infinitesimal_action_poly(X, to_poly(f), like), like);
}

template <FieldElement F>
BinaryQuartic<F> infinitesimal_action(const std::vector<std::vector<F>>& X, const BinaryQuartic<F>& f, const F& like) {
    return quartic_from_poly(infinitesimal_action_poly(X, to_poly(f), like), like);
}

/// {E_ij : i != j} followed by diag(1,-1,0,..), diag(0,1,-1,..), ...
template <FieldElement F>
std::vector<std::vector<std::vector<F>>> sl_basis(std::size_t n, const F& like) {
    std::vector<std::vector<std::vector<F>>> out;
    auto zero = [&] { return std::vector<std::vector<F>>(n, std::vector<F>(n, like.from_int(0))); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) {
                auto X = zero();
                X[i][j] = like.from_int(1);
                out.push_back(X);
            }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        auto X = zero();
        X[i][i] = like.from_int(1);
        X[i + 1][i + 1] = like.from_int(-1);
        out.push_back(X);
    }
    return out;
}

/// Dimension of the orbit of the line <f, g>: rank of the tangent vectors
/// (X f, X g) modulo the directions that stay inside span{f, g}.
template <FieldElement F>
std::size_t orbit_dimension(const Pencil<F>& pencil, const F& like) {
    const std::size_t L = pencil.f.size();
    if (L != 10 && L != 5) throw std::invalid_argument("orbit_dimension: expected cubics or quartics");
    {
        Matrix<F> m = Matrix<F>::from_rows({pencil.f, pencil.g});
        if (rank(m) != 2) throw std::domain_error("orbit_dimension: degenerate pencil");
    }
    const std::size_t nv = L == 10 ? 3 : 2;
    auto act = [&](const std::vector<std::vector<F>>& X, const std::vector<F>& v) {
        if (L == 10) return infinitesimal_action(X, TernaryCubic<F>::from_vec(v), like).vec();
        return infinitesimal_action(X, BinaryQuartic<F>::from_vec(v), like).vec();
    };
    Matrix<F> m(0, 0);
    std::vector<F> zero(L, like.from_int(0));
    auto cat = [&](const std::vector<F>& a, const std::vector<F>& b) {
        std::vector<F> r(a);
        r.insert(r.end(), b.begin(), b.end());
        return r;
    };
    for (const auto& X : sl_basis(nv, like)) m.append_row(cat(act(X, pencil.f), act(X, pencil.g)));
    m.append_row(cat(pencil.f, zero));
    m.append_row(cat(pencil.g, zero));
    m.append_row(cat(zero, pencil.f));
    m.append_row(cat(zero, pencil.g));
    return rank(std::move(m)) - 4;
}

// ---------------------------------------------------------------- catalog

struct OrbitRep {
    std::string name;
    std::string f, g;
    std::size_t dimension;
    std::size_t jacobian_rank;
    std::string table;  // where the representative is listed
};

inline const std::vector<OrbitRep>& cubic_orbit_catalog() {
    static const std::vector<OrbitRep> reps{
        {"<x^3+y^3+z^3,xyz>", "x^3+y^3+z^3", "x*y*z", 8, 36, "pencils of the form <f,H(f)>"},
        {"<y^2z-x^3-x^2z,3xy^2-x^2z+y^2z>", "y^2*z-x^3-x^2*z", "3*x*y^2-x^2*z+y^2*z", 7, 36, "pencils of the form <f,H(f)>"},
        {"<y^2z-x^3,xy^2>", "y^2*z-x^3", "x*y^2", 6, 36, "pencils of the form <f,H(f)>"},
        {"<x^3,xyz>", "x^3", "x*y*z", 6, 36, "pencils of the form <f,H(f)>"},
        {"<x(y^2+xz),x^3>", "x*(y^2+x*z)", "x^3", 5, 36, "pencils of the form <f,H(f)>"},
        {"<x^2y,x^3+y^3>", "x^2*y", "x^3+y^3", 5, 36, "pencils <x^2y,f>"},
        {"<x^3,xy^2>", "x^3", "x*y^2", 4, 36, "pencils <x^3,f>"},
        {"<x^2y,x^2z>", "x^2*y", "x^2*z", 4, 35, "pencils <x^2y,f>"},
        {"<x^3,x^2y>", "x^3", "x^2*y", 3, 35, "pencils <x^3,f>"},
    };
    return reps;
}

inline const std::vector<OrbitRep>& quartic_orbit_catalog() {
    static const std::vector<OrbitRep> reps{
        {"<x^4+y^4,x^2y^2>", "x^4+y^4", "x^2*y^2", 3, 6, "orbits in H3"},
        {"<x^4,x^2y^2>", "x^4", "x^2*y^2", 2, 6, "orbits in H3"},
        {"<x^4,x^3y>", "x^4", "x^3*y", 1, 6, "orbits in H3"},
    };
    return reps;
}

inline Pencil<Rational> rep_pencil(const OrbitRep& rep) {
    return parse_pencil(rep.f + ";" + rep.g, Rational(0)).first;
}

inline const OrbitRep& find_rep(const std::string& name) {
    for (const auto* cat : {&cubic_orbit_catalog(), &quartic_orbit_catalog()})
        for (const auto& r : *cat)
            if (r.name == name) return r;
    throw std::out_of_range("no orbit representative named " + name);
}

// ---------------------------------------------------------------- degenerations

struct DegenerationFamily {
    std::string target;  // OrbitRep name
    std::string f, g;    // cubics in x, y, z with parameter e (epsilon)
};

inline const std::vector<DegenerationFamily>& degeneration_families() {
    static const std::vector<DegenerationFamily> fams{
        {"<y^2z-x^3-x^2z,3xy^2-x^2z+y^2z>", "y^2*z-x^3-x^2*z+e*z^3", "3*x*y^2-x^2*z+y^2*z+e*(-9*x*z^2-3*z^3)"},
        {"<y^2z-x^3,xy^2>", "y^2*z-x^3-e*z^3", "x*y^2+3*e*x*z^2"},
        {"<x^3,xyz>", "x*(x^2+y*z)+e*(y^3+z^3)", "-6*x^3+2*x*y*z+e*(216*x*y*z*e-6*y^3-6*z^3)"},
        {"<x(y^2+xz),x^3>", "x*(y^2+x*z)+e*z^3", "x^3-e*(-3*y^2*z+3*x*z^2)"},
        {"<x^2y,x^3+y^3>", "x^3+2*y^3+(x+e*z)^3", "x*y*(x+e*z)"},
        {"<x^3,xy^2>", "x^3+y^3+(e*z-y)^3", "x*y*(e*z-y)"},
        {"<x^2y,x^2z>", "x*y*(x+e*y)", "z*(x^2+e*x*y+e^2*y^2)"},
        {"<x^3,x^2y>", "x^3", "x*y*(x+e*z)"},
    };
    return fams;
}

using EpsPoly = MPoly<Rational>;  // univariate in epsilon

/// A cubic whose coefficients are polynomials in epsilon.
inline TernaryCubic<EpsPoly> parse_eps_cubic(const std::string& text) {
    static const std::vector<std::string> names{"x", "y", "z", "e"};
    MPoly<Rational> p = parse_poly(text, names, Rational(0));
    TernaryCubic<EpsPoly> f;
    for (auto& a : f.a) a = EpsPoly(1);
    for (const auto& [e, c] : p.terms()) {
        Exponent xyz{e[0], e[1], e[2]};
        std::size_t k = 0;
        while (k < 10 && cubic_monomials()[k] != xyz) ++k;
        if (k == 10) throw ParseError("degeneration generator is not a cubic in x,y,z: " + text);
        f[k].add_term({e[3]}, c / Rational(kCubicWeights[k]));
    }
    return f;
}

struct EpsilonLimit {
    PluckerVector<EpsPoly> family;   // Pluecker coordinates as polynomials in epsilon
    int valuation = 0;               // smallest epsilon-order among nonzero coordinates
    PluckerVector<Rational> limit;   // leading coefficients
    Pencil<Rational> pencil;         // a spanning pair of the limit line
};

inline EpsilonLimit epsilon_limit(const DegenerationFamily& fam) {
    auto f = parse_eps_cubic(fam.f), g = parse_eps_cubic(fam.g);
    EpsilonLimit out;
    out.family = pluecker_of(f.vec(), g.vec());
    int val = -1;
    for (const auto& c : out.family.p) {
        if (c.is_zero()) continue;
        int low = c.terms().begin()->first[0];
        if (val < 0 || low < val) val = low;
    }
    if (val < 0) throw std::domain_error("epsilon_limit: Pluecker vector vanishes identically");
    out.valuation = val;
    out.limit.n = 9;
    for (const auto& c : out.family.p) out.limit.p.push_back(c.coefficient({static_cast<std::uint16_t>(val)}));
    out.pencil = generators_of(out.limit, Rational(0));
    return out;
}

/// n(p) for the family, as polynomials in epsilon; all zero iff the family lies in N identically.
inline std::array<EpsPoly, 10> family_n_residuals(const DegenerationFamily& fam) {
    auto f = parse_eps_cubic(fam.f), g = parse_eps_cubic(fam.g);
    return n_of(pluecker_of(f.vec(), g.vec()));
}

}  // namespace hesse

#endif
