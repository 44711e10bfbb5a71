#ifndef HESSEPENCIL_VARIETIES_HPP
#define HESSEPENCIL_VARIETIES_HPP

// The line varieties H3 in G(1,4) and N in G(1,9): equations, membership,
// Jacobian rank at a point, and the linear system of pencils through a form.

#include <hessepencil/invariant_r.hpp>
#include <hessepencil/matrix.hpp>
#include <hessepencil/pluecker.hpp>

#include <optional>
#include <string>
#include <vector>

namespace hesse {

struct VarietySystem {
    std::string name;                       // "H3" or "N"
    std::size_t ambient = 0;                // 4 or 9
    std::vector<MPoly<Rational>> linear;    // in the Pluecker variables
    std::vector<MPoly<Rational>> quadrics;  // the three-term relations
    std::size_t expected_rank = 0;          // codimension in P^(C(n+1,2)-1)
    std::size_t nplu() const { return (ambient + 1) * ambient / 2; }
};

/// The three linear forms of H3: 3p23 - p14, 2p13 - p04, 3p12 - p03.
inline std::vector<MPoly<Rational>> h3_linear_forms() {
    auto p = [](std::size_t i, std::size_t j) { return MPoly<Rational>::variable(10, pair_index(4, i, j), Rational(1)); };
    const Rational two(2), three(3);
    return {three * p(2, 3) - p(1, 4), two * p(1, 3) - p(0, 4), three * p(1, 2) - p(0, 3)};
}

inline const VarietySystem& h3_system() {
    static const VarietySystem s{"H3", 4, h3_linear_forms(), pluecker_relations(4), 6};
    return s;
}

inline const VarietySystem& n_system() {
    static const VarietySystem s{"N", 9, n_forms(), pluecker_relations(9), 36};
    return s;
}

template <FieldElement F>
bool membership(const VarietySystem& sys, const Pencil<F>& pencil, const F& like) {
    if (pencil.f.size() != sys.ambient + 1) throw std::invalid_argument("pencil does not live in the ambient space of " + sys.name);
    auto v = pluecker_of(pencil);
    for (const auto& group : {&sys.linear, &sys.quadrics})
        for (const auto& q : *group)
            if (!evaluate_in(q, v.p, like).is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------- symbolic certificate

struct SymbolicResidual {
    std::string form;
    MPoly<Rational> residual;
};

/// Substitute p = p(a, H(a)) for a generic form a into each linear form.
inline std::vector<SymbolicResidual> symbolic_membership_residuals(const VarietySystem& sys) {
    std::vector<MPoly<Rational>> pv;
    if (sys.ambient == 4) {
        auto a = generic_form<5>();
        pv = pluecker_of(a.vec(), hessian_quartic(a).vec()).p;
    } else {
        auto a = generic_form<10>();
        pv = pluecker_of(a.vec(), hessian_cubic(a).vec()).p;
    }
    const auto names = pluecker_names(sys.ambient);
    std::vector<SymbolicResidual> out;
    const MPoly<Rational> like = MPoly<Rational>::constant(sys.ambient + 1, Rational(0));
    for (const auto& f : sys.linear) out.push_back({f.str(names), evaluate_in(f, pv, like)});
    return out;
}

/// Control: the coordinate p01 alone does not vanish on Hesse pencils.
inline SymbolicResidual symbolic_control_residual(const VarietySystem& sys) {
    MPoly<Rational> p01 = MPoly<Rational>::variable(sys.nplu(), 0, Rational(1));
    std::vector<MPoly<Rational>> pv;
    if (sys.ambient == 4) {
        auto a = generic_form<5>();
        pv = pluecker_of(a.vec(), hessian_quartic(a).vec()).p;
    } else {
        auto a = generic_form<10>();
        pv = pluecker_of(a.vec(), hessian_cubic(a).vec()).p;
    }
    return {"p01", evaluate_in(p01, pv, MPoly<Rational>::constant(sys.ambient + 1, Rational(0)))};
}

// ---------------------------------------------------------------- Jacobian

template <FieldElement F>
Matrix<F> jacobian_at(const VarietySystem& sys, const PluckerVector<F>& v, const F& like,
                      std::optional<std::size_t> quadric_limit = std::nullopt) {
    const std::size_t nv = sys.nplu();
    std::size_t nq = quadric_limit ? std::min(*quadric_limit, sys.quadrics.size()) : sys.quadrics.size();
    Matrix<F> J(sys.linear.size() + nq, nv, like.from_int(0));
    std::size_t r = 0;
    auto fill = [&](const MPoly<Rational>& q) {
        // rows of linear and quadratic forms: d/dp_k evaluated at v
        for (const auto& [e, c] : q.terms()) {
            for (std::size_t k = 0; k < nv; ++k) {
                if (e[k] == 0) continue;
                F t = like.from_rational(c) * like.from_int(e[k]);
                for (std::size_t m = 0; m < nv; ++m) {
                    unsigned pw = e[m] - (m == k ? 1 : 0);
                    for (unsigned s = 0; s < pw; ++s) t = t * v.p[m];
                }
                J(r, k) = J(r, k) + t;
            }
        }
        ++r;
    };
    for (const auto& q : sys.linear) fill(q);
    for (std::size_t i = 0; i < nq; ++i) fill(sys.quadrics[i]);
    return J;
}

struct JacobianReport {
    std::string pencil;
    std::size_t rows = 0, cols = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;  // rank at a smooth point (the codimension)
    std::vector<std::pair<std::uint64_t, std::size_t>> modular_ranks;  // cross-checks (prime, rank)
    bool smooth() const { return rank >= expected; }
    std::string verdict() const { return smooth() ? "smooth" : "singular"; }
};

/// Primes used for modular rank cross-checks.
inline const std::vector<std::uint64_t>& crosscheck_primes() {
    static const std::vector<std::uint64_t> p{1000003, 1000033, 1000037, 1000039, 1000081, 1000099,
                                              2147483647, 4294967291ull, 998244353, 1000000007};
    return p;
}

inline std::size_t exact_rank(const Matrix<Rational>& m) { return bareiss_rank(m); }
template <FieldElement F>
std::size_t exact_rank(const Matrix<F>& m) {
    return rank(m);
}

/// Rank of the Jacobian of all generators at the pencil. Over Q the rank is
/// fraction-free and cross-checked modulo two primes chosen by `prime_seed`.
template <FieldElement F>
JacobianReport jacobian_rank(const VarietySystem& sys, const Pencil<F>& pencil, const F& like,
                             std::uint64_t prime_seed = 0) {
    if (!membership(sys, pencil, like)) throw std::domain_error("jacobian_rank: pencil is not a point of " + sys.name);
    auto v = pluecker_of(pencil);
    Matrix<F> J = jacobian_at(sys, v, like);
    JacobianReport rep;
    rep.pencil = pencil_str(pencil);
    rep.rows = J.rows();
    rep.cols = J.cols();
    rep.expected = sys.expected_rank;
    rep.rank = exact_rank(J);
    if constexpr (std::is_same_v<F, Rational>) {
        const auto& primes = crosscheck_primes();
        std::size_t start = prime_seed % primes.size();
        for (std::size_t k = 0; k < primes.size() && rep.modular_ranks.size() < 2; ++k) {
            auto p = primes[(start + k) % primes.size()];
            if (auto r = rank_mod_p(J, p)) rep.modular_ranks.emplace_back(p, *r);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- pencils through a form

struct ThroughPointSystem {
    Matrix<Rational> matrix;                     // g -> linear forms of p(f, g)
    std::vector<std::vector<Rational>> kernel;   // basis
    std::size_t kernel_dim() const { return kernel.size(); }
};

namespace detail {
template <std::size_t N>
ThroughPointSystem through_point(const Form<Rational, N>& f, const std::vector<MPoly<Rational>>& forms) {
    if (f.is_zero()) throw std::invalid_argument("through_point_system: zero form");
    // p(f, g) is linear in g; column j is the image of the j-th unit vector.
    Matrix<Rational> M(forms.size(), N, Rational(0));
    for (std::size_t j = 0; j < N; ++j) {
        std::vector<Rational> g(N, Rational(0));
        g[j] = Rational(1);
        auto v = pluecker_of(f.vec(), g);
        for (std::size_t k = 0; k < forms.size(); ++k) M(k, j) = evaluate_in(forms[k], v.p, Rational(0));
    }
    ThroughPointSystem out;
    out.matrix = M;
    out.kernel = kernel(M, Rational(0));
    return out;
}
}  // namespace detail

inline ThroughPointSystem through_point_system(const TernaryCubic<Rational>& f) {
    return detail::through_point(f, n_forms());
}

inline ThroughPointSystem through_point_system(const BinaryQuartic<Rational>& f) {
    return detail::through_point(f, h3_linear_forms());
}

}  // namespace hesse

#endif
