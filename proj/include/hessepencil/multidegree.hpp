#ifndef HESSEPENCIL_MULTIDEGREE_HPP
#define HESSEPENCIL_MULTIDEGREE_HPP

// Multidegree coefficients of N (= H8) in G(1,9) and of H3 in G(1,4), each
// counted on a random sample that passes a genericity guard.

#include <hessepencil/hessegeom.hpp>
#include <hessepencil/random.hpp>
#include <hessepencil/reptheory.hpp>
#include <hessepencil/varieties.hpp>

#include <functional>
#include <string>
#include <vector>

namespace hesse {

struct Rejection {
    std::uint64_t seed;
    std::string reason;
};

/// Outcome of one coefficient check across several seeds.
struct CoefficientRun {
    std::string name;
    long expected = 0;
    std::vector<long> values;         // one per accepted sample
    std::vector<Rejection> rejected;  // samples discarded by the genericity guard
    bool exhausted = false;           // some seed never produced a generic sample
    bool ok() const {
        if (exhausted || values.empty()) return false;
        for (long v : values)
            if (v != expected) return false;
        return true;
    }
};

inline constexpr int kMaxResample = 8;

/// One sampling attempt: returns the count, or a rejection reason.
struct Attempt {
    std::optional<long> value;
    std::string reason;
};

/// Runs `trial` on `seeds` independent seeds derived from `base`, resampling
/// at most kMaxResample times per seed.
inline CoefficientRun run_trials(const std::string& name, long expected, std::uint64_t base, int seeds,
                                 const std::function<Attempt(Rng&)>& trial) {
    CoefficientRun run;
    run.name = name;
    run.expected = expected;
    Rng master(base);
    for (int s = 0; s < seeds; ++s) {
        std::uint64_t seed = master.split();
        Rng rng(seed);
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxResample && !accepted; ++attempt) {
            Attempt a = trial(rng);
            if (a.value) {
                run.values.push_back(*a.value);
                accepted = true;
            } else {
                run.rejected.push_back({seed, a.reason});
            }
        }
        if (!accepted) run.exhausted = true;
    }
    return run;
}

template <FieldElement F>
std::vector<F> random_vector(Rng& rng, std::size_t n, const F& like) {
    std::vector<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(like.from_rational(rng.small_rational()));
    return v;
}

// ---------------------------------------------------------------- beta1 / alpha1

/// Pencils in N through a random cubic: 1 when the kernel is exactly span{f, H(f)}.
inline Attempt beta1_trial(Rng& rng) {
    auto f = TernaryCubic<Rational>::from_vec(random_vector(rng, 10, Rational(0)));
    if (f.is_zero() || is_cone(f)) return {std::nullopt, "cone"};
    auto h = hessian_cubic(f);
    if (projectively_equal(f, h)) return {std::nullopt, "cubic equals its Hessian"};
    auto sys = through_point_system(f);
    if (sys.kernel_dim() != 2) return {std::nullopt, "kernel dimension " + std::to_string(sys.kernel_dim())};
    // the kernel must be the Hesse pencil itself
    Matrix<Rational> m(0, 0);
    for (const auto& k : sys.kernel) m.append_row(k);
    m.append_row(f.vec());
    m.append_row(h.vec());
    if (rank(m) != 2) return {std::nullopt, "kernel is not <f,H(f)>"};
    return {1, ""};
}

inline Attempt alpha1_trial(Rng& rng) {
    auto f = BinaryQuartic<Rational>::from_vec(random_vector(rng, 5, Rational(0)));
    if (f.is_zero() || is_cone(f)) return {std::nullopt, "fourth power"};
    auto h = hessian_quartic(f);
    if (h.is_zero() || projectively_equal(f, h)) return {std::nullopt, "degenerate Hessian"};
    auto sys = through_point_system(f);
    if (sys.kernel_dim() != 2) return {std::nullopt, "kernel dimension " + std::to_string(sys.kernel_dim())};
    return {1, ""};
}

// ---------------------------------------------------------------- beta2 / quartic beta

/// sum_i mu_i * hess_i(p + l v) as a univariate polynomial in l.
template <FieldElement F, std::size_t N, class HessFn>
MPoly<F> hyperplane_on_hessian_line(const std::vector<F>& p, const std::vector<F>& v, const std::vector<F>& mu,
                                    const F& like, HessFn hess) {
    Form<MPoly<F>, N> line;
    MPoly<F> l = MPoly<F>::variable(1, 0, like.from_int(1));
    for (std::size_t i = 0; i < N; ++i) line[i] = MPoly<F>::constant(1, p[i]) + MPoly<F>::constant(1, v[i]) * l;
    auto h = hess(line);
    MPoly<F> out(1);
    for (std::size_t i = 0; i < N; ++i) out += MPoly<F>::constant(1, mu[i]) * h[i];
    return out;
}

template <FieldElement F, std::size_t N, class HessFn>
Attempt hessian_degree_trial(Rng& rng, const F& like, int degree, HessFn hess) {
    auto p = random_vector(rng, N, like), v = random_vector(rng, N, like), mu = random_vector(rng, N, like);
    MPoly<F> c = hyperplane_on_hessian_line<F, N>(p, v, mu, like, hess);
    if (c.is_zero()) return {std::nullopt, "restriction vanishes"};
    auto rc = squarefree_root_count(c);
    if (rc.degree != degree) return {std::nullopt, "degree " + std::to_string(rc.degree)};
    if (!rc.squarefree) return {std::nullopt, "repeated root"};
    return {rc.degree, ""};
}

template <FieldElement F>
Attempt beta2_trial(Rng& rng, const F& like) {
    return hessian_degree_trial<F, 10>(rng, like, 3, [](const auto& f) { return hessian_cubic(f); });
}

template <FieldElement F>
Attempt quartic_beta_trial(Rng& rng, const F& like) {
    return hessian_degree_trial<F, 5>(rng, like, 2, [](const auto& f) { return hessian_quartic(f); });
}

// ---------------------------------------------------------------- beta3

/// Two hyperplane conditions on the Hessian over a random plane p + l v + m w,
/// as bivariate cubics in (l, m).
template <FieldElement F>
std::pair<MPoly<F>, MPoly<F>> plane_conditions(Rng& rng, const F& like) {
    auto p = random_vector(rng, 10, like), v = random_vector(rng, 10, like), w = random_vector(rng, 10, like);
    auto mu1 = random_vector(rng, 10, like), mu2 = random_vector(rng, 10, like);
    MPoly<F> l = MPoly<F>::variable(2, 0, like.from_int(1)), m = MPoly<F>::variable(2, 1, like.from_int(1));
    TernaryCubic<MPoly<F>> plane;
    for (std::size_t i = 0; i < 10; ++i)
        plane[i] = MPoly<F>::constant(2, p[i]) + MPoly<F>::constant(2, v[i]) * l + MPoly<F>::constant(2, w[i]) * m;
    auto h = hessian_cubic(plane);
    MPoly<F> c1(2), c2(2);
    for (std::size_t i = 0; i < 10; ++i) {
        c1 += MPoly<F>::constant(2, mu1[i]) * h[i];
        c2 += MPoly<F>::constant(2, mu2[i]) * h[i];
    }
    return {c1, c2};
}

/// Drop the eliminated variable from a resultant (it no longer occurs).
template <FieldElement F>
MPoly<F> as_univariate(const MPoly<F>& r, std::size_t keep) {
    MPoly<F> out(1);
    for (const auto& [e, c] : r.terms()) out.add_term({e[keep]}, c);
    return out;
}

template <FieldElement F>
Attempt beta3_trial(Rng& rng, const F& like) {
    auto [c1, c2] = plane_conditions(rng, like);
    if (c1.degree_in(1) < 1 || c2.degree_in(1) < 1) return {std::nullopt, "condition free of the second parameter"};
    MPoly<F> r = as_univariate(resultant(c1, c2, 1), 0);
    if (r.is_zero()) return {std::nullopt, "resultant vanishes"};
    auto rc = squarefree_root_count(r);
    if (rc.degree != 9) return {std::nullopt, "resultant degree " + std::to_string(rc.degree)};
    if (!rc.squarefree) return {std::nullopt, "repeated root"};
    return {rc.degree, ""};
}

// ---------------------------------------------------------------- beta4, beta5

template <FieldElement F>
std::vector<ProjectivePoint<F>> random_general_points(Rng& rng, std::size_t n, const F& like) {
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<ProjectivePoint<F>> pts;
        for (std::size_t i = 0; i < n; ++i) {
            auto v = random_vector(rng, 3, like);
            pts.push_back(ProjectivePoint<F>{{v[0], v[1], v[2]}});
        }
        try {
            require_general_position(pts);
            return pts;
        } catch (const std::domain_error&) {
        }
    }
    throw std::domain_error("no " + std::to_string(n) + " points in general position found after 10000 draws");
}

/// Triangles through six random general points; returns their number when pairwise distinct.
inline Attempt triangle_trial(Rng& rng) {
    auto pts = random_general_points(rng, 6, Rational(0));
    auto tris = triangles_through(pts, Rational(0));
    for (const auto& t : tris)
        for (const auto& p : pts)
            if (!evaluate_cubic(t, p).is_zero()) return {std::nullopt, "triangle misses a point"};
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (projectively_equal(tris[i], tris[j])) return {std::nullopt, "coincident triangles"};
    return {static_cast<long>(tris.size()), ""};
}

/// Configurations through four random general rational points, counted when
/// each is valid and the induced pencils are distinct, lie in N, and vanish at the points.
inline Attempt beta5_trial(Rng& rng) {
    const QOmega like(0);
    auto qpts = random_general_points(rng, 4, Rational(0));
    std::vector<ProjectivePoint<QOmega>> pts;
    for (const auto& p : qpts) pts.push_back({{QOmega(p.c[0], Rational(0)), QOmega(p.c[1], Rational(0)), QOmega(p.c[2], Rational(0))}});
    auto cfgs = configs_through(pts, like);
    std::vector<PluckerVector<QOmega>> seen;
    for (const auto& cfg : cfgs) {
        if (!verify_configuration(cfg.points).valid) return {std::nullopt, "transported configuration invalid"};
        for (const auto& p : pts)
            if (std::none_of(cfg.points.begin(), cfg.points.end(), [&](const auto& q) { return q == p; }))
                return {std::nullopt, "configuration misses a prescribed point"};
        auto pencil = pencil_through_configuration(cfg, like);
        if (!membership(n_system(), pencil, like)) return {std::nullopt, "induced pencil not in N"};
        for (const auto& gen : {pencil.f, pencil.g})
            for (const auto& p : pts)
                if (!evaluate_cubic(TernaryCubic<QOmega>::from_vec(gen), p).is_zero()) return {std::nullopt, "pencil misses a point"};
        auto v = pluecker_of(pencil);
        for (const auto& s : seen)
            if (projectively_equal(s.p, v.p)) return {std::nullopt, "two configurations induce the same pencil"};
        seen.push_back(v);
    }
    return {static_cast<long>(seen.size()), ""};
}

// ---------------------------------------------------------------- assembly

struct MultidegreeEntry {
    Partition partition;
    long schubert_degree = 0;
    long coefficient = 0;
    long expected = 0;
    std::string method;
    std::string status;  // pass | fail | assumed
    std::string detail;
};

struct MultidegreeReport {
    std::string variety;
    std::vector<MultidegreeEntry> entries;
    std::vector<CoefficientRun> runs;
    long total = 0;
    long expected_total = 0;
    bool ok() const {
        if (total != expected_total) return false;
        for (const auto& e : entries)
            if (e.status == "fail") return false;
        return true;
    }
};

struct MultidegreeOptions {
    std::uint64_t seed = 1;
    int seeds = 10;       // samples for the randomized coefficients
    int config_seeds = 10; // samples for the configuration count
    std::uint64_t mirror_prime = 10007;
};

inline std::string values_str(const CoefficientRun& r) {
    std::string s;
    for (long v : r.values) s += (s.empty() ? "" : ",") + std::to_string(v);
    return "[" + s + "]";
}

inline MultidegreeReport assemble_h8(const MultidegreeOptions& opt) {
    MultidegreeReport rep;
    rep.variety = "h8";
    rep.expected_total = 622;
    const Fp mirror(0, opt.mirror_prime);
    auto b1 = run_trials("beta1", 1, opt.seed ^ 0x11, opt.seeds, beta1_trial);
    auto b2 = run_trials("beta2", 3, opt.seed ^ 0x22, opt.seeds, [](Rng& r) { return beta2_trial(r, Rational(0)); });
    auto b2m = run_trials("beta2 mod p", 3, opt.seed ^ 0x23, opt.seeds, [&](Rng& r) { return beta2_trial(r, mirror); });
    auto b3 = run_trials("beta3", 9, opt.seed ^ 0x33, opt.seeds, [](Rng& r) { return beta3_trial(r, Rational(0)); });
    auto b3m = run_trials("beta3 mod p", 9, opt.seed ^ 0x34, opt.seeds, [&](Rng& r) { return beta3_trial(r, mirror); });
    auto tri = run_trials("triangles", 15, opt.seed ^ 0x44, opt.seeds, triangle_trial);
    auto b5 = run_trials("beta5", 6, opt.seed ^ 0x55, opt.config_seeds, beta5_trial);
    rep.runs = {b1, b2, b2m, b3, b3m, tri, b5};

    auto entry = [&](Partition p, long expected, const std::string& method, bool ok, long value, std::string detail) {
        MultidegreeEntry e;
        e.partition = p;
        e.schubert_degree = hook_length_degree(p);
        e.expected = expected;
        e.coefficient = value;
        e.method = method;
        e.status = ok ? "pass" : "fail";
        e.detail = std::move(detail);
        return e;
    };
    auto first = [](const CoefficientRun& r) { return r.values.empty() ? -1 : r.values.front(); };
    rep.entries.push_back(entry({8}, 1, "unique pencil <f,H(f)> through a random cubic", b1.ok(), first(b1), "values " + values_str(b1)));
    rep.entries.push_back(entry({7, 1}, 3, "squarefree cubic restriction of the Hessian to a line",
                                b2.ok() && b2m.ok(), first(b2), "values " + values_str(b2) + ", mod p " + values_str(b2m)));
    rep.entries.push_back(entry({6, 2}, 9, "squarefree degree-9 resultant on a plane", b3.ok() && b3m.ok(), first(b3),
                                "values " + values_str(b3) + ", mod p " + values_str(b3m)));
    long t = first(tri);
    auto e4 = entry({5, 3}, 12, "27 (Bezout 3*3*3) minus triangles through six points", tri.ok(), 27 - t,
                    "27 assumed from Bezout; triangles " + values_str(tri));
    if (tri.ok()) e4.status = "assumed";
    rep.entries.push_back(e4);
    rep.entries.push_back(entry({4, 4}, 6, "Hesse configurations through four points", b5.ok(), first(b5), "values " + values_str(b5)));
    for (const auto& e : rep.entries) rep.total += e.coefficient * e.schubert_degree;
    return rep;
}

inline MultidegreeReport assemble_h3(const MultidegreeOptions& opt) {
    MultidegreeReport rep;
    rep.variety = "h3";
    rep.expected_total = 5;
    const Fp mirror(0, opt.mirror_prime);
    auto a1 = run_trials("alpha", 1, opt.seed ^ 0x66, opt.seeds, alpha1_trial);
    auto b = run_trials("beta", 2, opt.seed ^ 0x77, opt.seeds, [](Rng& r) { return quartic_beta_trial(r, Rational(0)); });
    auto bm = run_trials("beta mod p", 2, opt.seed ^ 0x78, opt.seeds, [&](Rng& r) { return quartic_beta_trial(r, mirror); });
    rep.runs = {a1, b, bm};
    auto first = [](const CoefficientRun& r) { return r.values.empty() ? -1 : r.values.front(); };
    MultidegreeEntry e1{{3}, hook_length_degree({3}), first(a1), 1, "unique pencil <f,H(f)> through a random quartic",
                        a1.ok() ? "pass" : "fail", "values " + values_str(a1)};
    MultidegreeEntry e2{{2, 1}, hook_length_degree({2, 1}), first(b), 2, "squarefree quadratic restriction of the Hessian to a line",
                        b.ok() && bm.ok() ? "pass" : "fail", "values " + values_str(b) + ", mod p " + values_str(bm)};
    rep.entries = {e1, e2};
    for (const auto& e : rep.entries) rep.total += e.coefficient * e.schubert_degree;
    return rep;
}

}  // namespace hesse

#endif
