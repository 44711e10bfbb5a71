#ifndef HESSEPENCIL_SUITES_HPP
#define HESSEPENCIL_SUITES_HPP

// The check suites behind the command-line tool. Each suite returns a list of
// CheckResult; user input (pencils, point files, fields) is validated before
// any check runs and reported as InputError.

#include <hessepencil/multidegree.hpp>
#include <hessepencil/orbits.hpp>
#include <hessepencil/report.hpp>

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace hesse {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::optional<FieldSpec> field;  // unset: each suite picks its natural field
    std::optional<std::string> pencil;
    std::optional<std::string> points;
    std::string variety = "h8";
    int samples = 10;  // seeds per randomized coefficient
};

struct Outcome {
    Status status = Status::fail;
    std::string expected, actual;
};

inline Outcome outcome(bool ok, std::string expected, std::string actual) {
    return {ok ? Status::pass : Status::fail, std::move(expected), std::move(actual)};
}

class Collector {
public:
    explicit Collector(std::string suite) : suite_(std::move(suite)) {}

    void run(const std::string& id, const std::string& claim, const std::function<Outcome()>& fn) {
        CheckResult c;
        c.suite = suite_;
        c.id = id;
        c.claim = claim;
        Outcome o;
        c.runtime_ms = time_ms([&] {
            try {
                o = fn();
            } catch (const std::exception& e) {
                o = {Status::fail, "no error", std::string("error: ") + e.what()};
            }
        });
        c.status = o.status;
        c.expected = o.expected;
        c.actual = o.actual;
        out_.push_back(std::move(c));
    }

    std::vector<CheckResult> take() { return std::move(out_); }

private:
    std::string suite_;
    std::vector<CheckResult> out_;
};

namespace detail {

inline std::string join(const std::vector<std::string>& v, const std::string& sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
    return s;
}

template <class T>
std::string join_num(const std::vector<T>& v) {
    std::vector<std::string> s;
    for (const auto& x : v) s.push_back(std::to_string(x));
    return "(" + join(s) + ")";
}

inline std::size_t nonzero_count(const auto& polys) {
    std::size_t n = 0;
    for (const auto& p : polys) n += !p.is_zero();
    return n;
}

template <FieldElement F>
std::vector<F> random_ints(Rng& rng, std::size_t n, const F& like) {
    std::vector<F> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(like.from_int(rng.between(-50, 50)));
    return v;
}

inline TernaryCubic<Rational> cubic(const std::string& s) { return parse_cubic(s, Rational(0)); }
inline BinaryQuartic<Rational> quartic(const std::string& s) { return parse_quartic(s, Rational(0)); }

/// Smooth random rational cubic (nonzero Hessian, not proportional to it).
inline TernaryCubic<Rational> random_smooth_cubic(Rng& rng) {
    for (;;) {
        auto f = TernaryCubic<Rational>::from_vec(random_vector(rng, 10, Rational(0)));
        if (f.is_zero() || is_cone(f)) continue;
        if (through_point_system(f).kernel_dim() == 2) return f;
    }
}

inline BinaryQuartic<Rational> random_smooth_quartic(Rng& rng) {
    for (;;) {
        auto f = BinaryQuartic<Rational>::from_vec(random_vector(rng, 5, Rational(0)));
        if (f.is_zero() || is_cone(f)) continue;
        if (through_point_system(f).kernel_dim() == 2) return f;
    }
}

/// det of the second partials of the quartic, as the convention vector of a quartic.
inline BinaryQuartic<MPoly<Rational>> quartic_hessian_by_determinant(const BinaryQuartic<MPoly<Rational>>& f, std::size_t nparams) {
    const std::size_t n = nparams + 2;
    auto lift = [&](const MPoly<Rational>& c) {
        MPoly<Rational> out(n);
        for (const auto& [e, q] : c.terms()) {
            Exponent x(e);
            x.resize(n, 0);
            out.add_term(std::move(x), q);
        }
        return out;
    };
    MPoly<Rational> F(n);
    for (std::size_t i = 0; i < 5; ++i) {
        Exponent e(n, 0);
        e[nparams] = quartic_monomials()[i][0];
        e[nparams + 1] = quartic_monomials()[i][1];
        F += MPoly<Rational>::monomial(e, Rational(kQuarticWeights[i])) * lift(f[i]);
    }
    const std::size_t X = nparams, Y = nparams + 1;
    MPoly<Rational> d = F.derivative(X).derivative(X) * F.derivative(Y).derivative(Y) -
                        F.derivative(X).derivative(Y) * F.derivative(X).derivative(Y);
    BinaryQuartic<MPoly<Rational>> h;
    for (auto& c : h.a) c = MPoly<Rational>(nparams);
    for (const auto& [e, c] : d.terms()) {
        Exponent pe(e.begin(), e.begin() + nparams);
        std::size_t k = e[Y];
        h[k].add_term(std::move(pe), c / Rational(kQuarticWeights[k]));
    }
    return h;
}

inline MPoly<Rational> cubic_poly_hessian_by_determinant(const TernaryCubic<Rational>& f) {
    MPoly<Rational> F = to_poly(f);
    std::array<std::array<MPoly<Rational>, 3>, 3> m;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) m[i][j] = F.derivative(i).derivative(j);
    return det3(m);
}

template <FieldElement F>
Pencil<F> parse_user_pencil(const std::string& text, const F& like, FormKind* kind = nullptr) {
    try {
        auto [p, k] = parse_pencil(text, like);
        pluecker_of(p);  // rejects degenerate pencils
        if (kind) *kind = k;
        return p;
    } catch (const std::exception& e) {
        throw InputError(std::string("--pencil: ") + e.what());
    }
}

template <FieldElement F>
std::vector<ProjectivePoint<F>> read_user_points(const std::string& path, std::size_t count, const F& like) {
    std::vector<ProjectivePoint<F>> pts;
    try {
        pts = read_points_file(path, like);
    } catch (const std::exception& e) {
        throw InputError(std::string("--points: ") + e.what());
    }
    if (pts.size() != count)
        throw InputError("--points: expected " + std::to_string(count) + " points, found " + std::to_string(pts.size()));
    try {
        require_general_position(pts);
    } catch (const std::exception& e) {
        throw InputError(std::string("--points: ") + e.what());
    }
    return pts;
}

}  // namespace detail

// ---------------------------------------------------------------- identities

inline std::vector<CheckResult> identities_suite(const SuiteOptions& opt) {
    using namespace detail;
    Collector c("identities");
    const Rational Q(0);

    c.run("R.normalisation", "R(l^3,m^3,n^3) = det(l,m,n)^3 identically in the 9 entries", [] {
        auto r = r_normalisation_residual();
        return outcome(r.is_zero(), "0", r.is_zero() ? "0" : std::to_string(r.size()) + " residual terms");
    });
    c.run("R.fermat", "R(x^3,y^3,z^3) = 1", [&] {
        auto v = evaluate_R(cubic("x^3"), cubic("y^3"), cubic("z^3"));
        return outcome(v == Rational(1), "1", v.str());
    });
    c.run("R.printed_signs", "the displayed bracket expansion of R, taken verbatim, is normalised", [] {
        auto r = r_normalisation_residual(r_brackets_printed());
        if (r.is_zero()) return outcome(true, "0", "0");
        return Outcome{Status::flagged, "0",
                       std::to_string(r.size()) +
                           " residual terms; corrected signs: -3 at a7^a5^a1 and +3 at a6^a5^a2 (printed +3 and -3)"};
    });
    c.run("R.monomials", "R(a,b,c) expands to 54 monomials", [] {
        auto g = generic_triple();
        auto r = evaluate_R(g.a, g.b, g.c);
        return outcome(r.size() == 54, "54", std::to_string(r.size()));
    });
    c.run("R.alternating", "R(a,b,c) = -R(b,a,c) = -R(a,c,b) and R(a,a,c) = 0", [] {
        auto g = generic_triple();
        auto r = evaluate_R(g.a, g.b, g.c);
        bool ok = r == -evaluate_R(g.b, g.a, g.c) && r == -evaluate_R(g.a, g.c, g.b) && evaluate_R(g.a, g.a, g.c).is_zero();
        return outcome(ok, "alternating", ok ? "alternating" : "not alternating");
    });
    c.run("Rbar.syzygy", "all 10 entries of H(a).Rbar(a) vanish identically in a0..a9", [] {
        auto n = nonzero_count(syzygy_residuals());
        return outcome(n == 0, "0 nonzero entries", std::to_string(n) + " nonzero entries");
    });
    c.run("Rbar.printed_entry", "the displayed Rbar matrix, taken verbatim, gives syzygies", [] {
        auto n = nonzero_count(syzygy_residuals(rbar_table_printed()));
        if (n == 0) return outcome(true, "0 nonzero entries", "0 nonzero entries");
        return Outcome{Status::flagged, "0 nonzero entries",
                       std::to_string(n) + " nonzero entry; entry (6,2) must be -3a5 (printed -a5)"};
    });
    c.run("Rbar.pairing", "b.Rbar(a).c = R(b,a,c) in 30 variables", [] {
        auto g = generic_triple();
        bool ok = rbar_pairing(g.a, g.b, g.c) == evaluate_R(g.b, g.a, g.c);
        return outcome(ok, "equal", ok ? "equal" : "different");
    });
    c.run("n.hessian", "n(p(f,H(f))) = 0 identically in a0..a9", [] {
        auto n = nonzero_count(n_hessian_residuals());
        return outcome(n == 0, "0 nonzero entries", std::to_string(n) + " nonzero entries");
    });
    c.run("n.gradient", "n(p(a,b)).c = R(a,b,c)", [] {
        auto sp = n_vector_vs_gradient();
        if (!sp.found) return outcome(false, "n_k = +-dR/dc_perm(k)", "no signed permutation relates n to dR/dc");
        if (sp.is_identity()) return outcome(true, "n = dR/dc", "n = dR/dc");
        std::vector<std::string> s;
        for (int k = 0; k < 10; ++k) s.push_back((sp.sign[k] < 0 ? "-" : "+") + std::string("g") + std::to_string(sp.perm[k]));
        return Outcome{Status::flagged, "n = dR/dc",
                       "n = (" + join(s) + ") with g = dR/dc; same span, so N is unchanged"};
    });
    c.run("n.examples", "n(<x^3+y^3+z^3,xyz>) = 0, n(<x^3,x^2y>) = 0, last entry of n(<x^3,y^3>) = -1", [] {
        auto nv = [](const char* f, const char* g) { return n_of(pluecker_of(cubic(f).vec(), cubic(g).vec())); };
        auto a = nv("x^3+y^3+z^3", "x*y*z"), b = nv("x^3", "x^2*y"), d = nv("x^3", "y^3");
        bool ok = nonzero_count(a) == 0 && nonzero_count(b) == 0 && d[9] == Rational(-1);
        return outcome(ok, "0, 0, -1", std::to_string(nonzero_count(a)) + " nonzero, " + std::to_string(nonzero_count(b)) +
                                           " nonzero, " + d[9].str());
    });

    // Hessians
    c.run("quartic.hessian_determinant", "the quartic Hessian row equals det(second partials)/24 identically", [] {
        auto f = generic_form<5>();
        auto d = quartic_hessian_by_determinant(f, 5);
        auto h = hessian_quartic(f);
        bool ok = true;
        for (std::size_t i = 0; i < 5; ++i) ok = ok && d[i] == Rational(24) * h[i];
        return outcome(ok, "det = 24 H", ok ? "det = 24 H" : "mismatch");
    });
    c.run("quartic.hessian_family", "H(x^4+6l x^2y^2+y^4) = 6l(x^4+y^4) + 6(1-3l^2)x^2y^2", [] {
        BinaryQuartic<MPoly<Rational>> f;
        for (auto& a : f.a) a = MPoly<Rational>(1);
        f[0] = f[4] = MPoly<Rational>::constant(1, Rational(1));
        f[2] = MPoly<Rational>::variable(1, 0, Rational(1));
        auto h = hessian_quartic(f);
        std::vector<std::string> names{"l"};
        std::string got = h[0].str(names) + "," + h[1].str(names) + "," + h[2].str(names) + "," + h[3].str(names) + "," + h[4].str(names);
        return outcome(got == "6*l,0,-3*l^2+1,0,6*l", "6*l,0,-3*l^2+1,0,6*l", got);
    });
    c.run("quartic.hessian_examples", "H(x^4) = 0, H(x^2y^2) ~ x^2y^2, H(x^3y) ~ x^4", [] {
        auto h1 = hessian_quartic(quartic("x^4")), h2 = hessian_quartic(quartic("x^2*y^2")), h3 = hessian_quartic(quartic("x^3*y"));
        bool ok = h1.is_zero() && projectively_equal(h2, quartic("x^2*y^2")) && projectively_equal(h3, quartic("x^4"));
        return outcome(ok, "0, x^2y^2, x^4", quartic_str(h1) + ", " + quartic_str(h2) + ", " + quartic_str(h3));
    });
    c.run("quartic.hessian_table_entry", "H(x^4+x^2y^2) ~ 6x^4-x^2y^2 as listed in the quartic orbit table", [] {
        auto h = hessian_quartic(quartic("x^4+x^2*y^2"));
        bool derived = projectively_equal(h, quartic("2*x^4-x^2*y^2"));
        bool printed = projectively_equal(h, quartic("6*x^4-x^2*y^2"));
        if (printed) return outcome(true, "6x^4-x^2y^2", quartic_str(h));
        if (!derived) return outcome(false, "2x^4-x^2y^2", quartic_str(h));
        return Outcome{Status::flagged, "6x^4-x^2y^2", quartic_str(h) + " ~ 2x^4-x^2y^2"};
    });
    c.run("cubic.hessian_determinant", "H(f) = det(second partials)/216 for 10 random cubics", [&] {
        Rng rng(opt.seed ^ 0xc0be);
        for (int t = 0; t < 10; ++t) {
            auto f = TernaryCubic<Rational>::from_vec(random_vector(rng, 10, Q));
            if (!(cubic_poly_hessian_by_determinant(f) == Rational(216) * to_poly(hessian_cubic(f))))
                return outcome(false, "equal", "mismatch at " + cubic_str(f));
        }
        return outcome(true, "equal", "equal");
    });
    c.run("cubic.hessian_examples", "H(x^3+y^3+z^3) = xyz (a4 = 1/6), H(xyz) ~ xyz, H(x^3) = 0", [] {
        auto h1 = hessian_cubic(cubic("x^3+y^3+z^3")), h2 = hessian_cubic(cubic("x*y*z")), h3 = hessian_cubic(cubic("x^3"));
        bool ok = h1 == cubic("x*y*z") && projectively_equal(h2, cubic("x*y*z")) && h3.is_zero();
        return outcome(ok, "a4 = 1/6, xyz, 0", "a4 = " + h1[4].str() + ", " + cubic_str(h2) + ", " + cubic_str(h3));
    });
    c.run("cones", "x^3 and (x+y)^4 are cones, x^3+y^3+z^3 and x^4+y^4 are not", [] {
        bool ok = is_cone(cubic("x^3")) && is_cone(quartic("(x+y)^4")) && !is_cone(cubic("x^3+y^3+z^3")) &&
                  !is_cone(quartic("x^4+y^4"));
        return outcome(ok, "true,true,false,false", ok ? "true,true,false,false" : "mismatch");
    });
    c.run("sq.equations", "the 7 cubics vanish on (x^2+y^2)^2 and x^4 but not on x^4+y^4", [] {
        auto all_zero = [](const BinaryQuartic<Rational>& f) {
            auto v = evaluate_sq(f);
            return std::all_of(v.begin(), v.end(), [](const Rational& q) { return q.is_zero(); });
        };
        bool a = all_zero(quartic("(x^2+y^2)^2")), b = all_zero(quartic("x^4")), d = all_zero(quartic("x^4+y^4"));
        bool degree = std::all_of(sq_equations().begin(), sq_equations().end(),
                                  [](const auto& p) { return p.is_zero() || (p.is_homogeneous() && p.total_degree() == 3); });
        return outcome(a && b && !d && degree, "vanish, vanish, not all vanish",
                       std::string(a ? "vanish" : "not all vanish") + ", " + (b ? "vanish" : "not all vanish") + ", " +
                           (d ? "vanish" : "not all vanish"));
    });
    c.run("quartic.parameter_map", "l -> (1-3l^2)/(6l) is the Hessian on x^4+6l x^2y^2+y^4, 2:1, fixed points +-1/3 and infinity", [&] {
        using QP = QuarticParameter<Rational>;
        auto img = [](const Rational& l) { return std::get<Rational>(quartic_pencil_parameter_map(QP{l})); };
        if (!(img(Rational(1)) == Rational(-1, 3))) return outcome(false, "-1/3 at l = 1", img(Rational(1)).str());
        bool fixed = img(Rational(1, 3)) == Rational(1, 3) && img(Rational(-1, 3)) == Rational(-1, 3) &&
                     std::holds_alternative<Infinity>(quartic_pencil_parameter_map(QP{Infinity{}}));
        if (!fixed) return outcome(false, "fixed points 1/3, -1/3, infinity", "not fixed");
        Rng rng(opt.seed ^ 0x9a4);
        for (int t = 0; t < 10; ++t) {
            Rational l = rng.small_nonzero();
            if (canonical_parameter_excluded(FamilyKind::quartic_lambda, l)) continue;
            Rational m = img(l);
            if (!projectively_equal(hessian_quartic(canonical_quartic(l)), canonical_quartic(m)) && !m.is_zero())
                return outcome(false, "H(f_l) ~ f_phi(l)", "mismatch at l = " + l.str());
            auto fiber = quartic_parameter_fiber_polynomial(m);
            auto rc = squarefree_root_count(fiber);
            if (!fiber.evaluate(std::vector<Rational>{l}).is_zero() || rc.degree != 2 || !rc.squarefree)
                return outcome(false, "fiber of 2 points", "fiber check failed at l = " + l.str());
        }
        return outcome(true, "map, 2:1, fixed points", "map, 2:1, fixed points");
    });
    for (const auto& pc : check_hessian_preimages()) {
        std::string target = pc.target;
        c.run("preimage." + target, "the Hessian preimage family of " + target + " maps onto it", [pc] {
            if (pc.empty_row) return outcome(true, "empty preimage", "empty preimage");
            return outcome(pc.proportional, "H(family) ~ " + pc.target, pc.hessian);
        });
    }
    c.run("closure.cubic", "3x3 minors of [f; H(f); H(mu f + l H(f))] vanish for 10 random smooth cubics", [&] {
        Rng rng(opt.seed ^ 0xc105);
        for (int t = 0; t < 10; ++t) {
            auto f = random_smooth_cubic(rng);
            auto m = hesse_closure_minors(f, [](const auto& g) { return hessian_cubic(g); });
            if (nonzero_count(m)) return outcome(false, "all minors 0", "nonzero minor at " + cubic_str(f));
        }
        return outcome(true, "all minors 0", "all minors 0");
    });
    c.run("closure.quartic", "3x3 minors of [f; H(f); H(mu f + l H(f))] vanish for 10 random smooth quartics", [&] {
        Rng rng(opt.seed ^ 0x4c105);
        for (int t = 0; t < 10; ++t) {
            auto f = random_smooth_quartic(rng);
            auto m = hesse_closure_minors(f, [](const auto& g) { return hessian_quartic(g); });
            if (nonzero_count(m)) return outcome(false, "all minors 0", "nonzero minor at " + quartic_str(f));
        }
        return outcome(true, "all minors 0", "all minors 0");
    });

    // spot checks in the chosen field
    const FieldSpec spec = opt.field.value_or(FieldSpec{});
    with_field(spec, [&](const auto& like) {
        using F = std::decay_t<decltype(like)>;
        c.run("field.R_normalisation", "R(l^3,m^3,n^3) = det^3 at 25 random points over " + spec.str(), [&] {
            Rng rng(opt.seed ^ 0xf1e1d);
            for (int t = 0; t < 25; ++t) {
                auto v = random_ints(rng, 9, like);
                std::array<std::array<F, 3>, 3> m{{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}}};
                F d = det3(m);
                F r = evaluate_R(cube_of_linear(v[0], v[1], v[2]), cube_of_linear(v[3], v[4], v[5]), cube_of_linear(v[6], v[7], v[8]));
                if (!(r == d * d * d)) return outcome(false, "equal", "mismatch at sample " + std::to_string(t));
            }
            return outcome(true, "equal", "equal");
        });
        c.run("field.syzygy", "H(f).Rbar(f) = 0 at x^3+y^3+z^3+xyz and 25 random cubics over " + spec.str(), [&] {
            Rng rng(opt.seed ^ 0x5e2);
            std::vector<TernaryCubic<F>> fs{embed_form(cubic("x^3+y^3+z^3+x*y*z"), like)};
            for (int t = 0; t < 25; ++t) fs.push_back(TernaryCubic<F>::from_vec(random_ints(rng, 10, like)));
            for (std::size_t t = 0; t < fs.size(); ++t) {
                auto r = row_times_rbar(hessian_cubic(fs[t]), fs[t]);
                if (nonzero_count(r)) return outcome(false, "0", "nonzero at sample " + std::to_string(t));
            }
            return outcome(true, "0", "0");
        });
        return 0;
    });
    return c.take();
}

// ---------------------------------------------------------------- membership

inline const std::vector<std::pair<std::string, std::size_t>>& through_point_table() {
    static const std::vector<std::pair<std::string, std::size_t>> rows{
        {"x^3+y^3+z^3+x*y*z", 2}, {"x^3", 6},       {"x^2*y", 4},           {"x*y*(x+y)", 4},   {"x*y*z", 4},
        {"x*(x^2+y*z)", 2},       {"x*(y^2+x*z)", 2}, {"y^2*z-x^3-x^2*z", 2}, {"y^2*z-x^3", 2}, {"x^3+y^3+z^3-6*x*y*z", 2},
    };
    return rows;
}

inline std::vector<CheckResult> membership_suite(const SuiteOptions& opt) {
    using namespace detail;
    Collector c("membership");
    const Rational Q(0);

    c.run("H3.symbolic", "3p23-p14, 2p13-p04, 3p12-p03 vanish on <f,H(f)> for a generic quartic", [] {
        auto rs = symbolic_membership_residuals(h3_system());
        std::vector<std::string> bad;
        for (const auto& r : rs)
            if (!r.residual.is_zero()) bad.push_back(r.form);
        return outcome(bad.empty(), "3 forms vanish", bad.empty() ? "3 forms vanish" : "nonzero: " + join(bad));
    });
    c.run("H3.control", "p01 does not vanish on <f,H(f)>", [] {
        auto r = symbolic_control_residual(h3_system());
        return outcome(!r.residual.is_zero(), "nonzero", r.residual.is_zero() ? "0" : std::to_string(r.residual.size()) + " terms");
    });
    c.run("N.symbolic", "the 10 linear forms of N vanish on <f,H(f)> for a generic cubic", [] {
        auto rs = symbolic_membership_residuals(n_system());
        std::size_t bad = 0;
        for (const auto& r : rs) bad += !r.residual.is_zero();
        return outcome(bad == 0, "10 forms vanish", std::to_string(10 - bad) + " forms vanish");
    });
    c.run("N.control", "p01 does not vanish on <f,H(f)>", [] {
        auto r = symbolic_control_residual(n_system());
        return outcome(!r.residual.is_zero(), "nonzero", r.residual.is_zero() ? "0" : std::to_string(r.residual.size()) + " terms");
    });
    c.run("examples", "<x^4+y^4,x^2y^2> in H3, <x^3+y^3+z^3,xyz> in N, <x^3,y^3> not in N, <x^4,y^4> not in H3", [] {
        auto mem = [](const char* text) {
            auto [p, k] = parse_pencil(text, Rational(0));
            return membership(k == FormKind::cubic ? n_system() : h3_system(), p, Rational(0));
        };
        bool a = mem("x^4+y^4;x^2*y^2"), b = mem("x^3+y^3+z^3;x*y*z"), d = mem("x^3;y^3"), e = mem("x^4;y^4");
        auto s = [](bool v) { return std::string(v ? "true" : "false"); };
        return outcome(a && b && !d && !e, "true,true,false,false", s(a) + "," + s(b) + "," + s(d) + "," + s(e));
    });
    for (const auto& [text, dim] : through_point_table()) {
        std::string f = text;
        std::size_t expected = dim;
        c.run("through_point." + f, "pencils in N through " + f + ": kernel dimension " + std::to_string(expected), [f, expected] {
            auto cf = cubic(f);
            auto sys = through_point_system(cf);
            Matrix<Rational> m(0, 0);
            for (const auto& k : sys.kernel) m.append_row(k);
            std::size_t r = rank(m);
            m.append_row(cf.vec());
            bool contains_f = rank(m) == r;
            return outcome(sys.kernel_dim() == expected && contains_f, std::to_string(expected) + ", contains f",
                           std::to_string(sys.kernel_dim()) + (contains_f ? ", contains f" : ", misses f"));
        });
    }
    c.run("through_point.generic_basis", "for x^3+y^3+z^3+xyz the kernel is span{f, H(f)}", [] {
        auto f = cubic("x^3+y^3+z^3+x*y*z");
        auto sys = through_point_system(f);
        Matrix<Rational> m(0, 0);
        for (const auto& k : sys.kernel) m.append_row(k);
        m.append_row(f.vec());
        m.append_row(hessian_cubic(f).vec());
        std::size_t r = rank(m);
        return outcome(r == 2, "rank 2", "rank " + std::to_string(r));
    });

    if (opt.pencil) {
        const FieldSpec spec = opt.field.value_or(FieldSpec{});
        with_field(spec, [&](const auto& like) {
            FormKind kind{};
            auto p = parse_user_pencil(*opt.pencil, like, &kind);
            const VarietySystem& sys = kind == FormKind::cubic ? n_system() : h3_system();
            c.run("pencil", "<" + *opt.pencil + "> lies in " + sys.name + " over " + spec.str(), [&] {
                auto v = pluecker_of(p);
                auto vals = evaluate_all(sys.linear, v, like);
                std::size_t nz = nonzero_count(vals);
                bool in = membership(sys, p, like);
                return outcome(in, "in " + sys.name,
                               in ? "in " + sys.name : std::to_string(nz) + " of " + std::to_string(vals.size()) + " linear forms nonzero");
            });
            return 0;
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- rank

inline std::string rank_actual(const JacobianReport& r) {
    std::string s = std::to_string(r.rank);
    for (const auto& [p, k] : r.modular_ranks) s += ", mod " + std::to_string(p) + ": " + std::to_string(k);
    return s + " (" + std::to_string(r.rows) + "x" + std::to_string(r.cols) + ", " + r.verdict() + ")";
}

inline bool modular_agree(const JacobianReport& r) {
    for (const auto& [p, k] : r.modular_ranks)
        if (k != r.rank) return false;
    return true;
}

inline std::vector<CheckResult> rank_suite(const SuiteOptions& opt) {
    Collector c("rank");
    std::size_t singular = 0;
    std::vector<std::string> singular_names;
    for (const auto& rep : cubic_orbit_catalog()) {
        c.run("N." + rep.name, "Jacobian rank of N at " + rep.name + " is " + std::to_string(rep.jacobian_rank), [&] {
            auto jr = jacobian_rank(n_system(), rep_pencil(rep), Rational(0), opt.seed);
            if (jr.rank < 36) {
                ++singular;
                singular_names.push_back(rep.name);
            }
            bool ok = jr.rank == rep.jacobian_rank && modular_agree(jr) && jr.modular_ranks.size() == 2;
            return outcome(ok, std::to_string(rep.jacobian_rank), rank_actual(jr));
        });
    }
    c.run("N.singular_locus", "exactly <x^2y,x^2z> and <x^3,x^2y> have rank 35", [&] {
        std::string names = detail::join(singular_names, " ");
        bool ok = singular == 2 && names == "<x^2y,x^2z> <x^3,x^2y>";
        return outcome(ok, "<x^2y,x^2z> <x^3,x^2y>", names);
    });
    for (const auto& rep : quartic_orbit_catalog()) {
        c.run("H3." + rep.name, "Jacobian rank of H3 at " + rep.name + " is 6", [&] {
            auto jr = jacobian_rank(h3_system(), rep_pencil(rep), Rational(0), opt.seed);
            bool ok = jr.rank == 6 && modular_agree(jr);
            return outcome(ok, "6", rank_actual(jr));
        });
    }
    if (opt.pencil) {
        const FieldSpec spec = opt.field.value_or(FieldSpec{});
        with_field(spec, [&](const auto& like) {
            FormKind kind{};
            auto p = detail::parse_user_pencil(*opt.pencil, like, &kind);
            const VarietySystem& sys = kind == FormKind::cubic ? n_system() : h3_system();
            c.run("pencil", "Jacobian rank of " + sys.name + " at <" + *opt.pencil + "> over " + spec.str(), [&] {
                auto jr = jacobian_rank(sys, p, like, opt.seed);
                return outcome(modular_agree(jr), "rank at a smooth point " + std::to_string(jr.expected), rank_actual(jr));
            });
            return 0;
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- orbits

inline std::vector<CheckResult> orbits_suite(const SuiteOptions& opt) {
    using namespace detail;
    Collector c("orbits");
    const Rational Q(0);
    std::vector<std::size_t> dims;
    for (const auto& rep : cubic_orbit_catalog()) {
        c.run("N." + rep.name, rep.name + " lies in N with orbit dimension " + std::to_string(rep.dimension), [&] {
            auto p = rep_pencil(rep);
            bool in = membership(n_system(), p, Q);
            std::size_t d = orbit_dimension(p, Q);
            dims.push_back(d);
            return outcome(in && d == rep.dimension, "in N, dim " + std::to_string(rep.dimension),
                           std::string(in ? "in N" : "not in N") + ", dim " + std::to_string(d));
        });
    }
    c.run("N.dimensions", "the nine orbit dimensions are (8,7,6,6,5,5,4,4,3)", [&] {
        std::vector<std::size_t> want{8, 7, 6, 6, 5, 5, 4, 4, 3};
        return outcome(dims == want, join_num(want), join_num(dims));
    });
    for (const auto& rep : quartic_orbit_catalog()) {
        c.run("H3." + rep.name, rep.name + " lies in H3 with orbit dimension " + std::to_string(rep.dimension), [&] {
            auto p = rep_pencil(rep);
            bool in = membership(h3_system(), p, Q);
            std::size_t d = orbit_dimension(p, Q);
            return outcome(in && d == rep.dimension, "in H3, dim " + std::to_string(rep.dimension),
                           std::string(in ? "in H3" : "not in H3") + ", dim " + std::to_string(d));
        });
    }
    c.run("generic_hesse_pencil", "<f,H(f)> for 5 random cubics has orbit dimension 8", [&] {
        Rng rng(opt.seed ^ 0x0b17);
        std::vector<std::size_t> got;
        for (int t = 0; t < 5; ++t) {
            auto f = random_smooth_cubic(rng);
            got.push_back(orbit_dimension(make_pencil(f, hessian_cubic(f)), Q));
        }
        bool ok = std::all_of(got.begin(), got.end(), [](std::size_t d) { return d == 8; });
        return outcome(ok, "(8,8,8,8,8)", join_num(got));
    });
    c.run("generator_change", "orbit dimension does not depend on the chosen generators", [&] {
        for (const auto& rep : cubic_orbit_catalog()) {
            auto p = rep_pencil(rep);
            Pencil<Rational> q{p.f, p.g};
            for (std::size_t i = 0; i < p.f.size(); ++i) {
                q.f[i] = p.f[i] + Rational(2) * p.g[i];
                q.g[i] = Rational(3) * p.f[i] - p.g[i];
            }
            if (orbit_dimension(q, Q) != rep.dimension) return outcome(false, "unchanged", "changed for " + rep.name);
        }
        return outcome(true, "unchanged", "unchanged");
    });
    return c.take();
}

// ---------------------------------------------------------------- degenerations

inline std::vector<CheckResult> degenerations_suite(const SuiteOptions&) {
    Collector c("degenerations");
    for (const auto& fam : degeneration_families()) {
        c.run(fam.target, "<" + fam.f + ", " + fam.g + "> lies in N for all e and tends to " + fam.target, [&] {
            auto res = family_n_residuals(fam);
            bool in = detail::nonzero_count(res) == 0;
            auto lim = epsilon_limit(fam);
            auto target = pluecker_of(rep_pencil(find_rep(fam.target)));
            bool match = projectively_equal(lim.limit.p, target.p);
            return outcome(in && match, "in N identically, limit " + fam.target,
                           std::string(in ? "in N identically" : "not in N") + ", limit <" + pencil_str(lim.pencil) + "> (e-order " +
                               std::to_string(lim.valuation) + ")" + (match ? "" : " differs"));
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- configurations

template <FieldElement F>
std::string transported_check(const std::vector<ProjectivePoint<F>>& pts, const F& like) {
    auto cfgs = configs_through(pts, like);
    if (cfgs.size() != 6) return std::to_string(cfgs.size()) + " configurations";
    std::vector<PluckerVector<F>> seen;
    for (const auto& cfg : cfgs) {
        auto rep = verify_configuration(cfg.points);
        if (!rep.valid) return "invalid configuration: " + rep.problem;
        for (const auto& p : pts)
            if (std::none_of(cfg.points.begin(), cfg.points.end(), [&](const auto& q) { return q == p; }))
                return "configuration misses " + p.str();
        auto pencil = pencil_through_configuration(cfg, like);
        if (!membership(n_system(), pencil, like)) return "pencil not in N";
        auto v = pluecker_of(pencil);
        for (const auto& s : seen)
            if (projectively_equal(s.p, v.p)) return "repeated pencil";
        seen.push_back(v);
    }
    return "6 configurations, 6 distinct pencils in N";
}

inline std::vector<CheckResult> configs_suite(const SuiteOptions& opt) {
    Collector c("configs");
    const FieldSpec spec = opt.field.value_or(FieldSpec::parse("qw"));
    with_field(spec, [&](const auto& like) {
        using F = std::decay_t<decltype(like)>;
        try {
            primitive_cube_root(like);
        } catch (const std::exception& e) {
            throw InputError("configs: field " + spec.str() + " has no primitive cube root of unity (" + e.what() + ")");
        }
        std::optional<std::vector<ProjectivePoint<F>>> user;
        if (opt.points) user = detail::read_user_points(*opt.points, 4, like);
        const std::string where = " over " + spec.str();

        c.run("standard_frame", "exactly 6 Hesse configurations contain (1,0,0),(0,1,0),(0,0,1),(1,1,1)" + where, [&] {
            auto cfgs = configs_through_standard_frame(like);
            auto frame = standard_frame(like);
            std::size_t valid = 0;
            for (const auto& cfg : cfgs) {
                bool has_frame = std::all_of(frame.begin(), frame.end(), [&](const auto& p) {
                    return std::any_of(cfg.points.begin(), cfg.points.end(), [&](const auto& q) { return q == p; });
                });
                auto rep = verify_configuration(cfg.points);
                valid += rep.valid && has_frame && rep.lines.size() * 3 == 9 * 4;
            }
            bool distinct = true;
            for (std::size_t i = 0; i < cfgs.size(); ++i)
                for (std::size_t j = i + 1; j < cfgs.size(); ++j) distinct = distinct && !same_point_set(cfgs[i].points, cfgs[j].points);
            return outcome(cfgs.size() == 6 && valid == 6 && distinct, "6 valid, distinct",
                           std::to_string(cfgs.size()) + " built, " + std::to_string(valid) + " valid" + (distinct ? ", distinct" : ", repeated"));
        });
        c.run("first_case", "with fifth point (0,1,1) and l = -w the configuration contains (1,0,-w), (1,1,-w), (1,1+w,1)", [&] {
            auto cfgs = configs_through_standard_frame(like);
            F w = primitive_cube_root(like), o = like.from_int(0), l = like.from_int(1);
            std::vector<ProjectivePoint<F>> want{make_point(o, l, l), make_point(l, o, -w), make_point(l, l, -w), make_point(l, l + w, l)};
            const auto& pts = cfgs.front().points;
            bool ok = cfgs.front().label.fifth_point == 0 && cfgs.front().label.root == 0 &&
                      std::all_of(want.begin(), want.end(), [&](const auto& p) {
                          return std::any_of(pts.begin(), pts.end(), [&](const auto& q) { return q == p; });
                      });
            std::vector<std::string> s;
            for (const auto& p : pts) s.push_back(p.str());
            return outcome(ok, "contains (0,1,1),(1,0,-w),(1,1,-w),(1,1+w,1)", detail::join(s, " "));
        });
        c.run("fifth_points", "the fifth points are (0,1,1), (1,0,1), (1,1,0), each with two roots", [&] {
            auto cfgs = configs_through_standard_frame(like);
            F o = like.from_int(0), l = like.from_int(1);
            std::array<ProjectivePoint<F>, 3> fifth{make_point(o, l, l), make_point(l, o, l), make_point(l, l, o)};
            bool ok = true;
            for (const auto& cfg : cfgs)
                ok = ok && std::any_of(cfg.points.begin(), cfg.points.end(), [&](const auto& q) { return q == fifth[cfg.label.fifth_point]; });
            return outcome(ok, "present", ok ? "present" : "missing");
        });
        c.run("standard_pencils", "the 6 standard-frame configurations give pencils in N vanishing at their 9 points" + where, [&] {
            for (const auto& cfg : configs_through_standard_frame(like)) {
                auto pencil = pencil_through_configuration(cfg, like);
                if (!membership(n_system(), pencil, like)) return outcome(false, "6 pencils in N", "pencil not in N");
                for (const auto& gen : {pencil.f, pencil.g})
                    for (const auto& p : cfg.points)
                        if (!evaluate_cubic(TernaryCubic<F>::from_vec(gen), p).is_zero())
                            return outcome(false, "6 pencils in N", "generator misses " + p.str());
            }
            return outcome(true, "6 pencils in N", "6 pencils in N");
        });
        c.run("fermat", "the 9 flexes of x^3+y^3+z^3 form a Hesse configuration with pencil <x^3+y^3+z^3,xyz>" + where, [&] {
            auto pts = fermat_inflection_points(like);
            auto rep = verify_configuration(pts);
            HesseConfiguration<F> cfg{pts, {}};
            auto p = pluecker_of(pencil_through_configuration(cfg, like));
            auto q = pluecker_of(make_pencil(embed_form(detail::cubic("x^3+y^3+z^3"), like), embed_form(detail::cubic("x*y*z"), like)));
            bool same = projectively_equal(p.p, q.p);
            return outcome(rep.valid && same, "valid, <x^3+y^3+z^3,xyz>",
                           std::string(rep.valid ? "valid" : "invalid: " + rep.problem) + (same ? ", <x^3+y^3+z^3,xyz>" : ", other pencil"));
        });
        c.run("random_nine", "9 random points are not a Hesse configuration", [&] {
            Rng rng(opt.seed ^ 0x999);
            std::vector<ProjectivePoint<F>> pts;
            while (pts.size() < 9) {
                auto v = random_vector(rng, 3, like);
                ProjectivePoint<F> p{{v[0], v[1], v[2]}};
                if (!p.is_zero() && std::none_of(pts.begin(), pts.end(), [&](const auto& q) { return q == p; })) pts.push_back(p);
            }
            auto rep = verify_configuration(pts);
            return outcome(!rep.valid, "invalid", rep.valid ? "valid" : "invalid");
        });
        c.run("collinear_rejected", "a quadruple with three collinear points is rejected", [&] {
            F o = like.from_int(0), l = like.from_int(1);
            std::vector<ProjectivePoint<F>> pts{make_point(l, o, o), make_point(o, l, o), make_point(l, l, o), make_point(o, o, l)};
            try {
                configs_through(pts, like);
            } catch (const std::domain_error& e) {
                return outcome(true, "error naming the triple", e.what());
            }
            return outcome(false, "error naming the triple", "accepted");
        });
        if (user) {
            c.run("points", "6 configurations through the 4 given points" + where, [&] {
                auto s = transported_check(*user, like);
                return outcome(s.rfind("6 configurations", 0) == 0, "6 configurations, 6 distinct pencils in N", s);
            });
        } else {
            Rng rng(opt.seed ^ 0xc0f);
            for (int t = 0; t < 5; ++t) {
                auto pts = random_general_points(rng, 4, like);
                c.run("random_quadruple." + std::to_string(t), "6 configurations through 4 random general points" + where, [&] {
                    auto s = transported_check(pts, like);
                    return outcome(s.rfind("6 configurations", 0) == 0, "6 configurations, 6 distinct pencils in N", s);
                });
            }
        }
        return 0;
    });
    for (std::uint64_t p : {7u, 13u}) {
        c.run("bruteforce.F" + std::to_string(p), "exhaustive search over F_" + std::to_string(p) + " finds 6 configurations through the frame", [p] {
            auto n = count_configs_bruteforce(p);
            return outcome(n == 6, "6", std::to_string(n));
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- triangles

template <FieldElement F>
std::string triangles_check(const std::vector<ProjectivePoint<F>>& pts, const F& like) {
    auto tris = triangles_through(pts, like);
    for (const auto& t : tris)
        for (const auto& p : pts)
            if (!evaluate_cubic(t, p).is_zero()) return "triangle misses " + p.str();
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j)
            if (projectively_equal(tris[i], tris[j])) return "triangles " + std::to_string(i) + " and " + std::to_string(j) + " coincide";
    return std::to_string(tris.size()) + " distinct triangles";
}

inline std::vector<CheckResult> triangles_suite(const SuiteOptions& opt) {
    Collector c("triangles");
    c.run("matchings", "6 points pair up in 5*3*1 = 15 ways", [] {
        std::size_t n = 0;
        std::function<void(unsigned)> rec = [&](unsigned used) {
            if (used == 0x3f) {
                ++n;
                return;
            }
            int first = 0;
            while (used & (1u << first)) ++first;
            for (int k = first + 1; k < 6; ++k)
                if (!(used & (1u << k))) rec(used | (1u << first) | (1u << k));
        };
        rec(0);
        return outcome(n == 15, "15", std::to_string(n));
    });
    const FieldSpec spec = opt.field.value_or(FieldSpec{});
    with_field(spec, [&](const auto& like) {
        const std::string where = " over " + spec.str();
        if (opt.points) {
            auto pts = detail::read_user_points(*opt.points, 6, like);
            c.run("points", "15 distinct triangles through the 6 given points" + where, [&] {
                auto s = triangles_check(pts, like);
                return outcome(s == "15 distinct triangles", "15 distinct triangles", s);
            });
        } else {
            Rng rng(opt.seed ^ 0x7e1);
            for (int t = 0; t < 5; ++t) {
                auto pts = random_general_points(rng, 6, like);
                c.run("random_six." + std::to_string(t), "15 distinct triangles through 6 random general points" + where, [&] {
                    auto s = triangles_check(pts, like);
                    return outcome(s == "15 distinct triangles", "15 distinct triangles", s);
                });
            }
        }
        return 0;
    });
    return c.take();
}

// ---------------------------------------------------------------- multidegree

inline std::string run_detail(const CoefficientRun& r) {
    std::string s = r.name + " values " + values_str(r);
    if (!r.rejected.empty()) {
        std::map<std::string, int> why;
        for (const auto& x : r.rejected) ++why[x.reason];
        std::vector<std::string> parts;
        for (const auto& [k, v] : why) parts.push_back(std::to_string(v) + "x " + k);
        s += ", rejected " + detail::join(parts, "; ");
    }
    if (r.exhausted) s += ", exhausted resampling";
    return s;
}

inline std::vector<CheckResult> multidegree_suite(const SuiteOptions& opt, const std::string& variety) {
    Collector c("multidegree." + variety);
    MultidegreeOptions mo;
    mo.seed = opt.seed;
    mo.seeds = opt.samples;
    mo.config_seeds = opt.samples;
    MultidegreeReport rep;
    const bool h8 = variety == "h8";
    c.run("assemble", h8 ? "multidegree of N is (1,3,9,12,6), degree 622" : "multidegree of H3 is (1,2), degree 5", [&] {
        rep = h8 ? assemble_h8(mo) : assemble_h3(mo);
        std::vector<long> coeffs, degrees;
        for (const auto& e : rep.entries) coeffs.push_back(e.coefficient), degrees.push_back(e.schubert_degree);
        std::string want = h8 ? "(1,3,9,12,6) x (1,7,20,28,14) = 622" : "(1,2) x (1,2) = 5";
        std::string got = detail::join_num(coeffs) + " x " + detail::join_num(degrees) + " = " + std::to_string(rep.total);
        return outcome(rep.ok() && got == want, want, got);
    });
    for (const auto& e : rep.entries) {
        c.run(e.partition.str(), e.method, [&] {
            Outcome o = outcome(e.status != "fail" && e.coefficient == e.expected, std::to_string(e.expected),
                                std::to_string(e.coefficient) + " (Schubert degree " + std::to_string(e.schubert_degree) + "; " + e.detail + ")");
            if (o.status == Status::pass && e.status == "assumed") o.status = Status::assumed;
            return o;
        });
    }
    for (const auto& r : rep.runs) {
        c.run("samples." + r.name, "genericity guards accepted every seed for " + r.name, [&] {
            return outcome(r.ok(), "all values " + std::to_string(r.expected), run_detail(r));
        });
    }
    return c.take();
}

// ---------------------------------------------------------------- decompose

inline std::vector<CheckResult> decompose_suite(const SuiteOptions&) {
    Collector c("decompose");
    auto decomposition_str = [](const Decomposition& d) {
        std::vector<std::string> s;
        for (const auto& [lam, m] : d.multiplicities) s.push_back((m == 1 ? "" : std::to_string(m) + "*") + "s" + lam.str());
        return detail::join(s, " + ");
    };
    c.run("schur.basic", "s(1) in 3 variables is x1+x2+x3; s(3,3)(1,1,1) = 10; s(5,1)(1,1,1) = 35", [] {
        auto s1 = schur_polynomial({1}, 3);
        auto ones = std::vector<Rational>(3, Rational(1));
        auto a = schur_polynomial({3, 3}, 3).evaluate(ones), b = schur_polynomial({5, 1}, 3).evaluate(ones);
        bool ok = s1.str({"x1", "x2", "x3"}) == "x1+x2+x3" && a == Rational(10) && b == Rational(35);
        return outcome(ok, "x1+x2+x3, 10, 35", s1.str({"x1", "x2", "x3"}) + ", " + a.str() + ", " + b.str());
    });
    c.run("wedge2_sym4_C2", "L^2(Sym^4 C^2) = S(7,1) + S(5,3)", [&] {
        auto chi = wedge_character(4, 2, 2);
        bool ok = chi == schur_polynomial({7, 1}, 2) + schur_polynomial({5, 3}, 2);
        return outcome(ok, "s(7,1) + s(5,3)", decomposition_str(decompose_character(chi)));
    });
    c.run("wedge2_sym3_C3", "L^2(Sym^3 C^3) = S(5,1) + S(3,3), of dimension 35 + 10 = 45", [&] {
        auto chi = wedge_character(3, 3, 2);
        bool ok = chi == schur_polynomial({5, 1}, 3) + schur_polynomial({3, 3}, 3);
        auto dim = chi.evaluate(std::vector<Rational>(3, Rational(1)));
        ok = ok && dim == Rational(45) && weyl_dimension({5, 1}, 3) == 35 && weyl_dimension({3, 3}, 3) == 10;
        return outcome(ok, "s(5,1) + s(3,3), dim 45", decomposition_str(decompose_character(chi)) + ", dim " + dim.str());
    });
    c.run("wedge3_sym3_C3.invariant", "S(3,3,3) occurs exactly once in L^3(Sym^3 C^3)", [] {
        auto d = decompose_character(wedge_character(3, 3, 3));
        long m = d.multiplicities.count(Partition{3, 3, 3}) ? d.multiplicities.at(Partition{3, 3, 3}) : 0;
        return outcome(d.complete && m == 1, "1", std::to_string(m));
    });
    c.run("wedge3_sym3_C3.dimensions", "the summands of L^3(Sym^3 C^3) have dimensions (15,21,15,1)", [&] {
        auto d = decompose_character(wedge_character(3, 3, 3));
        std::vector<long> dims;
        long total = 0;
        for (const auto& [lam, m] : d.multiplicities) {
            dims.push_back(weyl_dimension(lam, 3));
            total += m * weyl_dimension(lam, 3);
        }
        std::string got = decomposition_str(d) + ", dimensions " + detail::join_num(dims) + ", total " + std::to_string(total);
        std::vector<long> printed{15, 21, 15, 1};
        if (dims == printed) return outcome(true, "(15,21,15,1)", got);
        if (!d.complete || total != 120) return outcome(false, "(15,21,15,1)", got);
        return Outcome{Status::flagged, "(15,21,15,1)", got};
    });
    c.run("hook_lengths", "hook-length degrees (3):1 (2,1):2 (8):1 (7,1):7 (6,2):20 (5,3):28 (4,4):14 (1):1", [] {
        std::vector<std::pair<Partition, long>> rows{{{3}, 1}, {{2, 1}, 2}, {{8}, 1}, {{7, 1}, 7}, {{6, 2}, 20}, {{5, 3}, 28}, {{4, 4}, 14}, {{1}, 1}};
        std::vector<long> got, want;
        for (const auto& [p, d] : rows) got.push_back(hook_length_degree(p)), want.push_back(d);
        return outcome(got == want, detail::join_num(want), detail::join_num(got));
    });
    return c.take();
}

// ---------------------------------------------------------------- dispatch

inline bool has_cube_root(const FieldSpec& spec) {
    try {
        with_field(spec, [](const auto& like) { return primitive_cube_root(like).is_zero(); });
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"identities", "membership", "rank", "orbits", "degenerations",
                                                "configs", "triangles", "multidegree", "decompose", "report"};
    return names;
}

/// Runs the named suite ("report" runs all of them, both multidegrees) and returns the sorted report.
inline Report run_suite(const std::string& name, const SuiteOptions& opt) {
    Report r;
    r.seed = opt.seed;
    auto add = [&](std::vector<CheckResult> v) { r.checks.insert(r.checks.end(), v.begin(), v.end()); };
    auto one = [&](const std::string& n) {
        if (n == "identities") add(identities_suite(opt));
        else if (n == "membership") add(membership_suite(opt));
        else if (n == "rank") add(rank_suite(opt));
        else if (n == "orbits") add(orbits_suite(opt));
        else if (n == "degenerations") add(degenerations_suite(opt));
        else if (n == "configs") add(configs_suite(opt));
        else if (n == "triangles") add(triangles_suite(opt));
        else if (n == "multidegree") add(multidegree_suite(opt, opt.variety));
        else if (n == "decompose") add(decompose_suite(opt));
        else throw InputError("unknown suite " + n);
    };
    if (name == "report") {
        for (const auto& n : suite_names()) {
            if (n == "report" || n == "multidegree") continue;
            if (n == "configs" && opt.field && !has_cube_root(*opt.field)) {
                SuiteOptions o = opt;
                o.field.reset();
                add(configs_suite(o));
                continue;
            }
            one(n);
        }
        add(multidegree_suite(opt, "h3"));
        add(multidegree_suite(opt, "h8"));
    } else {
        one(name);
    }
    if (name == "configs") r.field = opt.field.value_or(FieldSpec::parse("qw")).str();
    else r.field = opt.field.value_or(FieldSpec{}).str();
    r.sort();
    return r;
}

}  // namespace hesse

#endif
