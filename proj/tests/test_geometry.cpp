// Forms, Pluecker coordinates, the invariant R, the varieties H3 and N,
// orbits, Hesse configurations, characters and the multidegree harness.

#include <hessepencil/suites.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace hesse;

namespace {

const Rational Q(0);

TernaryCubic<Rational> cubic(const char* s) { return parse_cubic(s, Q); }
BinaryQuartic<Rational> quartic(const char* s) { return parse_quartic(s, Q); }

using IntMatrix = std::array<std::array<long, 3>, 3>;

/// Product of random elementary matrices: integer entries, determinant 1.
IntMatrix random_unimodular(Rng& rng) {
    IntMatrix m{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (int s = 0; s < 6; ++s) {
        int i = static_cast<int>(rng.between(0, 2)), j = static_cast<int>(rng.between(0, 2));
        if (i == j) continue;
        long k = rng.between(-2, 2);
        for (int c = 0; c < 3; ++c) m[i][c] += k * m[j][c];
    }
    return m;
}

/// f(C v) as a cubic.
TernaryCubic<Rational> transform(const TernaryCubic<Rational>& f, const IntMatrix& C) {
    std::vector<MPoly<Rational>> subs;
    for (int i = 0; i < 3; ++i) {
        MPoly<Rational> s(3);
        for (int j = 0; j < 3; ++j) s += MPoly<Rational>::variable(3, j, Rational(C[i][j]));
        subs.push_back(s);
    }
    return cubic_from_poly(to_poly(f).substitute(subs), Q);
}

TernaryCubic<Rational> random_cubic(Rng& rng) { return TernaryCubic<Rational>::from_vec(random_vector(rng, 10, Q)); }

/// (l0 x + l1 y + l2 z)^3 expanded by polynomial multiplication.
TernaryCubic<Rational> cube(const std::array<Rational, 3>& l) {
    MPoly<Rational> lin(3);
    for (std::size_t v = 0; v < 3; ++v) lin += MPoly<Rational>::variable(3, v, l[v]);
    return cubic_from_poly(lin * lin * lin, Q);
}

Rational det(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b, const std::array<Rational, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// semistandard tableaux of shape lambda with entries 1..k, summed as monomials
MPoly<Rational> schur_by_tableaux(const std::vector<int>& lambda, std::size_t k) {
    std::vector<std::pair<int, int>> cells;
    for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
        for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
    std::map<std::pair<int, int>, int> fill;
    MPoly<Rational> out(k);
    std::function<void(std::size_t)> rec = [&](std::size_t idx) {
        if (idx == cells.size()) {
            Exponent e(k, 0);
            for (const auto& [cell, v] : fill) ++e[v - 1];
            out += MPoly<Rational>::monomial(e, Rational(1));
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[{r, c - 1}]);
        if (r > 0) lo = std::max(lo, fill[{r - 1, c}] + 1);
        for (int v = lo; v <= static_cast<int>(k); ++v) {
            fill[{r, c}] = v;
            rec(idx + 1);
        }
        fill.erase({r, c});
    };
    rec(0);
    return out;
}

// standard Young tableaux by removing corners
long count_syt(std::vector<int> lambda, std::map<std::vector<int>, long>& memo) {
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    if (lambda.empty()) return 1;
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    long n = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        bool corner = i + 1 == lambda.size() || lambda[i + 1] < lambda[i];
        if (!corner) continue;
        auto mu = lambda;
        --mu[i];
        n += count_syt(mu, memo);
    }
    return memo[lambda] = n;
}

}  // namespace

// ---------------------------------------------------------------- forms

TEST(Forms, ConventionRoundTrip) {
    auto f = cubic("x^3+3*x^2*y+6*x*y*z+z^3");
    EXPECT_EQ(f[0], Rational(1));
    EXPECT_EQ(f[1], Rational(1));
    EXPECT_EQ(f[4], Rational(1));
    EXPECT_EQ(f[9], Rational(1));
    EXPECT_EQ(cubic_str(f), "x^3+3*x^2*y+6*x*y*z+z^3");
    auto q = quartic("x^4+6*x^2*y^2+y^4");
    EXPECT_EQ(q[2], Rational(1));
    EXPECT_THROW(cubic("x^2"), std::exception);
    EXPECT_THROW(quartic("x^3*z"), std::exception);
}

TEST(Forms, CubicHessianMatchesNumericDeterminant) {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        auto f = random_cubic(rng);
        auto F = to_poly(f);
        auto H = to_poly(hessian_cubic(f));
        std::vector<Rational> pt{rng.small_rational(), rng.small_rational(), rng.small_rational()};
        std::vector<std::vector<Rational>> m(3, std::vector<Rational>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m[i][j] = F.derivative(i).derivative(j).evaluate(pt);
        Rational d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                     m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        ASSERT_EQ(d, Rational(216) * H.evaluate(pt));
    }
}

TEST(Forms, QuarticHessianMatchesNumericDeterminant) {
    Rng rng(32);
    for (int t = 0; t < 30; ++t) {
        auto f = BinaryQuartic<Rational>::from_vec(random_vector(rng, 5, Q));
        auto F = to_poly(f);
        auto H = to_poly(hessian_quartic(f));
        std::vector<Rational> pt{rng.small_rational(), rng.small_rational()};
        Rational fxx = F.derivative(0).derivative(0).evaluate(pt), fyy = F.derivative(1).derivative(1).evaluate(pt),
                 fxy = F.derivative(0).derivative(1).evaluate(pt);
        ASSERT_EQ(fxx * fyy - fxy * fxy, Rational(24) * H.evaluate(pt));
    }
}

TEST(Forms, HessianIsEquivariant) {
    Rng rng(33);
    for (int t = 0; t < 20; ++t) {
        auto C = random_unimodular(rng);
        auto f = random_cubic(rng);
        ASSERT_EQ(hessian_cubic(transform(f, C)), transform(hessian_cubic(f), C));
    }
}

TEST(Forms, HessianExamples) {
    EXPECT_EQ(hessian_cubic(cubic("x^3+y^3+z^3")), cubic("x*y*z"));
    EXPECT_TRUE(hessian_cubic(cubic("x^3")).is_zero());
    EXPECT_TRUE(projectively_equal(hessian_cubic(cubic("x*y*z")), cubic("x*y*z")));
    EXPECT_TRUE(hessian_quartic(quartic("x^4")).is_zero());
    // a triangle is its own Hessian
    auto tri = canonical_cubic_t(Rational(1));
    EXPECT_TRUE(projectively_equal(hessian_cubic(tri), tri));
}

TEST(Forms, Cones) {
    EXPECT_TRUE(is_cone(cubic("x^3")));
    EXPECT_TRUE(is_cone(cubic("(x+2*y-z)^3")));
    EXPECT_TRUE(is_cone(cubic("x^2*y")));  // depends on two variables only
    EXPECT_FALSE(is_cone(cubic("x^3+y^3+z^3")));
    EXPECT_TRUE(is_cone(quartic("(x+y)^4")));
    EXPECT_FALSE(is_cone(quartic("x^4+y^4")));
    EXPECT_THROW(is_cone(TernaryCubic<Rational>::from_vec(std::vector<Rational>(10, Q))), std::invalid_argument);
}

TEST(Forms, SquaresOfQuadrics) {
    Rng rng(34);
    for (int t = 0; t < 20; ++t) {
        Rational a = rng.small_rational(), b = rng.small_rational(), c = rng.small_rational();
        MPoly<Rational> x = MPoly<Rational>::variable(2, 0, Rational(1)), y = MPoly<Rational>::variable(2, 1, Rational(1));
        MPoly<Rational> q = MPoly<Rational>::constant(2, a) * x * x + MPoly<Rational>::constant(2, b) * x * y + MPoly<Rational>::constant(2, c) * y * y;
        auto f = quartic_from_poly(q * q, Q);
        for (const auto& v : evaluate_sq(f)) ASSERT_TRUE(v.is_zero());
    }
    auto v = evaluate_sq(quartic("x^4+y^4"));
    EXPECT_FALSE(std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); }));
    EXPECT_EQ(sq_equations().size(), 7u);
}

TEST(Forms, QuarticParameterMap) {
    using QP = QuarticParameter<Rational>;
    EXPECT_EQ(std::get<Rational>(quartic_pencil_parameter_map(QP{Rational(1)})), Rational(-1, 3));
    EXPECT_THROW(quartic_pencil_parameter_map(QP{Rational(0)}), std::domain_error);
    EXPECT_TRUE(std::holds_alternative<Infinity>(quartic_pencil_parameter_map(QP{Infinity{}})));
    EXPECT_TRUE(canonical_parameter_excluded(FamilyKind::quartic_lambda, Rational(1, 3)));
    EXPECT_TRUE(canonical_parameter_excluded(FamilyKind::quartic_lambda, Rational(-1, 3)));
    EXPECT_TRUE(canonical_parameter_excluded(FamilyKind::cubic_t, Rational(1)));
    EXPECT_TRUE(canonical_parameter_excluded(FamilyKind::cubic_6t, Rational(-1, 2)));
    EXPECT_FALSE(canonical_parameter_excluded(FamilyKind::cubic_t, Rational(2)));
    // the fiber over a generic value has two points, both mapping to it
    Rational c(5, 7);
    auto fiber = quartic_parameter_fiber_polynomial(c);
    auto rc = squarefree_root_count(fiber);
    EXPECT_EQ(rc.degree, 2);
    EXPECT_TRUE(rc.squarefree);
}

TEST(Forms, HessianPreimageRows) {
    auto rows = check_hessian_preimages();
    ASSERT_EQ(rows.size(), 9u);
    std::size_t empty = 0;
    for (const auto& r : rows) {
        if (r.empty_row) ++empty;
        else EXPECT_TRUE(r.proportional) << r.target << ": " << r.hessian;
    }
    EXPECT_EQ(empty, 3u);
}

TEST(Forms, HesseClosureFailsOffHessePencils) {
    // control: replacing H(f) by an unrelated cubic breaks the minors
    auto f = cubic("x^3+y^3+z^3+x*y*z");
    auto m = hesse_closure_minors(f, [](const auto& g) { return hessian_cubic(g); });
    EXPECT_TRUE(std::all_of(m.begin(), m.end(), [](const auto& p) { return p.is_zero(); }));
    auto bad = hesse_closure_minors(f, [](const auto& g) {
        auto h = hessian_cubic(g);
        h[1] = h[1] + g[0];
        return h;
    });
    EXPECT_FALSE(std::all_of(bad.begin(), bad.end(), [](const auto& p) { return p.is_zero(); }));
}

// ---------------------------------------------------------------- Pluecker

TEST(Pluecker, Indexing) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j) ASSERT_EQ(pair_index(9, i, j), k++);
    EXPECT_EQ(pluecker_names(4).size(), 10u);
    EXPECT_EQ(pluecker_names(9).size(), 45u);
    EXPECT_EQ(pluecker_names(9)[pair_index(9, 4, 6)], "p46");
    EXPECT_EQ(pluecker_relations(4).size(), 5u);
    EXPECT_EQ(pluecker_relations(9).size(), 210u);
}

TEST(Pluecker, RelationsVanishOnLines) {
    Rng rng(41);
    for (std::size_t n : {4u, 9u}) {
        const auto rel = pluecker_relations(n);
        for (int t = 0; t < 100; ++t) {
            Pencil<Rational> p{random_vector(rng, n + 1, Q), random_vector(rng, n + 1, Q)};
            if (rank(Matrix<Rational>::from_rows({p.f, p.g})) != 2) continue;
            auto v = pluecker_of(p);
            for (const auto& r : rel) ASSERT_TRUE(evaluate_in(r, v.p, Q).is_zero());
        }
    }
    // a point of P^9 off the Grassmannian: p01 = p23 = 1
    PluckerVector<Rational> bad{4, std::vector<Rational>(10, Q)};
    bad.p[pair_index(4, 0, 1)] = Rational(1);
    bad.p[pair_index(4, 2, 3)] = Rational(1);
    const auto rel = pluecker_relations(4);
    EXPECT_FALSE(std::all_of(rel.begin(), rel.end(), [&](const auto& r) { return evaluate_in(r, bad.p, Q).is_zero(); }));
}

TEST(Pluecker, GeneratorsAndMembership) {
    Rng rng(42);
    for (int t = 0; t < 20; ++t) {
        auto f = random_vector(rng, 10, Q), g = random_vector(rng, 10, Q);
        auto v = pluecker_of(f, g);
        auto pencil = generators_of(v, Q);
        EXPECT_TRUE(projectively_equal(pluecker_of(pencil).p, v.p));
        EXPECT_EQ(rank(antisymmetric_matrix(v, Q)), 2u);
        std::vector<Rational> mix(10);
        for (std::size_t i = 0; i < 10; ++i) mix[i] = Rational(2) * f[i] - Rational(5) * g[i];
        EXPECT_TRUE(line_membership(v, mix, Q));
        EXPECT_FALSE(line_membership(v, random_vector(rng, 10, Q), Q));
    }
    EXPECT_THROW(pluecker_of(make_pencil(cubic("x^3"), cubic("2*x^3"))), std::domain_error);
}

TEST(Pluecker, PencilText) {
    auto [p, kind] = parse_pencil("x^4+y^4;x^2*y^2", Q);
    EXPECT_EQ(kind, FormKind::quartic);
    EXPECT_EQ(p.f.size(), 5u);
    auto [c, k2] = parse_pencil("x^3;x*y*z", Q);
    EXPECT_EQ(k2, FormKind::cubic);
    EXPECT_EQ(pencil_str(c), "x^3;x*y*z");
    for (const char* bad : {"x^3", "x^3;y^2", "x^3;y^3;z^3", "x^4*z;y^5", "x^2;y^2", "0;x^3"}) EXPECT_THROW(parse_pencil(bad, Q), ParseError) << bad;
}

// ---------------------------------------------------------------- invariant R

TEST(InvariantR, SumsOfCubesOracle) {
    // a = sum l_i^3, b = sum m_j^3, c = sum n_k^3 gives R(a,b,c) = sum det(l_i,m_j,n_k)^3
    Rng rng(51);
    for (int t = 0; t < 20; ++t) {
        std::array<std::array<std::array<Rational, 3>, 3>, 3> lin;
        for (auto& group : lin)
            for (auto& l : group)
                for (auto& x : l) x = rng.small_rational();
        std::array<TernaryCubic<Rational>, 3> forms;
        for (int g = 0; g < 3; ++g) {
            forms[g] = cube(lin[g][0]);
            for (int i = 1; i < 3; ++i) forms[g] = forms[g] + cube(lin[g][i]);
        }
        Rational expect(0);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                for (int k = 0; k < 3; ++k) {
                    Rational d = det(lin[0][i], lin[1][j], lin[2][k]);
                    expect += d * d * d;
                }
        ASSERT_EQ(evaluate_R(forms[0], forms[1], forms[2]), expect);
    }
}

TEST(InvariantR, PrintedSignsFailTheOracle) {
    Rng rng(52);
    std::array<Rational, 3> l{rng.small_nonzero(), rng.small_nonzero(), rng.small_nonzero()};
    std::array<Rational, 3> m{rng.small_nonzero(), rng.small_nonzero(), rng.small_nonzero()};
    std::array<Rational, 3> n{rng.small_nonzero(), rng.small_nonzero(), rng.small_nonzero()};
    Rational d = det(l, m, n);
    EXPECT_EQ(evaluate_R(cube(l), cube(m), cube(n)), d * d * d);
    EXPECT_FALSE(r_normalisation_residual(r_brackets_printed()).is_zero());
}

TEST(InvariantR, UnimodularInvariance) {
    Rng rng(53);
    for (int t = 0; t < 10; ++t) {
        auto C = random_unimodular(rng);
        auto a = random_cubic(rng), b = random_cubic(rng), c = random_cubic(rng);
        ASSERT_EQ(evaluate_R(transform(a, C), transform(b, C), transform(c, C)), evaluate_R(a, b, c));
    }
}

TEST(InvariantR, TrilinearAndAlternating) {
    Rng rng(54);
    for (int t = 0; t < 50; ++t) {
        auto a = random_cubic(rng), a2 = random_cubic(rng), b = random_cubic(rng), c = random_cubic(rng);
        Rational s = rng.small_rational();
        ASSERT_EQ(evaluate_R(a + s * a2, b, c), evaluate_R(a, b, c) + s * evaluate_R(a2, b, c));
        ASSERT_TRUE(evaluate_R(a, a, c).is_zero());
        ASSERT_EQ(evaluate_R(a, b, c), evaluate_R(b, c, a));
    }
}

TEST(InvariantR, SyzygyNumeric) {
    Rng rng(55);
    for (int t = 0; t < 25; ++t) {
        auto f = random_cubic(rng);
        auto r = row_times_rbar(hessian_cubic(f), f);
        for (const auto& e : r) ASSERT_TRUE(e.is_zero());
        auto b = random_cubic(rng), c = random_cubic(rng);
        ASSERT_EQ(rbar_pairing(f, b, c), evaluate_R(b, f, c));
    }
    auto f = cubic("x^3+y^3+z^3+x*y*z");
    for (const auto& e : row_times_rbar(hessian_cubic(f), f)) EXPECT_TRUE(e.is_zero());
}

TEST(InvariantR, RbarIsAntisymmetric) {
    auto m = rbar(generic_form<10>());
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) ASSERT_EQ(m[i][j], -m[j][i]) << i << "," << j;
}

TEST(InvariantR, NVectorSpansTheGradient) {
    auto sp = n_vector_vs_gradient();
    ASSERT_TRUE(sp.found);
    EXPECT_FALSE(sp.is_identity());
    std::array<int, 10> perm{0, 1, 2, 3, 4, 6, 5, 7, 8, 9};
    std::array<int, 10> sign{-1, -1, 1, -1, 1, 1, -1, -1, 1, -1};
    EXPECT_EQ(sp.perm, perm);
    EXPECT_EQ(sp.sign, sign);
}

// ---------------------------------------------------------------- varieties

TEST(Varieties, HessePencilsAreMembers) {
    Rng rng(61);
    for (int t = 0; t < 20; ++t) {
        auto f = random_cubic(rng);
        if (is_cone(f) || projectively_equal(f, hessian_cubic(f))) continue;
        ASSERT_TRUE(membership(n_system(), make_pencil(f, hessian_cubic(f)), Q));
        auto q = BinaryQuartic<Rational>::from_vec(random_vector(rng, 5, Q));
        if (is_cone(q) || projectively_equal(q, hessian_quartic(q))) continue;
        ASSERT_TRUE(membership(h3_system(), make_pencil(q, hessian_quartic(q)), Q));
        ASSERT_FALSE(membership(n_system(), make_pencil(f, random_cubic(rng)), Q));
    }
}

TEST(Varieties, JacobianShapesAndErrors) {
    auto p = rep_pencil(find_rep("<x^3,x^2y>"));
    auto J = jacobian_at(n_system(), pluecker_of(p), Q);
    EXPECT_EQ(J.rows(), 220u);
    EXPECT_EQ(J.cols(), 45u);
    auto nonmember = parse_pencil("x^3;y^3", Q).first;
    EXPECT_THROW(jacobian_rank(n_system(), nonmember, Q), std::domain_error);
    auto quart = parse_pencil("x^4;x^3*y", Q).first;
    EXPECT_THROW(membership(n_system(), quart, Q), std::invalid_argument);
    EXPECT_THROW(through_point_system(TernaryCubic<Rational>::from_vec(std::vector<Rational>(10, Q))), std::invalid_argument);
}

TEST(Varieties, ModularCrossChecksAgreeForEverySeed) {
    auto p = rep_pencil(find_rep("<x^2y,x^2z>"));
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto jr = jacobian_rank(n_system(), p, Q, s);
        ASSERT_EQ(jr.rank, 35u);
        ASSERT_EQ(jr.modular_ranks.size(), 2u);
        for (const auto& [prime, r] : jr.modular_ranks) ASSERT_EQ(r, 35u) << prime;
    }
}

TEST(Varieties, JacobianOverFiniteField) {
    const Fp like(0, 1000003);
    auto p = parse_pencil("x^3+y^3+z^3;x*y*z", like).first;
    EXPECT_EQ(jacobian_rank(n_system(), p, like).rank, 36u);
}

TEST(Varieties, ThroughPointKernelContainsHessian) {
    Rng rng(62);
    for (int t = 0; t < 5; ++t) {
        auto f = random_cubic(rng);
        if (is_cone(f)) continue;
        auto sys = through_point_system(f);
        ASSERT_EQ(sys.kernel_dim(), 2u);
        Matrix<Rational> m(0, 0);
        for (const auto& k : sys.kernel) m.append_row(k);
        m.append_row(hessian_cubic(f).vec());
        ASSERT_EQ(rank(m), 2u);
    }
}

// ---------------------------------------------------------------- orbits

TEST(Orbits, DimensionIsInvariantUnderConjugation) {
    Rng rng(71);
    for (const auto& rep : cubic_orbit_catalog()) {
        auto f = cubic(rep.f.c_str()), g = cubic(rep.g.c_str());
        for (int t = 0; t < 10; ++t) {
            auto C = random_unimodular(rng);
            ASSERT_EQ(orbit_dimension(make_pencil(transform(f, C), transform(g, C)), Q), rep.dimension) << rep.name;
        }
    }
}

TEST(Orbits, QuarticOrbits) {
    for (const auto& rep : quartic_orbit_catalog()) EXPECT_EQ(orbit_dimension(rep_pencil(rep), Q), rep.dimension);
}

TEST(Orbits, ActionIsADerivation) {
    auto basis = sl_basis(3, Q);
    EXPECT_EQ(basis.size(), 8u);
    for (const auto& X : basis) {
        MPoly<Rational> l1 = parse_poly("x+2*y-z", xyz_names(), Q), l2 = parse_poly("3*x-y+z", xyz_names(), Q);
        auto lhs = infinitesimal_action_poly(X, l1 * l2, Q);
        auto rhs = infinitesimal_action_poly(X, l1, Q) * l2 + l1 * infinitesimal_action_poly(X, l2, Q);
        ASSERT_EQ(lhs, rhs);
    }
    std::vector<std::vector<Rational>> notraceless{{Rational(1), Q, Q}, {Q, Q, Q}, {Q, Q, Q}};
    EXPECT_THROW(infinitesimal_action_poly(notraceless, to_poly(cubic("x^3")), Q), std::invalid_argument);
    EXPECT_THROW(orbit_dimension(make_pencil(cubic("x^3"), cubic("2*x^3")), Q), std::domain_error);
}

TEST(Orbits, DegenerationLimits) {
    for (const auto& fam : degeneration_families()) {
        auto lim = epsilon_limit(fam);
        auto target = pluecker_of(rep_pencil(find_rep(fam.target)));
        EXPECT_TRUE(projectively_equal(lim.limit.p, target.p)) << fam.target;
        for (const auto& r : family_n_residuals(fam)) EXPECT_TRUE(r.is_zero()) << fam.target;
        // a generic member at e = 1/7 is in N too
        std::vector<Rational> fv, gv;
        for (const auto& c : parse_eps_cubic(fam.f).a) fv.push_back(c.evaluate(std::vector<Rational>{Rational(1, 7)}));
        for (const auto& c : parse_eps_cubic(fam.g).a) gv.push_back(c.evaluate(std::vector<Rational>{Rational(1, 7)}));
        EXPECT_TRUE(membership(n_system(), Pencil<Rational>{fv, gv}, Q)) << fam.target;
    }
    EXPECT_THROW(find_rep("<x,y>"), std::out_of_range);
}

// ---------------------------------------------------------------- Hesse configurations

TEST(HesseGeometry, FermatFlexes) {
    auto pts = fermat_inflection_points(QOmega(0));
    auto rep = verify_configuration(pts);
    EXPECT_TRUE(rep.valid);
    EXPECT_EQ(rep.lines.size(), 12u);
    for (int c : rep.lines_per_point) EXPECT_EQ(c, 4);
    // they are the base points of the pencil: on x^3+y^3+z^3 and on xyz
    for (const auto& p : pts) {
        EXPECT_TRUE(evaluate_cubic(embed_form(cubic("x^3+y^3+z^3"), QOmega(0)), p).is_zero());
        EXPECT_TRUE(evaluate_cubic(embed_form(cubic("x*y*z"), QOmega(0)), p).is_zero());
    }
    auto dup = pts;
    dup[8] = dup[0];
    EXPECT_THROW(verify_configuration(dup), std::invalid_argument);
}

TEST(HesseGeometry, StandardFrameConfigurations) {
    for (const char* spec : {"qw", "fp:7", "fp:13", "fpw:5"}) {
        with_field(FieldSpec::parse(spec), [&](const auto& like) {
            auto cfgs = configs_through_standard_frame(like);
            EXPECT_EQ(cfgs.size(), 6u) << spec;
            for (const auto& c : cfgs) EXPECT_TRUE(verify_configuration(c.points).valid) << spec;
            for (std::size_t i = 0; i < cfgs.size(); ++i)
                for (std::size_t j = i + 1; j < cfgs.size(); ++j) EXPECT_FALSE(same_point_set(cfgs[i].points, cfgs[j].points)) << spec;
            // transport by the identity frame reproduces them
            auto moved = configs_through(standard_frame(like), like);
            for (std::size_t i = 0; i < cfgs.size(); ++i) EXPECT_TRUE(same_point_set(moved[i].points, cfgs[i].points));
            return 0;
        });
    }
    EXPECT_THROW(configs_through_standard_frame(Rational(0)), FieldError);
}

TEST(HesseGeometry, BruteForceCount) {
    EXPECT_EQ(count_configs_bruteforce(7), 6u);
    EXPECT_EQ(count_configs_bruteforce(13), 6u);
}

TEST(HesseGeometry, TransportedConfigurations) {
    Rng rng(81);
    const QOmega like(0);
    for (int t = 0; t < 3; ++t) {
        auto q = random_general_points(rng, 4, Q);
        std::vector<ProjectivePoint<QOmega>> pts;
        for (const auto& p : q) pts.push_back({{QOmega(p.c[0], Q), QOmega(p.c[1], Q), QOmega(p.c[2], Q)}});
        auto cfgs = configs_through(pts, like);
        ASSERT_EQ(cfgs.size(), 6u);
        for (const auto& c : cfgs) {
            ASSERT_TRUE(verify_configuration(c.points).valid);
            auto pencil = pencil_through_configuration(c, like);
            ASSERT_TRUE(membership(n_system(), pencil, like));
            for (const auto& p : c.points) ASSERT_TRUE(evaluate_cubic(TernaryCubic<QOmega>::from_vec(pencil.f), p).is_zero());
        }
    }
    const Rational o(0), l(1);
    std::vector<ProjectivePoint<Rational>> collinear{make_point(l, o, o), make_point(o, l, o), make_point(l, l, o), make_point(o, o, l)};
    try {
        configs_through(collinear, Q);
        FAIL() << "collinear quadruple accepted";
    } catch (const std::domain_error& e) {
        EXPECT_NE(std::string(e.what()).find("0, 1, 2"), std::string::npos) << e.what();
    }
}

TEST(HesseGeometry, Triangles) {
    Rng rng(82);
    auto pts = random_general_points(rng, 6, Q);
    auto tris = triangles_through(pts, Q);
    ASSERT_EQ(tris.size(), 15u);
    for (const auto& t : tris) {
        for (const auto& p : pts) EXPECT_TRUE(evaluate_cubic(t, p).is_zero());
        EXPECT_TRUE(projectively_equal(hessian_cubic(t), t));  // triangles are their own Hessians
    }
    for (std::size_t i = 0; i < tris.size(); ++i)
        for (std::size_t j = i + 1; j < tris.size(); ++j) EXPECT_FALSE(projectively_equal(tris[i], tris[j]));
}

TEST(HesseGeometry, PointsFile) {
    std::istringstream in("# frame\n1 0 0\n(0, 1, 0)\n0,0,1  # third\n\n1 1 w\n");
    auto pts = parse_points(in, QOmega(0));
    ASSERT_EQ(pts.size(), 4u);
    EXPECT_EQ(pts[3].c[2], QOmega(0).omega());
    std::istringstream bad("1 0\n");
    EXPECT_THROW(parse_points(bad, Q), ParseError);
    std::istringstream zero("0 0 0\n");
    EXPECT_THROW(parse_points(zero, Q), ParseError);
}

// ---------------------------------------------------------------- characters

TEST(RepTheory, SchurMatchesTableaux) {
    for (const auto& lam : std::vector<std::vector<int>>{{1}, {2}, {1, 1}, {2, 1}, {3, 3}, {5, 1}, {3, 2, 1}, {2, 2, 2}, {4, 1, 1}, {3, 3, 3}}) {
        for (std::size_t k : {3u, 4u}) {
            if (lam.size() > k) continue;
            ASSERT_EQ(schur_polynomial(Partition(lam), k), schur_by_tableaux(lam, k)) << Partition(lam).str() << " k=" << k;
        }
    }
    EXPECT_THROW(schur_polynomial({1, 1, 1, 1}, 3), std::invalid_argument);
}

TEST(RepTheory, HookLengthsCountTableaux) {
    std::map<std::vector<int>, long> memo;
    for (const auto& lam : std::vector<std::vector<int>>{{1}, {3}, {2, 1}, {8}, {7, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 2, 1}, {4, 3, 1}}) {
        EXPECT_EQ(hook_length_degree(Partition(lam)), count_syt(lam, memo)) << Partition(lam).str();
    }
}

TEST(RepTheory, WeylDimensionIsSchurAtOnes) {
    for (const auto& lam : std::vector<std::vector<int>>{{3, 3}, {5, 1}, {7, 1, 1}, {6, 3}, {5, 3, 1}, {3, 3, 3}, {2}}) {
        auto s = schur_polynomial(Partition(lam), 3).evaluate(std::vector<Rational>(3, Rational(1)));
        EXPECT_EQ(s, Rational(weyl_dimension(Partition(lam), 3))) << Partition(lam).str();
    }
}

TEST(RepTheory, WedgeCharacters) {
    // e_j of the weights of Sym^d C^k evaluated at ones is C(dim, j)
    EXPECT_EQ(wedge_character(3, 3, 2).evaluate(std::vector<Rational>(3, Rational(1))), Rational(45));
    EXPECT_EQ(wedge_character(3, 3, 3).evaluate(std::vector<Rational>(3, Rational(1))), Rational(120));
    EXPECT_EQ(wedge_character(4, 2, 2).evaluate(std::vector<Rational>(2, Rational(1))), Rational(10));
    EXPECT_TRUE(is_symmetric(wedge_character(3, 3, 2)));
    EXPECT_FALSE(is_symmetric(parse_poly("x1^2*x2", {"x1", "x2", "x3"}, Q)));
    auto d = decompose_character(wedge_character(3, 3, 3));
    ASSERT_TRUE(d.complete);
    std::map<Partition, long, std::greater<>> want{{{7, 1, 1}, 1}, {{6, 3}, 1}, {{5, 3, 1}, 1}, {{3, 3, 3}, 1}};
    EXPECT_EQ(d.multiplicities, want);
    auto bad = decompose_character(parse_poly("x1^2*x2", {"x1", "x2", "x3"}, Q));
    EXPECT_FALSE(bad.complete);
}

// ---------------------------------------------------------------- multidegree

TEST(Multidegree, SeedDeterminism) {
    MultidegreeOptions o;
    o.seed = 99;
    o.seeds = 3;
    o.config_seeds = 2;
    auto a = assemble_h8(o), b = assemble_h8(o);
    ASSERT_EQ(a.runs.size(), b.runs.size());
    for (std::size_t i = 0; i < a.runs.size(); ++i) EXPECT_EQ(a.runs[i].values, b.runs[i].values);
    EXPECT_EQ(a.total, 622);
    EXPECT_TRUE(a.ok());
    o.seed = 100;
    EXPECT_EQ(assemble_h8(o).total, 622);
    EXPECT_EQ(assemble_h3(o).total, 5);
}

TEST(Multidegree, RejectionsAreLoggedAndBounded) {
    int calls = 0;
    auto flaky = run_trials("flaky", 1, 5, 4, [&](Rng&) -> Attempt {
        if (++calls % 2) return {std::nullopt, "planted"};
        return {1, ""};
    });
    EXPECT_TRUE(flaky.ok());
    EXPECT_EQ(flaky.rejected.size(), 4u);
    auto never = run_trials("never", 1, 5, 3, [](Rng&) -> Attempt { return {std::nullopt, "always"}; });
    EXPECT_FALSE(never.ok());
    EXPECT_TRUE(never.exhausted);
    EXPECT_EQ(never.rejected.size(), 3u * kMaxResample);
}

TEST(Multidegree, PlantedDoubleRootIsRejected) {
    MPoly<Rational> x = MPoly<Rational>::variable(1, 0, Rational(1));
    auto c = (x - MPoly<Rational>::constant(1, Rational(2))) * (x - MPoly<Rational>::constant(1, Rational(2))) * x;
    EXPECT_FALSE(squarefree_root_count(c).squarefree);
}

// ---------------------------------------------------------------- reports

TEST(Report, SchemaAndStability) {
    SuiteOptions opt;
    opt.seed = 5;
    auto r1 = run_suite("decompose", opt), r2 = run_suite("decompose", opt);
    auto j = to_json(r1);
    EXPECT_EQ(j.dump(), to_json(r2).dump());
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"version", "seed", "field", "checks", "summary"}));
    for (const auto& c : j["checks"]) {
        EXPECT_TRUE(c.contains("runtime_ms") == false);
        EXPECT_FALSE(c["claim"].get<std::string>().empty());
    }
    EXPECT_TRUE(to_json(r1, true)["checks"][0].contains("runtime_ms"));
    auto md = to_markdown(r1);
    EXPECT_NE(md.find("| suite | id | status |"), std::string::npos);
    EXPECT_EQ(static_cast<std::size_t>(std::count(md.begin(), md.end(), '\n')), 9 + r1.checks.size());
}

TEST(Report, FullRunStatuses) {
    SuiteOptions opt;
    opt.samples = 3;
    auto r = run_suite("report", opt);
    EXPECT_FALSE(r.failed());
    std::set<std::string> flagged, assumed;
    for (const auto& c : r.checks) {
        EXPECT_FALSE(c.claim.empty()) << c.id;
        if (c.status == Status::flagged) flagged.insert(c.suite + "/" + c.id);
        if (c.status == Status::assumed) assumed.insert(c.suite + "/" + c.id);
    }
    EXPECT_EQ(assumed, (std::set<std::string>{"multidegree.h8/(5,3)"}));
    EXPECT_EQ(flagged, (std::set<std::string>{"decompose/wedge3_sym3_C3.dimensions", "identities/R.printed_signs",
                                              "identities/Rbar.printed_entry", "identities/n.gradient",
                                              "identities/quartic.hessian_table_entry"}));
    // canonical order
    for (std::size_t i = 1; i < r.checks.size(); ++i)
        EXPECT_LE(std::tie(r.checks[i - 1].suite, r.checks[i - 1].id), std::tie(r.checks[i].suite, r.checks[i].id));
}

TEST(Report, InputErrors) {
    SuiteOptions opt;
    opt.pencil = "x^3;";
    EXPECT_THROW(run_suite("membership", opt), InputError);
    opt.pencil = "x^3;2*x^3";
    EXPECT_THROW(run_suite("rank", opt), InputError);
    SuiteOptions cfg;
    cfg.field = FieldSpec::parse("q");
    EXPECT_THROW(run_suite("configs", cfg), InputError);
    cfg.field = FieldSpec::parse("fp:5");
    EXPECT_THROW(run_suite("configs", cfg), InputError);
    SuiteOptions pts;
    pts.points = "/nonexistent/points.txt";
    EXPECT_THROW(run_suite("triangles", pts), InputError);
    EXPECT_THROW(run_suite("nonsense", SuiteOptions{}), InputError);
}
