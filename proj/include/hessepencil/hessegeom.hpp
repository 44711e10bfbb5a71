#ifndef HESSEPENCIL_HESSEGEOM_HPP
#define HESSEPENCIL_HESSEGEOM_HPP

// Hesse configurations (9 points, 12 lines, 3 points per line, 4 lines per
// point), the six configurations through four general points, triangles
// through six points, and the pencil of cubics through a configuration.

#include <hessepencil/orbits.hpp>
#include <hessepencil/varieties.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace hesse {

template <FieldElement F>
struct ProjectivePoint {
    std::array<F, 3> c;

    /// Scaled so the first nonzero coordinate is 1.
    ProjectivePoint normalized() const {
        std::size_t k = 0;
        while (k < 3 && c[k].is_zero()) ++k;
        if (k == 3) throw std::domain_error("projective point with all coordinates zero");
        F inv = c[k].inv();
        return {{c[0] * inv, c[1] * inv, c[2] * inv}};
    }
    bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }
    std::string str() const { return "(" + c[0].str() + "," + c[1].str() + "," + c[2].str() + ")"; }
    friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
        return projectively_equal(std::vector<F>(a.c.begin(), a.c.end()), std::vector<F>(b.c.begin(), b.c.end()));
    }
};

template <FieldElement F>
ProjectivePoint<F> make_point(const F& x, const F& y, const F& z) {
    return {{x, y, z}};
}

/// Cross product: the line through two points, or the meet of two lines.
template <FieldElement F>
ProjectivePoint<F> cross(const ProjectivePoint<F>& a, const ProjectivePoint<F>& b) {
    return {{a.c[1] * b.c[2] - a.c[2] * b.c[1], a.c[2] * b.c[0] - a.c[0] * b.c[2], a.c[0] * b.c[1] - a.c[1] * b.c[0]}};
}

template <FieldElement F>
F incidence(const ProjectivePoint<F>& line, const ProjectivePoint<F>& p) {
    return line.c[0] * p.c[0] + line.c[1] * p.c[1] + line.c[2] * p.c[2];
}

template <FieldElement F>
bool collinear(const ProjectivePoint<F>& a, const ProjectivePoint<F>& b, const ProjectivePoint<F>& c) {
    return incidence(cross(a, b), c).is_zero();
}

struct IncidenceReport {
    bool valid = false;
    std::vector<std::array<int, 3>> lines;  // indices of the points on each line (when it has 3)
    std::size_t line_count = 0;             // lines through at least two points
    std::vector<int> lines_per_point;
    std::string problem;
};

template <FieldElement F>
IncidenceReport verify_configuration(const std::vector<ProjectivePoint<F>>& pts) {
    if (pts.size() != 9) throw std::invalid_argument("a Hesse configuration has 9 points");
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j)
            if (pts[i] == pts[j])
                throw std::invalid_argument("duplicate points " + std::to_string(i) + " and " + std::to_string(j));
    IncidenceReport rep;
    rep.lines_per_point.assign(9, 0);
    std::vector<std::vector<int>> lines;
    for (std::size_t i = 0; i < 9; ++i)
        for (std::size_t j = i + 1; j < 9; ++j) {
            auto L = cross(pts[i], pts[j]);
            std::vector<int> on;
            for (std::size_t k = 0; k < 9; ++k)
                if (incidence(L, pts[k]).is_zero()) on.push_back(static_cast<int>(k));
            // count each line once, from its two smallest points
            if (on[0] == static_cast<int>(i) && on[1] == static_cast<int>(j)) lines.push_back(on);
        }
    rep.line_count = lines.size();
    bool all_three = true;
    for (const auto& l : lines) {
        if (l.size() != 3) {
            all_three = false;
            continue;
        }
        rep.lines.push_back({l[0], l[1], l[2]});
        for (int k : l) ++rep.lines_per_point[k];
    }
    bool four_each = std::all_of(rep.lines_per_point.begin(), rep.lines_per_point.end(), [](int c) { return c == 4; });
    rep.valid = lines.size() == 12 && all_three && four_each;
    if (!rep.valid)
        rep.problem = std::to_string(lines.size()) + " lines through pairs, " + (all_three ? "" : "some not through exactly 3 points, ") +
                      (four_each ? "" : "point-line counts differ from 4");
    return rep;
}

/// Flexes of x^3+y^3+z^3: (0,1,-w^k), (1,0,-w^k), (1,-w^k,0).
template <FieldElement F>
std::vector<ProjectivePoint<F>> fermat_inflection_points(const F& like) {
    F w = primitive_cube_root(like);
    F zero = like.from_int(0), one = like.from_int(1);
    std::vector<ProjectivePoint<F>> out;
    F wk = one;
    for (int k = 0; k < 3; ++k) {
        out.push_back(make_point(zero, one, -wk));
        out.push_back(make_point(one, zero, -wk));
        out.push_back(make_point(one, -wk, zero));
        wk = wk * w;
    }
    return out;
}

template <FieldElement F>
std::vector<ProjectivePoint<F>> standard_frame(const F& like) {
    F o = like.from_int(0), l = like.from_int(1);
    return {make_point(l, o, o), make_point(o, l, o), make_point(o, o, l), make_point(l, l, l)};
}

struct ConfigurationLabel {
    int fifth_point;  // 0: (0,1,1), 1: (1,0,1), 2: (1,1,0)
    int root;         // 0: lambda = -w, 1: lambda = 1 + w
};

template <FieldElement F>
struct HesseConfiguration {
    std::vector<ProjectivePoint<F>> points;
    ConfigurationLabel label{-1, -1};
};

/// The six configurations through (1,0,0),(0,1,0),(0,0,1),(1,1,1). With the
/// fifth point (0,1,1) and lambda a root of l^2 - l + 1 the other four are
/// (1,0,l), (1,1,l), (1,1-l,1), (l-1,l,0); the fifth points (1,0,1) and (1,1,0)
/// are the images under swapping x<->y and x<->z.
template <FieldElement F>
std::vector<HesseConfiguration<F>> configs_through_standard_frame(const F& like) {
    F w = primitive_cube_root(like);
    F zero = like.from_int(0), one = like.from_int(1);
    const std::array<F, 2> roots{-w, one + w};
    const std::array<std::array<int, 3>, 3> perms{{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}}};
    std::vector<HesseConfiguration<F>> out;
    for (int c = 0; c < 3; ++c)
        for (int r = 0; r < 2; ++r) {
            const F& l = roots[r];
            std::vector<ProjectivePoint<F>> base = standard_frame(like);
            base.push_back(make_point(zero, one, one));
            base.push_back(make_point(one, zero, l));
            base.push_back(make_point(one, one, l));
            base.push_back(make_point(one, one - l, one));
            base.push_back(make_point(l - one, l, zero));
            HesseConfiguration<F> cfg;
            cfg.label = {c, r};
            for (const auto& p : base) {
                const auto& pi = perms[c];
                cfg.points.push_back(make_point(p.c[pi[0]], p.c[pi[1]], p.c[pi[2]]).normalized());
            }
            out.push_back(std::move(cfg));
        }
    return out;
}

/// Equal as point sets.
template <FieldElement F>
bool same_point_set(const std::vector<ProjectivePoint<F>>& a, const std::vector<ProjectivePoint<F>>& b) {
    if (a.size() != b.size()) return false;
    for (const auto& p : a)
        if (std::none_of(b.begin(), b.end(), [&](const auto& q) { return p == q; })) return false;
    return true;
}

/// Throws naming the first collinear triple.
template <FieldElement F>
void require_general_position(const std::vector<ProjectivePoint<F>>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].is_zero()) throw std::domain_error("point " + std::to_string(i) + " is zero");
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (pts[i] == pts[j]) throw std::domain_error("points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
            for (std::size_t k = j + 1; k < pts.size(); ++k)
                if (collinear(pts[i], pts[j], pts[k]))
                    throw std::domain_error("points " + std::to_string(i) + ", " + std::to_string(j) + ", " + std::to_string(k) +
                                            " are collinear");
        }
    }
}

/// The projectivity T with T e_i = P_i (i = 1..3) and T (1,1,1) = P_4, as a 3x3 matrix.
template <FieldElement F>
Matrix<F> projectivity_from_frame(const std::vector<ProjectivePoint<F>>& P) {
    if (P.size() != 4) throw std::invalid_argument("projectivity_from_frame needs 4 points");
    require_general_position(P);
    Matrix<F> A(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) A(i, j) = P[j].c[i];
    std::vector<F> rhs{P[3].c[0], P[3].c[1], P[3].c[2]};
    auto c = solve(A, rhs);
    Matrix<F> T(3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) T(i, j) = A(i, j) * c[j];
    return T;
}

template <FieldElement F>
ProjectivePoint<F> apply(const Matrix<F>& T, const ProjectivePoint<F>& p) {
    auto v = mat_vec(T, std::vector<F>(p.c.begin(), p.c.end()));
    return ProjectivePoint<F>{{v[0], v[1], v[2]}}.normalized();
}

template <FieldElement F>
std::vector<HesseConfiguration<F>> configs_through(const std::vector<ProjectivePoint<F>>& pts, const F& like) {
    Matrix<F> T = projectivity_from_frame(pts);
    auto base = configs_through_standard_frame(like);
    for (auto& cfg : base)
        for (auto& p : cfg.points) p = apply(T, p);
    return base;
}

// ---------------------------------------------------------------- cubics through points

/// Row of the evaluation map a -> f(P) in the convention basis.
template <FieldElement F>
std::vector<F> veronese_row(const ProjectivePoint<F>& p) {
    std::vector<F> row;
    for (std::size_t k = 0; k < 10; ++k) {
        const Exponent& e = cubic_monomials()[k];
        F t = p.c[0].from_int(kCubicWeights[k]);
        for (int v = 0; v < 3; ++v)
            for (int r = 0; r < e[v]; ++r) t = t * p.c[v];
        row.push_back(t);
    }
    return row;
}

template <FieldElement F>
F evaluate_cubic(const TernaryCubic<F>& f, const ProjectivePoint<F>& p) {
    auto row = veronese_row(p);
    F acc = p.c[0].from_int(0);
    for (std::size_t k = 0; k < 10; ++k) acc = acc + row[k] * f[k];
    return acc;
}

/// The pencil of cubics through the nine points (kernel of the 9x10 evaluation matrix).
template <FieldElement F>
Pencil<F> pencil_through_configuration(const HesseConfiguration<F>& cfg, const F& like) {
    Matrix<F> M(0, 0);
    for (const auto& p : cfg.points) M.append_row(veronese_row(p));
    auto ker = kernel(M, like);
    if (ker.size() != 2)
        throw std::domain_error("cubics through the configuration form a space of dimension " + std::to_string(ker.size()) +
                                ", expected 2");
    return Pencil<F>{ker[0], ker[1]};
}

/// Products of the three lines of each of the 15 pairings of six points.
template <FieldElement F>
std::vector<TernaryCubic<F>> triangles_through(const std::vector<ProjectivePoint<F>>& pts, const F& like) {
    if (pts.size() != 6) throw std::invalid_argument("triangles_through needs 6 points");
    require_general_position(pts);
    std::vector<TernaryCubic<F>> out;
    std::vector<std::pair<int, int>> pairing;
    std::function<void(unsigned)> rec = [&](unsigned used) {
        if (used == 0x3f) {
            MPoly<F> prod = MPoly<F>::constant(3, like.from_int(1));
            for (auto [i, j] : pairing) {
                auto L = cross(pts[i], pts[j]);
                MPoly<F> lin(3);
                for (std::size_t v = 0; v < 3; ++v) lin += MPoly<F>::constant(3, L.c[v]) * MPoly<F>::variable(3, v, like.from_int(1));
                prod = prod * lin;
            }
            out.push_back(cubic_from_poly(prod, like));
            return;
        }
        int first = 0;
        while (used & (1u << first)) ++first;
        for (int k = first + 1; k < 6; ++k) {
            if (used & (1u << k)) continue;
            pairing.emplace_back(first, k);
            rec(used | (1u << first) | (1u << k));
            pairing.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------- brute force over F_p

/// Number of Hesse configurations over F_p (p = 1 mod 3) containing the
/// standard frame, found by exhaustive search. A configuration is the affine
/// plane over F_3; with e1 = 0, e2 = u, e3 = v, the third points D = 2u,
/// E = 2v, F = 2u+2v of the lines e1e2, e1e3, e2e3 determine the rest.
inline std::size_t count_configs_bruteforce(std::uint64_t p) {
    if (p > 13 || p % 3 != 1 || !is_prime(p)) throw std::invalid_argument("brute-force search needs a prime p = 1 mod 3, p <= 13");
    Fp like(0, p);
    auto frame = standard_frame(like);
    const auto &A = frame[0], &B = frame[1], &C = frame[2], &U = frame[3];
    auto points_on = [&](const ProjectivePoint<Fp>& P, const ProjectivePoint<Fp>& Q) {
        // all points of line PQ except P and Q: P + t Q for t != 0
        std::vector<ProjectivePoint<Fp>> out;
        for (std::uint64_t t = 1; t < p; ++t) {
            Fp s = Fp::raw(t, p);
            out.push_back(ProjectivePoint<Fp>{{P.c[0] + s * Q.c[0], P.c[1] + s * Q.c[1], P.c[2] + s * Q.c[2]}}.normalized());
        }
        return out;
    };
    auto meet = [&](const ProjectivePoint<Fp>& a, const ProjectivePoint<Fp>& b, const ProjectivePoint<Fp>& c,
                    const ProjectivePoint<Fp>& d) -> std::optional<ProjectivePoint<Fp>> {
        auto X = cross(cross(a, b), cross(c, d));
        if (X.is_zero()) return std::nullopt;
        return X.normalized();
    };
    std::vector<std::vector<ProjectivePoint<Fp>>> found;
    for (const auto& D : points_on(A, B))
        for (const auto& E : points_on(A, C))
            for (const auto& Fq : points_on(B, C)) {
                auto UV = meet(D, E, A, Fq);
                if (!UV) continue;
                auto U2V = meet(B, E, C, *UV);
                auto UV2 = meet(C, D, B, *UV);
                if (!U2V || !UV2) continue;
                std::vector<ProjectivePoint<Fp>> pts{A, B, C, D, E, Fq, *UV, *U2V, *UV2};
                bool distinct = true;
                for (std::size_t i = 0; i < 9 && distinct; ++i)
                    for (std::size_t j = i + 1; j < 9 && distinct; ++j) distinct = !(pts[i] == pts[j]);
                if (!distinct) continue;
                if (std::none_of(pts.begin(), pts.end(), [&](const auto& q) { return q == U; })) continue;
                if (!verify_configuration(pts).valid) continue;
                if (std::none_of(found.begin(), found.end(), [&](const auto& s) { return same_point_set(s, pts); }))
                    found.push_back(pts);
            }
    return found.size();
}

// ---------------------------------------------------------------- points files

/// One point per line, three field elements separated by whitespace or commas;
/// `#` starts a comment. Over omega fields `w` denotes the cube root of unity.
template <FieldElement F>
std::vector<ProjectivePoint<F>> parse_points(std::istream& in, const F& like) {
    std::vector<ProjectivePoint<F>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        for (char& ch : line)
            if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
        std::istringstream ss(line);
        std::vector<std::string> tok;
        for (std::string t; ss >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 3)
            throw ParseError("points line " + std::to_string(lineno) + ": expected 3 coordinates, got " + std::to_string(tok.size()));
        ProjectivePoint<F> p{{parse_scalar(tok[0], like), parse_scalar(tok[1], like), parse_scalar(tok[2], like)}};
        if (p.is_zero()) throw ParseError("points line " + std::to_string(lineno) + ": zero vector is not a point");
        out.push_back(p);
    }
    return out;
}

template <FieldElement F>
std::vector<ProjectivePoint<F>> read_points_file(const std::string& path, const F& like) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file " + path);
    return parse_points(in, like);
}

}  // namespace hesse

#endif
