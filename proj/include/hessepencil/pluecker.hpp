#ifndef HESSEPENCIL_PLUECKER_HPP
#define HESSEPENCIL_PLUECKER_HPP

// Lines of forms and their Pluecker coordinates p_ij = a_i b_j - a_j b_i (i < j).

#include <hessepencil/forms.hpp>
#include <hessepencil/matrix.hpp>

#include <string>
#include <vector>

namespace hesse {

/// Position of p_ij (i < j) in the lexicographic list of pairs of {0..n}.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= j || j > n) throw std::out_of_range("pair_index: need i < j <= n");
    // pairs starting with r < i: sum_{r<i} (n - r)
    return i * n - i * (i - 1) / 2 + (j - i - 1);
}

inline std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) out.emplace_back(i, j);
    return out;
}

/// Variable names p01, p02, ... (the ambient dimension is at most 9, so one digit per index).
inline std::vector<std::string> pluecker_names(std::size_t n) {
    std::vector<std::string> out;
    for (auto [i, j] : pair_list(n)) out.push_back("p" + std::to_string(i) + std::to_string(j));
    return out;
}

template <class T>
struct PluckerVector {
    std::size_t n = 0;  // ambient projective dimension
    std::vector<T> p;   // indexed by pair_index

    const T& at(std::size_t i, std::size_t j) const { return p[pair_index(n, i, j)]; }
    /// Antisymmetric access: at_signed(j, i) = -at(i, j), at_signed(i, i) = 0.
    T at_signed(std::size_t i, std::size_t j) const {
        if (i == j) return p[0] - p[0];
        return i < j ? at(i, j) : -at(j, i);
    }
    bool is_zero() const {
        for (const auto& c : p)
            if (!c.is_zero()) return false;
        return true;
    }
};

template <FieldElement F>
struct Pencil {
    std::vector<F> f, g;
    std::size_t ambient() const { return f.size() - 1; }
};

template <FieldElement F, std::size_t N>
Pencil<F> make_pencil(const Form<F, N>& f, const Form<F, N>& g) {
    return Pencil<F>{f.vec(), g.vec()};
}

/// 2x2 minors of the matrix with rows a, b; works over any ring (no rank check).
template <RingElement T>
PluckerVector<T> pluecker_of(const std::vector<T>& a, const std::vector<T>& b) {
    if (a.size() != b.size() || a.size() < 2) throw std::invalid_argument("pluecker_of: generator length mismatch");
    PluckerVector<T> v;
    v.n = a.size() - 1;
    v.p.reserve(a.size() * (a.size() - 1) / 2);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) v.p.push_back(a[i] * b[j] - a[j] * b[i]);
    return v;
}

template <FieldElement F>
PluckerVector<F> pluecker_of(const Pencil<F>& pencil) {
    auto v = pluecker_of(pencil.f, pencil.g);
    if (v.is_zero()) throw std::domain_error("degenerate pencil: generators are linearly dependent");
    return v;
}

/// Three-term quadrics p_ij p_kl - p_ik p_jl + p_il p_jk, i<j<k<l, in C(n+1,2) variables.
inline std::vector<MPoly<Rational>> pluecker_relations(std::size_t n) {
    if (n != 4 && n != 9) throw std::invalid_argument("pluecker_relations: ambient dimension must be 4 or 9");
    const std::size_t nv = (n + 1) * n / 2;
    auto var = [&](std::size_t i, std::size_t j) { return MPoly<Rational>::variable(nv, pair_index(n, i, j), Rational(1)); };
    std::vector<MPoly<Rational>> out;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j)
            for (std::size_t k = j + 1; k <= n; ++k)
                for (std::size_t l = k + 1; l <= n; ++l)
                    out.push_back(var(i, j) * var(k, l) - var(i, k) * var(j, l) + var(i, l) * var(j, k));
    return out;
}

/// Antisymmetric (n+1)x(n+1) matrix of the coordinates.
template <FieldElement F>
Matrix<F> antisymmetric_matrix(const PluckerVector<F>& v, const F& like) {
    Matrix<F> m(v.n + 1, v.n + 1, like.from_int(0));
    for (std::size_t i = 0; i <= v.n; ++i)
        for (std::size_t j = i + 1; j <= v.n; ++j) {
            m(i, j) = v.at(i, j);
            m(j, i) = -v.at(i, j);
        }
    return m;
}

/// Two spanning vectors of the line encoded by v. The row space of the
/// antisymmetric matrix of a decomposable bivector a^b is span{a, b}.
template <FieldElement F>
Pencil<F> generators_of(const PluckerVector<F>& v, const F& like) {
    Matrix<F> m = antisymmetric_matrix(v, like);
    auto pivots = rref(m);
    if (pivots.size() != 2) throw std::domain_error("Pluecker vector is not decomposable (antisymmetric rank " +
                                                    std::to_string(pivots.size()) + ")");
    return Pencil<F>{m.row(0), m.row(1)};
}

/// True iff f lies on the line with coordinates v.
template <FieldElement F>
bool line_membership(const PluckerVector<F>& v, const std::vector<F>& f, const F& like) {
    if (f.size() != v.n + 1) throw std::invalid_argument("line_membership: form length mismatch");
    Pencil<F> gens = generators_of(v, like);
    Matrix<F> m(3, f.size());
    for (std::size_t j = 0; j < f.size(); ++j) {
        m(0, j) = gens.f[j];
        m(1, j) = gens.g[j];
        m(2, j) = f[j];
    }
    return rank(std::move(m)) <= 2;
}

/// Evaluate the pair-indexed polynomials at a Pluecker vector.
template <FieldElement F>
std::vector<F> evaluate_all(const std::vector<MPoly<Rational>>& forms, const PluckerVector<F>& v, const F& like) {
    std::vector<F> out;
    out.reserve(forms.size());
    for (const auto& q : forms) out.push_back(evaluate_in(q, v.p, like));
    return out;
}

// ---------------------------------------------------------------- pencils as text

struct PencilText {
    std::string f, g;
};

inline PencilText split_pencil(std::string_view text) {
    auto pos = text.find(';');
    if (pos == std::string_view::npos || text.find(';', pos + 1) != std::string_view::npos)
        throw ParseError("pencil must be written \"<f>;<g>\"");
    return {std::string(text.substr(0, pos)), std::string(text.substr(pos + 1))};
}

enum class FormKind { quartic, cubic };

/// Parse "<f>;<g>"; binary quartics in x,y or ternary cubics in x,y,z, decided by degree.
template <FieldElement F>
std::pair<Pencil<F>, FormKind> parse_pencil(std::string_view text, const F& like) {
    auto [fs, gs] = split_pencil(text);
    MPoly<F> pf = parse_poly(fs, xyz_names(), like), pg = parse_poly(gs, xyz_names(), like);
    int df = pf.total_degree(), dg = pg.total_degree();
    if (pf.is_zero() || pg.is_zero()) throw ParseError("pencil generators must be nonzero");
    if (df != dg) throw ParseError("pencil generators have different degrees");
    auto drop_z = [&](const MPoly<F>& p) {
        MPoly<F> q(2);
        for (const auto& [e, c] : p.terms()) {
            if (e[2] != 0) throw ParseError("binary quartics may only use x and y");
            q.add_term({e[0], e[1]}, c);
        }
        return q;
    };
    if (df == 3) {
        return {Pencil<F>{cubic_from_poly(pf, like).vec(), cubic_from_poly(pg, like).vec()}, FormKind::cubic};
    }
    if (df == 4) {
        return {Pencil<F>{quartic_from_poly(drop_z(pf), like).vec(), quartic_from_poly(drop_z(pg), like).vec()},
                FormKind::quartic};
    }
    throw ParseError("pencil generators must be ternary cubics or binary quartics");
}

template <FieldElement F>
std::string pencil_str(const Pencil<F>& p) {
    if (p.f.size() == 10)
        return cubic_str(TernaryCubic<F>::from_vec(p.f)) + ";" + cubic_str(TernaryCubic<F>::from_vec(p.g));
    return quartic_str(BinaryQuartic<F>::from_vec(p.f)) + ";" + quartic_str(BinaryQuartic<F>::from_vec(p.g));
}

}  // namespace hesse

#endif
