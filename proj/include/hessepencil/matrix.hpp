#ifndef HESSEPENCIL_MATRIX_HPP
#define HESSEPENCIL_MATRIX_HPP

// Dense exact matrices: Gaussian elimination over a field, kernels, and
// fraction-free (Bareiss) rank over Q with a modular cross-check.

#include <hessepencil/field.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesse {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : r_(rows), c_(cols), d_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        d_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            d_.insert(d_.end(), row.begin(), row.end());
        }
    }
    static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
        Matrix m;
        m.r_ = rows.size();
        m.c_ = m.r_ ? rows[0].size() : 0;
        for (const auto& row : rows) {
            if (row.size() != m.c_) throw std::invalid_argument("ragged matrix rows");
            m.d_.insert(m.d_.end(), row.begin(), row.end());
        }
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    T& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }

    std::vector<T> row(std::size_t i) const { return {d_.begin() + i * c_, d_.begin() + (i + 1) * c_}; }
    void append_row(const std::vector<T>& row) {
        if (r_ == 0 && c_ == 0) c_ = row.size();
        if (row.size() != c_) throw std::invalid_argument("append_row: width mismatch");
        d_.insert(d_.end(), row.begin(), row.end());
        ++r_;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    template <class G, class Fn>
    Matrix<G> map(Fn&& fn) const {
        Matrix<G> out(r_, c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out(i, j) = fn((*this)(i, j));
        return out;
    }

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<T> d_;
};

template <FieldElement F>
std::vector<F> mat_vec(const Matrix<F>& m, const std::vector<F>& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec: width mismatch");
    std::vector<F> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        F acc{};
        for (std::size_t j = 0; j < m.cols(); ++j) acc = acc + m(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

/// In-place reduced row echelon form; returns pivot columns.
template <FieldElement F>
std::vector<std::size_t> rref(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        F inv = m(r, c).inv();
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            F f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <FieldElement F>
std::size_t rank(Matrix<F> m) {
    return rref(m).size();
}

/// Basis of the right kernel {v : m v = 0}.
template <FieldElement F>
std::vector<std::vector<F>> kernel(Matrix<F> m, const F& like) {
    auto pivots = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), like.from_int(0));
        v[free] = like.from_int(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Solve m x = b for square invertible m.
template <FieldElement F>
std::vector<F> solve(const Matrix<F>& m, const std::vector<F>& b) {
    if (m.rows() != m.cols() || b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
    Matrix<F> aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref(aug);
    if (pivots.size() != m.rows() || pivots.back() == m.cols()) throw std::domain_error("solve: singular matrix");
    std::vector<F> x(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) x[i] = aug(i, m.cols());
    return x;
}

// ---------------------------------------------------------------- fraction-free rank over Q

/// Rank of a rational matrix by Bareiss elimination on the integer matrix
/// obtained by clearing each row's denominators. No fractions are formed.
inline std::size_t bareiss_rank(const Matrix<Rational>& m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
    for (std::size_t i = 0; i < R; ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < C; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).den().get_mpz_t());
        for (std::size_t j = 0; j < C; ++j) a[i][j] = m(i, j).num() * (l / m(i, j).den());
    }
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < C && r < R; ++c) {
        std::size_t p = r;
        while (p < R && a[p][c] == 0) ++p;
        if (p == R) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < R; ++i) {
            for (std::size_t j = c + 1; j < C; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

/// Rank of the reduction mod p, or nullopt when some denominator vanishes mod p.
inline std::optional<std::size_t> rank_mod_p(const Matrix<Rational>& m, std::uint64_t p) {
    Matrix<Fp> red(m.rows(), m.cols());
    mpz_class pz(std::to_string(p));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (m(i, j).den() % pz == 0) return std::nullopt;
            red(i, j) = reduce_mod(m(i, j), p);
        }
    return rank(std::move(red));
}

}  // namespace hesse

#endif
