#ifndef HESSEPENCIL_REPTHEORY_HPP
#define HESSEPENCIL_REPTHEORY_HPP

// Schur polynomials, characters of exterior powers of symmetric powers, and
// the hook-length count of standard Young tableaux.

#include <hessepencil/mpoly.hpp>

#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace hesse {

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw std::invalid_argument("partition with a negative part");
            if (i && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    }
    std::size_t length() const { return parts_.size(); }
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    const std::vector<int>& parts() const { return parts_; }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

using SymPoly = MPoly<Rational>;

/// s_lambda(x_1..x_k) = det(x_i^(lambda_j + k - j)) / det(x_i^(k - j)).
inline SymPoly schur_polynomial(const Partition& lambda, std::size_t k) {
    if (lambda.length() > k)
        throw std::invalid_argument("partition " + lambda.str() + " has more than " + std::to_string(k) + " parts");
    if (k == 0) return SymPoly::constant(0, Rational(1));
    auto alternant = [&](const std::vector<int>& shift) {
        std::vector<std::vector<SymPoly>> m(k, std::vector<SymPoly>(k));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Exponent e(k, 0);
                e[i] = static_cast<std::uint16_t>(shift[j] + static_cast<int>(k - 1 - j));
                m[i][j] = SymPoly::monomial(std::move(e), Rational(1));
            }
        return determinant_expand(m, SymPoly::constant(k, Rational(1)));
    };
    std::vector<int> lam(k), zero(k, 0);
    for (std::size_t j = 0; j < k; ++j) lam[j] = lambda[j];
    return divide_exact(alternant(lam), alternant(zero));
}

/// All exponent vectors of degree d in k variables (the weights of Sym^d).
inline std::vector<Exponent> degree_monomials(int d, std::size_t k) {
    std::vector<Exponent> out;
    Exponent e(k, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == k) {
            e[i] = static_cast<std::uint16_t>(left);
            out.push_back(e);
            return;
        }
        for (int t = left; t >= 0; --t) {
            e[i] = static_cast<std::uint16_t>(t);
            rec(i + 1, left - t);
        }
    };
    if (k == 0) return out;
    rec(0, d);
    return out;
}

/// Character of Lambda^j(Sym^d C^k): e_j evaluated at the degree-d monomials.
inline SymPoly wedge_character(int d, std::size_t k, std::size_t j) {
    auto mons = degree_monomials(d, k);
    std::vector<SymPoly> e(j + 1, SymPoly(k));
    e[0] = SymPoly::constant(k, Rational(1));
    for (const auto& m : mons) {
        SymPoly mm = SymPoly::monomial(m, Rational(1));
        for (std::size_t t = std::min(j, mons.size()); t >= 1; --t) e[t] += mm * e[t - 1];
    }
    return e[j];
}

/// Invariance under every adjacent transposition of variables.
inline bool is_symmetric(const SymPoly& p) {
    const std::size_t k = p.nvars();
    for (std::size_t i = 0; i + 1 < k; ++i) {
        SymPoly q(k);
        for (const auto& [e, c] : p.terms()) {
            Exponent s = e;
            std::swap(s[i], s[i + 1]);
            q.add_term(std::move(s), c);
        }
        if (!(q == p)) return false;
    }
    return true;
}

struct Decomposition {
    std::map<Partition, long, std::greater<>> multiplicities;  // largest partition first
    bool complete = false;  // peeling reached zero with nonnegative integer multiplicities
    std::string failure;
};

/// Greedy peeling: subtract c * s_lambda for the lex-leading monomial x^lambda.
inline Decomposition decompose_character(SymPoly chi) {
    Decomposition out;
    const std::size_t k = chi.nvars();
    while (!chi.is_zero()) {
        const auto [e, c] = chi.leading();
        std::vector<int> parts(e.begin(), e.end());
        for (std::size_t i = 1; i < parts.size(); ++i)
            if (parts[i] > parts[i - 1]) {
                out.failure = "leading exponent is not a partition";
                return out;
            }
        if (c.den() != 1 || c.sign() < 0) {
            out.failure = "non-integral or negative multiplicity " + c.str();
            return out;
        }
        Partition lam(parts);
        long mult = c.num().get_si();
        out.multiplicities[lam] += mult;
        chi -= Rational(mult) * schur_polynomial(lam, k);
    }
    out.complete = true;
    return out;
}

/// prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i): dim of the GL_k irreducible.
inline long weyl_dimension(const Partition& lambda, std::size_t k) {
    if (lambda.length() > k) throw std::invalid_argument("partition longer than the rank");
    Rational d(1);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j)
            d *= Rational(lambda[i] - lambda[j] + static_cast<long>(j - i), static_cast<long>(j - i));
    return d.num().get_si();
}

/// |lambda|! / prod of hook lengths.
inline long hook_length_degree(const Partition& lambda) {
    mpz_class num = 1, den = 1;
    for (int t = 2; t <= lambda.size(); ++t) num *= t;
    for (std::size_t i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = 0;
            for (std::size_t r = i + 1; r < lambda.length() && lambda[r] > j; ++r) ++leg;
            den *= arm + leg + 1;
        }
    mpz_class q = num / den;
    return q.get_si();
}

}  // namespace hesse

#endif
