#ifndef HESSEPENCIL_FIELD_HPP
#define HESSEPENCIL_FIELD_HPP

// Exact scalar fields: Q, F_p, and the cube-root-of-unity extensions Q(w), F_p(w).
//
// Every scalar type models FieldElement. Elements carry enough context to
// build constants of their own field (from_int / from_rational), so generic
// algorithms never need a separate field object.

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace hesse {

class FieldError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    mpz_class z(std::to_string(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

// ---------------------------------------------------------------- Rational

class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT: integer literals are rationals
    Rational(long n, long d) {
        if (d == 0) throw FieldError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& n) : v_(n) {}

    static Rational parse(std::string_view text) {
        std::string s(text);
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw FieldError("malformed rational: " + s);
        if (q.get_den() == 0) throw FieldError("rational with zero denominator: " + s);
        q.canonicalize();
        return Rational(std::move(q));
    }

    const mpq_class& value() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    Rational from_int(long n) const { return Rational(n); }
    Rational from_rational(const Rational& q) const { return q; }

    Rational inv() const {
        if (is_zero()) throw FieldError("division by zero in Q");
        return Rational(mpq_class(1) / v_);
    }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw FieldError("division by zero in Q");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    std::string str() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

private:
    mpq_class v_;
};

// ---------------------------------------------------------------- Fp

/// Residue modulo a prime. A default-constructed Fp is an "unbound zero":
/// it carries no modulus and adopts the modulus of whatever it meets, so
/// containers of Fp can be value-initialised before the field is known.
class Fp {
public:
    Fp() = default;
    Fp(long value, std::uint64_t p) : p_(p) {
        if (p < 2) throw FieldError("prime field modulus must be >= 2");
        long m = value % static_cast<long>(p);
        if (m < 0) m += static_cast<long>(p);
        r_ = static_cast<std::uint64_t>(m);
    }

    static Fp raw(std::uint64_t r, std::uint64_t p) {
        Fp out;
        out.r_ = r % p;
        out.p_ = p;
        return out;
    }

    std::uint64_t residue() const { return r_; }
    std::uint64_t modulus() const { return p_; }
    bool bound() const { return p_ != 0; }

    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return p_ != 0 && r_ == 1; }

    Fp from_int(long n) const {
        require_bound("from_int");
        return Fp(n, p_);
    }
    Fp from_rational(const Rational& q) const {
        require_bound("from_rational");
        mpz_class pm(std::to_string(p_));
        mpz_class n = q.num() % pm;
        mpz_class d = q.den() % pm;
        if (n < 0) n += pm;
        if (d == 0) throw FieldError("denominator " + q.den().get_str() + " vanishes mod " + std::to_string(p_));
        Fp num = raw(std::stoull(n.get_str()), p_);
        Fp den = raw(std::stoull(d.get_str()), p_);
        return num / den;
    }

    Fp inv() const {
        require_bound("inv");
        if (r_ == 0) throw FieldError("division by zero in F_" + std::to_string(p_));
        // Fermat: r^(p-2)
        return pow(p_ - 2);
    }

    Fp pow(std::uint64_t e) const {
        Fp base = *this, acc = raw(1, p_);
        while (e) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Fp operator-() const {
        Fp out = *this;
        if (r_ != 0) out.r_ = p_ - r_;
        return out;
    }
    Fp& operator+=(const Fp& o) {
        unify(o);
        if (p_ == 0) return *this;
        r_ += o.r_;
        if (r_ >= p_) r_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& o) { return *this += -o; }
    Fp& operator*=(const Fp& o) {
        unify(o);
        if (p_ == 0) return *this;
        r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r_) * o.r_) % p_);
        return *this;
    }
    Fp& operator/=(const Fp& o) {
        unify(o);
        return *this *= o.inv();
    }
    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }
    friend bool operator==(const Fp& a, const Fp& b) {
        if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_) throw FieldError(mixed(a.p_, b.p_));
        return a.r_ == b.r_;
    }

    std::string str() const { return std::to_string(r_); }
    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.str(); }

private:
    static std::string mixed(std::uint64_t p, std::uint64_t q) {
        return "mixed-field operands: F_" + std::to_string(p) + " vs F_" + std::to_string(q);
    }
    void unify(const Fp& o) {
        if (p_ == o.p_) return;
        if (p_ == 0) {
            p_ = o.p_;  // unbound values are always zero
            return;
        }
        if (o.p_ == 0) return;
        throw FieldError(mixed(p_, o.p_));
    }
    void require_bound(const char* what) const {
        if (p_ == 0) throw FieldError(std::string("F_p element without modulus in ") + what);
    }

    std::uint64_t r_ = 0;
    std::uint64_t p_ = 0;
};

// ---------------------------------------------------------------- Omega

/// u + v*w with w^2 + w + 1 = 0, over a base field B.
template <class B>
class Omega {
public:
    Omega() = default;
    Omega(long n) requires std::constructible_from<B, long> : u_(n), v_(0) {}  // NOLINT
    Omega(B u, B v) : u_(std::move(u)), v_(std::move(v)) {}

    const B& re() const { return u_; }
    const B& im() const { return v_; }

    /// The adjoined cube root w, in the same field as *this.
    Omega omega() const { return Omega(u_.from_int(0), u_.from_int(1)); }

    bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
    bool is_one() const { return v_.is_zero() && u_ == u_.from_int(1); }

    Omega from_int(long n) const { return Omega(u_.from_int(n), u_.from_int(0)); }
    Omega from_rational(const Rational& q) const { return Omega(u_.from_rational(q), u_.from_int(0)); }

    /// Image under w -> w^2 (the nontrivial automorphism).
    Omega conj() const { return Omega(u_ - v_, -v_); }
    B norm() const { return u_ * u_ - u_ * v_ + v_ * v_; }

    Omega inv() const {
        if (is_zero()) throw FieldError("division by zero in omega extension");
        B n = norm();
        if (n.is_zero()) throw FieldError("zero divisor: w^2+w+1 splits over the base field, so this omega extension is not a field");
        B ni = n.inv();
        return Omega((u_ - v_) * ni, -v_ * ni);
    }

    Omega operator-() const { return Omega(-u_, -v_); }
    Omega& operator+=(const Omega& o) { u_ += o.u_; v_ += o.v_; return *this; }
    Omega& operator-=(const Omega& o) { u_ -= o.u_; v_ -= o.v_; return *this; }
    Omega& operator*=(const Omega& o) {
        B uv = v_ * o.v_;
        B nu = u_ * o.u_ - uv;
        B nv = u_ * o.v_ + v_ * o.u_ - uv;
        u_ = std::move(nu);
        v_ = std::move(nv);
        return *this;
    }
    Omega& operator/=(const Omega& o) { return *this *= o.inv(); }
    friend Omega operator+(Omega a, const Omega& b) { return a += b; }
    friend Omega operator-(Omega a, const Omega& b) { return a -= b; }
    friend Omega operator*(Omega a, const Omega& b) { return a *= b; }
    friend Omega operator/(Omega a, const Omega& b) { return a /= b; }
    friend bool operator==(const Omega& a, const Omega& b) { return a.u_ == b.u_ && a.v_ == b.v_; }

    std::string str() const {
        if (v_.is_zero()) return u_.str();
        std::string vs = v_.str();
        std::string tail = vs == "1" ? "w" : vs == "-1" ? "-w" : vs + "*w";
        if (u_.is_zero()) return tail;
        return u_.str() + (tail[0] == '-' ? "" : "+") + tail;
    }
    friend std::ostream& operator<<(std::ostream& os, const Omega& a) { return os << a.str(); }

private:
    B u_{};
    B v_{};
};

using QOmega = Omega<Rational>;
using FpOmega = Omega<Fp>;

// ---------------------------------------------------------------- concepts

template <class T>
concept RingElement = std::copyable<T> && requires(const T a, const T b, const Rational& q) {
    { a + b } -> std::same_as<T>;
    { a - b } -> std::same_as<T>;
    { a * b } -> std::same_as<T>;
    { -a } -> std::same_as<T>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.from_rational(q) } -> std::same_as<T>;
};

template <class F>
concept FieldElement = RingElement<F> && requires(const F a, const F b, long n) {
    { a / b } -> std::same_as<F>;
    { a.inv() } -> std::same_as<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.from_int(n) } -> std::same_as<F>;
    { a.str() } -> std::convertible_to<std::string>;
};

template <class T>
T embed(const Rational& q, const T& like) {
    return like.from_rational(q);
}

template <class T>
T power(const T& base, unsigned e, const T& one) {
    T acc = one;
    for (unsigned i = 0; i < e; ++i) acc = acc * base;
    return acc;
}

// ---------------------------------------------------------------- FieldSpec

struct FieldSpec {
    enum class Kind { rational, prime, rational_omega, prime_omega };
    Kind kind = Kind::rational;
    std::uint64_t p = 0;

    static FieldSpec parse(std::string_view text) {
        std::string s(text);
        FieldSpec spec;
        auto modulus = [&](std::size_t prefix) {
            std::string digits = s.substr(prefix);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                throw FieldError("invalid field spec '" + s + "': modulus must be a decimal integer");
            if (digits.size() > 18) throw FieldError("invalid field spec '" + s + "': modulus too large");
            std::uint64_t p = std::stoull(digits);
            if (!is_prime(p)) throw FieldError("invalid field spec '" + s + "': " + digits + " is not prime");
            if (p > (std::uint64_t{1} << 62)) throw FieldError("invalid field spec '" + s + "': modulus above 2^62");
            return p;
        };
        if (s == "q") {
            spec.kind = Kind::rational;
        } else if (s == "qw") {
            spec.kind = Kind::rational_omega;
        } else if (s.rfind("fpw:", 0) == 0) {
            spec.kind = Kind::prime_omega;
            spec.p = modulus(4);
            if (spec.p == 3) throw FieldError("invalid field spec '" + s + "': w is not primitive in characteristic 3");
        } else if (s.rfind("fp:", 0) == 0) {
            spec.kind = Kind::prime;
            spec.p = modulus(3);
        } else {
            throw FieldError("invalid field spec '" + s + "': expected q | fp:<p> | qw | fpw:<p>");
        }
        return spec;
    }

    std::string str() const {
        switch (kind) {
            case Kind::rational: return "q";
            case Kind::rational_omega: return "qw";
            case Kind::prime: return "fp:" + std::to_string(p);
            case Kind::prime_omega: return "fpw:" + std::to_string(p);
        }
        return "?";
    }

    bool has_omega() const { return kind == Kind::rational_omega || kind == Kind::prime_omega; }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Calls fn(zero) with the zero element of the field named by spec; the
/// element's type selects the template instantiation.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
    switch (spec.kind) {
        case FieldSpec::Kind::rational: return fn(Rational(0));
        case FieldSpec::Kind::prime: return fn(Fp(0, spec.p));
        case FieldSpec::Kind::rational_omega: return fn(QOmega(0));
        case FieldSpec::Kind::prime_omega: return fn(FpOmega(Fp(0, spec.p), Fp(0, spec.p)));
    }
    throw FieldError("unknown field kind");
}

// ---------------------------------------------------------------- cube roots

inline Rational primitive_cube_root(const Rational&) {
    throw FieldError("Q has no primitive cube root of unity (x^2+x+1 is irreducible over Q); use qw");
}

inline Fp primitive_cube_root(const Fp& like) {
    std::uint64_t p = like.modulus();
    if (p == 0) throw FieldError("F_p element without modulus");
    if (p % 3 != 1)
        throw FieldError("F_" + std::to_string(p) + " has no primitive cube root of unity: " + std::to_string(p) +
                         " is not 1 mod 3");
    // z = g^((p-1)/3) for successive g until z != 1
    for (std::uint64_t g = 2; g < p; ++g) {
        Fp z = Fp::raw(g, p).pow((p - 1) / 3);
        if (!z.is_one()) {
            // pick the smaller residue of {z, z^2} for a canonical answer
            Fp z2 = z * z;
            return z2.residue() < z.residue() ? z2 : z;
        }
    }
    throw FieldError("no primitive cube root found");
}

template <class B>
Omega<B> primitive_cube_root(const Omega<B>& like) {
    return like.omega();
}

inline Fp reduce_mod(const Rational& q, std::uint64_t p) { return Fp(0, p).from_rational(q); }

}  // namespace hesse

#endif
