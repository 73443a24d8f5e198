// Exact field scalars: arbitrary-precision rationals backed by GMP, and
// prime fields F_p with a runtime modulus.  All arithmetic is exact; there
// is no floating point anywhere in this library.

#ifndef SQFM_FIELDS_HPP
#define SQFM_FIELDS_HPP

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sqfm {

/**
 * Rational number in canonical form: lowest terms, positive denominator.
 * A thin wrapper around mpq_class that fixes the serialization format
 * ("p/q" with q > 0, or "p" for integers).
 */
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0)
            throw std::invalid_argument("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (q.get_den() == 0)
            throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    std::string str() const { return v_.get_str(); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    const mpq_class& value() const { return v_; }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }

private:
    mpq_class v_;
};

/**
 * Element of a prime field F_p with runtime modulus.
 *
 * A default-constructed element or one built from an int literal carries no
 * modulus yet (p == 0) and behaves as an integer constant; the first
 * arithmetic operation with a bound element reduces it.  Mixing two distinct
 * bound moduli is a programming error and throws.
 */
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(long n) : v_(n), p_(0) {}
    Fp(long n, std::uint32_t p) : v_(n), p_(p) { reduce(); }

    static Fp from_string(const std::string& s, std::uint32_t p) {
        std::size_t pos = 0;
        long n = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("Fp: cannot parse '" + s + "'");
        return Fp(n, p);
    }

    /** Checks primality by trial division; moduli are small by design. */
    static void check_prime(std::uint32_t p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be a prime >= 2");
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0)
                throw std::invalid_argument("Fp: modulus " + std::to_string(p) + " is not prime");
    }

    std::uint32_t modulus() const { return static_cast<std::uint32_t>(p_); }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return p_ == 0 ? v_ == 1 : v_ == 1; }

    std::string str() const { return std::to_string(v_); }

    Fp operator-() const { Fp r(*this); if (r.p_) r.v_ = (r.p_ - r.v_) % static_cast<std::int64_t>(r.p_); else r.v_ = -r.v_; return r; }

    Fp& operator+=(const Fp& o) { Fp b = unify(*this, o, *this); v_ = b.v_ + promote(o).v_; p_ = b.p_; reduce(); return *this; }
    Fp& operator-=(const Fp& o) { Fp b = unify(*this, o, *this); v_ = b.v_ - promote(o).v_; p_ = b.p_; reduce(); return *this; }
    Fp& operator*=(const Fp& o) { Fp b = unify(*this, o, *this); v_ = b.v_ * promote(o).v_; p_ = b.p_; reduce(); return *this; }
    Fp& operator/=(const Fp& o) {
        if (o.is_zero()) throw std::domain_error("Fp: division by zero");
        Fp b = unify(*this, o, *this);
        Fp oo = o; oo.p_ = b.p_; oo.reduce();
        if (b.p_ == 0) {
            if (oo.v_ == 0 || b.v_ % oo.v_ != 0)
                throw std::domain_error("Fp: unbound division must be exact");
            v_ = b.v_ / oo.v_;
            return *this;
        }
        v_ = b.v_ * inverse_mod(oo.v_, b.p_);
        p_ = b.p_;
        reduce();
        return *this;
    }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    friend bool operator==(const Fp& a, const Fp& b) {
        std::uint64_t p = common_modulus(a, b);
        if (p == 0) return a.v_ == b.v_;
        auto red = [p](std::int64_t x) { std::int64_t r = x % static_cast<std::int64_t>(p); return r < 0 ? r + static_cast<std::int64_t>(p) : r; };
        return red(a.v_) == red(b.v_);
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    std::int64_t v_;
    std::uint64_t p_;

    void reduce() {
        if (p_ == 0) return;
        v_ %= static_cast<std::int64_t>(p_);
        if (v_ < 0) v_ += static_cast<std::int64_t>(p_);
    }
    Fp promote(const Fp& o) const { Fp r = o; r.p_ = p_ ? p_ : o.p_; r.reduce(); return r; }

    static std::uint64_t common_modulus(const Fp& a, const Fp& b) {
        if (a.p_ && b.p_ && a.p_ != b.p_)
            throw std::invalid_argument("Fp: mixing elements of different prime fields");
        return a.p_ ? a.p_ : b.p_;
    }
    static Fp unify(const Fp& a, const Fp& b, Fp r) {
        r.p_ = common_modulus(a, b);
        r.reduce();
        return r;
    }
    static std::int64_t inverse_mod(std::int64_t a, std::uint64_t p) {
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = static_cast<std::int64_t>(p), nr = a;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt; t = nt; nt = tmp;
            tmp = r - q * nr; r = nr; nr = tmp;
        }
        if (r != 1) throw std::domain_error("Fp: element not invertible");
        if (t < 0) t += static_cast<std::int64_t>(p);
        return t;
    }
};

template <typename F>
concept FieldScalar = requires(F a, F b) {
    F{};
    F{1};
    { a + b } -> std::convertible_to<F>;
    { a - b } -> std::convertible_to<F>;
    { a * b } -> std::convertible_to<F>;
    { a / b } -> std::convertible_to<F>;
    { -a } -> std::convertible_to<F>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.str() } -> std::convertible_to<std::string>;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<Fp>);

/** Runtime description of the coefficient field, as it appears in files. */
struct FieldSpec {
    bool rational = true;
    std::uint32_t p = 0;

    static FieldSpec parse(const std::string& s) {
        if (s == "Q") return FieldSpec{true, 0};
        if (s.rfind("Fp:", 0) == 0) {
            unsigned long p = std::stoul(s.substr(3));
            if (p > 0x7fffffffUL)
                throw std::invalid_argument("field: modulus too large (max 2^31-1)");
            Fp::check_prime(static_cast<std::uint32_t>(p));
            return FieldSpec{false, static_cast<std::uint32_t>(p)};
        }
        throw std::invalid_argument("field: expected \"Q\" or \"Fp:<p>\", got \"" + s + "\"");
    }
    std::string str() const { return rational ? "Q" : "Fp:" + std::to_string(p); }
};

}  // namespace sqfm

#endif  // SQFM_FIELDS_HPP
