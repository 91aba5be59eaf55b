#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace arclab {

// Exact rational number. Thin wrapper around GMP's mpq_class that pins down
// the invariants the rest of the library leans on: the denominator is always
// positive and gcd(|num|, den) == 1 after every operation, so equality is
// plain field-wise comparison and serialization is canonical.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long n, long d);
    Rational(mpz_class n, mpz_class d);
    explicit Rational(mpz_class n) : v_(std::move(n)) {}

    // Parses "a/b" or a bare integer "a". Throws std::invalid_argument on
    // malformed input and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }
    Rational pow(unsigned long e) const;

    // "a/b", or "a" when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    double to_double() const;

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

// Exact power of two as a rational, 2^e for signed e.
Rational pow2(long e);

// First k binary digits after the point of r in [0,1). Dyadic inputs use the
// terminating expansion (trailing zeros), never the all-ones tail.
// Throws std::domain_error for r outside [0,1) and for k == 0.
std::string binary_expansion(const Rational& r, std::size_t k);

// Value of a '0'/'1' string read as binary digits after the point; the empty
// string is 0. Throws std::invalid_argument on other characters.
Rational dyadic_value(std::string_view bits);

// floor(r * 2^k) and ceil(r * 2^k) as integers; shared by the codeword rules.
mpz_class floor_shift(const Rational& r, std::size_t k);
mpz_class ceil_shift(const Rational& r, std::size_t k);

}  // namespace arclab
