#ifndef SWAPPOLY_RATIONAL_HPP
#define SWAPPOLY_RATIONAL_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace swappoly {

// Arbitrary-precision integer, RAII over GMP.
class Integer {
  public:
    Integer() { mpz_init(z_); }
    Integer(long v) { mpz_init_set_si(z_, v); } // NOLINT(google-explicit-constructor)
    explicit Integer(const std::string& s);
    Integer(const Integer& o) { mpz_init_set(z_, o.z_); }
    Integer(Integer&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Integer& operator=(const Integer& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Integer& operator=(Integer&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Integer() { mpz_clear(z_); }

    friend Integer operator+(const Integer& a, const Integer& b);
    friend Integer operator-(const Integer& a, const Integer& b);
    friend Integer operator*(const Integer& a, const Integer& b);
    Integer operator-() const;
    Integer& operator+=(const Integer& o) {
        mpz_add(z_, z_, o.z_);
        return *this;
    }
    Integer& operator*=(const Integer& o) {
        mpz_mul(z_, z_, o.z_);
        return *this;
    }

    // quotient of an exact division; behaviour undefined when b does not divide a
    static Integer div_exact(const Integer& a, const Integer& b);
    static Integer gcd(const Integer& a, const Integer& b);
    static Integer lcm(const Integer& a, const Integer& b);
    static Integer pow(const Integer& base, unsigned long e);
    static Integer factorial(unsigned long n);

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool fits_i64() const;
    std::int64_t to_i64() const;

    bool operator==(const Integer& o) const { return mpz_cmp(z_, o.z_) == 0; }
    bool operator!=(const Integer& o) const { return !(*this == o); }
    bool operator<(const Integer& o) const { return mpz_cmp(z_, o.z_) < 0; }

    std::string str() const;

    const mpz_t& raw() const { return z_; }
    mpz_t& raw() { return z_; }

  private:
    mpz_t z_;
};

// Exact rational scalar. Invariants: always canonical (gcd(|num|,den)=1,
// den>0, zero stored as 0/1) — maintained by GMP's mpq canonicalization.
class Rational {
  public:
    Rational() { mpq_init(q_); }
    Rational(long v) { // NOLINT(google-explicit-constructor)
        mpq_init(q_);
        mpq_set_si(q_, v, 1);
    }
    Rational(long num, long den);
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const Integer& num);
    Rational(const Rational& o) {
        mpq_init(q_);
        mpq_set(q_, o.q_);
    }
    Rational(Rational&& o) noexcept {
        mpq_init(q_);
        mpq_swap(q_, o.q_);
    }
    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rational& operator=(Rational&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rational() { mpq_clear(q_); }

    // parses "a", "-a", "a/b"
    static Rational from_string(const std::string& s);

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // throws on /0
    Rational operator-() const;
    Rational& operator+=(const Rational& o) {
        mpq_add(q_, q_, o.q_);
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        mpq_sub(q_, q_, o.q_);
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        mpq_mul(q_, q_, o.q_);
        return *this;
    }

    bool operator==(const Rational& o) const { return mpq_equal(q_, o.q_) != 0; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return mpq_cmp(q_, o.q_) < 0; }
    bool operator>(const Rational& o) const { return o < *this; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const;

    Integer numerator() const;
    Integer denominator() const;
    Rational inverse() const;

    // "num/den", or just "num" when den == 1; exactly round-trips via from_string
    std::string str() const;

    const mpq_t& raw() const { return q_; }

  private:
    mpq_t q_;
};

std::ostream& operator<<(std::ostream& os, const Integer& z);
std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }

} // namespace swappoly

#endif
