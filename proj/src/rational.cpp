#include "swappoly/rational.hpp"

#include <limits>
#include <ostream>

#include "swappoly/error.hpp"

namespace swappoly {

Integer::Integer(const std::string& s) {
    if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
        mpz_clear(z_);
        throw ParseError("not an integer literal: '" + s + "'");
    }
}

Integer operator+(const Integer& a, const Integer& b) {
    Integer r;
    mpz_add(r.z_, a.z_, b.z_);
    return r;
}

Integer operator-(const Integer& a, const Integer& b) {
    Integer r;
    mpz_sub(r.z_, a.z_, b.z_);
    return r;
}

Integer operator*(const Integer& a, const Integer& b) {
    Integer r;
    mpz_mul(r.z_, a.z_, b.z_);
    return r;
}

Integer Integer::operator-() const {
    Integer r;
    mpz_neg(r.z_, z_);
    return r;
}

Integer Integer::div_exact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.z_, a.z_, b.z_);
    return r;
}

Integer Integer::gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.z_, a.z_, b.z_);
    return r;
}

Integer Integer::lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.z_, a.z_, b.z_);
    return r;
}

Integer Integer::pow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.z_, base.z_, e);
    return r;
}

Integer Integer::factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.z_, n);
    return r;
}

bool Integer::fits_i64() const {
    static_assert(sizeof(long) == 8, "64-bit long expected");
    return mpz_fits_slong_p(z_) != 0;
}

std::int64_t Integer::to_i64() const {
    if (!fits_i64()) throw Error("integer does not fit in 64 bits: " + str());
    return mpz_get_si(z_);
}

std::string Integer::str() const {
    char* s = mpz_get_str(nullptr, 10, z_);
    std::string out(s);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(s, out.size() + 1);
    return out;
}

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_si(q_, num, 1);
    Rational d;
    mpq_set_si(d.q_, den, 1);
    mpq_div(q_, q_, d.q_);
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den.is_zero()) throw Error("rational with zero denominator");
    mpq_init(q_);
    mpq_set_z(q_, num.raw());
    mpq_t d;
    mpq_init(d);
    mpq_set_z(d, den.raw());
    mpq_div(q_, q_, d);
    mpq_clear(d);
}

Rational::Rational(const Integer& num) {
    mpq_init(q_);
    mpq_set_z(q_, num.raw());
}

Rational Rational::from_string(const std::string& s) {
    Rational r;
    if (mpq_set_str(r.q_, s.c_str(), 10) != 0) throw ParseError("not a rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.q_)) == 0) throw ParseError("zero denominator in '" + s + "'");
    mpq_canonicalize(r.q_);
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    mpq_add(r.q_, a.q_, b.q_);
    return r;
}

Rational operator-(const Rational& a, const Rational& b) {
    Rational r;
    mpq_sub(r.q_, a.q_, b.q_);
    return r;
}

Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    mpq_mul(r.q_, a.q_, b.q_);
    return r;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw Error("rational division by zero");
    Rational r;
    mpq_div(r.q_, a.q_, b.q_);
    return r;
}

Rational Rational::operator-() const {
    Rational r;
    mpq_neg(r.q_, q_);
    return r;
}

bool Rational::is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }

Integer Rational::numerator() const {
    Integer z;
    mpz_set(z.raw(), mpq_numref(q_));
    return z;
}

Integer Rational::denominator() const {
    Integer z;
    mpz_set(z.raw(), mpq_denref(q_));
    return z;
}

Rational Rational::inverse() const {
    if (is_zero()) throw Error("inverse of zero");
    Rational r;
    mpq_inv(r.q_, q_);
    return r;
}

std::string Rational::str() const {
    std::string n = numerator().str();
    if (is_integer()) return n;
    return n + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Integer& z) { return os << z.str(); }
std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

} // namespace swappoly
