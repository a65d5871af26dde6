#ifndef RM3_RATIONAL_HPP_
#define RM3_RATIONAL_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <ostream>
#include <sstream>
#include <string>

#include "rm3/errors.hpp"

namespace rm3 {

/// Exact arbitrary-precision rational.
///
/// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw input_error("rational with zero denominator");
        v_.canonicalize();
    }

    /// Parses "a" or "a/b" with optional sign.
    static Rational parse(const std::string& s) {
        try {
            mpq_class q(s);
            q.canonicalize();
            if (q.get_den() == 0) throw input_error("zero denominator: " + s);
            return Rational(q);
        } catch (const std::invalid_argument&) {
            throw input_error("cannot parse rational: '" + s + "'");
        }
    }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_), already_canonical{}); }
    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), already_canonical{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), already_canonical{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), already_canonical{}); }
    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw input_error("rational division by zero");
        return Rational(mpq_class(v_ / o.v_), already_canonical{});
    }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    Rational inv() const {
        if (is_zero()) throw input_error("inverse of zero");
        return Rational(mpq_class(1 / v_), already_canonical{});
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_)), already_canonical{}); }

    Rational pow(unsigned e) const {
        Rational r(1), b(*this);
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    std::string str() const {
        std::ostringstream os;
        os << v_;
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    struct already_canonical {};
    Rational(mpq_class q, already_canonical) : v_(std::move(q)) {}
    mpq_class v_;
};

inline Rational gcd(const Rational& a, const Rational& b) {
    // gcd of rationals: gcd(nums)/lcm(dens); used for polynomial content.
    mpz_class gn, ld;
    mpz_gcd(gn.get_mpz_t(), a.num().get_mpz_t(), b.num().get_mpz_t());
    mpz_lcm(ld.get_mpz_t(), a.den().get_mpz_t(), b.den().get_mpz_t());
    if (gn == 0 && ld == 1) return Rational(0);
    return Rational(gn, ld);
}

inline mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

}  // namespace rm3

#endif  // RM3_RATIONAL_HPP_
