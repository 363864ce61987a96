#ifndef RESOLV_RATIONAL_HPP
#define RESOLV_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace resolv {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Arbitrary-precision rational, always stored canonically:
/// gcd(|num|, den) = 1 and den > 0.
class BigRat {
public:
    BigRat() : v_(0) {}
    BigRat(long n) : v_(n) {}
    BigRat(int n) : v_(n) {}
    BigRat(long n, long d) : v_(n, d) {
        if (d == 0) throw error("BigRat: zero denominator");
        v_.canonicalize();
    }
    explicit BigRat(const mpz_class& n) : v_(n) {}
    BigRat(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw error("BigRat: zero denominator");
        v_.canonicalize();
    }
    /// Accepts "123", "-4/6" (canonicalized to -2/3).
    explicit BigRat(const std::string& s) {
        if (mpq_set_str(v_.get_mpq_t(), s.c_str(), 10) != 0)
            throw error("BigRat: malformed literal '" + s + "'");
        if (mpq_denref(v_.get_mpq_t())->_mp_size == 0)
            throw error("BigRat: zero denominator in '" + s + "'");
        v_.canonicalize();
    }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    BigRat operator-() const { return BigRat(mpq_class(-v_)); }
    BigRat& operator+=(const BigRat& o) { v_ += o.v_; return *this; }
    BigRat& operator-=(const BigRat& o) { v_ -= o.v_; return *this; }
    BigRat& operator*=(const BigRat& o) { v_ *= o.v_; return *this; }
    BigRat& operator/=(const BigRat& o) {
        if (o.is_zero()) throw error("BigRat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    friend bool operator==(const BigRat& a, const BigRat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const BigRat& a, const BigRat& b) { return a.v_ != b.v_; }
    friend bool operator<(const BigRat& a, const BigRat& b) { return a.v_ < b.v_; }
    friend bool operator>(const BigRat& a, const BigRat& b) { return a.v_ > b.v_; }

    BigRat pow(unsigned e) const {
        BigRat r(1), base(*this);
        unsigned k = e;
        while (k) {
            if (k & 1) r *= base;
            base *= base;
            k >>= 1;
        }
        return r;
    }

    BigRat abs() const { return sign() < 0 ? -*this : *this; }

    /// "n" when integral, otherwise "n/d".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    explicit BigRat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

inline BigRat pow2(unsigned e) { return BigRat(2).pow(e); }

}  // namespace resolv

#endif
