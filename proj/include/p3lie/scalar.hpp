#ifndef P3LIE_SCALAR_HPP
#define P3LIE_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace p3lie {

/// Error for malformed user input (files, indices, templates). CLI maps it to exit 2.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/*
 * Exact rational scalar over GMP. Always canonical: lowest terms, positive
 * denominator. Equality is value equality. Serializes as a decimal integer
 * or "p/q" with q > 0.
 */
class Scalar {
public:
    Scalar() : v_(0) {}
    Scalar(int n) : v_(n) {}
    Scalar(long n) : v_(static_cast<signed long>(n)) {}
    Scalar(long num, long den);
    explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Accepts "p", "-p", "p/q"; throws InputError on anything else or q == 0.
    static Scalar parse(const std::string& text);

    bool isZero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
    int sign() const { return mpq_sgn(v_.get_mpq_t()); }
    std::string str() const;

    std::string numeratorStr() const { return v_.get_num().get_str(); }
    std::string denominatorStr() const { return v_.get_den().get_str(); }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }

    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { a += b; return a; }
    friend Scalar operator-(Scalar a, const Scalar& b) { a -= b; return a; }
    friend Scalar operator*(Scalar a, const Scalar& b) { a *= b; return a; }
    friend Scalar operator/(Scalar a, const Scalar& b) { a /= b; return a; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace p3lie

#endif
