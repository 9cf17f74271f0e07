#ifndef LATPAIR_SCALAR_HPP
#define LATPAIR_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <string>

#include "latpair/errors.hpp"

namespace latpair {

using Integer = mpz_class;
using Rational = mpq_class;

/// Element of Q or of a quadratic field Q(sqrt(r)): value = a + b*sqrt(r).
///
/// Representation invariants:
///   - a, b are canonical GMP rationals (lowest terms, positive denominator).
///   - r is a square-free integer >= 0; r == 0 encodes a plain rational,
///     in which case b == 0.  Whenever b collapses to 0 the radicand is
///     normalized back to 0, so equality is plain componentwise equality.
///
/// A rational (r == 0) combines freely with scalars over any radicand; this
/// is the embedding of Q into Q(sqrt(r)), not a coercion between fields.
/// Two distinct nonzero radicands never mix: arithmetic throws
/// Errc::radicand_mismatch.
class Scalar {
public:
    Scalar() : a_(0), b_(0), r_(0) {}
    Scalar(long n) : a_(n), b_(0), r_(0) {} // NOLINT(google-explicit-constructor)
    explicit Scalar(const Integer& n) : a_(n), b_(0), r_(0) {}
    explicit Scalar(const Rational& q) : a_(q), b_(0), r_(0) { a_.canonicalize(); }
    Scalar(long num, long den);

    /// a + b*sqrt(r).  r must be 0 or square-free >= 2.
    static Scalar quadratic(const Rational& a, const Rational& b, long r);
    /// Exact sqrt(r) for any integer r >= 0; extracts the square part, so
    /// the result always satisfies the square-free invariant.
    static Scalar sqrt_of(long r);

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    long radicand() const { return r_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return r_ == 0; }
    bool is_integer() const;
    /// pre: is_integer()
    Integer to_integer() const;

    /// Exact sign in {-1, 0, +1}.
    int sign() const;
    Scalar abs() const { return sign() < 0 ? -*this : *this; }
    /// Exact floor/ceil as arbitrary-precision integers.
    Integer floor() const;
    Integer ceil() const;
    /// Exact rational upper bound on |value|: |a| + |b|*(isqrt(r)+1).
    Rational upper_bound_abs() const;
    double to_double() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
    friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
    friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
    friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }

    friend bool operator==(const Scalar& x, const Scalar& y);
    friend std::strong_ordering operator<=>(const Scalar& x, const Scalar& y);

    /// Canonical text form: "n", "n/d", or "A+B*sqrt(r)" / "A-B*sqrt(r)"
    /// with A, B in the rational form above.  parse_scalar round-trips it.
    std::string str() const;

    /// r is square-free iff no prime square divides it.
    static bool is_square_free(long r);

private:
    void normalize();
    // Shared radicand of two operands; throws on a genuine mix.
    static long join_radicand(const Scalar& x, const Scalar& y);

    Rational a_;
    Rational b_;
    long r_;
};

} // namespace latpair

#endif
