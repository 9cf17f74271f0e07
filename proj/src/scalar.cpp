#include "latpair/scalar.hpp"

#include <cmath>
#include <sstream>

namespace latpair {

const char* errc_name(Errc code) {
    switch (code) {
    case Errc::singular_matrix: return "SingularMatrix";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::radicand_mismatch: return "RadicandMismatch";
    case Errc::non_integral_input: return "NonIntegralInput";
    case Errc::both_zero: return "BothZero";
    case Errc::box_too_large: return "BoxTooLarge";
    case Errc::not_unipotent: return "NotUnipotent";
    case Errc::not_unimodular_integral: return "NotUnimodularIntegral";
    case Errc::zero_parameter: return "ZeroParameter";
    case Errc::not_coprime: return "NotCoprime";
    case Errc::perfect_square_radicand: return "PerfectSquareRadicand";
    case Errc::minkowski_violation: return "MinkowskiViolation";
    case Errc::internal_identity_failure: return "InternalIdentityFailure";
    case Errc::volume_mismatch: return "VolumeMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::dimension_not_2: return "DimensionNot2";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
    }
    return "Unknown";
}

Scalar::Scalar(long num, long den) : a_(num, den), b_(0), r_(0) {
    if (den == 0) throw Error(Errc::division_by_zero, "zero denominator");
    a_.canonicalize();
}

bool Scalar::is_square_free(long r) {
    if (r < 0) return false;
    if (r < 2) return true; // 0 and 1 have no square prime factor
    for (long p = 2; p * p <= r; ++p) {
        if (r % (p * p) == 0) return false;
        while (r % p == 0) r /= p;
    }
    return true;
}

Scalar Scalar::quadratic(const Rational& a, const Rational& b, long r) {
    if (r < 0 || !is_square_free(r) || r == 1)
        throw Error(Errc::radicand_mismatch,
                    "radicand must be 0 or a square-free integer >= 2, got " + std::to_string(r));
    Scalar s;
    s.a_ = a;
    s.b_ = b;
    s.r_ = r;
    s.a_.canonicalize();
    s.b_.canonicalize();
    s.normalize();
    return s;
}

Scalar Scalar::sqrt_of(long r) {
    if (r < 0) throw Error(Errc::invalid_argument, "sqrt of negative integer");
    long square = 1;
    long core = r;
    for (long p = 2; p * p <= core; ++p) {
        while (core % (p * p) == 0) {
            core /= p * p;
            square *= p;
        }
    }
    if (core <= 1) return Scalar(square * core); // r was a perfect square (or 0/1)
    return quadratic(Rational(0), Rational(square), core);
}

void Scalar::normalize() {
    if (r_ != 0 && sgn(b_) == 0) r_ = 0;
    if (r_ == 0 && sgn(b_) != 0)
        throw Error(Errc::radicand_mismatch, "nonzero radical part with radicand 0");
}

long Scalar::join_radicand(const Scalar& x, const Scalar& y) {
    if (x.r_ == y.r_) return x.r_;
    if (x.r_ == 0) return y.r_;
    if (y.r_ == 0) return x.r_;
    throw Error(Errc::radicand_mismatch,
                "mixed radicands " + std::to_string(x.r_) + " and " + std::to_string(y.r_));
}

bool Scalar::is_integer() const {
    return r_ == 0 && a_.get_den() == 1;
}

Integer Scalar::to_integer() const {
    if (!is_integer()) throw Error(Errc::non_integral_input, "scalar " + str() + " is not an integer");
    return a_.get_num();
}

int Scalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 with b^2 * r.
    Rational lhs = a_ * a_;
    Rational rhs = b_ * b_ * r_;
    int t = cmp(lhs, rhs);
    if (t == 0) return 0; // unreachable for square-free r >= 2, kept for safety
    return sa > 0 ? t : -t;
}

Integer Scalar::floor() const {
    if (r_ == 0) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), a_.get_num().get_mpz_t(), a_.get_den().get_mpz_t());
        return q;
    }
    // Double estimate, then exact adjustment by sign tests.
    Integer n(std::floor(to_double()));
    while ((*this - Scalar(n)).sign() < 0) --n;
    while ((*this - Scalar(n + 1)).sign() >= 0) ++n;
    return n;
}

Integer Scalar::ceil() const {
    return -((-*this).floor());
}

Rational Scalar::upper_bound_abs() const {
    Rational bound = ::abs(a_);
    if (sgn(b_) != 0) {
        Integer isq;
        mpz_sqrt(isq.get_mpz_t(), Integer(r_).get_mpz_t());
        bound += ::abs(b_) * Rational(isq + 1);
    }
    return bound;
}

double Scalar::to_double() const {
    double v = a_.get_d();
    if (sgn(b_) != 0) v += b_.get_d() * std::sqrt(static_cast<double>(r_));
    return v;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    r_ = join_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    r_ = join_radicand(*this, o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    long r = join_radicand(*this, o);
    // (a + b sqrt r)(c + d sqrt r) = ac + bdr + (ad + bc) sqrt r
    Rational a = a_ * o.a_ + b_ * o.b_ * r;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    r_ = r;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error(Errc::division_by_zero, "division by zero scalar");
    long r = join_radicand(*this, o);
    // 1/(c + d sqrt r) = (c - d sqrt r)/(c^2 - d^2 r); the norm is nonzero
    // because sqrt(r) is irrational for square-free r >= 2.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * r;
    Rational a = (a_ * o.a_ - b_ * o.b_ * r) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = a;
    b_ = b;
    r_ = r;
    normalize();
    return *this;
}

bool operator==(const Scalar& x, const Scalar& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    // Radicands only matter when a radical part is present.
    return sgn(x.b_) == 0 || x.r_ == y.r_;
}

std::strong_ordering operator<=>(const Scalar& x, const Scalar& y) {
    int s = (x - y).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {
std::string rational_str(const Rational& q) {
    std::ostringstream os;
    if (q.get_den() == 1)
        os << q.get_num();
    else
        os << q.get_num() << "/" << q.get_den();
    return os.str();
}
} // namespace

std::string Scalar::str() const {
    if (sgn(b_) == 0) return rational_str(a_);
    std::ostringstream os;
    os << rational_str(a_);
    os << (sgn(b_) < 0 ? "-" : "+");
    Rational babs = ::abs(b_);
    os << rational_str(babs) << "*sqrt(" << r_ << ")";
    return os.str();
}

} // namespace latpair
