#ifndef LATPAIR_MATRIX_HPP
#define LATPAIR_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "latpair/scalar.hpp"

namespace latpair {

using IntVector = std::vector<Integer>;
using ScalarVector = std::vector<Scalar>;

/// Dense square matrix of exact scalars, row-major.  Column j is the j-th
/// basis vector of whatever lattice or parallelepiped the matrix describes.
/// All entries must live in one field: at most one nonzero radicand.
class Matrix {
public:
    explicit Matrix(int dim);
    Matrix(int dim, std::initializer_list<Scalar> entries);
    static Matrix identity(int dim);

    int dim() const { return dim_; }
    Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }

    /// Common nonzero radicand of the entries, or 0 if all are rational.
    /// Throws Errc::radicand_mismatch if two distinct nonzero radicands occur.
    long radicand() const;

    friend bool operator==(const Matrix& x, const Matrix& y);

private:
    int dim_;
    std::vector<Scalar> e_;
};

Scalar det(const Matrix& m);
/// Exact inverse; throws Errc::singular_matrix when det = 0.
Matrix inverse(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
ScalarVector mat_vec(const Matrix& m, const ScalarVector& v);
ScalarVector mat_vec(const Matrix& m, const IntVector& v);
Matrix scalar_mul(const Scalar& s, const Matrix& m);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix direct_sum(const Matrix& a, const Matrix& b);

bool is_integral(const Matrix& m);
/// Integer entries and det = +-1 (maps Z^d onto itself).
bool is_unimodular_integral(const Matrix& m);

/// Column-style Hermite normal form H = m * U, U integral unimodular:
/// lower-triangular, positive diagonal, and in each row i the entries left
/// of the diagonal reduced into [0, H[i][i]).  Canonical: hnf(m1) = hnf(m2)
/// iff the two column lattices coincide.
/// Throws Errc::non_integral_input / Errc::singular_matrix.
Matrix hnf(const Matrix& m);

struct BezoutTriple {
    Integer g;  // gcd(m, n) > 0
    Integer l1; // m*l1 + n*l2 = g
    Integer l2;
};

/// Extended gcd with a deterministic representative: among all valid Bezout
/// pairs the one with minimal |l2| is returned, ties broken toward l2 > 0.
/// Throws Errc::both_zero when m = n = 0.
BezoutTriple extended_gcd(const Integer& m, const Integer& n);

bool is_zero(const IntVector& v);
ScalarVector to_scalars(const IntVector& v);
std::string vector_str(const ScalarVector& v);

} // namespace latpair

#endif
