#include "latpair/matrix.hpp"

#include <sstream>
#include <utility>

namespace latpair {

Matrix::Matrix(int dim) : dim_(dim) {
    if (dim < 1) throw Error(Errc::invalid_argument, "matrix dimension must be positive");
    e_.assign(static_cast<size_t>(dim) * dim, Scalar());
}

Matrix::Matrix(int dim, std::initializer_list<Scalar> entries) : Matrix(dim) {
    if (entries.size() != e_.size())
        throw Error(Errc::dimension_mismatch, "entry count does not match dimension");
    size_t idx = 0;
    for (const Scalar& s : entries) e_[idx++] = s;
    radicand(); // validates coherence
}

Matrix Matrix::identity(int dim) {
    Matrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = Scalar(1);
    return m;
}

long Matrix::radicand() const {
    long r = 0;
    for (const Scalar& s : e_) {
        if (s.radicand() == 0) continue;
        if (r == 0)
            r = s.radicand();
        else if (r != s.radicand())
            throw Error(Errc::radicand_mismatch, "matrix entries mix distinct radicands");
    }
    return r;
}

bool operator==(const Matrix& x, const Matrix& y) {
    return x.dim_ == y.dim_ && x.e_ == y.e_;
}

Scalar det(const Matrix& m) {
    const int d = m.dim();
    Matrix w = m;
    Scalar result(1);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row) {
            if (!w.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return Scalar(0);
        if (pivot != col) {
            for (int j = col; j < d; ++j) std::swap(w.at(col, j), w.at(pivot, j));
            result = -result;
        }
        result *= w.at(col, col);
        for (int row = col + 1; row < d; ++row) {
            if (w.at(row, col).is_zero()) continue;
            Scalar f = w.at(row, col) / w.at(col, col);
            for (int j = col; j < d; ++j) w.at(row, j) -= f * w.at(col, j);
        }
    }
    return result;
}

Matrix inverse(const Matrix& m) {
    const int d = m.dim();
    Matrix w = m;
    Matrix inv = Matrix::identity(d);
    for (int col = 0; col < d; ++col) {
        int pivot = -1;
        for (int row = col; row < d; ++row) {
            if (!w.at(row, col).is_zero()) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) throw Error(Errc::singular_matrix, "matrix is singular");
        if (pivot != col) {
            for (int j = 0; j < d; ++j) {
                std::swap(w.at(col, j), w.at(pivot, j));
                std::swap(inv.at(col, j), inv.at(pivot, j));
            }
        }
        Scalar p = w.at(col, col);
        for (int j = 0; j < d; ++j) {
            w.at(col, j) /= p;
            inv.at(col, j) /= p;
        }
        for (int row = 0; row < d; ++row) {
            if (row == col || w.at(row, col).is_zero()) continue;
            Scalar f = w.at(row, col);
            for (int j = 0; j < d; ++j) {
                w.at(row, j) -= f * w.at(col, j);
                inv.at(row, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.dim() != b.dim())
        throw Error(Errc::dimension_mismatch, "matrix product of mismatched dimensions");
    const int d = a.dim();
    Matrix out(d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < d; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

ScalarVector mat_vec(const Matrix& m, const ScalarVector& v) {
    if (static_cast<size_t>(m.dim()) != v.size())
        throw Error(Errc::dimension_mismatch, "matrix-vector product of mismatched dimensions");
    const int d = m.dim();
    ScalarVector out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += m.at(i, j) * v[j];
        }
    return out;
}

ScalarVector mat_vec(const Matrix& m, const IntVector& v) {
    return mat_vec(m, to_scalars(v));
}

Matrix scalar_mul(const Scalar& s, const Matrix& m) {
    Matrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) out.at(i, j) = s * m.at(i, j);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    Matrix out(da * db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int k = 0; k < db; ++k)
                for (int l = 0; l < db; ++l)
                    out.at(i * db + k, j * db + l) = a.at(i, j) * b.at(k, l);
        }
    out.radicand();
    return out;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    const int da = a.dim();
    const int db = b.dim();
    Matrix out(da + db);
    for (int i = 0; i < da; ++i)
        for (int j = 0; j < da; ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < db; ++j) out.at(da + i, da + j) = b.at(i, j);
    out.radicand();
    return out;
}

bool is_integral(const Matrix& m) {
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j)
            if (!m.at(i, j).is_integer()) return false;
    return true;
}

bool is_unimodular_integral(const Matrix& m) {
    if (!is_integral(m)) return false;
    Scalar d = det(m);
    return d == Scalar(1) || d == Scalar(-1);
}

namespace {

// Column Euclid step: col_dst -= q * col_src, rows from `row` down.
void column_axpy(std::vector<IntVector>& cols, int dst, int src, const Integer& q) {
    if (q == 0) return;
    IntVector& cd = cols[dst];
    const IntVector& cs = cols[src];
    for (size_t i = 0; i < cd.size(); ++i) cd[i] -= q * cs[i];
}

} // namespace

Matrix hnf(const Matrix& m) {
    const int d = m.dim();
    if (!is_integral(m)) throw Error(Errc::non_integral_input, "hnf requires an integral matrix");
    // Work column-wise on arbitrary-precision integers.
    std::vector<IntVector> cols(d, IntVector(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) cols[j][i] = m.at(i, j).to_integer();

    for (int i = 0; i < d; ++i) {
        // Gcd-eliminate row i across columns i..d-1 until only cols[i] holds
        // a nonzero entry in this row.
        for (;;) {
            int j = -1;
            for (int c = i + 1; c < d; ++c)
                if (cols[c][i] != 0) {
                    j = c;
                    break;
                }
            if (j < 0) break;
            if (cols[i][i] == 0) {
                std::swap(cols[i], cols[j]);
                continue;
            }
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[i][i].get_mpz_t());
            column_axpy(cols, j, i, q);
            if (cols[j][i] != 0) std::swap(cols[i], cols[j]);
        }
        if (cols[i][i] == 0) throw Error(Errc::singular_matrix, "hnf of a singular matrix");
        if (cols[i][i] < 0)
            for (int r = 0; r < d; ++r) cols[i][r] = -cols[i][r];
        // Reduce the entries left of the diagonal in row i into [0, diag).
        for (int c = 0; c < i; ++c) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), cols[c][i].get_mpz_t(), cols[i][i].get_mpz_t());
            column_axpy(cols, c, i, q);
        }
    }

    Matrix out(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) out.at(i, j) = Scalar(cols[j][i]);
    return out;
}

BezoutTriple extended_gcd(const Integer& m, const Integer& n) {
    if (m == 0 && n == 0) throw Error(Errc::both_zero, "extended_gcd(0, 0)");
    BezoutTriple t;
    mpz_gcdext(t.g.get_mpz_t(), t.l1.get_mpz_t(), t.l2.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    // Normalize to the minimal-|l2| representative: l1 += k*(n/g), l2 -= k*(m/g).
    if (m != 0) {
        Integer step = m / t.g;
        Integer astep = ::abs(step);
        Integer k;
        // Round l2/step to the nearest integer, then fix up by comparison.
        mpz_fdiv_q(k.get_mpz_t(), t.l2.get_mpz_t(), step.get_mpz_t());
        Integer best_l2 = t.l2 - k * step;
        for (long delta = -1; delta <= 2; ++delta) {
            Integer cand = t.l2 - (k + delta) * step;
            Integer ac = ::abs(cand);
            Integer ab = ::abs(best_l2);
            if (ac < ab || (ac == ab && cand > best_l2)) best_l2 = cand;
        }
        Integer shift = (t.l2 - best_l2) / step;
        t.l2 = best_l2;
        t.l1 += shift * (n / t.g);
    }
    return t;
}

bool is_zero(const IntVector& v) {
    for (const Integer& x : v)
        if (x != 0) return false;
    return true;
}

ScalarVector to_scalars(const IntVector& v) {
    ScalarVector out;
    out.reserve(v.size());
    for (const Integer& x : v) out.emplace_back(x);
    return out;
}

std::string vector_str(const ScalarVector& v) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << v[i].str();
    }
    os << ")";
    return os.str();
}

} // namespace latpair
