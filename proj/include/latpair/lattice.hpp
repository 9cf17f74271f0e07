#ifndef LATPAIR_LATTICE_HPP
#define LATPAIR_LATTICE_HPP

#include "latpair/matrix.hpp"

namespace latpair {

/// Full-rank lattice Gamma = basis * Z^d.  The covolume |det basis| is
/// computed once at construction and kept alongside the basis.
class Lattice {
public:
    explicit Lattice(Matrix basis);
    static Lattice integers(int dim) { return Lattice(Matrix::identity(dim)); }

    const Matrix& basis() const { return basis_; }
    const Scalar& covolume() const { return covolume_; }
    int dim() const { return basis_.dim(); }

private:
    Matrix basis_;
    Scalar covolume_;
};

inline const Scalar& covolume(const Lattice& l) { return l.covolume(); }

/// True iff the two bases generate the same lattice: inverse(b)*a must be
/// integral with det +-1.  For integral bases the verdict is cross-checked
/// against HNF equality; disagreement would be a library bug and throws.
bool lattices_equal(const Lattice& a, const Lattice& b);

/// Two full-rank lattices of equal covolume; unequal volumes are rejected
/// at construction (good pairs are only defined for equal volume).
class LatticePair {
public:
    LatticePair(Lattice gamma1, Lattice gamma2);

    const Lattice& gamma1() const { return gamma1_; }
    const Lattice& gamma2() const { return gamma2_; }
    int dim() const { return gamma1_.dim(); }

private:
    Lattice gamma1_;
    Lattice gamma2_;
};

struct NormalizedPair {
    LatticePair pair; // gamma1 = Z^d, gamma2 = inverse(M1)*M2 * Z^d
    Matrix back_map;  // M1; transports normalized witnesses back
};

NormalizedPair normalize_pair(const LatticePair& p);

} // namespace latpair

#endif
