#include "latpair/lattice.hpp"

namespace latpair {

Lattice::Lattice(Matrix basis) : basis_(std::move(basis)), covolume_(det(basis_).abs()) {
    if (covolume_.is_zero())
        throw Error(Errc::singular_matrix, "lattice basis is singular");
}

bool lattices_equal(const Lattice& a, const Lattice& b) {
    if (a.dim() != b.dim()) return false;
    Matrix q = mat_mul(inverse(b.basis()), a.basis());
    bool equal = is_unimodular_integral(q);
    if (is_integral(a.basis()) && is_integral(b.basis())) {
        bool hnf_equal = hnf(a.basis()) == hnf(b.basis());
        if (hnf_equal != equal)
            throw Error(Errc::internal_identity_failure,
                        "lattice equality and HNF canonicalization disagree");
    }
    return equal;
}

LatticePair::LatticePair(Lattice gamma1, Lattice gamma2)
    : gamma1_(std::move(gamma1)), gamma2_(std::move(gamma2)) {
    if (gamma1_.dim() != gamma2_.dim())
        throw Error(Errc::dimension_mismatch, "pair lattices of different dimension");
    if (!(gamma1_.covolume() == gamma2_.covolume()))
        throw Error(Errc::volume_mismatch,
                    "pair lattices must have equal covolume: " + gamma1_.covolume().str() +
                        " vs " + gamma2_.covolume().str());
}

NormalizedPair normalize_pair(const LatticePair& p) {
    const Matrix& m1 = p.gamma1().basis();
    Matrix quotient = mat_mul(inverse(m1), p.gamma2().basis());
    return NormalizedPair{
        LatticePair(Lattice::integers(p.dim()), Lattice(quotient)),
        m1,
    };
}

} // namespace latpair
