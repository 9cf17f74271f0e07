#ifndef LATPAIR_BOXENUM_HPP
#define LATPAIR_BOXENUM_HPP

#include <cstdint>
#include <functional>

#include "latpair/lattice.hpp"

namespace latpair {

/// Default a-priori candidate-cell limit for enumerations (desk scale).
inline constexpr std::uint64_t kDefaultMaxCells = 100'000'000;

enum class Topology {
    open_pm1,     // N(-1,1)^d
    closed_pm1,   // N[-1,1]^d
    half_open_01, // N[0,1)^d
};

/// Parallelepiped N * I^d for the interval I selected by the topology.
/// The inverse of N is computed once at construction.
class Parallelepiped {
public:
    Parallelepiped(Matrix n, Topology topology);

    const Matrix& n() const { return n_; }
    const Matrix& n_inv() const { return n_inv_; }
    Topology topology() const { return topology_; }
    int dim() const { return n_.dim(); }

private:
    Matrix n_;
    Matrix n_inv_;
    Topology topology_;
};

struct EnumerationResult {
    std::vector<IntVector> points;     // the k with basis*k inside the region
    std::vector<ScalarVector> images;  // basis*k, exact
    bool truncated = false;            // reserved; always false
};

/// Exact test of basis_image in the region: every coordinate of
/// inverse(N)*v inside the topology's interval.
bool membership(const ScalarVector& v, const Parallelepiped& box);

/// Per-coordinate bounds L_i with: b*k in (-1,1)^d implies |k_i| <= L_i.
/// L_i = ceil of the rational upper bound of the i-th row sum of
/// |inverse(b)|; ceil-style slack is intended, exact filtering discards the
/// excess.  Valid for all three topologies since each region lies in [-1,1]^d.
IntVector integer_bounding_box(const Matrix& b);

/// The exact set { k in Z^d : latt.basis*k in box }, visited and returned in
/// lexicographic order of k.  Complete by construction: candidates outside
/// the integer bounding box cannot be solutions, and pruned subtrees are
/// proven empty by exact interval arithmetic.
/// Throws Errc::box_too_large when the a-priori candidate-cell count
/// exceeds max_cells.
EnumerationResult enumerate_points(const Lattice& latt, const Parallelepiped& box,
                                   std::uint64_t max_cells = kDefaultMaxCells);

namespace detail {

/// Core affine solver: all k in Z^d with offset + C*k in region^d, visited
/// in lexicographic order.  `emit` returns false to stop early (used by
/// verdict-only checks; never affects which points exist).
struct RegionInterval {
    Scalar lo, hi;
    bool lo_open = false;
    bool hi_open = false;
    bool contains(const Scalar& x) const;
};

RegionInterval region_interval(Topology t);

void for_each_affine_solution(const Matrix& c, const ScalarVector& offset,
                              const RegionInterval& region, std::uint64_t max_cells,
                              const std::function<bool(const IntVector&)>& emit);

} // namespace detail

} // namespace latpair

#endif
