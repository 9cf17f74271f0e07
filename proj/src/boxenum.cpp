#include "latpair/boxenum.hpp"

namespace latpair {

Parallelepiped::Parallelepiped(Matrix n, Topology topology)
    : n_(std::move(n)), n_inv_(inverse(n_)), topology_(topology) {}

namespace detail {

bool RegionInterval::contains(const Scalar& x) const {
    int cl = (x - lo).sign();
    if (cl < 0 || (cl == 0 && lo_open)) return false;
    int ch = (hi - x).sign();
    if (ch < 0 || (ch == 0 && hi_open)) return false;
    return true;
}

RegionInterval region_interval(Topology t) {
    switch (t) {
    case Topology::open_pm1: return {Scalar(-1), Scalar(1), true, true};
    case Topology::closed_pm1: return {Scalar(-1), Scalar(1), false, false};
    case Topology::half_open_01: return {Scalar(0), Scalar(1), false, true};
    }
    throw Error(Errc::invalid_argument, "bad topology");
}

namespace {

struct AffineSearch {
    const Matrix& c;
    const RegionInterval& region;
    int d;
    IntVector klo, khi;                     // a-priori integer range per coordinate
    std::vector<std::vector<Scalar>> rlo;   // rlo[i][t] = min over k of sum_{j>=t} c_ij k_j
    std::vector<std::vector<Scalar>> rhi;
    ScalarVector partial;                   // offset + sum of fixed columns
    IntVector cur;
    const std::function<bool(const IntVector&)>& emit;

    bool recurse(int t) {
        if (t == d) {
            for (int i = 0; i < d; ++i)
                if (!region.contains(partial[i])) return true;
            return emit(cur);
        }
        // Feasible closed interval for k_t from every constraint this
        // coordinate participates in, given the remaining columns can
        // contribute anything within their interval hulls.
        bool empty = false;
        Integer lo = klo[t];
        Integer hi = khi[t];
        for (int i = 0; i < d && !empty; ++i) {
            const Scalar& cit = c.at(i, t);
            if (cit.is_zero()) continue;
            Scalar lo_num = region.lo - partial[i] - rhi[i][t + 1];
            Scalar hi_num = region.hi - partial[i] - rlo[i][t + 1];
            Scalar a = lo_num / cit;
            Scalar b = hi_num / cit;
            if (cit.sign() < 0) std::swap(a, b);
            Integer ai = a.ceil();
            Integer bi = b.floor();
            if (ai > lo) lo = ai;
            if (bi < hi) hi = bi;
            if (lo > hi) empty = true;
        }
        if (empty) return true;

        ScalarVector saved = partial;
        ScalarVector col(d);
        for (int i = 0; i < d; ++i) col[i] = c.at(i, t);
        for (int i = 0; i < d; ++i)
            if (!col[i].is_zero()) partial[i] += col[i] * Scalar(lo);
        for (Integer k = lo;; ++k) {
            cur[t] = k;
            if (!recurse(t + 1)) return false;
            if (k == hi) break;
            for (int i = 0; i < d; ++i)
                if (!col[i].is_zero()) partial[i] += col[i];
        }
        partial = saved;
        return true;
    }
};

} // namespace

void for_each_affine_solution(const Matrix& c, const ScalarVector& offset,
                              const RegionInterval& region, std::uint64_t max_cells,
                              const std::function<bool(const IntVector&)>& emit) {
    const int d = c.dim();
    if (static_cast<size_t>(d) != offset.size())
        throw Error(Errc::dimension_mismatch, "offset dimension mismatch");
    Matrix cinv = inverse(c);

    // k_i ranges over cinv * ([lo,hi]^d - offset), hull per coordinate.
    IntVector klo(d), khi(d);
    for (int i = 0; i < d; ++i) {
        Scalar mn(0), mx(0);
        for (int j = 0; j < d; ++j) {
            const Scalar& e = cinv.at(i, j);
            if (e.is_zero()) continue;
            Scalar v1 = e * (region.lo - offset[j]);
            Scalar v2 = e * (region.hi - offset[j]);
            if (v1 > v2) std::swap(v1, v2);
            mn += v1;
            mx += v2;
        }
        klo[i] = mn.ceil();
        khi[i] = mx.floor();
    }

    Integer cells(1);
    for (int i = 0; i < d; ++i) {
        if (klo[i] > khi[i]) return; // provably empty
        cells *= khi[i] - klo[i] + 1;
    }
    if (cells > Integer(static_cast<unsigned long>(max_cells)))
        throw Error(Errc::box_too_large,
                    "candidate cell count " + cells.get_str() + " exceeds limit " +
                        std::to_string(max_cells));

    AffineSearch search{c, region, d, klo, khi, {}, {}, offset, IntVector(d), emit};
    search.rlo.assign(d, std::vector<Scalar>(d + 1));
    search.rhi.assign(d, std::vector<Scalar>(d + 1));
    for (int i = 0; i < d; ++i) {
        for (int t = d - 1; t >= 0; --t) {
            Scalar mn = search.rlo[i][t + 1];
            Scalar mx = search.rhi[i][t + 1];
            const Scalar& e = c.at(i, t);
            if (!e.is_zero()) {
                Scalar v1 = e * Scalar(klo[t]);
                Scalar v2 = e * Scalar(khi[t]);
                if (v1 > v2) std::swap(v1, v2);
                mn += v1;
                mx += v2;
            }
            search.rlo[i][t] = mn;
            search.rhi[i][t] = mx;
        }
    }
    search.recurse(0);
}

} // namespace detail

bool membership(const ScalarVector& v, const Parallelepiped& box) {
    if (static_cast<size_t>(box.dim()) != v.size())
        throw Error(Errc::dimension_mismatch, "vector dimension does not match box");
    ScalarVector z = mat_vec(box.n_inv(), v);
    detail::RegionInterval region = detail::region_interval(box.topology());
    for (const Scalar& x : z)
        if (!region.contains(x)) return false;
    return true;
}

IntVector integer_bounding_box(const Matrix& b) {
    Matrix binv = inverse(b);
    const int d = b.dim();
    IntVector bounds(d);
    for (int i = 0; i < d; ++i) {
        Scalar row_sum(0);
        for (int j = 0; j < d; ++j) row_sum += binv.at(i, j).abs();
        Rational ub = row_sum.upper_bound_abs();
        Integer l;
        mpz_cdiv_q(l.get_mpz_t(), ub.get_num().get_mpz_t(), ub.get_den().get_mpz_t());
        bounds[i] = l;
    }
    return bounds;
}

EnumerationResult enumerate_points(const Lattice& latt, const Parallelepiped& box,
                                   std::uint64_t max_cells) {
    if (latt.dim() != box.dim())
        throw Error(Errc::dimension_mismatch, "lattice and box dimensions differ");
    Matrix c = mat_mul(box.n_inv(), latt.basis());

    // Documented a-priori scan size; the walk below visits a subset of it.
    IntVector bounds = integer_bounding_box(c);
    Integer cells(1);
    for (const Integer& l : bounds) cells *= 2 * l + 1;
    if (cells > Integer(static_cast<unsigned long>(max_cells)))
        throw Error(Errc::box_too_large,
                    "bounding box cell count " + cells.get_str() + " exceeds limit " +
                        std::to_string(max_cells));

    EnumerationResult out;
    ScalarVector offset(latt.dim(), Scalar(0));
    detail::for_each_affine_solution(
        c, offset, detail::region_interval(box.topology()), max_cells,
        [&](const IntVector& k) {
            out.points.push_back(k);
            out.images.push_back(mat_vec(latt.basis(), k));
            return true;
        });
    return out;
}

} // namespace latpair
