#pragma once

#include <utility>

#include "superres/blockdata.hpp"
#include "superres/evensystems.hpp"
#include "superres/weight.hpp"

namespace superres {

// Exact dimension arithmetic.  The general Weyl engine is authoritative;
// the closed forms below exist for the families whose growth they feed and
// are cross-checked against the engine.

/// dim of the sp(2n)-simple with first-row weight (r, 0, ..., 0); a
/// polynomial in r of degree 2n-1.
inline Int sp_row_dim(int n, const Int& r) {
    if (r < 0) throw usage_error("sp_row_dim requires r >= 0");
    std::vector<Int> hw(static_cast<std::size_t>(n), Int(0));
    hw[0] = r;
    return weyl_dim(EvenRootSystem::c(n), hw);
}

/// G2 simple-module dimension, closed form (six linear factors over 5!).
inline Int g2_dim(const Int& m1, const Int& m2) {
    if (m1 < 0 || m2 < 0) throw usage_error("g2_dim requires nonnegative coordinates");
    Int prod = (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) * (m1 + 2 * m2 + 3) * (m1 + 3 * m2 + 4) *
               (2 * m1 + 3 * m2 + 5);
    if (prod % 120 != 0) throw internal_error("g2_dim product not divisible by 120");
    return prod / 120;
}

/// so7 simple-module dimension, closed form (nine linear factors over 6!).
inline Int so7_dim(const Int& m1, const Int& m2, const Int& m3) {
    if (m1 < 0 || m2 < 0 || m3 < 0) throw usage_error("so7_dim requires nonnegative coordinates");
    Int prod = (m1 + 1) * (m2 + 1) * (m3 + 1) * (m1 + m2 + 2) * (m2 + m3 + 2) *
               (2 * m2 + m3 + 3) * (m1 + m2 + m3 + 3) * (m1 + 2 * m2 + m3 + 4) *
               (2 * m1 + 2 * m2 + m3 + 5);
    if (prod % 720 != 0) throw internal_error("so7_dim product not divisible by 720");
    return prod / 720;
}

/// Dimension of the simple g_0bar-module attached to the weight.
inline Int g0_dim(const SuperWeight& w) {
    switch (w.family.tag) {
        case FamilyTag::Osp2_2n:
            return weyl_dim(EvenRootSystem::c(w.family.n), w.coeffs);
        case FamilyTag::Osp3_2: {
            Rat d = (w.eps + 1) * Rat(w.coeffs[0] + 1);
            if (!is_integral(d))
                throw usage_error("g0_dim: osp(3|2) weight outside the block tables");
            return numerator(d);
        }
        case FamilyTag::D21a: {
            Rat d = (w.eps + 1) * Rat(w.coeffs[0] + 1) * Rat(w.coeffs[1] + 1);
            if (!is_integral(d)) throw usage_error("g0_dim: non-integral D(2,1;alpha) weight");
            return numerator(d);
        }
        case FamilyTag::G3: {
            if (!is_integral(w.eps)) throw usage_error("g0_dim: non-integral G(3) weight");
            return (numerator(w.eps) + 1) * g2_dim(w.coeffs[0], w.coeffs[1]);
        }
        case FamilyTag::F4: {
            if (!is_integral(w.eps)) throw usage_error("g0_dim: non-integral F(4) weight");
            return (numerator(w.eps) + 1) * so7_dim(w.coeffs[0], w.coeffs[1], w.coeffs[2]);
        }
    }
    throw internal_error("unreachable family");
}

/// dim K(lambda) = 2^(2n) * dim L_0(lambda) over osp(2|2n).
inline Int kac_dim(int n, const SuperWeight& w) {
    if (w.family.tag != FamilyTag::Osp2_2n || w.family.n != n)
        throw usage_error("kac_dim: weight is not over osp(2|" + std::to_string(2 * n) + ")");
    return pow2(static_cast<unsigned>(2 * n)) * g0_dim(w);
}

/// dim P^(i) = dim K^(i) + dim K^(i-1) on the principal block; the orbit
/// weight 0^(i) has delta-part (i,0,..) for i >= 0 and (-i-1,0,..) below.
inline Int proj_dim_principal(int n, const Int& i) {
    auto row = [&](const Int& j) { return j >= 0 ? j : Int(-j - 1); };
    Int k_i = sp_row_dim(n, row(i));
    Int k_im1 = sp_row_dim(n, row(i - 1));
    return pow2(static_cast<unsigned>(2 * n)) * (k_i + k_im1);
}

/// (dim S_0bar(mu), 2^(dim g_1bar) * dim S_0bar(mu)) for an exceptional-family
/// weight: the projective-cover dimension sandwich.
inline std::pair<Int, Int> proj_dim_bounds(const SuperWeight& w) {
    if (w.family.tag == FamilyTag::Osp2_2n)
        throw usage_error("proj_dim_bounds applies to the exceptional families");
    Int lo = g0_dim(w);
    Int hi = pow2(static_cast<unsigned>(w.family.dim_g1_bar())) * lo;
    return {lo, hi};
}

} // namespace superres
