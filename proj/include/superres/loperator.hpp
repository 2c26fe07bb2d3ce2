#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "superres/rootdata.hpp"

namespace superres {

// The L-operator on atypical dominant weights of osp(2|2n):
//   lambda^L = omega(lambda + rho - k*gamma) - rho
// with gamma the isotropic witness root, k the smallest positive shift making
// the delta-entries regular for the even Weyl group, and omega the unique
// signed permutation rendering the result dominant.

/// One application step: the witness gamma, the shift k, and the signed
/// permutation omega (sort by absolute value, descending, all signs made
/// positive).
struct LStep {
    Vec gamma;
    std::string gamma_label;
    Int k = 0;
    std::vector<int> perm;      // perm[i] = source index of the i-th largest |entry|
    std::vector<bool> negated;  // entry had to be sign-flipped
};

struct LOpResult {
    SuperWeight weight;
    LStep step;
};

namespace detail {

/// Regularity of the delta-entries under the even Weyl group of sp(2n):
/// pairwise distinct nonzero absolute values.  Nonzero pairing against the
/// even simple roots alone is weaker and does not guarantee a dominant-making
/// omega (ties between non-adjacent entries, and |e_i| collisions across
/// signs, slip through it).
inline bool regular_entries(const std::vector<Int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) return false;
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (int_abs(e[i]) == int_abs(e[j])) return false;
    }
    return true;
}

} // namespace detail

inline LOpResult l_op(const RootDatum& dat, const SuperWeight& w) {
    if (dat.family.tag != FamilyTag::Osp2_2n)
        throw usage_error("the L-operator is defined for osp(2|2n)");
    Atypicality at = atypicality(dat, w);
    if (at.degree == 0) throw usage_error("L-operator applied to a typical weight");
    if (at.witnesses.size() > 1)
        throw internal_error("more than one isotropic witness at atypicality 1");

    const int n = dat.family.n;
    const Vec& gamma = at.witnesses.front();
    Vec lp = vec_add(to_vec(w), dat.rho);

    Int cap = Int(4) * n + int_abs(numerator(w.eps)) + 4;
    for (const Int& c : w.coeffs) cap += int_abs(c);

    std::vector<Int> base(n), step(n);
    for (int i = 0; i < n; ++i) {
        base[i] = to_int(lp.d[i]);
        step[i] = to_int(gamma.d[i]);
    }
    Int k = 0;
    std::vector<Int> ent(n);
    for (Int kk = 1;; ++kk) {
        if (kk > cap) throw internal_error("L-operator shift search exceeded its cap");
        for (int i = 0; i < n; ++i) ent[i] = base[i] - kk * step[i];
        if (detail::regular_entries(ent)) {
            k = kk;
            break;
        }
    }

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](int a, int b) { return int_abs(ent[a]) > int_abs(ent[b]); });
    std::vector<bool> negated(n);
    std::vector<Int> sorted(n);
    for (int i = 0; i < n; ++i) {
        sorted[i] = int_abs(ent[perm[i]]);
        negated[i] = ent[perm[i]] < 0;
    }

    Rat res_eps = lp.eps - Rat(k) * gamma.eps + n; // omega fixes eps_1; rho_eps = -n
    std::vector<Int> res_coeffs(n);
    for (int i = 0; i < n; ++i) res_coeffs[i] = sorted[i] - (n - i); // rho_delta = (n, ..., 1)

    SuperWeight result(dat.family, res_eps, std::move(res_coeffs));
    if (!is_dominant(dat, result)) throw internal_error("L-operator produced a non-dominant weight");
    if (atypicality(dat, result).degree != 1)
        throw internal_error("L-operator produced a typical weight");

    LStep st;
    st.gamma = gamma;
    st.gamma_label = at.witness_labels.front();
    st.k = k;
    st.perm = std::move(perm);
    st.negated = std::move(negated);
    return {std::move(result), std::move(st)};
}

/// Inverse via lambda = omega_0^{-1}(beta - (beta - omega_0 mu)^L) with
/// beta = 2n eps_1 and omega_0 = -1 on the delta-space.  The candidate is
/// verified against l_op before returning.
inline SuperWeight l_inv(const RootDatum& dat, const SuperWeight& w) {
    if (dat.family.tag != FamilyTag::Osp2_2n)
        throw usage_error("the L-operator is defined for osp(2|2n)");
    if (atypicality(dat, w).degree == 0)
        throw usage_error("L-inverse applied to a typical weight");
    const int n = dat.family.n;
    // beta - omega_0(w) = (2n - w_eps | w_delta): dominant, and atypical with
    // the mirrored witness.
    SuperWeight nu(dat.family, Rat(2 * n) - w.eps, w.coeffs);
    SuperWeight nuL = l_op(dat, nu).weight;
    SuperWeight candidate(dat.family, Rat(2 * n) - nuL.eps, nuL.coeffs);
    SuperWeight check = l_op(dat, candidate).weight;
    if (!(check == w))
        throw internal_error("L-inverse verification failed: L(" + weight_text(candidate) +
                             ") = " + weight_text(check) + " != " + weight_text(w));
    return candidate;
}

/// Iterated operator lambda^(l): l_op for l > 0, l_inv for l < 0.
inline SuperWeight l_power(const RootDatum& dat, const SuperWeight& w, const Int& l) {
    SuperWeight cur = w;
    if (l >= 0)
        for (Int i = 0; i < l; ++i) cur = l_op(dat, cur).weight;
    else
        for (Int i = 0; i > l; --i) cur = l_inv(dat, cur);
    return cur;
}

/// Closed form of the principal orbit: 0^(l) = (-l|l,0,...,0) for l >= 0 and
/// 0^(l) = (2n+d|d,0,...,0) with d = -l-1 for l < 0.
inline SuperWeight principal_orbit_weight(const Family& fam, const Int& l) {
    if (fam.tag != FamilyTag::Osp2_2n) throw usage_error("principal orbit is an osp(2|2n) notion");
    const int n = fam.n;
    std::vector<Int> coeffs(n, Int(0));
    if (l >= 0) {
        coeffs[0] = l;
        return SuperWeight(fam, Rat(-l), std::move(coeffs));
    }
    Int d = -l - 1;
    coeffs[0] = d;
    return SuperWeight(fam, Rat(2 * n + d), std::move(coeffs));
}

} // namespace superres
