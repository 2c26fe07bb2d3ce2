#pragma once

#include <string>
#include <vector>

#include "superres/blockdata.hpp"
#include "superres/weight.hpp"

namespace superres {

/// Exact root-system data for a family instance.  Full roots, bilinear form
/// and rho are constructed for osp(2|2n) and osp(3|2); for the remaining
/// families the datum carries fundamental-weight labels and the even-part
/// factor list only (their atypicality is answered by block tables).
struct RootDatum {
    Family family;
    std::vector<std::string> basis_labels;

    std::vector<Vec> even_roots;
    std::vector<Vec> odd_roots;
    std::vector<Vec> positive_roots;
    std::vector<Vec> simple_roots;
    std::vector<Vec> positive_even_roots;
    std::vector<Vec> positive_odd_roots;

    /// Symmetric bilinear form over {basis_labels}; empty when no form is
    /// constructed for the family.
    std::vector<std::vector<Rat>> form;
    Vec rho;

    struct EvenFactor {
        char kind; // 'A' sl2, 'C' sp(2n), 'G' G2, 'B' so7
        int rank;
    };
    std::vector<EvenFactor> even_factors;

    bool has_roots() const { return !positive_roots.empty(); }
};

namespace detail {

inline Vec basis_vec(std::size_t n_d, const Rat& eps, std::size_t i, const Rat& ci) {
    Vec v;
    v.eps = eps;
    v.d.assign(n_d, Rat(0));
    if (i < n_d) v.d[i] = ci;
    return v;
}

inline std::string osp2_root_label(const Vec& r) {
    // roots of osp(2|2n) have coordinates in {-2,-1,0,1,2}
    std::string s;
    auto term = [&](const Rat& c, const std::string& name) {
        if (c == 0) return;
        std::string coef;
        Rat a = rat_abs(c);
        if (a != 1) coef = rat_str(a);
        if (s.empty())
            s += (c < 0 ? "-" : "") + coef + name;
        else
            s += (c < 0 ? "-" : "+") + coef + name;
    };
    term(r.eps, "e1");
    for (std::size_t i = 0; i < r.d.size(); ++i) term(r.d[i], "d" + std::to_string(i + 1));
    return s.empty() ? "0" : s;
}

} // namespace detail

inline RootDatum build_datum(const Family& fam) {
    RootDatum dat;
    dat.family = fam;
    switch (fam.tag) {
        case FamilyTag::Osp2_2n: {
            const int n = fam.n;
            dat.basis_labels.push_back("e1");
            for (int i = 1; i <= n; ++i) dat.basis_labels.push_back("d" + std::to_string(i));
            auto e = [&](int i, int ci) {
                return detail::basis_vec(n, Rat(0), static_cast<std::size_t>(i - 1), Rat(ci));
            };
            auto eps_pm_d = [&](int se, int i, int sd) {
                Vec v = e(i, sd);
                v.eps = se;
                return v;
            };
            // even: +-delta_i +- delta_j (i != j), +-2 delta_i
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j)
                    for (int si : {1, -1})
                        for (int sj : {1, -1}) {
                            Vec v = e(i, si);
                            v.d[j - 1] = sj;
                            dat.even_roots.push_back(v);
                        }
            for (int i = 1; i <= n; ++i)
                for (int s : {2, -2}) dat.even_roots.push_back(e(i, s));
            // odd: +-eps_1 +- delta_i
            for (int i = 1; i <= n; ++i)
                for (int se : {1, -1})
                    for (int sd : {1, -1}) dat.odd_roots.push_back(eps_pm_d(se, i, sd));
            // positive: delta_i + delta_j (i <= j), delta_i - delta_j (i < j),
            // eps_1 +- delta_i
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) {
                    Vec v = e(i, 1);
                    v.d[j - 1] += 1;
                    dat.positive_roots.push_back(v);
                    dat.positive_even_roots.push_back(v);
                }
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Vec v = e(i, 1);
                    v.d[j - 1] = -1;
                    dat.positive_roots.push_back(v);
                    dat.positive_even_roots.push_back(v);
                }
            for (int i = 1; i <= n; ++i)
                for (int sd : {-1, 1}) {
                    Vec v = eps_pm_d(1, i, sd);
                    dat.positive_roots.push_back(v);
                    dat.positive_odd_roots.push_back(v);
                }
            // simple: delta_i - delta_{i+1}, 2 delta_n, eps_1 - delta_1
            for (int i = 1; i < n; ++i) {
                Vec v = e(i, 1);
                v.d[i] = -1;
                dat.simple_roots.push_back(v);
            }
            dat.simple_roots.push_back(e(n, 2));
            dat.simple_roots.push_back(eps_pm_d(1, 1, -1));
            // form: diag(1, -1, ..., -1)
            dat.form.assign(n + 1, std::vector<Rat>(n + 1, Rat(0)));
            dat.form[0][0] = 1;
            for (int i = 1; i <= n; ++i) dat.form[i][i] = -1;
            // rho = -n eps_1 + sum (n-i+1) delta_i
            dat.rho.eps = -n;
            dat.rho.d.resize(n);
            for (int i = 1; i <= n; ++i) dat.rho.d[i - 1] = n - i + 1;
            dat.even_factors.push_back({'C', n});
            break;
        }
        case FamilyTag::Osp3_2: {
            dat.basis_labels = {"e", "d"};
            auto mk = [&](const Rat& ce, const Rat& cd) {
                Vec v;
                v.eps = ce;
                v.d = {cd};
                return v;
            };
            dat.even_roots = {mk(1, 0), mk(-1, 0), mk(0, 2), mk(0, -2)};
            dat.odd_roots = {mk(0, 1), mk(0, -1), mk(1, 1),
                             mk(1, -1), mk(-1, 1), mk(-1, -1)};
            dat.positive_even_roots = {mk(1, 0), mk(0, 2)};
            dat.positive_odd_roots = {mk(0, 1), mk(1, -1), mk(1, 1)};
            dat.positive_roots = {mk(1, 0), mk(0, 2), mk(0, 1), mk(1, -1), mk(1, 1)};
            dat.simple_roots = {mk(1, -1), mk(0, 1)};
            dat.form = {{Rat(1), Rat(0)}, {Rat(0), Rat(-1)}};
            dat.rho = mk(Rat(-1, 2), Rat(1, 2));
            dat.even_factors = {{'A', 1}, {'A', 1}};
            break;
        }
        case FamilyTag::D21a:
            dat.basis_labels = {"a", "b", "c"};
            dat.even_factors = {{'A', 1}, {'A', 1}, {'A', 1}};
            break;
        case FamilyTag::G3:
            dat.basis_labels = {"a", "b", "c"};
            dat.even_factors = {{'A', 1}, {'G', 2}};
            break;
        case FamilyTag::F4:
            dat.basis_labels = {"a", "m1", "m2", "m3"};
            dat.even_factors = {{'A', 1}, {'B', 3}};
            break;
    }
    return dat;
}

inline Rat bilinear_vec(const RootDatum& dat, const Vec& v, const Vec& w) {
    if (dat.form.empty())
        throw usage_error("no bilinear form is constructed for " + dat.family.name());
    const std::size_t m = dat.form.size();
    auto coord = [](const Vec& x, std::size_t i) -> Rat {
        return i == 0 ? x.eps : x.d[i - 1];
    };
    if (v.d.size() + 1 != m || w.d.size() + 1 != m)
        throw usage_error("vector length does not match the basis");
    Rat acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (coord(v, i) == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            if (dat.form[i][j] == 0) continue;
            acc += coord(v, i) * dat.form[i][j] * coord(w, j);
        }
    }
    return acc;
}

inline Rat bilinear(const RootDatum& dat, const SuperWeight& v, const SuperWeight& w) {
    if (!(v.family == dat.family) || !(w.family == dat.family))
        throw usage_error("bilinear: weight family does not match the datum");
    return bilinear_vec(dat, to_vec(v), to_vec(w));
}

/// True iff the delta-part is a weakly decreasing nonnegative sequence.
/// Defined for osp(2|2n).
inline bool is_dominant(const RootDatum& dat, const SuperWeight& w) {
    if (dat.family.tag != FamilyTag::Osp2_2n)
        throw usage_error("is_dominant is defined for osp(2|2n) weights");
    if (!(w.family == dat.family)) throw usage_error("weight family does not match the datum");
    return in_dominant_cone(w);
}

struct Atypicality {
    int degree = 0;                         // 0 or 1 for every family in scope
    std::vector<Vec> witnesses;             // positive odd isotropic roots orthogonal to lambda+rho
    std::vector<std::string> witness_labels;
};

/// Atypicality of a dominant weight.  osp(2|2n) searches the positive odd
/// isotropic roots against lambda+rho; a non-integral eps-coordinate
/// short-circuits to typical.  The exceptional families are answered by
/// block-table membership (pass the loaded table for F(4)).
inline Atypicality atypicality(const RootDatum& dat, const SuperWeight& w,
                               const F4Table* f4 = nullptr) {
    if (!(w.family == dat.family)) throw usage_error("weight family does not match the datum");
    Atypicality at;
    if (dat.family.tag == FamilyTag::Osp2_2n) {
        if (!is_dominant(dat, w)) throw usage_error("atypicality requires a dominant weight");
        if (!is_integral(w.eps)) return at;
        // every positive odd root is eps_1 + s*delta_i with s = +-1 and is
        // isotropic; against the diagonal form the pairing with lambda+rho
        // is a - s*b_i where a = lambda_{-1} - n and b_i = lambda_i + n - i
        const int n = dat.family.n;
        const Int a = numerator(w.eps) - n;
        for (const Vec& g : dat.positive_odd_roots) {
            int idx = -1, sign = 0;
            for (int i = 0; i < n; ++i)
                if (g.d[static_cast<std::size_t>(i)] != 0) {
                    idx = i;
                    sign = g.d[static_cast<std::size_t>(i)] > 0 ? 1 : -1;
                    break;
                }
            Int b_idx = w.coeffs[static_cast<std::size_t>(idx)] + (n - idx);
            if (a == sign * b_idx) {
                at.witnesses.push_back(g);
                at.witness_labels.push_back(detail::osp2_root_label(g));
            }
        }
        at.degree = at.witnesses.empty() ? 0 : 1;
        return at;
    }
    at.degree = is_table_atypical(w, f4) ? 1 : 0;
    return at;
}

} // namespace superres
