#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "superres/resolutions.hpp"

namespace superres {

// Exact polynomial rate-of-growth detection.  Samples are split by the
// residue of d mod 4 and each subsequence is finite-differenced until an
// all-zero tail appears.  The mod-4 split (rather than plain parity) is
// needed because resolutions over the fork-shaped blocks end in a tail
// summand that alternates between the two short legs with period 4, so the
// parity subsequences alone are not eventually polynomial.  Results are
// reported per parity class as the maximum over its two subsequences.

enum class SeqStatus { Zero, Poly, NotPoly };

struct GrowthReport {
    struct ClassInfo {
        SeqStatus status = SeqStatus::Zero;
        int degree = -1; // Poly: exact degree; NotPoly: lower bound; Zero: -1
    };
    ClassInfo even_d, odd_d;
    int c = 0;               // rate of growth: max degree + 1
    bool c_lower_bound = false;
    int window_lo = 0, window_hi = 0;
    Rat const_min, const_max; // min/max of value / d^(c-1) over the window
    std::vector<std::string> flags;
};

namespace detail {

constexpr int kZeroTail = 8;

inline bool zero_tail(const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) < kZeroTail) return false;
    for (std::size_t i = v.size() - kZeroTail; i < v.size(); ++i)
        if (v[i] != 0) return false;
    return true;
}

/// Exact finite-difference degree of one subsequence.
inline GrowthReport::ClassInfo subseq_degree(std::vector<Int> v, std::vector<std::string>& flags) {
    GrowthReport::ClassInfo info;
    bool all_zero = std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
    if (all_zero) {
        info.status = SeqStatus::Zero;
        info.degree = -1;
        return info;
    }
    if (zero_tail(v)) {
        // nonzero values that die out: bounded, degree 0
        flags.push_back("eventually-zero");
        info.status = SeqStatus::Poly;
        info.degree = 0;
        return info;
    }
    const int max_passes = static_cast<int>(v.size()) - kZeroTail;
    for (int k = 1; k <= max_passes; ++k) {
        for (std::size_t i = 0; i + 1 < v.size(); ++i) v[i] = v[i + 1] - v[i];
        v.pop_back();
        if (zero_tail(v)) {
            info.status = SeqStatus::Poly;
            info.degree = k - 1;
            return info;
        }
    }
    info.status = SeqStatus::NotPoly;
    info.degree = max_passes; // degree is at least this
    return info;
}

inline GrowthReport::ClassInfo merge_classes(const GrowthReport::ClassInfo& a,
                                             const GrowthReport::ClassInfo& b) {
    GrowthReport::ClassInfo out;
    if (a.status == SeqStatus::NotPoly || b.status == SeqStatus::NotPoly) {
        out.status = SeqStatus::NotPoly;
        out.degree = std::max(a.degree, b.degree);
    } else if (a.status == SeqStatus::Zero && b.status == SeqStatus::Zero) {
        out.status = SeqStatus::Zero;
        out.degree = -1;
    } else {
        out.status = SeqStatus::Poly;
        out.degree = std::max(a.degree, b.degree);
    }
    return out;
}

} // namespace detail

inline GrowthReport rate_of_growth(const std::function<Int(int)>& sampler, int dmin, int dmax) {
    if (dmin < 0 || dmax < dmin) throw usage_error("bad growth window");
    std::vector<std::vector<Int>> classes(4);
    std::vector<Int> values(static_cast<std::size_t>(dmax - dmin + 1));
    for (int d = dmin; d <= dmax; ++d) {
        Int v = sampler(d);
        values[static_cast<std::size_t>(d - dmin)] = v;
        classes[d % 4].push_back(std::move(v));
    }
    for (const auto& cls : classes)
        if (static_cast<int>(cls.size()) < detail::kZeroTail + 2)
            throw usage_error("growth window too short for degree detection");

    GrowthReport rep;
    rep.window_lo = dmin;
    rep.window_hi = dmax;
    auto c0 = detail::subseq_degree(classes[0], rep.flags);
    auto c1 = detail::subseq_degree(classes[1], rep.flags);
    auto c2 = detail::subseq_degree(classes[2], rep.flags);
    auto c3 = detail::subseq_degree(classes[3], rep.flags);
    rep.even_d = detail::merge_classes(c0, c2);
    rep.odd_d = detail::merge_classes(c1, c3);

    auto overall = detail::merge_classes(rep.even_d, rep.odd_d);
    if (overall.status == SeqStatus::Zero) {
        rep.c = 0;
    } else {
        rep.c = overall.degree + 1;
        if (overall.status == SeqStatus::NotPoly) {
            rep.c_lower_bound = true;
            rep.flags.push_back("not-polynomial");
        }
    }

    if (rep.c >= 1) {
        bool first = true;
        for (int d = std::max(dmin, 1); d <= dmax; ++d) {
            Int denom = 1;
            for (int e = 0; e < rep.c - 1; ++e) denom *= d;
            Rat ratio(values[static_cast<std::size_t>(d - dmin)], denom);
            if (first || ratio < rep.const_min) rep.const_min = ratio;
            if (first || ratio > rep.const_max) rep.const_max = ratio;
            first = false;
        }
    }
    std::sort(rep.flags.begin(), rep.flags.end());
    rep.flags.erase(std::unique(rep.flags.begin(), rep.flags.end()), rep.flags.end());
    return rep;
}

struct GrowthWindow {
    int dmin = 16;
    int dmax = 256;
};

/// Growth report of the resolution dimensions.  Families with bound-pair
/// dimensions are measured on both the lower and the upper sequence, which
/// must agree on the detected degrees.
inline GrowthReport complexity_report(const ModuleDescriptor& desc, GrowthWindow w = {}) {
    auto terms = resolution_terms(desc, w.dmax);
    auto lower = rate_of_growth(
        [&](int d) { return terms[static_cast<std::size_t>(d)].dim_lower; }, w.dmin, w.dmax);
    if (!terms.front().exact_dim() || !terms.back().exact_dim()) {
        auto upper = rate_of_growth(
            [&](int d) { return terms[static_cast<std::size_t>(d)].dim_upper; }, w.dmin, w.dmax);
        if (upper.c != lower.c || upper.even_d.degree != lower.even_d.degree ||
            upper.odd_d.degree != lower.odd_d.degree)
            throw inconsistency_error(
                "lower/upper dimension sequences disagree on the growth degree (lower c=" +
                std::to_string(lower.c) + ", upper c=" + std::to_string(upper.c) + ")");
    }
    if (terms.back().external) lower.flags.push_back("external-table");
    return lower;
}

inline int complexity(const ModuleDescriptor& desc, GrowthWindow w = {}) {
    return complexity_report(desc, w).c;
}

/// Growth report of the number of indecomposable summands.
inline GrowthReport z_report(const ModuleDescriptor& desc, GrowthWindow w = {}) {
    auto terms = resolution_terms(desc, w.dmax);
    auto rep = rate_of_growth(
        [&](int d) { return terms[static_cast<std::size_t>(d)].count; }, w.dmin, w.dmax);
    if (terms.back().external) rep.flags.push_back("external-table");
    return rep;
}

inline int z_complexity(const ModuleDescriptor& desc, GrowthWindow w = {}) {
    return z_report(desc, w).c;
}

enum class ModuleKind { Simple, Kac };

/// Variety dimensions per (family, module kind, atypicality): the associated
/// variety X_M, the support variety V_(g,g0), the detecting-subalgebra
/// variety V_(f,f0), and the root alpha spanning f_1bar.
struct VarietyDims {
    int dim_X = 0;
    int dim_V = 0;
    int dim_Vf = 0;
    std::string alpha;
};

inline VarietyDims variety_dims(const Family& fam, ModuleKind kind, bool atypical) {
    VarietyDims v;
    switch (fam.tag) {
        case FamilyTag::Osp2_2n:
            v.alpha = "e1-d1";
            if (atypical) {
                if (kind == ModuleKind::Simple) v = {2 * fam.n, 1, 2, v.alpha};
                else v = {2 * fam.n, 0, 1, v.alpha};
            }
            return v;
        case FamilyTag::Osp3_2: v.alpha = "e1+d"; break;
        case FamilyTag::D21a: v.alpha = "e1+e2+e3"; break;
        case FamilyTag::G3: v.alpha = "e3+d"; break;
        case FamilyTag::F4: v.alpha = "(e1+e2+e3+d)/2"; break;
    }
    if (kind == ModuleKind::Kac)
        throw usage_error("no variety data: Kac modules are an osp(2|2n) notion here");
    if (atypical) {
        switch (fam.tag) {
            case FamilyTag::Osp3_2: v.dim_X = 3; break;
            case FamilyTag::D21a: v.dim_X = 4; break;
            case FamilyTag::G3: v.dim_X = 7; break;
            case FamilyTag::F4: v.dim_X = 8; break;
            default: break;
        }
        v.dim_V = 1;
        v.dim_Vf = 2;
    }
    return v;
}

struct GeomReport {
    int c = 0;
    int z = 0;
    VarietyDims dims;
    bool identity_c = false; // c == dim_X + dim_V
    bool identity_z = false; // z == dim_Vf
    bool external = false;
};

/// Computes c and z for a representative module of the given kind and checks
/// them against the variety-dimension table.  Typical modules are projective
/// with zero invariants.  F(4) needs its loaded block table.
inline GeomReport geometric_report(const Family& fam, ModuleKind kind, bool atypical,
                                   std::shared_ptr<const F4Table> f4 = nullptr,
                                   GrowthWindow w = {}) {
    GeomReport rep;
    rep.dims = variety_dims(fam, kind, atypical);
    if (atypical) {
        ModuleDescriptor desc = [&]() -> ModuleDescriptor {
            switch (fam.tag) {
                case FamilyTag::Osp2_2n:
                    return kind == ModuleKind::Simple
                               ? ModuleDescriptor::simple_principal(fam.n, 0)
                               : ModuleDescriptor::kac_principal(fam.n, 0);
                case FamilyTag::Osp3_2: return ModuleDescriptor::osp32_simple(0);
                case FamilyTag::D21a: return ModuleDescriptor::d21a_simple(fam, 0, 0);
                case FamilyTag::G3: return ModuleDescriptor::g3_simple(0, 0);
                case FamilyTag::F4:
                    if (!f4) throw usage_error("F(4) geometry requires a loaded block table");
                    rep.external = true;
                    return ModuleDescriptor::f4_simple(f4, 0);
            }
            throw internal_error("unreachable family");
        }();
        rep.c = complexity(desc, w);
        rep.z = z_complexity(desc, w);
    }
    rep.identity_c = rep.c == rep.dims.dim_X + rep.dims.dim_V;
    rep.identity_z = rep.z == rep.dims.dim_Vf;
    return rep;
}

} // namespace superres
