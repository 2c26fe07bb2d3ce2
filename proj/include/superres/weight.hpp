#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "superres/family.hpp"
#include "superres/numeric.hpp"

namespace superres {

/// A highest weight.  For osp(2|2n) the coordinates are
/// (eps | coeffs) = (lambda_{-1} | lambda_1, ..., lambda_n) over the basis
/// {eps_1, delta_1, ..., delta_n}.  For the remaining families eps is the
/// first coordinate of the weight tuple and coeffs are the rest.  eps is an
/// exact rational so that the half-integer first coordinates of osp(3|2)
/// weights need no separate encoding.
struct SuperWeight {
    Family family;
    Rat eps;
    std::vector<Int> coeffs;

    SuperWeight(Family fam, Rat e, std::vector<Int> cs)
        : family(fam), eps(std::move(e)), coeffs(std::move(cs)) {
        if (static_cast<int>(coeffs.size()) != family.coeff_count())
            throw usage_error("weight for " + family.name() + " needs " +
                              std::to_string(family.coeff_count()) + " trailing coordinates, got " +
                              std::to_string(coeffs.size()));
    }

    friend bool operator==(const SuperWeight& a, const SuperWeight& b) {
        return a.family == b.family && a.eps == b.eps && a.coeffs == b.coeffs;
    }
};

/// Text form "a|b1,b2,...,bn", a an integer or "p/q".  Parsed and emitted
/// bit-exactly.
inline SuperWeight parse_weight(const Family& fam, std::string_view text) {
    auto bar = text.find('|');
    if (bar == std::string_view::npos)
        throw usage_error("weight '" + std::string(text) + "' has no '|' separator");
    Rat eps = parse_rat(text.substr(0, bar));
    std::vector<Int> coeffs;
    std::string_view rest = text.substr(bar + 1);
    while (!rest.empty()) {
        auto comma = rest.find(',');
        std::string_view tok = rest.substr(0, comma);
        coeffs.push_back(parse_int(tok));
        if (comma == std::string_view::npos) break;
        rest = rest.substr(comma + 1);
    }
    return SuperWeight(fam, eps, std::move(coeffs));
}

inline std::string weight_text(const SuperWeight& w) {
    std::ostringstream os;
    os << rat_str(w.eps) << "|";
    for (std::size_t i = 0; i < w.coeffs.size(); ++i) {
        if (i) os << ",";
        os << w.coeffs[i].str();
    }
    return os.str();
}

/// A vector in the dual Cartan with rational coordinates over the same basis
/// as SuperWeight.  Roots, rho and shifted weights live here.
struct Vec {
    Rat eps;
    std::vector<Rat> d;

    friend bool operator==(const Vec& a, const Vec& b) = default;
};

inline Vec to_vec(const SuperWeight& w) {
    Vec v;
    v.eps = w.eps;
    v.d.reserve(w.coeffs.size());
    for (const Int& c : w.coeffs) v.d.emplace_back(c);
    return v;
}

inline Vec vec_add(const Vec& a, const Vec& b) {
    if (a.d.size() != b.d.size()) throw internal_error("vector length mismatch");
    Vec r;
    r.eps = a.eps + b.eps;
    r.d.resize(a.d.size());
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    if (a.d.size() != b.d.size()) throw internal_error("vector length mismatch");
    Vec r;
    r.eps = a.eps - b.eps;
    r.d.resize(a.d.size());
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

inline Vec vec_scale(const Rat& s, const Vec& a) {
    Vec r;
    r.eps = s * a.eps;
    r.d.resize(a.d.size());
    for (std::size_t i = 0; i < a.d.size(); ++i) r.d[i] = s * a.d[i];
    return r;
}

/// Membership in the family's dominant cone X+ as far as the coordinates
/// decide it.  For osp(2|2n): weakly decreasing nonnegative delta-part.
/// osp(3|2): (a,b) in N/2 x N with b=0 => a=0.  D(2,1;alpha): a=0 => b=c=0
/// and, for a=1, q(b+1) = +-p(c+1) when alpha = p/q (never satisfiable when
/// alpha is irrational).  G(3): a=0 => b=c=0, a != 1, a=2 => b=0.  F(4)
/// dominance data is external; any nonnegative tuple is accepted.
inline bool in_dominant_cone(const SuperWeight& w) {
    const Family& f = w.family;
    switch (f.tag) {
        case FamilyTag::Osp2_2n: {
            for (std::size_t i = 0; i + 1 < w.coeffs.size(); ++i)
                if (w.coeffs[i] < w.coeffs[i + 1]) return false;
            return w.coeffs.empty() || w.coeffs.back() >= 0;
        }
        case FamilyTag::Osp3_2: {
            if (w.eps < 0 || !is_integral(Rat(2) * w.eps)) return false;
            if (w.coeffs[0] < 0) return false;
            if (w.coeffs[0] == 0 && w.eps != 0) return false;
            return true;
        }
        case FamilyTag::D21a: {
            if (!is_integral(w.eps) || w.eps < 0) return false;
            const Int a = numerator(w.eps);
            const Int &b = w.coeffs[0], &c = w.coeffs[1];
            if (b < 0 || c < 0) return false;
            if (a == 0 && (b != 0 || c != 0)) return false;
            if (a == 1) {
                if (f.irrational) return false;
                Int lhs = Int(f.q) * (b + 1);
                Int rhs = Int(f.p) * (c + 1);
                if (lhs != rhs && lhs != -rhs) return false;
            }
            return true;
        }
        case FamilyTag::G3: {
            if (!is_integral(w.eps) || w.eps < 0) return false;
            const Int a = numerator(w.eps);
            const Int &b = w.coeffs[0], &c = w.coeffs[1];
            if (b < 0 || c < 0) return false;
            if (a == 0 && (b != 0 || c != 0)) return false;
            if (a == 1) return false;
            if (a == 2 && b != 0) return false;
            return true;
        }
        case FamilyTag::F4: {
            if (w.eps < 0) return false;
            for (const Int& c : w.coeffs)
                if (c < 0) return false;
            return true;
        }
    }
    return false;
}

} // namespace superres
