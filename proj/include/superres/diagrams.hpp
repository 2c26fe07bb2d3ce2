#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "superres/rootdata.hpp"

namespace superres {

// Weight diagrams for osp(2|2n): the f-coordinate bijection, the symbol
// string, cores (= block keys together with atypicality), and the principal
// block index.

/// f-coordinates of a dominant weight: f_{-1} = (lambda+rho, eps_1) and
/// f_i = (lambda+rho, delta_i); the f_i are strictly increasing negatives.
struct FCoords {
    Rat f_minus1;
    std::vector<Int> f;
};

inline FCoords f_coords(const RootDatum& dat, const SuperWeight& w) {
    if (dat.family.tag != FamilyTag::Osp2_2n)
        throw usage_error("f_coords is defined for osp(2|2n)");
    if (!is_dominant(dat, w)) throw usage_error("f_coords requires a dominant weight");
    Vec lp = vec_add(to_vec(w), dat.rho);
    FCoords fc;
    fc.f_minus1 = lp.eps; // (lambda+rho, eps_1) with (eps_1,eps_1)=1
    fc.f.reserve(lp.d.size());
    for (const Rat& b : lp.d) fc.f.push_back(-to_int(b)); // (lambda+rho, delta_i) = -b_i
    for (std::size_t i = 0; i + 1 < fc.f.size(); ++i)
        if (!(fc.f[i] < fc.f[i + 1]))
            throw internal_error("f-coordinates not strictly increasing");
    if (!fc.f.empty() && !(fc.f.back() < 0))
        throw internal_error("f-coordinates not negative");
    return fc;
}

enum class Mark { Gt, Lt, Times };

/// Sparse symbol map position -> {>, <, x}; absent positions are zeros.
struct WeightDiagram {
    std::map<Int, Mark> marks;

    int count(Mark m) const {
        int c = 0;
        for (const auto& [pos, mk] : marks)
            if (mk == m) ++c;
        return c;
    }
    bool atypical() const { return count(Mark::Times) == 1; }
};

/// Diagram algorithm: > at |f_{-1}| (when integral), < at each -f_i, a
/// coincident pair merges to x.
inline WeightDiagram weight_diagram(const FCoords& fc) {
    WeightDiagram d;
    for (const Int& fi : fc.f) d.marks[-fi] = Mark::Lt;
    if (is_integral(fc.f_minus1)) {
        Int t = int_abs(numerator(fc.f_minus1));
        auto it = d.marks.find(t);
        if (it != d.marks.end() && it->second == Mark::Lt)
            it->second = Mark::Times;
        else
            d.marks[t] = Mark::Gt;
    }
    return d;
}

/// Text form: comma-separated symbols from position 0 through the last
/// nonzero mark, using ">", "<", "x", "0".
inline std::string diagram_text(const WeightDiagram& d) {
    if (d.marks.empty()) return "0";
    Int last = d.marks.rbegin()->first;
    std::ostringstream os;
    for (Int pos = 0; pos <= last; ++pos) {
        if (pos != 0) os << ",";
        auto it = d.marks.find(pos);
        if (it == d.marks.end()) {
            os << "0";
        } else {
            switch (it->second) {
                case Mark::Gt: os << ">"; break;
                case Mark::Lt: os << "<"; break;
                case Mark::Times: os << "x"; break;
            }
        }
    }
    return os.str();
}

using CoreId = std::string;

/// Core: every x replaced by zero, serialized canonically.  Idempotent.
inline CoreId core(const WeightDiagram& d) {
    WeightDiagram c;
    for (const auto& [pos, mk] : d.marks)
        if (mk != Mark::Times) c.marks.emplace(pos, mk);
    return diagram_text(c);
}

inline CoreId core_of(const RootDatum& dat, const SuperWeight& w) {
    return core(weight_diagram(f_coords(dat, w)));
}

/// Two dominant weights lie in the same block iff their atypicality degrees
/// and cores agree.
inline bool same_block(const RootDatum& dat, const SuperWeight& a, const SuperWeight& b) {
    if (atypicality(dat, a).degree != atypicality(dat, b).degree) return false;
    return core_of(dat, a) == core_of(dat, b);
}

/// The principal-block index: l with lambda = 0^(l), matching the closed
/// orbit forms (-d|d,0,...,0) -> d and (2n+d|d,0,...,0) -> -d-1; empty when
/// lambda is not of either shape.
inline std::optional<Int> principal_index(const RootDatum& dat, const SuperWeight& w) {
    if (dat.family.tag != FamilyTag::Osp2_2n)
        throw usage_error("principal_index is defined for osp(2|2n)");
    if (!is_dominant(dat, w)) throw usage_error("principal_index requires a dominant weight");
    if (!is_integral(w.eps)) return std::nullopt;
    for (std::size_t i = 1; i < w.coeffs.size(); ++i)
        if (w.coeffs[i] != 0) return std::nullopt;
    const Int d = w.coeffs.empty() ? Int(0) : w.coeffs[0];
    const Int a = numerator(w.eps);
    if (a == -d) return d;
    if (a == 2 * dat.family.n + d) return Int(-d - 1);
    return std::nullopt;
}

} // namespace superres
