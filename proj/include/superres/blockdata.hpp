#pragma once

#include <array>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "superres/weight.hpp"

namespace superres {

// Closed-form atypical block weight tables for osp(3|2), D(2,1;alpha) and
// G(3), plus a pluggable table for F(4) whose block weights are not built in.

/// osp(3|2) principal-block weight: (0,0) at l=0, (l-1,l) for l >= 1.
inline SuperWeight osp32_lambda(const Int& l) {
    if (l < 0) throw usage_error("osp(3|2) block label must be >= 0");
    if (l == 0) return SuperWeight(Family::osp32(), Rat(0), {Int(0)});
    return SuperWeight(Family::osp32(), Rat(l - 1), {l});
}

/// D(2,1;p/q) block weight lambda_{k,l}, the four-branch piecewise table.
/// Overlapping branch conditions agree wherever two apply; k=0 collapses to
/// the principal block.  With the irrational marker only k=0 is available.
inline SuperWeight d21a_lambda(const Family& fam, const Int& k, const Int& l) {
    if (fam.tag != FamilyTag::D21a) throw usage_error("d21a_lambda needs a D(2,1;alpha) family");
    if (k < 0) throw usage_error("block index k must be >= 0");
    if (fam.irrational && k != 0)
        throw usage_error("irrational alpha: only the principal block (k=0) is atypical");
    const Int kp = k * fam.p, kq = k * fam.q;
    Int a, b, c;
    if (l <= -kp) {
        a = -l + 2; b = -l - kp; c = -l + kq;
    } else if (l <= 0) {
        a = -l + 1; b = l + kp - 1; c = -l + kq - 1;
    } else if (l <= kq - 1) {
        a = l + 1; b = l + kp - 1; c = -l + kq - 1;
    } else {
        a = l + 2; b = l + kp; c = l - kq;
    }
    return SuperWeight(fam, Rat(a), {b, c});
}

/// Principal-block weight of D(2,1;alpha) in the indexing where label 0 is
/// the trivial module: (0,0,0) at l=0, (l+1,l-1,l-1) for l >= 1.  The
/// piecewise table above enumerates the same block shifted by one
/// (d21a_lambda(fam,0,l) = this at l+1); the trivial weight itself is not a
/// table point.
inline SuperWeight d21a_principal_lambda(const Family& fam, const Int& l) {
    if (fam.tag != FamilyTag::D21a) throw usage_error("d21a family expected");
    if (l < 0) throw usage_error("principal block label must be >= 0");
    if (l == 0) return SuperWeight(fam, Rat(0), {Int(0), Int(0)});
    return SuperWeight(fam, Rat(l + 1), {l - 1, l - 1});
}

/// G(3) block weight lambda_{k,l}.
inline SuperWeight g3_lambda(const Int& k, const Int& l) {
    if (k < 0 || l < 0) throw usage_error("G(3) block indices must be >= 0");
    const Family fam = Family::g3();
    Int a, b, c;
    if (k == 0) {
        if (l == 0) { a = 0; b = 0; c = 0; }
        else { a = l + 4; b = l - 1; c = 0; }      // includes lambda_{0,1} = (5,0,0)
    } else if (l == 0) {
        a = 2; b = 0; c = k - 1;
    } else if (l == 1) {
        a = 3; b = 0; c = k - 1;
    } else if (l <= k) {
        a = l + 2; b = 2 * l - 2; c = k - l;
    } else if (l <= 3 * k) {
        a = l + 3; b = 3 * k - l; c = l - k - 1;
    } else {
        a = l + 4; b = l - 3 * k - 1; c = 2 * k;
    }
    return SuperWeight(fam, Rat(a), {b, c});
}

/// Loaded F(4) block weights: contiguous rows l -> (a, m1, m2, m3).
struct F4Table {
    Int l_min = 0;
    std::vector<std::array<Int, 4>> rows;

    bool contains_label(const Int& l) const {
        return l >= l_min && l < l_min + Int(rows.size());
    }
    SuperWeight weight_at(const Int& l) const {
        if (!contains_label(l))
            throw usage_error("F(4) table has no row for label " + l.str());
        const auto& r = rows[static_cast<std::size_t>(l - l_min)];
        return SuperWeight(Family::f4(), Rat(r[0]), {r[1], r[2], r[3]});
    }
    bool contains_weight(const SuperWeight& w) const {
        if (w.family.tag != FamilyTag::F4 || !is_integral(w.eps)) return false;
        std::array<Int, 4> key{numerator(w.eps), w.coeffs[0], w.coeffs[1], w.coeffs[2]};
        for (const auto& r : rows)
            if (r == key) return true;
        return false;
    }
};

/// Parse "l a m1 m2 m3" rows, '#' comments, blank lines ignored.  Rows must
/// define a contiguous l-range with no duplicates.
inline F4Table f4_table_load(std::istream& in) {
    std::map<Int, std::array<Int, 4>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() != 5)
            throw usage_error("F(4) table line " + std::to_string(lineno) +
                              ": expected 5 integers, got " + std::to_string(toks.size()));
        Int l = parse_int(toks[0]);
        std::array<Int, 4> w{parse_int(toks[1]), parse_int(toks[2]), parse_int(toks[3]),
                             parse_int(toks[4])};
        if (rows.count(l))
            throw usage_error("F(4) table: duplicate label " + l.str());
        rows.emplace(l, w);
    }
    if (rows.empty()) throw usage_error("F(4) table is empty");
    F4Table t;
    t.l_min = rows.begin()->first;
    Int expect = t.l_min;
    for (const auto& [l, w] : rows) {
        if (l != expect)
            throw usage_error("F(4) table: labels not contiguous at " + l.str());
        t.rows.push_back(w);
        ++expect;
    }
    return t;
}

/// A block of atypical weights: the label-to-weight map with its metadata.
/// casimir is the Casimir eigenvalue on the block (0 for principal blocks),
/// provenance is "builtin" for built-in tables and "external" for loaded ones.
/// An absent bound means the labels are unbounded on that side (non-principal
/// D(2,1;alpha) blocks run over all of Z).
struct BlockTable {
    Family family;
    Int k = 0;
    Rat casimir;
    std::string provenance = "builtin";
    std::optional<Int> l_min;
    std::optional<Int> l_max;
    std::function<SuperWeight(const Int&)> weight_at;
};

inline BlockTable osp32_block() {
    BlockTable t;
    t.family = Family::osp32();
    t.casimir = 0;
    t.l_min = 0;
    t.weight_at = [](const Int& l) { return osp32_lambda(l); };
    return t;
}

inline BlockTable d21a_block(const Family& fam, const Int& k) {
    if (fam.tag != FamilyTag::D21a) throw usage_error("d21a family expected");
    BlockTable t;
    t.family = fam;
    t.k = k;
    // eigenvalue p(p+q)k^2/2, meaningful for rational alpha
    t.casimir = fam.irrational ? Rat(0) : Rat(Int(fam.p) * (fam.p + fam.q) * k * k, 2);
    if (k == 0) {
        t.l_min = 0;
        t.weight_at = [fam](const Int& l) { return d21a_principal_lambda(fam, l); };
    } else {
        t.weight_at = [fam, k](const Int& l) { return d21a_lambda(fam, k, l); };
    }
    return t;
}

inline BlockTable g3_block(const Int& k) {
    BlockTable t;
    t.family = Family::g3();
    t.k = k;
    t.casimir = Rat(6) * k * (k + 1);
    t.l_min = 0;
    t.weight_at = [k](const Int& l) { return g3_lambda(k, l); };
    return t;
}

inline BlockTable f4_block(std::shared_ptr<const F4Table> table) {
    if (!table) throw usage_error("null F(4) table");
    BlockTable t;
    t.family = Family::f4();
    t.casimir = 0;
    t.provenance = "external";
    t.l_min = table->l_min;
    t.l_max = table->l_min + Int(table->rows.size()) - 1;
    t.weight_at = [table](const Int& l) { return table->weight_at(l); };
    return t;
}

namespace detail {

/// Solves w = d21a_lambda(fam, k, l) for (k, l), trying each branch.
inline std::optional<std::pair<Int, Int>> d21a_membership(const Family& fam,
                                                          const Int& a, const Int& b,
                                                          const Int& c) {
    const Int p = fam.p, q = fam.q;
    auto check = [&](const Int& k, const Int& l) -> bool {
        if (k < 0) return false;
        if (fam.irrational && k != 0) return false;
        SuperWeight w = d21a_lambda(fam, k, l);
        return numerator(w.eps) == a && w.coeffs[0] == b && w.coeffs[1] == c;
    };
    if (fam.irrational) {
        // principal only: (|l|+2, |l|, |l|)
        if (b == c && a == b + 2 && check(0, b)) return std::make_pair(Int(0), b);
        return std::nullopt;
    }
    // branch l <= -kp: (-l+2, -l-kp, -l+kq)
    {
        Int l = 2 - a;
        Int num = -l - b;
        if (num >= 0 && num % p == 0) {
            Int k = num / p;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    // branch -kp+1 <= l <= 0: (-l+1, l+kp-1, -l+kq-1)
    {
        Int l = 1 - a;
        Int num = b - l + 1;
        if (num >= 0 && num % p == 0) {
            Int k = num / p;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    // branch 0 <= l <= kq-1: (l+1, l+kp-1, -l+kq-1)
    {
        Int l = a - 1;
        Int num = b - l + 1;
        if (num >= 0 && num % p == 0) {
            Int k = num / p;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    // branch kq <= l: (l+2, l+kp, l-kq)
    {
        Int l = a - 2;
        Int num = b - l;
        if (num >= 0 && num % p == 0) {
            Int k = num / p;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    return std::nullopt;
}

inline std::optional<std::pair<Int, Int>> g3_membership(const Int& a, const Int& b,
                                                        const Int& c) {
    auto check = [&](const Int& k, const Int& l) -> bool {
        if (k < 0 || l < 0) return false;
        SuperWeight w = g3_lambda(k, l);
        return numerator(w.eps) == a && w.coeffs[0] == b && w.coeffs[1] == c;
    };
    if (a == 0 && b == 0 && c == 0) return std::make_pair(Int(0), Int(0));
    if (a == 2 && b == 0 && check(c + 1, 0)) return std::make_pair(Int(c + 1), Int(0));
    if (a == 3 && b == 0 && check(c + 1, 1)) return std::make_pair(Int(c + 1), Int(1));
    // (l+2, 2l-2, k-l) with 2 <= l <= k
    {
        Int l = a - 2, k = c + l;
        if (check(k, l)) return std::make_pair(k, l);
    }
    // (l+3, 3k-l, l-k-1) with k+1 <= l <= 3k
    {
        Int l = a - 3, num = b + l;
        if (l >= 0 && num >= 0 && num % 3 == 0) {
            Int k = num / 3;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    // (l+4, l-3k-1, 2k) with 3k+1 <= l
    {
        Int l = a - 4;
        if (c >= 0 && c % 2 == 0) {
            Int k = c / 2;
            if (check(k, l)) return std::make_pair(k, l);
        }
    }
    return std::nullopt;
}

} // namespace detail

/// Does the weight appear in one of the family's atypical block tables?
/// Returns the (k, l) indices of the matching table point.  The trivial
/// weight of D(2,1;alpha) is atypical but not a table point; callers that
/// want "is atypical" should use is_table_atypical below.
inline std::optional<std::pair<Int, Int>> block_membership(const SuperWeight& w) {
    switch (w.family.tag) {
        case FamilyTag::Osp3_2: {
            if (!is_integral(w.eps)) return std::nullopt;
            const Int a = numerator(w.eps);
            const Int& b = w.coeffs[0];
            if (a == 0 && b == 0) return std::make_pair(Int(0), Int(0));
            if (b >= 1 && a == b - 1) return std::make_pair(Int(0), b);
            return std::nullopt;
        }
        case FamilyTag::D21a: {
            if (!is_integral(w.eps)) return std::nullopt;
            return detail::d21a_membership(w.family, numerator(w.eps), w.coeffs[0],
                                           w.coeffs[1]);
        }
        case FamilyTag::G3: {
            if (!is_integral(w.eps)) return std::nullopt;
            return detail::g3_membership(numerator(w.eps), w.coeffs[0], w.coeffs[1]);
        }
        default:
            throw usage_error("block tables exist only for osp(3|2), D(2,1;alpha), G(3)");
    }
}

/// Table-path atypicality for the exceptional families (F(4) via its loaded
/// table).
inline bool is_table_atypical(const SuperWeight& w, const F4Table* f4 = nullptr) {
    if (w.family.tag == FamilyTag::F4) {
        if (!f4) throw usage_error("F(4) atypicality requires a loaded block table");
        return f4->contains_weight(w);
    }
    if (w.family.tag == FamilyTag::D21a) {
        if (is_integral(w.eps) && numerator(w.eps) == 0 && w.coeffs[0] == 0 && w.coeffs[1] == 0)
            return true; // the trivial weight
        return block_membership(w).has_value();
    }
    return block_membership(w).has_value();
}

} // namespace superres
