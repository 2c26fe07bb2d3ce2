#pragma once

#include <numeric>
#include <string>

#include "superres/errors.hpp"

namespace superres {

enum class FamilyTag { Osp2_2n, Osp3_2, D21a, G3, F4 };

/// A supported Lie superalgebra family instance.  osp(2|2n) carries its rank,
/// D(2,1;alpha) carries alpha = p/q in lowest terms (or an irrational marker).
struct Family {
    FamilyTag tag = FamilyTag::Osp2_2n;
    int n = 0;               // osp(2|2n)
    int p = 0, q = 0;        // D(2,1;alpha), alpha = p/q
    bool irrational = false; // D(2,1;alpha) with alpha irrational

    static Family osp2(int n) {
        if (n < 1) throw usage_error("osp(2|2n) requires n >= 1");
        Family f;
        f.tag = FamilyTag::Osp2_2n;
        f.n = n;
        return f;
    }
    static Family osp32() {
        Family f;
        f.tag = FamilyTag::Osp3_2;
        return f;
    }
    static Family d21a(int p, int q) {
        if (p < 1 || q < 1) throw usage_error("D(2,1;alpha) requires p, q >= 1");
        if (std::gcd(p, q) != 1) throw usage_error("D(2,1;alpha) requires gcd(p,q) = 1");
        Family f;
        f.tag = FamilyTag::D21a;
        f.p = p;
        f.q = q;
        return f;
    }
    static Family d21a_irrational() {
        Family f;
        f.tag = FamilyTag::D21a;
        f.irrational = true;
        return f;
    }
    static Family g3() {
        Family f;
        f.tag = FamilyTag::G3;
        return f;
    }
    static Family f4() {
        Family f;
        f.tag = FamilyTag::F4;
        return f;
    }

    /// Number of coordinates after the leading one in the weight tuple.
    int coeff_count() const {
        switch (tag) {
            case FamilyTag::Osp2_2n: return n;
            case FamilyTag::Osp3_2: return 1;
            case FamilyTag::D21a: return 2;
            case FamilyTag::G3: return 2;
            case FamilyTag::F4: return 3;
        }
        return 0;
    }

    /// Dimension of the odd part g_1bar.
    int dim_g1_bar() const {
        switch (tag) {
            case FamilyTag::Osp2_2n: return 4 * n;
            case FamilyTag::Osp3_2: return 6;
            case FamilyTag::D21a: return 8;
            case FamilyTag::G3: return 14;
            case FamilyTag::F4: return 16;
        }
        return 0;
    }

    std::string name() const {
        switch (tag) {
            case FamilyTag::Osp2_2n: return "osp(2|" + std::to_string(2 * n) + ")";
            case FamilyTag::Osp3_2: return "osp(3|2)";
            case FamilyTag::D21a:
                return irrational ? "D(2,1;alpha) [alpha irrational]"
                                  : "D(2,1;" + std::to_string(p) + "/" + std::to_string(q) + ")";
            case FamilyTag::G3: return "G(3)";
            case FamilyTag::F4: return "F(4)";
        }
        return "?";
    }

    friend bool operator==(const Family& a, const Family& b) {
        return a.tag == b.tag && a.n == b.n && a.p == b.p && a.q == b.q &&
               a.irrational == b.irrational;
    }
};

} // namespace superres
