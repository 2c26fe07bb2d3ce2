#pragma once

#include <vector>

#include "superres/numeric.hpp"

namespace superres {

// General Weyl dimension formula over the even root systems that occur as
// g_0bar factors: sl2, sp(2n), G2 and so7, plus finite products.  Everything
// is exact-rational; the result must come out integral.

/// One simple factor with a concrete rational realization: positive roots
/// and the half-sum delta in an ambient coordinate space, plus the map from
/// the factor's highest-weight coordinates into that space.
///   A1: coordinate m (dim m+1), ambient Q^1.
///   Cn: epsilon-coordinates (l1 >= ... >= ln >= 0), ambient Q^n.
///   G2: fundamental coordinates (m1, m2), ambient sum-zero Q^3.
///   B3: fundamental coordinates (m1, m2, m3), ambient Q^3.
struct EvenFactorSystem {
    char kind; // 'A', 'C', 'G', 'B'
    int rank;  // C rank; others fixed

    int coord_count() const {
        switch (kind) {
            case 'A': return 1;
            case 'C': return rank;
            case 'G': return 2;
            case 'B': return 3;
        }
        throw internal_error("unknown even factor kind");
    }

    std::vector<std::vector<Rat>> positive_roots() const {
        std::vector<std::vector<Rat>> roots;
        switch (kind) {
            case 'A':
                roots.push_back({Rat(2)});
                break;
            case 'C': {
                const int n = rank;
                auto unit = [&](int i, const Rat& c) {
                    std::vector<Rat> v(n, Rat(0));
                    v[i] = c;
                    return v;
                };
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        auto v = unit(i, 1);
                        v[j] = -1;
                        roots.push_back(v);
                        v[j] = 1;
                        roots.push_back(v);
                    }
                for (int i = 0; i < n; ++i) roots.push_back(unit(i, 2));
                break;
            }
            case 'G':
                // sum-zero realization: alpha1 = e1-e2 (short), alpha2 = -2e1+e2+e3
                roots = {{Rat(1), Rat(-1), Rat(0)},  {Rat(-2), Rat(1), Rat(1)},
                         {Rat(-1), Rat(0), Rat(1)},  {Rat(0), Rat(-1), Rat(1)},
                         {Rat(1), Rat(-2), Rat(1)},  {Rat(-1), Rat(-1), Rat(2)}};
                break;
            case 'B': {
                auto unit = [&](int i, const Rat& c) {
                    std::vector<Rat> v(3, Rat(0));
                    v[i] = c;
                    return v;
                };
                for (int i = 0; i < 3; ++i) roots.push_back(unit(i, 1));
                for (int i = 0; i < 3; ++i)
                    for (int j = i + 1; j < 3; ++j) {
                        auto v = unit(i, 1);
                        v[j] = -1;
                        roots.push_back(v);
                        v[j] = 1;
                        roots.push_back(v);
                    }
                break;
            }
            default: throw internal_error("unknown even factor kind");
        }
        return roots;
    }

    std::vector<Rat> half_sum() const {
        switch (kind) {
            case 'A': return {Rat(1)};
            case 'C': {
                std::vector<Rat> d(rank);
                for (int i = 0; i < rank; ++i) d[i] = rank - i;
                return d;
            }
            case 'G': return {Rat(-1), Rat(-2), Rat(3)}; // omega1 + omega2
            case 'B': return {Rat(5, 2), Rat(3, 2), Rat(1, 2)};
        }
        throw internal_error("unknown even factor kind");
    }

    std::vector<Rat> ambient_weight(const std::vector<Int>& hw) const {
        switch (kind) {
            case 'A': return {Rat(hw[0])};
            case 'C': {
                std::vector<Rat> v(rank);
                for (int i = 0; i < rank; ++i) v[i] = hw[i];
                return v;
            }
            case 'G': {
                // omega1 = (0,-1,1), omega2 = (-1,-1,2)
                Rat m1(hw[0]), m2(hw[1]);
                return {-m2, -m1 - m2, m1 + 2 * m2};
            }
            case 'B': {
                Rat m1(hw[0]), m2(hw[1]), m3(hw[2]);
                return {m1 + m2 + m3 / 2, m2 + m3 / 2, m3 / 2};
            }
        }
        throw internal_error("unknown even factor kind");
    }

    bool dominant(const std::vector<Int>& hw) const {
        if (kind == 'C') {
            for (int i = 0; i + 1 < rank; ++i)
                if (hw[i] < hw[i + 1]) return false;
            return hw.empty() || hw.back() >= 0;
        }
        for (const Int& m : hw)
            if (m < 0) return false;
        return true;
    }
};

/// A finite product of simple even factors; highest-weight coordinates are
/// the concatenation of the factors' coordinates.
struct EvenRootSystem {
    std::vector<EvenFactorSystem> factors;

    static EvenRootSystem a1() { return {{{'A', 1}}}; }
    static EvenRootSystem c(int n) {
        if (n < 1) throw usage_error("sp(2n) requires n >= 1");
        return {{{'C', n}}};
    }
    static EvenRootSystem g2() { return {{{'G', 2}}}; }
    static EvenRootSystem b3() { return {{{'B', 3}}}; }
    static EvenRootSystem product(std::vector<EvenRootSystem> parts) {
        EvenRootSystem sys;
        for (auto& p : parts)
            for (auto& f : p.factors) sys.factors.push_back(f);
        return sys;
    }

    int coord_count() const {
        int c = 0;
        for (const auto& f : factors) c += f.coord_count();
        return c;
    }
};

namespace detail {

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

inline Rat factor_weyl_quotient(const EvenFactorSystem& f, const std::vector<Int>& hw) {
    if (!f.dominant(hw)) throw usage_error("weyl_dim requires a dominant integral weight");
    const auto delta = f.half_sum();
    auto lam = f.ambient_weight(hw);
    for (std::size_t i = 0; i < lam.size(); ++i) lam[i] += delta[i];
    Rat prod = 1;
    for (const auto& alpha : f.positive_roots()) prod *= dot(lam, alpha) / dot(delta, alpha);
    return prod;
}

} // namespace detail

/// dim L(hw) = prod_{alpha>0} (hw+delta, alpha) / (delta, alpha), exact.
inline Int weyl_dim(const EvenRootSystem& sys, const std::vector<Int>& hw) {
    if (static_cast<int>(hw.size()) != sys.coord_count())
        throw usage_error("weyl_dim: expected " + std::to_string(sys.coord_count()) +
                          " coordinates, got " + std::to_string(hw.size()));
    Rat prod = 1;
    std::size_t off = 0;
    for (const auto& f : sys.factors) {
        std::vector<Int> part(hw.begin() + off, hw.begin() + off + f.coord_count());
        off += f.coord_count();
        prod *= detail::factor_weyl_quotient(f, part);
    }
    if (!is_integral(prod)) throw internal_error("Weyl product is not integral");
    Int dim = numerator(prod);
    if (dim < 1) throw internal_error("Weyl dimension below 1");
    return dim;
}

} // namespace superres
