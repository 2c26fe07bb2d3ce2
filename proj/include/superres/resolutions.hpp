#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <utility>
#include <vector>

#include "superres/dimensions.hpp"
#include "superres/loperator.hpp"

namespace superres {

// Minimal projective resolution terms.  Within one atypical block the
// projective covers are diamonds P(v) with radical heads at the neighbors of
// v in the block graph, so the kernel heads satisfy the walk recursion
//
//     h_0 = e_start,   h_{d+1} = A * h_d - h_{d-1}
//
// (A the adjacency operator): expanding every head to its neighbors double
// counts exactly the previous heads.  The graph is the chain over Z for the
// osp(2|2n) principal block and the non-principal D(2,1;alpha) blocks, and
// the fork graph 0-2, 1-2, 2-3-4-... for the blocks equivalent to the
// osp(3|2) principal block.

struct ModuleDescriptor {
    enum class Kind { SimplePrincipal, KacPrincipal, Osp32Simple, D21aSimple, G3Simple, F4Simple };

    Kind kind;
    Family family;
    Int l;      // start label
    Int k = 0;  // block index for D21a / G3
    std::shared_ptr<const F4Table> table; // F4 only

    static ModuleDescriptor simple_principal(int n, const Int& l) {
        return {Kind::SimplePrincipal, Family::osp2(n), l};
    }
    static ModuleDescriptor kac_principal(int n, const Int& l) {
        return {Kind::KacPrincipal, Family::osp2(n), l};
    }
    static ModuleDescriptor osp32_simple(const Int& l) {
        if (l < 0) throw usage_error("osp(3|2) simple label must be >= 0");
        return {Kind::Osp32Simple, Family::osp32(), l};
    }
    static ModuleDescriptor d21a_simple(const Family& fam, const Int& k, const Int& l) {
        if (fam.tag != FamilyTag::D21a) throw usage_error("d21a family expected");
        if (k < 0) throw usage_error("block index k must be >= 0");
        if (fam.irrational && k != 0)
            throw usage_error("irrational alpha has only the principal block");
        if (k == 0 && l < 0) throw usage_error("principal block label must be >= 0");
        return {Kind::D21aSimple, fam, l, k};
    }
    static ModuleDescriptor g3_simple(const Int& k, const Int& l) {
        if (k < 0 || l < 0) throw usage_error("G(3) block indices must be >= 0");
        return {Kind::G3Simple, Family::g3(), l, k};
    }
    static ModuleDescriptor f4_simple(std::shared_ptr<const F4Table> table, const Int& l) {
        if (!table) throw usage_error("F(4) descriptor requires a loaded block table");
        if (table->l_min != 0)
            throw usage_error("F(4) table must start at label 0, the block's short legs");
        if (!table->contains_label(l)) throw usage_error("label outside the F(4) table range");
        return {Kind::F4Simple, Family::f4(), l, 0, std::move(table)};
    }
};

struct Summand {
    Int index;         // label within the block
    Int mult;
    std::string label; // display form, e.g. "P^(-3)" or "P(l_1,5)"
};

struct ResolutionTerm {
    int d = 0;
    std::vector<Summand> summands; // sorted by index ascending
    Int dim_lower;                 // == dim_upper for osp(2|2n)
    Int dim_upper;
    Int count;
    bool external = false; // built from an externally loaded table

    bool exact_dim() const { return dim_lower == dim_upper; }
};

namespace detail {

using Heads = std::map<Int, Int>;

/// h -> A*h on the chain over Z.
inline Heads chain_adjacency(const Heads& h) {
    Heads out;
    for (const auto& [v, m] : h) {
        out[v - 1] += m;
        out[v + 1] += m;
    }
    return out;
}

/// h -> A*h on the fork graph (0 and 1 both adjacent to 2, then a ray).
inline Heads fork_adjacency(const Heads& h) {
    Heads out;
    for (const auto& [v, m] : h) {
        if (v == 0 || v == 1) {
            out[2] += m;
        } else if (v == 2) {
            out[0] += m;
            out[1] += m;
            out[3] += m;
        } else {
            out[v - 1] += m;
            out[v + 1] += m;
        }
    }
    return out;
}

inline Heads heads_sub(Heads a, const Heads& b) {
    for (const auto& [v, m] : b) {
        auto it = a.find(v);
        if (it == a.end() || it->second < m)
            throw internal_error("kernel-head recursion went negative");
        it->second -= m;
        if (it->second == 0) a.erase(it);
    }
    return a;
}

template <typename Adj>
inline std::vector<Heads> walk_heads(const Int& start, int d_max, Adj adj) {
    std::vector<Heads> hs;
    hs.reserve(static_cast<std::size_t>(d_max) + 1);
    hs.push_back(Heads{{start, Int(1)}});
    if (d_max >= 1) hs.push_back(adj(hs[0]));
    for (int d = 2; d <= d_max; ++d) hs.push_back(heads_sub(adj(hs[d - 1]), hs[d - 2]));
    for (const Heads& h : hs)
        if (h.empty()) throw internal_error("empty resolution term");
    return hs;
}

inline std::string principal_label(const Int& i) { return "P^(" + i.str() + ")"; }

inline std::string block_label(const ModuleDescriptor& desc, const Int& j) {
    std::ostringstream os;
    switch (desc.kind) {
        case ModuleDescriptor::Kind::Osp32Simple:
        case ModuleDescriptor::Kind::F4Simple:
            os << "P(l_" << j.str() << ")";
            break;
        case ModuleDescriptor::Kind::D21aSimple:
            if (desc.k == 0)
                os << "P(l_" << j.str() << ")";
            else
                os << "P(l_" << desc.k.str() << "," << j.str() << ")";
            break;
        case ModuleDescriptor::Kind::G3Simple:
            os << "P(l_" << desc.k.str() << "," << j.str() << ")";
            break;
        default:
            throw internal_error("principal labels use principal_label");
    }
    return os.str();
}

/// Weight of the projective label j within the descriptor's block.
inline SuperWeight block_weight(const ModuleDescriptor& desc, const Int& j) {
    switch (desc.kind) {
        case ModuleDescriptor::Kind::Osp32Simple: return osp32_lambda(j);
        case ModuleDescriptor::Kind::D21aSimple:
            return desc.k == 0 ? d21a_principal_lambda(desc.family, j)
                               : d21a_lambda(desc.family, desc.k, j);
        case ModuleDescriptor::Kind::G3Simple: return g3_lambda(desc.k, j);
        case ModuleDescriptor::Kind::F4Simple: return desc.table->weight_at(j);
        default: throw internal_error("no block weight for principal kinds");
    }
}

struct DimCache {
    std::map<Int, std::pair<Int, Int>> by_label;
};

inline std::pair<Int, Int> label_dims(const ModuleDescriptor& desc, const Int& j,
                                      DimCache& cache) {
    auto it = cache.by_label.find(j);
    if (it != cache.by_label.end()) return it->second;
    std::pair<Int, Int> dims;
    if (desc.kind == ModuleDescriptor::Kind::SimplePrincipal ||
        desc.kind == ModuleDescriptor::Kind::KacPrincipal) {
        Int dim = proj_dim_principal(desc.family.n, j);
        dims = {dim, dim};
    } else {
        dims = proj_dim_bounds(block_weight(desc, j));
    }
    cache.by_label.emplace(j, dims);
    return dims;
}

inline ResolutionTerm make_term(const ModuleDescriptor& desc, int d, const Heads& heads,
                                DimCache& cache) {
    ResolutionTerm t;
    t.d = d;
    t.dim_lower = 0;
    t.dim_upper = 0;
    t.count = 0;
    t.external = desc.kind == ModuleDescriptor::Kind::F4Simple;
    const bool principal = desc.kind == ModuleDescriptor::Kind::SimplePrincipal ||
                           desc.kind == ModuleDescriptor::Kind::KacPrincipal;
    for (const auto& [j, m] : heads) {
        Summand s;
        s.index = j;
        s.mult = m;
        s.label = principal ? principal_label(j) : block_label(desc, j);
        auto [lo, hi] = label_dims(desc, j, cache);
        t.dim_lower += m * lo;
        t.dim_upper += m * hi;
        t.count += m;
        t.summands.push_back(std::move(s));
    }
    if (t.count < 1) throw internal_error("resolution term with no summands");
    return t;
}

/// The closed form for the trivial module resolution on the
/// osp(2|2n) principal block: P_d = sum of P^(i) over i = d mod 2, |i| <= d.
inline Heads trivial_closed_form(int d) {
    Heads h;
    for (Int i = -d; i <= d; i += 2) h[i] = 1;
    return h;
}

} // namespace detail

/// All terms P_0 ... P_{d_max} of the minimal resolution.
inline std::vector<ResolutionTerm> resolution_terms(const ModuleDescriptor& desc, int d_max) {
    if (d_max < 0) throw usage_error("resolution step must be >= 0");
    detail::DimCache cache;
    std::vector<ResolutionTerm> terms;
    terms.reserve(static_cast<std::size_t>(d_max) + 1);

    using Kind = ModuleDescriptor::Kind;
    switch (desc.kind) {
        case Kind::SimplePrincipal: {
            if (desc.l == 0) {
                for (int d = 0; d <= d_max; ++d)
                    terms.push_back(detail::make_term(desc, d, detail::trivial_closed_form(d), cache));
            } else {
                auto hs = detail::walk_heads(desc.l, d_max, detail::chain_adjacency);
                for (int d = 0; d <= d_max; ++d)
                    terms.push_back(detail::make_term(desc, d, hs[d], cache));
            }
            break;
        }
        case Kind::KacPrincipal: {
            // ... -> P^(l-2) -> P^(l-1) -> P^(l) -> K(0^(l)): term d = P^(l-d)
            for (int d = 0; d <= d_max; ++d)
                terms.push_back(
                    detail::make_term(desc, d, detail::Heads{{desc.l - d, Int(1)}}, cache));
            break;
        }
        case Kind::Osp32Simple:
        case Kind::G3Simple:
        case Kind::F4Simple: {
            auto hs = detail::walk_heads(desc.l, d_max, detail::fork_adjacency);
            for (int d = 0; d <= d_max; ++d)
                terms.push_back(detail::make_term(desc, d, hs[d], cache));
            break;
        }
        case Kind::D21aSimple: {
            if (desc.k == 0) {
                auto hs = detail::walk_heads(desc.l, d_max, detail::fork_adjacency);
                for (int d = 0; d <= d_max; ++d)
                    terms.push_back(detail::make_term(desc, d, hs[d], cache));
            } else {
                auto hs = detail::walk_heads(desc.l, d_max, detail::chain_adjacency);
                for (int d = 0; d <= d_max; ++d)
                    terms.push_back(detail::make_term(desc, d, hs[d], cache));
            }
            break;
        }
    }
    return terms;
}

inline ResolutionTerm term(const ModuleDescriptor& desc, int d) {
    return resolution_terms(desc, d).back();
}

/// Independent oracle for the osp(2|2n) principal block: the kernel-head walk
/// on the Z-chain starting at the simple 0^(l), never consulting the closed
/// form.
inline ResolutionTerm zigzag_term(int n, const Int& l, int d) {
    if (d < 0) throw usage_error("resolution step must be >= 0");
    ModuleDescriptor desc = ModuleDescriptor::simple_principal(n, l);
    auto hs = detail::walk_heads(l, d, detail::chain_adjacency);
    detail::DimCache cache;
    return detail::make_term(desc, d, hs[static_cast<std::size_t>(d)], cache);
}

inline std::pair<Int, Int> term_dim_bounds(const ModuleDescriptor& desc, int d) {
    ResolutionTerm t = term(desc, d);
    return {t.dim_lower, t.dim_upper};
}

inline bool same_summands(const ResolutionTerm& a, const ResolutionTerm& b) {
    if (a.summands.size() != b.summands.size()) return false;
    for (std::size_t i = 0; i < a.summands.size(); ++i)
        if (a.summands[i].index != b.summands[i].index || a.summands[i].mult != b.summands[i].mult)
            return false;
    return true;
}

} // namespace superres
