#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>

#include "superres/resolutions.hpp"

using namespace superres;

namespace {

using Multiset = std::map<long long, long long>;

Multiset as_multiset(const ResolutionTerm& t) {
    Multiset m;
    for (const auto& s : t.summands)
        m[s.index.convert_to<long long>()] += s.mult.convert_to<long long>();
    return m;
}

// The closed-form resolution of the trivial osp(3|2)-simple, frozen as a test
// oracle: P_d = P(l_{d+1}) + P(l_{d-1}) + ... + P(l_r) with r = 2 for odd d,
// r = 0 for d = 0 mod 4, r = 1 for d = 2 mod 4.
Multiset osp32_l0_display(int d) {
    Multiset m;
    if (d % 2 == 1) {
        for (int j = d + 1; j >= 2; j -= 2) m[j] += 1;
    } else {
        for (int j = d + 1; j >= 3; j -= 2) m[j] += 1;
        m[d % 4 == 0 ? 0 : 1] += 1;
    }
    return m;
}

// Same shape for the other short leg.
Multiset osp32_l1_display(int d) {
    Multiset m;
    if (d % 2 == 1) {
        for (int j = d + 1; j >= 2; j -= 2) m[j] += 1;
    } else {
        for (int j = d + 1; j >= 3; j -= 2) m[j] += 1;
        m[d % 4 == 0 ? 1 : 0] += 1;
    }
    return m;
}

// Frozen display for S(l_2): top label d+2, doubled interior, and the two
// leg labels on odd steps.
Multiset osp32_l2_display(int d) {
    Multiset m;
    if (d == 0) {
        m[2] = 1;
        return m;
    }
    m[d + 2] += 1;
    if (d % 2 == 0) {
        for (int j = d; j >= 2; j -= 2) m[j] += 2;
    } else {
        for (int j = d; j >= 3; j -= 2) m[j] += 2;
        m[1] += 1;
        m[0] += 1;
    }
    return m;
}

// Frozen display for S(l_3).
Multiset osp32_l3_display(int d) {
    Multiset m;
    if (d == 0) {
        m[3] = 1;
        return m;
    }
    m[d + 3] += 1;
    m[d + 1] += 1;
    if (d % 2 == 1) {
        for (int j = d - 1; j >= 2; j -= 2) m[j] += 2;
    } else {
        for (int j = d - 1; j >= 3; j -= 2) m[j] += 2;
        m[1] += 1;
        m[0] += 1;
    }
    return m;
}

} // namespace

TEST_CASE("principal simple closed form", "[resolutions]") {
    SECTION("n=2, d=3") {
        ResolutionTerm t = term(ModuleDescriptor::simple_principal(2, 0), 3);
        REQUIRE(as_multiset(t) == Multiset{{-3, 1}, {-1, 1}, {1, 1}, {3, 1}});
        REQUIRE(t.count == 4);
        REQUIRE(t.exact_dim());
    }
    SECTION("summand count is d+1 and labels stay in range") {
        for (int n = 1; n <= 3; ++n) {
            auto terms = resolution_terms(ModuleDescriptor::simple_principal(n, 0), 20);
            for (int d = 0; d <= 20; ++d) {
                REQUIRE(terms[d].count == d + 1);
                for (const auto& s : terms[d].summands) {
                    REQUIRE(int_abs(s.index) <= d);
                    REQUIRE((s.index - d) % 2 == 0);
                    REQUIRE(s.mult == 1);
                }
            }
        }
    }
    SECTION("dimension of the d-th term is the sum of cover dimensions") {
        ResolutionTerm t = term(ModuleDescriptor::simple_principal(1, 0), 2);
        REQUIRE(t.dim_lower ==
                proj_dim_principal(1, -2) + proj_dim_principal(1, 0) + proj_dim_principal(1, 2));
    }
}

TEST_CASE("zigzag oracle", "[resolutions]") {
    SECTION("matches the closed form for n <= 3, d <= 64") {
        for (int n = 1; n <= 3; ++n) {
            auto closed = resolution_terms(ModuleDescriptor::simple_principal(n, 0), 64);
            for (int d = 0; d <= 64; ++d) {
                ResolutionTerm w = zigzag_term(n, 0, d);
                REQUIRE(same_summands(w, closed[d]));
                REQUIRE(w.dim_lower == closed[d].dim_lower);
            }
        }
    }
    SECTION("start away from zero: diamond radical heads") {
        ResolutionTerm t = zigzag_term(2, 5, 1);
        REQUIRE(as_multiset(t) == Multiset{{4, 1}, {6, 1}});
    }
    SECTION("d=0 is the cover of the module itself") {
        ResolutionTerm t = zigzag_term(2, 0, 0);
        REQUIRE(as_multiset(t) == Multiset{{0, 1}});
    }
    SECTION("kernel heads expand by exactly one label on each end") {
        auto terms = resolution_terms(ModuleDescriptor::simple_principal(2, 3), 30);
        for (int d = 0; d + 1 <= 30; ++d) {
            auto a = as_multiset(terms[d]), b = as_multiset(terms[d + 1]);
            REQUIRE(b.begin()->first == a.begin()->first - 1);
            REQUIRE(b.rbegin()->first == a.rbegin()->first + 1);
        }
    }
}

TEST_CASE("principal Kac resolution", "[resolutions]") {
    SECTION("single summand P^(l-d)") {
        ResolutionTerm t = term(ModuleDescriptor::kac_principal(3, 0), 2);
        REQUIRE(as_multiset(t) == Multiset{{-2, 1}});
        REQUIRE(t.count == 1);
        REQUIRE(t.dim_lower == proj_dim_principal(3, -2));
        ResolutionTerm t2 = term(ModuleDescriptor::kac_principal(2, 5), 3);
        REQUIRE(as_multiset(t2) == Multiset{{2, 1}});
    }
}

TEST_CASE("osp(3|2) resolutions match the closed-form displays", "[resolutions]") {
    auto t0 = resolution_terms(ModuleDescriptor::osp32_simple(0), 64);
    auto t1 = resolution_terms(ModuleDescriptor::osp32_simple(1), 64);
    auto t2 = resolution_terms(ModuleDescriptor::osp32_simple(2), 64);
    auto t3 = resolution_terms(ModuleDescriptor::osp32_simple(3), 64);
    for (int d = 0; d <= 64; ++d) {
        REQUIRE(as_multiset(t0[d]) == osp32_l0_display(d));
        REQUIRE(as_multiset(t1[d]) == osp32_l1_display(d));
        REQUIRE(as_multiset(t2[d]) == osp32_l2_display(d));
        REQUIRE(as_multiset(t3[d]) == osp32_l3_display(d));
    }
    SECTION("example: trivial module, d = 4") {
        REQUIRE(as_multiset(t0[4]) == Multiset{{5, 1}, {3, 1}, {0, 1}});
        REQUIRE(t0[4].count == 3);
    }
    SECTION("summand counts per parity") {
        for (int d = 0; d <= 64; ++d) {
            REQUIRE(t0[d].count == (d % 2 == 0 ? d / 2 + 1 : (d + 1) / 2));
            if (d >= 1) REQUIRE(t2[d].count == (d % 2 == 0 ? d + 1 : d + 2));
            if (d >= 1) REQUIRE(t3[d].count == (d % 2 == 1 ? d + 1 : d + 2));
        }
    }
}

TEST_CASE("osp(3|2) resolutions away from the fork look like the chain", "[resolutions]") {
    // far from the branch vertex the walk is locally a chain: at l = 10,
    // the d = 2 term must be {8, 10, 12}, not a shifted copy of the l = 3
    // boundary cases
    auto terms = resolution_terms(ModuleDescriptor::osp32_simple(10), 8);
    REQUIRE(as_multiset(terms[1]) == Multiset{{9, 1}, {11, 1}});
    REQUIRE(as_multiset(terms[2]) == Multiset{{8, 1}, {10, 1}, {12, 1}});
    REQUIRE(as_multiset(terms[8]) == Multiset{{2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}, {12, 1},
                                              {14, 1}, {16, 1}, {18, 1}});
}

TEST_CASE("D(2,1;alpha) resolutions", "[resolutions]") {
    Family fam = Family::d21a(1, 1);
    SECTION("non-principal blocks walk the chain over Z") {
        auto terms = resolution_terms(ModuleDescriptor::d21a_simple(fam, 1, 0), 20);
        for (int d = 0; d <= 20; ++d) {
            Multiset want;
            for (int j = -d; j <= d; j += 2) want[j] = 1;
            REQUIRE(as_multiset(terms[d]) == want);
            REQUIRE(terms[d].count == d + 1);
        }
    }
    SECTION("principal block has the fork shape with the trivial weight at 0") {
        auto terms = resolution_terms(ModuleDescriptor::d21a_simple(fam, 0, 0), 12);
        for (int d = 0; d <= 12; ++d) REQUIRE(as_multiset(terms[d]) == osp32_l0_display(d));
        // the d = 1 cover is P(lambda_2) whose weight is (3,1,1)
        REQUIRE(terms[1].summands.size() == 1);
        REQUIRE(terms[1].dim_lower == g0_dim(d21a_principal_lambda(fam, 2)));
        REQUIRE(terms[1].dim_lower == 16);
    }
    SECTION("negative labels are valid in non-principal blocks only") {
        REQUIRE_NOTHROW(term(ModuleDescriptor::d21a_simple(fam, 1, -4), 3));
        REQUIRE_THROWS_AS(ModuleDescriptor::d21a_simple(fam, 0, -1), usage_error);
    }
}

TEST_CASE("G(3) resolutions", "[resolutions]") {
    auto terms = resolution_terms(ModuleDescriptor::g3_simple(1, 0), 12);
    for (int d = 0; d <= 12; ++d) REQUIRE(as_multiset(terms[d]) == osp32_l0_display(d));
    REQUIRE(terms[1].dim_lower == g0_dim(g3_lambda(1, 2)));
}

TEST_CASE("F(4) resolutions from a loaded table", "[resolutions]") {
    std::istringstream in("0 0 0 0 0\n1 1 0 0 1\n2 2 0 0 2\n3 3 0 0 3\n4 4 0 0 4\n5 5 0 0 5\n"
                          "6 6 0 0 6\n7 7 0 0 7\n8 8 0 0 8\n");
    auto table = std::make_shared<F4Table>(f4_table_load(in));
    auto desc = ModuleDescriptor::f4_simple(table, 0);
    SECTION("terms carry the external marker and follow the fork walk") {
        auto terms = resolution_terms(desc, 6);
        for (int d = 0; d <= 6; ++d) {
            REQUIRE(terms[d].external);
            REQUIRE(as_multiset(terms[d]) == osp32_l0_display(d));
        }
    }
    SECTION("walking past the table range fails loudly") {
        REQUIRE_THROWS_AS(resolution_terms(desc, 30), usage_error);
    }
    SECTION("labels outside the table are rejected up front") {
        REQUIRE_THROWS_AS(ModuleDescriptor::f4_simple(table, 20), usage_error);
    }
    SECTION("tables not rooted at label 0 are rejected") {
        std::istringstream shifted("3 3 0 0 3\n4 4 0 0 4\n5 5 0 0 5\n");
        auto t = std::make_shared<F4Table>(f4_table_load(shifted));
        REQUIRE_THROWS_AS(ModuleDescriptor::f4_simple(t, 4), usage_error);
    }
}

TEST_CASE("term dimension bounds", "[resolutions]") {
    SECTION("osp(2|2n) terms are exact") {
        auto [lo, hi] = term_dim_bounds(ModuleDescriptor::simple_principal(1, 0), 0);
        REQUIRE(lo == 8);
        REQUIRE(hi == 8);
    }
    SECTION("osp(3|2) trivial, d=1: bounds from P(l_2)") {
        auto [lo, hi] = term_dim_bounds(ModuleDescriptor::osp32_simple(0), 1);
        REQUIRE(lo == 6);
        REQUIRE(hi == Int(64) * 6);
    }
    SECTION("labels render deterministically") {
        ResolutionTerm t = term(ModuleDescriptor::simple_principal(2, 0), 2);
        REQUIRE(t.summands[0].label == "P^(-2)");
        REQUIRE(t.summands[1].label == "P^(0)");
        REQUIRE(t.summands[2].label == "P^(2)");
        ResolutionTerm g = term(ModuleDescriptor::g3_simple(1, 0), 1);
        REQUIRE(g.summands[0].label == "P(l_1,2)");
    }
}
