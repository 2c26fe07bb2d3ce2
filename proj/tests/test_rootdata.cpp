#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "superres/rootdata.hpp"

using namespace superres;

namespace {

SuperWeight osp2_w(int n, const Rat& eps, std::vector<Int> coeffs) {
    return SuperWeight(Family::osp2(n), eps, std::move(coeffs));
}

Vec random_vec(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    Vec v;
    v.eps = Rat(num(rng), den(rng));
    for (int i = 0; i < n; ++i) v.d.emplace_back(Rat(num(rng), den(rng)));
    return v;
}

} // namespace

TEST_CASE("osp(2|2n) root data", "[rootdata]") {
    SECTION("n=1 odd roots are +-e1+-d1") {
        RootDatum dat = build_datum(Family::osp2(1));
        REQUIRE(dat.odd_roots.size() == 4);
        std::set<std::pair<Rat, Rat>> got;
        for (const Vec& r : dat.odd_roots) got.emplace(r.eps, r.d[0]);
        std::set<std::pair<Rat, Rat>> want = {
            {Rat(1), Rat(1)}, {Rat(1), Rat(-1)}, {Rat(-1), Rat(1)}, {Rat(-1), Rat(-1)}};
        REQUIRE(got == want);
    }
    SECTION("n=3 has 2n positive odd roots") {
        RootDatum dat = build_datum(Family::osp2(3));
        REQUIRE(dat.positive_odd_roots.size() == 6);
    }
    SECTION("n=2 rho closed form") {
        RootDatum dat = build_datum(Family::osp2(2));
        REQUIRE(dat.rho.eps == Rat(-2));
        REQUIRE(dat.rho.d == std::vector<Rat>{Rat(2), Rat(1)});
    }
    SECTION("rho equals half-sum of even positives minus half-sum of odd positives, n<=8") {
        for (int n = 1; n <= 8; ++n) {
            RootDatum dat = build_datum(Family::osp2(n));
            Vec acc;
            acc.eps = 0;
            acc.d.assign(static_cast<std::size_t>(n), Rat(0));
            for (const Vec& r : dat.positive_even_roots) acc = vec_add(acc, r);
            Vec odd = acc;
            odd.eps = 0;
            odd.d.assign(static_cast<std::size_t>(n), Rat(0));
            for (const Vec& r : dat.positive_odd_roots) odd = vec_add(odd, r);
            Vec half = vec_scale(Rat(1, 2), vec_sub(acc, odd));
            REQUIRE(half == dat.rho);
        }
    }
    SECTION("positive/negative partition is consistent with the root sets") {
        RootDatum dat = build_datum(Family::osp2(3));
        REQUIRE(dat.even_roots.size() + dat.odd_roots.size() == 2 * dat.positive_roots.size());
        for (const Vec& r : dat.positive_roots) {
            bool in_even = false, in_odd = false;
            for (const Vec& e : dat.even_roots) in_even = in_even || e == r;
            for (const Vec& o : dat.odd_roots) in_odd = in_odd || o == r;
            REQUIRE((in_even || in_odd));
        }
    }
}

TEST_CASE("bilinear form", "[rootdata]") {
    RootDatum dat = build_datum(Family::osp2(2));
    auto e1 = osp2_w(2, Rat(1), {Int(0), Int(0)});
    auto d1 = osp2_w(2, Rat(0), {Int(1), Int(0)});
    auto e1_m_d1 = osp2_w(2, Rat(1), {Int(-1), Int(0)});
    auto e1_p_d1 = osp2_w(2, Rat(1), {Int(1), Int(0)});

    SECTION("diagonal values") {
        REQUIRE(bilinear(dat, e1, e1) == Rat(1));
        REQUIRE(bilinear(dat, d1, d1) == Rat(-1));
        REQUIRE(bilinear(dat, e1, d1) == Rat(0));
    }
    SECTION("expansion by bilinearity") {
        REQUIRE(bilinear(dat, e1_m_d1, e1_p_d1) == Rat(2));
        REQUIRE(bilinear(dat, e1_m_d1, e1_m_d1) == Rat(0)); // isotropic
    }
    SECTION("form matrix is symmetric") {
        for (std::size_t i = 0; i < dat.form.size(); ++i)
            for (std::size_t j = 0; j < dat.form.size(); ++j)
                REQUIRE(dat.form[i][j] == dat.form[j][i]);
    }
    SECTION("symmetry on random vectors") {
        std::mt19937 rng(42);
        for (int t = 0; t < 50; ++t) {
            Vec v = random_vec(rng, 2), w = random_vec(rng, 2);
            REQUIRE(bilinear_vec(dat, v, w) == bilinear_vec(dat, w, v));
        }
    }
    SECTION("family mismatch is a usage error") {
        RootDatum dat1 = build_datum(Family::osp2(1));
        auto w1 = osp2_w(1, Rat(0), {Int(0)});
        REQUIRE_THROWS_AS(bilinear(dat, w1, w1), usage_error);
    }
}

TEST_CASE("dominance", "[rootdata]") {
    RootDatum dat2 = build_datum(Family::osp2(2));
    RootDatum dat3 = build_datum(Family::osp2(3));
    REQUIRE(is_dominant(dat2, osp2_w(2, Rat(0), {Int(0), Int(0)})));
    REQUIRE(is_dominant(dat3, osp2_w(3, Rat(5), {Int(2), Int(1), Int(0)})));
    REQUIRE_FALSE(is_dominant(dat2, osp2_w(2, Rat(0), {Int(1), Int(2)})));
    REQUIRE_FALSE(is_dominant(dat2, osp2_w(2, Rat(0), {Int(0), Int(-1)})));
}

TEST_CASE("atypicality over osp(2|2n)", "[rootdata]") {
    SECTION("zero weight at n=2: witness e1-d1") {
        RootDatum dat = build_datum(Family::osp2(2));
        Atypicality at = atypicality(dat, osp2_w(2, Rat(0), {Int(0), Int(0)}));
        REQUIRE(at.degree == 1);
        REQUIRE(at.witness_labels == std::vector<std::string>{"e1-d1"});
    }
    SECTION("non-integral eps short-circuits to typical") {
        RootDatum dat = build_datum(Family::osp2(1));
        Atypicality at = atypicality(dat, osp2_w(1, Rat(1, 2), {Int(0)}));
        REQUIRE(at.degree == 0);
        REQUIRE(at.witnesses.empty());
    }
    SECTION("(-3|3) is atypical at n=1") {
        RootDatum dat = build_datum(Family::osp2(1));
        REQUIRE(atypicality(dat, osp2_w(1, Rat(-3), {Int(3)})).degree == 1);
    }
    SECTION("non-dominant input is a usage error") {
        RootDatum dat = build_datum(Family::osp2(2));
        REQUIRE_THROWS_AS(atypicality(dat, osp2_w(2, Rat(0), {Int(1), Int(2)})), usage_error);
    }
    SECTION("degree is 0 or 1 and recomputation is identical") {
        RootDatum dat = build_datum(Family::osp2(3));
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> coeff(0, 12), eps(-12, 12);
        for (int t = 0; t < 200; ++t) {
            std::vector<Int> c = {coeff(rng), coeff(rng), coeff(rng)};
            std::sort(c.rbegin(), c.rend());
            SuperWeight w = osp2_w(3, Rat(eps(rng)), c);
            Atypicality a = atypicality(dat, w);
            Atypicality b = atypicality(dat, w);
            REQUIRE((a.degree == 0 || a.degree == 1));
            REQUIRE(a.degree == b.degree);
            REQUIRE(a.witness_labels == b.witness_labels);
        }
    }
}

TEST_CASE("osp(3|2) root data", "[rootdata]") {
    RootDatum dat = build_datum(Family::osp32());
    SECTION("rho is the half-sum difference") {
        Vec even{Rat(0), {Rat(0)}}, odd{Rat(0), {Rat(0)}};
        for (const Vec& r : dat.positive_even_roots) even = vec_add(even, r);
        for (const Vec& r : dat.positive_odd_roots) odd = vec_add(odd, r);
        REQUIRE(vec_scale(Rat(1, 2), vec_sub(even, odd)) == dat.rho);
        REQUIRE(dat.rho.eps == Rat(-1, 2));
        REQUIRE(dat.rho.d[0] == Rat(1, 2));
    }
    SECTION("bilinear form is defined") {
        SuperWeight e(Family::osp32(), Rat(1), {Int(0)});
        SuperWeight d(Family::osp32(), Rat(0), {Int(1)});
        REQUIRE(bilinear(dat, e, e) == Rat(1));
        REQUIRE(bilinear(dat, d, d) == Rat(-1));
    }
}

TEST_CASE("exceptional-family atypicality is table membership", "[rootdata]") {
    SECTION("osp(3|2)") {
        RootDatum dat = build_datum(Family::osp32());
        REQUIRE(atypicality(dat, SuperWeight(Family::osp32(), Rat(2), {Int(3)})).degree == 1);
        REQUIRE(atypicality(dat, SuperWeight(Family::osp32(), Rat(0), {Int(0)})).degree == 1);
        REQUIRE(atypicality(dat, SuperWeight(Family::osp32(), Rat(1), {Int(3)})).degree == 0);
        REQUIRE(atypicality(dat, SuperWeight(Family::osp32(), Rat(1, 2), {Int(1)})).degree == 0);
    }
    SECTION("D(2,1;1) trivial weight and table points") {
        Family fam = Family::d21a(1, 1);
        RootDatum dat = build_datum(fam);
        REQUIRE(atypicality(dat, SuperWeight(fam, Rat(0), {Int(0), Int(0)})).degree == 1);
        REQUIRE(atypicality(dat, SuperWeight(fam, Rat(2), {Int(0), Int(0)})).degree == 1);
        REQUIRE(atypicality(dat, SuperWeight(fam, Rat(3), {Int(0), Int(0)})).degree == 0);
    }
    SECTION("G(3)") {
        RootDatum dat = build_datum(Family::g3());
        REQUIRE(atypicality(dat, SuperWeight(Family::g3(), Rat(5), {Int(0), Int(0)})).degree == 1);
        REQUIRE(atypicality(dat, SuperWeight(Family::g3(), Rat(4), {Int(0), Int(0)})).degree == 0);
    }
    SECTION("F(4) without a table is a usage error") {
        RootDatum dat = build_datum(Family::f4());
        SuperWeight w(Family::f4(), Rat(0), {Int(0), Int(0), Int(0)});
        REQUIRE_THROWS_AS(atypicality(dat, w), usage_error);
    }
}

TEST_CASE("family parameter validation", "[rootdata]") {
    REQUIRE_THROWS_AS(Family::d21a(0, 1), usage_error);
    REQUIRE_THROWS_AS(Family::d21a(2, 4), usage_error);
    REQUIRE_THROWS_AS(Family::osp2(0), usage_error);
    REQUIRE_NOTHROW(build_datum(Family::d21a(2, 3)));
}

TEST_CASE("weight text round-trip", "[rootdata]") {
    Family fam = Family::osp2(2);
    for (const std::string& s : {"0|0,0", "-3|3,0", "1/2|0,0", "12|7,3"}) {
        SuperWeight w = parse_weight(fam, s);
        REQUIRE(weight_text(w) == s);
    }
    REQUIRE_THROWS_AS(parse_weight(fam, "1,2"), usage_error);
    REQUIRE_THROWS_AS(parse_weight(fam, "1|2"), usage_error);   // wrong arity
    REQUIRE_THROWS_AS(parse_weight(fam, "x|0,0"), usage_error);
    REQUIRE_THROWS_AS(parse_weight(fam, "1/0|0,0"), usage_error);
}
