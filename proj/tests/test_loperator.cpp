#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "superres/diagrams.hpp"
#include "superres/loperator.hpp"

using namespace superres;

namespace {

SuperWeight osp2_w(int n, const Rat& eps, std::vector<Int> coeffs) {
    return SuperWeight(Family::osp2(n), eps, std::move(coeffs));
}

SuperWeight first_row(int n, const Int& eps, const Int& d) {
    std::vector<Int> c(static_cast<std::size_t>(n), Int(0));
    c[0] = d;
    return osp2_w(n, Rat(eps), std::move(c));
}

SuperWeight random_atypical(std::mt19937& rng, int n, int maxstep) {
    std::uniform_int_distribution<int> step(1, maxstep);
    std::vector<Int> b(static_cast<std::size_t>(n));
    Int cur = 0;
    for (int i = n - 1; i >= 0; --i) {
        cur += step(rng);
        b[static_cast<std::size_t>(i)] = cur;
    }
    int i0 = std::uniform_int_distribution<int>(0, n - 1)(rng);
    int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    std::vector<Int> coeffs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        coeffs[static_cast<std::size_t>(i)] = b[static_cast<std::size_t>(i)] - (n - i);
    return osp2_w(n, Rat(sign * b[static_cast<std::size_t>(i0)] + n), std::move(coeffs));
}

} // namespace

TEST_CASE("L-operator closed forms on the principal orbit", "[loperator]") {
    for (int n = 1; n <= 4; ++n) {
        RootDatum dat = build_datum(Family::osp2(n));
        for (int d = 0; d <= 40; ++d) {
            REQUIRE(l_op(dat, first_row(n, -d, d)).weight == first_row(n, -d - 1, d + 1));
            if (d >= 1)
                REQUIRE(l_op(dat, first_row(n, 2 * n + d, d)).weight ==
                        first_row(n, 2 * n + d - 1, d - 1));
        }
        REQUIRE(l_op(dat, first_row(n, 2 * n, 0)).weight == first_row(n, 0, 0));
    }
}

TEST_CASE("L-operator rejects typical weights", "[loperator]") {
    RootDatum dat = build_datum(Family::osp2(2));
    REQUIRE_THROWS_AS(l_op(dat, osp2_w(2, Rat(1, 2), {Int(0), Int(0)})), usage_error);
    REQUIRE_THROWS_AS(l_inv(dat, osp2_w(2, Rat(1, 2), {Int(0), Int(0)})), usage_error);
}

TEST_CASE("shift search needs full even-root regularity", "[loperator]") {
    SECTION("(4|0,0): entries pass the simple-root test at k=2 but tie at |1|") {
        RootDatum dat = build_datum(Family::osp2(2));
        LOpResult r = l_op(dat, osp2_w(2, Rat(4), {Int(0), Int(0)}));
        REQUIRE(r.weight == osp2_w(2, Rat(0), {Int(0), Int(0)}));
        REQUIRE(r.step.k == 4);
    }
    SECTION("(0|2,2,2): non-adjacent collision at k=2") {
        RootDatum dat = build_datum(Family::osp2(3));
        LOpResult r = l_op(dat, osp2_w(3, Rat(0), {Int(2), Int(2), Int(2)}));
        REQUIRE(r.weight == osp2_w(3, Rat(-3), {Int(3), Int(3), Int(3)}));
        REQUIRE(r.step.k == 3);
        REQUIRE(core_of(dat, osp2_w(3, Rat(0), {Int(2), Int(2), Int(2)})) ==
                core_of(dat, r.weight));
    }
}

TEST_CASE("L-inverse closed forms", "[loperator]") {
    for (int n = 1; n <= 3; ++n) {
        RootDatum dat = build_datum(Family::osp2(n));
        REQUIRE(l_inv(dat, first_row(n, 0, 0)) == first_row(n, 2 * n, 0));
        for (int d = 0; d <= 20; ++d)
            REQUIRE(l_inv(dat, first_row(n, -d - 1, d + 1)) == first_row(n, -d, d));
    }
}

TEST_CASE("round trip and injectivity on random atypical weights", "[loperator]") {
    std::mt19937 rng(17);
    for (int n = 1; n <= 3; ++n) {
        RootDatum dat = build_datum(Family::osp2(n));
        std::map<std::string, std::string> image_to_source;
        for (int t = 0; t < 120; ++t) {
            SuperWeight w = random_atypical(rng, n, 9);
            SuperWeight wl = l_op(dat, w).weight;
            REQUIRE(atypicality(dat, wl).degree == 1);
            REQUIRE(l_inv(dat, wl) == w);
            REQUIRE(l_op(dat, l_inv(dat, w)).weight == w);
            auto [it, fresh] = image_to_source.emplace(weight_text(wl), weight_text(w));
            if (!fresh) REQUIRE(it->second == weight_text(w)); // injective on samples
        }
    }
}

TEST_CASE("iterated powers", "[loperator]") {
    SECTION("identity at l = 0") {
        RootDatum dat = build_datum(Family::osp2(2));
        SuperWeight w = osp2_w(2, Rat(-3), {Int(3), Int(0)});
        REQUIRE(l_power(dat, w, 0) == w);
    }
    SECTION("orbit closed forms for |l| <= 200") {
        for (int n = 1; n <= 4; ++n) {
            Family fam = Family::osp2(n);
            RootDatum dat = build_datum(fam);
            SuperWeight up = first_row(n, 0, 0), down = up;
            for (int l = 1; l <= 200; ++l) {
                up = l_op(dat, up).weight;
                down = l_inv(dat, down);
                REQUIRE(up == principal_orbit_weight(fam, l));
                REQUIRE(down == principal_orbit_weight(fam, -l));
            }
        }
    }
    SECTION("power composition") {
        RootDatum dat = build_datum(Family::osp2(2));
        SuperWeight w = osp2_w(2, Rat(-2), {Int(2), Int(0)});
        REQUIRE(l_power(dat, l_power(dat, w, 3), -3) == w);
    }
}

TEST_CASE("LStep metadata", "[loperator]") {
    RootDatum dat = build_datum(Family::osp2(2));
    LOpResult r = l_op(dat, first_row(2, 0, 0));
    REQUIRE(r.step.k >= 1);
    REQUIRE(r.step.gamma_label == "e1-d1");
    REQUIRE(r.step.perm.size() == 2);
}
