#include "ccomp/products.hpp"
#include "support.hpp"

using namespace ccomp;
using namespace ccomp::testing;

namespace {

Real pi128() { return Real::pi(128); }

}  // namespace

TEST_CASE("Viete product") {
    CHECK_NEAR(viete_product(1), sqrt(R(2)) / 2L, 1e-35);
    CHECK_NEAR(viete_product(20), 2L / pi128(), 1e-11);
    CHECK_NEAR(1L / viete_product(20), pi128() / 2L, 5e-11);
    Real prev = viete_product(1);
    for (std::size_t n = 2; n <= 30; ++n) {
        Real cur = viete_product(n);
        CHECK(cur < prev);
        CHECK(cur > 2L / pi128());
        prev = cur;
    }
    // error shrinks roughly by 4 per factor
    Real e10 = viete_product(10) - 2L / pi128();
    Real e11 = viete_product(11) - 2L / pi128();
    CHECK_NEAR(e10 / e11, R(4), 0.01);
    CHECK_THROWS_AS(viete_product(0), DomainError);

    auto spec = viete_spec();
    CHECK(spec.partial(20, 128) == viete_product(20));
    CHECK_NEAR(spec.target, 2L / pi128(), 1e-30);
}

TEST_CASE("Catalan and Candido") {
    CHECK_NEAR(catalan_pi(2), R("3.061467458920718173827679872243190934091"), 1e-35);
    CHECK_NEAR(catalan_pi(20), pi128(), 1e-11);
    // the stable route keeps converging where naive subtraction would stall
    CHECK_NEAR(catalan_pi(60), pi128(), 1e-33);
    Real prev = catalan_pi(1);
    for (std::size_t n = 2; n <= 25; ++n) {
        Real cur = catalan_pi(n);
        CHECK(cur > prev);
        CHECK(cur < pi128());
        prev = cur;
    }
    CHECK_NEAR(candido_ratio(10), pi128() / 2L, 1e-5);
    CHECK_NEAR(candido_ratio(30), pi128() / 2L, 1e-16);
    CHECK_THROWS_AS(candido_ratio(1), DomainError);
}

TEST_CASE("polygon bounds") {
    for (std::size_t q = 1; q <= 25; ++q) {
        auto [lo, hi] = polygon_bounds_pi(q);
        CHECK(lo < pi128());
        CHECK(pi128() < hi);
    }
    auto [lo5, hi5] = polygon_bounds_pi(5);
    CHECK(lo5 > R(223) / R(71));
    CHECK(hi5 < R(22) / R(7));
    auto [lo4, hi4] = polygon_bounds_pi(4);
    CHECK(lo4 > R(223) / R(71));
    CHECK(hi4 < R(22) / R(7));
    auto [lo20, hi20] = polygon_bounds_pi(20);
    CHECK(hi20 - lo20 < R("1e-10"));

    SUBCASE("monotone bracketing with widths shrinking by 4") {
        auto prev = polygon_bounds_pi(1);
        Real prev_width = prev.second - prev.first;
        for (std::size_t q = 2; q <= 30; ++q) {
            auto cur = polygon_bounds_pi(q);
            CHECK(cur.first > prev.first);
            CHECK(cur.second < prev.second);
            Real width = cur.second - cur.first;
            if (q >= 5) CHECK_NEAR(width / prev_width, R("0.25"), 0.0125);
            prev = cur;
            prev_width = width;
        }
    }
}

TEST_CASE("Euler secant product") {
    CHECK_NEAR(euler_secant_product(20, pi128() / 2L), pi128() / 2L, 1e-11);
    CHECK_NEAR(euler_secant_product(1, R(1)), R("0.9588510772084060005465758704311427761636"), 1e-35);
    CHECK_NEAR(euler_secant_product(30, R("0.3")), R("0.3"), 1e-12);
    CHECK_THROWS_AS(euler_secant_product(5, R(0)), DomainError);
    CHECK_THROWS_AS(euler_secant_product(5, pi128()), DomainError);
}

TEST_CASE("Osler union of Viete and Wallis") {
    CHECK_NEAR(osler_union_product(0, 10000), 2L / pi128(), 1e-4);
    CHECK_NEAR(osler_union_product(3, 10000), 2L / pi128(), 1e-4);
    CHECK_NEAR(osler_union_product(20, 0), viete_product(20), 1e-35);
    // more radical factors leave less for the Wallis tail to fix
    Real e0 = abs(osler_union_product(0, 200) - 2L / pi128());
    Real e3 = abs(osler_union_product(3, 200) - 2L / pi128());
    CHECK(e3 < e0);
}

TEST_CASE("Levin lemniscate product") {
    CHECK_NEAR(levin_lemniscate_product(1), sqrt(R("0.5")), 1e-35);
    CHECK_NEAR(lemniscate_constant_reference(), R("2.6220575542"), 1e-10);
    CHECK_NEAR(levin_lemniscate_product(24), 2L / lemniscate_constant_reference(), 1e-8);
    // Gamma(1/4)^2 / (2 sqrt(2 pi)) from an independent evaluation
    const Real target = 2L / R("2.62205755429211981046483958989111941368275495");
    CHECK_NEAR(levin_lemniscate_product(60), target, 1e-30);
    // partial products alternate around the limit with shrinking amplitude
    Real prev_gap = levin_lemniscate_product(1) - target;
    for (std::size_t n = 2; n <= 20; ++n) {
        Real gap = levin_lemniscate_product(n) - target;
        CHECK(gap.sign() == -prev_gap.sign());
        CHECK(abs(gap) < abs(prev_gap));
        prev_gap = gap;
    }
    auto spec = levin_spec();
    CHECK(spec.partial(24, 128) == levin_lemniscate_product(24));
}

TEST_CASE("logarithm products") {
    CHECK_NEAR(osler_log_product(exp(R(1)), 30), R(1), 1e-9);
    CHECK_NEAR(osler_log_product(R(4), 30), R("1.386294361119890618834464242916353136151"), 1e-9);
    CHECK_NEAR(osler_log_product(R("0.25"), 30), -R("1.386294361119890618834464242916353136151"), 1e-9);
    CHECK_THROWS_AS(osler_log_product(R(1), 10), DomainError);
    CHECK_THROWS_AS(osler_log_product(R(-2), 10), DomainError);
    CHECK_NEAR(hauser_ln2(20), log(R(2)), 1e-6);
    CHECK_NEAR(hauser_ln2(60), log(R(2)), 1e-30);
}

TEST_CASE("cross-formula agreement on pi") {
    const Real p = pi128();
    CHECK_NEAR(2L / viete_product(25), p, 1e-10);
    CHECK_NEAR(catalan_pi(25), p, 1e-10);
    CHECK_NEAR(2L * euler_secant_product(25, p / 2L), p, 1e-10);
    CHECK_NEAR(2L / osler_union_product(25, 0), p, 1e-10);
}
