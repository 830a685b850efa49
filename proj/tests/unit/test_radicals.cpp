#include "ccomp/radicals.hpp"
#include "support.hpp"

#include <random>

using namespace ccomp;
using namespace ccomp::testing;

namespace {

SignSequence periodic(std::vector<int> s, std::size_t pre, std::size_t period) {
    SignSequence out{std::move(s), std::make_pair(pre, period)};
    return out;
}

}  // namespace

TEST_CASE("Nyblom closed form") {
    CHECK_NEAR(nyblom_closed_form(R(2), 5, NyblomVariant::Plus), R(2), 1e-30);
    CHECK(nyblom_closed_form(R(2), 5, NyblomVariant::Minus).is_zero());
    for (unsigned k = 1; k <= 12; ++k) {
        for (const char* x : {"2", "3", "7.25", "10"}) {
            for (auto v : {NyblomVariant::Plus, NyblomVariant::Minus}) {
                Real c = nyblom_closed_form(R(x), k, v);
                Real d = nyblom_direct(R(x), k, v);
                CHECK(abs(c - d) <= abs(c) * R("1e-12") + R("1e-30"));
            }
        }
    }
    // k = 1: sqrt(2 + x), and sqrt(x - 2) for the minus form.
    CHECK_NEAR(nyblom_closed_form(R(3), 1, NyblomVariant::Plus), sqrt(R(5)), 1e-35);
    CHECK_NEAR(nyblom_closed_form(R(3), 1, NyblomVariant::Minus), R(1), 1e-35);
    CHECK_THROWS_AS(nyblom_closed_form(R("1.5"), 3, NyblomVariant::Plus), DomainError);
}

TEST_CASE("sign nests") {
    SUBCASE("all plus tends to 2") {
        SignSequence plus{std::vector<int>{1}, std::make_pair(std::size_t{0}, std::size_t{1})};
        auto v = sign_nest_value(plus, 60);
        CHECK_NEAR(v.direct, R(2), 1e-30);
        CHECK_NEAR(v.series, R(2), 1e-30);
    }
    SUBCASE("Cipolla: all minus inside") {
        auto v = sign_nest_value(periodic({1, -1}, 1, 1), 120);
        CHECK_NEAR(v.direct, R(1), 1e-30);
        CHECK_NEAR(v.series, R(1), 1e-30);
    }
    SUBCASE("Cipolla: alternating inside") {
        auto v = sign_nest_value(periodic({1, -1, 1}, 1, 2), 120);
        Real g = (sqrt(R(5)) - 1L) / 2L;
        CHECK_NEAR(v.direct, g, 1e-30);
        CHECK_NEAR(v.series, g, 1e-30);
    }
    SUBCASE("outer sign") {
        auto v = sign_nest_value(SignSequence{{-1, 1}, std::nullopt}, 1);
        CHECK_NEAR(v.direct, -sqrt(R(2) + sqrt(R(2))), 1e-35);
        CHECK_NEAR(v.series, v.direct, 1e-35);
    }
    SUBCASE("finite list without a tail cannot be extended") {
        SignSequence s{{1, 1}, std::nullopt};
        CHECK_THROWS_AS(s.at(2), DomainError);
        CHECK_THROWS_AS(sign_nest_value(s, 5), DomainError);
    }
}

TEST_CASE("two routes agree on every pattern up to length 12") {
    for (std::size_t len = 1; len <= 12; ++len) {
        for (unsigned mask = 0; mask < (1u << len); ++mask) {
            SignSequence s;
            for (std::size_t i = 0; i < len; ++i) s.signs.push_back((mask >> i) & 1u ? -1 : 1);
            auto v = sign_nest_value(s, len - 1, 96);
            REQUIRE(abs(v.direct - v.series) <= R("1e-10"));
        }
    }
}

TEST_CASE("two routes agree on random patterns up to length 20") {
    std::mt19937 rng(183);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t len = 13 + static_cast<std::size_t>(trial % 8);
        SignSequence s;
        for (std::size_t i = 0; i < len; ++i) s.signs.push_back(coin(rng) ? 1 : -1);
        auto v = sign_nest_value(s, len - 1, 96);
        REQUIRE(abs(v.direct - v.series) <= R("1e-10"));
    }
}

TEST_CASE("encode_sign_nest") {
    SUBCASE("x = 2 is all plus") {
        auto s = encode_sign_nest(R(2), 30);
        CHECK(s.signs.size() == 31);
        for (int e : s.signs) CHECK(e == 1);
        auto p = detect_sign_periodicity(s, 8);
        REQUIRE(p.has_value());
        CHECK(p->first == 0);
        CHECK(p->second == 1);
    }
    SUBCASE("x = 1 is eventually periodic and decodes back") {
        auto s = encode_sign_nest(R(1), 64);
        auto p = detect_sign_periodicity(s, 16);
        REQUIRE(p.has_value());
        // 2 sin(pi/4 * S) = 1 needs S = 2/3 = 0.101010... in binary digits of the products.
        auto v = sign_nest_value(s, 64);
        CHECK_NEAR(v.direct, R(1), 1e-17);
        SignSequence tail{std::vector<int>(s.signs.begin(), s.signs.begin() + static_cast<long>(p->first + p->second)),
                          p};
        CHECK_NEAR(sign_nest_value(tail, 200).direct, R(1), 1e-30);
    }
    SUBCASE("rational multiples of pi give periodic signs") {
        auto golden = encode_sign_nest(2L * cos(Real::pi(128) / 5L), 64);
        CHECK(detect_sign_periodicity(golden, 16).has_value());
        auto s = encode_sign_nest(2L * cos(Real::pi(128) * 3L / 7L), 64);
        auto p = detect_sign_periodicity(s, 16);
        REQUIRE(p.has_value());
        CHECK(p->second >= 1);
    }
    SUBCASE("an irrational angle gives no short period") {
        auto s = encode_sign_nest(2L * cos(R(1)), 64);
        CHECK_FALSE(detect_sign_periodicity(s, 16).has_value());
    }
    SUBCASE("random round trips at depth 48") {
        std::mt19937_64 rng(184);
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        const Real bound = ldexp(R(16), -48);
        for (int i = 0; i < 100; ++i) {
            Real x(u(rng), 128);
            auto v = sign_nest_value(encode_sign_nest(x, 48), 48);
            REQUIRE(abs(v.direct - x) <= bound);
        }
    }
    CHECK_THROWS_AS(encode_sign_nest(R("2.01"), 10), DomainError);
}

TEST_CASE("periodicity detection") {
    SignSequence s{{1, -1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1}, std::nullopt};
    auto p = detect_sign_periodicity(s, 4);
    REQUIRE(p.has_value());
    CHECK(p->first == 2);
    CHECK(p->second == 2);
    // window too short for the requested period bound
    SignSequence shortseq{{1, -1, 1}, std::nullopt};
    CHECK_FALSE(detect_sign_periodicity(shortseq, 4).has_value());
}

TEST_CASE("Sizer digits") {
    SUBCASE("x = 2 has an all-2 tail") {
        auto d = sizer_encode(R(2), 20);
        CHECK(d.tail.size() == 20);
        for (int t : d.tail) CHECK(t == 2);
        CHECK_NEAR(sizer_decode(d), R(2), 1e-30);
    }
    SUBCASE("x = 0 is all zeros") {
        auto d = sizer_encode(R(0), 12);
        CHECK(d.head == 0);
        for (int t : d.tail) CHECK(t == 0);
        CHECK(sizer_decode(d).is_zero());
    }
    SUBCASE("x = 1.5 at depth 24") {
        auto d = sizer_encode(R("1.5"), 24);
        CHECK(d.head == 1);
        CHECK(d.tail[0] == 1);
        CHECK(abs(sizer_decode(d) - R("1.5")) < R("1e-6"));
    }
    SUBCASE("round-trip bound on random inputs") {
        std::mt19937_64 rng(1986);
        std::uniform_real_distribution<double> u(0.0, 5.0);
        for (std::size_t depth : {8u, 16u, 24u}) {
            const Real bound = ldexp(R(1), 1 - static_cast<long>(depth));
            for (int i = 0; i < 100; ++i) {
                Real x(u(rng), 128);
                auto d = sizer_encode(x, depth);
                REQUIRE(d.residual >= 0.0);
                REQUIRE(d.residual <= 2.0);
                for (int t : d.tail) REQUIRE((t >= 0 && t <= 2));
                REQUIRE(abs(sizer_decode(d) - x) <= bound);
            }
        }
    }
    CHECK_THROWS_AS(sizer_encode(R(-1), 4), DomainError);
}

TEST_CASE("nonterminating binary digits") {
    auto half = nonterminating_binary_digits(R("0.5"), 8);
    CHECK(half == std::vector<int>{0, 1, 1, 1, 1, 1, 1, 1});
    auto one = nonterminating_binary_digits(R(1), 6);
    CHECK(one == std::vector<int>{1, 1, 1, 1, 1, 1});
    auto third = nonterminating_binary_digits(R(1) / R(3), 6);
    CHECK(third == std::vector<int>{0, 1, 0, 1, 0, 1});
    CHECK_THROWS_AS(nonterminating_binary_digits(R(0), 4), DomainError);
}

TEST_CASE("binary signed nests") {
    // all digits 1: fixed point of y = sqrt(4 - y)
    CHECK_NEAR(binary_signed_nest(R(1), R(4), 80), R("1.56155281280883027491070492798703851257359961"), 1e-25);
    // 1/2 = 0.0111...: sqrt(4 + w) with w the all-minus limit
    CHECK_NEAR(binary_signed_nest(R("0.5"), R(4), 80), R("2.35829447118226316612466100003447210292680224"), 1e-25);
    SUBCASE("x = 1/3 against the period-2 oracle") {
        Real y = binary_signed_nest(R(1) / R(3), R(4), 80);
        CHECK_NEAR(y, R("2.30277563773199464655961063373524797312564829"), 1e-25);
        // the radical one level down solves w = sqrt(4 - sqrt(4 + w))
        Real w = y * y - 4L;
        CHECK_NEAR(w, sqrt(R(4) - sqrt(R(4) + w)), 1e-25);
    }
    SUBCASE("deltas shrink") {
        Real x = R("0.7");
        Real prev = binary_signed_nest(x, R(5), 10);
        Real prev_delta = R(1);
        for (std::size_t d = 11; d <= 30; d += 5) {
            Real cur = binary_signed_nest(x, R(5), d);
            Real delta = abs(cur - prev);
            CHECK(delta <= prev_delta);
            prev_delta = delta;
            prev = cur;
        }
        CHECK(prev_delta < R("1e-8"));
    }
    CHECK_THROWS_AS(binary_signed_nest(R("0.5"), R("3.4"), 10), DomainError);
    CHECK_THROWS_AS(binary_signed_nest(R("0.5"), sqrt(R(2)) + 2L, 10), DomainError);
}
