#include "ccomp/engine.hpp"
#include "ccomp/termspec.hpp"
#include "support.hpp"

#include <complex>

using namespace ccomp;
using namespace ccomp::testing;

namespace {

EvalRequest req(CompositionKind k, TermStream t, std::size_t depth, Prec prec = kDefaultPrecision) {
    return EvalRequest{k, std::move(t), depth, std::nullopt, prec};
}

}  // namespace

TEST_CASE("backward evaluation of small square-root nests") {
    CHECK(eval_backward(req(CompositionKind::square_root(), TermStream::constant(R(4)), 0)) == R(2));
    CHECK_NEAR(eval_backward(req(CompositionKind::square_root(), TermStream::constant(R(2)), 2)),
               R("1.96157056080646089825236447226847807394786746"), 1e-35);
}

TEST_CASE("first Ramanujan nest at depth 30") {
    auto t = parse_term_stream("ramanujan1");
    CHECK(t.at(0, 64).multiplier == R(2));
    CHECK(t.at(5, 64).multiplier == R(7));
    CHECK_NEAR(eval_backward(req(CompositionKind::square_root(), t, 30)), R(3), 1e-6);
}

TEST_CASE("other families against direct arithmetic") {
    CHECK_NEAR(eval_backward(req(CompositionKind::rth_root(3), TermStream::constant(R(5)), 2)),
               R("1.90250259543908017746599226424274341857937192"), 1e-35);
    // Reciprocal families start from +inf, where each level returns its addend.
    CHECK_NEAR(eval_backward(req(CompositionKind::fraction(), TermStream::constant(R(1)), 3)),
               R("1.66666666666666666666666666666666666666666667"), 1e-35);
    CHECK_NEAR(eval_backward(req(CompositionKind::reciprocal_root(2), TermStream::constant(R(1)), 2)),
               R("1.70710678118654752440084436210484903928483594"), 1e-35);
    CHECK(eval_backward(req(CompositionKind::cotangent(), TermStream::constant(R(5)), 0)) == R(5));
    CHECK(eval_backward(req(CompositionKind::logarithm(10), TermStream::constant(R(1)), 2)) == R(1));
    CHECK(eval_backward(req(CompositionKind::power(2), TermStream::constant(R(0)), 5)) == R(0));
}

TEST_CASE("default seeds") {
    CHECK(default_seed(CompositionKind::square_root(), 64).is_zero());
    CHECK(default_seed(CompositionKind::power(2), 64).is_zero());
    CHECK(default_seed(CompositionKind::fraction(), 64).is_inf());
    CHECK(default_seed(CompositionKind::reciprocal_root(3), 64).is_inf());
    CHECK(default_seed(CompositionKind::cotangent(), 64).is_inf());
    CHECK(default_seed(CompositionKind::logarithm(2), 64) == R(1));
}

TEST_CASE("forward evaluation") {
    SUBCASE("constant terms agree with backward") {
        for (std::size_t d : {0u, 1u, 7u, 25u}) {
            auto r = req(CompositionKind::square_root(), TermStream::constant(R("2.5")), d);
            CHECK(eval_forward(r) == eval_backward(r));
        }
    }
    SUBCASE("a = k(k-1) with k = 3") {
        CHECK_NEAR(eval_forward(req(CompositionKind::square_root(), TermStream::constant(R(6)), 40)), R(3), 1e-9);
    }
    SUBCASE("terms tending to 2 give the left radical limit 2") {
        auto t = TermStream::from_functions(
            [](std::size_t i, Prec p) { return Real(2L, p) + Real(1L, p) / Real(static_cast<long>(i + 1), p); });
        Real v = eval_forward(req(CompositionKind::square_root(), t, 4000));
        CHECK_NEAR(v, R(2), 1e-3);
        CHECK(v > R(2));
    }
}

TEST_CASE("estimate_limit") {
    SUBCASE("golden ratio") {
        auto r = estimate_limit(req(CompositionKind::square_root(), TermStream::constant(R(1)), 0), R("1e-12"), 200);
        CHECK_NEAR(r.value, (sqrt(R(5)) + 1L) / 2L, 1e-11);
        REQUIRE(r.trace.converged_at.has_value());
        CHECK(r.trace.values.size() == *r.trace.converged_at + 1);
        CHECK(r.trace.deltas[0].is_zero());
    }
    SUBCASE("Kasner nest") {
        auto r = estimate_limit(req(CompositionKind::square_root(), parse_term_stream("arith:start=1,step=1"), 0),
                                R("1e-6"), 200);
        CHECK_NEAR(r.value, R("1.757933"), 1e-6);
    }
    SUBCASE("converged_at is the first of two consecutive small deltas") {
        auto r = estimate_limit(req(CompositionKind::square_root(), TermStream::constant(R(2)), 0), R("1e-8"), 200);
        std::size_t c = *r.trace.converged_at;
        const Real tol = r.trace.tolerance_used;
        CHECK(r.trace.deltas[c] <= tol);
        CHECK(r.trace.deltas[c - 1] <= tol);
        for (std::size_t d = 2; d < c; ++d) CHECK_FALSE((r.trace.deltas[d] <= tol && r.trace.deltas[d - 1] <= tol));
    }
    SUBCASE("no real fixed point beyond the Jones radius") {
        CHECK_THROWS_AS(estimate_limit(req(CompositionKind::power(2), TermStream::constant(R("0.3")), 0), R("1e-12"),
                                       500, Direction::Forward),
                        NoConvergence);
        try {
            estimate_limit(req(CompositionKind::power(2), TermStream::constant(R("0.3")), 0), R("1e-12"), 50);
        } catch (const NoConvergence& e) {
            CHECK(e.name() == "NoConvergence");
            CHECK(e.trace().values.size() >= 2);
        }
    }
    SUBCASE("below the radius the smaller root is reached") {
        auto r = estimate_limit(req(CompositionKind::power(2), TermStream::constant(R("0.2")), 0), R("1e-20"), 1000,
                                Direction::Forward);
        CHECK_NEAR(r.value, R("0.276393202250021030359082633126872376455938164"), 1e-18);
    }
    SUBCASE("argument checks") {
        auto r = req(CompositionKind::square_root(), TermStream::constant(R(1)), 0);
        CHECK_THROWS_AS(estimate_limit(r, R(0), 10), DomainError);
        CHECK_THROWS_AS(estimate_limit(r, R("1e-9"), 1), DomainError);
    }
}

TEST_CASE("closed form for constant square-root nests") {
    CHECK(closed_form_constant_sqrt(R(2)) == R(2));
    CHECK(closed_form_constant_sqrt(R(6)) == R(3));
    CHECK_NEAR(closed_form_constant_sqrt(R(1)), R("1.618033988749894848204586834365638117720"), 1e-35);
    auto lim = estimate_limit(req(CompositionKind::square_root(), TermStream::constant(R("3.7")), 0), R("1e-25"), 500);
    CHECK_NEAR(lim.value, closed_form_constant_sqrt(R("3.7")), 1e-24);
    CHECK_THROWS_AS(closed_form_constant_sqrt(R(-1)), DomainError);

    SUBCASE("complex branch") {
        auto z = closed_form_constant_sqrt(std::complex<double>(-1.0, 0.0));
        CHECK(z.real() == doctest::Approx(0.5));
        CHECK(z.imag() == doctest::Approx(std::sqrt(3.0) / 2));
        auto w = closed_form_constant_sqrt(std::complex<double>(2.0, 0.0));
        CHECK(w.real() == doctest::Approx(2.0));
        CHECK(w.imag() == doctest::Approx(0.0));
        // z = sqrt(a + z) must hold at the returned point.
        std::complex<double> a(0.3, 1.7);
        auto f = closed_form_constant_sqrt(a);
        CHECK(std::abs(std::sqrt(a + f) - f) < 1e-12);
    }
}

TEST_CASE("domain and overflow errors") {
    CHECK_THROWS_AS(eval_backward(req(CompositionKind::square_root(), TermStream::constant(R(-1)), 0)), DomainError);
    // Odd roots are real-signed.
    CHECK(eval_backward(req(CompositionKind::rth_root(3), TermStream::constant(R(-8)), 0)) == R(-2));
    CHECK_THROWS_AS(eval_backward(req(CompositionKind::rth_root(2.5), TermStream::constant(R(-8)), 0)), DomainError);
    {
        EvalRequest r = req(CompositionKind::cotangent(), TermStream::constant(R(3)), 0);
        r.seed = R(3);
        CHECK_THROWS_AS(eval_backward(r), DomainError);
    }
    {
        EvalRequest r = req(CompositionKind::logarithm(2), TermStream::constant(R(-5)), 1);
        CHECK_THROWS_AS(eval_backward(r), DomainError);
    }
    CHECK_THROWS_AS(eval_forward(req(CompositionKind::power(2), TermStream::constant(R("1e100")), 70)),
                    OverflowError);
    CHECK_THROWS_AS(eval_backward(req(CompositionKind::square_root(), TermStream::constant(R(1)), 3, 32)),
                    DomainError);
    CHECK_THROWS_AS(CompositionKind::rth_root(1.0), DomainError);
    CHECK_THROWS_AS(CompositionKind::power(0.5), DomainError);
    CHECK_THROWS_AS(CompositionKind::logarithm(1.0), DomainError);
}

TEST_CASE("term record invariants") {
    TermRecord bad_sign(0, R(1), R(1), 2);
    CHECK_THROWS_AS(apply_term(CompositionKind::square_root(), bad_sign, R(0), 128), DomainError);
    TermRecord bad_exp(0, R(1), R(1), 1, R("1.5"));
    CHECK_THROWS_AS(apply_term(CompositionKind::square_root(), bad_exp, R(0), 128), ExponentOutOfRange);
    TermRecord low_power(0, R(1), R(1), 1, R("0.5"));
    CHECK_THROWS_AS(apply_term(CompositionKind::power(2), low_power, R(1), 128), ExponentOutOfRange);
    TermRecord recip_one(0, R(1), R(1), 1, R(1));
    CHECK_THROWS_AS(apply_term(CompositionKind::reciprocal_root(2), recip_one, R(1), 128), ExponentOutOfRange);
    TermRecord nan_term(0, R(1) / R(0) - R(1) / R(0), R(1));
    CHECK_THROWS_AS(apply_term(CompositionKind::square_root(), nan_term, R(0), 128), DomainError);
    TermRecord neg(0, R(9), R(1), -1);
    CHECK(apply_term(CompositionKind::square_root(), neg, R(0), 128) == R(-3));
}

TEST_CASE("periodic streams repeat") {
    auto t = TermStream::periodic_signs(R(2), {1, -1, -1});
    REQUIRE(t.period.has_value());
    CHECK(*t.period == 3);
    for (std::size_t i = 0; i < 12; ++i) CHECK(t.at(i, 64).multiplier == t.at(i + 3, 64).multiplier);
    auto list = TermStream::explicit_list({R(1), R(2)});
    CHECK(list.at(1, 64).addend == R(2));
    CHECK_THROWS_AS(list.at(2, 64), DomainError);
}
