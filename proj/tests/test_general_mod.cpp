#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qpart/det.hpp"
#include "qpart/general_mod.hpp"
#include "qpart/partition.hpp"
#include "qpart/ramanujan7.hpp"

using qpart::Int;
using qpart::Series;

TEST_CASE("number-theory helpers") {
    const std::vector<long> mob = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (long n = 1; n <= 12; ++n)
        REQUIRE(qpart::detail::mobius(n) == mob[static_cast<std::size_t>(n - 1)]);
    REQUIRE(qpart::detail::sigma_divisors(1) == 1);
    REQUIRE(qpart::detail::sigma_divisors(6) == 12);
    REQUIRE(qpart::detail::sigma_divisors(7) == 8);
    REQUIRE(qpart::detail::divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("denominator product, explicit form") {
    REQUIRE(qpart::d_full(1, 20) == qpart::etaq(1, 20));

    const auto d2 = qpart::d_full(2, 7);
    REQUIRE(d2.coeffs() == std::vector<Int>{1, 0, -3, 0, 1, 0, 2, 0});

    // every factor exponent lcm(k, N) is a multiple of N
    for (long N : {6L, 7L, 12L}) {
        const auto d = qpart::d_full(N, 6 * N);
        for (long i = 0; i <= d.order(); ++i)
            if (i % N != 0) REQUIRE(d.coeff(i) == 0);
    }

    REQUIRE_THROWS_AS(qpart::d_full(0, 5), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::d_full(2, -1), std::invalid_argument);
}

TEST_CASE("denominator product matches its eta-quotient factorization") {
    for (long N : {4L, 6L, 10L}) {
        const long K = 60;
        auto quotient = Series::one(K);
        for (long t : qpart::detail::divisors(N)) {
            const long mu = qpart::detail::mobius(t);
            if (mu == 0) continue;
            const long e = mu * qpart::detail::sigma_divisors(N / t);
            quotient = qpart::mul(quotient, qpart::pow(qpart::etaq(N * t, K), e));
        }
        INFO("N = " << N);
        REQUIRE(qpart::d_full(N, K) == quotient);
    }
}

TEST_CASE("floating-point cross-check of the denominator") {
    for (long N : {2L, 3L, 7L, 12L, 13L}) {
        const auto exact = qpart::d_full(N, 120);
        const auto approx = qpart::d_full_float(N, 120);
        INFO("N = " << N);
        REQUIRE(approx.coeffs == exact.coeffs());
        REQUIRE(approx.max_residue < 1e-4);
    }
    // an unreachable residue budget must be reported, not rounded through
    REQUIRE_THROWS_AS(qpart::d_full_float(7, 60, 1e-30), std::domain_error);
}

TEST_CASE("square-free-part reduction of the denominator") {
    const long K = 56;
    // N = 7: keep t = 1 only, so the reduction is the eighth power
    REQUIRE(qpart::d_reduced(7, K) == qpart::pow(qpart::etaq(7, K), 8));
    // and the full product carries one extra eta factor
    REQUIRE(qpart::mul(qpart::d_full(7, K), qpart::etaq(49, K)) ==
            qpart::d_reduced(7, K));

    // N = 6: mu(1) = mu(6) = 1 survive
    REQUIRE(qpart::d_reduced(6, 40) ==
            qpart::mul(qpart::pow(qpart::etaq(6, 40), 12), qpart::etaq(36, 40)));
}

TEST_CASE("residue columns of the general construction") {
    // modulus 1 degenerates to the full construction's unit column
    REQUIRE(qpart::z_general(1, 20)[0] == Series::one(20));

    // constant terms are partition numbers
    const auto pt = qpart::p_euler(12);
    const auto z13 = qpart::z_general(13, 0);
    REQUIRE(z13.size() == 13);
    for (long a = 0; a < 13; ++a) {
        REQUIRE(z13[static_cast<std::size_t>(a)].order() == 0);
        REQUIRE(z13[static_cast<std::size_t>(a)].coeff(0) == pt.p(a));
    }

    // agreement with the dedicated modulus-7 machinery
    const auto z7 = qpart::z_general(7, 30);
    for (long a = 0; a <= 6; ++a) {
        INFO("residue " << a);
        REQUIRE(z7[static_cast<std::size_t>(a)] == qpart::z_series_7(a, 30));
    }
}

TEST_CASE("column prefixes are stable under larger truncation") {
    for (long N : {3L, 7L}) {
        const auto shallow = qpart::z_general(N, 10);
        const auto deep = qpart::z_general(N, 20);
        for (long a = 0; a < N; ++a)
            REQUIRE(shallow[static_cast<std::size_t>(a)] ==
                    qpart::truncate(deep[static_cast<std::size_t>(a)], 10));
    }
}

TEST_CASE("plans slice into determinant problems") {
    const auto plan = qpart::make_plan(7, 10);
    REQUIRE(plan.N == 7);
    REQUIRE(plan.max_k() == 10);
    REQUIRE(plan.zser.size() == 7);

    for (long a : {0L, 3L, 6L})
        for (long k : {0L, 5L, 10L})
            REQUIRE(qpart::plan_problem(plan, a, k) == qpart::build_general(7, a, k));

    // a deeper plan gives the same slices
    const auto deeper = qpart::make_plan(7, 15);
    REQUIRE(qpart::plan_problem(deeper, 4, 10) == qpart::plan_problem(plan, 4, 10));

    REQUIRE_THROWS_AS(qpart::plan_problem(plan, 7, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::plan_problem(plan, -1, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::plan_problem(plan, 0, 11), std::invalid_argument);
}

TEST_CASE("plan construction validates its data") {
    const auto good = qpart::make_plan(3, 4);
    REQUIRE_NOTHROW(qpart::ModulusPlan(good.N, good.dser, good.zser));

    auto off_support = good.dser.coeffs();
    off_support[1] = 1;
    REQUIRE_THROWS_AS(
        qpart::ModulusPlan(good.N, Series(off_support), good.zser),
        std::domain_error);

    auto bad_head = good.dser.coeffs();
    bad_head[0] = 2;
    REQUIRE_THROWS_AS(qpart::ModulusPlan(good.N, Series(bad_head), good.zser),
                      std::domain_error);

    auto short_z = good.zser;
    short_z.pop_back();
    REQUIRE_THROWS_AS(qpart::ModulusPlan(good.N, good.dser, short_z),
                      std::invalid_argument);

    auto wrong_z = good.zser;
    std::swap(wrong_z[0], wrong_z[2]);
    REQUIRE_THROWS_AS(qpart::ModulusPlan(good.N, good.dser, wrong_z),
                      std::domain_error);
}

TEST_CASE("general construction computes p(kN+a)") {
    const auto pt = qpart::p_euler(13 * 8 + 12);
    for (long N : {2L, 3L, 4L, 5L, 6L, 11L, 13L}) {
        for (long k : {0L, 5L, 8L}) {
            const long a = N - 1;
            const auto prob = qpart::build_general(N, a, k);
            INFO("N=" << N << " a=" << a << " k=" << k);
            REQUIRE(qpart::det_eval_recurrence(prob) == pt.p(k * N + a));
            REQUIRE(qpart::det_eval_literal(prob) == pt.p(k * N + a));
        }
        REQUIRE(qpart::det_eval_recurrence(qpart::build_general(N, 0, 6)) ==
                pt.p(6 * N));
    }

    // modulus 1 reproduces the full construction exactly
    REQUIRE(qpart::build_general(1, 0, 12) == qpart::build_eq1(12));

    REQUIRE_THROWS_AS(qpart::build_general(0, 0, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::build_general(5, 5, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::build_general(5, 0, -1), std::invalid_argument);
}
