#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "qpart/polynomial.hpp"
#include "qpart/series.hpp"

using qpart::Int;
using qpart::Poly;
using qpart::Series;

TEST_CASE("normalization and degree") {
    Poly zero;
    REQUIRE(zero.is_zero());
    REQUIRE(zero.degree() == -1);

    Poly p(std::vector<Int>{1, 2, 0, 0});
    REQUIRE(p.degree() == 1);
    REQUIRE(p == Poly({1, 2}));
    REQUIRE(Poly(std::vector<Int>{0, 0}).is_zero());

    // reads past the degree are genuine zeros, not errors
    REQUIRE(p.coeff(17) == 0);
    REQUIRE(p.coeff(-1) == 0);
}

TEST_CASE("monomial") {
    const auto m = Poly::monomial(Int(-7), 4);
    REQUIRE(m.degree() == 4);
    REQUIRE(m.coeff(4) == -7);
    REQUIRE(m.coeff(3) == 0);
    REQUIRE_THROWS_AS(Poly::monomial(Int(1), -1), std::invalid_argument);
    REQUIRE(Poly::monomial(Int(0), 3).is_zero());
}

TEST_CASE("arithmetic") {
    Poly p({1, 2, 3});
    Poly r({0, -2, 0, 5});
    REQUIRE(qpart::poly_add(p, r) == Poly({1, 0, 3, 5}));
    REQUIRE(qpart::poly_sub(p, p).is_zero());
    REQUIRE(qpart::poly_neg(r) == Poly({0, 2, 0, -5}));
    REQUIRE(qpart::poly_scale(Int(3), p) == Poly({3, 6, 9}));

    // (1 + a)(1 - a) = 1 - a^2
    REQUIRE(qpart::poly_mul(Poly({1, 1}), Poly({1, -1})) == Poly({1, 0, -1}));
    REQUIRE(qpart::poly_mul(p, Poly()).is_zero());

    REQUIRE(p + r == qpart::poly_add(p, r));
}

TEST_CASE("evaluation at a series argument") {
    // p(a) = 2 - a + a^3 at a = q + q^2
    Poly p({2, -1, 0, 1});
    Series arg(std::vector<Int>{0, 1, 1, 0, 0, 0});
    const auto got = qpart::poly_eval_series(p, arg);
    REQUIRE(got.order() == arg.order());

    auto expect = Series::constant(Int(2), arg.order());
    expect = expect + qpart::scale(Int(-1), arg);
    expect = expect + qpart::pow(arg, 3);
    REQUIRE(got == expect);

    REQUIRE(qpart::poly_eval_series(Poly(), arg).is_zero());

    // Horner agrees with direct powers on random instances
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Int> pc(static_cast<std::size_t>(1 + trial % 6));
        for (auto& c : pc) c = coeff(rng);
        Poly rp(std::move(pc));
        std::vector<Int> av(11);
        for (auto& c : av) c = coeff(rng);
        Series ra(std::move(av));
        auto direct = Series(ra.order());
        for (long i = 0; i <= rp.degree(); ++i)
            direct = direct + qpart::scale(rp.coeff(i), qpart::pow(ra, i));
        REQUIRE(qpart::poly_eval_series(rp, ra) == direct);
    }
}

TEST_CASE("polynomial stream output") {
    std::ostringstream os;
    os << Poly({1, 0, -2});
    REQUIRE_FALSE(os.str().empty());
}
