#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "golden_tables.hpp"
#include "qpart/partition.hpp"
#include "qpart/ramanujan7.hpp"

using qpart::Int;
using qpart::Series;

TEST_CASE("closed-form J components match frozen expansions") {
    const auto jt = qpart::j_closed(59);
    REQUIRE(jt.path == qpart::JPath::closed_form);
    REQUIRE(jt.order() == 59);

    REQUIRE(jt.j1.coeffs() == golden::load_column("a108483.txt"));

    const std::vector<long> j2_first = {-1, 0, -1, 1,  0, 0, 0,  -1, 1, -1,
                                        1,  0, 0,  1,  -2, 1, -2, 2,  0, 0,
                                        1,  -3, 3, -3, 3,  -1, 0, 2,  -5, 4};
    const std::vector<long> j3_first = {1, -1, 0, 1,  0, -1, 0, 1,  -1, 0,
                                        1, 0,  -1, 0, 2, -2, -1, 2, 0,  -2,
                                        1, 3,  -3, -1, 3, 0,  -4, 1, 5,  -5};
    for (std::size_t i = 0; i < j2_first.size(); ++i) {
        REQUIRE(jt.j2.coeff(static_cast<long>(i)) == j2_first[i]);
        REQUIRE(jt.j3.coeff(static_cast<long>(i)) == j3_first[i]);
    }
}

TEST_CASE("decimation path agrees with the closed forms") {
    const auto a = qpart::j_closed(40);
    const auto b = qpart::j_decimated(40);
    REQUIRE(b.path == qpart::JPath::decimation);
    REQUIRE(a.j1 == b.j1);
    REQUIRE(a.j2 == b.j2);
    REQUIRE(a.j3 == b.j3);
}

TEST_CASE("JTriple construction enforces its invariants") {
    const auto jt = qpart::j_closed(10);
    REQUIRE_NOTHROW(qpart::JTriple(jt.j1, jt.j2, jt.j3, qpart::JPath::closed_form));

    // mismatched orders
    REQUIRE_THROWS_AS(qpart::JTriple(qpart::truncate(jt.j1, 5), jt.j2, jt.j3,
                                     qpart::JPath::closed_form),
                      std::invalid_argument);

    // wrong constant term
    REQUIRE_THROWS_AS(qpart::JTriple(jt.j2, jt.j1, jt.j3, qpart::JPath::closed_form),
                      std::domain_error);

    // constants fine, product wrong
    const Series one_q(std::vector<Int>{1, 1});
    const Series neg(std::vector<Int>{-1, 0});
    const Series one_0(std::vector<Int>{1, 0});
    REQUIRE_THROWS_AS(qpart::JTriple(one_q, neg, one_0, qpart::JPath::closed_form),
                      std::domain_error);
}

TEST_CASE("substitution polynomial table") {
    const auto table = qpart::cd_table();
    REQUIRE(table.c.size() == 31);
    REQUIRE(table.d.size() == 6);

    REQUIRE(table.c[0] == qpart::Poly({1}));
    for (long n = 1; n <= 30; ++n) {
        INFO("c_" << n);
        REQUIRE(table.c[static_cast<std::size_t>(n)] == golden::c_poly(n));
    }

    // the construction terminates: with c_n = 0 for n > 30, the recurrence
    // c_n = -c_(n-1) + a c_(n-2) + a^3 c_(n-5) + [7 | n] d_(n/7)
    // still holds up to n = 35, where d_5 is what cancels the tail
    const auto a = qpart::Poly::monomial(Int(1), 1);
    const auto a3 = qpart::Poly::monomial(Int(1), 3);
    const auto cp = [&](long n) {
        return n <= 30 ? table.c[static_cast<std::size_t>(n)] : qpart::Poly();
    };
    for (long n = 31; n <= 35; ++n) {
        auto rhs = qpart::poly_neg(cp(n - 1));
        rhs = qpart::poly_add(rhs, qpart::poly_mul(a, cp(n - 2)));
        rhs = qpart::poly_add(rhs, qpart::poly_mul(a3, cp(n - 5)));
        if (n % 7 == 0) rhs = qpart::poly_add(rhs, table.d[static_cast<std::size_t>(n / 7)]);
        INFO("n = " << n);
        REQUIRE(rhs.is_zero());
    }

    REQUIRE(table.d[0] == qpart::Poly({1}));
    REQUIRE(table.d[1] == qpart::Poly({1, 7, 14, 0, -7}));
    REQUIRE(table.d[5] == qpart::poly_neg(qpart::Poly::monomial(Int(1), 21)));
}

TEST_CASE("H functions: substitution path equals closed forms") {
    const auto jt = qpart::j_closed(60);
    const auto hc = qpart::h_closed(jt, 60);
    const auto hs = qpart::h_from_c(jt, 60);
    REQUIRE(hc.path == qpart::HPath::closed_form);
    REQUIRE(hs.path == qpart::HPath::c_substitution);
    for (int i = 0; i < 7; ++i) {
        INFO("H" << (i + 1));
        REQUIRE(hc.h[static_cast<std::size_t>(i)] ==
                hs.h[static_cast<std::size_t>(i)]);
    }

    REQUIRE_THROWS_AS(qpart::h_from_c(jt, 61), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::h_closed(jt, 61), std::invalid_argument);
}

TEST_CASE("HSet construction enforces leading values") {
    const auto jt = qpart::j_closed(12);
    auto hs = qpart::h_closed(jt, 12).h;
    REQUIRE_NOTHROW(qpart::HSet(hs, qpart::HPath::closed_form));

    auto wrong_count = hs;
    wrong_count.pop_back();
    REQUIRE_THROWS_AS(qpart::HSet(wrong_count, qpart::HPath::closed_form),
                      std::invalid_argument);

    auto wrong_head = hs;
    std::swap(wrong_head[0], wrong_head[6]);
    REQUIRE_THROWS_AS(qpart::HSet(wrong_head, qpart::HPath::closed_form),
                      std::domain_error);
}

TEST_CASE("column series for the modulus-7 construction") {
    for (long a = 0; a <= 6; ++a) {
        const auto z = qpart::z_series_7(a, 7);
        INFO("residue " << a);
        for (long i = 0; i <= 7; ++i)
            REQUIRE(z.coeff(i) == golden::z7_first8[a][i]);
    }
    REQUIRE_THROWS_AS(qpart::z_series_7(7, 10), std::invalid_argument);
    REQUIRE_THROWS_AS(qpart::z_series_7(-1, 10), std::invalid_argument);

    // constant terms are the small partition numbers
    const auto pt = qpart::p_euler(6);
    for (long a = 0; a <= 6; ++a)
        REQUIRE(qpart::z_series_7(a, 0).coeff(0) == pt.p(a));
}

TEST_CASE("every coefficient of the residue-5 column is divisible by 7") {
    const auto z = qpart::z_series_7(5, 60);
    for (long i = 0; i <= 60; ++i) REQUIRE(z.coeff(i) % 7 == 0);
}

TEST_CASE("identity suite passes at order 50") {
    const auto rep = qpart::verify_identities(50);
    REQUIRE(rep.entries.size() == 15);
    REQUIRE(rep.overall());
    for (const auto& e : rep.entries) {
        INFO(e.name);
        REQUIRE(e.pass);
        REQUIRE_FALSE(e.first_mismatch.has_value());
    }
    REQUIRE(qpart::verify_identities(0).overall());
    REQUIRE_THROWS_AS(qpart::verify_identities(-1), std::invalid_argument);
}

TEST_CASE("misprinted variant is detected") {
    for (long order : {3L, 10L, 50L}) {
        const auto e = qpart::misprint_6c_control(order);
        REQUIRE(e.name == "6c-misprint");
        REQUIRE_FALSE(e.pass);
        REQUIRE(e.first_mismatch.has_value());
        REQUIRE(*e.first_mismatch == 2);
    }
}
