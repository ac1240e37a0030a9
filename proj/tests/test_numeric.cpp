#include <doctest.h>

#include "mckay/error.hpp"
#include "mckay/lattice.hpp"
#include "support.hpp"

using namespace mckay;
using fixtures::iv;
using fixtures::rv;

TEST_CASE("rationals print as num/den and parse back") {
    CHECK(to_string(parse_rational("3/6")) == "1/2");
    CHECK(to_string(Rational(-4)) == "-4/1");
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(parse_rational("+7") == Rational(7));
    for (const char* s : {"5/3", "-1/9", "0/1", "123456789012345678901/7"}) {
        CHECK(to_string(parse_rational(s)) == s);
    }
}

TEST_CASE("malformed rationals are parse errors") {
    for (const char* s : {"", "a", "1/0", "1//2", "2.5", "3/"}) {
        CAPTURE(s);
        try {
            parse_rational(s);
            FAIL("accepted");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::ParseError);
        }
    }
}

TEST_CASE("primitive vectors and denominators") {
    CHECK(make_primitive(iv({4, -6, 0})) == iv({2, -3, 0}));
    CHECK(make_primitive(iv({0, 0})) == iv({0, 0}));
    RatVector x{Rational(1, 2), Rational(-1, 3), Rational(0)};
    CHECK(common_denominator(x) == 6);
    CHECK(clear_denominators(x) == iv({3, -2, 0}));
}

TEST_CASE("row echelon, rank and nullspace") {
    RatMatrix a{rv({1, 2, 3}), rv({2, 4, 6}), rv({0, 1, 1})};
    CHECK(rank(a, 3) == 2);
    const auto ns = nullspace(a, 3);
    REQUIRE(ns.size() == 1);
    for (const auto& row : a) CHECK(dot(row, ns[0]) == 0);
    const auto e = row_echelon(a, 3);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rank({}, 4) == 0);
    CHECK(nullspace({}, 2).size() == 2);
}

TEST_CASE("hermite normal form is canonical") {
    const IntMatrix a{iv({2, 0}), iv({0, 2}), iv({1, 1})};
    const IntMatrix b{iv({1, 1}), iv({1, -1})};
    CHECK(hermite_normal_form(a, 2) == hermite_normal_form(b, 2));
    CHECK(hermite_normal_form(a, 2) == IntMatrix{iv({1, 1}), iv({0, 2})});
    CHECK(hermite_normal_form({iv({0, 0})}, 2).empty());
}

TEST_CASE("integer kernel basis spans the saturated kernel") {
    const IntMatrix a{iv({1, 1, 1})};
    const auto k = integer_kernel_basis(a, 3);
    REQUIRE(k.size() == 2);
    for (const auto& row : k) CHECK(dot(row, a[0]) == 0);
    CHECK(hermite_normal_form(k, 3) == hermite_normal_form({iv({1, -1, 0}), iv({0, 1, -1})}, 3));

    // 2x + 4y = 0 has kernel generated by (2,-1), not (4,-2).
    const auto k2 = integer_kernel_basis({iv({2, 4})}, 2);
    REQUIRE(k2.size() == 1);
    CHECK(make_primitive(k2[0]) == k2[0]);
    CHECK(integer_kernel_basis({iv({1, 0}), iv({0, 1})}, 2).empty());
}

TEST_CASE("unit lattice test") {
    CHECK(spans_unit_lattice({iv({2, 3}), iv({1, 1})}, 2));
    CHECK_FALSE(spans_unit_lattice({iv({2, 0}), iv({0, 1})}, 2));
}
