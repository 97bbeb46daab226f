#include <doctest.h>

#include <random>

#include "weylinv/algebra.hpp"

using namespace weylinv;

namespace {

// deterministic pseudo-random homogeneous element of the given degree
Element random_homogeneous(std::mt19937& rng, const AlgebraShape& s, int degree, int terms) {
    Element a(s);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int t = 0; t < terms; ++t) {
        Monomial mono{std::vector<std::uint32_t>(s.n, 0), 0};
        int left = degree;
        // odd factors first
        for (int p = 0; p < s.odd_count() && left > 0; ++p) {
            if (rng() % 3 == 0) {
                mono.odd |= std::uint64_t(1) << p;
                --left;
            }
        }
        if (left % 2 == 1) {
            // flip one odd factor to fix parity
            int p = static_cast<int>(rng() % s.odd_count());
            if (mono.odd >> p & 1) {
                mono.odd &= ~(std::uint64_t(1) << p);
                ++left;
            } else {
                mono.odd |= std::uint64_t(1) << p;
                --left;
            }
        }
        if (left < 0 || left % 2 != 0) continue;
        while (left > 0) {
            mono.xexp[rng() % s.n] += 1;
            left -= 2;
        }
        int c = coeff(rng);
        if (c != 0) a.add_term(mono, c);
    }
    return a;
}

}  // namespace

TEST_CASE("odd squares vanish and degree-1 factors anticommute") {
    AlgebraShape s(2, 2);
    Element y11 = Element::y_var(s, 0, 0);
    Element y21 = Element::y_var(s, 1, 0);
    CHECK(mul(y11, y11).is_zero());
    CHECK(mul(y21, y11) == -mul(y11, y21));
    Monomial canon{{0, 0}, 0};
    canon.odd = (std::uint64_t(1) << s.ypos(0, 0)) | (std::uint64_t(1) << s.ypos(1, 0));
    CHECK(mul(y11, y21) == Element::term(s, canon, 1));
}

TEST_CASE("even generators commute: (x1+x2)^2") {
    AlgebraShape s(2, 1);
    Element x1 = Element::x_var(s, 0), x2 = Element::x_var(s, 1);
    Element sq = power(x1 + x2, 2);
    Element expect = power(x1, 2) + Rat(2) * mul(x1, x2) + power(x2, 2);
    CHECK(sq == expect);
    CHECK(sq == mul(x1 + x2, x1 + x2));
}

TEST_CASE("Koszul cross terms: (y1^1 t1 + y1^2 t2)^2 = -2 y1^1 y1^2 t1 t2") {
    AlgebraShape s(1, 2, true);
    Element a = mul(Element::y_var(s, 0, 0), Element::t_var(s, 0)) +
                mul(Element::y_var(s, 0, 1), Element::t_var(s, 1));
    Element sq = power(a, 2);
    Monomial mono{{0}, 0};
    mono.odd = (std::uint64_t(1) << s.ypos(0, 0)) | (std::uint64_t(1) << s.ypos(0, 1)) |
               (std::uint64_t(1) << s.tpos(0)) | (std::uint64_t(1) << s.tpos(1));
    CHECK(sq == Element::term(s, mono, -2));
}

TEST_CASE("power basics") {
    AlgebraShape s(2, 1, true);
    Element x1 = Element::x_var(s, 0);
    CHECK(power(x1, 3) == Element::x_var(s, 0, 3));
    std::mt19937 rng(7);
    Element a = random_homogeneous(rng, s, 3, 4);
    CHECK(power(a, 1) == a);
    CHECK(power(a, 0) == Element::unit(s));
}

TEST_CASE("extract_t_coefficient basics") {
    AlgebraShape s(1, 2, true);
    Element x1sq_t1 = mul(Element::x_var(s, 0, 2), Element::t_var(s, 0));
    CHECK(extract_t_coefficient(x1sq_t1, 0b01) == Element::x_var(s, 0, 2));
    CHECK(extract_t_coefficient(x1sq_t1, 0b10).is_zero());

    // (x1 + y1^1 t1 + y1^2 t2)^2, coefficient of t1 t2
    Element a = Element::x_var(s, 0) + mul(Element::y_var(s, 0, 0), Element::t_var(s, 0)) +
                mul(Element::y_var(s, 0, 1), Element::t_var(s, 1));
    Element c12 = extract_t_coefficient(power(a, 2), 0b11);
    Monomial y12{{0}, (std::uint64_t(1) << s.ypos(0, 0)) | (std::uint64_t(1) << s.ypos(0, 1))};
    CHECK(c12 == Element::term(s, y12, -2));
}

TEST_CASE("extract/reconstruct round trip") {
    AlgebraShape s(2, 2, true);
    std::mt19937 rng(11);
    for (int deg = 1; deg <= 5; ++deg) {
        Element a = random_homogeneous(rng, s, deg, 6);
        Element back(s);
        for (std::uint64_t mask = 0; mask < 4; ++mask) {
            Element c = extract_t_coefficient(a, mask);
            Element tI = Element::unit(s);
            for (int j = 0; j < s.m; ++j)
                if (mask >> j & 1) tI = mul(tI, Element::t_var(s, j));
            back += mul(c, tI);
        }
        CHECK(back == a);
    }
}

TEST_CASE("graded commutativity, associativity, degree additivity") {
    AlgebraShape s(2, 2, true);
    std::mt19937 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        int da = 1 + static_cast<int>(rng() % 4), db = 1 + static_cast<int>(rng() % 4);
        Element a = random_homogeneous(rng, s, da, 4);
        Element b = random_homogeneous(rng, s, db, 4);
        Element ab = mul(a, b);
        int sign = (da * db) % 2 == 0 ? 1 : -1;
        CHECK(ab == mul(b, a) * Rat(sign));
        if (!ab.is_zero()) CHECK(ab.degree() == da + db);
        Element c = random_homogeneous(rng, s, 1 + static_cast<int>(rng() % 3), 3);
        CHECK(mul(ab, c) == mul(a, mul(b, c)));
    }
}

TEST_CASE("d_vector bookkeeping") {
    AlgebraShape s(3, 3);
    Monomial mono{{1, 0, 0}, std::uint64_t(1) << s.ypos(1, 0)};  // x1 y2^1
    CHECK(mono.d_vector(s) == std::vector<int>{1, 1, 0});
    CHECK(mono.degree() == 3);
}

TEST_CASE("text rendering grammar") {
    AlgebraShape s(2, 2, true);
    Element a = mul(Element::x_var(s, 0, 2), Element::y_var(s, 1, 0));
    CHECK(to_string(a) == "x1^2*y2_1");
    Element b = a * Rat(1, 2) - mul(Element::t_var(s, 0), Element::t_var(s, 1));
    // canonical term order: x exponents lexicographic, so the t-only monomial leads
    CHECK(to_string(b) == "-t1*t2 + 1/2*x1^2*y2_1");
    CHECK(to_string(Element::zero(s)) == "0");
    CHECK(to_string(Element::unit(s)) == "1");
}

TEST_CASE("parse inverts rendering") {
    AlgebraShape s(2, 2, true);
    std::mt19937 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        Element a = random_homogeneous(rng, s, 1 + static_cast<int>(rng() % 5), 5);
        CHECK(parse_element(to_string(a), s) == a);
    }
    CHECK(parse_element("y2_1*y1_1", AlgebraShape(2, 1)) ==
          -mul(Element::y_var(AlgebraShape(2, 1), 0, 0),
               Element::y_var(AlgebraShape(2, 1), 1, 0)));
    CHECK_THROWS_AS(parse_element("x1^", s), std::invalid_argument);
}

TEST_CASE("degenerate shapes are rejected") {
    CHECK_THROWS_AS(AlgebraShape(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(AlgebraShape(1, 0), std::invalid_argument);
}
