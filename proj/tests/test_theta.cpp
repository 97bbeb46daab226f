#include <doctest.h>

#include <bit>

#include "weylinv/theta.hpp"

using namespace weylinv;

TEST_CASE("extraction sign") {
    CHECK(extraction_sign(0) == 1);
    CHECK(extraction_sign(1) == 1);
    CHECK(extraction_sign(2) == -1);
    CHECK(extraction_sign(3) == -1);
    CHECK(extraction_sign(4) == 1);
}

TEST_CASE("theta_closed examples") {
    AlgebraShape s(2, 2);
    GeneratorLabel l{LabelKind::MapZ, FamilyTag::U, 2, {1, 2}};
    // 2!/0! = 2 times z(1,{1,2}), with the calibrated sign for |I| = 2
    CHECK(theta_closed(l, s) == z_gen(s, 1, 0b11) * Rat(-2));

    AlgebraShape s3(2, 3);
    GeneratorLabel big{LabelKind::MapZ, FamilyTag::U, 2, {1, 2, 3}};
    CHECK(theta_closed(big, s3).is_zero());  // |I| = 3 > i = 2

    GeneratorLabel sp{LabelKind::MapZ, FamilyTag::Sp, 1, {1, 2}};
    // (2i)!/(2i-2)! = 2, d = 1 - 1 + 1 = 1
    CHECK(theta_closed(sp, s) == w_gen(s, 1, 0b11) * Rat(-2));

    GeneratorLabel so{LabelKind::MapZ, FamilyTag::SOeven, 1, {1}};
    CHECK_THROWS_AS(theta_closed(so, s), std::invalid_argument);
}

TEST_CASE("theta_expand examples") {
    AlgebraShape s(2, 2);
    auto exp2 = theta_expand(power_sum(s, 2));
    CHECK(exp2.at(0b01) == (mul(Element::x_var(s, 0), Element::y_var(s, 0, 0)) +
                            mul(Element::x_var(s, 1), Element::y_var(s, 1, 0))) *
                               Rat(2));
    CHECK(exp2.at(0b00) == power_sum(s, 2));

    // top coefficient of x_1 x_2 at I = {} is itself
    Element e = mul(Element::x_var(s, 0), Element::x_var(s, 1));
    CHECK(theta_expand(e).at(0b00) == e);

    // |I| > i kills every component of a power sum
    auto exp1 = theta_expand(power_sum(s, 1));
    CHECK(exp1.at(0b11).is_zero());

    CHECK_THROWS_AS(theta_expand(z_gen(s, 2, 0b01)), std::invalid_argument);
}

TEST_CASE("expansion components are invariant and degree-correct") {
    const FamilyTag fams[] = {FamilyTag::U, FamilyTag::Sp, FamilyTag::SOeven};
    for (FamilyTag f : fams) {
        int n = f == FamilyTag::SOeven ? 2 : 2, m = 2;
        AlgebraShape s(n, m);
        for (const Element& bg : bg_generators(f, s)) {
            int p = bg.degree();
            for (auto& [mask, comp] : theta_expand(bg)) {
                if (comp.is_zero()) continue;
                CHECK(comp.homogeneous(p - std::popcount(mask)));
                CHECK(is_invariant(comp, f, n));
                // y-degree of every monomial equals |I|
                for (auto& [mono, c] : comp.terms())
                    CHECK(std::popcount(mono.ymask(s)) == std::popcount(mask));
            }
        }
    }
}

TEST_CASE("closed form equals expansion for small parameters") {
    const FamilyTag fams[] = {FamilyTag::U, FamilyTag::SU, FamilyTag::Sp, FamilyTag::SOodd};
    for (FamilyTag f : fams) {
        const bool typeA = f == FamilyTag::U || f == FamilyTag::SU;
        const int n0 = f == FamilyTag::SU ? 2 : 1;
        for (int n = n0; n <= 2; ++n) {
            for (int m = 1; m <= 2; ++m) {
                AlgebraShape s(n, m);
                for (const auto& l : build_Smap(f, n, m)) {
                    Element expanded = theta_expand_component(
                        power_sum(s, typeA ? l.param : 2 * l.param), l.imask());
                    CHECK(theta_closed(l, s) == expanded);
                }
            }
        }
    }
}

TEST_CASE("surjectivity at small rank") {
    CHECK(check_surjectivity(FamilyTag::U, 2, 2, 4).all_surjective);
    CHECK(check_surjectivity(FamilyTag::SOeven, 2, 2, 4).all_surjective);
}

TEST_CASE("SO(8) witness report") {
    SoEvenWitnessReport rep = so_even_witness(4, 3);
    CHECK(rep.degree == 6);
    CHECK(to_string(rep.abar) == "y1_1*y2_2*y3_3*y4_1*y4_2*y4_3");
    CHECK(rep.abar_coeff == 8);
    CHECK(rep.coeff_ok);
    CHECK(rep.nonzero);
    CHECK(rep.indecomposable);
    CHECK_FALSE(rep.in_image);
    CHECK_FALSE(rep.surjective_at_degree);
    CHECK_THROWS_AS(so_even_witness(3, 3), std::invalid_argument);
}

TEST_CASE("parity split") {
    AlgebraShape s(4, 3);
    Element mixed = mul(Element::x_var(s, 0), Element::y_var(s, 1, 0));  // d = (1,1,0,0)
    ParitySplit ps = parity_split(mixed);
    CHECK(ps.residual == mixed);
    CHECK(ps.even.is_zero());
    CHECK(ps.odd.is_zero());

    SoEvenWitnessReport rep = so_even_witness(4, 3);
    ParitySplit pa = parity_split(rep.abar);  // d(abar) = (1,1,1,3)
    CHECK(pa.odd == rep.abar);
    CHECK(pa.residual.is_zero());

    Element even = power_sum(s, 2);
    CHECK(parity_split(even).even == even);
}
