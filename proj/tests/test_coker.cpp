#include <doctest.h>

#include "weylinv/coker.hpp"

using namespace weylinv;

TEST_CASE("closed form variants") {
    CHECK(coker_closed_form(FamilyTag::U, 2, 3, 1, CokerVariant::ProofU) == 1);      // C(3,3)
    CHECK(coker_closed_form(FamilyTag::U, 2, 3, 1, CokerVariant::StatementU) == 1);  // C(3,0)
    CHECK(coker_closed_form(FamilyTag::U, 2, 2, 2, CokerVariant::ProofU) == 0);      // empty sum
    CHECK(coker_closed_form(FamilyTag::Sp, 2, 2, 2, CokerVariant::Derived) == 0);
    CHECK(coker_closed_form(FamilyTag::Sp, 2, 2, 2, CokerVariant::ProofSp) == 1);
}

TEST_CASE("theta_indec_matrix examples") {
    // U(2), m=3, i=1: the column of z_{2,{1,2,3}} vanishes (|I| > i)
    RationalMatrix M = theta_indec_matrix(FamilyTag::U, 2, 3, 1);
    auto labels = build_Smap(FamilyTag::U, 2, 3);
    std::vector<GeneratorLabel> deg1;
    for (const auto& l : labels)
        if (l.degree() == 1) deg1.push_back(l);
    REQUIRE(static_cast<int>(deg1.size()) == M.cols());
    bool saw_big = false;
    for (int j = 0; j < M.cols(); ++j) {
        if (deg1[j].param == 2 && deg1[j].isize() == 3) {
            saw_big = true;
            for (int r = 0; r < M.rows(); ++r) CHECK(M.at(r, j) == 0);
        }
    }
    CHECK(saw_big);

    // U(2), m=2, i=2: single label on each side, full rank
    RationalMatrix M2 = theta_indec_matrix(FamilyTag::U, 2, 2, 2);
    CHECK(M2.cols() == 1);
    CHECK(rref(M2).rank == 1);

    // Sp(2), m=2, i=2: rank 1
    RationalMatrix M3 = theta_indec_matrix(FamilyTag::Sp, 2, 2, 2);
    CHECK(M3.cols() == 1);
    CHECK(rref(M3).rank == 1);
}

TEST_CASE("coker_dim examples") {
    CokerReport r1 = coker_dim(FamilyTag::U, 2, 3, 1);
    CHECK(r1.kernel_dim == 1);
    CHECK(r1.proof_formula == 1);
    CHECK(r1.statement_formula == 1);
    CHECK(r1.enum_diff == 1);
    CHECK(r1.validity);

    CokerReport r2 = coker_dim(FamilyTag::U, 2, 2, 2);
    CHECK(r2.kernel_dim == 0);

    CokerReport r3 = coker_dim(FamilyTag::Sp, 2, 2, 2);
    CHECK(r3.kernel_dim == 0);
    CHECK(r3.enum_diff == 0);
    CHECK(r3.proof_formula == 1);  // the printed formula overcounts here
    CHECK(r3.validity);
}

TEST_CASE("Sp and SO_odd reports coincide") {
    for (int n = 1; n <= 2; ++n) {
        InvariantContext sp(RingModel::coinvariant(FamilyTag::Sp, n, 2), FamilyTag::Sp, {});
        InvariantContext so(RingModel::coinvariant(FamilyTag::SOodd, n, 2), FamilyTag::SOodd, {});
        for (int i = 1; i <= 2 * n + 3; ++i) {
            CokerReport a = coker_dim(sp, i);
            CokerReport b = coker_dim(so, i);
            CHECK(a.kernel_dim == b.kernel_dim);
            CHECK(a.dim_S_i == b.dim_S_i);
            CHECK(a.dim_S_i_hom == b.dim_S_i_hom);
            CHECK(a.enum_diff == b.enum_diff);
        }
    }
}

TEST_CASE("kernel equals enumeration difference in range") {
    for (int n = 1; n <= 2; ++n) {
        for (int m = 1; m <= 2; ++m) {
            InvariantContext ctx(RingModel::coinvariant(FamilyTag::Sp, n, m), FamilyTag::Sp, {});
            for (int i = 1; i <= 2 * n + 3; ++i) {
                CokerReport rep = coker_dim(ctx, i);
                CHECK(rep.kernel_dim == rep.enum_diff);
            }
        }
    }
    for (int n = 1; n <= 3; ++n) {
        InvariantContext ctx(RingModel::coinvariant(FamilyTag::U, n, 2), FamilyTag::U, {});
        for (int i = 1; i <= 7; ++i) {
            CokerReport rep = coker_dim(ctx, i);
            CHECK(rep.kernel_dim == rep.proof_formula);
            CHECK(rep.kernel_dim == rep.enum_diff);
        }
    }
}
