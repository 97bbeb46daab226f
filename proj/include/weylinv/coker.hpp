#pragma once

#include <vector>

#include "weylinv/budget.hpp"
#include "weylinv/generators.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/rings.hpp"

namespace weylinv {

// The printed closed forms of the cokernel count (statement and proof print
// different binomial arguments) plus the pure label-enumeration difference.
enum class CokerVariant { ProofU, StatementU, ProofSp, StatementSp, Derived };

// ProofU: sum_{i<k<=n} C(m,2k-i); StatementU: sum_{i<k<=n} C(m,2i-k);
// ProofSp: sum_{i/3<k<=n} C(m,4k-i); StatementSp: sum_{i/3<k<=n} C(m,4i-k);
// Derived: #(degree-i map labels) - #(degree-i hom labels).
long coker_closed_form(FamilyTag family, int n, int m, int i, CokerVariant variant);

struct CokerReport {
    FamilyTag family;
    int n = 0, m = 0, i = 0;
    int dim_S_i = 0;        // degree-i labels of build_Smap
    int dim_S_i_hom = 0;    // degree-i labels of build_S
    int kernel_dim = 0;     // nullity of the map on indecomposables
    int enum_diff = 0;      // max(0, dim_S_i - dim_S_i_hom)
    long proof_formula = 0;
    long statement_formula = 0;
    bool validity = false;  // inside the proven equality range
};

// Matrix of Theta* from the degree-i map labels (columns, label order) to the
// indecomposables quotient of the Hom-side invariant ring at degree i.
RationalMatrix theta_indec_matrix(FamilyTag family, int n, int m, int i,
                                  const Budget& budget = {});
// Context-sharing variants: ctx must wrap the Coinvariant model of the family.
RationalMatrix theta_indec_matrix(InvariantContext& ctx, int i);

CokerReport coker_dim(FamilyTag family, int n, int m, int i, const Budget& budget = {});
CokerReport coker_dim(InvariantContext& ctx, int i);

}  // namespace weylinv
