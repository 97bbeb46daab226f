#include "weylinv/coker.hpp"

#include <stdexcept>

#include "weylinv/theta.hpp"

namespace weylinv {

namespace {

long binom(int m, int k) {
    if (k < 0 || k > m) return 0;
    long r = 1;
    for (int j = 1; j <= k; ++j) r = r * (m - k + j) / j;
    return r;
}

int count_degree(const std::vector<GeneratorLabel>& labels, int i) {
    int c = 0;
    for (const auto& l : labels)
        if (l.degree() == i) ++c;
    return c;
}

}  // namespace

long coker_closed_form(FamilyTag family, int n, int m, int i, CokerVariant variant) {
    switch (variant) {
        case CokerVariant::ProofU: {
            long s = 0;
            for (int k = i + 1; k <= n; ++k) s += binom(m, 2 * k - i);
            return s;
        }
        case CokerVariant::StatementU: {
            long s = 0;
            for (int k = i + 1; k <= n; ++k) s += binom(m, 2 * i - k);
            return s;
        }
        case CokerVariant::ProofSp: {
            long s = 0;
            for (int k = 1; k <= n; ++k)
                if (3 * k > i) s += binom(m, 4 * k - i);
            return s;
        }
        case CokerVariant::StatementSp: {
            long s = 0;
            for (int k = 1; k <= n; ++k)
                if (3 * k > i) s += binom(m, 4 * i - k);
            return s;
        }
        case CokerVariant::Derived:
            return count_degree(build_Smap(family, n, m), i) -
                   count_degree(build_S(family, n, m), i);
    }
    throw std::logic_error("coker_closed_form: bad variant");
}

RationalMatrix theta_indec_matrix(FamilyTag family, int n, int m, int i, const Budget& budget) {
    if (family == FamilyTag::SOeven)
        throw std::invalid_argument("theta_indec_matrix: unsupported family");
    InvariantContext ctx(RingModel::coinvariant(family, n, m), family, budget);
    return theta_indec_matrix(ctx, i);
}

RationalMatrix theta_indec_matrix(InvariantContext& ctx, int i) {
    const FamilyTag family = ctx.family();
    const AlgebraShape& shape = ctx.model().shape;
    const int n = shape.n, m = shape.m;

    std::vector<GeneratorLabel> labels;
    for (const auto& l : build_Smap(family, n, m))
        if (l.degree() == i) labels.push_back(l);

    const SparseReducer& dec = ctx.decomposables_reducer(i);
    const int ambient = ctx.ambient_invariant_dim(i);
    std::vector<bool> is_pivot(ambient, false);
    for (int c : dec.pivot_cols()) is_pivot[c] = true;
    std::vector<int> col_to_row(ambient, -1);
    int rows = 0;
    for (int c = 0; c < ambient; ++c)
        if (!is_pivot[c]) col_to_row[c] = rows++;

    RationalMatrix M(rows, static_cast<int>(labels.size()));
    for (int j = 0; j < static_cast<int>(labels.size()); ++j) {
        Element img = theta_closed(labels[j], shape);
        if (img.is_zero()) continue;
        for (auto& [col, c] : dec.full_reduce(ctx.coords(i, img))) M.at(col_to_row[col], j) = c;
    }
    return M;
}

CokerReport coker_dim(FamilyTag family, int n, int m, int i, const Budget& budget) {
    InvariantContext ctx(RingModel::coinvariant(family, n, m), family, budget);
    return coker_dim(ctx, i);
}

CokerReport coker_dim(InvariantContext& ctx, int i) {
    const FamilyTag family = ctx.family();
    const int n = ctx.model().shape.n, m = ctx.model().shape.m;
    CokerReport rep;
    rep.family = family;
    rep.n = n;
    rep.m = m;
    rep.i = i;
    rep.dim_S_i = count_degree(build_Smap(family, n, m), i);
    rep.dim_S_i_hom = count_degree(build_S(family, n, m), i);
    rep.enum_diff = std::max(0, rep.dim_S_i - rep.dim_S_i_hom);
    const bool typeA = family == FamilyTag::U || family == FamilyTag::SU;
    rep.proof_formula =
        coker_closed_form(family, n, m, i, typeA ? CokerVariant::ProofU : CokerVariant::ProofSp);
    rep.statement_formula = coker_closed_form(
        family, n, m, i, typeA ? CokerVariant::StatementU : CokerVariant::StatementSp);
    rep.validity = typeA || i <= 2 * n + 3;

    RationalMatrix M = theta_indec_matrix(ctx, i);
    rep.kernel_dim = M.cols() - rref(M).rank;
    return rep;
}

}  // namespace weylinv
