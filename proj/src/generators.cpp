#include "weylinv/generators.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace weylinv {

std::uint64_t GeneratorLabel::imask() const {
    std::uint64_t mask = 0;
    for (int j : I) mask |= std::uint64_t(1) << (j - 1);
    return mask;
}

int GeneratorLabel::degree() const {
    const int k = isize();
    switch (kind) {
        case LabelKind::HomZ:
            return 2 * param + k - 2;
        case LabelKind::HomW:
            return 4 * param + k + 2 * eps(k) - 4;
        case LabelKind::MapZ: {
            int zdeg = (family == FamilyTag::U || family == FamilyTag::SU) ? 2 * param : 4 * param;
            return zdeg - k;
        }
    }
    throw std::logic_error("GeneratorLabel::degree: bad kind");
}

std::string GeneratorLabel::to_string() const {
    std::string set = "{";
    for (std::size_t k = 0; k < I.size(); ++k) {
        if (k) set += ",";
        set += std::to_string(I[k]);
    }
    set += "}";
    switch (kind) {
        case LabelKind::HomZ:
            return "z(" + std::to_string(param) + "," + set + ")";
        case LabelKind::HomW:
            return "w(" + std::to_string(param) + "," + set + ")";
        case LabelKind::MapZ:
            return "z_{" + std::to_string(param) + "," + set + "}";
    }
    throw std::logic_error("GeneratorLabel::to_string: bad kind");
}

std::vector<int> set_from_mask(std::uint64_t mask) {
    std::vector<int> out;
    for (int j = 0; mask; ++j, mask >>= 1)
        if (mask & 1) out.push_back(j + 1);
    return out;
}

namespace {

Element indexed_sum(const AlgebraShape& s, int xexp, std::uint64_t imask) {
    Element r(s);
    for (int k = 0; k < s.n; ++k) {
        Monomial mono{std::vector<std::uint32_t>(s.n, 0), 0};
        mono.xexp[k] = static_cast<std::uint32_t>(xexp);
        for (int j = 0; j < s.m; ++j)
            if (imask >> j & 1) mono.odd |= std::uint64_t(1) << s.ypos(k, j);
        r.add_term(mono, 1);
    }
    return r;
}

}  // namespace

Element z_gen(const AlgebraShape& s, int d, std::uint64_t imask) {
    if (d < 1 || imask == 0) throw std::invalid_argument("z_gen: need d >= 1 and nonempty I");
    return indexed_sum(s, d - 1, imask);
}

Element w_gen(const AlgebraShape& s, int d, std::uint64_t imask) {
    if (d < 1 || imask == 0) throw std::invalid_argument("w_gen: need d >= 1 and nonempty I");
    const int k = std::popcount(imask);
    return indexed_sum(s, 2 * d + eps(k) - 2, imask);
}

Element realize(const GeneratorLabel& label, const AlgebraShape& s) {
    switch (label.kind) {
        case LabelKind::HomZ:
            return z_gen(s, label.param, label.imask());
        case LabelKind::HomW:
            return w_gen(s, label.param, label.imask());
        case LabelKind::MapZ:
            throw std::invalid_argument("realize: map_z labels live on the mapping-space side");
    }
    throw std::logic_error("realize: bad kind");
}

namespace {

bool label_less(const GeneratorLabel& a, const GeneratorLabel& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.param != b.param) return a.param < b.param;
    return a.I < b.I;
}

}  // namespace

std::vector<GeneratorLabel> build_S(FamilyTag family, int n, int m) {
    if (family == FamilyTag::SOeven)
        throw std::invalid_argument("build_S: no generating set is available for SO(2n)");
    std::vector<GeneratorLabel> out;
    const bool typeA = family == FamilyTag::U || family == FamilyTag::SU;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        const int k = std::popcount(mask);
        for (int d = 1; d <= n; ++d) {
            if (typeA) {
                if (d + k - 1 > n) continue;
                if (family == FamilyTag::SU && d == 1 && k == 1) continue;
                out.push_back({LabelKind::HomZ, family, d, set_from_mask(mask)});
            } else {
                if (2 * d + k + eps(k) - 2 > 2 * n) continue;
                out.push_back({LabelKind::HomW, family, d, set_from_mask(mask)});
            }
        }
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

std::vector<GeneratorLabel> build_Smap(FamilyTag family, int n, int m) {
    if (family == FamilyTag::SOeven)
        throw std::invalid_argument("build_Smap: no generating set is available for SO(2n)");
    std::vector<GeneratorLabel> out;
    const bool typeA = family == FamilyTag::U || family == FamilyTag::SU;
    const int i0 = family == FamilyTag::SU ? 2 : 1;
    for (int i = i0; i <= n; ++i) {
        const int zdeg = typeA ? 2 * i : 4 * i;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            if (std::popcount(mask) >= zdeg) continue;
            out.push_back({LabelKind::MapZ, family, i, set_from_mask(mask)});
        }
    }
    std::sort(out.begin(), out.end(), label_less);
    return out;
}

int freeness_bound(FamilyTag family, int n, int m) {
    switch (family) {
        case FamilyTag::U:
        case FamilyTag::SU:
            return 2 * n - m;
        case FamilyTag::Sp:
        case FamilyTag::SOodd:
            return 2 * n + 1;
        case FamilyTag::SOeven:
            throw std::invalid_argument("freeness_bound: unsupported family");
    }
    throw std::logic_error("freeness_bound: bad family");
}

std::vector<long> free_algebra_dims(const std::vector<GeneratorLabel>& labels, int max_degree) {
    std::vector<long> s(max_degree + 1, 0);
    s[0] = 1;
    for (const auto& label : labels) {
        const int e = label.degree();
        if (e < 1 || e > max_degree) continue;
        if (e % 2 == 0) {
            for (int d = e; d <= max_degree; ++d) s[d] += s[d - e];
        } else {
            for (int d = max_degree; d >= e; --d) s[d] += s[d - e];
        }
    }
    return s;
}

GenerationReport verify_generation(FamilyTag family, int n, int m, int max_degree,
                                   const Budget& budget) {
    GenerationReport rep;
    rep.family = family;
    rep.n = n;
    rep.m = m;
    rep.max_degree = max_degree;
    rep.d_bound = freeness_bound(family, n, m);
    rep.labels = build_S(family, n, m);

    InvariantContext ctx(RingModel::coinvariant(family, n, m), family, budget);
    const AlgebraShape& shape = ctx.model().shape;
    std::vector<long> free_dims = free_algebra_dims(rep.labels, max_degree);

    std::vector<Element> gens;
    std::vector<int> gen_deg;
    for (const auto& label : rep.labels) {
        gens.push_back(realize(label, shape));
        gen_deg.push_back(label.degree());
    }

    std::vector<std::vector<Element>> sub_basis(max_degree + 1);
    sub_basis[0].push_back(Element::unit(shape));

    rep.all_generated = true;
    rep.all_free_in_range = true;
    rep.all_minimal = true;
    for (int d = 1; d <= max_degree; ++d) {
        GenerationDegreeReport dr;
        dr.degree = d;
        dr.invariant_dim = ctx.invariant_dim(d);
        dr.free_dim = free_dims[d];

        SparseReducer red = ctx.ideal_reducer(d);
        const int base = red.rank();
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const int e = gen_deg[g];
            if (e < 1 || e > d) continue;
            for (const Element& b : sub_basis[d - e]) {
                Element prod = mul(gens[g], b);
                if (prod.is_zero()) continue;
                if (red.add(ctx.coords(d, prod))) sub_basis[d].push_back(std::move(prod));
            }
        }
        dr.subalgebra_dim = red.rank() - base;
        dr.generation = dr.subalgebra_dim == dr.invariant_dim;
        if (d <= rep.d_bound) {
            dr.freeness = (static_cast<long>(dr.invariant_dim) == dr.free_dim);
            if (!*dr.freeness) rep.all_free_in_range = false;
        }

        SparseReducer mred = ctx.decomposables_reducer(d);
        dr.minimal = true;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            if (gen_deg[g] != d) continue;
            if (!mred.add(ctx.coords(d, gens[g]))) dr.minimal = false;
        }
        if (!dr.generation) rep.all_generated = false;
        if (!dr.minimal) rep.all_minimal = false;
        rep.degrees.push_back(std::move(dr));
    }
    return rep;
}

}  // namespace weylinv
