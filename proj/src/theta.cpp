#include "weylinv/theta.hpp"

#include <stdexcept>

namespace weylinv {

int extraction_sign(int isize) {
    return (isize * (isize - 1) / 2) % 2 == 0 ? 1 : -1;
}

std::map<std::uint64_t, Element> theta_expand(const Element& bg_class) {
    const AlgebraShape& s = bg_class.shape();
    for (auto& [mono, c] : bg_class.terms())
        if (mono.odd != 0)
            throw std::invalid_argument("theta_expand: class must live in the x variables");
    AlgebraShape st(s.n, s.m, true);
    std::vector<Element> images;
    for (int k = 0; k < s.n; ++k) {
        Element img = Element::x_var(st, k);
        for (int j = 0; j < s.m; ++j)
            img += mul(Element::y_var(st, k, j), Element::t_var(st, j));
        images.push_back(std::move(img));
    }
    Element expanded = substitute_x(bg_class, images);
    std::map<std::uint64_t, Element> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << s.m); ++mask)
        out.emplace(mask, drop_t_block(extract_t_coefficient(expanded, mask)));
    return out;
}

Element theta_expand_component(const Element& bg_class, std::uint64_t imask) {
    return theta_expand(bg_class).at(imask);
}

Element theta_closed(const GeneratorLabel& label, const AlgebraShape& s) {
    if (label.kind != LabelKind::MapZ)
        throw std::invalid_argument("theta_closed: expected a map_z label");
    const int i = label.param;
    const int k = label.isize();
    const std::uint64_t imask = label.imask();
    switch (label.family) {
        case FamilyTag::U:
        case FamilyTag::SU: {
            if (k > i) return Element::zero(s);
            Rat c = extraction_sign(k);
            for (int j = 0; j < k; ++j) c *= i - j;
            return z_gen(s, i - k + 1, imask) * c;
        }
        case FamilyTag::Sp:
        case FamilyTag::SOodd: {
            if (k > 2 * i) return Element::zero(s);
            Rat c = extraction_sign(k);
            for (int j = 0; j < k; ++j) c *= 2 * i - j;
            return w_gen(s, i - (k + eps(k)) / 2 + 1, imask) * c;
        }
        case FamilyTag::SOeven:
            throw std::invalid_argument("theta_closed: no closed form for SO(2n)");
    }
    throw std::logic_error("theta_closed: bad family");
}

namespace {

// Positive-degree generators of the Theta-image subalgebra: every t_I
// component of every expanded H^*(BG) generator.
std::vector<Element> image_generators(FamilyTag family, const AlgebraShape& s) {
    std::vector<Element> gens;
    for (const Element& bg : bg_generators(family, s))
        for (auto& [mask, comp] : theta_expand(bg))
            if (!comp.is_zero() && comp.degree() >= 1) gens.push_back(comp);
    return gens;
}

// Degree-by-degree span of the subalgebra the generators produce inside the
// quotient invariants.  basis[d] holds ambient lifts, dims[d] the rank over
// the ideal at degree d.
void subalgebra_span(InvariantContext& ctx, const std::vector<Element>& gens, int max_degree,
                     std::vector<std::vector<Element>>& basis, std::vector<int>& dims) {
    basis.assign(max_degree + 1, {});
    dims.assign(max_degree + 1, 0);
    basis[0].push_back(Element::unit(ctx.model().shape));
    for (int d = 1; d <= max_degree; ++d) {
        SparseReducer red = ctx.ideal_reducer(d);
        const int base = red.rank();
        for (const Element& g : gens) {
            const int e = g.degree();
            if (e < 1 || e > d) continue;
            for (const Element& b : basis[d - e]) {
                Element prod = mul(g, b);
                if (prod.is_zero()) continue;
                if (red.add(ctx.coords(d, prod))) basis[d].push_back(std::move(prod));
            }
        }
        dims[d] = red.rank() - base;
    }
}

}  // namespace

SurjectivityReport check_surjectivity(FamilyTag family, int n, int m, int max_degree,
                                      const Budget& budget) {
    SurjectivityReport rep;
    rep.family = family;
    rep.n = n;
    rep.m = m;
    rep.max_degree = max_degree;
    InvariantContext ctx(RingModel::coinvariant(family, n, m), family, budget);
    std::vector<Element> gens = image_generators(family, ctx.model().shape);
    std::vector<std::vector<Element>> basis;
    std::vector<int> dims;
    subalgebra_span(ctx, gens, max_degree, basis, dims);
    rep.all_surjective = true;
    for (int d = 1; d <= max_degree; ++d) {
        SurjectivityDegree sd;
        sd.degree = d;
        sd.invariant_dim = ctx.invariant_dim(d);
        sd.image_dim = dims[d];
        sd.surjective = sd.image_dim == sd.invariant_dim;
        if (!sd.surjective) rep.all_surjective = false;
        rep.degrees.push_back(sd);
    }
    return rep;
}

SoEvenWitnessReport so_even_witness(int n, int m, const Budget& budget) {
    if (n < 4 || m < 3) throw std::invalid_argument("so_even_witness: need n >= 4, m >= 3");
    AlgebraShape s(n, m, false);
    SoEvenWitnessReport rep;
    rep.n = n;
    rep.m = m;
    rep.degree = 2 * (n - 4) + 6;

    Monomial abar{std::vector<std::uint32_t>(n, 0), 0};
    for (int i = 0; i < n - 4; ++i) abar.xexp[i] = 1;
    abar.odd |= std::uint64_t(1) << s.ypos(n - 4, 0);
    abar.odd |= std::uint64_t(1) << s.ypos(n - 3, 1);
    abar.odd |= std::uint64_t(1) << s.ypos(n - 2, 2);
    for (int j = 0; j < 3; ++j) abar.odd |= std::uint64_t(1) << s.ypos(n - 1, j);
    rep.abar = Element::term(s, abar, 1);

    rep.witness = reynolds(rep.abar, FamilyTag::SOeven, n, budget);
    rep.abar_coeff = rep.witness.coeff(abar);
    rep.abar_coeff_expected = 1;
    for (int i = 0; i < n - 1; ++i) rep.abar_coeff_expected *= 2;
    for (int i = 2; i <= n - 4; ++i) rep.abar_coeff_expected *= i;
    rep.coeff_ok = rep.abar_coeff == rep.abar_coeff_expected;

    InvariantContext ctx(RingModel::coinvariant(FamilyTag::SOeven, n, m), FamilyTag::SOeven,
                         budget);
    const int D = rep.degree;
    SparseVec wcoords = ctx.coords(D, rep.witness);
    rep.nonzero = !ctx.ideal_reducer(D).contains(wcoords);
    rep.indecomposable = !ctx.decomposables_reducer(D).contains(wcoords);

    std::vector<Element> gens = image_generators(FamilyTag::SOeven, s);
    std::vector<std::vector<Element>> basis;
    std::vector<int> dims;
    subalgebra_span(ctx, gens, D, basis, dims);
    SparseReducer image_plus_dec = ctx.decomposables_reducer(D);
    for (const Element& b : basis[D]) image_plus_dec.add(ctx.coords(D, b));
    rep.in_image = image_plus_dec.contains(wcoords);
    rep.surjective_at_degree = dims[D] == ctx.invariant_dim(D);
    return rep;
}

ParitySplit parity_split(const Element& a) {
    const AlgebraShape& s = a.shape();
    ParitySplit out{Element(s), Element(s), Element(s)};
    for (auto& [mono, c] : a.terms()) {
        std::vector<int> d = mono.d_vector(s);
        bool all_even = true, all_odd = true;
        for (int v : d) {
            if (v % 2 == 0) all_odd = false;
            else all_even = false;
        }
        if (all_even) out.even.add_term(mono, c);
        else if (all_odd) out.odd.add_term(mono, c);
        else out.residual.add_term(mono, c);
    }
    return out;
}

}  // namespace weylinv
