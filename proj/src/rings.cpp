#include "weylinv/rings.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylinv {

Element elementary_symmetric(const AlgebraShape& s, int k, bool squared) {
    if (k < 0 || k > s.n) throw std::invalid_argument("elementary_symmetric: bad k");
    Element r(s);
    std::vector<int> idx(k);
    // subsets of [n] of size k in lexicographic order
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        Monomial mono{std::vector<std::uint32_t>(s.n, 0), 0};
        for (int i : idx) mono.xexp[i] = squared ? 2 : 1;
        r.add_term(mono, 1);
        int p = k - 1;
        while (p >= 0 && idx[p] == s.n - k + p) --p;
        if (p < 0) break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
    if (k == 0) return Element::unit(s);
    return r;
}

Element power_sum(const AlgebraShape& s, int e) {
    Element r(s);
    for (int i = 0; i < s.n; ++i) r += Element::x_var(s, i, static_cast<std::uint32_t>(e));
    return r;
}

std::vector<Element> basic_invariants(FamilyTag family, const AlgebraShape& s) {
    std::vector<Element> out;
    switch (family) {
        case FamilyTag::U:
            for (int k = 1; k <= s.n; ++k) out.push_back(elementary_symmetric(s, k));
            break;
        case FamilyTag::SU:
            for (int k = 2; k <= s.n; ++k) out.push_back(elementary_symmetric(s, k));
            break;
        case FamilyTag::Sp:
        case FamilyTag::SOodd:
            for (int k = 1; k <= s.n; ++k) out.push_back(elementary_symmetric(s, k, true));
            break;
        case FamilyTag::SOeven: {
            for (int k = 1; k <= s.n - 1; ++k) out.push_back(elementary_symmetric(s, k, true));
            Element e(s);
            Monomial mono{std::vector<std::uint32_t>(s.n, 1), 0};
            e.add_term(mono, 1);
            out.push_back(e);
            break;
        }
    }
    return out;
}

std::vector<Element> bg_generators(FamilyTag family, const AlgebraShape& s) {
    std::vector<Element> out;
    switch (family) {
        case FamilyTag::U:
            for (int i = 1; i <= s.n; ++i) out.push_back(power_sum(s, i));
            break;
        case FamilyTag::SU:
            for (int i = 2; i <= s.n; ++i) out.push_back(power_sum(s, i));
            break;
        case FamilyTag::Sp:
        case FamilyTag::SOodd:
            for (int i = 1; i <= s.n; ++i) out.push_back(power_sum(s, 2 * i));
            break;
        case FamilyTag::SOeven:
            return basic_invariants(family, s);
    }
    return out;
}

RingModel RingModel::free_model(int n, int m, bool with_t) {
    return RingModel{AlgebraShape(n, m, with_t), {}, ModelKind::Free};
}

RingModel RingModel::su_quotient(int n, int m) {
    AlgebraShape s(n, m, false);
    RingModel model{s, {}, ModelKind::SUQuotient};
    model.relations.push_back(elementary_symmetric(s, 1));
    for (int j = 0; j < m; ++j) {
        Element rel(s);
        for (int i = 0; i < n; ++i) rel += Element::y_var(s, i, j);
        model.relations.push_back(std::move(rel));
    }
    return model;
}

RingModel RingModel::coinvariant(FamilyTag family, int n, int m) {
    AlgebraShape s(n, m, false);
    RingModel model{s, {}, ModelKind::Coinvariant};
    if (family == FamilyTag::SU) {
        model.relations.push_back(elementary_symmetric(s, 1));
        for (int j = 0; j < m; ++j) {
            Element rel(s);
            for (int i = 0; i < n; ++i) rel += Element::y_var(s, i, j);
            model.relations.push_back(std::move(rel));
        }
    }
    for (auto& r : basic_invariants(family, s)) model.relations.push_back(std::move(r));
    return model;
}

DegreeBasis::DegreeBasis(RingModel model, int degree, const Budget& budget)
    : model_(std::move(model)), degree_(degree) {
    ambient_ = enumerate_degree_monomials(model_.shape, degree, budget);
    for (int i = 0; i < static_cast<int>(ambient_.size()); ++i) ambient_index_[ambient_[i]] = i;
    for (const auto& rel : model_.relations) {
        const int e = rel.degree();
        if (e < 0 || e > degree) continue;
        for (const auto& mono : enumerate_degree_monomials(model_.shape, degree - e, budget)) {
            Element prod = mul(rel, Element::term(model_.shape, mono, 1));
            SparseVec row;
            for (auto& [pm, c] : prod.terms()) row.emplace_back(ambient_index_.at(pm), c);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ideal_.add(std::move(row));
        }
    }
    std::vector<bool> is_pivot(ambient_.size(), false);
    for (int c : ideal_.pivot_cols()) is_pivot[c] = true;
    col_to_rep_.assign(ambient_.size(), -1);
    for (int c = 0; c < static_cast<int>(ambient_.size()); ++c) {
        if (is_pivot[c]) continue;
        col_to_rep_[c] = static_cast<int>(reps_.size());
        reps_.push_back(ambient_[c]);
        rep_cols_.push_back(c);
    }
}

std::vector<Rat> DegreeBasis::project(const Element& a) const {
    SparseVec v;
    for (auto& [mono, c] : a.terms()) {
        auto it = ambient_index_.find(mono);
        if (it == ambient_index_.end())
            throw std::invalid_argument("DegreeBasis::project: wrong degree piece");
        v.emplace_back(it->second, c);
    }
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    v = ideal_.full_reduce(std::move(v));
    std::vector<Rat> coords(reps_.size());
    for (auto& [col, c] : v) coords[col_to_rep_[col]] = c;
    return coords;
}

Element DegreeBasis::reduce(const Element& a) const {
    std::vector<Rat> coords = project(a);
    Element r(model_.shape);
    for (int k = 0; k < dimension(); ++k)
        if (coords[k] != 0) r.add_term(reps_[k], coords[k]);
    return r;
}

Element DegreeBasis::representative_element(int k) const {
    return Element::term(model_.shape, reps_.at(k), 1);
}

InvariantContext::InvariantContext(RingModel model, FamilyTag family, Budget budget)
    : model_(std::move(model)), family_(family), budget_(budget) {
    for (const auto& rel : model_.relations) {
        if (!rel.homogeneous())
            throw std::invalid_argument("InvariantContext: relations must be homogeneous");
        if (!is_invariant(rel, family_, model_.shape.n))
            throw std::invalid_argument("InvariantContext: relations must be W-invariant");
    }
}

const OrbitIndex& InvariantContext::orbits(int d) {
    auto it = orbits_.find(d);
    if (it == orbits_.end())
        it = orbits_.emplace(d, OrbitIndex(model_.shape, family_, d, budget_)).first;
    return it->second;
}

SparseVec InvariantContext::coords(int d, const Element& v) { return orbits(d).coords(v); }

int InvariantContext::ambient_invariant_dim(int d) { return orbits(d).dim(); }

const SparseReducer& InvariantContext::ideal_reducer(int d) {
    auto it = ideal_.find(d);
    if (it != ideal_.end()) return it->second;
    SparseReducer red;
    const OrbitIndex& oi = orbits(d);
    for (const auto& rel : model_.relations) {
        const int e = rel.degree();
        if (e < 0 || e > d) continue;
        const OrbitIndex& lower = orbits(d - e);
        for (int c = 0; c < lower.dim(); ++c) {
            Element prod = mul(rel, lower.orbit_sum(lower.orbit_of_coord(c)));
            if (prod.is_zero()) continue;
            red.add(oi.coords(prod));
        }
    }
    return ideal_.emplace(d, std::move(red)).first->second;
}

int InvariantContext::invariant_dim(int d) {
    return ambient_invariant_dim(d) - ideal_reducer(d).rank();
}

const std::vector<Element>& InvariantContext::invariant_basis(int d) {
    auto it = basis_.find(d);
    if (it != basis_.end()) return it->second;
    const OrbitIndex& oi = orbits(d);
    const SparseReducer& red = ideal_reducer(d);
    std::vector<bool> is_pivot(oi.dim(), false);
    for (int c : red.pivot_cols()) is_pivot[c] = true;
    std::vector<Element> out;
    for (int c = 0; c < oi.dim(); ++c)
        if (!is_pivot[c]) out.push_back(oi.orbit_sum(oi.orbit_of_coord(c)));
    return basis_.emplace(d, std::move(out)).first->second;
}

bool InvariantContext::in_ideal(int d, const Element& v) {
    return ideal_reducer(d).contains(coords(d, v));
}

const SparseReducer& InvariantContext::decomposables_reducer(int d) {
    auto it = dec_.find(d);
    if (it != dec_.end()) return it->second;
    SparseReducer red = ideal_reducer(d);
    const int base_rank = red.rank();
    const OrbitIndex& oi = orbits(d);
    std::vector<SparseVec> span;
    for (int a = 1; a <= d - a; ++a) {
        const auto& left = invariant_basis(a);
        const auto& right = invariant_basis(d - a);
        for (std::size_t i = 0; i < left.size(); ++i) {
            std::size_t j0 = (a == d - a) ? i : 0;
            for (std::size_t j = j0; j < right.size(); ++j) {
                Element prod = mul(left[i], right[j]);
                if (prod.is_zero()) continue;
                SparseVec v = oi.coords(prod);
                if (red.add(v)) span.push_back(std::move(v));
            }
        }
    }
    dec_dim_[d] = red.rank() - base_rank;
    dec_vectors_[d] = std::move(span);
    return dec_.emplace(d, std::move(red)).first->second;
}

int InvariantContext::decomposables_dim(int d) {
    decomposables_reducer(d);
    return dec_dim_.at(d);
}

const std::vector<SparseVec>& InvariantContext::decomposable_span_vectors(int d) {
    decomposables_reducer(d);
    return dec_vectors_.at(d);
}

std::vector<Element> invariant_basis(const RingModel& model, FamilyTag family, int d,
                                     const Budget& budget) {
    InvariantContext ctx(model, family, budget);
    return ctx.invariant_basis(d);
}

std::vector<Element> invariant_basis_fixed_points(const RingModel& model, FamilyTag family,
                                                  int d, const Budget& budget) {
    DegreeBasis db(model, d, budget);
    const int dim = db.dimension();
    const auto gens = coxeter_generators(family, model.shape.n);
    RationalMatrix stacked(static_cast<int>(gens.size()) * dim, dim);
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        for (int k = 0; k < dim; ++k) {
            std::vector<Rat> col = db.project(act(gens[g], db.representative_element(k), family));
            for (int r = 0; r < dim; ++r) stacked.at(g * dim + r, k) = col[r];
            stacked.at(g * dim + k, k) -= 1;
        }
    }
    std::vector<Element> out;
    for (const auto& v : nullspace(stacked)) {
        Element e(model.shape);
        for (int k = 0; k < dim; ++k)
            if (v[k] != 0) e += db.representative_element(k) * v[k];
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<SparseVec> decomposables_span(const RingModel& model, FamilyTag family, int d,
                                          const Budget& budget) {
    InvariantContext ctx(model, family, budget);
    return ctx.decomposable_span_vectors(d);
}

}  // namespace weylinv
