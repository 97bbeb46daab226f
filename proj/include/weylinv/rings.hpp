#pragma once

#include <map>
#include <optional>
#include <vector>

#include "weylinv/algebra.hpp"
#include "weylinv/budget.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/orbit.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

// Elementary symmetric e_k in x_1..x_n (or in x_1^2..x_n^2 when squared).
Element elementary_symmetric(const AlgebraShape& s, int k, bool squared = false);
// Power sum x_1^e + ... + x_n^e.
Element power_sum(const AlgebraShape& s, int e);

// Basic W-invariants of the family in the x variables: the relation ideal of
// the coinvariant algebra.  U: e_1..e_n; SU: e_2..e_n; Sp/SO_odd: p_1..p_n;
// SO_even: p_1..p_{n-1} and e = x_1...x_n.
std::vector<Element> basic_invariants(FamilyTag family, const AlgebraShape& s);

// Restrictions j*(z_i) of the chosen H^*(BG) generators: power sums
// x_1^i+...+x_n^i (U: i=1..n, SU: i=2..n), x_1^{2i}+...+x_n^{2i}
// (Sp/SO_odd), and for SO_even the set p_1..p_{n-1}, e.
std::vector<Element> bg_generators(FamilyTag family, const AlgebraShape& s);

enum class ModelKind { Free, SUQuotient, Coinvariant };

// Ambient algebra plus a list of homogeneous relation generators.  Every
// relation is W-invariant, so the action descends to the quotient.
struct RingModel {
    AlgebraShape shape;
    std::vector<Element> relations;
    ModelKind kind = ModelKind::Free;

    static RingModel free_model(int n, int m, bool with_t = false);
    // relations sum_i x_i and sum_i y_i^j for each j
    static RingModel su_quotient(int n, int m);
    // H^*(G/T x T^m): basic invariants in x; for SU also the y relations
    static RingModel coinvariant(FamilyTag family, int n, int m);
};

// Monomial basis of one graded piece of the quotient, with projection data.
class DegreeBasis {
public:
    DegreeBasis(RingModel model, int degree, const Budget& budget = {});

    const RingModel& model() const { return model_; }
    int degree() const { return degree_; }
    const std::vector<Monomial>& ambient() const { return ambient_; }
    const std::vector<Monomial>& representatives() const { return reps_; }
    int dimension() const { return static_cast<int>(reps_.size()); }

    // Coordinates in the representative basis; kills exactly the ideal piece.
    std::vector<Rat> project(const Element& a) const;
    // Normal form as an element supported on representative monomials.
    Element reduce(const Element& a) const;
    Element representative_element(int k) const;

private:
    RingModel model_;
    int degree_;
    std::vector<Monomial> ambient_;
    std::map<Monomial, int> ambient_index_;
    SparseReducer ideal_;
    std::vector<Monomial> reps_;
    std::vector<int> rep_cols_;
    std::vector<int> col_to_rep_;  // ambient col -> representative index or -1
};

// Per-degree invariant-theory workspace for one (model, family) pair.
// Everything is expressed in orbit coordinates: W permutes monomials up to
// sign, ambient invariants are spanned by live orbit sums, and the invariant
// part of the ideal is spanned by relation * (lower-degree orbit sum) since
// all relations are W-invariant.
class InvariantContext {
public:
    InvariantContext(RingModel model, FamilyTag family, Budget budget = {});

    const RingModel& model() const { return model_; }
    FamilyTag family() const { return family_; }
    const Budget& budget() const { return budget_; }

    const OrbitIndex& orbits(int d);
    SparseVec coords(int d, const Element& v);

    int ambient_invariant_dim(int d);
    // Rows spanning (ideal piece) intersect (invariants), in orbit coords.
    const SparseReducer& ideal_reducer(int d);
    // Invariant dimension of the quotient at degree d.
    int invariant_dim(int d);
    // Ambient lifts (orbit sums) whose classes form a basis of the quotient
    // invariants at degree d.
    const std::vector<Element>& invariant_basis(int d);
    bool in_ideal(int d, const Element& v);

    // ideal rows plus all products of positive-degree invariant basis
    // elements; membership in this reducer = decomposable (or zero) class.
    const SparseReducer& decomposables_reducer(int d);
    int decomposables_dim(int d);
    // Orbit-coordinate vectors of the rank-contributing products.
    const std::vector<SparseVec>& decomposable_span_vectors(int d);

private:
    RingModel model_;
    FamilyTag family_;
    Budget budget_;
    std::map<int, OrbitIndex> orbits_;
    std::map<int, SparseReducer> ideal_;
    std::map<int, std::vector<Element>> basis_;
    std::map<int, SparseReducer> dec_;
    std::map<int, int> dec_dim_;
    std::map<int, std::vector<SparseVec>> dec_vectors_;
};

// Basis of the W-invariant subspace of the degree-d piece of the model.
std::vector<Element> invariant_basis(const RingModel& model, FamilyTag family, int d,
                                     const Budget& budget = {});
// Same subspace computed as the joint fixed points of the Coxeter generators
// acting on DegreeBasis coordinates; the independent cross-check route.
std::vector<Element> invariant_basis_fixed_points(const RingModel& model, FamilyTag family,
                                                  int d, const Budget& budget = {});

// Span of products of positive-degree invariants inside the invariant
// subspace of degree d, as orbit-coordinate vectors of degree d.
std::vector<SparseVec> decomposables_span(const RingModel& model, FamilyTag family, int d,
                                          const Budget& budget = {});

}  // namespace weylinv
