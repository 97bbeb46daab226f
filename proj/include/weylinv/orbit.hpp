#pragma once

#include <map>
#include <vector>

#include "weylinv/algebra.hpp"
#include "weylinv/budget.hpp"
#include "weylinv/linalg.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

// All monomials of one degree, deterministic order (odd mask ascending, then
// x exponents lexicographic).  Budget-guarded.
std::vector<Monomial> enumerate_degree_monomials(const AlgebraShape& shape, int degree,
                                                 const Budget& budget = {});

// Orbit decomposition of a degree piece under the Weyl action.  W permutes
// monomials up to sign, so ambient invariants have a basis of signed orbit
// sums; an orbit is dead when some group element stabilizes a monomial with
// sign -1 (its orbit sum vanishes).
class OrbitIndex {
public:
    OrbitIndex(AlgebraShape shape, FamilyTag family, int degree, const Budget& budget = {});

    const AlgebraShape& shape() const { return shape_; }
    int degree() const { return degree_; }
    const std::vector<Monomial>& monomials() const { return monomials_; }
    int orbit_count() const { return static_cast<int>(orbit_rep_.size()); }
    // Dimension of the ambient invariant subspace (= number of live orbits).
    int dim() const { return static_cast<int>(coord_orbits_.size()); }

    bool orbit_alive(int orbit) const { return orbit_alive_[orbit]; }
    const Monomial& orbit_rep(int orbit) const { return monomials_[orbit_rep_[orbit]]; }
    Element orbit_sum(int orbit) const;
    // coordinate index of a live orbit, -1 for dead ones
    int coord_of_orbit(int orbit) const { return coord_of_orbit_[orbit]; }
    int orbit_of_coord(int coord) const { return coord_orbits_[coord]; }

    // Coordinates of an invariant element: its coefficients at the live orbit
    // representatives.  Throws if the element touches a dead orbit or carries
    // inconsistent coefficients across an orbit (i.e. is not invariant).
    SparseVec coords(const Element& v) const;
    // Inverse of coords on invariant elements.
    Element element_from_coords(const SparseVec& c) const;

private:
    AlgebraShape shape_;
    FamilyTag family_;
    int degree_;
    std::vector<Monomial> monomials_;
    std::map<Monomial, int> index_;
    std::vector<int> orbit_of_;    // monomial -> orbit
    std::vector<int> sign_of_;     // monomial -> sign relative to its orbit rep
    std::vector<int> orbit_rep_;   // orbit -> monomial index
    std::vector<bool> orbit_alive_;
    std::vector<int> coord_of_orbit_;
    std::vector<int> coord_orbits_;
    std::vector<std::vector<int>> orbit_members_;
};

}  // namespace weylinv
