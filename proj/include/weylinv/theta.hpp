#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weylinv/algebra.hpp"
#include "weylinv/budget.hpp"
#include "weylinv/generators.hpp"
#include "weylinv/rings.hpp"

namespace weylinv {

enum class ThetaProvenance { ClosedForm, Expansion };

struct ThetaImage {
    GeneratorLabel label;  // map_z
    Element image;
    ThetaProvenance provenance;
};

// Sign relating canonical-order extraction of the t_I coefficient to the
// coefficient conventions of the closed forms: (-1)^{k(k-1)/2} for |I| = k.
int extraction_sign(int isize);

// Substitute x_k -> x_k + sum_j y_k^j t_j into a class in the x variables,
// expand exactly, and return the t_I coefficient for every I (t block
// dropped).  Works for every family, SO_even included.
std::map<std::uint64_t, Element> theta_expand(const Element& bg_class);
Element theta_expand_component(const Element& bg_class, std::uint64_t imask);

// Closed form for the image of z_{i,I}: i!/(i-|I|)! z(i-|I|+1, I) for U/SU,
// (2i)!/(2i-|I|)! w(i-(|I|+eps(|I|))/2+1, I) for Sp/SO_odd, with the falling
// factorial read as 0 when |I| > i (resp. 2i) and the extraction sign
// applied so that closed form and expansion agree exactly.
Element theta_closed(const GeneratorLabel& label, const AlgebraShape& s);

struct SurjectivityDegree {
    int degree = 0;
    int invariant_dim = 0;
    int image_dim = 0;
    bool surjective = false;
};

struct SurjectivityReport {
    FamilyTag family;
    int n = 0, m = 0, max_degree = 0;
    std::vector<SurjectivityDegree> degrees;  // 1..max_degree
    bool all_surjective = false;
};

// Per degree <= max_degree: does the subalgebra generated by all expansion
// images of the H^*(BG) generators fill the invariant part of the
// Coinvariant model?
SurjectivityReport check_surjectivity(FamilyTag family, int n, int m, int max_degree,
                                      const Budget& budget = {});

struct SoEvenWitnessReport {
    int n = 0, m = 0;
    int degree = 0;                 // 2(n-4)+6
    Element abar{AlgebraShape{}};     // the seed monomial
    Element witness{AlgebraShape{}};  // reynolds average of abar
    Rat abar_coeff;                 // coefficient of abar in the witness
    Rat abar_coeff_expected;        // 2^{n-1} (n-4)!
    bool coeff_ok = false;
    bool nonzero = false;           // class nonzero in the quotient
    bool indecomposable = false;    // not in ideal + products of invariants
    bool in_image = false;          // in span(image subalgebra + decomposables)
    bool surjective_at_degree = false;
};

// Builds the SO(2n) witness monomial
//   abar = x_1...x_{n-4} y_{n-3}^1 y_{n-2}^2 y_{n-1}^3 y_n^1 y_n^2 y_n^3,
// averages it over the Weyl group and tests nonzeroness, indecomposability
// and non-membership in the Theta image at its degree.  Needs n >= 4, m >= 3.
SoEvenWitnessReport so_even_witness(int n, int m, const Budget& budget = {});

struct ParitySplit {
    Element even, odd, residual;
};

// Splits by the parity pattern of d(monomial) = (xexp_i + #y-factors in row
// i)_i: all-even entries, all-odd entries, and everything mixed.
ParitySplit parity_split(const Element& a);

}  // namespace weylinv
