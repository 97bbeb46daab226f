#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weylinv/algebra.hpp"
#include "weylinv/budget.hpp"
#include "weylinv/rings.hpp"
#include "weylinv/weyl.hpp"

namespace weylinv {

// hom_z: z(d,I), hom_w: w(d,I), map_z: the generator z_{i,I} of the
// mapping-space model (param is i there).
enum class LabelKind { HomZ, HomW, MapZ };

// epsilon(k): 0 for even k, 1 for odd k
inline int eps(int k) { return k & 1; }

struct GeneratorLabel {
    LabelKind kind;
    FamilyTag family;
    int param;            // d (hom_z/hom_w) or i (map_z)
    std::vector<int> I;   // nonempty subset of [m], 1-based, ascending

    int isize() const { return static_cast<int>(I.size()); }
    std::uint64_t imask() const;  // bit j-1 for each j in I
    // 2d+|I|-2 / 4d+|I|+2eps(|I|)-4 / |z_i|-|I| with |z_i|=2i or 4i
    int degree() const;
    std::string to_string() const;

    bool operator==(const GeneratorLabel&) const = default;
};

std::vector<int> set_from_mask(std::uint64_t mask);

// z(d,I) = sum_k x_k^{d-1} y_k^I
Element z_gen(const AlgebraShape& s, int d, std::uint64_t imask);
// w(d,I) = sum_k x_k^{2d+eps(|I|)-2} y_k^I
Element w_gen(const AlgebraShape& s, int d, std::uint64_t imask);

// The element a hom-side label names (map_z labels have no direct realization
// here; their images live in the theta module).
Element realize(const GeneratorLabel& label, const AlgebraShape& s);

// S(m,G): U: {z(d,I) : d>=1, I nonempty, d+|I|-1<=n}; SU drops d=1,|I|=1;
// Sp/SO_odd: {w(d,I) : 2d+|I|+eps(|I|)-2<=2n}.  Ordered by (degree, d, I
// lexicographic).  SO_even is unsupported.
std::vector<GeneratorLabel> build_S(FamilyTag family, int n, int m);

// Mapping-space generators z_{i,I}: 1<=i<=n (2<=i for SU), I nonempty,
// |z_i|>|I|.  Same ordering.  SO_even is unsupported.
std::vector<GeneratorLabel> build_Smap(FamilyTag family, int n, int m);

// Freeness bound d(m,G): 2n-m for U/SU, 2n+1 for Sp/SO_odd.
int freeness_bound(FamilyTag family, int n, int m);

// Dimension series of the free graded-commutative algebra on the labels
// (polynomial on even degrees, exterior on odd), degrees 0..max_degree.
std::vector<long> free_algebra_dims(const std::vector<GeneratorLabel>& labels, int max_degree);

struct GenerationDegreeReport {
    int degree = 0;
    int invariant_dim = 0;
    int subalgebra_dim = 0;
    long free_dim = 0;
    bool generation = false;            // subalgebra fills the invariants
    std::optional<bool> freeness;       // only inside the d(m,G) range
    bool minimal = false;               // this degree's labels independent mod decomposables
};

struct GenerationReport {
    FamilyTag family;
    int n = 0, m = 0, max_degree = 0;
    int d_bound = 0;                    // d(m,G)
    std::vector<GeneratorLabel> labels;
    std::vector<GenerationDegreeReport> degrees;  // degrees 1..max_degree
    bool all_generated = false;
    bool all_free_in_range = false;
    bool all_minimal = false;
};

// Checks Theorem-level claims at desk scale against the Coinvariant model:
// generation at every degree <= D, freeness for degrees <= d(m,G), and
// minimality of the degree-d labels modulo decomposables.
GenerationReport verify_generation(FamilyTag family, int n, int m, int max_degree,
                                   const Budget& budget = {});

}  // namespace weylinv
