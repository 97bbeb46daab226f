#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylinv/algebra.hpp"
#include "weylinv/budget.hpp"

namespace weylinv {

// Classical families.  U/SU carry the symmetric group, Sp/SOodd (= SO(2n+1))
// the signed symmetric group, SOeven (= SO(2n)) the even-signed one.
enum class FamilyTag { U, SU, Sp, SOodd, SOeven };

const char* family_name(FamilyTag t);
// Accepts the CLI spellings u, su, sp, so-odd, so-even.
FamilyTag parse_family(const std::string& s);
bool family_is_signed(FamilyTag t);

// Order of the Weyl group; throws BudgetError past the budget.
std::uint64_t weyl_order(FamilyTag t, int n, const Budget& budget = {});

// Signed permutation (sigma, signs): x_i -> signs[i] * x_{sigma(i)},
// y_i^j -> signs[i] * y_{sigma(i)}^j, t_j -> t_j.  0-based indices.
struct WeylElement {
    std::vector<int> sigma;
    std::vector<int> signs;  // entries +1 / -1

    static WeylElement identity(int n);
    // w1 after w2.
    static WeylElement compose(const WeylElement& w1, const WeylElement& w2);

    bool valid_for(FamilyTag t) const;
    bool operator==(const WeylElement&) const = default;
};

// Action on one monomial: image monomial plus its +-1 sign.
std::pair<Monomial, int> act(const WeylElement& w, const Monomial& mono, const AlgebraShape& s);
Element act(const WeylElement& w, const Element& a, FamilyTag family);

// Every group element exactly once, deterministic order (permutations in
// lexicographic order, sign patterns as binary counters within each).
std::vector<WeylElement> enumerate_weyl(FamilyTag t, int n, const Budget& budget = {});

// Coxeter generating set: adjacent transpositions, plus the last-coordinate
// sign flip (B/C) or the double-sign-flip swap of the last two (D).
std::vector<WeylElement> coxeter_generators(FamilyTag t, int n);

bool is_invariant(const Element& a, FamilyTag t, int n);

// Unnormalized Reynolds sum over the whole group.
Element reynolds(const Element& a, FamilyTag t, int n, const Budget& budget = {});

// Per-degree invariant dimensions of the free model Q[x] (x) Lambda(y)^m,
// by character averaging: coefficient of q^d in
//   (1/|W|) sum_w det(1 + q w)^m / det(1 - q^2 w).
std::vector<long> molien_dims(FamilyTag t, int n, int m, int max_degree,
                              const Budget& budget = {});

}  // namespace weylinv
