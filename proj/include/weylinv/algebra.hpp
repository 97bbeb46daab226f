#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace weylinv {

using Rat = mpq_class;

// Shape of the graded-commutative algebra
//   Q[x_1..x_n] (x) Lambda(y_i^j : 1<=i<=n, 1<=j<=m) (x) Lambda(t_1..t_m)
// with |x_i|=2, |y_i^j|=1, |t_j|=1.  The t block exists only when with_t.
struct AlgebraShape {
    int n = 1;
    int m = 1;
    bool with_t = false;

    AlgebraShape() = default;
    AlgebraShape(int n_, int m_, bool with_t_ = false);

    int odd_count() const { return n * m + (with_t ? m : 0); }
    // Canonical odd order: y_1^1, y_1^2, ..., y_n^m, t_1, ..., t_m.
    int ypos(int i, int j) const { return i * m + j; }  // 0-based i, j
    int tpos(int j) const { return n * m + j; }         // 0-based j

    bool operator==(const AlgebraShape&) const = default;
};

// One monomial: x exponents plus a bitmask over the odd generators in
// canonical order.  A set bit means the generator appears (exactly once).
struct Monomial {
    std::vector<std::uint32_t> xexp;
    std::uint64_t odd = 0;

    int degree() const;
    std::uint64_t ymask(const AlgebraShape& s) const;
    std::uint64_t tmask(const AlgebraShape& s) const;
    // d(z) = (xexp_i + #(y factors in row i))_i, the parity vector of Lemma-"d" type
    // monomial bookkeeping.
    std::vector<int> d_vector(const AlgebraShape& s) const;

    auto operator<=>(const Monomial&) const = default;
};

// Sparse element: finite map monomial -> nonzero rational.  Immutable in
// spirit; all operations return fresh values.
class Element {
public:
    explicit Element(AlgebraShape shape) : shape_(shape) {}

    static Element zero(AlgebraShape s) { return Element(s); }
    static Element unit(AlgebraShape s);
    static Element x_var(AlgebraShape s, int i, std::uint32_t exp = 1);
    static Element y_var(AlgebraShape s, int i, int j);
    static Element t_var(AlgebraShape s, int j);
    static Element term(AlgebraShape s, Monomial mono, Rat coeff);

    const AlgebraShape& shape() const { return shape_; }
    const std::map<Monomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    Rat coeff(const Monomial& mono) const;

    // -1 for the zero element.
    int degree() const;
    bool homogeneous() const;
    bool homogeneous(int d) const;

    void add_term(const Monomial& mono, const Rat& coeff);

    Element operator-() const;
    Element& operator+=(const Element& o);
    Element& operator-=(const Element& o);
    Element& operator*=(const Rat& c);

    bool operator==(const Element&) const = default;

private:
    AlgebraShape shape_;
    std::map<Monomial, Rat> terms_;
};

Element operator+(Element a, const Element& b);
Element operator-(Element a, const Element& b);
Element operator*(Element a, const Rat& c);
Element operator*(const Rat& c, Element a);

// Koszul sign (+1/-1) of merging two disjoint canonical odd blocks a, b into
// canonical order; 0 if they share a generator.
int odd_merge_sign(std::uint64_t a, std::uint64_t b);

// Graded-commutative product.  Shapes must agree.
Element mul(const Element& a, const Element& b);
Element operator*(const Element& a, const Element& b);

Element power(const Element& a, std::uint64_t k);

// Coefficient c_I of t_I in a = sum_I mul(c_I, t_I), with t_I on the right in
// canonical order.  I is a 0-based subset of [m] given as a bitmask.
Element extract_t_coefficient(const Element& a, std::uint64_t I);

// Reinterpret a t-free element of a with_t shape in the (n, m, no-t) shape.
Element drop_t_block(const Element& a);
// Embed an element of the (n, m, no-t) shape into the with_t shape.
Element with_t_block(const Element& a);

// Substitute x_k -> images[k] into an element supported on x variables only.
// The images share a common shape which becomes the shape of the result.
Element substitute_x(const Element& a, const std::vector<Element>& images);

// Bit-exact text form: factors "x{i}[^e]", "y{i}_{j}", "t{j}" joined by "*",
// terms joined by " + " / " - ", rationals "p[/q]".
std::string to_string(const Monomial& mono, const AlgebraShape& s);
std::string to_string(const Element& a);
// Parses the same grammar; throws std::invalid_argument on malformed input.
Element parse_element(const std::string& text, AlgebraShape shape);

}  // namespace weylinv
