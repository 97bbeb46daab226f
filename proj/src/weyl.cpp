#include "weylinv/weyl.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace weylinv {

const char* family_name(FamilyTag t) {
    switch (t) {
        case FamilyTag::U: return "u";
        case FamilyTag::SU: return "su";
        case FamilyTag::Sp: return "sp";
        case FamilyTag::SOodd: return "so-odd";
        case FamilyTag::SOeven: return "so-even";
    }
    return "?";
}

FamilyTag parse_family(const std::string& s) {
    if (s == "u") return FamilyTag::U;
    if (s == "su") return FamilyTag::SU;
    if (s == "sp") return FamilyTag::Sp;
    if (s == "so-odd") return FamilyTag::SOodd;
    if (s == "so-even") return FamilyTag::SOeven;
    throw std::invalid_argument("unknown family '" + s + "' (expected u, su, sp, so-odd, so-even)");
}

bool family_is_signed(FamilyTag t) {
    return t == FamilyTag::Sp || t == FamilyTag::SOodd || t == FamilyTag::SOeven;
}

std::uint64_t weyl_order(FamilyTag t, int n, const Budget& budget) {
    if (n < 1) throw std::invalid_argument("weyl_order: n >= 1 required");
    if (t == FamilyTag::SOeven && n < 2)
        throw std::invalid_argument("SO_even requires n >= 2");
    std::uint64_t order = 1;
    for (int i = 2; i <= n; ++i) {
        order *= static_cast<std::uint64_t>(i);
        budget.check_group(order);
    }
    int sign_bits = 0;
    if (t == FamilyTag::Sp || t == FamilyTag::SOodd) sign_bits = n;
    if (t == FamilyTag::SOeven) sign_bits = n - 1;
    for (int i = 0; i < sign_bits; ++i) {
        order *= 2;
        budget.check_group(order);
    }
    return order;
}

WeylElement WeylElement::identity(int n) {
    WeylElement w;
    w.sigma.resize(n);
    std::iota(w.sigma.begin(), w.sigma.end(), 0);
    w.signs.assign(n, 1);
    return w;
}

WeylElement WeylElement::compose(const WeylElement& w1, const WeylElement& w2) {
    const int n = static_cast<int>(w1.sigma.size());
    WeylElement c;
    c.sigma.resize(n);
    c.signs.resize(n);
    for (int i = 0; i < n; ++i) {
        c.sigma[i] = w1.sigma[w2.sigma[i]];
        c.signs[i] = w2.signs[i] * w1.signs[w2.sigma[i]];
    }
    return c;
}

bool WeylElement::valid_for(FamilyTag t) const {
    int prod = 1;
    for (int s : signs) {
        if (s != 1 && s != -1) return false;
        prod *= s;
    }
    switch (t) {
        case FamilyTag::U:
        case FamilyTag::SU:
            return std::all_of(signs.begin(), signs.end(), [](int s) { return s == 1; });
        case FamilyTag::Sp:
        case FamilyTag::SOodd:
            return true;
        case FamilyTag::SOeven:
            return prod == 1;
    }
    return false;
}

std::pair<Monomial, int> act(const WeylElement& w, const Monomial& mono, const AlgebraShape& s) {
    const int n = s.n, m = s.m;
    Monomial out{std::vector<std::uint32_t>(n, 0), 0};
    int sign = 1;
    for (int i = 0; i < n; ++i) {
        out.xexp[w.sigma[i]] = mono.xexp[i];
        if (w.signs[i] < 0 && (mono.xexp[i] & 1)) sign = -sign;
    }
    // Map odd factors in original canonical order and count inversions of the
    // image positions.
    int mapped[64];
    int k = 0;
    std::uint64_t bits = mono.odd;
    while (bits) {
        int p = std::countr_zero(bits);
        bits &= bits - 1;
        int q;
        if (p < n * m) {
            int i = p / m, j = p % m;
            q = s.ypos(w.sigma[i], j);
            if (w.signs[i] < 0) sign = -sign;
        } else {
            q = p;  // t generators are fixed
        }
        mapped[k++] = q;
    }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (mapped[a] > mapped[b]) sign = -sign;
    for (int a = 0; a < k; ++a) out.odd |= 1ull << mapped[a];
    return {out, sign};
}

Element act(const WeylElement& w, const Element& a, FamilyTag family) {
    if (!w.valid_for(family))
        throw std::invalid_argument("act: sign pattern invalid for family");
    if (static_cast<int>(w.sigma.size()) != a.shape().n)
        throw std::invalid_argument("act: rank mismatch");
    Element r(a.shape());
    for (auto& [mono, c] : a.terms()) {
        auto [img, sign] = act(w, mono, a.shape());
        r.add_term(img, sign < 0 ? Rat(-c) : c);
    }
    return r;
}

std::vector<WeylElement> enumerate_weyl(FamilyTag t, int n, const Budget& budget) {
    const std::uint64_t order = weyl_order(t, n, budget);
    std::vector<WeylElement> out;
    out.reserve(order);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const bool with_signs = family_is_signed(t);
    do {
        if (!with_signs) {
            WeylElement w;
            w.sigma = perm;
            w.signs.assign(n, 1);
            out.push_back(std::move(w));
            continue;
        }
        for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
            if (t == FamilyTag::SOeven && (std::popcount(mask) & 1)) continue;
            WeylElement w;
            w.sigma = perm;
            w.signs.resize(n);
            for (int i = 0; i < n; ++i) w.signs[i] = (mask >> i & 1) ? -1 : 1;
            out.push_back(std::move(w));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::vector<WeylElement> coxeter_generators(FamilyTag t, int n) {
    if (t == FamilyTag::SOeven && n < 2)
        throw std::invalid_argument("SO_even requires n >= 2");
    std::vector<WeylElement> gens;
    for (int i = 0; i + 1 < n; ++i) {
        WeylElement w = WeylElement::identity(n);
        std::swap(w.sigma[i], w.sigma[i + 1]);
        gens.push_back(std::move(w));
    }
    if (t == FamilyTag::Sp || t == FamilyTag::SOodd) {
        WeylElement w = WeylElement::identity(n);
        w.signs[n - 1] = -1;
        gens.push_back(std::move(w));
    } else if (t == FamilyTag::SOeven) {
        WeylElement w = WeylElement::identity(n);
        std::swap(w.sigma[n - 2], w.sigma[n - 1]);
        w.signs[n - 2] = -1;
        w.signs[n - 1] = -1;
        gens.push_back(std::move(w));
    }
    return gens;
}

bool is_invariant(const Element& a, FamilyTag t, int n) {
    for (const auto& g : coxeter_generators(t, n))
        if (act(g, a, t) != a) return false;
    return true;
}

Element reynolds(const Element& a, FamilyTag t, int n, const Budget& budget) {
    Element r(a.shape());
    for (const auto& w : enumerate_weyl(t, n, budget)) r += act(w, a, t);
    return r;
}

namespace {

using Poly = std::vector<Rat>;  // truncated power series, index = degree

void poly_mul_inplace(Poly& a, const Poly& b, int D) {
    Poly r(D + 1);
    for (int i = 0; i <= D; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= D; ++j)
            if (b[j] != 0) r[i + j] += a[i] * b[j];
    }
    a = std::move(r);
}

Poly poly_inverse(const Poly& a, int D) {
    // a[0] must be nonzero
    Poly r(D + 1);
    r[0] = 1 / a[0];
    for (int d = 1; d <= D; ++d) {
        Rat s = 0;
        for (int j = 1; j <= d; ++j)
            if (j < static_cast<int>(a.size()) && a[j] != 0) s += a[j] * r[d - j];
        r[d] = -s * r[0];
    }
    return r;
}

}  // namespace

std::vector<long> molien_dims(FamilyTag t, int n, int m, int max_degree, const Budget& budget) {
    const int D = max_degree;
    Poly total(D + 1);
    std::uint64_t order = 0;
    for (const auto& w : enumerate_weyl(t, n, budget)) {
        ++order;
        // cycle structure of sigma with per-cycle sign products
        std::vector<bool> seen(n, false);
        Poly num(D + 1), den(D + 1);
        num[0] = 1;
        den[0] = 1;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0, s = 1, j = i;
            do {
                seen[j] = true;
                s *= w.signs[j];
                j = w.sigma[j];
                ++len;
            } while (j != i);
            // det(I + q C) = 1 - s (-q)^len;  det(I - q^2 C) = 1 - s q^(2 len)
            Poly f(D + 1);
            f[0] = 1;
            if (len <= D) f[len] = (len % 2 == 0) ? Rat(-s) : Rat(s);
            poly_mul_inplace(num, f, D);
            Poly g(D + 1);
            g[0] = 1;
            if (2 * len <= D) g[2 * len] = -s;
            poly_mul_inplace(den, g, D);
        }
        Poly term(D + 1);
        term[0] = 1;
        for (int k = 0; k < m; ++k) poly_mul_inplace(term, num, D);
        poly_mul_inplace(term, poly_inverse(den, D), D);
        for (int d = 0; d <= D; ++d) total[d] += term[d];
    }
    std::vector<long> dims(D + 1);
    for (int d = 0; d <= D; ++d) {
        Rat c = total[d] / Rat(static_cast<unsigned long>(order));
        if (c.get_den() != 1)
            throw std::logic_error("molien_dims: non-integer coefficient");
        dims[d] = static_cast<long>(c.get_num().get_si());
    }
    return dims;
}

}  // namespace weylinv
