#include "weylinv/algebra.hpp"

#include <bit>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace weylinv {

AlgebraShape::AlgebraShape(int n_, int m_, bool with_t_) : n(n_), m(m_), with_t(with_t_) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("AlgebraShape: n and m must be >= 1");
    if (odd_count() > 64)
        throw std::invalid_argument("AlgebraShape: more than 64 odd generators unsupported");
}

int Monomial::degree() const {
    int d = 0;
    for (auto e : xexp) d += 2 * static_cast<int>(e);
    return d + std::popcount(odd);
}

std::uint64_t Monomial::ymask(const AlgebraShape& s) const {
    const std::uint64_t ybits = (s.n * s.m == 64) ? ~0ull : ((1ull << (s.n * s.m)) - 1);
    return odd & ybits;
}

std::uint64_t Monomial::tmask(const AlgebraShape& s) const { return odd >> (s.n * s.m); }

std::vector<int> Monomial::d_vector(const AlgebraShape& s) const {
    std::vector<int> d(s.n, 0);
    for (int i = 0; i < s.n; ++i) {
        d[i] = static_cast<int>(xexp[i]);
        for (int j = 0; j < s.m; ++j)
            if (odd >> s.ypos(i, j) & 1) ++d[i];
    }
    return d;
}

Element Element::unit(AlgebraShape s) {
    Element e(s);
    e.terms_[Monomial{std::vector<std::uint32_t>(s.n, 0), 0}] = 1;
    return e;
}

Element Element::x_var(AlgebraShape s, int i, std::uint32_t exp) {
    Monomial mono{std::vector<std::uint32_t>(s.n, 0), 0};
    mono.xexp.at(i) = exp;
    return term(s, mono, 1);
}

Element Element::y_var(AlgebraShape s, int i, int j) {
    if (i < 0 || i >= s.n || j < 0 || j >= s.m)
        throw std::invalid_argument("y_var: index out of range");
    Monomial mono{std::vector<std::uint32_t>(s.n, 0), 1ull << s.ypos(i, j)};
    return term(s, mono, 1);
}

Element Element::t_var(AlgebraShape s, int j) {
    if (!s.with_t || j < 0 || j >= s.m)
        throw std::invalid_argument("t_var: no such generator in this shape");
    Monomial mono{std::vector<std::uint32_t>(s.n, 0), 1ull << s.tpos(j)};
    return term(s, mono, 1);
}

Element Element::term(AlgebraShape s, Monomial mono, Rat coeff) {
    Element e(s);
    if (coeff != 0) e.terms_[std::move(mono)] = std::move(coeff);
    return e;
}

Rat Element::coeff(const Monomial& mono) const {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rat(0) : it->second;
}

int Element::degree() const {
    int d = -1;
    for (auto& [mono, c] : terms_) d = std::max(d, mono.degree());
    return d;
}

bool Element::homogeneous() const {
    int d = -1;
    for (auto& [mono, c] : terms_) {
        if (d == -1) d = mono.degree();
        else if (mono.degree() != d) return false;
    }
    return true;
}

bool Element::homogeneous(int d) const {
    for (auto& [mono, c] : terms_)
        if (mono.degree() != d) return false;
    return true;
}

void Element::add_term(const Monomial& mono, const Rat& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(mono, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r(shape_);
    for (auto& [mono, c] : terms_) r.terms_[mono] = -c;
    return r;
}

Element& Element::operator+=(const Element& o) {
    if (shape_ != o.shape_) throw std::invalid_argument("Element: shape mismatch");
    for (auto& [mono, c] : o.terms_) add_term(mono, c);
    return *this;
}

Element& Element::operator-=(const Element& o) {
    if (shape_ != o.shape_) throw std::invalid_argument("Element: shape mismatch");
    for (auto& [mono, c] : o.terms_) add_term(mono, -c);
    return *this;
}

Element& Element::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [mono, v] : terms_) v *= c;
    return *this;
}

Element operator+(Element a, const Element& b) { return a += b; }
Element operator-(Element a, const Element& b) { return a -= b; }
Element operator*(Element a, const Rat& c) { return a *= c; }
Element operator*(const Rat& c, Element a) { return a *= c; }

int odd_merge_sign(std::uint64_t a, std::uint64_t b) {
    if (a & b) return 0;
    // inversions = #{(p,q) : p in a, q in b, p > q}
    int inv = 0;
    std::uint64_t bb = b;
    while (bb) {
        int q = std::countr_zero(bb);
        bb &= bb - 1;
        inv += std::popcount(a & ~((q == 63) ? ~0ull : ((2ull << q) - 1)));
    }
    return (inv & 1) ? -1 : 1;
}

Element mul(const Element& a, const Element& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("mul: shape mismatch");
    Element r(a.shape());
    const int n = a.shape().n;
    for (auto& [ma, ca] : a.terms()) {
        for (auto& [mb, cb] : b.terms()) {
            int sign = odd_merge_sign(ma.odd, mb.odd);
            if (sign == 0) continue;
            Monomial mono{ma.xexp, ma.odd | mb.odd};
            for (int i = 0; i < n; ++i) mono.xexp[i] += mb.xexp[i];
            Rat c = ca * cb;
            if (sign < 0) c = -c;
            r.add_term(mono, c);
        }
    }
    return r;
}

Element operator*(const Element& a, const Element& b) { return mul(a, b); }

Element power(const Element& a, std::uint64_t k) {
    Element r = Element::unit(a.shape());
    for (std::uint64_t i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

Element extract_t_coefficient(const Element& a, std::uint64_t I) {
    if (!a.shape().with_t)
        throw std::invalid_argument("extract_t_coefficient: shape has no t block");
    Element r(a.shape());
    for (auto& [mono, c] : a.terms()) {
        if (mono.tmask(a.shape()) != I) continue;
        Monomial stripped{mono.xexp, mono.ymask(a.shape())};
        r.add_term(stripped, c);
    }
    return r;
}

Element drop_t_block(const Element& a) {
    const AlgebraShape& s = a.shape();
    if (!s.with_t) return a;
    AlgebraShape ns(s.n, s.m, false);
    Element r(ns);
    for (auto& [mono, c] : a.terms()) {
        if (mono.tmask(s) != 0)
            throw std::invalid_argument("drop_t_block: element has t factors");
        r.add_term(mono, c);
    }
    return r;
}

Element with_t_block(const Element& a) {
    const AlgebraShape& s = a.shape();
    if (s.with_t) return a;
    AlgebraShape ns(s.n, s.m, true);
    Element r(ns);
    for (auto& [mono, c] : a.terms()) r.add_term(mono, c);
    return r;
}

Element substitute_x(const Element& a, const std::vector<Element>& images) {
    if (images.empty()) throw std::invalid_argument("substitute_x: no images");
    const AlgebraShape target = images[0].shape();
    if (static_cast<int>(images.size()) != a.shape().n)
        throw std::invalid_argument("substitute_x: need one image per x variable");
    Element r(target);
    // power cache per (variable, exponent)
    std::vector<std::map<std::uint32_t, Element>> cache(images.size());
    auto pow_of = [&](int k, std::uint32_t e) -> const Element& {
        auto it = cache[k].find(e);
        if (it != cache[k].end()) return it->second;
        return cache[k].emplace(e, power(images[k], e)).first->second;
    };
    for (auto& [mono, c] : a.terms()) {
        if (mono.odd != 0)
            throw std::invalid_argument("substitute_x: element must be x-only");
        Element t = Element::unit(target) * c;
        for (int k = 0; k < a.shape().n; ++k)
            if (mono.xexp[k] > 0) t = mul(t, pow_of(k, mono.xexp[k]));
        r += t;
    }
    return r;
}

std::string to_string(const Monomial& mono, const AlgebraShape& s) {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) out << "*";
        first = false;
    };
    for (int i = 0; i < s.n; ++i) {
        if (mono.xexp[i] == 0) continue;
        sep();
        out << "x" << (i + 1);
        if (mono.xexp[i] > 1) out << "^" << mono.xexp[i];
    }
    for (int i = 0; i < s.n; ++i)
        for (int j = 0; j < s.m; ++j)
            if (mono.odd >> s.ypos(i, j) & 1) {
                sep();
                out << "y" << (i + 1) << "_" << (j + 1);
            }
    if (s.with_t)
        for (int j = 0; j < s.m; ++j)
            if (mono.odd >> s.tpos(j) & 1) {
                sep();
                out << "t" << (j + 1);
            }
    return out.str();
}

static std::string rat_to_string(const Rat& c) {
    std::ostringstream out;
    out << c.get_num();
    if (c.get_den() != 1) out << "/" << c.get_den();
    return out.str();
}

std::string to_string(const Element& a) {
    if (a.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [mono, c] : a.terms()) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::string ms = to_string(mono, a.shape());
        if (ms.empty()) {
            out << rat_to_string(abs);
        } else if (abs == 1) {
            out << ms;
        } else {
            out << rat_to_string(abs) << "*" << ms;
        }
    }
    return out.str();
}

namespace {

// One factor of a term: a number, or x{i}[^e] / y{i}_{j} / t{j}.
Element parse_factor(const std::string& tok, const AlgebraShape& s) {
    if (tok.empty()) throw std::invalid_argument("parse: empty factor");
    auto parse_int = [](const std::string& str, std::size_t& pos) {
        std::size_t start = pos;
        while (pos < str.size() && std::isdigit(static_cast<unsigned char>(str[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("parse: expected integer in '" + str + "'");
        return std::stol(str.substr(start, pos - start));
    };
    char c = tok[0];
    if (c == 'x' || c == 'y' || c == 't') {
        std::size_t pos = 1;
        long i = parse_int(tok, pos);
        if (c == 'x') {
            long e = 1;
            if (pos < tok.size()) {
                if (tok[pos] != '^') throw std::invalid_argument("parse: bad factor '" + tok + "'");
                ++pos;
                e = parse_int(tok, pos);
            }
            if (pos != tok.size() || i < 1 || i > s.n || e < 1)
                throw std::invalid_argument("parse: bad factor '" + tok + "'");
            return Element::x_var(s, static_cast<int>(i) - 1, static_cast<std::uint32_t>(e));
        }
        if (c == 'y') {
            if (pos >= tok.size() || tok[pos] != '_')
                throw std::invalid_argument("parse: bad factor '" + tok + "'");
            ++pos;
            long j = parse_int(tok, pos);
            if (pos != tok.size() || i < 1 || i > s.n || j < 1 || j > s.m)
                throw std::invalid_argument("parse: bad factor '" + tok + "'");
            return Element::y_var(s, static_cast<int>(i) - 1, static_cast<int>(j) - 1);
        }
        if (pos != tok.size() || i < 1 || i > s.m)
            throw std::invalid_argument("parse: bad factor '" + tok + "'");
        return Element::t_var(s, static_cast<int>(i) - 1);
    }
    // rational p[/q]
    for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch)) && ch != '/')
            throw std::invalid_argument("parse: bad factor '" + tok + "'");
    Rat r(tok);
    r.canonicalize();
    return Element::unit(s) * r;
}

Element parse_term(const std::string& term, const AlgebraShape& s) {
    Element r = Element::unit(s);
    std::size_t pos = 0;
    while (pos <= term.size()) {
        std::size_t star = term.find('*', pos);
        std::string tok = term.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        r = mul(r, parse_factor(tok, s));
        if (star == std::string::npos) break;
        pos = star + 1;
    }
    return r;
}

}  // namespace

Element parse_element(const std::string& text, AlgebraShape shape) {
    if (text == "0") return Element::zero(shape);
    Element r(shape);
    std::size_t pos = 0;
    int sign = 1;
    if (!text.empty() && text[0] == '-') {
        sign = -1;
        pos = 1;
    }
    while (pos < text.size()) {
        std::size_t plus = text.find(" + ", pos);
        std::size_t minus = text.find(" - ", pos);
        std::size_t next = std::min(plus, minus);
        std::string term = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
        r += parse_term(term, shape) * Rat(sign);
        if (next == std::string::npos) break;
        sign = (next == minus) ? -1 : 1;
        pos = next + 3;
    }
    return r;
}

}  // namespace weylinv
