#include "weylinv/orbit.hpp"

#include <bit>
#include <deque>
#include <stdexcept>

namespace weylinv {

namespace {

// x-exponent vectors with given exponent sum, lexicographic order.
void enumerate_xexp(int n, int total, std::vector<std::uint32_t>& cur,
                    std::vector<std::vector<std::uint32_t>>& out) {
    if (static_cast<int>(cur.size()) == n - 1) {
        cur.push_back(static_cast<std::uint32_t>(total));
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = 0; e <= total; ++e) {
        cur.push_back(static_cast<std::uint32_t>(e));
        enumerate_xexp(n, total - e, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Monomial> enumerate_degree_monomials(const AlgebraShape& shape, int degree,
                                                 const Budget& budget) {
    if (degree < 0) return {};
    const int oc = shape.odd_count();
    std::vector<Monomial> out;
    // x exponent lists per even remainder, cached across masks
    std::map<int, std::vector<std::vector<std::uint32_t>>> xlists;
    for (std::uint64_t mask = 0; mask < (1ull << oc); ++mask) {
        int pc = std::popcount(mask);
        if (pc > degree || ((degree - pc) & 1)) continue;
        int xdeg = (degree - pc) / 2;
        auto it = xlists.find(xdeg);
        if (it == xlists.end()) {
            std::vector<std::vector<std::uint32_t>> lists;
            std::vector<std::uint32_t> cur;
            enumerate_xexp(shape.n, xdeg, cur, lists);
            it = xlists.emplace(xdeg, std::move(lists)).first;
        }
        for (const auto& xe : it->second) {
            out.push_back(Monomial{xe, mask});
            budget.check_monomials(out.size());
        }
    }
    return out;
}

OrbitIndex::OrbitIndex(AlgebraShape shape, FamilyTag family, int degree, const Budget& budget)
    : shape_(shape), family_(family), degree_(degree) {
    monomials_ = enumerate_degree_monomials(shape, degree, budget);
    for (int i = 0; i < static_cast<int>(monomials_.size()); ++i) index_[monomials_[i]] = i;
    const int count = static_cast<int>(monomials_.size());
    orbit_of_.assign(count, -1);
    sign_of_.assign(count, 0);
    const auto gens = coxeter_generators(family, shape.n);
    for (int start = 0; start < count; ++start) {
        if (orbit_of_[start] >= 0) continue;
        const int orbit = static_cast<int>(orbit_rep_.size());
        orbit_rep_.push_back(start);
        bool alive = true;
        orbit_of_[start] = orbit;
        sign_of_[start] = 1;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            for (const auto& g : gens) {
                auto [img, sign] = act(g, monomials_[cur], shape_);
                int to = index_.at(img);
                int new_sign = sign * sign_of_[cur];
                if (orbit_of_[to] < 0) {
                    orbit_of_[to] = orbit;
                    sign_of_[to] = new_sign;
                    queue.push_back(to);
                } else if (sign_of_[to] != new_sign) {
                    alive = false;
                }
            }
        }
        orbit_alive_.push_back(alive);
        coord_of_orbit_.push_back(alive ? static_cast<int>(coord_orbits_.size()) : -1);
        if (alive) coord_orbits_.push_back(orbit);
    }
    orbit_members_.resize(orbit_rep_.size());
    for (int i = 0; i < count; ++i) orbit_members_[orbit_of_[i]].push_back(i);
}

Element OrbitIndex::orbit_sum(int orbit) const {
    Element r(shape_);
    if (!orbit_alive_[orbit]) return r;
    for (int i : orbit_members_[orbit]) r.add_term(monomials_[i], sign_of_[i]);
    return r;
}

SparseVec OrbitIndex::coords(const Element& v) const {
    SparseVec out;
    std::map<int, Rat> by_coord;
    for (auto& [mono, c] : v.terms()) {
        auto it = index_.find(mono);
        if (it == index_.end())
            throw std::invalid_argument("OrbitIndex::coords: wrong degree piece");
        int orbit = orbit_of_[it->second];
        if (!orbit_alive_[orbit])
            throw std::invalid_argument("OrbitIndex::coords: element is not invariant (dead orbit)");
        Rat val = sign_of_[it->second] < 0 ? Rat(-c) : c;
        auto [jt, inserted] = by_coord.try_emplace(coord_of_orbit_[orbit], val);
        if (!inserted && jt->second != val)
            throw std::invalid_argument("OrbitIndex::coords: element is not invariant");
    }
    for (auto& [coord, c] : by_coord) out.emplace_back(coord, c);
    return out;
}

Element OrbitIndex::element_from_coords(const SparseVec& c) const {
    Element r(shape_);
    for (auto& [coord, val] : c) r += orbit_sum(coord_orbits_.at(coord)) * val;
    return r;
}

}  // namespace weylinv
