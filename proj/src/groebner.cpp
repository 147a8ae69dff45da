#include "socle/groebner.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "socle/errors.hpp"

namespace socle {

bool GroebnerBasis::is_unit() const noexcept {
    return generators_.size() == 1 && generators_.front().is_constant() && !generators_.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    out.reserve(generators_.size());
    for (const auto& g : generators_) out.push_back(g.leading_monomial());
    return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return a.generators_.size() == b.generators_.size() && std::equal(a.generators_.begin(), a.generators_.end(), b.generators_.begin());
}

namespace {

// Subtracts c * m * g from v[head..], where the leading term of c*m*g hits v[head].
void reduce_tail_from(std::vector<Term>& v, std::size_t head, const Scalar& c, const Monomial& m, const Polynomial& g,
                      const PolyRing& ring) {
    const auto& field = ring.field();
    const auto& order = ring.order();
    const auto& gt = g.terms();
    std::vector<Term> out;
    out.reserve(v.size() - head + gt.size());
    std::size_t i = head, j = 0;
    Monomial gm;
    bool have = false;
    while (i < v.size() || j < gt.size()) {
        if (j < gt.size() && !have) {
            gm = gt[j].mono * m;
            have = true;
        }
        std::strong_ordering cmp = std::strong_ordering::greater;
        if (i < v.size() && j < gt.size()) cmp = compare_unchecked(v[i].mono, gm, order);
        else if (i >= v.size()) cmp = std::strong_ordering::less;
        if (cmp > 0) {
            out.push_back(std::move(v[i++]));
        } else if (cmp < 0) {
            out.push_back({field.neg(field.mul(c, gt[j].coeff)), gm});
            ++j;
            have = false;
        } else {
            Scalar s = field.sub(v[i].coeff, field.mul(c, gt[j].coeff));
            if (s != 0) out.push_back({std::move(s), gm});
            ++i;
            ++j;
            have = false;
        }
    }
    v.resize(head);
    v.insert(v.end(), std::make_move_iterator(out.begin()), std::make_move_iterator(out.end()));
}

struct Reducers {
    std::vector<const Polynomial*> polys;
    std::vector<Scalar> inv_lc;

    Reducers() = default;
    explicit Reducers(std::span<const Polynomial> G) {
        for (const auto& g : G) add(g);
    }

    void add(const Polynomial& g) {
        if (g.is_zero()) return;
        polys.push_back(&g);
        inv_lc.push_back(g.ring()->field().inv(g.leading_coeff()));
    }

    // Shortest reducer whose leading monomial divides m, or -1.
    int find(const Monomial& m) const {
        int best = -1;
        for (std::size_t k = 0; k < polys.size(); ++k) {
            if (polys[k]->leading_monomial().divides(m) &&
                (best < 0 || polys[k]->size() < polys[static_cast<std::size_t>(best)]->size()))
                best = static_cast<int>(k);
        }
        return best;
    }
};

// With top_only the loop stops at the first irreducible term.
Polynomial reduce_with(const Polynomial& f, const Reducers& red, bool top_only = false) {
    if (f.is_zero() || red.polys.empty()) return f;
    const auto& ring = *f.ring();
    const auto& field = ring.field();
    std::vector<Term> v = f.terms();
    std::size_t head = 0;
    while (head < v.size()) {
        const int k = red.find(v[head].mono);
        if (k < 0) {
            if (top_only) break;
            ++head;
            continue;
        }
        const Polynomial& g = *red.polys[static_cast<std::size_t>(k)];
        const Scalar c = field.mul(v[head].coeff, red.inv_lc[static_cast<std::size_t>(k)]);
        const Monomial m = g.leading_monomial().quotient_of(v[head].mono);
        reduce_tail_from(v, head, c, m, g, ring);
    }
    // v is strictly decreasing and free of zeros by construction.
    return Polynomial::from_sorted_terms(f.ring(), std::move(v));
}

void check_ring(const Polynomial& f, std::span<const Polynomial> G, const char* where) {
    for (const auto& g : G)
        if (!g.is_zero() && !f.is_zero() && !same_ring(f.ring(), g.ring())) throw RingMismatch(where);
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G) {
    check_ring(f, G, "normal_form");
    return reduce_with(f, Reducers(G));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) { return normal_form(f, gb.generators()); }

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring())) throw RingMismatch("s_polynomial");
    const auto& field = f.ring()->field();
    const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
    Polynomial a = f.mul_term(field.inv(f.leading_coeff()), f.leading_monomial().quotient_of(l));
    Polynomial b = g.mul_term(field.inv(g.leading_coeff()), g.leading_monomial().quotient_of(l));
    return a - b;
}

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis) {
    std::erase_if(basis, [](const Polynomial& p) { return p.is_zero(); });
    if (basis.empty()) return basis;
    const RingPtr ring = basis.front().ring();
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
        return ring->greater(b.leading_monomial(), a.leading_monomial());
    });
    std::vector<Polynomial> minimal;
    for (auto& g : basis) {
        bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                     [&](const Polynomial& h) { return h.leading_monomial().divides(g.leading_monomial()); });
        if (!redundant) minimal.push_back(g.monic());
    }
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t l = 0; l < minimal.size(); ++l)
            if (l != k) others.push_back(l < k ? reduced[l] : minimal[l]);
        reduced.push_back(reduce_with(minimal[k], Reducers(others)).monic());
    }
    return reduced;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring) {
    for (const auto& g : gens)
        if (!g.is_zero() && !same_ring(g.ring(), ring)) throw RingMismatch("buchberger");

    // A deque keeps element addresses stable for the reducer table.
    std::deque<Polynomial> G;
    std::vector<std::uint32_t> sugar;
    std::vector<bool> active;
    std::vector<Pair> pairs;

    auto unit_basis = [&] { return GroebnerBasis(ring, {Polynomial::constant(ring, 1)}, true); };

    // Gebauer-Moeller installation of a new basis element.
    auto install = [&](Polynomial h, std::uint32_t s) {
        const std::size_t t = G.size();
        const Monomial& lt = h.leading_monomial();
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            if (!active[i]) continue;
            const Monomial l = lcm(G[i].leading_monomial(), lt);
            const std::uint32_t si = sugar[i] + l.degree() - G[i].leading_monomial().degree();
            const std::uint32_t st = s + l.degree() - lt.degree();
            fresh.push_back({i, t, l, std::max(si, st)});
        }
        // Chain criterion among the new pairs.
        std::vector<Pair> kept;
        for (std::size_t a = 0; a < fresh.size(); ++a) {
            const auto& p = fresh[a];
            const bool prime = coprime(G[p.i].leading_monomial(), lt);
            bool dominated = false;
            if (!prime) {
                for (std::size_t b = a + 1; b < fresh.size() && !dominated; ++b)
                    dominated = fresh[b].lcm.divides(p.lcm);
                for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
                    dominated = kept[b].lcm.divides(p.lcm);
            }
            if (prime || !dominated) kept.push_back(p);
        }
        // Product criterion.
        std::erase_if(kept, [&](const Pair& p) { return coprime(G[p.i].leading_monomial(), lt); });
        // Old pairs made redundant by the new leading monomial.
        std::erase_if(pairs, [&](const Pair& p) {
            if (!lt.divides(p.lcm)) return false;
            const Monomial li = lcm(G[p.i].leading_monomial(), lt);
            const Monomial lj = lcm(G[p.j].leading_monomial(), lt);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        pairs.insert(pairs.end(), kept.begin(), kept.end());
        for (std::size_t i = 0; i < t; ++i)
            if (active[i] && lt.divides(G[i].leading_monomial())) active[i] = false;
        G.push_back(std::move(h));
        sugar.push_back(s);
        active.push_back(true);
    };

    auto current_reducers = [&] {
        std::vector<Polynomial> act;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (active[i]) act.push_back(G[i]);
        return act;
    };
    auto reducer_table = [&] {
        Reducers red;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (active[i]) red.add(G[i]);
        return red;
    };

    // Process inputs by increasing degree so the sugar strategy starts low.
    std::vector<Polynomial> inputs;
    for (const auto& g : gens)
        if (!g.is_zero()) inputs.push_back(g.monic());
    std::stable_sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return ring->greater(b.leading_monomial(), a.leading_monomial());
    });
    for (auto& g : inputs) {
        if (g.is_constant()) return unit_basis();
        Polynomial h = reduce_with(g, reducer_table(), true);
        if (h.is_zero()) continue;
        if (h.is_constant()) return unit_basis();
        install(h.monic(), static_cast<std::uint32_t>(g.degree()));
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            const auto c = compare_unchecked(a.lcm, b.lcm, ring->order());
            if (c != 0) return c < 0;
            return std::tie(a.j, a.i) < std::tie(b.j, b.i);
        });
        const Pair p = *best;
        pairs.erase(best);
        const Polynomial s = s_polynomial(G[p.i], G[p.j]);
        Polynomial h = reduce_with(s, reducer_table(), true);
        if (h.is_zero()) continue;
        if (h.is_constant()) return unit_basis();
        install(h.monic(), p.sugar);
    }

    return GroebnerBasis(ring, reduce_basis(current_reducers()), true);
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring, const MonomialOrder& order) {
    const RingPtr target = ring->order() == order ? ring : ring->with_order(order);
    std::vector<Polynomial> moved;
    moved.reserve(gens.size());
    for (const auto& g : gens) moved.push_back(g.rebase(target));
    return buchberger(moved, target);
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.is_zero()) return true;
    return normal_form(f, gb).is_zero();
}

bool is_groebner_basis(std::span<const Polynomial> G) {
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = i + 1; j < G.size(); ++j)
            if (!normal_form(s_polynomial(G[i], G[j]), G).is_zero()) return false;
    return true;
}

}  // namespace socle
