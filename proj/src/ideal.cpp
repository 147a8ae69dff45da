#include "socle/ideal.hpp"

#include <algorithm>
#include <bit>
#include <mutex>

#include "socle/errors.hpp"
#include "socle/hilbert_series.hpp"
#include "socle/parser.hpp"

namespace socle {

namespace {

std::mutex g_store_mutex;
std::shared_ptr<GroebnerStore> g_store;

}  // namespace

void set_groebner_store(std::shared_ptr<GroebnerStore> store) {
    std::lock_guard lock(g_store_mutex);
    g_store = std::move(store);
}

std::shared_ptr<GroebnerStore> groebner_store() {
    std::lock_guard lock(g_store_mutex);
    return g_store;
}

struct Ideal::Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    if (!ring_) throw PreconditionError("Ideal", "missing ring");
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (!same_ring(g.ring(), ring_)) throw RingMismatch("Ideal");
        homogeneous_ = homogeneous_ && g.is_homogeneous();
        monomial_ = monomial_ && g.is_monomial();
        gens_.push_back(std::move(g));
    }
}

Ideal Ideal::unit(RingPtr ring) {
    auto one = Polynomial::constant(ring, 1);
    return Ideal(std::move(ring), {std::move(one)});
}

Ideal Ideal::maximal(RingPtr ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(Polynomial::variable(ring, i));
    return Ideal(std::move(ring), std::move(vars));
}

Ideal Ideal::parse(RingPtr ring, const std::string& generators) {
    auto gens = parse_polynomial_list(generators, ring);
    return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::from_groebner(const GroebnerBasis& gb) {
    Ideal I(gb.ring(), gb.generators());
    I.cache_->bases.emplace_back(gb.order(), std::make_shared<const GroebnerBasis>(gb));
    return I;
}

const GroebnerBasis& Ideal::groebner() const { return groebner(ring_->order()); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const {
    std::lock_guard lock(cache_->mutex);
    for (const auto& [o, gb] : cache_->bases)
        if (o == order) return *gb;

    const RingPtr target = ring_->order() == order ? ring_ : ring_->with_order(order);
    std::vector<Polynomial> moved;
    moved.reserve(gens_.size());
    for (const auto& g : gens_) moved.push_back(target == ring_ ? g : g.rebase(target));

    std::shared_ptr<const GroebnerBasis> gb;
    auto store = groebner_store();
    if (store) {
        if (auto hit = store->load(target, moved)) gb = std::make_shared<const GroebnerBasis>(target, std::move(*hit), true);
    }
    if (!gb) {
        gb = std::make_shared<const GroebnerBasis>(buchberger(moved, target));
        if (store) store->save(target, moved, *gb);
    }
    cache_->bases.emplace_back(order, gb);
    return *gb;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (!same_ring(f.ring(), ring_)) throw RingMismatch("Ideal::contains");
    return ideal_member(f, groebner());
}

bool Ideal::contains(const Ideal& other) const {
    if (!same_ring(other.ring_, ring_)) throw RingMismatch("Ideal::contains");
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

std::vector<Monomial> Ideal::leading_monomials() const { return groebner().leading_monomials(); }

bool operator==(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring_, b.ring_)) return false;
    return a.groebner() == b.groebner();
}

std::string Ideal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + socle::to_string(gens_[i]);
    return s + ")";
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> gens) {
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::vector<Polynomial> others;
            others.reserve(gens.size());
            for (std::size_t l = 0; l < gens.size(); ++l)
                if (l != k) others.push_back(gens[l]);
            Polynomial r = normal_form(gens[k], others).monic();
            if (!(r == gens[k])) {
                const bool lead_changed = r.is_zero() || !(r.leading_monomial() == gens[k].leading_monomial());
                if (lead_changed) changed = true;
                gens[k] = std::move(r);
            }
        }
        std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    }
    for (auto& g : gens) g = g.monic();
    return gens;
}

namespace {

void check_same(const Ideal& I, const Ideal& J, const char* where) {
    if (!same_ring(I.ring(), J.ring())) throw RingMismatch(where);
}

}  // namespace

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    check_same(I, J, "ideal_sum");
    auto gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return Ideal(I.ring(), interreduce(std::move(gens)));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    check_same(I, J, "ideal_product");
    std::vector<Polynomial> gens;
    for (const auto& f : I.generators())
        for (const auto& g : J.generators()) gens.push_back(f * g);
    return Ideal(I.ring(), interreduce(std::move(gens)));
}

Ideal ideal_power(const Ideal& I, unsigned n) {
    if (n == 0) throw PreconditionError("ideal_power", "exponent must be positive");
    Ideal acc = I;
    for (unsigned k = 1; k < n; ++k) acc = ideal_product(acc, I);
    return acc;
}

Ideal intersect(const Ideal& I, const Ideal& J) {
    check_same(I, J, "intersect");
    const RingPtr& ring = I.ring();
    if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);

    std::string aux = "_t";
    while (ring->index_of(aux) >= 0) aux += "t";
    const std::size_t n = ring->nvars();
    const RingPtr big = ring->with_extra_variable(aux, MonomialOrder::eliminate_from(n));
    const Polynomial t = Polynomial::variable(big, n);
    const Polynomial one_minus_t = Polynomial::constant(big, 1) - t;

    std::vector<Polynomial> gens;
    for (const auto& f : I.generators()) gens.push_back(t * f.rebase(big));
    for (const auto& g : J.generators()) gens.push_back(one_minus_t * g.rebase(big));
    const GroebnerBasis gb = buchberger(gens, big);

    std::vector<Polynomial> kept;
    for (const auto& g : gb.generators())
        if (g.leading_monomial()[n] == 0) kept.push_back(g.rebase(ring));
    // With t ranked first, the t-free part is the reduced basis under the restricted order.
    if (ring->order() == MonomialOrder::degrevlex()) return Ideal::from_groebner(GroebnerBasis(ring, std::move(kept), true));
    return Ideal(ring, std::move(kept));
}

Ideal colon(const Ideal& I, const Polynomial& g) {
    if (g.is_zero()) throw PreconditionError("colon", "cannot take the colon by the zero ideal");
    if (!same_ring(I.ring(), g.ring())) throw RingMismatch("colon");
    if (g.is_constant()) return I;
    if (I.is_zero()) return I;
    const Ideal both = intersect(I, Ideal(I.ring(), {g}));
    std::vector<Polynomial> gens;
    for (const auto& h : both.generators()) {
        auto q = exact_quotient(h, g);
        if (!q) throw Error("colon: intersection generator not divisible by the colon element");
        gens.push_back(std::move(*q));
    }
    return Ideal(I.ring(), std::move(gens));
}

Ideal colon(const Ideal& I, const Ideal& J) {
    check_same(I, J, "colon");
    if (J.is_zero()) throw PreconditionError("colon", "cannot take the colon by the zero ideal");
    if (J.is_unit() || I.is_unit()) return I;
    std::optional<Ideal> acc;
    for (const auto& g : J.generators()) {
        Ideal part = colon(I, g);
        acc = acc ? intersect(*acc, part) : part;
        if (acc->contains(I) && I.contains(*acc)) return I;
    }
    return *acc;
}

Saturation saturate(const Ideal& I, const Ideal& J) {
    check_same(I, J, "saturate");
    if (J.is_zero()) throw PreconditionError("saturate", "cannot saturate by the zero ideal");
    Ideal current = I;
    int k = 0;
    for (;;) {
        Ideal next = colon(current, J);
        if (current.contains(next)) return {current, k};
        current = std::move(next);
        ++k;
    }
}

int monomial_dimension(std::span<const Monomial> gens, std::size_t nvars) {
    std::vector<std::uint32_t> supports;
    supports.reserve(gens.size());
    for (const auto& g : gens) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i]) s |= 1u << i;
        if (s == 0) return kEmptyDimension;
        supports.push_back(s);
    }
    int best = kEmptyDimension;
    const std::uint32_t full = nvars >= 32 ? ~0u : ((1u << nvars) - 1);
    for (std::uint32_t set = 0; set <= full; ++set) {
        const int size = std::popcount(set);
        if (size <= best) continue;
        // `set` is independent when no generator is supported inside it.
        if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & ~set) != 0; })) best = size;
        if (set == full) break;
    }
    return best;
}

int krull_dimension(const Ideal& I) {
    const auto lts = I.leading_monomials();
    return monomial_dimension(lts, I.ring()->nvars());
}

namespace {

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

void count_degree(const std::vector<Monomial>& lts, std::vector<std::uint32_t>& exps, std::size_t var, unsigned remaining,
                  std::uint64_t& count) {
    const std::size_t n = exps.size();
    if (var + 1 == n) {
        exps[var] = remaining;
        if (!divisible_by_any(Monomial(exps), lts)) ++count;
        exps[var] = 0;
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        exps[var] = e;
        // Prune: a partial monomial already in the ideal stays there.
        if (e > 0 && divisible_by_any(Monomial(exps), lts)) break;
        count_degree(lts, exps, var + 1, remaining - e, count);
    }
    exps[var] = 0;
}

}  // namespace

std::uint64_t graded_hilbert_function(const Ideal& I, unsigned e) {
    if (!I.is_homogeneous()) throw PreconditionError("graded_hilbert_function", "ideal is not homogeneous");
    const auto lts = minimalize(I.leading_monomials());
    std::vector<std::uint32_t> exps(I.ring()->nvars(), 0);
    std::uint64_t count = 0;
    count_degree(lts, exps, 0, e, count);
    return count;
}

namespace {

template <typename Visit>
void walk_standard(const std::vector<Monomial>& lts, std::vector<std::uint32_t>& exps, std::size_t var, Visit&& visit) {
    if (var == exps.size()) {
        visit(Monomial(exps));
        return;
    }
    for (std::uint32_t e = 0;; ++e) {
        exps[var] = e;
        if (divisible_by_any(Monomial(exps), lts)) break;
        walk_standard(lts, exps, var + 1, visit);
    }
    exps[var] = 0;
}

void require_zero_dimensional(const Ideal& I, const char* op) {
    if (krull_dimension(I) > 0) throw PreconditionError(op, "quotient is not zero-dimensional");
}

}  // namespace

std::vector<Monomial> standard_monomials(const Ideal& I) {
    require_zero_dimensional(I, "standard_monomials");
    const auto lts = minimalize(I.leading_monomials());
    std::vector<Monomial> out;
    if (!lts.empty() && lts.front().is_one()) return out;
    std::vector<std::uint32_t> exps(I.ring()->nvars(), 0);
    walk_standard(lts, exps, 0, [&](const Monomial& m) { out.push_back(m); });
    const auto& ring = *I.ring();
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return ring.greater(b, a); });
    return out;
}

std::uint64_t artinian_length(const Ideal& I) {
    require_zero_dimensional(I, "artinian_length");
    const auto lts = minimalize(I.leading_monomials());
    if (!lts.empty() && lts.front().is_one()) return 0;
    std::vector<std::uint32_t> exps(I.ring()->nvars(), 0);
    std::uint64_t count = 0;
    walk_standard(lts, exps, 0, [&](const Monomial&) { ++count; });
    return count;
}

bool is_primary_to_max(const Ideal& I) {
    return krull_dimension(I) == 0;
}

}  // namespace socle
