#include "socle/filtration.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "socle/errors.hpp"

namespace socle {

namespace {

using Gens = std::vector<Monomial>;

std::vector<Monomial> monomial_gens(const Ideal& I, const char* op) {
    if (!I.is_monomial()) throw PreconditionError(op, "ideal is not monomial");
    Gens out;
    for (const auto& g : I.generators()) out.push_back(g.leading_monomial());
    return minimalize(std::move(out));
}

bool contains_all(const Gens& big, const Gens& small) {
    return std::all_of(small.begin(), small.end(), [&](const Monomial& m) {
        return std::any_of(big.begin(), big.end(), [&](const Monomial& g) { return g.divides(m); });
    });
}

void split(Gens gens, std::vector<Gens>& out) {
    gens = minimalize(std::move(gens));
    if (!gens.empty() && gens.front().is_one()) return;
    auto mixed = std::find_if(gens.begin(), gens.end(), [](const Monomial& m) { return m.support_size() > 1; });
    if (mixed == gens.end()) {
        out.push_back(std::move(gens));
        return;
    }
    const Monomial m = *mixed;
    std::size_t i = 0;
    while (m[i] == 0) ++i;
    const Monomial power = Monomial::variable(m.size(), i, m[i]);
    const Monomial rest = power.quotient_of(m);
    Gens left = gens, right = gens;
    left.push_back(power);
    right.push_back(rest);
    split(std::move(left), out);
    split(std::move(right), out);
}

std::vector<Gens> irreducible_gens(const Gens& gens) {
    std::vector<Gens> raw;
    split(gens, raw);
    std::sort(raw.begin(), raw.end(), [](const Gens& a, const Gens& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](const Monomial& x, const Monomial& y) {
            return x.exponents() < y.exponents();
        });
    });
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<Gens> out;
    for (std::size_t k = 0; k < raw.size(); ++k) {
        bool redundant = false;
        for (std::size_t l = 0; l < raw.size() && !redundant; ++l)
            if (l != k && contains_all(raw[k], raw[l])) redundant = true;
        if (!redundant) out.push_back(raw[k]);
    }
    return out;
}

Ideal to_ideal(const RingPtr& ring, const Gens& gens) {
    std::vector<Polynomial> polys;
    for (const auto& m : gens) polys.push_back(Polynomial::monomial(ring, 1, m));
    return Ideal(ring, std::move(polys));
}

std::uint32_t support_mask(const Gens& gens) {
    std::uint32_t s = 0;
    for (const auto& m : gens)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) s |= 1u << i;
    return s;
}

Ideal intersect_all(const RingPtr& ring, const std::vector<Ideal>& parts) {
    if (parts.empty()) return Ideal::unit(ring);
    const bool monomial = std::all_of(parts.begin(), parts.end(), [](const Ideal& I) { return I.is_monomial(); });
    if (monomial) {
        Gens acc = monomial_gens(parts.front(), "intersect_all");
        for (std::size_t k = 1; k < parts.size(); ++k) acc = monomial_intersection(acc, monomial_gens(parts[k], "intersect_all"));
        return to_ideal(ring, acc);
    }
    Ideal acc = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) acc = intersect(acc, parts[k]);
    return acc;
}

}  // namespace

std::vector<Monomial> monomial_intersection(std::span<const Monomial> a, std::span<const Monomial> b) {
    Gens out;
    for (const auto& x : a)
        for (const auto& y : b) out.push_back(lcm(x, y));
    return minimalize(std::move(out));
}

std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& I) {
    std::vector<Ideal> out;
    for (const auto& g : irreducible_gens(monomial_gens(I, "monomial_irreducible_decomposition")))
        out.push_back(to_ideal(I.ring(), g));
    return out;
}

std::vector<PrimaryComponent> monomial_primary_decomposition(const Ideal& I) {
    const auto& ring = I.ring();
    const std::size_t n = ring->nvars();
    std::map<std::uint32_t, Gens> groups;
    for (const auto& g : irreducible_gens(monomial_gens(I, "monomial_primary_decomposition"))) {
        const std::uint32_t s = support_mask(g);
        auto it = groups.find(s);
        if (it == groups.end()) groups.emplace(s, g);
        else it->second = monomial_intersection(it->second, g);
    }
    std::vector<PrimaryComponent> out;
    for (const auto& [mask, gens] : groups) {
        Gens vars;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) vars.push_back(Monomial::variable(n, i));
        out.push_back({to_ideal(ring, gens), to_ideal(ring, vars), static_cast<int>(n - vars.size())});
    }
    std::stable_sort(out.begin(), out.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) { return a.dimension > b.dimension; });
    return out;
}

SubquotientModule DimensionFiltration::quotient(std::size_t i) const {
    if (i == 0 || i > length()) throw PreconditionError("DimensionFiltration::quotient", "index out of range");
    return SubquotientModule(ideals[i], ideals[i - 1]);
}

DimensionFiltration compute_dimension_filtration(const RingHandle& ring, const std::optional<std::vector<Ideal>>& decomposition) {
    const Ideal& defining = ring->defining();
    DimensionFiltration f;
    f.ring = ring;
    if (defining.is_monomial()) {
        f.components = monomial_primary_decomposition(defining);
    } else {
        if (!decomposition)
            throw PreconditionError("dimension_filtration", "defining ideal is not monomial and no primary decomposition was supplied");
        std::vector<Ideal> parts;
        for (const auto& Q : *decomposition) {
            if (!same_ring(Q.ring(), defining.ring())) throw RingMismatch("dimension_filtration");
            parts.push_back(Q);
            f.components.push_back({Q, Q, krull_dimension(Q)});
        }
        if (!(intersect_all(defining.ring(), parts) == defining))
            throw PreconditionError("dimension_filtration", "supplied decomposition does not intersect to the defining ideal");
    }
    std::set<int> dims;
    for (const auto& c : f.components) dims.insert(c.dimension);
    f.lambda.assign(dims.begin(), dims.end());
    f.dims = f.lambda;

    for (std::size_t i = 0; i < f.dims.size(); ++i) {
        std::vector<Ideal> parts;
        for (const auto& c : f.components)
            if (c.dimension >= f.dims[i]) parts.push_back(c.primary);
        f.ideals.push_back(RIdeal::from_preimage(ring, intersect_all(defining.ring(), parts)));
    }
    f.ideals.push_back(RIdeal::unit(ring));
    return f;
}

const DimensionFiltration& dimension_filtration(const RingHandle& ring) {
    auto& slot = ring->filtration_slot();
    std::call_once(slot.once, [&] {
        try {
            slot.value = std::make_shared<const DimensionFiltration>(compute_dimension_filtration(ring, ring->supplied_decomposition()));
        } catch (...) {
            slot.error = std::current_exception();
        }
    });
    if (slot.error) std::rethrow_exception(slot.error);
    return *slot.value;
}

RIdeal unmixed_component(const RingHandle& ring) {
    const auto& f = dimension_filtration(ring);
    return f.ideals[f.length() - 1];
}

namespace {

// Index of the largest D_i with d_i < j; 0 selects D_0 = (0).
std::size_t constraint_level(const DimensionFiltration& f, int j) {
    std::size_t level = 0;
    for (std::size_t i = 1; i <= f.length(); ++i)
        if (f.dims[i - 1] < j) level = i;
    return level;
}

}  // namespace

ParameterSystem distinguished_sop(const RingHandle& ring, unsigned degree, Rng& rng, int max_attempts) {
    if (degree == 0) throw PreconditionError("distinguished_sop", "degree must be positive");
    const auto& f = dimension_filtration(ring);
    const int d = ring->dimension();
    ParameterSystem q;
    q.ring = ring;
    std::vector<Polynomial> chosen;
    for (int j = 1; j <= d; ++j) {
        const std::size_t level = constraint_level(f, j);
        std::optional<RIdeal> constraint;
        if (level > 0) constraint = colon(RIdeal::zero(ring), f.ideals[level]);
        bool ok = false;
        for (int attempt = 0; attempt < max_attempts && !ok; ++attempt) {
            Polynomial x = random_form(ring, degree, constraint, rng);
            auto trial = chosen;
            trial.push_back(x);
            if (dimension(RIdeal(ring, trial)) == d - j) {
                chosen = std::move(trial);
                ok = true;
            }
        }
        if (!ok)
            throw PreconditionError("distinguished_sop", "attempts exhausted at element " + std::to_string(j) + " of " +
                                                             std::to_string(d));
    }
    q.elements = std::move(chosen);
    for (const auto& x : q.elements) q.degrees.push_back(x.degree());
    q.min_power = q.degrees.empty() ? 0 : *std::min_element(q.degrees.begin(), q.degrees.end());
    q.distinguished = verify_distinguished(q).distinguished;
    return q;
}

ParameterSystem distinguished_sop(const RingHandle& ring, unsigned degree, std::uint64_t seed, int max_attempts) {
    Rng rng(seed);
    return distinguished_sop(ring, degree, rng, max_attempts);
}

DistinguishedCheck verify_distinguished(const ParameterSystem& q) {
    DistinguishedCheck out;
    const RingHandle& ring = q.ring;
    const int d = ring->dimension();
    out.is_sop = static_cast<int>(q.elements.size()) == d && dimension(q.ideal()) == 0;
    const auto& f = dimension_filtration(ring);
    const Ideal& defining = ring->defining();
    out.distinguished = true;
    for (int j = 1; j <= static_cast<int>(q.elements.size()); ++j) {
        const Polynomial& x = q.elements[j - 1];
        for (std::size_t i = 1; i <= f.length(); ++i) {
            if (f.dims[i - 1] >= j) continue;
            for (const auto& g : f.ideals[i].generators()) {
                if (!defining.contains(x * g)) {
                    out.distinguished = false;
                    out.witnesses.push_back("x_" + std::to_string(j) + " * " + to_string(g) + " is nonzero (D_" +
                                            std::to_string(i) + ")");
                }
            }
        }
    }
    return out;
}

}  // namespace socle
