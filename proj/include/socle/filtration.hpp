#pragma once

#include <optional>
#include <string>
#include <vector>

#include "socle/ring.hpp"

namespace socle {

struct PrimaryComponent {
    Ideal primary;
    /// Its radical.
    Ideal prime;
    /// dim P/prime.
    int dimension = 0;
};

/// Irredundant decomposition of a monomial ideal into ideals generated by pure
/// powers of variables, sorted by generator lists. Throws PreconditionError for
/// non-monomial input. The unit ideal has no components.
std::vector<Ideal> monomial_irreducible_decomposition(const Ideal& I);

/// Irredundant primary decomposition of a monomial ideal, one component per
/// associated prime: the irreducible components grouped by support.
std::vector<PrimaryComponent> monomial_primary_decomposition(const Ideal& I);

/// Minimal generators of the intersection of two monomial ideals (pairwise lcms).
std::vector<Monomial> monomial_intersection(std::span<const Monomial> a, std::span<const Monomial> b);

/// D_0 = (0) < D_1 < ... < D_l = R with dims d_1 < ... < d_l.
struct DimensionFiltration {
    RingHandle ring;
    /// ideals[i] = D_i for i = 0..l.
    std::vector<RIdeal> ideals;
    /// dims[i - 1] = d_i = dim D_i.
    std::vector<int> dims;
    /// The set of dimensions of associated primes, increasing.
    std::vector<int> lambda;
    std::vector<PrimaryComponent> components;

    std::size_t length() const noexcept { return dims.size(); }
    /// C_i = D_i / D_{i-1}, 1 <= i <= l.
    SubquotientModule quotient(std::size_t i) const;
};

/// Computes the filtration from a primary decomposition of the defining ideal:
/// the monomial one when the ideal is monomial, otherwise `decomposition`, which
/// must be supplied and is checked to intersect to the defining ideal.
DimensionFiltration compute_dimension_filtration(const RingHandle& ring,
                                                 const std::optional<std::vector<Ideal>>& decomposition = std::nullopt);

/// Cached on the ring; uses the ring's supplied decomposition if any.
const DimensionFiltration& dimension_filtration(const RingHandle& ring);

/// D_{l-1}; R / D_{l-1} is unmixed of dimension d.
RIdeal unmixed_component(const RingHandle& ring);

struct ParameterSystem {
    RingHandle ring;
    std::vector<Polynomial> elements;
    std::vector<int> degrees;
    bool distinguished = false;
    /// Largest n with q inside m^n.
    int min_power = 0;

    RIdeal ideal() const { return RIdeal(ring, elements); }
};

/// Draws x_1..x_d, each a random form of `degree` in Ann(D_i) for the largest i
/// with d_i < j, retrying each stage until the partial system cuts the dimension
/// by one. Throws PreconditionError naming the stage once `max_attempts` draws fail.
ParameterSystem distinguished_sop(const RingHandle& ring, unsigned degree, Rng& rng, int max_attempts = 20);
ParameterSystem distinguished_sop(const RingHandle& ring, unsigned degree, std::uint64_t seed, int max_attempts = 20);

struct DistinguishedCheck {
    bool is_sop = false;
    bool distinguished = false;
    /// One line per violated condition x_j D_i = 0.
    std::vector<std::string> witnesses;
};

DistinguishedCheck verify_distinguished(const ParameterSystem& q);

}  // namespace socle
