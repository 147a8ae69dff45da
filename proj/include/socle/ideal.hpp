#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/groebner.hpp"

namespace socle {

/// Dimension reported for the unit ideal (the empty variety).
inline constexpr int kEmptyDimension = -1;

/// Optional persistent store consulted before running Buchberger. Installed by
/// front ends; the library works without one.
class GroebnerStore {
public:
    virtual ~GroebnerStore() = default;
    /// Returns the reduced basis for `gens` if one is stored under `ring`'s order.
    virtual std::optional<std::vector<Polynomial>> load(const RingPtr& ring, const std::vector<Polynomial>& gens) = 0;
    virtual void save(const RingPtr& ring, const std::vector<Polynomial>& gens, const GroebnerBasis& gb) = 0;
};

void set_groebner_store(std::shared_ptr<GroebnerStore> store);
std::shared_ptr<GroebnerStore> groebner_store();

/// An ideal of a polynomial ring, given by generators. Reduced Groebner bases
/// are computed on demand and cached per monomial order; copies share the cache.
class Ideal {
public:
    Ideal() = default;
    /// Zero generators are dropped. Throws RingMismatch.
    Ideal(RingPtr ring, std::vector<Polynomial> generators);

    static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
    static Ideal unit(RingPtr ring);
    /// The ideal of all variables.
    static Ideal maximal(RingPtr ring);
    /// Parses a comma-separated generator list.
    static Ideal parse(RingPtr ring, const std::string& generators);
    /// Wraps a reduced basis; the cache starts populated for its order.
    static Ideal from_groebner(const GroebnerBasis& gb);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    bool is_homogeneous() const noexcept { return homogeneous_; }
    bool is_monomial() const noexcept { return monomial_; }

    /// Reduced basis under the ring's order.
    const GroebnerBasis& groebner() const;
    /// Reduced basis under another order (lives in ring()->with_order(order)).
    const GroebnerBasis& groebner(const MonomialOrder& order) const;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool is_unit() const { return groebner().is_unit(); }
    bool is_zero() const noexcept { return gens_.empty(); }

    /// Minimal generators of the leading-term ideal.
    std::vector<Monomial> leading_monomials() const;

    /// Equal as ideals (identical reduced bases).
    friend bool operator==(const Ideal& a, const Ideal& b);

    std::string to_string() const;

private:
    struct Cache;
    RingPtr ring_;
    std::vector<Polynomial> gens_;
    bool homogeneous_ = true;
    bool monomial_ = true;
    std::shared_ptr<Cache> cache_;
};

/// Removes generators reducible to zero by the others and reduces every
/// generator's terms against the others' leading terms, until stable.
std::vector<Polynomial> interreduce(std::vector<Polynomial> gens);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I^n for n >= 1, interreducing generators after every multiplication.
Ideal ideal_power(const Ideal& I, unsigned n);

/// I intersect J, eliminating t from t*I + (1 - t)*J with a block order on a
/// hidden trailing variable.
Ideal intersect(const Ideal& I, const Ideal& J);
/// I : (g) = (1/g) (I intersect (g)).
Ideal colon(const Ideal& I, const Polynomial& g);
/// I : J as the intersection of I : (g) over the generators g of J. Throws for J = (0).
Ideal colon(const Ideal& I, const Ideal& J);

struct Saturation {
    Ideal ideal;
    /// Smallest k with I : J^k = I : J^(k+1).
    int exponent = 0;
};
/// I : J^infinity by iterated colon. Throws for J = (0).
Saturation saturate(const Ideal& I, const Ideal& J);

/// Krull dimension of P/I via maximal independent sets of the leading-term ideal.
/// kEmptyDimension for the unit ideal.
int krull_dimension(const Ideal& I);
/// Same computation on an explicit monomial generating set in `nvars` variables.
int monomial_dimension(std::span<const Monomial> gens, std::size_t nvars);

/// dim_k (P/I)_e for homogeneous I, counting degree-e standard monomials.
std::uint64_t graded_hilbert_function(const Ideal& I, unsigned e);

/// Standard monomials of a zero-dimensional ideal, increasing in the ring order.
std::vector<Monomial> standard_monomials(const Ideal& I);
/// dim_k P/I for zero-dimensional I.
std::uint64_t artinian_length(const Ideal& I);
/// True iff I is proper and P/I has finite length.
bool is_primary_to_max(const Ideal& I);

}  // namespace socle
