#pragma once

#include <cstdint>
#include <exception>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "socle/hilbert_series.hpp"
#include "socle/ideal.hpp"
#include "socle/random.hpp"

namespace socle {

struct DimensionFiltration;
class RingPresentation;
using RingHandle = std::shared_ptr<const RingPresentation>;

/// A graded quotient ring R = P/I with I homogeneous and proper.
class RingPresentation {
public:
    /// Throws PreconditionError for non-homogeneous or unit defining ideals.
    /// `decomposition` is an optional primary decomposition of the defining ideal,
    /// verified later by the filtration module before use.
    static RingHandle make(Ideal defining, std::string id = {},
                           std::optional<std::vector<Ideal>> decomposition = std::nullopt);

    const std::string& id() const noexcept { return id_; }
    const RingPtr& ambient() const noexcept { return defining_.ring(); }
    const Ideal& defining() const noexcept { return defining_; }
    int dimension() const noexcept { return dimension_; }
    /// The irrelevant ideal of P (preimage of m).
    const Ideal& maximal() const noexcept { return maximal_; }
    const std::optional<std::vector<Ideal>>& supplied_decomposition() const noexcept { return decomposition_; }

    /// Normal form of a representative modulo the defining ideal.
    Polynomial reduce(const Polynomial& f) const { return normal_form(f, defining_.groebner()); }

    struct FiltrationSlot {
        std::once_flag once;
        std::shared_ptr<const DimensionFiltration> value;
        std::exception_ptr error;
    };
    /// Written once by dimension_filtration().
    FiltrationSlot& filtration_slot() const { return *slot_; }

private:
    RingPresentation() = default;

    std::string id_;
    Ideal defining_;
    Ideal maximal_;
    int dimension_ = 0;
    std::optional<std::vector<Ideal>> decomposition_;
    std::shared_ptr<FiltrationSlot> slot_ = std::make_shared<FiltrationSlot>();
};

RingHandle make_ring(const RingPtr& ambient, const Ideal& defining, std::string id = {});

/// An ideal of R, stored through its preimage in P (which contains the defining ideal).
class RIdeal {
public:
    RIdeal() = default;
    /// The ideal generated by the images of `generators`.
    RIdeal(RingHandle ring, std::vector<Polynomial> generators);

    static RIdeal zero(RingHandle ring) { return RIdeal(std::move(ring), {}); }
    static RIdeal unit(RingHandle ring);
    static RIdeal maximal(RingHandle ring);
    static RIdeal parse(RingHandle ring, const std::string& generators);
    /// Throws PreconditionError unless `preimage` contains the defining ideal.
    static RIdeal from_preimage(RingHandle ring, const Ideal& preimage);

    const RingHandle& ring() const noexcept { return ring_; }
    /// Nonzero representatives in normal form modulo the defining ideal.
    const std::vector<Polynomial>& generators() const noexcept { return gens_; }
    const Ideal& preimage() const noexcept { return preimage_; }

    bool contains(const Polynomial& f) const { return preimage_.contains(f); }
    bool contains(const RIdeal& other) const;
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const { return preimage_.is_unit(); }
    bool is_homogeneous() const { return preimage_.is_homogeneous(); }
    /// Largest n with every generator in m^n (minimum generator degree); 0 for the zero ideal.
    int min_degree() const noexcept;

    friend bool operator==(const RIdeal& a, const RIdeal& b);

    std::string to_string() const;

private:
    RingHandle ring_;
    std::vector<Polynomial> gens_;
    Ideal preimage_;
};

RIdeal sum(const RIdeal& a, const RIdeal& b);
RIdeal product(const RIdeal& a, const RIdeal& b);
/// a^n, n >= 1. Products are reduced modulo the defining ideal and replaced by a
/// linear basis of their span before every further multiplication.
RIdeal power(const RIdeal& a, unsigned n);
RIdeal intersect(const RIdeal& a, const RIdeal& b);
RIdeal colon(const RIdeal& a, const RIdeal& b);
RIdeal colon(const RIdeal& a, const Polynomial& g);
/// dim R/a; kEmptyDimension for the unit ideal.
int dimension(const RIdeal& a);

/// The R-module a/b for ideals b of R inside a.
class SubquotientModule {
public:
    SubquotientModule() = default;
    /// Throws PreconditionError (naming a generator of b outside a) unless b is inside a.
    SubquotientModule(RIdeal top, RIdeal bottom);

    static SubquotientModule full(const RingHandle& ring);

    const RingHandle& ring() const noexcept { return top_.ring(); }
    const RIdeal& top() const noexcept { return top_; }
    const RIdeal& bottom() const noexcept { return bottom_; }

    bool is_zero() const { return bottom_.contains(top_); }
    /// Preimage of Ann(a/b) = b : a.
    Ideal annihilator() const;
    /// Krull dimension of the module; kEmptyDimension for the zero module.
    int dimension() const;

private:
    RIdeal top_;
    RIdeal bottom_;
};

/// Numerator of the Hilbert series of a/b over (1 - t)^n, n the number of variables.
SeriesPoly hilbert_numerator(const SubquotientModule& module);
/// Numerator of the Hilbert series of P/I over (1 - t)^n, for homogeneous I.
SeriesPoly hilbert_numerator(const Ideal& I);

/// l(a/b). Throws PreconditionError when the module does not have finite length.
std::uint64_t length_subquotient(const SubquotientModule& module);

/// a / (b + x a).
SubquotientModule quotient_by_element(const SubquotientModule& module, const Polynomial& x);

/// True iff multiplication by x is injective on a/b, i.e. (b : x) meet a = b.
/// Decided through the graded identity HS(M/xM) = (1 - t^deg x) HS(M), which
/// holds exactly when x is a nonzerodivisor on M. x must be homogeneous of positive degree.
bool is_regular_on(const Polynomial& x, const SubquotientModule& module);

struct DepthOptions {
    int trials = 6;
    std::vector<unsigned> degrees{1, 2};
    std::uint64_t seed = 0;
};

struct DepthResult {
    int depth = 0;
    int dimension = 0;
    /// The regular sequence found.
    std::vector<Polynomial> sequence;
};

/// Greedy randomized depth: at every step tries `trials` random forms in each
/// candidate degree and quotients by the first regular one. May undercount.
/// Throws PreconditionError on the zero module.
DepthResult depth_subquotient(const SubquotientModule& module, const DepthOptions& options = {});
int depth_subquotient(const SubquotientModule& module, int trials, const std::vector<unsigned>& degrees, std::uint64_t seed);

/// Random homogeneous element of R of the given degree, drawn from the
/// degree-`degree` part of `constraint` when given. The element is a combination,
/// with random nonzero coefficients, of a linear basis of that graded piece.
/// Throws PreconditionError for degree 0 or an empty graded piece.
Polynomial random_form(const RingHandle& ring, unsigned degree, const std::optional<RIdeal>& constraint, Rng& rng);
Polynomial random_form(const RingHandle& ring, unsigned degree, const std::optional<RIdeal>& constraint, std::uint64_t seed);

/// Monomials of P of total degree `degree`, decreasing in the ring order.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace socle
