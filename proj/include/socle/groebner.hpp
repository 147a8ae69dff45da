#pragma once

#include <span>
#include <vector>

#include "socle/polynomial.hpp"

namespace socle {

/// A Groebner basis; when `reduced()` it is the unique reduced basis
/// (monic, auto-reduced, sorted by increasing leading monomial).
class GroebnerBasis {
public:
    GroebnerBasis() = default;
    GroebnerBasis(RingPtr ring, std::vector<Polynomial> generators, bool reduced)
        : ring_(std::move(ring)), generators_(std::move(generators)), reduced_(reduced) {}

    const RingPtr& ring() const noexcept { return ring_; }
    const MonomialOrder& order() const noexcept { return ring_->order(); }
    const std::vector<Polynomial>& generators() const noexcept { return generators_; }
    bool reduced() const noexcept { return reduced_; }
    /// The basis of the unit ideal is {1}.
    bool is_unit() const noexcept;
    bool is_zero() const noexcept { return generators_.empty(); }

    std::vector<Monomial> leading_monomials() const;

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

private:
    RingPtr ring_;
    std::vector<Polynomial> generators_;
    bool reduced_ = false;
};

/// Full reduction of f by G: no term of the result is divisible by a leading
/// monomial of G, and f - result lies in the ideal of G. Zero entries of G are skipped.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G);
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Reduced Groebner basis of the ideal generated by `gens`, under the order of
/// their ring. Pairs are processed by the sugar strategy with the
/// Gebauer-Moeller form of Buchberger's two criteria. Empty or all-zero input
/// gives the basis of the zero ideal; `ring` names the ring in that case.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring);
/// Same, after moving the generators into their ring under `order`.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const RingPtr& ring, const MonomialOrder& order);

/// Turns any Groebner basis into the reduced one.
std::vector<Polynomial> reduce_basis(std::vector<Polynomial> basis);

/// True iff normal_form(f, gb) is zero.
bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

/// Buchberger's criterion: every S-polynomial reduces to zero.
bool is_groebner_basis(std::span<const Polynomial> G);

}  // namespace socle
