#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "socle/field.hpp"
#include "socle/monomial.hpp"

namespace socle {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// Ordered variables, coefficient field and monomial order of a polynomial ring.
class PolyRing {
public:
    /// Validates names (nonempty, unique identifiers, at least one) and builds the ring.
    static RingPtr make(std::vector<std::string> variables, FieldSpec field = {},
                        MonomialOrder order = MonomialOrder::degrevlex());

    std::size_t nvars() const noexcept { return variables_.size(); }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const FieldSpec& field() const noexcept { return field_; }
    const MonomialOrder& order() const noexcept { return order_; }

    /// Index of `name`, or -1.
    int index_of(const std::string& name) const;

    /// Same variables and field under another order.
    RingPtr with_order(MonomialOrder order) const;
    /// Appends one variable named `name` (must be fresh) and uses `order`.
    RingPtr with_extra_variable(const std::string& name, MonomialOrder order) const;

    /// Strict "b < a" under this ring's order, for use with std algorithms.
    bool greater(const Monomial& a, const Monomial& b) const noexcept {
        return compare_unchecked(a, b, order_) == std::strong_ordering::greater;
    }

    bool same_as(const PolyRing& other) const noexcept;
    std::string describe() const;

private:
    PolyRing(std::vector<std::string> variables, FieldSpec field, MonomialOrder order)
        : variables_(std::move(variables)), field_(field), order_(order) {}

    std::vector<std::string> variables_;
    FieldSpec field_;
    MonomialOrder order_;
};

bool same_ring(const RingPtr& a, const RingPtr& b) noexcept;

struct Term {
    Scalar coeff;
    Monomial mono;

    friend bool operator==(const Term&, const Term&) = default;
};

/// A polynomial in normal form: nonzero coefficients, distinct monomials,
/// terms strictly decreasing under the ring's order. Zero has no terms.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    /// Sorts, merges like terms, normalizes coefficients into the field and drops zeros.
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
    /// Trusted constructor: `terms` must already be in normal form.
    static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);
    static Polynomial constant(RingPtr ring, const Scalar& c);
    static Polynomial variable(RingPtr ring, std::size_t index);
    static Polynomial monomial(RingPtr ring, const Scalar& c, const Monomial& m);

    const RingPtr& ring() const noexcept { return ring_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Precondition: nonzero.
    const Term& leading_term() const { return terms_.front(); }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    const Scalar& leading_coeff() const { return terms_.front().coeff; }

    /// Maximal total degree of a term; -1 for zero.
    int degree() const noexcept;
    bool is_homogeneous() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

    /// Divides by the leading coefficient; zero stays zero.
    Polynomial monic() const;
    Polynomial scaled(const Scalar& c) const;
    /// c * m * this.
    Polynomial mul_term(const Scalar& c, const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    /// The same polynomial in `target`, which must carry the same field and either
    /// extend this ring's variables (new exponents are zero) or drop trailing
    /// variables that do not occur. Terms are re-sorted under the target order.
    Polynomial rebase(const RingPtr& target) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// this - c * m * g, one merge pass. Used by reduction loops.
    void sub_mul_term(const Scalar& c, const Monomial& m, const Polynomial& g);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

};

/// q with h = q * g, or nullopt when g does not divide h. g must be nonzero.
std::optional<Polynomial> exact_quotient(const Polynomial& h, const Polynomial& g);

enum class ArithOp { add, sub, mul };
/// Dispatching form of the ring operations; throws RingMismatch.
Polynomial poly_arith(const Polynomial& f, const Polynomial& g, ArithOp op);

/// Canonical text form accepted back by parse_polynomial.
std::string to_string(const Polynomial& f);
std::string to_string(const Monomial& m, const std::vector<std::string>& names);

}  // namespace socle
