#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

namespace socle {

/// Coefficient type. Over Q this is a reduced fraction; over F_p it holds the
/// canonical residue in [0, p) as an integer-valued fraction.
using Scalar = mpq_class;

/// The coefficient field: Q, or F_p for a prime p.
class FieldSpec {
public:
    enum class Kind { rationals, prime_field };

    static constexpr std::uint32_t kDefaultPrime = 32003;

    FieldSpec() = default;

    static FieldSpec rationals() { return FieldSpec{}; }
    /// Throws PreconditionError unless p is prime.
    static FieldSpec prime(std::uint32_t p);
    /// 0 selects Q, anything else must be prime.
    static FieldSpec from_characteristic(std::uint32_t characteristic);

    Kind kind() const noexcept { return kind_; }
    std::uint32_t characteristic() const noexcept { return characteristic_; }
    bool is_rational() const noexcept { return kind_ == Kind::rationals; }

    /// Maps an arbitrary rational into the field (reduces mod p, inverting the denominator).
    Scalar normalize(const Scalar& value) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    /// Throws PreconditionError on zero.
    Scalar inv(const Scalar& a) const;

    std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    Kind kind_ = Kind::rationals;
    std::uint32_t characteristic_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace socle
