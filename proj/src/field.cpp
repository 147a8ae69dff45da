#include "socle/field.hpp"

#include "socle/errors.hpp"

namespace socle {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw PreconditionError("FieldSpec", "characteristic " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind_ = Kind::prime_field;
    f.characteristic_ = p;
    return f;
}

FieldSpec FieldSpec::from_characteristic(std::uint32_t characteristic) {
    return characteristic == 0 ? rationals() : prime(characteristic);
}

namespace {

mpz_class mod_p(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
    return r;
}

}  // namespace

Scalar FieldSpec::normalize(const Scalar& value) const {
    if (is_rational()) return value;
    const mpz_class num = mod_p(value.get_num(), characteristic_);
    const mpz_class den = mod_p(value.get_den(), characteristic_);
    if (den == 0) throw PreconditionError("FieldSpec::normalize", "denominator vanishes mod " + std::to_string(characteristic_));
    mpz_class inv;
    mpz_class p = characteristic_;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    return Scalar(mod_p(num * inv, characteristic_));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a + b;
    return Scalar(mod_p(a.get_num() + b.get_num(), characteristic_));
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a - b;
    return Scalar(mod_p(a.get_num() - b.get_num(), characteristic_));
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    if (is_rational()) return a * b;
    return Scalar(mod_p(a.get_num() * b.get_num(), characteristic_));
}

Scalar FieldSpec::neg(const Scalar& a) const {
    if (is_rational()) return -a;
    return Scalar(mod_p(-a.get_num(), characteristic_));
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (a == 0) throw PreconditionError("FieldSpec::inv", "division by zero");
    if (is_rational()) return 1 / a;
    mpz_class r;
    mpz_class p = characteristic_;
    mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::string FieldSpec::to_string() const {
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic_) + ")";
}

}  // namespace socle
