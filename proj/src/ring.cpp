#include "socle/ring.hpp"

#include <algorithm>

#include "socle/errors.hpp"
#include "socle/linalg.hpp"

namespace socle {

RingHandle RingPresentation::make(Ideal defining, std::string id, std::optional<std::vector<Ideal>> decomposition) {
    if (!defining.ring()) throw PreconditionError("make_ring", "missing ambient ring");
    if (!defining.is_homogeneous()) throw PreconditionError("make_ring", "defining ideal is not homogeneous");
    if (defining.is_unit()) throw PreconditionError("make_ring", "defining ideal is the unit ideal");
    if (decomposition)
        for (const auto& c : *decomposition)
            if (!same_ring(c.ring(), defining.ring())) throw RingMismatch("make_ring decomposition");
    auto r = std::shared_ptr<RingPresentation>(new RingPresentation());
    r->id_ = std::move(id);
    r->maximal_ = Ideal::maximal(defining.ring());
    r->dimension_ = krull_dimension(defining);
    r->defining_ = std::move(defining);
    r->decomposition_ = std::move(decomposition);
    return r;
}

RingHandle make_ring(const RingPtr& ambient, const Ideal& defining, std::string id) {
    if (!same_ring(ambient, defining.ring())) throw RingMismatch("make_ring");
    return RingPresentation::make(defining, std::move(id));
}

RIdeal::RIdeal(RingHandle ring, std::vector<Polynomial> generators) : ring_(std::move(ring)) {
    if (!ring_) throw PreconditionError("RIdeal", "missing ring");
    for (const auto& g : generators) {
        if (!same_ring(g.ring(), ring_->ambient())) throw RingMismatch("RIdeal");
        Polynomial r = ring_->reduce(g);
        if (!r.is_zero()) gens_.push_back(r.monic());
    }
    auto all = ring_->defining().generators();
    all.insert(all.end(), gens_.begin(), gens_.end());
    preimage_ = Ideal(ring_->ambient(), std::move(all));
}

RIdeal RIdeal::unit(RingHandle ring) {
    auto one = Polynomial::constant(ring->ambient(), 1);
    return RIdeal(std::move(ring), {std::move(one)});
}

RIdeal RIdeal::maximal(RingHandle ring) {
    auto gens = ring->maximal().generators();
    return RIdeal(std::move(ring), std::move(gens));
}

RIdeal RIdeal::parse(RingHandle ring, const std::string& generators) {
    auto gens = Ideal::parse(ring->ambient(), generators).generators();
    return RIdeal(std::move(ring), std::move(gens));
}

RIdeal RIdeal::from_preimage(RingHandle ring, const Ideal& preimage) {
    if (!same_ring(preimage.ring(), ring->ambient())) throw RingMismatch("RIdeal::from_preimage");
    if (!preimage.contains(ring->defining()))
        throw PreconditionError("RIdeal::from_preimage", "preimage does not contain the defining ideal");
    RIdeal out(ring, preimage.generators());
    // Keep the preimage's cached bases.
    out.preimage_ = preimage;
    return out;
}

bool RIdeal::contains(const RIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Polynomial& g) { return contains(g); });
}

int RIdeal::min_degree() const noexcept {
    int m = -1;
    for (const auto& g : gens_) {
        int low = static_cast<int>(g.terms().back().mono.degree());
        m = m < 0 ? low : std::min(m, low);
    }
    return std::max(m, 0);
}

bool operator==(const RIdeal& a, const RIdeal& b) {
    if (a.ring_ != b.ring_) return false;
    return a.preimage_ == b.preimage_;
}

std::string RIdeal::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + socle::to_string(gens_[i]);
    return s + ")";
}

namespace {

void check_same(const RIdeal& a, const RIdeal& b, const char* where) {
    if (a.ring() != b.ring()) throw RingMismatch(where);
}

std::vector<Polynomial> reduced_span(const RingPresentation& R, std::vector<Polynomial> polys) {
    for (auto& p : polys) p = R.reduce(p);
    return linear_basis(std::move(polys));
}

}  // namespace

RIdeal sum(const RIdeal& a, const RIdeal& b) {
    check_same(a, b, "sum");
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return RIdeal(a.ring(), std::move(gens));
}

RIdeal product(const RIdeal& a, const RIdeal& b) {
    check_same(a, b, "product");
    std::vector<Polynomial> gens;
    for (const auto& f : a.generators())
        for (const auto& g : b.generators()) gens.push_back(f * g);
    return RIdeal(a.ring(), reduced_span(*a.ring(), std::move(gens)));
}

RIdeal power(const RIdeal& a, unsigned n) {
    if (n == 0) throw PreconditionError("power", "exponent must be positive");
    std::vector<Polynomial> gens = a.generators();
    for (unsigned k = 1; k < n; ++k) {
        std::vector<Polynomial> next;
        for (const auto& f : gens)
            for (const auto& g : a.generators()) next.push_back(f * g);
        gens = reduced_span(*a.ring(), std::move(next));
    }
    return RIdeal(a.ring(), std::move(gens));
}

RIdeal intersect(const RIdeal& a, const RIdeal& b) {
    check_same(a, b, "intersect");
    return RIdeal::from_preimage(a.ring(), intersect(a.preimage(), b.preimage()));
}

RIdeal colon(const RIdeal& a, const RIdeal& b) {
    check_same(a, b, "colon");
    if (b.is_zero()) throw PreconditionError("colon", "cannot take the colon by the zero ideal");
    return RIdeal::from_preimage(a.ring(), colon(a.preimage(), b.preimage()));
}

RIdeal colon(const RIdeal& a, const Polynomial& g) {
    if (a.ring()->reduce(g).is_zero()) throw PreconditionError("colon", "cannot take the colon by the zero ideal");
    return RIdeal::from_preimage(a.ring(), colon(a.preimage(), g));
}

int dimension(const RIdeal& a) { return krull_dimension(a.preimage()); }

SubquotientModule::SubquotientModule(RIdeal top, RIdeal bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
    if (top_.ring() != bottom_.ring()) throw RingMismatch("SubquotientModule");
    for (const auto& g : bottom_.generators())
        if (!top_.contains(g))
            throw PreconditionError("SubquotientModule", "bottom generator " + to_string(g) + " is not in the top ideal");
}

SubquotientModule SubquotientModule::full(const RingHandle& ring) {
    return SubquotientModule(RIdeal::unit(ring), RIdeal::zero(ring));
}

Ideal SubquotientModule::annihilator() const { return colon(bottom_.preimage(), top_.preimage()); }

int SubquotientModule::dimension() const {
    if (is_zero()) return kEmptyDimension;
    SeriesPoly num = hilbert_numerator(*this);
    const std::size_t n = ring()->ambient()->nvars();
    return static_cast<int>(n - divide_by_one_minus_t(num, n));
}

SeriesPoly hilbert_numerator(const Ideal& I) {
    if (!I.is_homogeneous()) throw PreconditionError("hilbert_numerator", "ideal is not homogeneous");
    const auto lts = I.leading_monomials();
    return socle::hilbert_numerator(lts, I.ring()->nvars());
}

namespace {

SeriesPoly series_sub(SeriesPoly a, const SeriesPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    return a;
}

bool series_equal(SeriesPoly a, SeriesPoly b) {
    while (a.size() > 1 && a.back() == 0) a.pop_back();
    while (b.size() > 1 && b.back() == 0) b.pop_back();
    return a == b;
}

}  // namespace

SeriesPoly hilbert_numerator(const SubquotientModule& module) {
    return series_sub(hilbert_numerator(module.bottom().preimage()), hilbert_numerator(module.top().preimage()));
}

std::uint64_t length_subquotient(const SubquotientModule& module) {
    SeriesPoly num = hilbert_numerator(module);
    const std::size_t n = module.ring()->ambient()->nvars();
    if (divide_by_one_minus_t(num, n) < n)
        throw PreconditionError("length_subquotient", "module does not have finite length");
    mpz_class total = 0;
    for (const auto& c : num) total += c;
    if (total < 0) throw Error("length_subquotient: negative length, bottom is not inside top");
    return total.get_ui();
}

SubquotientModule quotient_by_element(const SubquotientModule& module, const Polynomial& x) {
    auto gens = module.bottom().generators();
    for (const auto& g : module.top().generators()) gens.push_back(x * g);
    return SubquotientModule(module.top(), RIdeal(module.ring(), std::move(gens)));
}

namespace {

void require_form(const Polynomial& x, const char* op) {
    if (!x.is_homogeneous() || x.is_zero() || x.degree() <= 0)
        throw PreconditionError(op, "element must be homogeneous of positive degree");
}

bool regular_with_quotient(const Polynomial& x, const SubquotientModule& module, const SubquotientModule& quotient) {
    const SeriesPoly m = hilbert_numerator(module);
    const SeriesPoly q = hilbert_numerator(quotient);
    const auto e = static_cast<std::size_t>(x.degree());
    // (1 - t^e) * HS(M)
    SeriesPoly expected(m.size() + e, 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        expected[i] += m[i];
        expected[i + e] -= m[i];
    }
    return series_equal(expected, q);
}

}  // namespace

bool is_regular_on(const Polynomial& x, const SubquotientModule& module) {
    require_form(x, "is_regular_on");
    if (module.is_zero()) return true;
    return regular_with_quotient(x, module, quotient_by_element(module, x));
}

DepthResult depth_subquotient(const SubquotientModule& module, const DepthOptions& options) {
    if (module.is_zero()) throw PreconditionError("depth_subquotient", "zero module");
    DepthResult out;
    out.dimension = module.dimension();
    Rng rng(options.seed);
    SubquotientModule current = module;
    while (out.depth < out.dimension) {
        bool found = false;
        for (unsigned deg : options.degrees) {
            for (int t = 0; t < options.trials && !found; ++t) {
                Polynomial x = random_form(module.ring(), deg, std::nullopt, rng);
                SubquotientModule next = quotient_by_element(current, x);
                if (regular_with_quotient(x, current, next)) {
                    current = std::move(next);
                    out.sequence.push_back(std::move(x));
                    found = true;
                }
            }
            if (found) break;
        }
        if (!found) break;
        ++out.depth;
    }
    return out;
}

int depth_subquotient(const SubquotientModule& module, int trials, const std::vector<unsigned>& degrees, std::uint64_t seed) {
    return depth_subquotient(module, DepthOptions{trials, degrees, seed}).depth;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
    std::vector<Monomial> out;
    std::vector<std::uint32_t> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var + 1 == nvars) {
            exps[var] = remaining;
            out.emplace_back(exps);
            return;
        }
        for (unsigned e = remaining + 1; e-- > 0;) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    rec(rec, 0, degree);
    return out;
}

namespace {

constexpr std::int64_t kCoefficientBound = 7;

Scalar random_coefficient(const FieldSpec& field, Rng& rng) {
    if (!field.is_rational()) return Scalar(static_cast<long>(rng.uniform(1, field.characteristic() - 1)));
    std::int64_t c = rng.uniform(1, kCoefficientBound);
    return Scalar(static_cast<long>(rng.uniform(0, 1) ? c : -c));
}

}  // namespace

Polynomial random_form(const RingHandle& ring, unsigned degree, const std::optional<RIdeal>& constraint, Rng& rng) {
    if (degree == 0) throw PreconditionError("random_form", "degree must be positive");
    const RingPtr& P = ring->ambient();
    std::vector<Polynomial> span;
    if (!constraint) {
        for (const auto& m : monomials_of_degree(P->nvars(), degree)) span.push_back(Polynomial::monomial(P, 1, m));
    } else {
        if (constraint->ring() != ring) throw RingMismatch("random_form");
        for (const auto& g : constraint->generators()) {
            if (!g.is_homogeneous()) throw PreconditionError("random_form", "constraint ideal is not homogeneous");
            if (g.degree() > static_cast<int>(degree)) continue;
            for (const auto& m : monomials_of_degree(P->nvars(), degree - g.degree())) span.push_back(g.mul_term(1, m));
        }
    }
    auto basis = reduced_span(*ring, std::move(span));
    if (basis.empty()) throw PreconditionError("random_form", "no elements of degree " + std::to_string(degree));
    Polynomial out(P);
    for (const auto& b : basis) out += b.scaled(random_coefficient(P->field(), rng));
    return out;
}

Polynomial random_form(const RingHandle& ring, unsigned degree, const std::optional<RIdeal>& constraint, std::uint64_t seed) {
    Rng rng(seed);
    return random_form(ring, degree, constraint, rng);
}

}  // namespace socle
