#include "socle/socle.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "socle/errors.hpp"
#include "socle/linalg.hpp"

namespace socle {

namespace {

void require_m_primary(const Ideal& J, const char* op) {
    if (!J.is_homogeneous()) throw PreconditionError(op, "ideal is not homogeneous");
    if (krull_dimension(J) != 0) throw PreconditionError(op, "ideal is not m-primary");
}

}  // namespace

std::vector<Polynomial> socle_basis(const Ideal& J) {
    require_m_primary(J, "socle_basis");
    const RingPtr& P = J.ring();
    const auto& field = P->field();
    const std::size_t n = P->nvars();
    const GroebnerBasis& gb = J.groebner();

    std::map<unsigned, std::vector<Monomial>> by_degree;
    for (const auto& m : standard_monomials(J)) by_degree[m.degree()].push_back(m);

    std::vector<Polynomial> out;
    for (const auto& [deg, basis] : by_degree) {
        auto next = by_degree.find(deg + 1);
        if (next == by_degree.end()) {
            for (const auto& m : basis) out.push_back(Polynomial::monomial(P, 1, m));
            continue;
        }
        const auto& upper = next->second;
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        for (std::size_t k = 0; k < upper.size(); ++k) index.emplace(upper[k], k);

        // Rows: coordinate c of x_i * b in the degree deg+1 standard basis.
        Matrix rows(n * upper.size(), std::vector<Scalar>(basis.size(), Scalar(0)));
        for (std::size_t col = 0; col < basis.size(); ++col) {
            for (std::size_t i = 0; i < n; ++i) {
                const Monomial shifted = basis[col] * Monomial::variable(n, i);
                const Polynomial image = normal_form(Polynomial::monomial(P, 1, shifted), gb);
                for (const auto& t : image.terms()) rows[i * upper.size() + index.at(t.mono)][col] = t.coeff;
            }
        }
        std::erase_if(rows, [](const std::vector<Scalar>& r) {
            return std::all_of(r.begin(), r.end(), [](const Scalar& s) { return s == 0; });
        });
        for (const auto& v : nullspace(std::move(rows), basis.size(), field)) {
            std::vector<Term> terms;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (v[k] != 0) terms.push_back({v[k], basis[k]});
            out.push_back(Polynomial::from_terms(P, std::move(terms)));
        }
    }
    return out;
}

RIdeal socle_ideal(const RIdeal& J) {
    require_m_primary(J.preimage(), "socle_ideal");
    return sum(J, RIdeal(J.ring(), socle_basis(J.preimage())));
}

std::uint64_t index_of_reducibility(const RIdeal& J, const SubquotientModule& M) {
    if (J.ring() != M.ring()) throw RingMismatch("index_of_reducibility");
    const RIdeal K = sum(product(J, M.top()), M.bottom());
    if (M.top().is_unit()) {
        require_m_primary(K.preimage(), "index_of_reducibility");
        return socle_basis(K.preimage()).size();
    }
    const RIdeal top = intersect(colon(K, RIdeal::maximal(J.ring())), M.top());
    return length_subquotient(SubquotientModule(top, K));
}

std::uint64_t index_of_reducibility(const RIdeal& J) {
    return index_of_reducibility(J, SubquotientModule::full(J.ring()));
}

const RIdeal& PowerChain::power(unsigned k) {
    if (k == 0) throw PreconditionError("PowerChain", "exponent must be positive");
    while (powers_.size() < k) powers_.push_back(product(powers_.back(), powers_.front()));
    return powers_[k - 1];
}

namespace {

RIdeal power_times_module(PowerChain& chain, unsigned k, const SubquotientModule& M) {
    const RIdeal& Jk = chain.power(k);
    if (M.top().is_unit() && M.bottom().is_zero()) return Jk;
    return sum(product(Jk, M.top()), M.bottom());
}

void require_chain_m_primary(PowerChain& chain, const char* op) {
    if (!chain.base().is_homogeneous()) throw PreconditionError(op, "ideal is not homogeneous");
    if (dimension(chain.base()) != 0) throw PreconditionError(op, "ideal is not m-primary");
}

}  // namespace

std::vector<std::int64_t> hilbert_samuel_values(PowerChain& chain, const SubquotientModule& M, int n_max) {
    require_chain_m_primary(chain, "hilbert_samuel_values");
    std::vector<std::int64_t> out;
    for (int n = 0; n <= n_max; ++n) {
        const RIdeal K = power_times_module(chain, n + 1, M);
        out.push_back(static_cast<std::int64_t>(length_subquotient(SubquotientModule(M.top(), K))));
    }
    return out;
}

std::vector<std::int64_t> hilbert_samuel_values(const RIdeal& J, const SubquotientModule& M, int n_max) {
    PowerChain chain(J);
    return hilbert_samuel_values(chain, M, n_max);
}

std::vector<std::int64_t> socle_function_values(PowerChain& chain, const SubquotientModule& M, int n_max) {
    require_chain_m_primary(chain, "socle_function_values");
    std::vector<std::int64_t> out;
    for (int n = 0; n <= n_max; ++n) {
        const RIdeal& Jn = chain.power(n + 1);
        out.push_back(static_cast<std::int64_t>(index_of_reducibility(Jn, M)));
    }
    return out;
}

std::vector<std::int64_t> socle_function_values(const RIdeal& J, const SubquotientModule& M, int n_max) {
    PowerChain chain(J);
    return socle_function_values(chain, M, n_max);
}

namespace {

mpz_class binom(long top, long k) {
    if (k < 0 || top < k) return 0;
    mpz_class r;
    mpz_bin_ui(r.get_mpz_t(), mpz_class(top).get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

int fit_degree(int d, FitBasis basis) { return basis == FitBasis::hilbert_samuel ? std::max(d, 0) : std::max(d - 1, 0); }

}  // namespace

std::int64_t CoefficientFit::evaluate(int n) const {
    mpz_class total = 0;
    const int D = degree_bound;
    for (int i = 0; i <= D && i < static_cast<int>(coefficients.size()); ++i) {
        mpz_class term = coefficients[i] * binom(n + D - i, D - i);
        total += (i % 2 ? -term : term);
    }
    return total.get_si();
}

CoefficientFit fit_binomial(const std::vector<std::pair<int, std::int64_t>>& values, int d, FitBasis basis) {
    const int D = fit_degree(d, basis);
    const FieldSpec field = FieldSpec::rationals();
    const int count = static_cast<int>(values.size());
    for (int s = 0; s + D + 2 <= count; ++s) {
        Matrix a;
        std::vector<Scalar> b;
        for (int r = 0; r <= D; ++r) {
            const int n = values[s + r].first;
            std::vector<Scalar> row;
            for (int i = 0; i <= D; ++i) {
                Scalar entry(binom(n + D - i, D - i));
                row.push_back(i % 2 ? Scalar(-entry) : entry);
            }
            a.push_back(std::move(row));
            b.emplace_back(static_cast<long>(values[s + r].second));
        }
        const auto x = solve(std::move(a), std::move(b), field);
        if (x.empty()) continue;
        CoefficientFit fit;
        fit.degree_bound = D;
        fit.basis = basis;
        bool integral = true;
        for (const auto& c : x) {
            if (c.get_den() != 1) integral = false;
            fit.coefficients.push_back(integral ? c.get_num().get_si() : 0);
        }
        if (!integral) continue;
        bool matches = true;
        for (int k = s; k < count && matches; ++k) matches = fit.evaluate(values[k].first) == values[k].second;
        if (!matches) continue;
        if (basis == FitBasis::socle && d >= 1) fit.coefficients.resize(static_cast<std::size_t>(d));
        fit.values = values;
        fit.stabilization_index = values[s].first;
        fit.window_used = count;
        return fit;
    }
    throw FitError("fit_binomial: no polynomial regime among " + std::to_string(count) + " samples");
}

namespace {

std::vector<std::pair<int, std::int64_t>> indexed(const std::vector<std::int64_t>& v) {
    std::vector<std::pair<int, std::int64_t>> out;
    for (std::size_t n = 0; n < v.size(); ++n) out.emplace_back(static_cast<int>(n), v[n]);
    return out;
}

template <typename Values>
CoefficientFit adaptive_fit(Values&& values_for, int d, FitBasis basis, int n_cap, int n_start) {
    int n_max = std::min(n_start, n_cap);
    for (;;) {
        try {
            return fit_binomial(indexed(values_for(n_max)), d, basis);
        } catch (const FitError&) {
            if (n_max >= n_cap) throw FitError("fit did not stabilize by n = " + std::to_string(n_cap) + "; raise the sample cap");
            n_max = std::min(2 * n_max, n_cap);
        }
    }
}

}  // namespace

CoefficientFit hilbert_coefficients(PowerChain& chain, const SubquotientModule& M, int n_cap, int n_start) {
    const int d = M.dimension();
    return adaptive_fit([&](int n) { return hilbert_samuel_values(chain, M, n); }, d, FitBasis::hilbert_samuel, n_cap,
                        n_start);
}

CoefficientFit hilbert_coefficients(const RIdeal& J, const SubquotientModule& M, int n_cap) {
    PowerChain chain(J);
    return hilbert_coefficients(chain, M, n_cap);
}

CoefficientFit noetherian_coefficients(PowerChain& chain, const SubquotientModule& M, int n_cap, int n_start) {
    const int d = M.dimension();
    return adaptive_fit([&](int n) { return socle_function_values(chain, M, n); }, d, FitBasis::socle, n_cap, n_start);
}

CoefficientFit noetherian_coefficients(const RIdeal& J, const SubquotientModule& M, int n_cap) {
    PowerChain chain(J);
    return noetherian_coefficients(chain, M, n_cap);
}

StabilityReport check_socle_stability(PowerChain& chain, int n_max) {
    StabilityReport report;
    report.n_max = n_max;
    const RIdeal first_socle = socle_ideal(chain.base());
    for (int n = 1; n <= n_max; ++n) {
        const RIdeal lhs = socle_ideal(chain.power(n + 1));
        const RIdeal rhs = product(chain.power(n), first_socle);
        if (!(lhs == rhs)) {
            report.holds = false;
            report.first_failure = n;
            return report;
        }
    }
    return report;
}

StabilityReport check_socle_stability(const RIdeal& q, int n_max) {
    PowerChain chain(q);
    return check_socle_stability(chain, n_max);
}

bool check_stable_socle_square(const RIdeal& q) {
    for (const auto& g : q.generators())
        if (g.terms().back().mono.degree() < 2)
            throw PreconditionError("check_stable_socle_square", "parameter ideal is not inside m^2");
    const RIdeal I = socle_ideal(q);
    return product(I, I) == product(q, I);
}

}  // namespace socle
