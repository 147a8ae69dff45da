#include "socle/checkers.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "socle/errors.hpp"

namespace socle {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::int64_t binom(std::int64_t top, std::int64_t k) {
    if (k < 0 || top < k) return 0;
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

template <typename T>
std::string list_string(const std::vector<T>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
    os << "]";
    return os.str();
}

std::vector<std::string> generator_strings(const std::vector<Polynomial>& gens) {
    std::vector<std::string> out;
    for (const auto& g : gens) out.push_back(to_string(g));
    return out;
}

std::string ideal_string(const std::vector<Polynomial>& gens) {
    std::string s = "(";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_string(gens[i]);
    return s + ")";
}

DepthOptions depth_options(const CheckOptions& o, std::uint64_t seed) { return DepthOptions{o.depth_trials, o.depth_degrees, seed}; }

std::optional<int> module_type(const SubquotientModule& C, const DepthResult& depth) {
    if (depth.depth != depth.dimension) return std::nullopt;
    RIdeal q(C.ring(), depth.sequence);
    return static_cast<int>(index_of_reducibility(q, C));
}

}  // namespace

bool is_regular(const RingHandle& ring) {
    return graded_hilbert_function(ring->defining(), 1) == static_cast<std::uint64_t>(ring->dimension());
}

CmResult is_cohen_macaulay(const RingHandle& ring, std::uint64_t seed) {
    CmResult out;
    out.depth = depth_subquotient(SubquotientModule::full(ring), DepthOptions{6, {1, 2}, seed});
    out.is_cm = out.depth.depth == ring->dimension();
    return out;
}

int cm_type(const RingHandle& ring, std::uint64_t seed) {
    const CmResult cm = is_cohen_macaulay(ring, seed);
    if (!cm.is_cm) throw PreconditionError("cm_type", "ring is not Cohen-Macaulay");
    return *module_type(SubquotientModule::full(ring), cm.depth);
}

bool is_gorenstein(const RingHandle& ring, std::uint64_t seed) {
    const CmResult cm = is_cohen_macaulay(ring, seed);
    return cm.is_cm && *module_type(SubquotientModule::full(ring), cm.depth) == 1;
}

ParameterSystem random_sop(const RingHandle& ring, unsigned degree, Rng& rng, int max_attempts) {
    const int d = ring->dimension();
    ParameterSystem q;
    q.ring = ring;
    for (int j = 1; j <= d; ++j) {
        bool ok = false;
        for (int attempt = 0; attempt < max_attempts && !ok; ++attempt) {
            auto trial = q.elements;
            trial.push_back(random_form(ring, degree, std::nullopt, rng));
            if (dimension(RIdeal(ring, trial)) == d - j) {
                q.elements = std::move(trial);
                ok = true;
            }
        }
        if (!ok) throw PreconditionError("random_sop", "attempts exhausted at element " + std::to_string(j));
    }
    for (const auto& x : q.elements) q.degrees.push_back(x.degree());
    q.min_power = d == 0 ? 0 : static_cast<int>(degree);
    return q;
}

std::optional<ParameterSystem> deep_distinguished_sop(const RingHandle& ring, int r_total, unsigned min_degree,
                                                      unsigned max_degree, int tries_per_degree, Rng& rng) {
    for (unsigned k = std::max(min_degree, 1u); k <= max_degree; ++k) {
        for (int t = 0; t < tries_per_degree; ++t) {
            ParameterSystem q = distinguished_sop(ring, k, rng);
            if (static_cast<int>(index_of_reducibility(q.ideal())) == r_total) return q;
        }
    }
    return std::nullopt;
}

namespace {

PropertyReport analyze(const RingHandle& ring, const CheckOptions& options, bool want_witness) {
    PropertyReport report;
    report.ring_id = ring->id();
    report.dimension = ring->dimension();
    report.is_regular = is_regular(ring);
    const std::uint64_t base = options.seed ^ fnv1a(ring->id());
    Rng rng(base);

    const SubquotientModule full = SubquotientModule::full(ring);
    const DepthResult depth = depth_subquotient(full, depth_options(options, rng.split(1).next()));
    report.depth = depth.depth;
    report.is_cm = depth.depth == report.dimension;
    if (report.is_cm) {
        report.cm_type = module_type(full, depth);
        report.is_gorenstein = report.cm_type == 1;
    }

    const DimensionFiltration* filtration = nullptr;
    try {
        filtration = &dimension_filtration(ring);
    } catch (const PreconditionError& e) {
        report.notes.push_back(std::string("filtration unavailable: ") + e.what());
    }

    if (filtration) {
        report.lambda = filtration->lambda;
        bool all_cm = true;
        for (std::size_t i = 1; i <= filtration->length(); ++i) {
            const SubquotientModule C = filtration->quotient(i);
            QuotientDetail q;
            q.index = static_cast<int>(i);
            const DepthResult cd = depth_subquotient(C, depth_options(options, rng.split(100 + i).next()));
            q.dimension = cd.dimension;
            q.depth = cd.depth;
            q.is_cm = cd.depth == cd.dimension && cd.dimension == filtration->dims[i - 1];
            if (q.is_cm) q.type = module_type(C, cd);
            all_cm = all_cm && q.is_cm;
            report.quotients.push_back(q);
        }
        report.is_seq_cm = all_cm;
    } else if (report.is_cm) {
        // A CM ring is unmixed, so its filtration is (0) < R.
        report.lambda = {report.dimension};
        report.quotients.push_back({1, report.dimension, report.depth, true, report.cm_type});
        report.is_seq_cm = true;
        report.notes.push_back("filtration taken as (0) < R from the CM property");
    }

    if (report.is_seq_cm.value_or(false)) {
        std::map<int, int> r;
        for (int j = 0; j <= report.dimension; ++j) r[j] = 0;
        for (const auto& q : report.quotients) r[q.dimension] = q.type.value_or(0);
        report.socle_invariants = r;
        if (want_witness && report.dimension >= 1 && filtration) {
            int total = 0;
            for (const auto& [j, v] : r) total += v;
            Rng wrng = rng.split(7);
            auto q = deep_distinguished_sop(ring, total, options.deep_min_degree, options.deep_max_degree, options.sops_per_degree,
                                            wrng);
            if (q) {
                report.deep_witness = DeepWitness{generator_strings(q->elements), static_cast<unsigned>(q->min_power),
                                                  index_of_reducibility(q->ideal())};
            } else {
                report.notes.push_back("no deep distinguished witness up to degree " + std::to_string(options.deep_max_degree));
            }
        }
    }
    return report;
}

}  // namespace

PropertyReport is_sequentially_cm(const RingHandle& ring, const CheckOptions& options) { return analyze(ring, options, true); }

std::map<int, int> socle_invariants_seqcm(const RingHandle& ring, std::uint64_t seed) {
    CheckOptions o;
    o.seed = seed;
    const PropertyReport r = analyze(ring, o, false);
    if (!r.is_seq_cm.value_or(false)) throw PreconditionError("socle_invariants_seqcm", "ring is not sequentially Cohen-Macaulay");
    return *r.socle_invariants;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::refuted_as_expected: return "refuted_as_expected";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::contradicted: return "contradicted";
        case Verdict::not_witnessed: return "not_witnessed";
        case Verdict::not_applicable: return "not_applicable";
    }
    return "inconclusive";
}

Verdict parse_verdict(const std::string& s) {
    for (Verdict v : {Verdict::confirmed, Verdict::refuted_as_expected, Verdict::inconclusive, Verdict::contradicted,
                      Verdict::not_witnessed, Verdict::not_applicable})
        if (to_string(v) == s) return v;
    throw PreconditionError("parse_verdict", "unknown verdict '" + s + "'");
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids{"thm_6_7",     "thm_6_8",  "thm_6_1",    "thm_6_2",  "thm_6_3",
                                              "prop_P2_7",   "lemma_3_700", "prop_coe", "thm_3_800", "thm_T5_3",
                                              "thm_5800",    "lemma_5_1", "fact_F2_5_4"};
    return ids;
}

namespace {

class Harness {
public:
    Harness(std::string theorem, const RingHandle& ring, const VerifyParams& params, const PropertyReport& props)
        : ring_(ring), params_(params), props_(props), full_(SubquotientModule::full(ring)) {
        report_.theorem = std::move(theorem);
        report_.ring_id = ring->id();
        report_.parameters["seed"] = std::to_string(params.seed);
        report_.parameters["sops_per_theorem"] = std::to_string(params.sops_per_theorem);
        report_.parameters["n_cap"] = std::to_string(params.n_cap);
        report_.parameters["sop_degree"] = std::to_string(params.degree);
        rng_ = Rng(params.seed ^ fnv1a(report_.theorem + "/" + ring->id()));
    }

    VerificationReport run();

private:
    const RingHandle& ring_;
    const VerifyParams& params_;
    const PropertyReport& props_;
    SubquotientModule full_;
    VerificationReport report_;
    Rng rng_{0};
    bool inconclusive_ = false;
    bool conclusion_failed_ = false;
    bool invariant_failed_ = false;

    int d() const { return ring_->dimension(); }
    bool seq_cm() const { return props_.is_seq_cm.value_or(false); }
    bool unmixed() const { return props_.lambda.size() == 1 && props_.lambda.front() == d(); }
    const std::map<int, int>& r() const { return *props_.socle_invariants; }
    int r_at(int j) const {
        auto it = r().find(j);
        return it == r().end() ? 0 : it->second;
    }
    int r_total() const {
        int t = 0;
        for (const auto& [j, v] : r()) t += v;
        return t;
    }

    void compare(std::string quantity, const std::string& predicted, const std::string& computed, bool holds, bool invariant = false) {
        report_.comparisons.push_back({std::move(quantity), predicted, computed, holds});
        if (!holds) (invariant ? invariant_failed_ : conclusion_failed_) = true;
    }
    void compare(std::string quantity, std::int64_t predicted, std::int64_t computed, bool invariant = false) {
        compare(std::move(quantity), std::to_string(predicted), std::to_string(computed), predicted == computed, invariant);
    }
    void note(std::string s) { report_.notes.push_back(std::move(s)); }
    void witness(std::string s) { report_.witnesses.push_back(std::move(s)); }
    VerificationReport finish_not_applicable(std::string why) {
        note(std::move(why));
        report_.verdict = Verdict::not_applicable;
        return report_;
    }

    Verdict decide() const {
        if (invariant_failed_) return Verdict::contradicted;
        if (report_.hypothesis) {
            if (conclusion_failed_) return Verdict::contradicted;
            return inconclusive_ ? Verdict::inconclusive : Verdict::confirmed;
        }
        if (conclusion_failed_) return Verdict::refuted_as_expected;
        return inconclusive_ ? Verdict::inconclusive : Verdict::not_witnessed;
    }

    // Runs `body` for each of `count` samples, turning sampling and fit failures into inconclusive notes.
    void for_samples(int count, const std::function<void(int, Rng&)>& body) {
        for (int s = 0; s < count; ++s) {
            Rng rng = rng_.split(static_cast<std::uint64_t>(s) + 1);
            try {
                body(s, rng);
            } catch (const FitError& e) {
                inconclusive_ = true;
                note("sample " + std::to_string(s) + ": " + e.what());
            } catch (const PreconditionError& e) {
                inconclusive_ = true;
                note("sample " + std::to_string(s) + ": " + e.what());
            }
        }
    }

    ParameterSystem sample_sop(Rng& rng) { return random_sop(ring_, params_.degree, rng); }

    ParameterSystem deep_sop(Rng& rng) {
        auto q = deep_distinguished_sop(ring_, r_total(), params_.degree, params_.check.deep_max_degree,
                                        params_.check.sops_per_degree, rng);
        if (!q) throw PreconditionError("deep_distinguished_sop", "no witness with N(q) = sum r_j up to the degree cap");
        return *q;
    }

    void record_q(int s, const ParameterSystem& q) {
        witness("q[" + std::to_string(s) + "] = " + ideal_string(q.elements) + " (degree " + std::to_string(q.min_power) + ")");
    }

    std::string window_string(const CoefficientFit& fit) const {
        return "[" + std::to_string(fit.stabilization_index) + ", " + std::to_string(fit.values.back().first) + "]";
    }

    void socle_formula(const std::string& label, const std::function<std::int64_t(int)>& predicted, bool deep);
    void thm_6_1();
    void thm_6_2_or_3(bool gorenstein);
    void lemma_3_700();
    void prop_coe_or_t53(bool t53);
    void thm_3_800();
    void thm_5800();
    void lemma_5_1();
    void fact_f254();
};

// Compares N(q^{n+1}) with `predicted` on the stabilized window, q random (or deep).
void Harness::socle_formula(const std::string& label, const std::function<std::int64_t(int)>& predicted, bool deep) {
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = deep ? deep_sop(rng) : sample_sop(rng);
        record_q(s, q);
        PowerChain chain(q.ideal());
        const CoefficientFit fit = noetherian_coefficients(chain, full_, params_.n_cap);
        std::vector<std::int64_t> want, got;
        for (const auto& [n, v] : fit.values) {
            if (n < std::max(fit.stabilization_index, deep ? 1 : 0)) continue;
            want.push_back(predicted(n));
            got.push_back(v);
        }
        compare(label + " on q[" + std::to_string(s) + "], n in " + window_string(fit), list_string(want), list_string(got), want == got);
    });
}

void Harness::thm_6_1() {
    report_.hypothesis = props_.is_regular;
    PowerChain chain(RIdeal::maximal(ring_));
    try {
        const CoefficientFit fit = noetherian_coefficients(chain, full_, params_.n_cap);
        const std::int64_t f0 = fit.coefficients.front();
        compare("f_0(m)", "1", std::to_string(f0), f0 == 1);
        note("socle values of m: " + list_string([&] {
                 std::vector<std::int64_t> v;
                 for (const auto& p : fit.values) v.push_back(p.second);
                 return v;
             }()));
    } catch (const FitError& e) {
        inconclusive_ = true;
        note(e.what());
    }
}

void Harness::thm_6_2_or_3(bool gorenstein) {
    report_.hypothesis = gorenstein ? props_.is_gorenstein : props_.is_cm;
    if (!gorenstein && !props_.is_cm) note("r(R) undefined off the CM locus; N(q; R) of each sampled q is used as the type surrogate");
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = sample_sop(rng);
        record_q(s, q);
        PowerChain chain(q.ideal());
        const CoefficientFit f = noetherian_coefficients(chain, full_, params_.n_cap);
        const std::int64_t f0 = f.coefficients.front();
        const std::string tag = "[" + std::to_string(s) + "]";
        if (gorenstein) {
            compare("f_0(q" + tag + ")", 1, f0);
            if (d() >= 1) {
                const RIdeal I = socle_ideal(q.ideal());
                PowerChain ichain(I);
                const CoefficientFit eq = hilbert_coefficients(chain, full_, params_.n_cap);
                const CoefficientFit eI = hilbert_coefficients(ichain, full_, params_.n_cap);
                const std::int64_t diff = eI.coefficients[1] - eq.coefficients[1];
                compare("e_1(q:m) - e_1(q" + tag + ") <= 1", "<= 1", std::to_string(diff), diff <= 1);
                compare("e_1(q:m) - e_1(q" + tag + ") <= f_0(q)", "<= " + std::to_string(f0), std::to_string(diff), diff <= f0, true);
            }
        } else {
            const std::int64_t r = props_.is_cm ? *props_.cm_type : static_cast<std::int64_t>(index_of_reducibility(q.ideal()));
            compare("f_0(q" + tag + ") = r", r, f0);
        }
    });
}

void Harness::lemma_3_700() {
    report_.hypothesis = seq_cm();
    report_.parameters["lemma_n_max"] = std::to_string(params_.lemma_n_max);
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = report_.hypothesis ? deep_sop(rng) : sample_sop(rng);
        record_q(s, q);
        PowerChain chain(q.ideal());
        const StabilityReport st = check_socle_stability(chain, params_.lemma_n_max);
        compare("q^{n+1}:m = q^n(q:m) on q[" + std::to_string(s) + "] for n <= " + std::to_string(params_.lemma_n_max), "holds",
                st.holds ? "holds" : "fails at n = " + std::to_string(*st.first_failure), st.holds);
    });
}

void Harness::prop_coe_or_t53(bool t53) {
    report_.hypothesis = true;
    if (d() == 1) note("d = 1: the case split overlaps; the j = d branch is tested");
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = deep_sop(rng);
        record_q(s, q);
        const std::string tag = "[" + std::to_string(s) + "]";
        PowerChain qchain(q.ideal());
        PowerChain ichain(socle_ideal(q.ideal()));
        const CoefficientFit eq = hilbert_coefficients(qchain, full_, params_.n_cap);
        const CoefficientFit eI = hilbert_coefficients(ichain, full_, params_.n_cap);
        auto diff = [&](int j) { return eI.coefficients[j] - eq.coefficients[j]; };
        witness("e(q" + tag + ") = " + list_string(eq.coefficients) + ", e(I" + tag + ") = " + list_string(eI.coefficients));
        if (t53) {
            for (int i = 0; i < d(); ++i) {
                const std::int64_t sign = (i + 1) % 2 ? -1 : 1;
                compare("r_" + std::to_string(d() - i + 1) + " = (-1)^" + std::to_string(i + 1) + "(e_" + std::to_string(i) +
                            "(I) - e_" + std::to_string(i) + "(q" + tag + "))",
                        r_at(d() - i + 1), sign * diff(i));
            }
            return;
        }
        const CoefficientFit f = noetherian_coefficients(qchain, full_, params_.n_cap);
        witness("f(q" + tag + ") = " + list_string(f.coefficients));
        for (int j = 1; j <= d(); ++j) {
            const std::string js = std::to_string(j);
            compare("e_" + js + "(I) - e_" + js + "(q" + tag + ") = f_" + std::to_string(j - 1) + "(q)", f.coefficients[j - 1], diff(j));
            std::int64_t formula;
            if (j == d()) formula = (d() - 1) % 2 ? -(r_at(1) + r_at(0)) : (r_at(1) + r_at(0));
            else formula = ((j - 1) % 2 ? -1 : 1) * r_at(d() - j + 1);
            compare("f_" + std::to_string(j - 1) + "(q" + tag + ") from r", formula, f.coefficients[j - 1]);
        }
    });
}

void Harness::thm_3_800() {
    report_.hypothesis = true;
    const int total = r_total();
    for (unsigned k = 1; k <= params_.check.deep_max_degree; ++k) {
        std::vector<std::int64_t> got;
        bool all = true;
        bool failed = false;
        for (int s = 0; s < params_.sops_per_theorem; ++s) {
            Rng rng = rng_.split(1000 * k + s);
            try {
                const ParameterSystem q = distinguished_sop(ring_, k, rng);
                const auto N = static_cast<std::int64_t>(index_of_reducibility(q.ideal()));
                got.push_back(N);
                all = all && N == total;
            } catch (const PreconditionError& e) {
                failed = true;
                note("degree " + std::to_string(k) + ": " + e.what());
            }
        }
        witness("degree " + std::to_string(k) + ": N(q) = " + list_string(got));
        if (all && !failed) {
            report_.parameters["deep_degree"] = std::to_string(k);
            compare("N(q) over distinguished q in m^" + std::to_string(k), std::to_string(total) + " each", list_string(got), true);
            return;
        }
    }
    inconclusive_ = true;
    note("no degree up to " + std::to_string(params_.check.deep_max_degree) + " gave N(q) = sum r_j for every sample");
}

void Harness::thm_5800() {
    report_.hypothesis = true;
    if (d() < 2) note("j ranges over 0..d-2, empty for d = " + std::to_string(d()));
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = deep_sop(rng);
        record_q(s, q);
        PowerChain chain(q.ideal());
        const CoefficientFit f = noetherian_coefficients(chain, full_, params_.n_cap);
        witness("f(q[" + std::to_string(s) + "]) = " + list_string(f.coefficients));
        for (int j = 0; j + 2 <= d(); ++j)
            compare("(-1)^" + std::to_string(j) + " f_" + std::to_string(j) + "(q[" + std::to_string(s) + "]) = r_" +
                        std::to_string(d() - j),
                    r_at(d() - j), (j % 2 ? -1 : 1) * f.coefficients[j]);
    });
}

void Harness::lemma_5_1() {
    report_.hypothesis = true;
    note("tested with f_0(q; R) on the right-hand side");
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = sample_sop(rng);
        record_q(s, q);
        PowerChain qchain(q.ideal());
        PowerChain ichain(socle_ideal(q.ideal()));
        const CoefficientFit eq = hilbert_coefficients(qchain, full_, params_.n_cap);
        const CoefficientFit eI = hilbert_coefficients(ichain, full_, params_.n_cap);
        const CoefficientFit f = noetherian_coefficients(qchain, full_, params_.n_cap);
        const std::int64_t diff = eI.coefficients[1] - eq.coefficients[1];
        compare("e_1(I) - e_1(q[" + std::to_string(s) + "]) <= f_0(q)", "<= " + std::to_string(f.coefficients[0]), std::to_string(diff),
                diff <= f.coefficients[0]);
    });
}

void Harness::fact_f254() {
    report_.hypothesis = seq_cm();
    for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
        const ParameterSystem q = report_.hypothesis ? deep_sop(rng) : sample_sop(rng);
        record_q(s, q);
        const bool ok = check_stable_socle_square(q.ideal());
        compare("I^2 = qI on q[" + std::to_string(s) + "]", "holds", ok ? "holds" : "fails", ok);
    });
}

VerificationReport Harness::run() {
    const std::string& t = report_.theorem;
    const bool need_d1 = t == "thm_6_7" || t == "thm_6_8" || t == "prop_P2_7" || t == "lemma_3_700" || t == "prop_coe" ||
                         t == "thm_3_800" || t == "thm_T5_3" || t == "thm_5800" || t == "lemma_5_1" || t == "fact_F2_5_4";
    if (need_d1 && d() < 1) return finish_not_applicable("requires dim R >= 1");
    const bool needs_r = t == "prop_P2_7" || t == "prop_coe" || t == "thm_3_800" || t == "thm_T5_3" || t == "thm_5800";
    if (needs_r && !seq_cm()) return finish_not_applicable("r_j(R) is only computed for sequentially CM rings");
    const bool needs_unmixed = t == "thm_6_1" || t == "thm_6_2" || t == "thm_6_3";
    if (needs_unmixed && props_.lambda.empty()) return finish_not_applicable("unmixedness undecided without a dimension filtration");
    if (needs_unmixed && !unmixed()) return finish_not_applicable("ring is not unmixed");

    if (t == "thm_6_7") {
        report_.hypothesis = props_.is_gorenstein;
        socle_formula("N(q^{n+1}) = binom(n+d-1, d-1)", [&](int n) { return binom(n + d() - 1, d() - 1); }, false);
    } else if (t == "thm_6_8") {
        report_.hypothesis = props_.is_cm;
        if (seq_cm()) {
            const int rd = r_at(d());
            report_.parameters["r_d"] = std::to_string(rd);
            socle_formula("N(q^{n+1}) = r_d binom(n+d-1, d-1)", [&, rd](int n) { return rd * binom(n + d() - 1, d() - 1); }, false);
        } else {
            note("r_d(R) unavailable; f_0(q) of each sample is the surrogate, so only the lower coefficients are tested");
            for_samples(params_.sops_per_theorem, [&](int s, Rng& rng) {
                const ParameterSystem q = sample_sop(rng);
                record_q(s, q);
                PowerChain chain(q.ideal());
                const CoefficientFit f = noetherian_coefficients(chain, full_, params_.n_cap);
                std::vector<std::int64_t> want(f.coefficients.size(), 0), got = f.coefficients;
                want[0] = got[0];
                compare("f(q[" + std::to_string(s) + "]) = (r_d, 0, ..., 0)", list_string(want), list_string(got), want == got);
            });
        }
    } else if (t == "thm_6_1") {
        thm_6_1();
    } else if (t == "thm_6_2") {
        thm_6_2_or_3(true);
    } else if (t == "thm_6_3") {
        thm_6_2_or_3(false);
    } else if (t == "prop_P2_7") {
        report_.hypothesis = true;
        socle_formula("N(q^{n+1}) = sum_i r_i binom(n+i-1, i-1) + r_0",
                      [&](int n) {
                          std::int64_t v = r_at(0);
                          for (int i = 1; i <= d(); ++i) v += r_at(i) * binom(n + i - 1, i - 1);
                          return v;
                      },
                      true);
    } else if (t == "lemma_3_700") {
        lemma_3_700();
    } else if (t == "prop_coe") {
        prop_coe_or_t53(false);
    } else if (t == "thm_3_800") {
        thm_3_800();
    } else if (t == "thm_T5_3") {
        prop_coe_or_t53(true);
    } else if (t == "thm_5800") {
        thm_5800();
    } else if (t == "lemma_5_1") {
        PowerChain m(RIdeal::maximal(ring_));
        try {
            const CoefficientFit e = hilbert_coefficients(m, full_, params_.n_cap);
            report_.parameters["e_0(m)"] = std::to_string(e.coefficients.front());
            if (e.coefficients.front() <= 1) return finish_not_applicable("requires e_0(m) > 1");
        } catch (const FitError& e) {
            inconclusive_ = true;
            note(e.what());
            report_.verdict = Verdict::inconclusive;
            return report_;
        }
        lemma_5_1();
    } else if (t == "fact_F2_5_4") {
        fact_f254();
    }
    report_.verdict = decide();
    return report_;
}

}  // namespace

VerificationReport verify_theorem(const std::string& theorem, const RingHandle& ring, const VerifyParams& params,
                                  const PropertyReport* properties) {
    const auto& ids = theorem_ids();
    if (std::find(ids.begin(), ids.end(), theorem) == ids.end())
        throw PreconditionError("verify_theorem", "unknown theorem id '" + theorem + "'");
    std::optional<PropertyReport> own;
    if (!properties) {
        CheckOptions o = params.check;
        o.seed = params.seed;
        own = is_sequentially_cm(ring, o);
        properties = &*own;
    }
    Harness h(theorem, ring, params, *properties);
    return h.run();
}

}  // namespace socle
