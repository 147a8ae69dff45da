#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "socle/cli.hpp"
#include "socle/errors.hpp"
#include "socle/parser.hpp"
#include "socle/socle.hpp"

#ifndef SOCLE_DEFAULT_CORPUS
#define SOCLE_DEFAULT_CORPUS "corpus/default.json"
#endif

namespace socle {

namespace {

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur += c;
        }
    }
    if (!cur.empty() || !out.empty()) out.push_back(cur);
    std::erase_if(out, [](const std::string& x) { return x.empty(); });
    return out;
}

std::string brace_list(const std::vector<Polynomial>& gens) {
    std::string s = "{";
    for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? ", " : "") + to_string(gens[i]);
    return s + "}";
}

std::string tuple_text(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

struct PolyArgs {
    std::string vars, gens, other, field = "QQ", order = "degrevlex";
    unsigned max_degree = 10, power = 2;
};

struct RingArgs {
    std::string corpus = SOCLE_DEFAULT_CORPUS;
    std::string ring, vars, defining, field = "QQ", ideal;
    int n_cap = kDefaultSampleCap, n_max = 6;
    bool json = false;
};

struct CorpusArgs {
    std::string corpus = SOCLE_DEFAULT_CORPUS, rings, theorems, output;
    std::uint64_t seed = 0;
    int sops = 5, n_cap = kDefaultSampleCap;
    unsigned degree = 2, jobs = 0;
    bool timings = false;
};

FieldSpec field_from(const std::string& text) {
    Json doc = {{"schema_version", kCorpusSchemaVersion},
                {"entries", Json::array({{{"id", "_"}, {"field", text}, {"variables", {"x"}}}})}};
    return parse_corpus(doc).entries.front().field;
}

RingPtr poly_ring(const PolyArgs& a) {
    std::vector<std::string> vars = split_list(a.vars);
    if (vars.empty()) vars = scan_variables(a.gens + "," + a.other);
    if (vars.empty()) throw PreconditionError("ring", "no variables given or found");
    return PolyRing::make(vars, field_from(a.field), parse_order(a.order));
}

RingHandle quotient_ring(const RingArgs& a) {
    if (!a.ring.empty()) {
        const Corpus corpus = load_corpus(a.corpus);
        const CorpusEntry* e = corpus.find(a.ring);
        if (!e) throw PreconditionError("socle", "no corpus entry '" + a.ring + "'");
        return build_ring(*e);
    }
    CorpusEntry e;
    e.id = "inline";
    e.field = field_from(a.field);
    e.variables = split_list(a.vars);
    if (e.variables.empty()) e.variables = scan_variables(a.defining + "," + a.ideal);
    for (const auto& p : parse_polynomial_list(a.defining, PolyRing::make(e.variables, e.field))) e.defining_generators.push_back(to_string(p));
    return build_ring(e);
}

int report_run(const RunReport& report, const CorpusArgs& a, std::ostream& out, std::ostream& err) {
    const std::string text = to_json(report).dump(2) + "\n";
    if (a.output.empty()) {
        out << text;
    } else {
        std::ofstream f(a.output, std::ios::trunc);
        if (!f) throw PreconditionError("report", "cannot write " + a.output);
        f << text;
    }
    if (!report.ok()) {
        Json failures = Json::array();
        for (const auto& f : report.failures) failures.push_back({{"ring_id", f.ring_id}, {"kind", f.kind}, {"detail", f.detail}});
        err << Json{{"failures", failures}}.dump() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact socle, index-of-reducibility and Hilbert coefficient toolkit", "ringtool"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));
    std::string cache_dir;
    bool no_cache = false;
    app.add_option("--cache-dir", cache_dir, std::string("Groebner cache directory (default: $") + kCacheEnv + ")");
    app.add_flag("--no-cache", no_cache, "Disable the on-disk Groebner cache");

    std::function<int()> action;

    PolyArgs pa;
    auto* ring = app.add_subcommand("ring", "Ideal computations in a polynomial ring");
    ring->require_subcommand(1);
    auto poly_opts = [&](CLI::App* c) {
        c->add_option("--vars", pa.vars, "Comma-separated variables (default: scanned from the generators)");
        c->add_option("--gens", pa.gens, "Comma-separated generators")->required();
        c->add_option("--field", pa.field, "QQ or GF(p)");
        c->add_option("--order", pa.order, "degrevlex or lex");
    };
    auto ring_cmd = [&](const char* name, const char* help, std::function<void(const Ideal&)> body) {
        auto* c = ring->add_subcommand(name, help);
        poly_opts(c);
        c->callback([&, body] {
            action = [&, body] {
                const RingPtr P = poly_ring(pa);
                body(Ideal::parse(P, pa.gens));
                return 0;
            };
        });
        return c;
    };
    auto other_of = [&](const Ideal& I) { return Ideal::parse(I.ring(), pa.other); };
    ring_cmd("gb", "Reduced Groebner basis", [&](const Ideal& I) { out << brace_list(I.groebner().generators()) << "\n"; });
    ring_cmd("dim", "Krull dimension of P/I", [&](const Ideal& I) { out << krull_dimension(I) << "\n"; });
    ring_cmd("hf", "Hilbert function of P/I", [&](const Ideal& I) {
        if (!I.is_homogeneous()) throw PreconditionError("hf", "ideal is not homogeneous");
        for (unsigned e = 0; e <= pa.max_degree; ++e) out << (e ? " " : "") << graded_hilbert_function(I, e);
        out << "\n";
    })->add_option("--max-degree", pa.max_degree);
    ring_cmd("length", "dim_k P/I of a zero-dimensional ideal", [&](const Ideal& I) { out << artinian_length(I) << "\n"; });
    ring_cmd("colon", "I : J", [&](const Ideal& I) { out << brace_list(colon(I, other_of(I)).groebner().generators()) << "\n"; })
        ->add_option("--other", pa.other, "Generators of J")->required();
    ring_cmd("intersect", "I intersect J", [&](const Ideal& I) {
        out << brace_list(intersect(I, other_of(I)).groebner().generators()) << "\n";
    })->add_option("--other", pa.other, "Generators of J")->required();
    ring_cmd("saturate", "I : J^infinity (J defaults to the variables)", [&](const Ideal& I) {
        const Ideal J = pa.other.empty() ? Ideal::maximal(I.ring()) : other_of(I);
        const Saturation s = saturate(I, J);
        out << brace_list(s.ideal.groebner().generators()) << "\nexponent " << s.exponent << "\n";
    })->add_option("--other", pa.other, "Generators of J");
    ring_cmd("power", "I^k", [&](const Ideal& I) { out << brace_list(ideal_power(I, pa.power).groebner().generators()) << "\n"; })
        ->add_option("--k", pa.power, "Exponent");

    RingArgs ra;
    auto* socle = app.add_subcommand("socle", "Socle invariants of an m-primary ideal of a quotient ring");
    socle->require_subcommand(1);
    auto socle_cmd = [&](const char* name, const char* help, std::function<void(const RIdeal&)> body) {
        auto* c = socle->add_subcommand(name, help);
        c->add_option("--corpus", ra.corpus, "Corpus file used to resolve --ring");
        c->add_option("--ring", ra.ring, "Corpus entry id");
        c->add_option("--vars", ra.vars, "Inline ring: variables");
        c->add_option("--defining", ra.defining, "Inline ring: defining generators");
        c->add_option("--field", ra.field, "Inline ring: QQ or GF(p)");
        c->add_option("--ideal", ra.ideal, "Generators of the target ideal")->required();
        c->add_flag("--json", ra.json, "Structured output");
        c->callback([&, body] {
            action = [&, body] {
                const RingHandle R = quotient_ring(ra);
                body(RIdeal::parse(R, ra.ideal));
                return 0;
            };
        });
        return c;
    };
    auto fit_out = [&](const char* label, const CoefficientFit& fit) {
        if (ra.json) {
            Json j;
            j[label] = fit.coefficients;
            j["stabilization_index"] = fit.stabilization_index;
            j["window"] = fit.window_used;
            Json values = Json::array();
            for (auto [n, v] : fit.values) values.push_back({n, v});
            j["values"] = std::move(values);
            out << j.dump() << "\n";
        } else {
            out << label << " = " << tuple_text(fit.coefficients) << "  (stable from n = " << fit.stabilization_index
                << ", window n <= " << fit.window_used << ")\n";
        }
    };
    auto fit_guard = [&](auto&& compute) {
        try {
            return compute();
        } catch (const FitError& e) {
            throw FitError(std::string(e.what()) + "; try a larger --n-cap");
        }
    };
    socle_cmd("socle", "J : m", [&](const RIdeal& J) {
        const RIdeal s = socle_ideal(J);
        if (ra.json) {
            Json g = Json::array();
            for (const auto& p : s.generators()) g.push_back(to_string(p));
            out << Json{{"socle", g}}.dump() << "\n";
        } else {
            out << brace_list(s.generators()) << "\n";
        }
    });
    socle_cmd("index", "Index of reducibility N(J)", [&](const RIdeal& J) {
        const auto n = index_of_reducibility(J);
        out << (ra.json ? Json{{"index", n}}.dump() : std::to_string(n)) << "\n";
    });
    socle_cmd("hilbert-coeffs", "Hilbert-Samuel coefficients e_i", [&](const RIdeal& J) {
        fit_out("e", fit_guard([&] { return hilbert_coefficients(J, SubquotientModule::full(J.ring()), ra.n_cap); }));
    })->add_option("--n-cap", ra.n_cap, "Largest n sampled");
    socle_cmd("noether-coeffs", "Noetherian coefficients f_i", [&](const RIdeal& J) {
        fit_out("f", fit_guard([&] { return noetherian_coefficients(J, SubquotientModule::full(J.ring()), ra.n_cap); }));
    })->add_option("--n-cap", ra.n_cap, "Largest n sampled");
    socle_cmd("socle-values", "N(J^{n+1}) for n = 0..n-max", [&](const RIdeal& J) {
        const auto v = socle_function_values(J, SubquotientModule::full(J.ring()), ra.n_max);
        if (ra.json) {
            out << Json{{"values", v}}.dump() << "\n";
        } else {
            for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
            out << "\n";
        }
    })->add_option("--n-max", ra.n_max, "Largest n");

    CorpusArgs ca;
    auto corpus_opts = [&](CLI::App* c) {
        c->add_option("--corpus", ca.corpus, "Corpus file");
        c->add_option("--rings", ca.rings, "Comma-separated entry ids (default: all)");
        c->add_option("--seed", ca.seed, "Base seed");
        c->add_option("--jobs", ca.jobs, "Worker threads (0: hardware concurrency)");
        c->add_option("--output,-o", ca.output, "Write the report here instead of stdout");
        c->add_flag("--timings", ca.timings, "Record per-stage wall time (makes reports run-dependent)");
    };
    auto run_with = [&](bool verify) {
        return [&, verify] {
            action = [&, verify] {
                RunOptions o;
                o.run_verify = verify;
                o.verify.seed = ca.seed;
                o.verify.sops_per_theorem = ca.sops;
                o.verify.n_cap = ca.n_cap;
                o.verify.degree = ca.degree;
                o.theorems = split_list(ca.theorems);
                o.ring_ids = split_list(ca.rings);
                o.timings = ca.timings;
                o.jobs = ca.jobs;
                return report_run(run_corpus(load_corpus(ca.corpus), o), ca, out, err);
            };
        };
    };
    auto* check = app.add_subcommand("check", "Property decisions for every corpus ring");
    corpus_opts(check);
    check->callback(run_with(false));
    auto* verify = app.add_subcommand("verify", "Replay the characterizations on the corpus");
    corpus_opts(verify);
    verify->add_option("--theorems", ca.theorems, "Comma-separated theorem ids (default: all)");
    verify->add_option("--sops-per-theorem", ca.sops, "Sampled parameter ideals per theorem");
    verify->add_option("--n-cap", ca.n_cap, "Largest n sampled in coefficient fits");
    verify->add_option("--degree", ca.degree, "Degree of sampled parameters");
    verify->callback(run_with(true));
    auto* list = app.add_subcommand("theorems", "List theorem ids");
    list->callback([&] {
        action = [&] {
            for (const auto& t : theorem_ids()) out << t << "\n";
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o, r;
        const int code = app.exit(e, o, r);
        out << o.str();
        err << r.str();
        return code == 0 ? 0 : 2;
    }

    if (!no_cache) {
        if (cache_dir.empty())
            if (const char* env = std::getenv(kCacheEnv)) cache_dir = env;
        if (!cache_dir.empty()) set_groebner_store(std::make_shared<DiskGroebnerStore>(cache_dir));
    }

    int code = 2;
    try {
        code = action ? action() : 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
    } catch (const PreconditionError& e) {
        err << "error in " << e.operation() << ": " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
    }
    set_groebner_store(nullptr);
    return code;
}

}  // namespace socle
