#include "socle/cli.hpp"

#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "socle/errors.hpp"
#include "socle/parser.hpp"

namespace socle {

namespace {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

FieldSpec parse_field(const std::string& text) {
    if (text == "QQ" || text == "Q") return FieldSpec::rationals();
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        const std::string digits = text.substr(3, text.size() - 4);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit))
            return FieldSpec::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw PreconditionError("parse_corpus", "unknown field '" + text + "'");
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
    if (!j.is_array()) throw PreconditionError("parse_corpus", what + " must be a list");
    std::vector<std::string> out;
    for (const auto& s : j) {
        if (!s.is_string()) throw PreconditionError("parse_corpus", what + " must hold strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

template <class T>
Json optional_json(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::optional<T> optional_from(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<T>();
}

Json int_map_json(const std::map<int, int>& m) {
    Json out = Json::object();
    for (auto [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

std::map<int, int> int_map_from(const Json& j) {
    std::map<int, int> out;
    for (auto it = j.begin(); it != j.end(); ++it) out[std::stoi(it.key())] = it.value().get<int>();
    return out;
}

}  // namespace

const CorpusEntry* Corpus::find(const std::string& entry_id) const {
    for (const auto& e : entries)
        if (e.id == entry_id) return &e;
    return nullptr;
}

Corpus parse_corpus(const Json& doc) {
    if (!doc.is_object()) throw PreconditionError("parse_corpus", "document must be an object");
    const int version = doc.value("schema_version", 0);
    if (version != kCorpusSchemaVersion)
        throw PreconditionError("parse_corpus", "unsupported schema_version " + std::to_string(version));
    Corpus c;
    c.id = doc.value("corpus_id", std::string("corpus"));
    if (!doc.contains("entries") || !doc.at("entries").is_array())
        throw PreconditionError("parse_corpus", "missing entries list");
    for (const auto& e : doc.at("entries")) {
        CorpusEntry entry;
        entry.id = e.at("id").get<std::string>();
        entry.field = parse_field(e.value("field", std::string("QQ")));
        entry.variables = string_list(e.at("variables"), "variables");
        entry.defining_generators = string_list(e.value("defining", Json::array()), "defining");
        if (e.contains("decomposition") && !e.at("decomposition").is_null()) {
            std::vector<std::vector<std::string>> dec;
            for (const auto& comp : e.at("decomposition")) dec.push_back(string_list(comp, "decomposition component"));
            entry.supplied_decomposition = std::move(dec);
        }
        if (e.contains("expected")) entry.expected = e.at("expected");
        if (c.find(entry.id)) throw PreconditionError("parse_corpus", "duplicate entry id '" + entry.id + "'");
        c.entries.push_back(std::move(entry));
    }
    return c;
}

Corpus load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("load_corpus", "cannot open " + path.string());
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const Json::exception& e) {
        throw PreconditionError("load_corpus", path.string() + ": " + e.what());
    }
    return parse_corpus(doc);
}

Json to_json(const Corpus& corpus) {
    Json doc;
    doc["schema_version"] = kCorpusSchemaVersion;
    doc["corpus_id"] = corpus.id;
    doc["entries"] = Json::array();
    for (const auto& e : corpus.entries) {
        Json j;
        j["id"] = e.id;
        j["field"] = e.field.to_string();
        j["variables"] = e.variables;
        j["defining"] = e.defining_generators;
        if (e.supplied_decomposition) j["decomposition"] = *e.supplied_decomposition;
        if (!e.expected.empty()) j["expected"] = e.expected;
        doc["entries"].push_back(std::move(j));
    }
    return doc;
}

RingHandle build_ring(const CorpusEntry& entry) {
    const RingPtr P = PolyRing::make(entry.variables, entry.field);
    std::vector<Polynomial> gens;
    for (const auto& g : entry.defining_generators) gens.push_back(parse_polynomial(g, P));
    std::optional<std::vector<Ideal>> dec;
    if (entry.supplied_decomposition) {
        dec.emplace();
        for (const auto& comp : *entry.supplied_decomposition) {
            std::vector<Polynomial> cg;
            for (const auto& g : comp) cg.push_back(parse_polynomial(g, P));
            dec->emplace_back(P, std::move(cg));
        }
    }
    const Ideal defining(P, std::move(gens));
    if (dec) {
        if (dec->empty()) throw PreconditionError("build_ring", entry.id + ": empty decomposition");
        Ideal meet = dec->front();
        for (std::size_t i = 1; i < dec->size(); ++i) meet = intersect(meet, (*dec)[i]);
        if (!(meet == defining))
            throw PreconditionError("build_ring", entry.id + ": supplied decomposition does not intersect to the defining ideal");
    }
    return RingPresentation::make(defining, entry.id, std::move(dec));
}

Json to_json(const PropertyReport& r) {
    Json j;
    j["ring_id"] = r.ring_id;
    j["dimension"] = r.dimension;
    j["depth"] = r.depth;
    j["is_regular"] = r.is_regular;
    j["is_cm"] = r.is_cm;
    j["is_gorenstein"] = r.is_gorenstein;
    j["is_seq_cm"] = optional_json(r.is_seq_cm);
    j["cm_type"] = optional_json(r.cm_type);
    j["socle_invariants"] = r.socle_invariants ? int_map_json(*r.socle_invariants) : Json(nullptr);
    j["lambda"] = r.lambda;
    j["quotients"] = Json::array();
    for (const auto& q : r.quotients) {
        Json qj;
        qj["index"] = q.index;
        qj["dimension"] = q.dimension;
        qj["depth"] = q.depth;
        qj["is_cm"] = q.is_cm;
        qj["type"] = optional_json(q.type);
        j["quotients"].push_back(std::move(qj));
    }
    if (r.deep_witness) {
        Json w;
        w["generators"] = r.deep_witness->generators;
        w["degree"] = r.deep_witness->degree;
        w["index_of_reducibility"] = r.deep_witness->index_of_reducibility;
        j["deep_witness"] = std::move(w);
    } else {
        j["deep_witness"] = nullptr;
    }
    j["notes"] = r.notes;
    return j;
}

PropertyReport property_report_from_json(const Json& j) {
    PropertyReport r;
    r.ring_id = j.at("ring_id").get<std::string>();
    r.dimension = j.at("dimension").get<int>();
    r.depth = j.at("depth").get<int>();
    r.is_regular = j.at("is_regular").get<bool>();
    r.is_cm = j.at("is_cm").get<bool>();
    r.is_gorenstein = j.at("is_gorenstein").get<bool>();
    r.is_seq_cm = optional_from<bool>(j, "is_seq_cm");
    r.cm_type = optional_from<int>(j, "cm_type");
    if (!j.at("socle_invariants").is_null()) r.socle_invariants = int_map_from(j.at("socle_invariants"));
    r.lambda = j.at("lambda").get<std::vector<int>>();
    for (const auto& qj : j.at("quotients")) {
        QuotientDetail q;
        q.index = qj.at("index").get<int>();
        q.dimension = qj.at("dimension").get<int>();
        q.depth = qj.at("depth").get<int>();
        q.is_cm = qj.at("is_cm").get<bool>();
        q.type = optional_from<int>(qj, "type");
        r.quotients.push_back(q);
    }
    if (!j.at("deep_witness").is_null()) {
        const auto& w = j.at("deep_witness");
        r.deep_witness = DeepWitness{w.at("generators").get<std::vector<std::string>>(), w.at("degree").get<unsigned>(),
                                     w.at("index_of_reducibility").get<std::uint64_t>()};
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const VerificationReport& r) {
    Json j;
    j["theorem"] = r.theorem;
    j["ring_id"] = r.ring_id;
    j["verdict"] = to_string(r.verdict);
    j["hypothesis"] = r.hypothesis;
    Json params = Json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    j["parameters"] = std::move(params);
    j["comparisons"] = Json::array();
    for (const auto& c : r.comparisons)
        j["comparisons"].push_back({{"quantity", c.quantity}, {"predicted", c.predicted}, {"computed", c.computed}, {"holds", c.holds}});
    j["witnesses"] = r.witnesses;
    j["notes"] = r.notes;
    return j;
}

VerificationReport verification_report_from_json(const Json& j) {
    VerificationReport r;
    r.theorem = j.at("theorem").get<std::string>();
    r.ring_id = j.at("ring_id").get<std::string>();
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.hypothesis = j.at("hypothesis").get<bool>();
    for (auto it = j.at("parameters").begin(); it != j.at("parameters").end(); ++it)
        r.parameters[it.key()] = it.value().get<std::string>();
    for (const auto& c : j.at("comparisons"))
        r.comparisons.push_back({c.at("quantity").get<std::string>(), c.at("predicted").get<std::string>(),
                                 c.at("computed").get<std::string>(), c.at("holds").get<bool>()});
    r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

Json to_json(const RunReport& r) {
    Json j;
    j["schema_version"] = kReportSchemaVersion;
    j["tool_version"] = r.tool_version;
    j["corpus_id"] = r.corpus_id;
    j["command"] = r.command;
    j["seed"] = r.seed;
    j["rings"] = Json::array();
    for (const auto& ring : r.rings) {
        Json rj;
        rj["ring_id"] = ring.ring_id;
        rj["properties"] = ring.properties ? to_json(*ring.properties) : Json(nullptr);
        rj["verifications"] = Json::array();
        for (const auto& v : ring.verifications) rj["verifications"].push_back(to_json(v));
        if (!ring.timings.empty()) {
            Json t = Json::object();
            for (const auto& [k, v] : ring.timings) t[k] = v;
            rj["timings_ms"] = std::move(t);
        }
        j["rings"].push_back(std::move(rj));
    }
    j["failures"] = Json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"ring_id", f.ring_id}, {"kind", f.kind}, {"detail", f.detail}});
    j["ok"] = r.ok();
    return j;
}

RunReport run_report_from_json(const Json& j) {
    const int version = j.value("schema_version", 0);
    if (version != kReportSchemaVersion)
        throw PreconditionError("run_report_from_json", "unsupported schema_version " + std::to_string(version));
    RunReport r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.corpus_id = j.at("corpus_id").get<std::string>();
    r.command = j.at("command").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (const auto& rj : j.at("rings")) {
        RingRun ring;
        ring.ring_id = rj.at("ring_id").get<std::string>();
        if (!rj.at("properties").is_null()) ring.properties = property_report_from_json(rj.at("properties"));
        for (const auto& v : rj.at("verifications")) ring.verifications.push_back(verification_report_from_json(v));
        if (rj.contains("timings_ms"))
            for (auto it = rj.at("timings_ms").begin(); it != rj.at("timings_ms").end(); ++it)
                ring.timings[it.key()] = it.value().get<double>();
        r.rings.push_back(std::move(ring));
    }
    for (const auto& f : j.at("failures"))
        r.failures.push_back({f.at("ring_id").get<std::string>(), f.at("kind").get<std::string>(), f.at("detail").get<std::string>()});
    return r;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

// Compares one expected property against the computed report.
void check_expectations(const CorpusEntry& entry, const RingRun& run, std::vector<Failure>& failures) {
    auto mismatch = [&](const std::string& key, const Json& want, const Json& got) {
        failures.push_back({entry.id, "expectation", key + ": expected " + want.dump() + ", got " + got.dump()});
    };
    const Json props = run.properties ? to_json(*run.properties) : Json(nullptr);
    for (auto it = entry.expected.begin(); it != entry.expected.end(); ++it) {
        const std::string& key = it.key();
        if (key == "verdicts") {
            for (auto v = it.value().begin(); v != it.value().end(); ++v) {
                auto found = std::find_if(run.verifications.begin(), run.verifications.end(),
                                          [&](const VerificationReport& r) { return r.theorem == v.key(); });
                if (found == run.verifications.end()) continue;  // theorem not requested in this run
                const Json got = to_string(found->verdict);
                if (got != v.value()) mismatch("verdicts." + v.key(), v.value(), got);
            }
            continue;
        }
        if (props.is_null()) continue;
        if (!props.contains(key)) {
            failures.push_back({entry.id, "expectation", "unknown property '" + key + "'"});
            continue;
        }
        if (props.at(key) != it.value()) mismatch(key, it.value(), props.at(key));
    }
}

RingRun run_entry(const CorpusEntry& entry, const RunOptions& options, std::vector<Failure>& failures) {
    RingRun run;
    run.ring_id = entry.id;
    try {
        auto t0 = Clock::now();
        const RingHandle ring = build_ring(entry);
        if (options.timings) run.timings["build"] = elapsed_ms(t0);

        CheckOptions check = options.verify.check;
        check.seed = options.verify.seed;
        t0 = Clock::now();
        run.properties = is_sequentially_cm(ring, check);
        if (options.timings) run.timings["properties"] = elapsed_ms(t0);

        if (options.run_verify) {
            VerifyParams params = options.verify;
            params.check = check;
            const auto& ids = options.theorems.empty() ? theorem_ids() : options.theorems;
            for (const auto& t : ids) {
                t0 = Clock::now();
                VerificationReport v = verify_theorem(t, ring, params, &*run.properties);
                if (options.timings) run.timings["verify/" + t] = elapsed_ms(t0);
                if (v.verdict == Verdict::inconclusive || v.verdict == Verdict::contradicted)
                    failures.push_back({entry.id, to_string(v.verdict), t});
                run.verifications.push_back(std::move(v));
            }
        }
        check_expectations(entry, run, failures);
    } catch (const std::exception& e) {
        failures.push_back({entry.id, "error", e.what()});
    }
    return run;
}

}  // namespace

RunReport run_corpus(const Corpus& corpus, const RunOptions& options) {
    RunReport report;
    report.corpus_id = corpus.id;
    report.command = options.run_verify ? "verify" : "check";
    report.seed = options.verify.seed;

    for (const auto& t : options.theorems)
        if (std::find(theorem_ids().begin(), theorem_ids().end(), t) == theorem_ids().end())
            throw PreconditionError("run_corpus", "unknown theorem '" + t + "'");

    std::vector<const CorpusEntry*> selected;
    for (const auto& id : options.ring_ids)
        if (!corpus.find(id)) throw PreconditionError("run_corpus", "no corpus entry '" + id + "'");
    for (const auto& e : corpus.entries)
        if (options.ring_ids.empty() || std::find(options.ring_ids.begin(), options.ring_ids.end(), e.id) != options.ring_ids.end())
            selected.push_back(&e);

    struct Outcome {
        RingRun run;
        std::vector<Failure> failures;
    };
    const unsigned jobs = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    std::vector<Outcome> outcomes(selected.size());
    // Workers pull entries by index; results land in corpus order.
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++)
            outcomes[i].run = run_entry(*selected[i], options, outcomes[i].failures);
    };
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(jobs, selected.size()); ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();

    for (auto& o : outcomes) {
        report.rings.push_back(std::move(o.run));
        report.failures.insert(report.failures.end(), o.failures.begin(), o.failures.end());
    }
    return report;
}

namespace {

// Bases built from this few input terms are cheaper to recompute than to read.
constexpr std::size_t kMinCachedTerms = 24;

std::size_t total_terms(const std::vector<Polynomial>& gens) {
    std::size_t n = 0;
    for (const auto& g : gens) n += g.size();
    return n;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << v;
    return os.str();
}

}  // namespace

DiskGroebnerStore::DiskGroebnerStore(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
}

std::string DiskGroebnerStore::canonical_key(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    std::vector<std::string> parts;
    for (const auto& g : gens)
        if (!g.is_zero()) parts.push_back(to_string(g.monic()));
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::string key = ring->field().to_string() + "|";
    for (std::size_t i = 0; i < ring->nvars(); ++i) key += (i ? "," : "") + ring->variables()[i];
    key += "|" + to_string(ring->order()) + "|";
    for (std::size_t i = 0; i < parts.size(); ++i) key += (i ? ";" : "") + parts[i];
    return key;
}

std::filesystem::path DiskGroebnerStore::path_for(const std::string& key) const {
    return dir_ / (hex64(fnv1a64(key)) + ".json");
}

std::optional<std::vector<Polynomial>> DiskGroebnerStore::load(const RingPtr& ring, const std::vector<Polynomial>& gens) {
    if (total_terms(gens) < kMinCachedTerms) return std::nullopt;
    const std::string key = canonical_key(ring, gens);
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        const Json doc = Json::parse(in);
        if (doc.at("key").get<std::string>() != key) return std::nullopt;
        std::vector<Polynomial> basis;
        for (const auto& s : doc.at("basis")) basis.push_back(parse_polynomial(s.get<std::string>(), ring));
        if (basis.empty()) return std::nullopt;
        // A damaged file must at least keep every generator inside the basis span.
        for (const auto& g : gens)
            if (!normal_form(g, basis).is_zero()) return std::nullopt;
        return basis;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void DiskGroebnerStore::save(const RingPtr& ring, const std::vector<Polynomial>& gens, const GroebnerBasis& gb) {
    if (total_terms(gens) < kMinCachedTerms) return;
    const std::string key = canonical_key(ring, gens);
    Json doc;
    doc["key"] = key;
    doc["basis"] = Json::array();
    for (const auto& g : gb.generators()) doc["basis"].push_back(to_string(g));
    const auto target = path_for(key);
    std::ostringstream tag;
    tag << ::getpid() << "-" << std::hash<std::thread::id>{}(std::this_thread::get_id());
    const auto tmp = target.string() + ".tmp." + tag.str();
    try {
        {
            std::ofstream out(tmp, std::ios::trunc);
            if (!out) return;
            out << doc.dump();
            if (!out) return;
        }
        std::filesystem::rename(tmp, target);
    } catch (const std::exception&) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
    }
}

}  // namespace socle
