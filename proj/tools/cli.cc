// Copyright 2026 The symdetect Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "symdetect/centre.h"
#include "symdetect/characters.h"
#include "symdetect/detection.h"
#include "symdetect/errors.h"
#include "symdetect/holographic.h"
#include "symdetect/kron_lr.h"
#include "symdetect/partition.h"
#include "symdetect/randomized.h"

namespace symdetect::cli {
namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { kText, kCsv, kJson };

struct RunConfig {
    int n = -1;
    int m = -1;
    int n_min = 2;
    int n_max = -1;
    int capital_n = -1;
    int lambda = -1;
    int trials = 1;
    double rho = 1.0;
    double beta = 0.0;
    double delta = 0.05;
    std::string r;
    std::string triple;
    std::string format = "text";
    bool json = false;
    std::string out_path;
    std::uint64_t seed = 0;
    bool table = false;
    bool include_zero = false;
    bool identity = false;
    bool signatures = false;
    bool profile = false;
    std::string epsilon_rule = "rounding";
    std::string sampling = "per-sample";
};

struct Output {
    std::string text;
    int code = kOk;
};

Json json_int(const BigInt &x) {
    if (x <= std::numeric_limits<std::int64_t>::max() && x >= std::numeric_limits<std::int64_t>::min()) {
        return Json(x.convert_to<std::int64_t>());
    }
    return Json(x.str());
}

std::string quote(const std::string &s) { return "\"" + s + "\""; }

std::string dump(Json j) {
    Json doc;
    doc["schema"] = "1";
    for (auto &[k, v] : j.items()) doc[k] = v;
    return doc.dump(2) + "\n";
}

Format format_of(const RunConfig &cfg) {
    if (cfg.json || cfg.format == "json") return Format::kJson;
    if (cfg.format == "csv") return Format::kCsv;
    return Format::kText;
}

Partition partition_arg(const std::string &text, const char *flag) {
    try {
        return Partition::parse(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

Triple triple_arg(const std::string &text) {
    try {
        return parse_triple(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(std::string("--triple: ") + e.what());
    }
}

void require(bool ok, const std::string &msg) {
    if (!ok) throw UsageError(msg);
}

std::uint64_t default_seed() {
    const char *env = std::getenv(kSeedEnv);
    if (env == nullptr || *env == '\0') return kDefaultSeed;
    std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 20) {
        throw UsageError(std::string(kSeedEnv) + ": not an unsigned integer: \"" + s + "\"");
    }
    try {
        return std::stoull(s);
    } catch (const std::out_of_range &) {
        throw UsageError(std::string(kSeedEnv) + ": out of range: \"" + s + "\"");
    }
}

// --- chars ---------------------------------------------------------------

Output cmd_chars(const RunConfig &cfg) {
    require(cfg.n >= 0, "chars: --n must be >= 0");
    CharacterTable table(cfg.n);
    switch (format_of(cfg)) {
        case Format::kJson:
            return {table.to_json()};
        case Format::kCsv:
            return {table.to_csv()};
        case Format::kText:
            break;
    }
    std::ostringstream o;
    o << "n = " << cfg.n << ", " << table.size() << " classes\n";
    for (std::size_t r = 0; r < table.size(); ++r) {
        o << std::setw(2 * std::max(cfg.n, 1)) << std::left << table.labels()[r].to_string() << std::right;
        for (std::size_t c = 0; c < table.size(); ++c) o << ' ' << std::setw(6) << table.at(r, c);
        o << '\n';
    }
    return {o.str()};
}

// --- kstar ---------------------------------------------------------------

Output cmd_kstar(const RunConfig &cfg) {
    if (cfg.signatures) {
        require(cfg.n >= 2, "kstar --signatures: --n must be >= 2");
        const SignatureTable &t = detection_table(cfg.n);
        return {t.to_csv()};
    }
    int lo = cfg.n >= 0 ? cfg.n : cfg.n_min;
    int hi = cfg.n >= 0 ? cfg.n : (cfg.n_max >= 0 ? cfg.n_max : 14);
    require(lo >= 2 && hi >= lo, "kstar: need 2 <= n-min <= n-max");
    auto rows = k_star_growth_report(hi, lo);
    std::ostringstream o;
    switch (format_of(cfg)) {
        case Format::kJson:
            return {k_star_report_json(rows)};
        case Format::kCsv:
            o << "n,k_star,growth\n";
            for (const auto &r : rows) o << r.n << ',' << r.k_star << ',' << r.growth << '\n';
            return {o.str()};
        case Format::kText:
            o << "  n  k*\n";
            for (const auto &r : rows) o << std::setw(3) << r.n << std::setw(4) << r.k_star << '\n';
            return {o.str()};
    }
    return {};
}

// --- detection ------------------------------------------------------------

std::string transcript_text(const DetectionTranscript &tr) {
    std::ostringstream o;
    o << "identified " << tr.identified_label;
    if (tr.true_label) o << " (true " << *tr.true_label << ")";
    o << "\n";
    for (const auto &r : tr.rounds) {
        o << "  family " << r.family << " S_" << r.group_n << " T_" << r.k << ": t=" << r.t
          << " m=" << r.register_value << " -> " << r.measured << " (p=" << r.measured_probability << ")\n";
    }
    o << "queries " << tr.query_total << ", gates " << tr.gate_total << ", seed " << tr.seed << "\n";
    return o.str();
}

Output transcript_output(const RunConfig &cfg, const DetectionTranscript &tr, bool ok) {
    Output out;
    out.text = format_of(cfg) == Format::kJson ? transcript_to_json(tr) : transcript_text(tr);
    out.code = ok ? kOk : kDetectionFailure;
    return out;
}

Output cmd_detect_zcsn(const RunConfig &cfg) {
    require(cfg.n >= 1, "detect zcsn: --n must be >= 1");
    Partition r = partition_arg(cfg.r, "--r");
    require(r.weight() == cfg.n, "--r: \"" + cfg.r + "\" is not a partition of " + std::to_string(cfg.n));
    DetectionResult res = detect_projector(r, cfg.seed);
    return transcript_output(cfg, res.transcript, res.label == r);
}

Output cmd_detect_kron(const RunConfig &cfg) {
    require(cfg.n >= 1, "detect kron: --n must be >= 1");
    if (cfg.identity) {
        IdentitySample s = identity_expansion_sample(cfg.n, cfg.seed);
        bool ok = kronecker(s.labels[0], s.labels[1], s.labels[2]) > 0;
        return transcript_output(cfg, s.transcript, ok);
    }
    require(!cfg.triple.empty(), "detect kron: --triple or --identity is required");
    Triple t = triple_arg(cfg.triple);
    for (const auto &p : t) require(p.weight() == cfg.n, "--triple: parts must be partitions of " + std::to_string(cfg.n));
    require(kronecker(t[0], t[1], t[2]) > 0, "--triple: " + cfg.triple + " has a zero Kronecker coefficient");
    TripleDetection d = kron_detect(kron_projector_state(t), cfg.n, cfg.seed);
    d.transcript.true_label = triple_to_string(t);
    return transcript_output(cfg, d.transcript, d.labels == t);
}

Output cmd_detect_lr(const RunConfig &cfg) {
    require(cfg.m >= 1 && cfg.n >= 1, "detect lr: --m and --n must be >= 1");
    require(!cfg.triple.empty(), "detect lr: --triple is required");
    Triple t = triple_arg(cfg.triple);
    require(t[0].weight() == cfg.m && t[1].weight() == cfg.n && t[2].weight() == cfg.m + cfg.n,
            "--triple: expected partitions of m, n and m+n");
    require(lr_coefficient(t[0], t[1], t[2]) > 0, "--triple: " + cfg.triple + " has a zero LR coefficient");
    TripleDetection d = lr_detect(lr_projector_state(t), cfg.m, cfg.n, cfg.seed);
    d.transcript.true_label = triple_to_string(t);
    return transcript_output(cfg, d.transcript, d.labels == t);
}

Output cmd_detect_classical(const RunConfig &cfg) {
    require(cfg.n >= 2, "detect classical: --n must be >= 2");
    Partition r = partition_arg(cfg.r, "--r");
    require(r.weight() == cfg.n, "--r: \"" + cfg.r + "\" is not a partition of " + std::to_string(cfg.n));
    require(cfg.delta > 0 && cfg.delta < 1, "--delta must lie in (0, 1)");
    require(cfg.trials >= 1, "--trials must be >= 1");
    EpsilonRule rule = cfg.epsilon_rule == "norm-product" ? EpsilonRule::kNormProduct : EpsilonRule::kRounding;
    SamplingMode mode = cfg.sampling == "aggregated" ? SamplingMode::kClassAggregated : SamplingMode::kPerSample;

    std::vector<ClassicalDetection> trials;
    int wrong = 0;
    for (int i = 0; i < cfg.trials; ++i) {
        trials.push_back(classical_detect(r, cfg.delta, cfg.seed + static_cast<std::uint64_t>(i), rule, mode));
        if (!trials.back().identified || !(*trials.back().identified == r)) ++wrong;
    }
    // Success means the observed failure rate stays within delta.
    bool ok = wrong <= cfg.delta * cfg.trials;
    Output out;
    out.code = ok ? kOk : kDetectionFailure;
    if (format_of(cfg) == Format::kJson) {
        out.text = classical_detection_to_json(trials, cfg.delta, cfg.seed, rule);
        return out;
    }
    std::ostringstream o;
    o << "classical detection of " << r.to_string() << " (epsilon rule " << to_string(rule) << ", delta "
      << cfg.delta << ")\n";
    std::int64_t queries = 0;
    for (std::size_t i = 0; i < trials.size(); ++i) {
        const auto &t = trials[i];
        o << "  trial " << i << ": " << (t.identified ? t.identified->to_string() : std::string("none"));
        for (const auto &e : t.per_k) o << " | T_" << e.k << " " << e.rounded << " (truth " << e.truth << ")";
        o << " | queries " << t.query_total << "\n";
        queries += t.query_total;
    }
    o << "failures " << wrong << "/" << cfg.trials << ", queries " << queries << "\n";
    out.text = o.str();
    return out;
}

// --- kron / lr tables -------------------------------------------------------

template <typename Row>
Output triple_table(const RunConfig &cfg, const std::vector<Row> &rows, Json summary) {
    std::ostringstream o;
    switch (format_of(cfg)) {
        case Format::kJson: {
            Json arr = Json::array();
            for (const auto &r : rows) arr.push_back({{"triple", triple_to_string(r.labels)}, {"coefficient", json_int(r.coefficient)}});
            summary["triples"] = std::move(arr);
            return {dump(std::move(summary))};
        }
        case Format::kCsv:
            o << "triple,coefficient\n";
            for (const auto &r : rows) o << quote(triple_to_string(r.labels)) << ',' << r.coefficient << '\n';
            return {o.str()};
        case Format::kText:
            for (const auto &r : rows) o << triple_to_string(r.labels) << "  " << r.coefficient << '\n';
            return {o.str()};
    }
    return {};
}

Output summary_output(const RunConfig &cfg, Json summary) {
    if (format_of(cfg) == Format::kJson) return {dump(std::move(summary))};
    std::ostringstream o;
    if (format_of(cfg) == Format::kCsv) {
        bool first = true;
        for (auto &[k, v] : summary.items()) o << (first ? "" : ",") << k, first = false;
        o << '\n';
        first = true;
        for (auto &[k, v] : summary.items()) o << (first ? "" : ",") << (v.is_string() ? quote(v.get<std::string>()) : v.dump()), first = false;
        o << '\n';
        return {o.str()};
    }
    for (auto &[k, v] : summary.items()) o << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return {o.str()};
}

Output cmd_kron(const RunConfig &cfg) {
    require(cfg.n >= 1, "kron: --n must be >= 1");
    if (!cfg.triple.empty()) {
        Triple t = triple_arg(cfg.triple);
        for (const auto &p : t) require(p.weight() == cfg.n, "--triple: parts must be partitions of " + std::to_string(cfg.n));
        Json s;
        s["n"] = cfg.n;
        s["triple"] = triple_to_string(t);
        s["coefficient"] = json_int(kronecker(t[0], t[1], t[2]));
        return summary_output(cfg, std::move(s));
    }
    Json s;
    s["n"] = cfg.n;
    s["dim_K"] = json_int(dim_K(cfg.n));
    s["ribbon_count"] = json_int(ribbon_count(cfg.n));
    if (cfg.table) return triple_table(cfg, kronecker_triples(cfg.n, cfg.include_zero), std::move(s));
    s["nonzero_triples"] = kronecker_triples(cfg.n).size();
    return summary_output(cfg, std::move(s));
}

Output cmd_lr(const RunConfig &cfg) {
    require(cfg.m >= 1 && cfg.n >= 1, "lr: --m and --n must be >= 1");
    if (!cfg.triple.empty()) {
        Triple t = triple_arg(cfg.triple);
        require(t[0].weight() == cfg.m && t[1].weight() == cfg.n && t[2].weight() == cfg.m + cfg.n,
                "--triple: expected partitions of m, n and m+n");
        Json s;
        s["m"] = cfg.m;
        s["n"] = cfg.n;
        s["triple"] = triple_to_string(t);
        s["coefficient"] = json_int(lr_coefficient(t[0], t[1], t[2]));
        return summary_output(cfg, std::move(s));
    }
    Json s;
    s["m"] = cfg.m;
    s["n"] = cfg.n;
    s["dim_A"] = json_int(dim_A(cfg.m, cfg.n));
    s["necklace_count"] = json_int(necklace_count(cfg.m, cfg.n));
    if (cfg.table) return triple_table(cfg, lr_triples(cfg.m, cfg.n, cfg.include_zero), std::move(s));
    s["nonzero_triples"] = lr_triples(cfg.m, cfg.n).size();
    return summary_output(cfg, std::move(s));
}

// --- holographic ------------------------------------------------------------

Output cmd_holo_roundtrip(const RunConfig &cfg) {
    require(cfg.n >= 1, "holo roundtrip: --n must be >= 1");
    const int N = cfg.capital_n >= 0 ? cfg.capital_n : cfg.n + 1;
    require(cfg.rho > 0, "--rho must be positive");
    std::vector<Partition> diagrams;
    if (!cfg.r.empty()) {
        Partition r = partition_arg(cfg.r, "--r");
        require(r.weight() == cfg.n, "--r: \"" + cfg.r + "\" is not a partition of " + std::to_string(cfg.n));
        diagrams.push_back(r);
    } else {
        for (const auto &r : partitions(cfg.n)) {
            if (r.length() <= N) diagrams.push_back(r);
        }
    }
    std::vector<RoundTrip> trips;
    bool ok = true;
    for (const auto &r : diagrams) {
        trips.push_back(holographic_roundtrip(r, N, cfg.lambda, cfg.rho));
        ok = ok && trips.back().recovered == r;
    }
    Output out;
    out.code = ok ? kOk : kDetectionFailure;
    if (cfg.profile) {
        require(trips.size() == 1, "--profile needs a single diagram (--r)");
        out.text = profile_to_csv(trips.front().profile);
        return out;
    }
    std::ostringstream o;
    switch (format_of(cfg)) {
        case Format::kJson: {
            Json arr = Json::array();
            for (const auto &t : trips) {
                Json a = Json::array(), m = Json::array();
                for (const auto &x : t.a) a.push_back(json_int(x));
                for (const auto &x : t.m) m.push_back(json_int(x));
                arr.push_back({{"diagram", t.input.to_string()},
                               {"recovered", t.recovered.to_string()},
                               {"lambda", t.lambda},
                               {"samples", t.profile.samples.size()},
                               {"a", std::move(a)},
                               {"moments", std::move(m)},
                               {"a_residual", t.a_residual},
                               {"fft_dft_gap", t.fft_dft_gap}});
            }
            Json s;
            s["n"] = cfg.n;
            s["N"] = N;
            s["rho"] = cfg.rho;
            s["roundtrips"] = std::move(arr);
            s["all_recovered"] = ok;
            out.text = dump(std::move(s));
            return out;
        }
        case Format::kCsv:
            o << "diagram,recovered,lambda,a_residual,fft_dft_gap\n";
            for (const auto &t : trips) {
                o << quote(t.input.to_string()) << ',' << quote(t.recovered.to_string()) << ',' << t.lambda << ','
                  << t.a_residual << ',' << t.fft_dft_gap << '\n';
            }
            break;
        case Format::kText:
            for (const auto &t : trips) {
                o << t.input.to_string() << " -> " << t.recovered.to_string() << "  lambda " << t.lambda
                  << "  residual " << t.a_residual << "  fft/dft " << t.fft_dft_gap << '\n';
            }
            o << (ok ? "all recovered" : "recovery FAILED") << '\n';
            break;
    }
    out.text = o.str();
    return out;
}

Output cmd_holo_cutoff(const RunConfig &cfg) {
    const int hi = cfg.n_max >= 0 ? cfg.n_max : 12;
    require(cfg.n_min >= 2 && hi >= cfg.n_min, "holo cutoff-table: need 2 <= n-min <= n-max");
    struct Row {
        int n, N, cutoff, kstar;
    };
    std::vector<Row> rows;
    for (int n = cfg.n_min; n <= hi; ++n) {
        const int N = cfg.capital_n >= 0 ? cfg.capital_n : n + 1;
        rows.push_back({n, N, moment_cutoff(n, N), k_star(n)});
    }
    std::ostringstream o;
    switch (format_of(cfg)) {
        case Format::kJson: {
            Json arr = Json::array();
            for (const auto &r : rows) arr.push_back({{"n", r.n}, {"N", r.N}, {"moment_cutoff", r.cutoff}, {"k_star", r.kstar}});
            Json s;
            s["rows"] = std::move(arr);
            return {dump(std::move(s))};
        }
        case Format::kCsv:
            o << "n,N,moment_cutoff,k_star\n";
            for (const auto &r : rows) o << r.n << ',' << r.N << ',' << r.cutoff << ',' << r.kstar << '\n';
            return {o.str()};
        case Format::kText:
            o << "  n   N  cutoff  k*\n";
            for (const auto &r : rows) {
                o << std::setw(3) << r.n << std::setw(4) << r.N << std::setw(8) << r.cutoff << std::setw(4) << r.kstar
                  << '\n';
            }
            return {o.str()};
    }
    return {};
}

Output cmd_holo_cost(const RunConfig &cfg) {
    require(cfg.lambda >= 1, "holo cost: --lambda must be >= 1");
    require(cfg.beta >= 0, "holo cost: --beta must be >= 0");
    HolographicCost c = holographic_complexity_report(cfg.lambda, cfg.beta);
    Json s;
    s["lambda"] = c.lambda;
    s["beta"] = c.beta;
    s["samples"] = c.samples;
    s["measurement_ops"] = c.measurement_ops;
    s["fft_ops"] = c.fft_ops;
    s["dft_ops"] = c.dft_ops;
    s["solve_ops"] = c.solve_ops;
    s["case"] = c.case_number;
    s["exponent"] = c.exponent;
    s["dominant"] = c.dominant;
    return summary_output(cfg, std::move(s));
}

// --- report ---------------------------------------------------------------

Output cmd_report(const RunConfig &cfg) {
    const int lo = cfg.n_min >= 3 ? cfg.n_min : 3;
    const int hi = cfg.n_max >= 0 ? cfg.n_max : 8;
    require(hi >= lo, "report: need n-min <= n-max");
    require(cfg.delta > 0 && cfg.delta < 1, "--delta must lie in (0, 1)");
    Json rows = Json::array();
    std::ostringstream o;
    if (format_of(cfg) == Format::kCsv) {
        o << "n,k_star,quantum_queries,quantum_gates,circuit_size,r_max,d_max,classical_queries,"
             "classical_queries_per_group,q_star,dmax_lower,dmax_upper\n";
    } else if (format_of(cfg) == Format::kText) {
        o << "  n  k*  QPE queries   gates   classical (R_max)   per group      q*\n";
    }
    for (int n = lo; n <= hi; ++n) {
        ComplexityReport rep = complexity_report(n);
        Partition rmax;
        BigInt dmax = 0;
        for (const auto &r : partitions(n)) {
            if (dimension(r) > dmax) dmax = dimension(r), rmax = r;
        }
        std::int64_t classical = classical_query_plan(rmax, cfg.delta, EpsilonRule::kRounding, false);
        std::int64_t per_group = classical_query_plan(rmax, cfg.delta, EpsilonRule::kRounding, true);
        double qs = 0;
        for (int k = 2; k <= rep.k_star; ++k) qs += q_star(rmax, k);
        DmaxBounds b = dmax_bounds(n);
        switch (format_of(cfg)) {
            case Format::kJson: {
                Json per_k = Json::array();
                for (const auto &row : rep.per_k) {
                    per_k.push_back({{"k", row.k}, {"t", row.t}, {"queries", row.queries}, {"gates", row.gates}});
                }
                rows.push_back({{"n", n},
                                {"k_star", rep.k_star},
                                {"quantum", {{"queries", rep.query_total}, {"gates", rep.gate_total},
                                             {"circuit_size", rep.circuit_total}, {"per_k", std::move(per_k)}}},
                                {"classical", {{"r_max", rmax.to_string()}, {"d_max", json_int(dmax)},
                                               {"queries", classical}, {"queries_per_group", per_group},
                                               {"q_star", qs}}},
                                {"dmax_bounds", {{"lower", b.lower}, {"upper", b.upper}}}});
                break;
            }
            case Format::kCsv:
                o << n << ',' << rep.k_star << ',' << rep.query_total << ',' << rep.gate_total << ','
                  << rep.circuit_total << ',' << quote(rmax.to_string()) << ',' << dmax << ',' << classical << ','
                  << per_group << ',' << qs << ',' << b.lower << ',' << b.upper << '\n';
                break;
            case Format::kText:
                o << std::setw(3) << n << std::setw(4) << rep.k_star << std::setw(13) << rep.query_total
                  << std::setw(8) << rep.gate_total << std::setw(20) << classical << std::setw(12) << per_group
                  << std::setw(10) << std::setprecision(4) << qs << '\n';
                break;
        }
    }
    if (format_of(cfg) == Format::kJson) {
        Json s;
        s["delta"] = cfg.delta;
        s["epsilon_rule"] = to_string(EpsilonRule::kRounding);
        s["rows"] = std::move(rows);
        return {dump(std::move(s))};
    }
    return {o.str()};
}

// --- wiring ---------------------------------------------------------------

void add_output_flags(CLI::App *app, RunConfig &cfg) {
    app->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
    app->add_flag("--json", cfg.json, "Shorthand for --format json");
    app->add_option("--out", cfg.out_path, "Write output to this file");
}

void add_seed(CLI::App *app, RunConfig &cfg) {
    app->add_option("--seed", cfg.seed, "RNG seed (default from SYMDETECT_SEED or a fixed constant)");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Representation detection over symmetric group algebras", "symdetect"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::function<Output(const RunConfig &)> handler;
    auto leaf = [&](CLI::App *sub, Output (*fn)(const RunConfig &)) {
        add_output_flags(sub, cfg);
        sub->callback([&handler, fn] { handler = fn; });
    };

    auto *chars = app.add_subcommand("chars", "Character table of S_n");
    chars->add_option("--n", cfg.n, "n")->required();
    leaf(chars, cmd_chars);

    auto *kstar = app.add_subcommand("kstar", "Minimal number of cycle sums separating all irreps");
    kstar->add_option("--n", cfg.n, "single n");
    kstar->add_option("--n-min", cfg.n_min, "first n");
    kstar->add_option("--n-max", cfg.n_max, "last n (default 14)");
    kstar->add_flag("--signatures", cfg.signatures, "CSV signature table for --n");
    leaf(kstar, cmd_kstar);

    auto *detect = app.add_subcommand("detect", "Detection runs");
    detect->require_subcommand(1);
    auto *zcsn = detect->add_subcommand("zcsn", "QPE detection of a projector state in the centre");
    zcsn->add_option("--n", cfg.n, "n")->required();
    zcsn->add_option("--r", cfg.r, "diagram, e.g. \"3,2,1\"")->required();
    add_seed(zcsn, cfg);
    leaf(zcsn, cmd_detect_zcsn);

    auto *dkron = detect->add_subcommand("kron", "QPE detection in the Kronecker algebra");
    dkron->add_option("--n", cfg.n, "n")->required();
    dkron->add_option("--triple", cfg.triple, "\"R1;R2;R3\"");
    dkron->add_flag("--identity", cfg.identity, "Measure the identity expansion instead");
    add_seed(dkron, cfg);
    leaf(dkron, cmd_detect_kron);

    auto *dlr = detect->add_subcommand("lr", "QPE detection in the Littlewood-Richardson algebra");
    dlr->add_option("--m", cfg.m, "m")->required();
    dlr->add_option("--n", cfg.n, "n")->required();
    dlr->add_option("--triple", cfg.triple, "\"R1;R2;R\"")->required();
    add_seed(dlr, cfg);
    leaf(dlr, cmd_detect_lr);

    auto *dcl = detect->add_subcommand("classical", "Randomized sampling baseline");
    dcl->add_option("--n", cfg.n, "n")->required();
    dcl->add_option("--r", cfg.r, "diagram")->required();
    dcl->add_option("--delta", cfg.delta, "failure probability per estimate");
    dcl->add_option("--trials", cfg.trials, "number of seeded trials");
    dcl->add_option("--epsilon-rule", cfg.epsilon_rule, "rounding or norm-product")
        ->check(CLI::IsMember({"rounding", "norm-product"}));
    dcl->add_option("--sampling", cfg.sampling, "per-sample or aggregated")
        ->check(CLI::IsMember({"per-sample", "aggregated"}));
    add_seed(dcl, cfg);
    leaf(dcl, cmd_detect_classical);

    auto *kron = app.add_subcommand("kron", "Kronecker coefficients");
    kron->add_option("--n", cfg.n, "n")->required();
    kron->add_option("--triple", cfg.triple, "\"R1;R2;R3\"");
    kron->add_flag("--table", cfg.table, "All triples");
    kron->add_flag("--include-zero", cfg.include_zero, "Keep zero coefficients in the table");
    leaf(kron, cmd_kron);

    auto *lr = app.add_subcommand("lr", "Littlewood-Richardson coefficients");
    lr->add_option("--m", cfg.m, "m")->required();
    lr->add_option("--n", cfg.n, "n")->required();
    lr->add_option("--triple", cfg.triple, "\"R1;R2;R\"");
    lr->add_flag("--table", cfg.table, "All triples");
    lr->add_flag("--include-zero", cfg.include_zero, "Keep zero coefficients in the table");
    leaf(lr, cmd_lr);

    auto *holo = app.add_subcommand("holo", "Holographic profile pipeline");
    holo->require_subcommand(1);
    auto *rt = holo->add_subcommand("roundtrip", "diagram -> profile samples -> diagram");
    rt->add_option("--n", cfg.n, "n")->required();
    rt->add_option("--capital-n", cfg.capital_n, "number of fermions (default n+1)");
    rt->add_option("--lambda", cfg.lambda, "moment cutoff (default: smallest separating one)");
    rt->add_option("--rho", cfg.rho, "radius");
    rt->add_option("--r", cfg.r, "single diagram (default: all of n)");
    rt->add_flag("--profile", cfg.profile, "Emit the sampled profile as CSV");
    leaf(rt, cmd_holo_roundtrip);

    auto *cut = holo->add_subcommand("cutoff-table", "Moment cutoff next to k*");
    cut->add_option("--n-min", cfg.n_min, "first n");
    cut->add_option("--n-max", cfg.n_max, "last n (default 12)");
    cut->add_option("--capital-n", cfg.capital_n, "number of fermions (default n+1)");
    leaf(cut, cmd_holo_cutoff);

    auto *cost = holo->add_subcommand("cost", "Operation counts for a given cutoff and measurement exponent");
    cost->add_option("--lambda", cfg.lambda, "cutoff")->required();
    cost->add_option("--beta", cfg.beta, "measurement cost exponent")->required();
    leaf(cost, cmd_holo_cost);

    auto *report = app.add_subcommand("report", "Quantum vs classical query ledger");
    report->add_option("--n-min", cfg.n_min, "first n (>= 3)");
    report->add_option("--n-max", cfg.n_max, "last n (default 8)");
    report->add_option("--delta", cfg.delta, "classical failure probability");
    leaf(report, cmd_report);

    try {
        cfg.seed = default_seed();
        std::vector<std::string> argv_store;
        argv_store.reserve(args.size() + 1);
        argv_store.push_back("symdetect");
        argv_store.insert(argv_store.end(), args.begin(), args.end());
        std::vector<const char *> argv;
        for (const auto &a : argv_store) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsageError;
    } catch (const UsageError &e) {
        err << "symdetect: " << e.what() << "\n";
        return kUsageError;
    }

    Output result;
    try {
        result = handler(cfg);
    } catch (const UsageError &e) {
        err << "symdetect: " << e.what() << "\n";
        return kUsageError;
    } catch (const DetectionError &e) {
        err << "symdetect: detection failed: " << e.what() << "\n";
        return kDetectionFailure;
    } catch (const CapabilityError &e) {
        err << "symdetect: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument &e) {
        err << "symdetect: " << e.what() << "\n";
        return kUsageError;
    }

    if (cfg.out_path.empty()) {
        out << result.text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f || !(f << result.text)) {
            err << "symdetect: cannot write " << cfg.out_path << "\n";
            return kUsageError;
        }
    }
    return result.code;
}

}  // namespace symdetect::cli
