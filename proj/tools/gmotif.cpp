// Command-line front end: solve (sieve algorithms), oracle (brute force),
// gen-setcover (hardness reduction instances), bench (2^k scaling).
// Exit codes: 0 = YES, 1 = NO, 2 = usage, parse, or guard error.

#include <gmotif/gen.hpp>
#include <gmotif/gf2.hpp>
#include <gmotif/graph.hpp>
#include <gmotif/motif.hpp>
#include <gmotif/oracle.hpp>
#include <gmotif/reductions.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

namespace {

using namespace gmotif;

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string hex64(std::uint64_t v) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << v;
    return out.str();
}

MotifInstance load_instance(const std::string& path) {
    std::ifstream in{path};
    if (!in) throw std::runtime_error{"cannot open '" + path + "'"};
    return parse_instance(in);
}

struct RunReport {
    std::string variant;
    bool yes = false;
    std::optional<long long> cost;
    int trials = 0;
    int trials_run = 0;
    std::uint64_t seed = 0;
    unsigned field_bits = 0;
    int threads = 1;
    double time_ms = 0;
    std::uint64_t digest = 0;

    void print(std::ostream& out) const {
        out << (yes ? "YES" : "NO");
        if (cost) out << " (cost " << *cost << ")";
        out << "  [" << variant << ", " << trials_run << "/" << trials << " trials, "
            << time_ms << " ms]\n";
        out << "RESULT decision=" << (yes ? "YES" : "NO") << " variant=" << variant;
        if (cost) out << " cost=" << *cost;
        out << " trials=" << trials << " trials_run=" << trials_run << " seed=" << seed
            << " field_bits=" << field_bits << " threads=" << threads << " time_ms=" << time_ms
            << " digest=" << hex64(digest) << "\n";
    }
};

int cmd_solve(const std::string& path, const std::string& variant, int trials, unsigned field_bits,
              std::uint64_t seed, int threads, bool report_cost, long long d) {
    const MotifInstance inst = load_instance(path);
    const auto params = gf2::params_for_k(inst.k, field_bits);

    RunReport rep;
    rep.variant = variant;
    rep.trials = trials;
    rep.seed = seed;
    rep.field_bits = params.bits;
    rep.threads = threads;
    rep.digest = fnv1a(serialize_instance(inst));

    const auto t0 = std::chrono::steady_clock::now();
    Decision dec;
    if (variant == "max") {
        dec = decide_max_motif(inst, trials, params, seed, threads);
    } else if (variant == "exact") {
        dec = decide_exact_match(inst, trials, params, seed, threads);
    } else if (variant == "list") {
        if (!inst.coloring.list_variant)
            throw ValidationError{"variant 'list' needs an instance with list coloring"};
        dec = decide_max_motif(inst, trials, params, seed, threads);
    } else if (variant == "closest") {
        if (!inst.costs) throw ValidationError{"variant 'closest' needs costs/tau lines"};
        if (report_cost) {
            dec = min_edit_cost(inst, *inst.costs, trials, params, seed, threads);
            dec.yes = dec.achieved_cost && *dec.achieved_cost <= inst.costs->threshold;
        } else {
            dec = decide_closest_motif(inst, *inst.costs, trials, params, seed, threads);
        }
    } else if (variant == "min-add" || variant == "min-sub") {
        if (d < 0) throw ValidationError{"variant '" + variant + "' needs --d"};
        const CostSpec spec = variant == "min-add" ? min_add_spec(d, inst) : min_substitute_spec(d, inst);
        if (report_cost) {
            dec = min_edit_cost(inst, spec, trials, params, seed, threads);
            dec.yes = dec.achieved_cost && *dec.achieved_cost <= spec.threshold;
        } else {
            dec = decide_closest_motif(inst, spec, trials, params, seed, threads);
        }
    } else {
        throw std::invalid_argument{"unknown variant '" + variant + "'"};
    }
    rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.yes = dec.yes;
    rep.trials_run = dec.trials_run;
    if (report_cost || variant == "closest") rep.cost = dec.achieved_cost;
    rep.print(std::cout);
    return rep.yes ? 0 : 1;
}

int cmd_oracle(const std::string& path, const std::string& variant, long long d, bool symbolic) {
    const MotifInstance inst = load_instance(path);
    RunReport rep;
    rep.variant = "oracle-" + variant;
    rep.digest = fnv1a(serialize_instance(inst));
    rep.field_bits = 0;
    rep.trials = rep.trials_run = 1;

    if (symbolic) {
        const auto verdict = symbolic_sieve_check(
            inst, variant == "closest" ? SieveMode::cost : SieveMode::constrained);
        std::cout << "symbolic Q " << (verdict.identically_zero ? "== 0" : "!= 0");
        if (!verdict.cost_degrees.empty()) {
            std::cout << "  eta-degrees:";
            for (auto [s, t] : verdict.cost_degrees) std::cout << " (" << s << "," << t << ")";
        }
        std::cout << "\n";
    }

    const auto t0 = std::chrono::steady_clock::now();
    if (variant == "max" || variant == "list" || variant == "exact") {
        if (variant == "exact" && inst.motif_size() != inst.k)
            throw ValidationError{"exact-match mode needs |M| = k"};
        rep.yes = brute_decide_max_motif(inst);
    } else if (variant == "closest") {
        if (!inst.costs) throw ValidationError{"variant 'closest' needs costs/tau lines"};
        const auto res = brute_decide_closest(inst, *inst.costs);
        rep.yes = res.yes;
        rep.cost = res.min_cost;
    } else if (variant == "min-add" || variant == "min-sub") {
        if (d < 0) throw ValidationError{"variant '" + variant + "' needs --d"};
        const CostSpec spec = variant == "min-add" ? min_add_spec(d, inst) : min_substitute_spec(d, inst);
        const auto res = brute_decide_closest(inst, spec);
        rep.yes = res.yes;
        rep.cost = res.min_cost;
    } else {
        throw std::invalid_argument{"unknown variant '" + variant + "'"};
    }
    rep.time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.print(std::cout);
    return rep.yes ? 0 : 1;
}

int cmd_gen_setcover(int universe, int sets, int budget, const std::string& variant,
                     std::uint64_t seed, double density) {
    Rng rng{seed};
    const SetCoverInstance sc = gen_random_set_cover(rng, universe, sets, budget, density);
    const MotifInstance inst = variant == "unique" ? reduce_unique_colors(sc) : reduce_two_colors(sc);
    std::cout << "# set cover reduction: variant=" << variant << " seed=" << seed << "\n";
    std::cout << "# universe=" << universe << " sets=" << sets << " t=" << budget << "\n";
    std::cout << "# k = n + t + 1 = " << inst.k << "\n";
    std::istringstream sc_text{serialize_set_cover(sc)};
    for (std::string line; std::getline(sc_text, line);) std::cout << "# " << line << "\n";
    std::cout << serialize_instance(inst);
    return 0;
}

int cmd_bench(int kmin, int kmax, const std::string& graph_spec, int threads, unsigned field_bits,
              std::uint64_t seed, int trials) {
    HostGraph g;
    if (graph_spec.rfind("random:", 0) == 0) {
        std::istringstream spec{graph_spec.substr(7)};
        int n = 50, extra = 5;
        char sep = ':';
        spec >> n;
        spec >> sep >> extra; // optional ":extra" suffix
        Rng rng{splitmix64(seed)};
        g = random_connected_graph(rng, n, extra);
    } else {
        g = load_instance(graph_spec).graph;
    }
    if (kmax < kmin || kmin < 1 || kmax > g.n)
        throw std::invalid_argument{"need 1 <= kmin <= kmax <= n"};

    std::cout << "# bench graph: n=" << g.n << " e=" << g.e << " threads=" << threads
              << " field_bits=" << field_bits << " seed=" << seed << "\n";
    std::cout << "k\ttime_ms\tdecision\n";
    std::vector<double> times;
    for (int k = kmin; k <= kmax; ++k) {
        InstanceBuilder b{g.n};
        for (int u = 1; u <= g.n; ++u)
            for (int v : g.adj[u])
                if (u < v) b.edge(u, v);
        for (int v = 1; v <= g.n; ++v) b.color(v, "c");
        b.motif_count("c", k);
        b.k = k;
        const MotifInstance inst = b.build();
        const auto params = gf2::params_for_k(k, field_bits);
        const auto t0 = std::chrono::steady_clock::now();
        const Decision dec = decide_max_motif(inst, trials, params, seed, threads);
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        times.push_back(ms);
        std::cout << k << "\t" << ms << "\t" << (dec.yes ? "YES" : "NO") << std::endl;
    }
    if (times.size() >= 2) {
        std::vector<double> ratios;
        for (std::size_t i = 1; i < times.size(); ++i) ratios.push_back(times[i] / times[i - 1]);
        std::sort(ratios.begin(), ratios.end());
        const double median = ratios.size() % 2 ? ratios[ratios.size() / 2]
                                                : 0.5 * (ratios[ratios.size() / 2 - 1] + ratios[ratios.size() / 2]);
        std::cout << "# median T(k+1)/T(k) = " << median << "\n";
    }
    if (threads > 1) {
        InstanceBuilder b{g.n};
        for (int u = 1; u <= g.n; ++u)
            for (int v : g.adj[u])
                if (u < v) b.edge(u, v);
        for (int v = 1; v <= g.n; ++v) b.color(v, "c");
        b.motif_count("c", kmax);
        b.k = kmax;
        const MotifInstance inst = b.build();
        const auto params = gf2::params_for_k(kmax, field_bits);
        const auto t0 = std::chrono::steady_clock::now();
        decide_max_motif(inst, trials, params, seed, 1);
        const double ms1 =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        std::cout << "# speedup at k=" << kmax << " vs 1 thread: " << ms1 / times.back() << "x\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"k-sized graph motif solver via algebraic sieving over GF(2^b)"};
    app.require_subcommand(1);

    std::string file, variant = "max", graph_spec = "random:50:5";
    int trials = 20, threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    unsigned field_bits = 64;
    std::uint64_t seed = std::random_device{}();
    bool report_cost = false, symbolic = false;
    long long d = -1;
    int universe = 4, sets = 3, budget = 2;
    double density = 0.5;
    int kmin = 4, kmax = 12, bench_trials = 1;

    auto* solve = app.add_subcommand("solve", "decide an instance with the sieve algorithms");
    solve->add_option("file", file, "instance file")->required();
    solve->add_option("--variant", variant, "max|exact|closest|min-add|min-sub|list")
        ->check(CLI::IsMember({"max", "exact", "closest", "min-add", "min-sub", "list"}));
    solve->add_option("--trials", trials, "independent random trials")->check(CLI::PositiveNumber);
    solve->add_option("--field-bits", field_bits, "field width b, 2^b >= 6k")->check(CLI::Range(1u, 64u));
    solve->add_option("--seed", seed, "RNG seed (default: entropy)");
    solve->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    solve->add_flag("--report-cost", report_cost, "report the minimum achievable edit cost");
    solve->add_option("--d", d, "edit budget for min-add / min-sub");

    auto* oracle = app.add_subcommand("oracle", "brute-force cross-check (small instances)");
    oracle->add_option("file", file, "instance file")->required();
    oracle->add_option("--variant", variant, "max|exact|closest|min-add|min-sub|list")
        ->check(CLI::IsMember({"max", "exact", "closest", "min-add", "min-sub", "list"}));
    oracle->add_option("--d", d, "edit budget for min-add / min-sub");
    oracle->add_flag("--symbolic", symbolic, "also expand the sieve symbolically (tiny instances)");

    auto* gen = app.add_subcommand("gen-setcover", "emit a reduced Set Cover instance");
    gen->add_option("--universe", universe, "universe size n")->check(CLI::PositiveNumber);
    gen->add_option("--sets", sets, "number of sets m")->check(CLI::PositiveNumber);
    gen->add_option("--t", budget, "cover budget t")->check(CLI::PositiveNumber);
    gen->add_option("--variant", variant, "unique|twocolor")->check(CLI::IsMember({"unique", "twocolor"}));
    gen->add_option("--seed", seed, "RNG seed");
    gen->add_option("--density", density, "membership probability")->check(CLI::Range(0.0, 1.0));

    auto* bench = app.add_subcommand("bench", "wall time per k; scaling and speedup summary");
    bench->add_option("--kmin", kmin, "smallest k")->required();
    bench->add_option("--kmax", kmax, "largest k")->required();
    bench->add_option("--graph", graph_spec, "random:<n>:<extra-edges> or an instance file");
    bench->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    bench->add_option("--field-bits", field_bits, "field width b")->check(CLI::Range(1u, 64u));
    bench->add_option("--seed", seed, "RNG seed");
    bench->add_option("--trials", bench_trials, "trials per k")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_name() == "CallForHelp" ? 0 : 2;
    }

    try {
        if (solve->parsed()) {
            if (variant == "unique" || variant == "twocolor")
                throw std::invalid_argument{"unknown variant '" + variant + "'"};
            return cmd_solve(file, variant, trials, field_bits, seed, threads, report_cost, d);
        }
        if (oracle->parsed()) return cmd_oracle(file, variant, d, symbolic);
        if (gen->parsed()) {
            if (variant == "max") variant = "unique";
            return cmd_gen_setcover(universe, sets, budget, variant, seed, density);
        }
        if (bench->parsed()) return cmd_bench(kmin, kmax, graph_spec, threads, field_bits, seed, bench_trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
