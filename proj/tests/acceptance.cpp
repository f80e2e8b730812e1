// Acceptance suite: one check per numbered criterion, each printing a single
// PASS/FAIL line with its measurements. Run with no arguments for all nine,
// or pass criterion numbers. Exit code = number of failures.

#include <gmotif/gen.hpp>
#include <gmotif/gf2.hpp>
#include <gmotif/motif.hpp>
#include <gmotif/oracle.hpp>
#include <gmotif/reductions.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace gmotif;
using gf2::Elem;

namespace {

const gf2::FieldParams params64{64, 0x1b};

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------
// 1. Field correctness: exhaustive axioms for b in 1..8, randomized 10^5
//    triples for b in {16, 32, 64}.

Outcome criterion1() {
    long long checked = 0;
    for (unsigned b = 1; b <= 8; ++b) {
        const gf2::Field f{{b, gf2::smallest_irreducible(b)}};
        const Elem size = 1ull << b;
        for (Elem a = 0; a < size; ++a) {
            if (f.add(a, a) != 0 || f.add(a, 0) != a || f.mul(a, 1) != a || f.mul(a, 0) != 0)
                return {false, "unary axiom failed at b=" + std::to_string(b)};
            if (a != 0 && f.mul(a, f.inv(a)) != 1)
                return {false, "inverse law failed at b=" + std::to_string(b)};
            for (Elem c = 0; c < size; ++c) {
                if (f.add(a, c) != f.add(c, a) || f.mul(a, c) != f.mul(c, a))
                    return {false, "commutativity failed at b=" + std::to_string(b)};
                ++checked;
            }
        }
        // associativity and distributivity: exhaustive triples for b <= 4,
        // randomized for larger widths
        auto check_triple = [&](Elem a, Elem c, Elem d) {
            if (f.mul(f.mul(a, c), d) != f.mul(a, f.mul(c, d))) return false;
            if (f.add(f.add(a, c), d) != f.add(a, f.add(c, d))) return false;
            if (f.mul(a, f.add(c, d)) != f.add(f.mul(a, c), f.mul(a, d))) return false;
            return true;
        };
        if (b <= 4) {
            for (Elem a = 0; a < size; ++a)
                for (Elem c = 0; c < size; ++c)
                    for (Elem d = 0; d < size; ++d, ++checked)
                        if (!check_triple(a, c, d))
                            return {false, "triple axiom failed at b=" + std::to_string(b)};
        } else {
            Rng rng{b};
            for (int i = 0; i < 100000; ++i, ++checked)
                if (!check_triple(f.random_elem(rng), f.random_elem(rng), f.random_elem(rng)))
                    return {false, "triple axiom failed at b=" + std::to_string(b)};
        }
    }
    for (unsigned b : {16u, 32u, 64u}) {
        const gf2::Field f{{b, gf2::smallest_irreducible(b)}};
        Rng rng{1000 + b};
        for (int i = 0; i < 100000; ++i, ++checked) {
            const Elem a = f.random_elem(rng), c = f.random_elem(rng), d = f.random_elem(rng);
            if (f.mul(f.mul(a, c), d) != f.mul(a, f.mul(c, d)))
                return {false, "associativity failed at b=" + std::to_string(b)};
            if (f.mul(a, f.add(c, d)) != f.add(f.mul(a, c), f.mul(a, d)))
                return {false, "distributivity failed at b=" + std::to_string(b)};
            if (f.pow(a, 2) != f.mul(a, a) || f.pow(f.add(a, c), 2) != f.add(f.pow(a, 2), f.pow(c, 2)))
                return {false, "Frobenius failed at b=" + std::to_string(b)};
            if (a != 0 && f.mul(a, f.inv(a)) != 1)
                return {false, "inverse law failed at b=" + std::to_string(b)};
        }
    }
    return {true, std::to_string(checked) + " axiom instances"};
}

// ---------------------------------------------------------------------------
// 2. Lemma-level symbolic equivalence on every in-guard instance family.

struct DirectTruth {
    bool multilinear = false;
    bool properly_colored = false;
    std::set<std::pair<int, int>> cost_pairs;
};

// The Lemma 1/2/3 right-hand sides, read directly off the expanded P_k.
DirectTruth direct_predicates(const MotifInstance& inst) {
    const int k = inst.k;
    const Poly2 pk = eval_walk_poly_symbolic(inst.graph, k);
    const int nc = inst.num_colors();
    std::vector<long long> cap(nc + 1, 0);
    for (int q = 0; q < nc; ++q) cap[q] = std::min<long long>(inst.motif[q], k);
    cap[nc] = k; // the "*" color of the cost instantiation

    DirectTruth t;
    std::set<std::vector<int>> seen;
    for (const auto& mono : pk.monomials()) {
        if (!mono.linear_in_kind(VarKind::vertex)) continue;
        t.multilinear = true;
        std::vector<int> set;
        for (const auto& [var, e] : mono.factors)
            if (var_kind(var) == VarKind::vertex) set.push_back(static_cast<int>(var_a(var)));
        std::sort(set.begin(), set.end());
        if (!seen.insert(set).second) continue;

        std::vector<long long> counts(nc, 0);
        for (int v : set) ++counts[inst.coloring.single(v)];
        bool proper = true;
        for (int q = 0; q < nc; ++q)
            if (counts[q] > cap[q]) proper = false;
        if (proper) t.properly_colored = true;

        // all proper colorings chi : set -> C_0 + {*} with their cost pair
        std::vector<long long> room = cap;
        auto rec = [&](auto&& self, std::size_t pos, int cost_s, int cost_id) -> void {
            if (pos == set.size()) {
                t.cost_pairs.insert({cost_s, cost_id});
                return;
            }
            const int own = inst.coloring.single(set[pos]);
            for (int q = 0; q <= nc; ++q) {
                if (room[q] <= 0) continue;
                --room[q];
                self(self, pos + 1, cost_s + (q != own && q != nc ? 1 : 0),
                     cost_id + (q == nc ? 1 : 0));
                ++room[q];
            }
        };
        rec(rec, 0, 0, 0);
    }
    return t;
}

bool check_instance_lemmas(const MotifInstance& inst, std::string& why) {
    const DirectTruth truth = direct_predicates(inst);
    const auto un = symbolic_sieve_check(inst, SieveMode::unconstrained);
    if (un.identically_zero == truth.multilinear) {
        why = "Lemma 1 mismatch on: " + serialize_instance(inst);
        return false;
    }
    const auto con = symbolic_sieve_check(inst, SieveMode::constrained);
    if (con.identically_zero == truth.properly_colored) {
        why = "Lemma 2 mismatch on: " + serialize_instance(inst);
        return false;
    }
    const auto cost = symbolic_sieve_check(inst, SieveMode::cost);
    if (cost.cost_degrees != truth.cost_pairs) {
        why = "Lemma 3 mismatch on: " + serialize_instance(inst);
        return false;
    }
    return true;
}

std::vector<HostGraph> connected_graphs(int n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) slots.push_back({u, v});
    std::vector<HostGraph> out;
    for (unsigned mask = 0; mask < (1u << slots.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (mask >> i & 1) edges.push_back(slots[i]);
        HostGraph g = make_graph(n, edges);
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

Outcome criterion2() {
    long long count = 0;
    std::string why;

    // enumerated family: all connected graphs on up to 3 vertices, all
    // two-colorings, multiplicities in 0..2, every feasible k
    for (int n = 1; n <= 3; ++n)
        for (const HostGraph& g : connected_graphs(n))
            for (unsigned coloring = 0; coloring < (1u << n); ++coloring)
                for (long long ma = 0; ma <= 2; ++ma)
                    for (long long mb = 0; mb <= 2; ++mb)
                        for (int k = 1; k <= std::min(3, n); ++k) {
                            InstanceBuilder b{n};
                            for (int u = 1; u <= n; ++u)
                                for (int v : g.adj[u])
                                    if (u < v) b.edge(u, v);
                            for (int v = 1; v <= n; ++v)
                                b.color(v, coloring >> (v - 1) & 1 ? "b" : "a");
                            b.motif_count("a", ma).motif_count("b", mb);
                            b.k = k;
                            const MotifInstance inst = b.build();
                            ++count;
                            if (!check_instance_lemmas(inst, why)) return {false, why};
                        }

    // 500 random instances across the full guard range (n <= 4, k <= 3,
    // |S| <= 4)
    Rng rng{20130227};
    int made = 0;
    while (made < 500) {
        RandomInstanceOptions opt;
        opt.min_vertices = 1;
        opt.max_vertices = 4;
        opt.max_extra_edges = 3;
        opt.max_k = 3;
        opt.num_colors = 1 + static_cast<int>(rng() % 3);
        opt.max_multiplicity = 2;
        const MotifInstance inst = random_instance(rng, opt);
        if (build_shade_table(inst.motif, inst.k).total > 4) continue;
        ++made;
        ++count;
        if (!check_instance_lemmas(inst, why)) return {false, why};
    }
    return {true, std::to_string(count) + " instances x 3 lemmas, zero mismatches"};
}

// ---------------------------------------------------------------------------
// 3. Maximum Graph Motif vs the brute-force oracle.

MotifInstance criterion3_instance(Rng& rng) {
    RandomInstanceOptions opt;
    opt.min_vertices = 2;
    opt.max_vertices = 10;
    opt.max_extra_edges = 6; // e <= 9 + 6 < 20
    opt.max_k = 5;
    opt.num_colors = 4;
    opt.max_multiplicity = 4;
    return random_instance(rng, opt);
}

Outcome criterion3() {
    Rng rng{3003};
    int yes_count = 0, no_count = 0;
    for (int i = 0; i < 500; ++i) {
        const MotifInstance inst = criterion3_instance(rng);
        const bool truth = brute_decide_max_motif(inst);
        const Decision dec = decide_max_motif(inst, 20, params64, splitmix64(i), 2);
        if (dec.yes != truth)
            return {false, "decision mismatch (oracle " + std::string{truth ? "YES" : "NO"} +
                               ") on: " + serialize_instance(inst)};
        if (truth) {
            ++yes_count;
        } else {
            ++no_count;
            for (std::uint64_t seed = 0; seed < 50; ++seed)
                if (decide_max_motif(inst, 20, params64, seed, 2).yes)
                    return {false, "YES on a NO-instance at seed " + std::to_string(seed) +
                                       ": " + serialize_instance(inst)};
        }
    }
    return {true, "500/500 matched (" + std::to_string(yes_count) + " YES, " +
                      std::to_string(no_count) + " NO x 50 seeds each)"};
}

// ---------------------------------------------------------------------------
// 4. One-sided error bound at the minimal field width, single trial.

Outcome criterion4() {
    Rng rng{4004};
    long long pairs = 0, hits = 0;
    int instances = 0, attempts = 0;
    while (pairs < 1000 && attempts < 20000) {
        ++attempts;
        const MotifInstance inst = criterion3_instance(rng);
        if (!brute_decide_max_motif(inst)) continue;
        ++instances;
        const auto params = gf2::params_for_k(inst.k, gf2::minimal_bits_for_k(inst.k));
        for (std::uint64_t s = 0; s < 4; ++s) {
            ++pairs;
            if (decide_max_motif(inst, 1, params, splitmix64(pairs * 7 + s), 2).yes) ++hits;
        }
    }
    if (pairs < 1000) return {false, "could not assemble 1000 oracle-YES pairs"};

    // exact one-sided binomial test against p = 1/2 at alpha = 0.001:
    // fail only if P[Bin(pairs, 1/2) <= hits] < 0.001
    long double pmf = std::pow(0.5L, static_cast<long double>(pairs));
    long double tail = 0;
    for (long long i = 0; i <= hits; ++i) {
        tail += pmf;
        pmf = pmf * static_cast<long double>(pairs - i) / static_cast<long double>(i + 1);
        if (tail > 1) tail = 1;
    }
    std::ostringstream detail;
    detail << hits << "/" << pairs << " YES (rate " << static_cast<double>(hits) / pairs
           << ", " << instances << " instances, one-sided binomial p = " << static_cast<double>(tail)
           << ")";
    return {tail >= 0.001L, detail.str()};
}

// ---------------------------------------------------------------------------
// 5. Closest Graph Motif cost correctness vs the oracle.

Outcome criterion5() {
    Rng rng{5005};
    for (int i = 0; i < 300; ++i) {
        const MotifInstance inst = random_closest_instance(rng, 9, 4, 3);
        const auto truth = brute_decide_closest(inst, *inst.costs);
        std::vector<std::optional<long long>> per_trial;
        const Decision dec =
            min_edit_cost(inst, *inst.costs, 20, params64, splitmix64(9000 + i), 2, &per_trial);
        if (!dec.achieved_cost || *dec.achieved_cost != truth.min_cost)
            return {false, "achieved cost mismatch (oracle " + std::to_string(truth.min_cost) +
                               ") on: " + serialize_instance(inst)};
        for (const auto& t : per_trial)
            if (t && *t < truth.min_cost)
                return {false, "single trial undercut the oracle minimum on: " +
                                   serialize_instance(inst)};
    }
    return {true, "300/300 achieved costs equal the oracle minimum; no trial undercut it"};
}

// ---------------------------------------------------------------------------
// 6. Edit-distance closed form vs uniform-cost search.

Outcome criterion6() {
    Rng rng{6006};
    for (int i = 0; i < 10000; ++i) {
        auto [m, n] = random_multiset_pair(rng, 1 + static_cast<int>(rng() % 4), 8);
        CostSpec costs;
        costs.substitute_cost = static_cast<long long>(rng() % 6);
        costs.insert_cost = static_cast<long long>(rng() % 6);
        costs.delete_cost = static_cast<long long>(rng() % 6);
        const long long closed = edit_distance(m, n, costs);
        const auto searched = edit_distance_bfs(m, n, costs, 50);
        if (!searched || closed != *searched) {
            std::ostringstream why;
            why << "closed form " << closed << " vs search "
                << (searched ? std::to_string(*searched) : std::string{"cap"}) << " at pair " << i;
            return {false, why.str()};
        }
    }
    return {true, "10000/10000 pairs agree"};
}

// ---------------------------------------------------------------------------
// 7. Set Cover reduction faithfulness, both color variants.

Outcome criterion7() {
    Rng rng{7007};
    for (int i = 0; i < 100; ++i) {
        const int n = 1 + static_cast<int>(rng() % 6);
        const int m = 1 + static_cast<int>(rng() % 5);
        const int t = 1 + static_cast<int>(rng() % std::min(3, m));
        const SetCoverInstance sc = gen_random_set_cover(rng, n, m, t, 0.35);
        const bool covered = brute_set_cover(sc);
        const MotifInstance unique = reduce_unique_colors(sc);
        const MotifInstance two = reduce_two_colors(sc);
        if (unique.k != n + t + 1 || two.k != n + t + 1)
            return {false, "k != n + t + 1 on instance " + std::to_string(i)};
        if (brute_decide_max_motif(unique) != covered)
            return {false, "unique-color reduction unfaithful on: " + serialize_set_cover(sc)};
        if (brute_decide_max_motif(two) != covered)
            return {false, "two-color reduction unfaithful on: " + serialize_set_cover(sc)};
    }
    return {true, "100/100 instances faithful in both variants, k = n + t + 1 throughout"};
}

// ---------------------------------------------------------------------------
// 8. Runtime scaling: median T(k+1)/T(k) in [1.7, 2.4] on a fixed graph.

MotifInstance bench_instance(const HostGraph& g, int k) {
    InstanceBuilder b{g.n};
    for (int u = 1; u <= g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) b.edge(u, v);
    for (int v = 1; v <= g.n; ++v) b.color(v, "c");
    b.motif_count("c", k);
    b.k = k;
    return b.build();
}

double time_solve(const MotifInstance& inst, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    decide_max_motif(inst, 1, params64, 8008, threads);
    return seconds_since(t0);
}

Outcome criterion8() {
    Rng rng{8008};
    const HostGraph g = random_connected_graph(rng, 50, 5);
    std::ostringstream detail;
    std::vector<double> times;
    for (int k = 14; k <= 20; ++k) {
        times.push_back(time_solve(bench_instance(g, k), 1));
        detail << "T(" << k << ")=" << times.back() << "s ";
    }
    std::vector<double> ratios;
    for (std::size_t i = 1; i < times.size(); ++i) ratios.push_back(times[i] / times[i - 1]);
    std::sort(ratios.begin(), ratios.end());
    const double median = ratios.size() % 2
                              ? ratios[ratios.size() / 2]
                              : 0.5 * (ratios[ratios.size() / 2 - 1] + ratios[ratios.size() / 2]);
    detail << "median ratio " << median;
    return {median >= 1.7 && median <= 2.4, detail.str()};
}

// ---------------------------------------------------------------------------
// 9. Parallel determinism and speedup.

Outcome criterion9() {
    std::ostringstream detail;

    // bit-identical decisions across thread counts
    Rng rng{9009};
    for (int rep = 0; rep < 6; ++rep) {
        RandomInstanceOptions opt;
        opt.max_vertices = 12;
        opt.max_k = 8;
        const MotifInstance inst = random_instance(rng, opt);
        const Decision base = decide_max_motif(inst, 3, params64, 99 + rep, 1);
        for (int threads : {2, 8}) {
            const Decision par = decide_max_motif(inst, 3, params64, 99 + rep, threads);
            if (par.yes != base.yes || par.trials_run != base.trials_run)
                return {false, "max decision changed with " + std::to_string(threads) + " threads"};
        }
    }
    for (int rep = 0; rep < 4; ++rep) {
        const MotifInstance inst = random_closest_instance(rng, 8, 4, 3);
        const Decision base = min_edit_cost(inst, *inst.costs, 3, params64, 7 + rep, 1);
        for (int threads : {2, 8}) {
            const Decision par = min_edit_cost(inst, *inst.costs, 3, params64, 7 + rep, threads);
            if (par.yes != base.yes || par.achieved_cost != base.achieved_cost)
                return {false, "achieved_cost changed with " + std::to_string(threads) + " threads"};
        }
    }
    detail << "decisions bit-identical across threads {1,2,8}; ";

    // wall-time speedup at 8 threads, k = 20
    Rng grng{8008};
    const HostGraph g = random_connected_graph(grng, 50, 5);
    const MotifInstance big = bench_instance(g, 20);
    const double t1 = time_solve(big, 1);
    const double t8 = time_solve(big, 8);
    const double speedup = t1 / t8;
    detail << "k=20 speedup at 8 threads: " << speedup << "x (T1 " << t1 << "s, T8 " << t8
           << "s; hardware threads: " << std::thread::hardware_concurrency() << ")";
    return {speedup >= 4.8, detail.str()};
}

} // namespace

int main(int argc, char** argv) {
    using Criterion = std::function<Outcome()>;
    const std::vector<std::pair<const char*, Criterion>> table{
        {"field axioms", criterion1},
        {"symbolic lemma equivalence", criterion2},
        {"max-motif oracle equivalence", criterion3},
        {"one-sided error at minimal width", criterion4},
        {"closest-motif cost correctness", criterion5},
        {"edit-distance closed form", criterion6},
        {"set-cover reduction faithfulness", criterion7},
        {"2^k runtime scaling", criterion8},
        {"parallel determinism and speedup", criterion9},
    };

    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) selected.push_back(std::atoi(argv[i]));
    if (selected.empty())
        for (std::size_t i = 1; i <= table.size(); ++i) selected.push_back(static_cast<int>(i));

    int failures = 0;
    for (int ix : selected) {
        if (ix < 1 || ix > static_cast<int>(table.size())) {
            std::cerr << "no criterion " << ix << "\n";
            return 2;
        }
        const auto t0 = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = table[ix - 1].second();
        } catch (const std::exception& e) {
            out = {false, std::string{"exception: "} + e.what()};
        }
        if (!out.pass) ++failures;
        std::printf("%s criterion %d: %s  [%.1f s] %s\n", out.pass ? "PASS" : "FAIL", ix,
                    table[ix - 1].first, seconds_since(t0), out.detail.c_str());
        std::fflush(stdout);
    }
    return failures;
}
