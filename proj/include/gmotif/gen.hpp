#pragma once

// Seeded random instance generators shared by tests, the acceptance suite,
// and the benchmark command. A graph is always a random spanning tree plus
// extra random edges, so connectivity holds by construction.

#include <gmotif/graph.hpp>
#include <gmotif/prng.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmotif {

inline HostGraph random_connected_graph(Rng& rng, int n, int extra_edges) {
    if (n < 1) throw std::invalid_argument{"need at least one vertex"};
    std::set<std::pair<int, int>> edge_set;
    for (int v = 2; v <= n; ++v) {
        const int u = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(v - 1));
        edge_set.insert({u, v});
    }
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    for (int tries = 0; tries < 20 * extra_edges && static_cast<long long>(edge_set.size()) <
                                                        std::min<long long>(max_edges, n - 1 + extra_edges);
         ++tries) {
        int u = 1 + static_cast<int>(rng() % n);
        int v = 1 + static_cast<int>(rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        edge_set.insert({u, v});
    }
    return make_graph(n, {edge_set.begin(), edge_set.end()});
}

struct RandomInstanceOptions {
    int min_vertices = 2;
    int max_vertices = 10;
    int max_extra_edges = 6;
    int max_k = 5;
    int num_colors = 4;
    long long max_multiplicity = 5; // per color, before preprocessing
};

inline const std::vector<std::string>& color_name_pool() {
    static const std::vector<std::string> pool{"amber", "blue", "coral", "dun",   "ecru", "fawn",
                                               "gray",  "hazel", "ivory", "jade", "khaki", "lilac"};
    return pool;
}

// Random single-coloring instance; the motif is drawn loose enough that both
// YES and NO cases occur at useful rates.
inline MotifInstance random_instance(Rng& rng, const RandomInstanceOptions& opt = {}) {
    const int n = opt.min_vertices +
                  static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_vertices - opt.min_vertices + 1));
    const int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(opt.max_extra_edges + 1));
    InstanceBuilder b{n};
    HostGraph g = random_connected_graph(rng, n, extra);
    for (int u = 1; u <= n; ++u)
        for (int v : g.adj[u])
            if (u < v) b.edge(u, v);
    const int nc = std::max(1, std::min<int>(opt.num_colors, static_cast<int>(color_name_pool().size())));
    for (int v = 1; v <= n; ++v) b.color(v, color_name_pool()[rng() % nc]);
    b.k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(opt.max_k, n)));
    for (int q = 0; q < nc; ++q) {
        const long long m = static_cast<long long>(rng() % static_cast<std::uint64_t>(opt.max_multiplicity + 1));
        if (m > 0) b.motif_count(color_name_pool()[q], m);
    }
    return b.build();
}

// Instance for the closest variant: costs in 0..max_cost and a motif of
// total size near k (|M| in [max(0, k-2), k+2]).
inline MotifInstance random_closest_instance(Rng& rng, int max_vertices = 9, int max_k = 4,
                                             long long max_cost = 3, int num_colors = 3) {
    const int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
    const int extra = static_cast<int>(rng() % 5);
    InstanceBuilder b{n};
    HostGraph g = random_connected_graph(rng, n, extra);
    for (int u = 1; u <= n; ++u)
        for (int v : g.adj[u])
            if (u < v) b.edge(u, v);
    const int nc = std::max(1, std::min<int>(num_colors, static_cast<int>(color_name_pool().size())));
    for (int v = 1; v <= n; ++v) b.color(v, color_name_pool()[rng() % nc]);
    const int k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(max_k, n)));
    b.k = k;
    const long long lo = std::max<long long>(0, k - 2);
    const long long size = lo + static_cast<long long>(rng() % static_cast<std::uint64_t>((k + 2) - lo + 1));
    for (long long i = 0; i < size; ++i) b.motif_count(color_name_pool()[rng() % nc], 1);
    CostSpec costs;
    costs.substitute_cost = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_cost + 1));
    costs.insert_cost = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_cost + 1));
    costs.delete_cost = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_cost + 1));
    costs.threshold = static_cast<long long>(rng() % static_cast<std::uint64_t>(2 * (max_cost + 1) * std::max(1, k)));
    b.costs = costs;
    return b.build();
}

// Multiset pair over a shared universe with |M| + |N| bounded; for the edit
// distance cross-check.
inline std::pair<std::vector<long long>, std::vector<long long>>
random_multiset_pair(Rng& rng, int num_colors, long long max_total) {
    std::vector<long long> m(num_colors, 0), n(num_colors, 0);
    const long long total = static_cast<long long>(rng() % static_cast<std::uint64_t>(max_total + 1));
    const long long size_m = static_cast<long long>(rng() % static_cast<std::uint64_t>(total + 1));
    for (long long i = 0; i < size_m; ++i) ++m[rng() % num_colors];
    for (long long i = 0; i < total - size_m; ++i) ++n[rng() % num_colors];
    return {m, n};
}

} // namespace gmotif
