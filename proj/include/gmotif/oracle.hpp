#pragma once

// Brute-force ground truth, kept deliberately independent of the sieve
// machinery: connected k-subset enumeration by canonical growth, multiset
// matching, the closed-form weighted edit distance and its uniform-cost
// search cross-check, and fully symbolic sieve expansion for tiny instances.

#include <gmotif/graph.hpp>
#include <gmotif/poly2.hpp>
#include <gmotif/sieve.hpp>
#include <gmotif/walkgen.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmotif {

inline constexpr int oracle_max_vertices = 24;

namespace detail {

// Grows connected sets whose minimum vertex is v, using only vertices > v;
// a vertex that has been tried and backed out stays blocked for the rest of
// its branch, so every set is produced exactly once.
template <class Fn>
bool grow_connected(const HostGraph& g, int k, int v, std::vector<int>& cur,
                    std::vector<int> cand, std::vector<char>& visited, Fn& fn) {
    if (static_cast<int>(cur.size()) == k) return fn(cur);
    while (!cand.empty()) {
        const int u = cand.back();
        cand.pop_back();
        cur.push_back(u);
        std::vector<int> next = cand;
        std::vector<int> added;
        for (int w : g.adj[u])
            if (w > v && !visited[w]) {
                visited[w] = 1;
                added.push_back(w);
                next.push_back(w);
            }
        if (!grow_connected(g, k, v, cur, std::move(next), visited, fn)) return false;
        cur.pop_back();
        for (int w : added) visited[w] = 0;
        // u keeps its visited mark: later branches exclude it
    }
    return true;
}

} // namespace detail

// Visits every K with |K| = k and H[K] connected exactly once (discovery
// order); fn returns false to stop early.
template <class Fn> void for_each_connected_k_subset(const HostGraph& g, int k, Fn fn) {
    if (k < 1 || k > g.n || g.n > oracle_max_vertices)
        throw std::invalid_argument{"oracle guard: need 1 <= k <= n <= " +
                                    std::to_string(oracle_max_vertices)};
    std::vector<char> visited(g.n + 1, 0);
    std::vector<int> cur;
    for (int v = 1; v <= g.n; ++v) {
        cur.assign(1, v);
        std::fill(visited.begin(), visited.end(), 0);
        visited[v] = 1;
        std::vector<int> cand;
        for (int w : g.adj[v])
            if (w > v) {
                visited[w] = 1;
                cand.push_back(w);
            }
        auto sorted_fn = [&](const std::vector<int>& set) {
            std::vector<int> s = set;
            std::sort(s.begin(), s.end());
            return fn(s);
        };
        if (!detail::grow_connected(g, k, v, cur, std::move(cand), visited, sorted_fn)) return;
    }
}

// Canonical listing: sorted-set lexicographic order.
inline std::vector<std::vector<int>> enumerate_connected_k_subsets(const HostGraph& g, int k) {
    std::vector<std::vector<int>> out;
    for_each_connected_k_subset(g, k, [&](const std::vector<int>& s) {
        out.push_back(s);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

// Can the vertices of K be assigned colors from their lists within the
// capacities? Plain backtracking; trivial for single colorings.
inline bool assignable(const MotifInstance& inst, const std::vector<int>& set, std::size_t pos,
                       std::vector<long long>& room) {
    if (pos == set.size()) return true;
    for (int q : inst.coloring.list(set[pos])) {
        if (room[q] <= 0) continue;
        --room[q];
        if (assignable(inst, set, pos + 1, room)) {
            ++room[q];
            return true;
        }
        ++room[q];
    }
    return false;
}

} // namespace detail

// YES iff some connected k-set K has c(K) within M, multiplicities counted.
inline bool brute_decide_max_motif(const MotifInstance& inst) {
    bool found = false;
    std::vector<long long> room = inst.motif;
    for_each_connected_k_subset(inst.graph, inst.k, [&](const std::vector<int>& set) {
        if (detail::assignable(inst, set, 0, room)) {
            found = true;
            return false;
        }
        return true;
    });
    return found;
}

// Lemma-6 closed form: minimum over feasible (k_U, k_S) of
// sigma_S k_S + sigma_D (|M| - k_U - k_S) + sigma_I (|N| - k_U - k_S),
// with k_U bounded by the multiset intersection. Two-variable loop on
// purpose; no greedy shortcut.
inline long long edit_distance(const std::vector<long long>& m_counts,
                               const std::vector<long long>& n_counts, const CostSpec& costs) {
    if (m_counts.size() != n_counts.size())
        throw std::invalid_argument{"edit_distance: multisets must share a color universe"};
    long long size_m = 0, size_n = 0, inter = 0;
    for (std::size_t q = 0; q < m_counts.size(); ++q) {
        if (m_counts[q] < 0 || n_counts[q] < 0) throw std::invalid_argument{"negative multiplicity"};
        size_m += m_counts[q];
        size_n += n_counts[q];
        inter += std::min(m_counts[q], n_counts[q]);
    }
    const long long pool = std::min(size_m, size_n);
    long long best = -1;
    for (long long untouched = 0; untouched <= inter; ++untouched)
        for (long long subst = 0; untouched + subst <= pool; ++subst) {
            const long long cost = costs.substitute_cost * subst +
                                   costs.delete_cost * (size_m - untouched - subst) +
                                   costs.insert_cost * (size_n - untouched - subst);
            if (best < 0 || cost < best) best = cost;
        }
    return best;
}

// Uniform-cost search over multiset states under the literal substitute,
// insert, delete operations. Exponential; guarded. Validates the closed form.
inline std::optional<long long> edit_distance_bfs(const std::vector<long long>& m_counts,
                                                  const std::vector<long long>& n_counts,
                                                  const CostSpec& costs, long long cost_cap) {
    if (m_counts.size() != n_counts.size())
        throw std::invalid_argument{"edit_distance_bfs: multisets must share a color universe"};
    long long size_m = 0, size_n = 0;
    for (long long c : m_counts) size_m += c;
    for (long long c : n_counts) size_n += c;
    if (size_m + size_n > 8 || cost_cap > 50)
        throw std::invalid_argument{"oracle guard: |M| + |N| <= 8 and cap <= 50"};

    const std::size_t nc = m_counts.size();
    const long long max_size = size_m + size_n; // an optimal sequence never needs more
    auto key = [](const std::vector<long long>& v) {
        std::string s;
        for (long long c : v) s += static_cast<char>(c + 1);
        return s;
    };

    std::map<std::string, long long> dist;
    using Entry = std::pair<long long, std::vector<long long>>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
    heap.push({0, m_counts});
    dist[key(m_counts)] = 0;
    while (!heap.empty()) {
        auto [d, state] = heap.top();
        heap.pop();
        if (d > cost_cap) return std::nullopt;
        if (state == n_counts) return d;
        if (d > dist[key(state)]) continue;
        auto relax = [&](std::vector<long long> next, long long nd) {
            auto it = dist.find(key(next));
            if (it == dist.end() || nd < it->second) {
                dist[key(next)] = nd;
                heap.push({nd, std::move(next)});
            }
        };
        long long size = 0;
        for (long long c : state) size += c;
        for (std::size_t q = 0; q < nc; ++q) {
            if (state[q] > 0) {
                auto del = state;
                --del[q];
                relax(std::move(del), d + costs.delete_cost);
                for (std::size_t r = 0; r < nc; ++r) {
                    if (r == q) continue;
                    auto sub = state;
                    --sub[q];
                    ++sub[r];
                    relax(std::move(sub), d + costs.substitute_cost);
                }
            }
            if (size < max_size) {
                auto ins = state;
                ++ins[q];
                relax(std::move(ins), d + costs.insert_cost);
            }
        }
    }
    return std::nullopt;
}

struct ClosestOracleResult {
    bool yes = false;
    long long min_cost = 0;
};

// Minimum edit cost between M and c(K) over all connected k-sets K.
inline ClosestOracleResult brute_decide_closest(const MotifInstance& inst, const CostSpec& costs) {
    if (inst.coloring.list_variant)
        throw std::invalid_argument{"closest oracle needs a single coloring"};
    std::optional<long long> best;
    std::vector<long long> counts(inst.num_colors(), 0);
    for_each_connected_k_subset(inst.graph, inst.k, [&](const std::vector<int>& set) {
        std::fill(counts.begin(), counts.end(), 0);
        for (int v : set) ++counts[inst.coloring.single(v)];
        const long long d = edit_distance(inst.motif, counts, costs);
        if (!best || d < *best) best = d;
        return true;
    });
    ClosestOracleResult res;
    res.min_cost = best.value_or(-1);
    res.yes = best && *best <= costs.threshold;
    return res;
}

// ---------------------------------------------------------------------------
// Symbolic sieves: expand Q over GF(2) in full and inspect it directly.

enum class SieveMode { unconstrained, constrained, cost };

struct SymbolicSieveVerdict {
    bool identically_zero = true;
    // cost mode: (eta_S degree, eta_ID degree) pairs present in Q
    std::set<std::pair<int, int>> cost_degrees;
};

// P with every x_i replaced by values[i]; the y variables ride along.
inline Poly2 substitute_x(const Poly2& p, const std::vector<Poly2>& values) {
    Poly2 out;
    for (const auto& mono : p.monomials()) {
        Poly2 term = Poly2::one();
        Monomial rest;
        for (const auto& [var, e] : mono.factors) {
            if (var_kind(var) == VarKind::vertex)
                term = term * values[var_a(var)].pow(e);
            else
                rest.mul_var(var, e);
        }
        term = term * Poly2::from_monomial(rest);
        out += term;
    }
    return out;
}

// Q = sum over all A of subsets of {1..k} of P(u_1^A, ..., u_n^A), where
// u[i][j] is the symbolic substitution input (1-based in both indices).
inline Poly2 symbolic_sieve_q(const Poly2& p, int n, int k,
                              const std::vector<std::vector<Poly2>>& u) {
    if (k < 1 || k > 20) throw std::invalid_argument{"symbolic sieve guard on k"};
    Poly2 q;
    std::vector<Poly2> x_vals(n + 1);
    for (std::uint64_t set = 0; set < (1ull << k); ++set) {
        for (int i = 1; i <= n; ++i) {
            Poly2 acc;
            for (int j = 1; j <= k; ++j)
                if (set >> (j - 1) & 1) acc += u[i][j];
            x_vals[i] = std::move(acc);
        }
        q += substitute_x(p, x_vals);
    }
    return q;
}

inline std::vector<std::vector<Poly2>> symbolic_u_unconstrained(int n, int k) {
    std::vector<std::vector<Poly2>> u(n + 1, std::vector<Poly2>(k + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) u[i][j] = Poly2::variable(var::z(i, j));
    return u;
}

inline std::vector<std::vector<Poly2>> symbolic_u_constrained(const MotifInstance& inst,
                                                              const ShadeTable& shades, int k) {
    const int n = inst.graph.n;
    std::vector<std::vector<Poly2>> u(n + 1, std::vector<Poly2>(k + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            Poly2 acc;
            for (int q : inst.coloring.list(i))
                for (int d = shades.offset[q]; d < shades.offset[q] + shades.count[q]; ++d)
                    acc.toggle(Monomial{}.mul_var(var::v(i, d)).mul_var(var::w(d, j)));
            u[i][j] = std::move(acc);
        }
    return u;
}

// General cost-sieve inputs: kappa_s/kappa_id give the exponent of each cost
// indeterminate per (vertex, color).
inline std::vector<std::vector<Poly2>> symbolic_u_cost(
    int n, int k, const ShadeTable& shades, const std::function<int(int, int)>& kappa_s,
    const std::function<int(int, int)>& kappa_id) {
    std::vector<std::vector<Poly2>> u(n + 1, std::vector<Poly2>(k + 1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            Poly2 acc;
            for (int q = 0; q < shades.num_colors(); ++q)
                for (int d = shades.offset[q]; d < shades.offset[q] + shades.count[q]; ++d) {
                    Monomial m;
                    m.mul_var(var::v(i, d)).mul_var(var::w(d, j));
                    if (int e = kappa_s(i, q); e > 0) m.mul_var(var::eta_s(), static_cast<std::uint32_t>(e));
                    if (int e = kappa_id(i, q); e > 0) m.mul_var(var::eta_id(), static_cast<std::uint32_t>(e));
                    acc.toggle(std::move(m));
                }
            u[i][j] = std::move(acc);
        }
    return u;
}

// Expands the requested sieve of P_k symbolically. Cost mode uses the
// closest-motif instantiation: base colors plus the "*" color with m(*) = k
// and the 0/1 substitution and insert/delete cost exponents.
inline SymbolicSieveVerdict symbolic_sieve_check(const MotifInstance& inst, SieveMode mode) {
    const int n = inst.graph.n, k = inst.k;
    const ShadeTable base = build_shade_table(inst.motif, k);
    if (n > 4 || k > 3 || base.total > 4)
        throw std::invalid_argument{"symbolic sieve guard: n <= 4, k <= 3, |S| <= 4"};
    const Poly2 pk = eval_walk_poly_symbolic(inst.graph, k);

    Poly2 q;
    switch (mode) {
    case SieveMode::unconstrained:
        q = symbolic_sieve_q(pk, n, k, symbolic_u_unconstrained(n, k));
        break;
    case SieveMode::constrained:
        q = symbolic_sieve_q(pk, n, k, symbolic_u_constrained(inst, base, k));
        break;
    case SieveMode::cost: {
        if (inst.coloring.list_variant)
            throw std::invalid_argument{"cost mode needs a single coloring"};
        const ShadeTable shades = build_shade_table_with_star(inst.motif, k);
        const int star = *shades.star_color;
        auto kappa_s = [&](int i, int q_) { return (q_ != inst.coloring.single(i) && q_ != star) ? 1 : 0; };
        auto kappa_id = [&](int, int q_) { return q_ == star ? 1 : 0; };
        q = symbolic_sieve_q(pk, n, k, symbolic_u_cost(n, k, shades, kappa_s, kappa_id));
        break;
    }
    }

    SymbolicSieveVerdict verdict;
    verdict.identically_zero = q.is_zero();
    for (const auto& mono : q.monomials())
        verdict.cost_degrees.insert({static_cast<int>(mono.degree_of(var::eta_s())),
                                     static_cast<int>(mono.degree_of(var::eta_id()))});
    return verdict;
}

} // namespace gmotif
