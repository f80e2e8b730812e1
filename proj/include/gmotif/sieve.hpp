#pragma once

// The three substitution sieves: plain multilinear detection, shade
// constrained detection, and cost-constrained detection with two cost
// indeterminates. A sieve is a sum over all 2^k label subsets A of the walk
// polynomial evaluated at per-vertex inputs u^A; characteristic 2 makes the
// sum order-independent, so the subset range splits freely across threads
// with bit-identical results.

#include <gmotif/gf2.hpp>
#include <gmotif/graph.hpp>
#include <gmotif/prng.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace gmotif {

// Disjoint shade ranges per color: color q owns global shade ids
// offset[q] .. offset[q]+count[q]-1, in color-id order, with the synthetic
// "*" color (when present) allocated last.
struct ShadeTable {
    std::vector<int> offset;
    std::vector<int> count;
    int total = 0;
    std::optional<int> star_color;

    int num_colors() const { return static_cast<int>(count.size()); }
};

// Multiplicities are clamped to k: a k-vertex witness can never use more
// than k shades of one color, so capacities above k are equivalent.
inline ShadeTable build_shade_table(const std::vector<long long>& mult, int k) {
    ShadeTable t;
    t.offset.reserve(mult.size());
    t.count.reserve(mult.size());
    for (long long m : mult) {
        if (m < 0) throw std::invalid_argument{"negative multiplicity"};
        const int c = static_cast<int>(std::min<long long>(m, k));
        t.offset.push_back(t.total);
        t.count.push_back(c);
        t.total += c;
    }
    return t;
}

inline ShadeTable build_shade_table_with_star(const std::vector<long long>& mult, int k) {
    ShadeTable t = build_shade_table(mult, k);
    t.star_color = t.num_colors();
    t.offset.push_back(t.total);
    t.count.push_back(k);
    t.total += k;
    return t;
}

// Random field values for one trial: v per (vertex, shade), w per
// (shade, label), y per directed arc. Drawn in that order, row-major, so a
// seed pins the whole assignment.
struct SieveAssignment {
    int n = 0;
    int k = 0;
    int shades = 0;
    std::vector<gf2::Elem> v; // (i-1)*shades + d
    std::vector<gf2::Elem> w; // d*k + (j-1)
    std::vector<gf2::Elem> y; // arc index

    gf2::Elem vv(int i, int d) const { return v[static_cast<std::size_t>(i - 1) * shades + d]; }
    gf2::Elem ww(int d, int j) const { return w[static_cast<std::size_t>(d) * k + (j - 1)]; }
};

inline SieveAssignment draw_assignment(const gf2::Field& field, Rng& rng, const HostGraph& g,
                                       int shades, int k) {
    SieveAssignment a;
    a.n = g.n;
    a.k = k;
    a.shades = shades;
    a.v.resize(static_cast<std::size_t>(g.n) * shades);
    a.w.resize(static_cast<std::size_t>(shades) * k);
    a.y.resize(g.num_arcs());
    for (auto& e : a.v) e = field.random_elem(rng);
    for (auto& e : a.w) e = field.random_elem(rng);
    for (auto& e : a.y) e = field.random_elem(rng);
    return a;
}

// u tables are stored column-major by label: u[j*(n+1) + i] = u_{i,j+1},
// so that accumulating one label into all vertices streams memory.
using UTable = std::vector<gf2::Elem>;

// u_{i,j} = sum over shades d of vertex i's color of v_{i,d} w_{d,j}.
inline UTable build_u_table_constrained(const MotifInstance& inst, const ShadeTable& shades,
                                        const SieveAssignment& a, const gf2::Field& field) {
    const int n = inst.graph.n, k = a.k;
    UTable u(static_cast<std::size_t>(k) * (n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        const int q = inst.coloring.single(i);
        for (int j = 1; j <= k; ++j) {
            gf2::Elem acc = 0;
            for (int d = shades.offset[q]; d < shades.offset[q] + shades.count[q]; ++d)
                acc ^= field.mul(a.vv(i, d), a.ww(d, j));
            u[static_cast<std::size_t>(j - 1) * (n + 1) + i] = acc;
        }
    }
    return u;
}

// List-coloring variant: the shade sum runs over every color in C(i).
inline UTable build_u_table_list(const MotifInstance& inst, const ShadeTable& shades,
                                 const SieveAssignment& a, const gf2::Field& field) {
    const int n = inst.graph.n, k = a.k;
    UTable u(static_cast<std::size_t>(k) * (n + 1), 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= k; ++j) {
            gf2::Elem acc = 0;
            for (int q : inst.coloring.list(i))
                for (int d = shades.offset[q]; d < shades.offset[q] + shades.count[q]; ++d)
                    acc ^= field.mul(a.vv(i, d), a.ww(d, j));
            u[static_cast<std::size_t>(j - 1) * (n + 1) + i] = acc;
        }
    return u;
}

// Per-(vertex, color) cost exponents plus the current evaluation point for
// the two cost indeterminates. Exponent convention: eta^0 = 1 even at
// eta = 0, so zero-cost colors survive evaluation at zero.
struct CostTables {
    int num_colors = 0;            // |C|, including "*" when present
    std::vector<int> sub_exp;      // (i-1)*|C| + q -> kappa_S
    std::vector<int> insdel_exp;   // (i-1)*|C| + q -> kappa_ID
    gf2::Elem eta_s = 0;
    gf2::Elem eta_id = 0;

    int kappa_s(int i, int q) const { return sub_exp[static_cast<std::size_t>(i - 1) * num_colors + q]; }
    int kappa_id(int i, int q) const { return insdel_exp[static_cast<std::size_t>(i - 1) * num_colors + q]; }
};

// Closest-motif cost functions: substituting color q for the vertex's own
// color costs one S unit; taking the "*" color costs one ID unit.
inline CostTables make_closest_cost_tables(const MotifInstance& inst, const ShadeTable& shades) {
    if (!shades.star_color) throw std::invalid_argument{"cost tables need a shade table with a star color"};
    const int n = inst.graph.n;
    const int nc = shades.num_colors();
    const int star = *shades.star_color;
    CostTables t;
    t.num_colors = nc;
    t.sub_exp.assign(static_cast<std::size_t>(n) * nc, 0);
    t.insdel_exp.assign(static_cast<std::size_t>(n) * nc, 0);
    for (int i = 1; i <= n; ++i) {
        const int own = inst.coloring.single(i);
        for (int q = 0; q < nc; ++q) {
            const std::size_t at = static_cast<std::size_t>(i - 1) * nc + q;
            t.sub_exp[at] = (q != own && q != star) ? 1 : 0;
            t.insdel_exp[at] = (q == star) ? 1 : 0;
        }
    }
    return t;
}

// Inner sums t_{i,q,j} = sum over d in S_q of v_{i,d} w_{d,j}; computed once
// per random assignment and shared by every (eta_s, eta_id) grid point.
inline std::vector<gf2::Elem> precompute_inner_sums(const ShadeTable& shades,
                                                    const SieveAssignment& a,
                                                    const gf2::Field& field) {
    const int n = a.n, k = a.k, nc = shades.num_colors();
    std::vector<gf2::Elem> t(static_cast<std::size_t>(n) * nc * k, 0);
    for (int i = 1; i <= n; ++i)
        for (int q = 0; q < nc; ++q)
            for (int j = 1; j <= k; ++j) {
                gf2::Elem acc = 0;
                for (int d = shades.offset[q]; d < shades.offset[q] + shades.count[q]; ++d)
                    acc ^= field.mul(a.vv(i, d), a.ww(d, j));
                t[(static_cast<std::size_t>(i - 1) * nc + q) * k + (j - 1)] = acc;
            }
    return t;
}

// u_{i,j} = sum over q in C of eta_s^kappa_S(i,q) eta_id^kappa_ID(i,q) t_{i,q,j}.
inline UTable build_u_table_cost(const std::vector<gf2::Elem>& inner, const CostTables& costs,
                                 int n, int k, const gf2::Field& field) {
    const int nc = costs.num_colors;
    UTable u(static_cast<std::size_t>(k) * (n + 1), 0);
    for (int i = 1; i <= n; ++i) {
        for (int q = 0; q < nc; ++q) {
            const gf2::Elem factor = field.mul(field.pow(costs.eta_s, costs.kappa_s(i, q)),
                                               field.pow(costs.eta_id, costs.kappa_id(i, q)));
            if (factor == 0) continue;
            const auto* row = &inner[(static_cast<std::size_t>(i - 1) * nc + q) * k];
            for (int j = 1; j <= k; ++j)
                u[static_cast<std::size_t>(j - 1) * (n + 1) + i] ^= field.mul(factor, row[j - 1]);
        }
    }
    return u;
}

// Sum of evaluator(u^A) over all subsets A of {1..k}, u^A_i = XOR of the
// columns j in A.
// Each worker owns a contiguous subset range, a copy of the evaluator, and a
// private accumulator; partial sums combine by XOR, so the result does not
// depend on the worker count.
template <class Evaluator>
gf2::Elem sieve_sum(const Evaluator& evaluator, const UTable& u, int n, int k, int threads = 1) {
    if (k < 1 || k > 62) throw std::invalid_argument{"sieve supports 1 <= k <= 62"};
    if (u.size() != static_cast<std::size_t>(k) * (n + 1))
        throw std::invalid_argument{"u table dimensions do not match n, k"};
    const std::uint64_t subsets = 1ull << k;

    auto run_range = [&u, n, k](Evaluator ev, std::uint64_t lo, std::uint64_t hi) {
        std::vector<gf2::Elem> x(static_cast<std::size_t>(n) + 1, 0);
        gf2::Elem acc = 0;
        for (std::uint64_t set = lo; set < hi; ++set) {
            std::fill(x.begin(), x.end(), 0);
            std::uint64_t rest = set;
            while (rest) {
                const int j = __builtin_ctzll(rest);
                rest &= rest - 1;
                const gf2::Elem* col = &u[static_cast<std::size_t>(j) * (n + 1)];
                for (int i = 1; i <= n; ++i) x[i] ^= col[i];
            }
            acc ^= ev(x);
        }
        return acc;
    };

    int workers = threads < 1 ? 1 : threads;
    if (subsets / 64 < static_cast<std::uint64_t>(workers))
        workers = static_cast<int>(std::max<std::uint64_t>(1, subsets / 64));
    if (workers == 1) return run_range(evaluator, 0, subsets);

    std::vector<gf2::Elem> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = subsets / workers * w + std::min<std::uint64_t>(w, subsets % workers);
        const std::uint64_t hi = lo + subsets / workers + (static_cast<std::uint64_t>(w) < subsets % workers ? 1 : 0);
        pool.emplace_back([&partial, &run_range, &evaluator, w, lo, hi] {
            partial[w] = run_range(evaluator, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    gf2::Elem acc = 0;
    for (gf2::Elem p : partial) acc ^= p;
    return acc;
}

// Lemma 1 sieve: the per-(vertex, label) values feed in directly.
template <class Evaluator>
gf2::Elem sieve_sum_unconstrained(const Evaluator& evaluator, const UTable& z, int n, int k,
                                  int threads = 1) {
    return sieve_sum(evaluator, z, n, k, threads);
}

// Gray-code subset sweep: visits A(i) = i ^ (i >> 1), so consecutive subsets
// differ in one label and u^A updates with a single column XOR. Sums the
// same 2^k terms as sieve_sum; results are bit-identical.
template <class Evaluator>
gf2::Elem sieve_sum_gray(const Evaluator& evaluator, const UTable& u, int n, int k,
                         int threads = 1) {
    if (k < 1 || k > 62) throw std::invalid_argument{"sieve supports 1 <= k <= 62"};
    if (u.size() != static_cast<std::size_t>(k) * (n + 1))
        throw std::invalid_argument{"u table dimensions do not match n, k"};
    const std::uint64_t subsets = 1ull << k;

    auto run_range = [&u, n](Evaluator ev, std::uint64_t lo, std::uint64_t hi) {
        std::vector<gf2::Elem> x(static_cast<std::size_t>(n) + 1, 0);
        auto flip_column = [&](int j) {
            const gf2::Elem* col = &u[static_cast<std::size_t>(j) * (n + 1)];
            for (int i = 1; i <= n; ++i) x[i] ^= col[i];
        };
        std::uint64_t bits = lo ^ (lo >> 1);
        for (std::uint64_t rest = bits; rest; rest &= rest - 1) flip_column(__builtin_ctzll(rest));
        gf2::Elem acc = 0;
        for (std::uint64_t rank = lo; rank < hi; ++rank) {
            acc ^= ev(x);
            if (rank + 1 < hi) flip_column(__builtin_ctzll(rank + 1));
        }
        return acc;
    };

    int workers = threads < 1 ? 1 : threads;
    if (subsets / 64 < static_cast<std::uint64_t>(workers))
        workers = static_cast<int>(std::max<std::uint64_t>(1, subsets / 64));
    if (workers == 1) return run_range(evaluator, 0, subsets);

    std::vector<gf2::Elem> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        const std::uint64_t lo = subsets / workers * w + std::min<std::uint64_t>(w, subsets % workers);
        const std::uint64_t hi = lo + subsets / workers + (static_cast<std::uint64_t>(w) < subsets % workers ? 1 : 0);
        pool.emplace_back([&partial, &run_range, &evaluator, w, lo, hi] {
            partial[w] = run_range(evaluator, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    gf2::Elem acc = 0;
    for (gf2::Elem p : partial) acc ^= p;
    return acc;
}

} // namespace gmotif
