#pragma once

// Properly ordered branching walks and their generating polynomial P_k.
// eval_walk_poly runs the dynamic program over any commutative ring in
// O(k^2 e) ring operations. The symbolic and counting oracles enumerate
// walks explicitly (ordered trees x homomorphisms) and so provide a route
// to P_k that shares nothing with the recurrence.

#include <gmotif/gf2.hpp>
#include <gmotif/graph.hpp>
#include <gmotif/poly2.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <vector>

namespace gmotif {

// Ring over GF(2^b) parameterized by a multiplication functor from gf2.
template <class Mul> struct FieldRing {
    using Value = gf2::Elem;
    Mul mul_fn;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value add(Value a, Value b) { return a ^ b; }
    Value mul(Value a, Value b) const { return mul_fn(a, b); }
};

template <class Mul> FieldRing<Mul> make_field_ring(Mul m) { return FieldRing<Mul>{m}; }

// Plain machine integers, for the walk-counting cross-check.
struct CountRing {
    using Value = unsigned long long;
    static Value zero() { return 0; }
    static Value one() { return 1; }
    static Value add(Value a, Value b) { return a + b; }
    static Value mul(Value a, Value b) { return a * b; }
};

// Values of the x and y variables for one evaluation: x per vertex (1-based),
// y per directed arc in HostGraph::arc_index order.
struct WalkAssignment {
    std::vector<gf2::Elem> x;
    std::vector<gf2::Elem> y;
};

// Evaluates P_k at the given point. x has n+1 entries (slot 0 unused), y has
// one entry per directed arc. Scratch space lives in the caller-provided
// buffers so the sieve's inner loop does not allocate.
template <class Ring>
typename Ring::Value eval_walk_poly_buffered(const HostGraph& g, int k,
                                             const typename Ring::Value* x,
                                             const typename Ring::Value* y, const Ring& ring,
                                             std::vector<typename Ring::Value>& table,
                                             std::vector<typename Ring::Value>& yx) {
    using V = typename Ring::Value;
    if (k < 1) throw std::invalid_argument{"k must be positive"};
    const int n = g.n;
    const std::size_t cells = static_cast<std::size_t>(g.num_arcs()) + static_cast<std::size_t>(n);
    const std::size_t kk = static_cast<std::size_t>(k);

    // cell (u, i) for i in 1..deg(u)+1; column-of-l layout keeps the
    // convolution reads contiguous
    auto cell_base = [&](int u) {
        return static_cast<std::size_t>(g.arc_base[u]) + static_cast<std::size_t>(u - 1);
    };

    table.assign(cells * kk, ring.zero());
    for (std::size_t c = 0; c < cells; ++c) table[c * kk] = ring.one();

    yx.resize(g.num_arcs());
    for (int u = 1; u <= n; ++u)
        for (int i = 0; i < g.degree(u); ++i) {
            const int a = g.arc_index(u, i);
            yx[a] = ring.mul(y[a], x[g.adj[u][i]]);
        }

    for (int l = 2; l <= k; ++l) {
        const std::size_t lo = static_cast<std::size_t>(l - 1);
        for (int u = 1; u <= n; ++u) {
            const std::size_t base = cell_base(u);
            for (int i = g.degree(u); i >= 1; --i) {
                const V* next_col = &table[(base + static_cast<std::size_t>(i)) * kk];
                const V* nb_col = &table[cell_base(g.adj[u][i - 1]) * kk];
                V acc = ring.zero();
                for (int l1 = 1; l1 <= l - 1; ++l1)
                    acc = ring.add(acc, ring.mul(next_col[l1 - 1], nb_col[l - l1 - 1]));
                table[(base + static_cast<std::size_t>(i - 1)) * kk + lo] =
                    ring.add(next_col[lo], ring.mul(yx[g.arc_index(u, i - 1)], acc));
            }
        }
    }

    V r = ring.zero();
    for (int u = 1; u <= n; ++u)
        r = ring.add(r, ring.mul(x[u], table[cell_base(u) * kk + kk - 1]));
    return r;
}

template <class Ring>
typename Ring::Value eval_walk_poly(const HostGraph& g, int k,
                                    const std::vector<typename Ring::Value>& x,
                                    const std::vector<typename Ring::Value>& y, const Ring& ring) {
    if (static_cast<int>(x.size()) != g.n + 1) throw std::invalid_argument{"x values: expected n+1 entries"};
    if (static_cast<int>(y.size()) != g.num_arcs()) throw std::invalid_argument{"y values: expected one entry per arc"};
    std::vector<typename Ring::Value> table, yx;
    return eval_walk_poly_buffered(g, k, x.data(), y.data(), ring, table, yx);
}

// Callable the sieve repeatedly invokes with per-vertex values u^A. Copies
// share the graph and the fixed y values but own their scratch space, so
// each sieve worker evaluates independently.
template <class Ring> struct WalkPolyEvaluator {
    const HostGraph* graph;
    int k;
    const std::vector<gf2::Elem>* y;
    Ring ring;
    mutable std::vector<typename Ring::Value> table, yx;

    WalkPolyEvaluator(const HostGraph* graph_, int k_, const std::vector<gf2::Elem>* y_, Ring ring_)
        : graph{graph_}, k{k_}, y{y_}, ring{ring_} {}
    WalkPolyEvaluator(const WalkPolyEvaluator& o) : graph{o.graph}, k{o.k}, y{o.y}, ring{o.ring} {}
    WalkPolyEvaluator& operator=(const WalkPolyEvaluator&) = delete;

    gf2::Elem operator()(const std::vector<gf2::Elem>& x) const {
        return eval_walk_poly_buffered(*graph, k, x.data(), y->data(), ring, table, yx);
    }
};

// ---------------------------------------------------------------------------
// Explicit enumeration of properly ordered branching walks (the oracle route).

// Ordered rooted tree with preorder node ids 1..size.
struct TreeShape {
    int size = 1;
    std::vector<int> parent;                // 1-based; parent[1] = 0
    std::vector<std::vector<int>> children; // per node, ascending preorder ids
};

namespace detail {

struct ShapeNode {
    std::vector<ShapeNode> kids;
    int size() const {
        int s = 1;
        for (const auto& c : kids) s += c.size();
        return s;
    }
};

inline const std::vector<ShapeNode>& shape_nodes(int size) {
    static std::map<int, std::vector<ShapeNode>> cache;
    auto it = cache.find(size);
    if (it != cache.end()) return it->second;
    std::vector<ShapeNode> out;
    if (size == 1) {
        out.push_back(ShapeNode{});
    } else {
        // first subtree of size s1 + the same root carrying the remaining
        // subtrees; every ordered tree decomposes this way exactly once
        for (int s1 = 1; s1 <= size - 1; ++s1)
            for (const auto& first : shape_nodes(s1))
                for (const auto& rest : shape_nodes(size - s1)) {
                    ShapeNode t;
                    t.kids.push_back(first);
                    for (const auto& c : rest.kids) t.kids.push_back(c);
                    out.push_back(std::move(t));
                }
    }
    return cache.emplace(size, std::move(out)).first->second;
}

inline void flatten_shape(const ShapeNode& node, int parent_id, int& next_id, TreeShape& out) {
    const int id = next_id++;
    out.parent[id] = parent_id;
    if (parent_id != 0) out.children[parent_id].push_back(id);
    for (const auto& c : node.kids) flatten_shape(c, id, next_id, out);
}

} // namespace detail

inline const std::vector<TreeShape>& ordered_trees(int size) {
    static std::map<int, std::vector<TreeShape>> cache;
    auto it = cache.find(size);
    if (it != cache.end()) return it->second;
    std::vector<TreeShape> out;
    for (const auto& node : detail::shape_nodes(size)) {
        TreeShape t;
        t.size = size;
        t.parent.assign(size + 1, 0);
        t.children.assign(size + 1, {});
        int next_id = 1;
        detail::flatten_shape(node, 0, next_id, t);
        out.push_back(std::move(t));
    }
    return cache.emplace(size, std::move(out)).first->second;
}

// Calls fn(shape, phi) for every properly ordered branching walk of the given
// size: phi maps preorder node ids to host vertices, tree edges land on host
// edges, and sibling images are strictly increasing.
template <class Fn> void for_each_walk(const HostGraph& g, int size, Fn&& fn) {
    if (size < 1) throw std::invalid_argument{"walk size must be positive"};
    std::vector<int> phi(size + 1, 0);
    for (const auto& shape : ordered_trees(size)) {
        auto rec = [&](auto&& self, int node) -> void {
            if (node > size) {
                fn(shape, phi);
                return;
            }
            const int p = shape.parent[node];
            if (p == 0) {
                for (int u = 1; u <= g.n; ++u) {
                    phi[node] = u;
                    self(self, node + 1);
                }
                return;
            }
            // strictly larger than the previous sibling's image keeps the
            // walk properly ordered
            const auto& sibs = shape.children[p];
            int lower = 0;
            for (std::size_t s = 0; s < sibs.size(); ++s)
                if (sibs[s] == node && s > 0) lower = phi[sibs[s - 1]];
            for (int u : g.adj[phi[p]]) {
                if (u <= lower) continue;
                phi[node] = u;
                self(self, node + 1);
            }
        };
        rec(rec, 1);
    }
}

inline unsigned long long count_walks(const HostGraph& g, int size) {
    unsigned long long c = 0;
    for_each_walk(g, size, [&](const TreeShape&, const std::vector<int>&) { ++c; });
    return c;
}

// Monomial fingerprint of one walk, already multiplied by the root's x
// variable: x_phi(1) * prod over tree edges of y_(phi(a),phi(b)) x_phi(b).
inline Monomial walk_fingerprint(const TreeShape& shape, const std::vector<int>& phi) {
    Monomial m;
    m.mul_var(var::x(phi[1]));
    for (int node = 2; node <= shape.size; ++node) {
        m.mul_var(var::y(phi[shape.parent[node]], phi[node]));
        m.mul_var(var::x(phi[node]));
    }
    return m;
}

// Fully expanded P_k as a GF(2) polynomial in the x and y variables. Guarded:
// only meant as a small-instance oracle.
inline Poly2 eval_walk_poly_symbolic(const HostGraph& g, int k) {
    if (g.n > 6 || k > 4) throw std::invalid_argument{"symbolic expansion limited to n <= 6, k <= 4"};
    Poly2 p;
    for_each_walk(g, k, [&](const TreeShape& shape, const std::vector<int>& phi) {
        p.toggle(walk_fingerprint(shape, phi));
    });
    return p;
}

} // namespace gmotif
