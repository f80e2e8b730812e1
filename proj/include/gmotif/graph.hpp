#pragma once

// Problem instance model: host graph, vertex coloring (single or list),
// motif multiset, parameter k, optional edit costs. Includes the line
// oriented text format, validation, and the m(q) <= k preprocessing step.

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmotif {

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error{"line " + std::to_string(line_) + ": " + what_}, line{line_} {}
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Undirected, connected, simple graph on vertices 1..n with ascending
// adjacency lists. arc_base supports dense indexing of directed arcs:
// arc (u, adj[u][i]) has id arc_base[u] + i.
struct HostGraph {
    int n = 0;
    long long e = 0;
    std::vector<std::vector<int>> adj;       // 1-based; adj[0] unused
    std::vector<int> arc_base;               // 1-based prefix sums of degrees

    int degree(int u) const { return static_cast<int>(adj[u].size()); }
    int arc_index(int u, int i) const { return arc_base[u] + i; }
    int num_arcs() const { return static_cast<int>(2 * e); }

    void finalize() {
        arc_base.assign(n + 2, 0);
        for (int u = 1; u <= n; ++u) arc_base[u + 1] = arc_base[u] + degree(u);
    }

    bool operator==(const HostGraph& o) const { return n == o.n && adj == o.adj; }
};

struct Coloring {
    bool list_variant = false;
    std::vector<std::vector<int>> lists;     // 1-based; sorted, deduplicated, nonempty

    int single(int v) const { return lists[v].front(); }
    const std::vector<int>& list(int v) const { return lists[v]; }

    bool operator==(const Coloring&) const = default;
};

struct CostSpec {
    long long substitute_cost = 0;
    long long insert_cost = 0;
    long long delete_cost = 0;
    long long threshold = 0;

    bool operator==(const CostSpec&) const = default;
};

struct MotifInstance {
    HostGraph graph;
    Coloring coloring;
    std::vector<std::string> color_names;    // dense id -> name, sorted by name
    std::vector<long long> motif;            // per color id multiplicity
    int k = 0;
    std::optional<CostSpec> costs;

    int num_colors() const { return static_cast<int>(color_names.size()); }
    long long motif_size() const {
        long long s = 0;
        for (long long m : motif) s += m;
        return s;
    }

    bool operator==(const MotifInstance&) const = default;
};

// Assembles instances in code under the same interning rules as the parser:
// color ids are the sorted rank of the color names.
struct InstanceBuilder {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<std::string>> vertex_colors; // 1-based
    bool list_variant = false;
    std::map<std::string, long long> motif;
    int k = 1;
    std::optional<CostSpec> costs;

    explicit InstanceBuilder(int n_) : n{n_}, vertex_colors(n_ + 1) {}

    InstanceBuilder& edge(int u, int v) {
        edges.emplace_back(u, v);
        return *this;
    }
    InstanceBuilder& color(int v, std::string name) {
        vertex_colors[v] = {std::move(name)};
        return *this;
    }
    InstanceBuilder& colors(int v, std::vector<std::string> names) {
        vertex_colors[v] = std::move(names);
        list_variant = true;
        return *this;
    }
    InstanceBuilder& motif_count(const std::string& name, long long m) {
        motif[name] += m;
        return *this;
    }

    MotifInstance build() const;
};

inline bool is_connected(const HostGraph& g) {
    if (g.n == 0) return false;
    std::vector<char> seen(g.n + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    return reached == g.n;
}

inline HostGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw ValidationError{"graph needs at least one vertex"};
    HostGraph g;
    g.n = n;
    g.adj.assign(n + 1, {});
    for (auto [u, v] : edges) {
        if (u < 1 || v < 1 || u > n || v > n) throw ValidationError{"edge endpoint out of range"};
        if (u == v) throw ValidationError{"self-loop"};
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (int u = 1; u <= n; ++u) {
        auto& a = g.adj[u];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            throw ValidationError{"duplicate edge"};
    }
    g.e = static_cast<long long>(edges.size());
    g.finalize();
    return g;
}

inline void validate_instance(const MotifInstance& inst) {
    const auto& g = inst.graph;
    if (g.n < 1) throw ValidationError{"graph needs at least one vertex"};
    if (!is_connected(g)) throw ValidationError{"graph not connected"};
    if (inst.k < 1 || inst.k > g.n) throw ValidationError{"k out of range 1..n"};
    if (static_cast<int>(inst.coloring.lists.size()) != g.n + 1)
        throw ValidationError{"coloring does not cover every vertex"};
    const int nc = inst.num_colors();
    for (int v = 1; v <= g.n; ++v) {
        const auto& lst = inst.coloring.lists[v];
        if (lst.empty()) throw ValidationError{"vertex " + std::to_string(v) + " has no color"};
        for (int q : lst)
            if (q < 0 || q >= nc) throw ValidationError{"unknown color id on vertex " + std::to_string(v)};
    }
    if (static_cast<int>(inst.motif.size()) != nc) throw ValidationError{"motif table size mismatch"};
    for (long long m : inst.motif)
        if (m < 0) throw ValidationError{"negative multiplicity"};
    if (inst.costs) {
        const auto& c = *inst.costs;
        if (c.substitute_cost < 0 || c.insert_cost < 0 || c.delete_cost < 0 || c.threshold < 0)
            throw ValidationError{"negative cost"};
    }
}

// Clamps every multiplicity to min(m(q), k); everything else unchanged.
inline MotifInstance preprocess(MotifInstance inst) {
    for (auto& m : inst.motif) m = std::min<long long>(m, inst.k);
    return inst;
}

namespace detail {

inline std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in{s};
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

inline std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur += c;
    }
    out.push_back(cur);
    return out;
}

inline long long parse_ll(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument{""};
        return v;
    } catch (const std::exception&) {
        throw ParseError{line, std::string{"expected integer for "} + what + ", got '" + tok + "'"};
    }
}

} // namespace detail

inline MotifInstance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool saw_header = false;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    // raw color directives: vertex -> list of names (single entries from
    // `color`, multi entries from `colors`)
    std::vector<std::tuple<int, bool, std::vector<std::string>>> vertex_colors;
    std::vector<char> vertex_seen;
    std::map<std::string, long long> motif_names;
    std::optional<int> k;
    std::optional<CostSpec> costs;
    bool saw_costs = false, saw_tau = false;
    long long tau = 0, sig_s = 0, sig_i = 0, sig_d = 0;

    auto require_n = [&](int ln) {
        if (n < 0) throw ParseError{ln, "directive before 'vertices' line"};
    };
    auto check_vertex = [&](long long v, int ln) {
        if (v < 1 || v > n) throw ParseError{ln, "vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n)};
        return static_cast<int>(v);
    };

    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        auto toks = detail::split_ws(line);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "motif-instance" || toks[1] != "v1")
                throw ParseError{lineno, "expected header 'motif-instance v1'"};
            saw_header = true;
            continue;
        }
        const std::string& kw = toks[0];
        if (kw == "vertices") {
            if (n >= 0) throw ParseError{lineno, "duplicate 'vertices' line"};
            if (toks.size() != 2) throw ParseError{lineno, "usage: vertices <n>"};
            long long v = detail::parse_ll(toks[1], lineno, "vertex count");
            if (v < 1 || v > 1'000'000) throw ParseError{lineno, "vertex count out of range"};
            n = static_cast<int>(v);
            vertex_seen.assign(n + 1, 0);
        } else if (kw == "edge") {
            require_n(lineno);
            if (toks.size() != 3) throw ParseError{lineno, "usage: edge <u> <v>"};
            int u = check_vertex(detail::parse_ll(toks[1], lineno, "edge endpoint"), lineno);
            int v = check_vertex(detail::parse_ll(toks[2], lineno, "edge endpoint"), lineno);
            if (u >= v) throw ParseError{lineno, "edges must satisfy u < v"};
            edges.emplace_back(u, v);
        } else if (kw == "color" || kw == "colors") {
            require_n(lineno);
            if (toks.size() < 3) throw ParseError{lineno, "usage: " + kw + " <vertex> <name(s)>"};
            int v = check_vertex(detail::parse_ll(toks[1], lineno, "vertex"), lineno);
            if (vertex_seen[v]) throw ParseError{lineno, "vertex " + std::to_string(v) + " colored twice"};
            vertex_seen[v] = 1;
            std::vector<std::string> names;
            if (kw == "color") {
                if (toks.size() != 3) throw ParseError{lineno, "usage: color <vertex> <name>"};
                names.push_back(toks[2]);
            } else {
                std::string joined = toks[2];
                for (std::size_t i = 3; i < toks.size(); ++i) joined += toks[i];
                for (auto& nm : detail::split_commas(joined)) {
                    if (nm.empty()) throw ParseError{lineno, "empty color name in list"};
                    names.push_back(nm);
                }
            }
            vertex_colors.emplace_back(v, kw == "colors", std::move(names));
        } else if (kw == "motif") {
            if (toks.size() != 3) throw ParseError{lineno, "usage: motif <name> <multiplicity>"};
            long long m = detail::parse_ll(toks[2], lineno, "multiplicity");
            if (m < 0) throw ParseError{lineno, "negative multiplicity"};
            if (!motif_names.emplace(toks[1], m).second)
                throw ParseError{lineno, "duplicate motif line for color '" + toks[1] + "'"};
        } else if (kw == "k") {
            if (toks.size() != 2) throw ParseError{lineno, "usage: k <k>"};
            if (k) throw ParseError{lineno, "duplicate 'k' line"};
            long long v = detail::parse_ll(toks[1], lineno, "k");
            if (v < 1 || v > 1'000'000) throw ParseError{lineno, "k out of range"};
            k = static_cast<int>(v);
        } else if (kw == "costs") {
            if (toks.size() != 4) throw ParseError{lineno, "usage: costs <sigmaS> <sigmaI> <sigmaD>"};
            sig_s = detail::parse_ll(toks[1], lineno, "sigmaS");
            sig_i = detail::parse_ll(toks[2], lineno, "sigmaI");
            sig_d = detail::parse_ll(toks[3], lineno, "sigmaD");
            if (sig_s < 0 || sig_i < 0 || sig_d < 0) throw ParseError{lineno, "negative cost"};
            saw_costs = true;
        } else if (kw == "tau") {
            if (toks.size() != 2) throw ParseError{lineno, "usage: tau <tau>"};
            tau = detail::parse_ll(toks[1], lineno, "tau");
            if (tau < 0) throw ParseError{lineno, "negative tau"};
            saw_tau = true;
        } else {
            throw ParseError{lineno, "unknown directive '" + kw + "'"};
        }
    }
    if (!saw_header) throw ParseError{lineno, "missing header 'motif-instance v1'"};
    if (n < 0) throw ParseError{lineno, "missing 'vertices' line"};
    if (!k) throw ParseError{lineno, "missing 'k' line"};
    if (saw_tau && !saw_costs) throw ParseError{lineno, "'tau' given without 'costs'"};
    for (int v = 1; v <= n; ++v)
        if (!vertex_seen[v]) throw ValidationError{"vertex " + std::to_string(v) + " has no color"};

    MotifInstance inst;
    inst.graph = make_graph(n, edges);

    // Intern color names in sorted order; ids are their sorted rank.
    std::map<std::string, int> intern;
    for (const auto& [v, is_list, names] : vertex_colors)
        for (const auto& nm : names) intern.emplace(nm, 0);
    for (const auto& [nm, m] : motif_names) intern.emplace(nm, 0);
    int next = 0;
    for (auto& [nm, id] : intern) id = next++;
    inst.color_names.reserve(intern.size());
    for (const auto& [nm, id] : intern) inst.color_names.push_back(nm);

    inst.coloring.lists.assign(n + 1, {});
    for (const auto& [v, is_list, names] : vertex_colors) {
        for (const auto& nm : names) inst.coloring.lists[v].push_back(intern.at(nm));
        auto& lst = inst.coloring.lists[v];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
        if (is_list) inst.coloring.list_variant = true;
    }

    inst.motif.assign(intern.size(), 0);
    for (const auto& [nm, m] : motif_names) inst.motif[intern.at(nm)] = m;
    inst.k = *k;
    if (saw_costs) inst.costs = CostSpec{sig_s, sig_i, sig_d, tau};
    validate_instance(inst);
    return inst;
}

inline MotifInstance parse_instance(const std::string& text) {
    std::istringstream in{text};
    return parse_instance(in);
}

inline MotifInstance InstanceBuilder::build() const {
    MotifInstance inst;
    inst.graph = make_graph(n, edges);
    std::map<std::string, int> intern;
    for (int v = 1; v <= n; ++v)
        for (const auto& nm : vertex_colors[v]) intern.emplace(nm, 0);
    for (const auto& [nm, m] : motif) intern.emplace(nm, 0);
    int next = 0;
    for (auto& [nm, id] : intern) id = next++;
    for (const auto& [nm, id] : intern) inst.color_names.push_back(nm);
    inst.coloring.list_variant = list_variant;
    inst.coloring.lists.assign(n + 1, {});
    for (int v = 1; v <= n; ++v) {
        for (const auto& nm : vertex_colors[v]) inst.coloring.lists[v].push_back(intern.at(nm));
        auto& lst = inst.coloring.lists[v];
        std::sort(lst.begin(), lst.end());
        lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    }
    inst.motif.assign(intern.size(), 0);
    for (const auto& [nm, m] : motif) inst.motif[intern.at(nm)] = m;
    inst.k = k;
    inst.costs = costs;
    validate_instance(inst);
    return inst;
}

inline std::string serialize_instance(const MotifInstance& inst) {
    std::ostringstream out;
    out << "motif-instance v1\n";
    out << "vertices " << inst.graph.n << "\n";
    for (int u = 1; u <= inst.graph.n; ++u)
        for (int v : inst.graph.adj[u])
            if (u < v) out << "edge " << u << " " << v << "\n";
    for (int v = 1; v <= inst.graph.n; ++v) {
        const auto& lst = inst.coloring.lists[v];
        if (!inst.coloring.list_variant && lst.size() == 1) {
            out << "color " << v << " " << inst.color_names[lst[0]] << "\n";
        } else {
            out << "colors " << v << " ";
            for (std::size_t i = 0; i < lst.size(); ++i)
                out << (i ? "," : "") << inst.color_names[lst[i]];
            out << "\n";
        }
    }
    // zero multiplicities are written out so the color universe survives a
    // round trip even for colors that appear nowhere else
    for (int q = 0; q < inst.num_colors(); ++q)
        out << "motif " << inst.color_names[q] << " " << inst.motif[q] << "\n";
    out << "k " << inst.k << "\n";
    if (inst.costs) {
        out << "costs " << inst.costs->substitute_cost << " " << inst.costs->insert_cost << " "
            << inst.costs->delete_cost << "\n";
        out << "tau " << inst.costs->threshold << "\n";
    }
    return out.str();
}

} // namespace gmotif
