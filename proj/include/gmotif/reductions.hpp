#pragma once

// Constructive Set Cover -> Maximum Graph Motif reduction in both color
// variants, a brute-force Set Cover solver for faithfulness checks, and a
// seeded random instance generator. The produced graph puts a hub vertex r
// next to t copies of the set family; element vertices hang off the sets
// containing them. Always k = n + t + 1 with sum of multiplicities k.

#include <gmotif/graph.hpp>
#include <gmotif/prng.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gmotif {

struct SetCoverInstance {
    std::vector<std::string> element_names;  // universe, input order
    std::vector<std::vector<int>> sets;      // element indices, sorted unique
    int budget = 1;                          // t

    int num_elements() const { return static_cast<int>(element_names.size()); }
    int num_sets() const { return static_cast<int>(sets.size()); }
};

inline void validate_set_cover(const SetCoverInstance& sc) {
    const int n = sc.num_elements(), m = sc.num_sets();
    if (n < 1) throw ValidationError{"set cover: empty universe"};
    if (m < 1) throw ValidationError{"set cover: no sets"};
    if (sc.budget < 1 || sc.budget > m) throw ValidationError{"set cover: budget t must be in 1..m"};
    std::vector<char> covered(n, 0);
    for (const auto& s : sc.sets)
        for (int e : s) {
            if (e < 0 || e >= n) throw ValidationError{"set cover: element index out of range"};
            covered[e] = 1;
        }
    for (int e = 0; e < n; ++e)
        if (!covered[e])
            throw ValidationError{"set cover: element '" + sc.element_names[e] + "' in no set"};
}

// Exhaustive: YES iff some subfamily of exactly t sets unions to U. With
// t <= m this coincides with "at most t".
inline bool brute_set_cover(const SetCoverInstance& sc) {
    validate_set_cover(sc);
    const int m = sc.num_sets(), n = sc.num_elements();
    if (m > 12) throw std::invalid_argument{"oracle guard: at most 12 sets"};
    std::vector<std::uint32_t> bits(m, 0);
    for (int i = 0; i < m; ++i)
        for (int e : sc.sets[i]) bits[i] |= 1u << e;
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
        if (__builtin_popcount(pick) != sc.budget) continue;
        std::uint32_t covered = 0;
        for (int i = 0; i < m; ++i)
            if (pick >> i & 1) covered |= bits[i];
        if (covered == full) return true;
    }
    return false;
}

namespace detail {

// Vertex numbering: r = 1, then s^j_i for j = 1..t, i = 1..m in (j, i)
// lexicographic order, then universe elements in input order.
inline InstanceBuilder reduction_skeleton(const SetCoverInstance& sc) {
    validate_set_cover(sc);
    const int n = sc.num_elements(), m = sc.num_sets(), t = sc.budget;
    InstanceBuilder b{1 + m * t + n};
    auto set_vertex = [&](int j, int i) { return 1 + (j - 1) * m + i; };
    auto elem_vertex = [&](int e) { return 1 + m * t + e + 1; };
    for (int j = 1; j <= t; ++j)
        for (int i = 1; i <= m; ++i) {
            b.edge(1, set_vertex(j, i));
            for (int e : sc.sets[i - 1]) b.edge(set_vertex(j, i), elem_vertex(e));
        }
    b.k = n + t + 1;
    return b;
}

} // namespace detail

// Variant (1): every color unique. Set copies in layer j get color j, the
// hub gets t+1, universe elements get t+2 .. n+t+1 bijectively.
inline MotifInstance reduce_unique_colors(const SetCoverInstance& sc) {
    const int n = sc.num_elements(), m = sc.num_sets(), t = sc.budget;
    InstanceBuilder b = detail::reduction_skeleton(sc);
    b.color(1, std::to_string(t + 1));
    for (int j = 1; j <= t; ++j)
        for (int i = 1; i <= m; ++i) b.color(1 + (j - 1) * m + i, std::to_string(j));
    for (int e = 0; e < n; ++e) b.color(1 + m * t + e + 1, std::to_string(t + 1 + e + 1));
    for (int q = 1; q <= n + t + 1; ++q) b.motif_count(std::to_string(q), 1);
    return b.build();
}

// Variant (2): two colors, m(1) = n+1 on the hub and universe, m(2) = t on
// the set copies.
inline MotifInstance reduce_two_colors(const SetCoverInstance& sc) {
    const int n = sc.num_elements(), m = sc.num_sets(), t = sc.budget;
    InstanceBuilder b = detail::reduction_skeleton(sc);
    b.color(1, "1");
    for (int j = 1; j <= t; ++j)
        for (int i = 1; i <= m; ++i) b.color(1 + (j - 1) * m + i, "2");
    for (int e = 0; e < n; ++e) b.color(1 + m * t + e + 1, "1");
    b.motif_count("1", n + 1);
    b.motif_count("2", t);
    return b.build();
}

// ---------------------------------------------------------------------------
// Text format.

inline SetCoverInstance parse_set_cover(std::istream& in) {
    SetCoverInstance sc;
    std::map<std::string, int> elem_ids;
    std::string line;
    int lineno = 0;
    bool saw_header = false, saw_t = false;
    int next_set = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls{line};
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!saw_header) {
            if (toks.size() != 2 || toks[0] != "setcover" || toks[1] != "v1")
                throw ParseError{lineno, "expected header 'setcover v1'"};
            saw_header = true;
            continue;
        }
        if (toks[0] == "element") {
            if (toks.size() != 2) throw ParseError{lineno, "usage: element <name>"};
            if (!elem_ids.emplace(toks[1], sc.num_elements()).second)
                throw ParseError{lineno, "duplicate element '" + toks[1] + "'"};
            sc.element_names.push_back(toks[1]);
        } else if (toks[0] == "set") {
            if (toks.size() < 2) throw ParseError{lineno, "usage: set <i> <e1> <e2> ..."};
            if (toks[1] != std::to_string(next_set))
                throw ParseError{lineno, "sets must be numbered consecutively from 1"};
            ++next_set;
            std::set<int> members;
            for (std::size_t i = 2; i < toks.size(); ++i) {
                auto it = elem_ids.find(toks[i]);
                if (it == elem_ids.end()) throw ParseError{lineno, "unknown element '" + toks[i] + "'"};
                members.insert(it->second);
            }
            sc.sets.emplace_back(members.begin(), members.end());
        } else if (toks[0] == "t") {
            if (toks.size() != 2) throw ParseError{lineno, "usage: t <t>"};
            try {
                sc.budget = std::stoi(toks[1]);
            } catch (const std::exception&) {
                throw ParseError{lineno, "bad budget"};
            }
            saw_t = true;
        } else {
            throw ParseError{lineno, "unknown directive '" + toks[0] + "'"};
        }
    }
    if (!saw_header) throw ParseError{lineno, "missing header 'setcover v1'"};
    if (!saw_t) throw ParseError{lineno, "missing 't' line"};
    validate_set_cover(sc);
    return sc;
}

inline SetCoverInstance parse_set_cover(const std::string& text) {
    std::istringstream in{text};
    return parse_set_cover(in);
}

inline std::string serialize_set_cover(const SetCoverInstance& sc) {
    std::ostringstream out;
    out << "setcover v1\n";
    for (const auto& nm : sc.element_names) out << "element " << nm << "\n";
    for (int i = 0; i < sc.num_sets(); ++i) {
        out << "set " << i + 1;
        for (int e : sc.sets[i]) out << " " << sc.element_names[e];
        out << "\n";
    }
    out << "t " << sc.budget << "\n";
    return out.str();
}

// Random instance: element e joins set i independently with the given
// density; uncovered elements are repaired into a uniformly chosen set.
inline SetCoverInstance gen_random_set_cover(Rng& rng, int n, int m, int t, double density = 0.5) {
    if (n < 1 || m < 1 || t < 1 || t > m) throw std::invalid_argument{"infeasible set cover shape"};
    SetCoverInstance sc;
    sc.budget = t;
    for (int e = 0; e < n; ++e) sc.element_names.push_back("e" + std::to_string(e + 1));
    sc.sets.assign(m, {});
    const std::uint64_t bar = static_cast<std::uint64_t>(density * 18446744073709551615.0);
    std::vector<char> covered(n, 0);
    for (int i = 0; i < m; ++i)
        for (int e = 0; e < n; ++e)
            if (rng() <= bar) {
                sc.sets[i].push_back(e);
                covered[e] = 1;
            }
    for (int e = 0; e < n; ++e)
        if (!covered[e]) {
            const int i = static_cast<int>(rng() % m);
            sc.sets[i].insert(std::lower_bound(sc.sets[i].begin(), sc.sets[i].end(), e), e);
        }
    validate_set_cover(sc);
    return sc;
}

} // namespace gmotif
