#pragma once

// Decision and optimization algorithms. decide_max_motif runs the shade
// constrained sieve over fresh random assignments; the closest-motif family
// sweeps a (k+1)^2 grid of cost-indeterminate values, recovers the bivariate
// cost polynomial by Lagrange interpolation, and reads achievable edit
// parameters off its nonzero coefficients. NO answers are deterministic:
// a nonzero sieve value always certifies a witness, never the other way.

#include <gmotif/gf2.hpp>
#include <gmotif/graph.hpp>
#include <gmotif/prng.hpp>
#include <gmotif/sieve.hpp>
#include <gmotif/walkgen.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gmotif {

struct Decision {
    bool yes = false;
    int trials_run = 0;
    std::optional<long long> achieved_cost;
    std::uint64_t seed = 0;
};

// k_untouched + k_substituted + k_inserted_deleted = k.
struct EditParameters {
    int untouched = 0;
    int substituted = 0;
    int inserted_deleted = 0;
};

struct BivariateCostPoly {
    int degree = 0; // per-variable degree bound (= k)
    std::vector<gf2::Elem> coeff;

    explicit BivariateCostPoly(int degree_ = 0)
        : degree{degree_}, coeff(static_cast<std::size_t>(degree_ + 1) * (degree_ + 1), 0) {}

    gf2::Elem& at(int s, int t) { return coeff[static_cast<std::size_t>(s) * (degree + 1) + t]; }
    gf2::Elem at(int s, int t) const { return coeff[static_cast<std::size_t>(s) * (degree + 1) + t]; }
};

// Exact univariate coefficient recovery from d+1 samples at pairwise
// distinct points; finite-field arithmetic, no rounding anywhere.
inline std::vector<gf2::Elem> lagrange_coefficients(const std::vector<gf2::Elem>& points,
                                                    const std::vector<gf2::Elem>& values,
                                                    const gf2::Field& field) {
    const std::size_t m = points.size();
    if (values.size() != m || m == 0) throw std::invalid_argument{"lagrange: need one value per point"};
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (points[i] == points[j]) throw std::invalid_argument{"lagrange: duplicate sample points"};

    std::vector<gf2::Elem> out(m, 0), num(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        // numerator prod_{t != s} (x + p_t), built up coefficient by coefficient
        std::fill(num.begin(), num.end(), 0);
        num[0] = 1;
        std::size_t deg = 0;
        gf2::Elem denom = 1;
        for (std::size_t t = 0; t < m; ++t) {
            if (t == s) continue;
            for (std::size_t c = deg + 1; c >= 1; --c)
                num[c] = num[c - 1] ^ field.mul(num[c], points[t]);
            num[0] = field.mul(num[0], points[t]);
            ++deg;
            denom = field.mul(denom, points[s] ^ points[t]);
        }
        const gf2::Elem scale = field.mul(values[s], field.inv(denom));
        for (std::size_t c = 0; c < m; ++c) out[c] ^= field.mul(scale, num[c]);
    }
    return out;
}

// Tensor-product interpolation: grid[s][t] holds the value at
// (points_s[s], points_id[t]); per-variable degree of the underlying
// polynomial must be below points_s.size() and points_id.size().
inline BivariateCostPoly lagrange_interpolate_2d(const std::vector<gf2::Elem>& points_s,
                                                 const std::vector<gf2::Elem>& points_id,
                                                 const std::vector<std::vector<gf2::Elem>>& grid,
                                                 const gf2::Field& field) {
    const std::size_t m = points_s.size();
    if (points_id.size() != m || grid.size() != m || m == 0)
        throw std::invalid_argument{"lagrange 2d: expected a square (k+1)^2 grid"};
    BivariateCostPoly poly(static_cast<int>(m) - 1);
    std::vector<std::vector<gf2::Elem>> rows(m);
    for (std::size_t s = 0; s < m; ++s) {
        if (grid[s].size() != m) throw std::invalid_argument{"lagrange 2d: ragged grid"};
        rows[s] = lagrange_coefficients(points_id, grid[s], field);
    }
    std::vector<gf2::Elem> column(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t s = 0; s < m; ++s) column[s] = rows[s][j];
        auto cj = lagrange_coefficients(points_s, column, field);
        for (std::size_t i = 0; i < m; ++i) poly.at(static_cast<int>(i), static_cast<int>(j)) = cj[i];
    }
    return poly;
}

namespace detail {

inline void check_field_for_instance(const gf2::FieldParams& params, int k) {
    if (!gf2::field_admits_k(params.bits, k))
        throw std::invalid_argument{"field too small for k: need 2^bits >= 6k"};
}

inline gf2::Elem run_sieve_trial(const HostGraph& g, int k, const SieveAssignment& assign,
                                 const UTable& u, const gf2::Field& field, int threads) {
    return field.with_ring([&](auto mul) {
        WalkPolyEvaluator<FieldRing<decltype(mul)>> evaluator{&g, k, &assign.y,
                                                              make_field_ring(mul)};
        return sieve_sum(evaluator, u, g.n, k, threads);
    });
}

} // namespace detail

// Maximum Graph Motif decision. Per trial: fresh random v, w, y; the sieve
// value is nonzero only if a connected k-set with c(K) within M exists, and
// is nonzero with probability >= 1 - (3k-1)/2^b for such an instance.
inline Decision decide_max_motif(const MotifInstance& instance, int trials,
                                 const gf2::FieldParams& params, std::uint64_t seed,
                                 int threads = 1) {
    if (trials < 1) throw std::invalid_argument{"need at least one trial"};
    detail::check_field_for_instance(params, instance.k);
    const MotifInstance inst = preprocess(instance);
    Decision dec;
    dec.seed = seed;
    if (inst.motif_size() < inst.k) return dec; // no proper coloring of k vertices can exist
    const gf2::Field field{params};
    const ShadeTable shades = build_shade_table(inst.motif, inst.k);
    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const SieveAssignment assign = draw_assignment(field, rng, inst.graph, shades.total, inst.k);
        const UTable u = inst.coloring.list_variant
                             ? build_u_table_list(inst, shades, assign, field)
                             : build_u_table_constrained(inst, shades, assign, field);
        dec.trials_run = t + 1;
        const gf2::Elem q = detail::run_sieve_trial(inst.graph, inst.k, assign, u, field, threads);
        if (q != 0) {
            dec.yes = true;
            return dec;
        }
    }
    return dec;
}

// Cost of the edit parameters (k_S, k_ID) against motif size |M|:
// sigma_S k_S + (sigma_I + sigma_D) k_ID + sigma_D (|M| - k). The last term
// is signed; for |M| < k it discounts the insertions double-counted in k_ID.
inline long long edit_parameter_cost(const CostSpec& costs, int k_s, int k_id,
                                     long long motif_size, int k) {
    return costs.substitute_cost * k_s + (costs.insert_cost + costs.delete_cost) * k_id +
           costs.delete_cost * (motif_size - k);
}

namespace detail {

struct ClosestScanResult {
    std::optional<long long> best;
    std::vector<std::optional<long long>> per_trial;
    int trials_run = 0;
};

// Shared core of the closest-motif family. Shade capacities are clamped to
// k (equivalent for k-vertex witnesses) but the cost comparison keeps the
// instance's true |M|, which is what the edit distance is measured against.
inline ClosestScanResult closest_scan(const MotifInstance& inst, const CostSpec& costs, int trials,
                                      const gf2::FieldParams& params, std::uint64_t seed,
                                      int threads, std::optional<long long> stop_at) {
    if (trials < 1) throw std::invalid_argument{"need at least one trial"};
    if (inst.coloring.list_variant)
        throw std::invalid_argument{"closest-motif variants need a single coloring"};
    check_field_for_instance(params, inst.k);
    const gf2::Field field{params};
    const int n = inst.graph.n, k = inst.k;
    const long long motif_size = inst.motif_size();
    const ShadeTable shades = build_shade_table_with_star(inst.motif, k);

    std::vector<gf2::Elem> points(k + 1);
    for (int s = 0; s <= k; ++s) points[s] = static_cast<gf2::Elem>(s); // distinct: 2^b >= 6k > k

    ClosestScanResult res;
    res.per_trial.reserve(trials);
    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const SieveAssignment assign = draw_assignment(field, rng, inst.graph, shades.total, k);
        const auto inner = precompute_inner_sums(shades, assign, field);
        CostTables cost_tables = make_closest_cost_tables(inst, shades);

        std::vector<std::vector<gf2::Elem>> grid(k + 1, std::vector<gf2::Elem>(k + 1, 0));
        for (int s = 0; s <= k; ++s)
            for (int ti = 0; ti <= k; ++ti) {
                cost_tables.eta_s = points[s];
                cost_tables.eta_id = points[ti];
                const UTable u = build_u_table_cost(inner, cost_tables, n, k, field);
                grid[s][ti] = run_sieve_trial(inst.graph, k, assign, u, field, threads);
            }
        const BivariateCostPoly poly = lagrange_interpolate_2d(points, points, grid, field);

        std::optional<long long> trial_best;
        for (int s = 0; s <= k; ++s)
            for (int ti = 0; ti <= k; ++ti) {
                if (poly.at(s, ti) == 0) continue;
                const long long c = edit_parameter_cost(costs, s, ti, motif_size, k);
                if (!trial_best || c < *trial_best) trial_best = c;
            }
        res.per_trial.push_back(trial_best);
        res.trials_run = t + 1;
        if (trial_best && (!res.best || *trial_best < *res.best)) res.best = trial_best;
        if (stop_at && res.best && *res.best <= *stop_at) break;
    }
    return res;
}

} // namespace detail

// Closest Graph Motif decision: YES iff some achievable (k_S, k_ID) keeps
// the total edit cost within the threshold.
inline Decision decide_closest_motif(const MotifInstance& inst, const CostSpec& costs, int trials,
                                     const gf2::FieldParams& params, std::uint64_t seed,
                                     int threads = 1) {
    auto scan = detail::closest_scan(inst, costs, trials, params, seed, threads, costs.threshold);
    Decision dec;
    dec.seed = seed;
    dec.trials_run = scan.trials_run;
    dec.achieved_cost = scan.best;
    dec.yes = scan.best && *scan.best <= costs.threshold;
    return dec;
}

// Minimum achievable edit cost (threshold ignored). Every reported cost is
// achievable by a real edit sequence; it can only exceed the true minimum,
// never undercut it.
inline Decision min_edit_cost(const MotifInstance& inst, const CostSpec& costs, int trials,
                              const gf2::FieldParams& params, std::uint64_t seed, int threads = 1,
                              std::vector<std::optional<long long>>* per_trial = nullptr) {
    auto scan = detail::closest_scan(inst, costs, trials, params, seed, threads, std::nullopt);
    if (per_trial) *per_trial = scan.per_trial;
    Decision dec;
    dec.seed = seed;
    dec.trials_run = scan.trials_run;
    dec.achieved_cost = scan.best;
    dec.yes = scan.best.has_value();
    return dec;
}

// Min-Add: only insertions are affordable; d of them are allowed.
inline CostSpec min_add_spec(long long d, const MotifInstance& inst) {
    if (d < 0) throw std::invalid_argument{"d must be nonnegative"};
    if (inst.motif_size() > inst.k)
        throw ValidationError{"min-add needs |M| <= k: insertions cannot shrink the motif"};
    return CostSpec{d + 1, 1, d + 1, d};
}

// Min-Substitute: only substitutions are affordable; d of them are allowed.
inline CostSpec min_substitute_spec(long long d, const MotifInstance& inst) {
    if (d < 0) throw std::invalid_argument{"d must be nonnegative"};
    if (inst.motif_size() != inst.k) throw ValidationError{"min-substitute needs |M| = k"};
    return CostSpec{1, d + 1, d + 1, d};
}

inline Decision decide_min_add(const MotifInstance& inst, long long d, int trials,
                               const gf2::FieldParams& params, std::uint64_t seed, int threads = 1) {
    return decide_closest_motif(inst, min_add_spec(d, inst), trials, params, seed, threads);
}

inline Decision decide_min_substitute(const MotifInstance& inst, long long d, int trials,
                                      const gf2::FieldParams& params, std::uint64_t seed,
                                      int threads = 1) {
    return decide_closest_motif(inst, min_substitute_spec(d, inst), trials, params, seed, threads);
}

// Exact match: with |M| = k, any witness K has c(K) = M exactly.
inline Decision decide_exact_match(const MotifInstance& inst, int trials,
                                   const gf2::FieldParams& params, std::uint64_t seed,
                                   int threads = 1) {
    if (inst.motif_size() != inst.k) throw ValidationError{"exact-match mode needs |M| = k"};
    return decide_max_motif(inst, trials, params, seed, threads);
}

} // namespace gmotif
