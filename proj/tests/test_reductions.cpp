#include <doctest.h>

#include <gmotif/motif.hpp>
#include <gmotif/oracle.hpp>
#include <gmotif/reductions.hpp>

#include <numeric>

using namespace gmotif;

namespace {

SetCoverInstance spec_example(bool coverable) {
    // U = {a, b}, S1 = {a}, S2 = {a, b} or {b}, t = 1
    SetCoverInstance sc;
    sc.element_names = {"a", "b"};
    sc.sets = coverable ? std::vector<std::vector<int>>{{0}, {0, 1}}
                        : std::vector<std::vector<int>>{{0}, {1}};
    sc.budget = 1;
    return sc;
}

} // namespace

TEST_CASE("brute set cover") {
    SetCoverInstance one;
    one.element_names = {"a", "b", "c"};
    one.sets = {{0, 1, 2}};
    one.budget = 1;
    CHECK(brute_set_cover(one));

    SetCoverInstance pairs;
    pairs.element_names = {"a", "b", "c"};
    pairs.sets = {{0, 1}, {1, 2}, {0, 2}};
    pairs.budget = 1;
    CHECK_FALSE(brute_set_cover(pairs));
    pairs.budget = 2;
    CHECK(brute_set_cover(pairs));

    SetCoverInstance uncovered;
    uncovered.element_names = {"a", "b"};
    uncovered.sets = {{0}};
    uncovered.budget = 1;
    CHECK_THROWS_AS(brute_set_cover(uncovered), ValidationError);
}

TEST_CASE("unique-color reduction of the worked example") {
    const MotifInstance yes = reduce_unique_colors(spec_example(true));
    CHECK(yes.graph.n == 5); // r, s11, s12, a, b
    CHECK(yes.graph.e == 5);
    CHECK(yes.k == 4);       // n + t + 1
    CHECK(yes.motif_size() == yes.k);
    CHECK(yes.num_colors() == 4);
    for (long long m : yes.motif) CHECK(m == 1);
    CHECK(brute_decide_max_motif(yes));

    const MotifInstance no = reduce_unique_colors(spec_example(false));
    CHECK_FALSE(brute_decide_max_motif(no));
}

TEST_CASE("two-color reduction of the worked example") {
    const MotifInstance yes = reduce_two_colors(spec_example(true));
    CHECK(yes.graph.n == 5);
    CHECK(yes.k == 4);
    CHECK(yes.num_colors() == 2);
    CHECK(yes.motif_size() == yes.k); // m(1) = n+1, m(2) = t
    CHECK(brute_decide_max_motif(yes));
    CHECK_FALSE(brute_decide_max_motif(reduce_two_colors(spec_example(false))));
}

TEST_CASE("taking the whole family always covers") {
    SetCoverInstance sc;
    sc.element_names = {"a", "b", "c"};
    sc.sets = {{0}, {1}, {2}};
    sc.budget = 3; // t = m
    CHECK(brute_set_cover(sc));
    CHECK(brute_decide_max_motif(reduce_unique_colors(sc)));
    CHECK(brute_decide_max_motif(reduce_two_colors(sc)));
}

TEST_CASE("faithfulness, parameter identity, and size formulas on random instances") {
    Rng rng{61};
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 1 + static_cast<int>(rng() % 5);
        const int m = 1 + static_cast<int>(rng() % 4);
        const int t = 1 + static_cast<int>(rng() % m);
        const SetCoverInstance sc = gen_random_set_cover(rng, n, m, t, 0.4);
        const bool covered = brute_set_cover(sc);

        for (const MotifInstance& inst : {reduce_unique_colors(sc), reduce_two_colors(sc)}) {
            CHECK(inst.k == n + t + 1);
            CHECK(inst.motif_size() == inst.k);
            CHECK(inst.graph.n == 1 + n + m * t);
            long long member_sum = 0;
            for (const auto& s : sc.sets) member_sum += static_cast<long long>(s.size());
            CHECK(inst.graph.e == static_cast<long long>(t) * (m + member_sum));
            CHECK(is_connected(inst.graph));
            REQUIRE(brute_decide_max_motif(inst) == covered);
        }
    }
}

TEST_CASE("reduction output solves identically under the sieve") {
    Rng rng{62};
    const gf2::FieldParams params{64, 0x1b};
    for (int rep = 0; rep < 4; ++rep) {
        const SetCoverInstance sc = gen_random_set_cover(rng, 2 + static_cast<int>(rng() % 2), 3, 2, 0.5);
        const bool covered = brute_set_cover(sc);
        CHECK(decide_max_motif(reduce_unique_colors(sc), 20, params, 5 + rep).yes == covered);
        CHECK(decide_max_motif(reduce_two_colors(sc), 20, params, 6 + rep).yes == covered);
    }
}

TEST_CASE("set cover text round trip and validation") {
    const SetCoverInstance sc = spec_example(true);
    const std::string text = serialize_set_cover(sc);
    const SetCoverInstance back = parse_set_cover(text);
    CHECK(back.element_names == sc.element_names);
    CHECK(back.sets == sc.sets);
    CHECK(back.budget == sc.budget);

    CHECK_THROWS_AS(parse_set_cover("setcover v1\nelement a\nt 1\n"), ValidationError); // no sets
    CHECK_THROWS_AS(parse_set_cover("setcover v1\nelement a\nset 1 a\n"), ParseError);  // missing t
    CHECK_THROWS_AS(parse_set_cover("setcover v1\nelement a\nset 1 b\nt 1\n"), ParseError);
    CHECK_THROWS_AS(parse_set_cover("setcover v1\nelement a\nset 2 a\nt 1\n"), ParseError);
}

TEST_CASE("random set cover generation is deterministic and covering") {
    Rng a{5}, b{5};
    const SetCoverInstance sa = gen_random_set_cover(a, 6, 4, 2);
    const SetCoverInstance sb = gen_random_set_cover(b, 6, 4, 2);
    CHECK(serialize_set_cover(sa) == serialize_set_cover(sb));
    CHECK_NOTHROW(validate_set_cover(sa));
    CHECK_THROWS_AS(gen_random_set_cover(a, 4, 2, 3), std::invalid_argument); // t > m
}
