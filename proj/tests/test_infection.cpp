#include "qcontrol/infection.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace qcontrol;

namespace {

Graph path(int n) {
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i) nodes.push_back(i);
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(std::move(nodes), edges);
}

Graph star(int leaves) {
    std::vector<int> nodes{0};
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) {
        nodes.push_back(i);
        edges.emplace_back(0, i);
    }
    return Graph(std::move(nodes), edges);
}

Graph random_graph(std::mt19937& rng, int n, double p) {
    std::vector<int> nodes;
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int i = 0; i < n; ++i) nodes.push_back(i);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (coin(rng) < p) edges.emplace_back(i, j);
        }
    }
    return Graph(std::move(nodes), edges);
}

std::vector<int> mask_to_seed(std::uint32_t mask, int n) {
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) out.push_back(i);
    }
    return out;
}

}  // namespace

TEST_SUITE("infection") {

TEST_CASE("a path is forced from one end") {
    const InfectionOutcome out = infect(path(3), {1});
    CHECK(out.infecting);
    REQUIRE(out.certificate.steps.size() == 2);
    CHECK(out.certificate.steps[0] == InfectionStep{1, 2});
    CHECK(out.certificate.steps[1] == InfectionStep{2, 3});
    CHECK(out.stuck_set == std::vector<int>{1, 2, 3});
}

TEST_CASE("a star leaf gets stuck at the center") {
    const InfectionOutcome out = infect(star(3), {1});
    CHECK(!out.infecting);
    CHECK(out.stuck_set == std::vector<int>{0, 1});
}

TEST_CASE("full and empty seeds") {
    const Graph g = star(3);
    const InfectionOutcome full = infect(g, {0, 1, 2, 3});
    CHECK(full.infecting);
    CHECK(full.certificate.steps.empty());

    const InfectionOutcome empty = infect(g, {});
    CHECK(!empty.infecting);
    CHECK(empty.stuck_set.empty());

    CHECK_THROWS_AS(infect(g, {9}), std::invalid_argument);
}

TEST_CASE("disconnected graphs need a seed in every component") {
    Graph two_paths({1, 2, 3, 4}, {{1, 2}, {3, 4}});
    CHECK(!infect(two_paths, {1}).infecting);
    CHECK(infect(two_paths, {1, 4}).infecting);
}

TEST_CASE("certificate verification") {
    const Graph g = path(3);
    const InfectionOutcome out = infect(g, {1});
    CHECK(verify_certificate(g, out.certificate));

    InfectionCertificate skip;
    skip.seed = {1};
    skip.steps = {{1, 3}};  // 3 is not adjacent to 1
    CHECK(!verify_certificate(g, skip));

    InfectionCertificate unknown;
    unknown.seed = {7};
    CHECK(!verify_certificate(g, unknown));

    InfectionCertificate incomplete;
    incomplete.seed = {1};
    incomplete.steps = {{1, 2}};
    CHECK(!verify_certificate(g, incomplete));
}

TEST_CASE("shuffled certificates agree with a brute-force replay") {
    std::mt19937 rng(91);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 7, 0.35);
        const std::vector<int> seed = mask_to_seed(rng() & 0x7f, 7);
        const InfectionOutcome out = infect(g, seed);
        if (!out.infecting || out.certificate.steps.size() < 2) continue;

        InfectionCertificate shuffled = out.certificate;
        std::shuffle(shuffled.steps.begin(), shuffled.steps.end(), rng);

        // independent replay of the prefix conditions
        std::set<int> p(shuffled.seed.begin(), shuffled.seed.end());
        bool valid = true;
        for (const auto& step : shuffled.steps) {
            int healthy = 0;
            bool is_target = false;
            if (!p.count(step.forcer) || p.count(step.forced)) {
                valid = false;
                break;
            }
            for (int m : g.neighbors(step.forcer)) {
                if (!p.count(m)) {
                    ++healthy;
                    if (m == step.forced) is_target = true;
                }
            }
            if (healthy != 1 || !is_target) {
                valid = false;
                break;
            }
            p.insert(step.forced);
        }
        valid = valid && p.size() == g.node_count();
        CHECK(verify_certificate(g, shuffled) == valid);
    }
}

TEST_CASE("minimal infecting sets of small graphs") {
    CHECK(min_infecting_sets(path(5), 1) ==
          std::vector<std::vector<int>>{{1}, {5}});

    // every pair of leaves forces the 3-leaf star; no single node does
    const auto star_sets = min_infecting_sets(star(3), 2);
    std::vector<std::vector<int>> expected{{1, 2}, {1, 3}, {2, 3}};
    CHECK(star_sets == expected);

    Graph triangle({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(min_infecting_sets(triangle, 3) ==
          std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});

    std::vector<int> big(25);
    for (int i = 0; i < 25; ++i) big[i] = i;
    CHECK_THROWS_AS(min_infecting_sets(Graph(big, {}), 1), std::invalid_argument);
}

TEST_CASE("final set is order independent") {
    std::mt19937 rng(92);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_graph(rng, 8, 0.3);
        const std::vector<int> seed = mask_to_seed(rng() & 0xff, 8);
        const InfectionOutcome reference = infect(g, seed);
        for (int order = 0; order < 5; ++order) {
            std::mt19937 pick_rng(1000 * trial + order);
            const InfectionOutcome shuffled = infect_with_policy(
                g, seed, [&](const std::vector<InfectionStep>& forces) {
                    return std::uniform_int_distribution<std::size_t>(0, forces.size() - 1)(
                        pick_rng);
                });
            CHECK(shuffled.stuck_set == reference.stuck_set);
            CHECK(shuffled.infecting == reference.infecting);
            if (shuffled.infecting) CHECK(verify_certificate(g, shuffled.certificate));
        }
    }
}

TEST_CASE("supersets of infecting seeds infect") {
    std::mt19937 rng(93);
    int found = 0;
    for (int trial = 0; trial < 60 && found < 15; ++trial) {
        const Graph g = random_graph(rng, 7, 0.3);
        const std::vector<int> seed = mask_to_seed(rng() & 0x7f, 7);
        if (!infect(g, seed).infecting) continue;
        ++found;
        std::vector<int> super = seed;
        super.push_back(static_cast<int>(rng() % 7));
        CHECK(infect(g, super).infecting);
    }
    CHECK(found > 0);
}

TEST_CASE("agreement with the naive fixpoint on small graphs") {
    std::mt19937 rng(94);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 5);
        std::vector<std::uint32_t> adj(n, 0);
        std::vector<int> nodes;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) nodes.push_back(i);
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (rng() % 3 == 0) {
                    edges.emplace_back(i, j);
                    adj[i] |= 1u << j;
                    adj[j] |= 1u << i;
                }
            }
        }
        const Graph g(nodes, edges);
        const std::uint32_t seed_mask = rng() & ((1u << n) - 1);
        const std::uint32_t want = oracles::naive_infect(adj, seed_mask);
        const InfectionOutcome got = infect(g, mask_to_seed(seed_mask, n));
        std::uint32_t got_mask = 0;
        for (int id : got.stuck_set) got_mask |= 1u << id;
        CHECK(got_mask == want);
    }
}

}  // TEST_SUITE
