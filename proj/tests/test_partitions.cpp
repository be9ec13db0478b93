#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/errors.hpp"
#include "hodge/partitions.hpp"
#include "support/oracles.hpp"

#include <map>
#include <set>

using namespace hodge;

TEST_CASE("partition basics") {
    const Partition p{1, 3, 1};
    CHECK(p.parts() == std::vector<int>{3, 1, 1});
    CHECK(p.size() == 5);
    CHECK(p.length() == 3);
    CHECK(p.to_string() == "[3,1,1]");
    CHECK(Partition{}.to_string() == "[]");
    CHECK(Partition{}.size() == 0);
    CHECK_THROWS_AS(Partition({2, 0}), InvalidInput);
    CHECK_THROWS_AS(Partition({-1}), InvalidInput);
}

TEST_CASE("exponent tuple basics") {
    const ExponentTuple e{0, 2, 1, 0};
    CHECK(e.entries() == std::vector<int>{2, 1, 0, 0});
    CHECK(e.sum() == 3);
    CHECK(e.max() == 2);
    CHECK(e.to_string() == "[2,1,0,0]");
    CHECK(ExponentTuple{}.to_string() == "[]");
    CHECK_THROWS_AS(ExponentTuple({1, -1}), InvalidInput);
}

TEST_CASE("enumerate partitions") {
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(6).size() == 11);
    const auto zero = enumerate_partitions(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].empty());
    const auto four = enumerate_partitions(4);
    CHECK(four.front() == Partition{4});
    CHECK(four.back() == Partition{1, 1, 1, 1});
}

TEST_CASE("property: partition counts follow the pentagonal recurrence for d <= 20") {
    const auto p = testoracle::partition_counts(20);
    for (int d = 0; d <= 20; ++d) {
        const auto parts = enumerate_partitions(d);
        CHECK(static_cast<long>(parts.size()) == p[d]);
        CHECK(std::set<Partition>(parts.begin(), parts.end()).size() == parts.size());
        for (const auto& nu : parts) CHECK(nu.size() == d);
    }
}

TEST_CASE("z factor and automorphisms") {
    CHECK(z_factor(Partition{2, 1}) == 2);
    CHECK(z_factor(Partition{1, 1, 1}) == 6);
    CHECK(z_factor(Partition{3}) == 3);
    CHECK(aut_order(Partition{2, 2, 1}) == 2);
    CHECK(aut_order(Partition{5}) == 1);
    CHECK(aut_order(Partition{1, 1, 1, 1}) == 24);
    CHECK(aut_order(ExponentTuple{0, 0, 1, 0}) == 6);
}

TEST_CASE("property: z_nu times class size is d! for d <= 7") {
    for (int d = 1; d <= 7; ++d) {
        std::map<std::vector<int>, long> class_size;
        for (const auto& perm : testoracle::all_permutations(d)) ++class_size[testoracle::cycle_type(perm)];
        for (const auto& nu : enumerate_partitions(d))
            CHECK(z_factor(nu) * class_size[nu.parts()] == factorial(static_cast<unsigned>(d)));
    }
}

TEST_CASE("multiset splits treat equal parts as indistinguishable") {
    CHECK(multiset_splits(Partition{2, 2}).size() == 2);   // {22}, {2}{2}
    CHECK(multiset_splits(Partition{2, 1}).size() == 2);   // {21}, {2}{1}
    CHECK(multiset_splits(Partition{3, 2, 1}).size() == 5);  // Bell(3)
    CHECK(multiset_splits(Partition{1, 1, 1}).size() == 3);  // p(3)
}

namespace {

std::vector<int> merged_nu(const VertexConfig& c) {
    std::vector<int> out;
    for (const auto& v : c.vertices) out.insert(out.end(), v.nu_block.parts().begin(), v.nu_block.parts().end());
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> merged_e(const VertexConfig& c) {
    std::vector<int> out;
    for (const auto& v : c.vertices) out.insert(out.end(), v.e_block.entries().begin(), v.e_block.entries().end());
    std::sort(out.rbegin(), out.rend());
    return out;
}

}  // namespace

TEST_CASE("vertex configurations: examples") {
    {
        const auto configs = enumerate_vertex_configs(Partition{1, 1}, ExponentTuple{}, 4);
        REQUIRE(configs.size() == 1);
        CHECK(configs[0].vertices.size() == 2);
        CHECK(configs[0].vertices[0] == configs[0].vertices[1]);
        CHECK(configs[0].weight == Rational(1, 2));
    }
    {
        const auto configs = enumerate_vertex_configs(Partition{2}, ExponentTuple{}, 0);
        REQUIRE(configs.size() == 1);
        CHECK(configs[0].vertices == std::vector<VertexTriple>{{1, Partition{2}, ExponentTuple{}}});
        CHECK(configs[0].weight == Rational(1));
    }
    {
        const auto configs = enumerate_vertex_configs(Partition{2, 1}, ExponentTuple{1}, 4);
        REQUIRE(configs.size() == 2);
        std::set<std::vector<VertexTriple>> got;
        for (const auto& c : configs) {
            CHECK(c.weight == Rational(1));
            got.insert(c.vertices);
        }
        std::vector<VertexTriple> a{{0, Partition{1}, ExponentTuple{}}, {0, Partition{2}, ExponentTuple{1}}};
        std::vector<VertexTriple> b{{0, Partition{1}, ExponentTuple{1}}, {0, Partition{2}, ExponentTuple{}}};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(got == std::set<std::vector<VertexTriple>>{a, b});
    }
    CHECK(enumerate_vertex_configs(Partition{2, 1}, ExponentTuple{}, 3).empty());
    CHECK(enumerate_vertex_configs(Partition{2, 1}, ExponentTuple{}, 6).empty());
}

TEST_CASE("property: every configuration partitions nu and e and has the right chi") {
    const std::vector<std::pair<Partition, ExponentTuple>> cases = {
        {Partition{3, 2, 1}, ExponentTuple{1, 0}},  {Partition{2, 2, 1, 1}, ExponentTuple{0, 0}},
        {Partition{1, 1, 1}, ExponentTuple{2, 1, 0}}, {Partition{4}, ExponentTuple{3, 3}},
        {Partition{2, 2}, ExponentTuple{1, 1}},
    };
    for (const auto& [nu, e] : cases) {
        for (int chi0 = -4; chi0 <= 2 * nu.length(); chi0 += 2) {
            const auto configs = enumerate_vertex_configs(nu, e, chi0);
            std::set<std::vector<VertexTriple>> seen;
            for (const auto& c : configs) {
                CHECK(merged_nu(c) == nu.parts());
                CHECK(merged_e(c) == e.entries());
                int chi = 0;
                for (const auto& v : c.vertices) {
                    chi += 2 - 2 * v.genus;
                    CHECK(v.nu_block.length() >= 1);
                }
                CHECK(chi == chi0);
                CHECK(std::is_sorted(c.vertices.begin(), c.vertices.end()));
                CHECK(seen.insert(c.vertices).second);
                // weight is 1 / prod (multiplicity of identical vertices)!
                std::map<VertexTriple, unsigned> mult;
                for (const auto& v : c.vertices) ++mult[v];
                BigInt denom = 1;
                for (const auto& [v, m] : mult) denom *= factorial(m);
                CHECK(c.weight == Rational(BigInt(1), denom));
            }
        }
    }
}

TEST_CASE("property: genus-0 single-part configurations recover 1/|Aut nu|") {
    // With e empty and every vertex a genus-0 single part, the weighted count
    // of the unique such configuration is 1/|Aut nu|.
    for (int d = 1; d <= 7; ++d) {
        for (const auto& nu : enumerate_partitions(d)) {
            Rational total;
            for (const auto& c : enumerate_vertex_configs(nu, ExponentTuple{}, 2 * nu.length())) {
                bool singles = true;
                for (const auto& v : c.vertices) singles = singles && v.nu_block.length() == 1 && v.genus == 0;
                if (singles) total += c.weight;
            }
            CHECK(total == Rational(BigInt(1), aut_order(nu)));
        }
    }
}
