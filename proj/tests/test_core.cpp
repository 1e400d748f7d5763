#include "doctest.h"

#include "regco/examples.hpp"
#include "regco/ground.hpp"
#include "regco/proof_graph.hpp"
#include "regco/search.hpp"
#include "regco/system.hpp"
#include "test_util.hpp"

#include <memory>
#include <stdexcept>

using namespace regco;
using test_util::atom;
using test_util::rule;
namespace ex = regco::examples;

namespace {

judgment fig_dist(const ex::graph& g, const std::string& from, int delta) {
    return ex::make_dist(g, from, "c",
                         delta < 0 ? ex::distance::infinity()
                                   : ex::distance(static_cast<std::size_t>(delta)));
}

// The four-node certificate from the worked distance example.
proof_graph demo_distance_certificate(const ex::graph& g) {
    const judgment a2 = fig_dist(g, "a", 2);
    const judgment b1 = fig_dist(g, "b", 1);
    const judgment c0 = fig_dist(g, "c", 0);
    const judgment di = fig_dist(g, "d", -1);
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(a2, rule({b1, di}, a2));
    assignment.emplace(b1, rule({a2, c0}, b1));
    assignment.emplace(c0, rule({}, c0));
    assignment.emplace(di, rule({di}, di));
    return proof_graph(a2, std::move(assignment));
}

} // namespace

TEST_CASE("union with the empty system is the identity") {
    const system_ptr sys = ex::allpos_system();
    const system_ptr u = union_system(sys, empty_system());
    const judgment j = ex::make_allpos(lasso::repeat(1));
    const auto rules = u->rules_for(j);
    REQUIRE(rules.size() == 1);
    CHECK(rules == sys->rules_for(j));
    CHECK(rules[0].premises() == std::vector<judgment>{j});
}

TEST_CASE("union of rules and coaxiom lists rules first") {
    const generalized_system gen = ex::min_system();
    const system_ptr u = union_system(gen.rules, gen.corules);
    // min(2, 2:rep(2)) is min(2, rep(2)) after canonicalization
    const judgment j = ex::make_min(2, lasso({2}, {2}));
    const auto rules = u->rules_for(j);
    REQUIRE(rules.size() == 2);
    CHECK(rules[0].premises() == std::vector<judgment>{ex::make_min(2, lasso::repeat(2))});
    CHECK(rules[1].premises().empty());
}

TEST_CASE("union drops duplicate rules") {
    const auto a = atom("a");
    const auto b = atom("b");
    const auto c = atom("c");
    const auto g1 = std::make_shared<const ground_system>(
        std::set<judgment>{a, b}, std::vector<rule_instance>{rule({}, a), rule({a}, b)});
    const auto g2 = std::make_shared<const ground_system>(
        std::set<judgment>{a, b, c}, std::vector<rule_instance>{rule({a}, b), rule({b}, c)});
    const system_ptr u = union_system(g1, g2);
    CHECK(u->rules_for(b).size() == 1);
    CHECK(u->rules_for(a).size() == 1);
    CHECK(u->rules_for(c).size() == 1);
}

TEST_CASE("rule premises behave as a set") {
    const auto a = atom("a");
    const auto b = atom("b");
    const rule_instance r({b, a, b}, a);
    CHECK(r.premises() == std::vector<judgment>{a, b});
    CHECK(r == rule({a, b}, a));
}

TEST_CASE("validate accepts the worked distance certificate") {
    const ex::graph g = ex::example_graph();
    const auto sys = ex::dist_system(g);
    const proof_graph cert = demo_distance_certificate(g);
    const validation_result r = validate_proof_graph(*sys, cert);
    CHECK(r.ok);
    CHECK(r.diagnostic.empty());
}

TEST_CASE("validate accepts a single axiom node") {
    const auto a = atom("a");
    const ground_system g({a}, {rule({}, a)});
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(a, rule({}, a));
    CHECK(validate_proof_graph(g, proof_graph(a, std::move(assignment))).ok);
}

TEST_CASE("validate rejects a premise outside the key set") {
    const auto a = atom("a");
    const auto b = atom("b");
    const ground_system g({a, b}, {rule({b}, a), rule({}, b)});
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(a, rule({b}, a));
    const validation_result r = validate_proof_graph(g, proof_graph(a, std::move(assignment)));
    CHECK_FALSE(r.ok);
    CHECK(r.diagnostic == "premise b of node a is missing from the certificate");
}

TEST_CASE("validate rejects a missing root, bad conclusion, unreachable node, foreign rule") {
    const auto a = atom("a");
    const auto b = atom("b");
    const ground_system g({a, b}, {rule({a}, a), rule({}, b)});

    std::map<judgment, rule_instance> no_root;
    no_root.emplace(b, rule({}, b));
    CHECK(validate_proof_graph(g, proof_graph(a, no_root)).diagnostic ==
          "root a has no assigned rule");

    std::map<judgment, rule_instance> bad_conclusion;
    bad_conclusion.emplace(a, rule({}, b));
    CHECK(validate_proof_graph(g, proof_graph(a, bad_conclusion)).diagnostic ==
          "rule assigned to a concludes b");

    std::map<judgment, rule_instance> unreachable;
    unreachable.emplace(a, rule({a}, a));
    unreachable.emplace(b, rule({}, b));
    CHECK(validate_proof_graph(g, proof_graph(a, unreachable)).diagnostic ==
          "node b is unreachable from the root");

    std::map<judgment, rule_instance> foreign;
    foreign.emplace(a, rule({}, a)); // not a rule of g
    CHECK(validate_proof_graph(g, proof_graph(a, foreign)).diagnostic ==
          "rule assigned to a is not in the system");
}

TEST_CASE("validate is monotone in the system") {
    int validated = 0;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        const ground_system g = random_ground_system(seed, 5, 10);
        const auto gp = std::make_shared<const ground_system>(g);
        const auto extra = std::make_shared<const ground_system>(
            test_util::random_rules_over(g.universe(), seed + 1000, 6));
        const system_ptr wider = union_system(gp, extra);
        for (const judgment& j : g.universe()) {
            const search_outcome r = prove_regular(g, j, 100000);
            REQUIRE_FALSE(r.out_of_fuel());
            if (!r.proved()) continue;
            REQUIRE(validate_proof_graph(g, *r.certificate).ok);
            CHECK(validate_proof_graph(*wider, *r.certificate).ok);
            ++validated;
        }
    }
    CHECK(validated > 20);
}

TEST_CASE("bounded validation accepts the min cycle with its coaxiom") {
    const generalized_system gen = ex::min_system();
    const judgment m2 = ex::make_min(2, lasso::repeat(2));
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(m2, rule({m2}, m2));
    const bounded_validation_result r =
        validate_bounded_proof_graph(gen, proof_graph(m2, std::move(assignment)), 10000);
    CHECK(r.verdict == bounded_validity::valid);
}

TEST_CASE("bounded validation rejects the min 0 cycle") {
    const generalized_system gen = ex::min_system();
    const judgment m0 = ex::make_min(0, lasso::repeat(2));
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(m0, rule({m0}, m0));
    const bounded_validation_result r =
        validate_bounded_proof_graph(gen, proof_graph(m0, std::move(assignment)), 10000);
    CHECK(r.verdict == bounded_validity::invalid);
    CHECK(r.diagnostic == "node min 0 |2 has no finite derivation in rules + corules");
}

TEST_CASE("bounded validation demands a positive budget") {
    const generalized_system gen = ex::min_system();
    const judgment m2 = ex::make_min(2, lasso::repeat(2));
    std::map<judgment, rule_instance> assignment;
    assignment.emplace(m2, rule({m2}, m2));
    const proof_graph cert(m2, std::move(assignment));
    CHECK_THROWS_AS(validate_bounded_proof_graph(gen, cert, 0), std::invalid_argument);
}

TEST_CASE("union with the empty system matches on sampled judgments of every example") {
    const ex::graph g = ex::example_graph();
    const std::vector<std::pair<system_ptr, std::vector<judgment>>> samples = {
        {ex::allpos_system(),
         {ex::make_allpos(lasso::repeat(1)), ex::make_allpos(lasso({0}, {1}))}},
        {ex::dist_system(g), {fig_dist(g, "a", 2), fig_dist(g, "d", -1), fig_dist(g, "c", 0)}},
        {ex::min_system().rules,
         {ex::make_min(2, lasso::repeat(2)), ex::make_min(3, lasso({3}, {5}))}},
        {ex::add_system(10).rules,
         {ex::make_add(10, lasso::repeat(3), lasso::repeat(3), lasso::repeat(6), 0)}},
    };
    for (const auto& [sys, judgments] : samples) {
        const system_ptr u = union_system(sys, empty_system());
        for (const judgment& j : judgments) {
            CHECK(u->rules_for(j) == sys->rules_for(j));
        }
    }
}
