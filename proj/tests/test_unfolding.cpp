#include "doctest.h"

#include "regco/examples.hpp"
#include "regco/ground.hpp"
#include "regco/search.hpp"
#include "regco/textio.hpp"
#include "regco/unfolding.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace regco;
using test_util::atom;
using test_util::rule;
namespace ex = regco::examples;

namespace {

judgment demo_dist(const ex::graph& g, const std::string& from, int delta) {
    return ex::make_dist(g, from, "c",
                         delta < 0 ? ex::distance::infinity()
                                   : ex::distance(static_cast<std::size_t>(delta)));
}

proof_graph proved_certificate(const inference_system& sys, const judgment& goal) {
    const search_outcome r = prove_regular(sys, goal, 1000000);
    REQUIRE(r.proved());
    return *r.certificate;
}

// every inner node together with its children instantiates a system rule
void check_prefix_of_proof_tree(const inference_system& sys, const finite_tree& t,
                                std::size_t depth) {
    if (depth == 0) return;
    std::vector<judgment> labels;
    for (const finite_tree& c : t.children()) labels.push_back(c.root());
    const rule_instance instantiated(labels, t.root());
    const auto rules = sys.rules_for(t.root());
    CHECK(std::find(rules.begin(), rules.end(), instantiated) != rules.end());
    for (const finite_tree& c : t.children()) check_prefix_of_proof_tree(sys, c, depth - 1);
}

void collect_labels(const finite_tree& t, std::set<judgment>& out) {
    out.insert(t.root());
    for (const finite_tree& c : t.children()) collect_labels(c, out);
}

} // namespace

TEST_CASE("a self-loop certificate unfolds to a chain") {
    const proof_graph cert =
        proved_certificate(*ex::allpos_system(), ex::make_allpos(lasso::repeat(1)));
    const finite_tree t = unfold(cert, 3);
    CHECK(t.node_count() == 4);
    CHECK(t.depth() == 3);
    std::set<judgment> labels;
    collect_labels(t, labels);
    CHECK(labels.size() == 1);
}

TEST_CASE("the distance certificate unfolds to the expected two levels") {
    const ex::graph g = ex::example_graph();
    const auto sys = ex::dist_system(g);
    const proof_graph cert = proved_certificate(*sys, demo_dist(g, "a", 2));

    const finite_tree expected(
        demo_dist(g, "a", 2),
        {finite_tree(demo_dist(g, "b", 1),
                     {finite_tree(demo_dist(g, "a", 2)), finite_tree(demo_dist(g, "c", 0))}),
         finite_tree(demo_dist(g, "d", -1), {finite_tree(demo_dist(g, "d", -1))})});
    CHECK(unfold(cert, 2) == expected);
}

TEST_CASE("unfolding to depth zero gives the lone root") {
    const proof_graph cert =
        proved_certificate(*ex::allpos_system(), ex::make_allpos(lasso::repeat(1)));
    const finite_tree t = unfold(cert, 0);
    CHECK(t.node_count() == 1);
    CHECK(t.root() == cert.root());
}

TEST_CASE("distinct subtree bound counts certificate nodes") {
    const ex::graph g = ex::example_graph();
    CHECK(distinct_subtree_bound(proved_certificate(
              *ex::allpos_system(), ex::make_allpos(lasso::repeat(1)))) == 1);
    CHECK(distinct_subtree_bound(proved_certificate(*ex::dist_system(g), demo_dist(g, "a", 2))) ==
          4);
    const search_outcome r =
        prove_regular_co(ex::min_system(), ex::make_min(2, lasso::repeat(2)), 10000);
    REQUIRE(r.proved());
    CHECK(distinct_subtree_bound(*r.certificate) == 1);
}

TEST_CASE("graph text lists nodes and premise edges in order") {
    const proof_graph self =
        proved_certificate(*ex::allpos_system(), ex::make_allpos(lasso::repeat(1)));
    CHECK(render_graph_text(self) == "node 0 \"allpos |1\"\nedge 0 0\n");

    const ex::graph g = ex::example_graph();
    const proof_graph cert = proved_certificate(*ex::dist_system(g), demo_dist(g, "a", 2));
    CHECK(render_graph_text(cert) == "node 0 \"dist a c 2\"\n"
                                     "node 1 \"dist b c 1\"\n"
                                     "node 2 \"dist c c 0\"\n"
                                     "node 3 \"dist d c inf\"\n"
                                     "edge 0 1\n"
                                     "edge 0 3\n"
                                     "edge 1 0\n"
                                     "edge 1 2\n"
                                     "edge 3 3\n");
}

TEST_CASE("structured text round-trips") {
    const ex::graph g = ex::example_graph();
    const proof_graph cert = proved_certificate(*ex::dist_system(g), demo_dist(g, "a", 2));
    example_context ctx;
    ctx.graph = g;
    const proof_graph back = parse_structured_text(
        render_structured_text(cert),
        [&](const std::string& s) { return parse_example_goal(example_kind::dist, s, ctx); });
    CHECK(back == cert);

    const auto a = atom("a");
    const ground_system gs({a}, {rule({a}, a)});
    const proof_graph ground_cert = proved_certificate(gs, a);
    const proof_graph ground_back = parse_structured_text(
        render_structured_text(ground_cert),
        [](const std::string& s) { return regco::make_atom(s); });
    CHECK(ground_back == ground_cert);
}

TEST_CASE("malformed structured text is rejected with a line number") {
    const auto parse_atom = [](const std::string& s) { return regco::make_atom(s); };
    CHECK_THROWS_WITH(parse_structured_text("root 0\nnode 0 a\n", parse_atom),
                      "structured certificate, line 2: missing rendering");
    CHECK_THROWS_WITH(parse_structured_text("woops\n", parse_atom),
                      "structured certificate, line 1: unknown tag 'woops'");
}

TEST_CASE("unfolding truncations cohere and stay within the subtree bound") {
    const ex::graph g = ex::example_graph();
    std::vector<std::pair<system_ptr, proof_graph>> cases;
    cases.emplace_back(ex::allpos_system(), proved_certificate(*ex::allpos_system(),
                                                               ex::make_allpos(lasso::repeat(1))));
    cases.emplace_back(ex::dist_system(g),
                       proved_certificate(*ex::dist_system(g), demo_dist(g, "a", 2)));
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto gs = std::make_shared<const ground_system>(random_ground_system(seed, 6, 12));
        for (const judgment& j : gs->universe()) {
            const search_outcome r = prove_regular(*gs, j, 100000);
            if (r.proved()) {
                cases.emplace_back(gs, *r.certificate);
                break;
            }
        }
    }
    for (const auto& [sys, cert] : cases) {
        for (std::size_t d = 0; d <= 5; ++d) {
            const finite_tree wider = unfold(cert, d + 1);
            CHECK(truncate(wider, d) == unfold(cert, d));
            check_prefix_of_proof_tree(*sys, wider, d + 1);
            std::set<judgment> labels;
            collect_labels(wider, labels);
            CHECK(labels.size() <= distinct_subtree_bound(cert));
        }
    }
}
