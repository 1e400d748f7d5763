#include "doctest.h"

#include "regco/lasso.hpp"
#include "test_util.hpp"

#include <numeric>
#include <stdexcept>

using regco::lasso;
using ints = std::vector<std::int64_t>;

TEST_CASE("canonicalize folds a matching prefix into the cycle") {
    const lasso s({1}, {1});
    CHECK(s.prefix() == ints{});
    CHECK(s.cycle() == ints{1});
}

TEST_CASE("canonicalize reduces the cycle to its primitive root") {
    const lasso s({}, {2, 2});
    CHECK(s.prefix() == ints{});
    CHECK(s.cycle() == ints{2});
}

TEST_CASE("canonicalize leaves a canonical lasso unchanged") {
    const lasso s({3}, {5});
    CHECK(s.prefix() == ints{3});
    CHECK(s.cycle() == ints{5});
}

TEST_CASE("empty cycles are rejected") {
    CHECK_THROWS_AS(lasso({1}, {}), std::invalid_argument);
}

TEST_CASE("head and tail walk the stream") {
    const lasso s({3}, {5});
    CHECK(s.head() == 3);
    CHECK(s.tail() == lasso({}, {5}));

    CHECK(lasso::repeat(1).tail() == lasso::repeat(1));

    const lasso alt({}, {1, 2});
    CHECK(alt.head() == 1);
    CHECK(alt.tail() == lasso({}, {2, 1}));
}

TEST_CASE("substreams are the iterated tails") {
    CHECK(lasso::repeat(1).substreams() == std::set<lasso>{lasso::repeat(1)});
    CHECK(lasso({3}, {5}).substreams() == std::set<lasso>{lasso({3}, {5}), lasso({}, {5})});
    CHECK(lasso({}, {1, 2}).substreams() ==
          std::set<lasso>{lasso({}, {1, 2}), lasso({}, {2, 1})});
}

TEST_CASE("elements collect prefix and cycle values") {
    CHECK(lasso::repeat(2).elements() == std::set<std::int64_t>{2});
    CHECK(lasso({3}, {5}).elements() == std::set<std::int64_t>{3, 5});
    CHECK(lasso({1, 1}, {2}).elements() == std::set<std::int64_t>{1, 2});
}

TEST_CASE("unfold_values lists the first stream values") {
    CHECK(lasso::repeat(1).unfold_values(3) == ints{1, 1, 1});
    CHECK(lasso({3}, {5}).unfold_values(4) == ints{3, 5, 5, 5});
    CHECK(lasso({}, {1, 2}).unfold_values(5) == ints{1, 2, 1, 2, 1});
}

TEST_CASE("canonical equality coincides with bounded unfolding equality") {
    std::mt19937_64 rng(20260810);
    for (int i = 0; i < 500; ++i) {
        const lasso a = test_util::random_lasso(rng, -2, 2, 4, 4);
        const lasso b = test_util::random_lasso(rng, -2, 2, 4, 4);
        const std::size_t n = a.prefix().size() + b.prefix().size() +
                              2 * std::lcm(a.cycle().size(), b.cycle().size());
        CHECK((a == b) == (a.unfold_values(n) == b.unfold_values(n)));
    }
}

TEST_CASE("head and tail cohere with unfolding") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const lasso s = test_util::random_lasso(rng, -5, 5, 4, 4);
        ints expected{s.head()};
        const ints rest = s.tail().unfold_values(9);
        expected.insert(expected.end(), rest.begin(), rest.end());
        CHECK(s.unfold_values(10) == expected);
    }
}

TEST_CASE("substreams are tail-closed, contain the stream, and stay small") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        const lasso s = test_util::random_lasso(rng, 0, 3, 4, 4);
        const std::set<lasso> subs = s.substreams();
        CHECK(subs.count(s) == 1);
        CHECK(subs.size() <= s.prefix().size() + s.cycle().size());
        for (const lasso& t : subs) {
            CHECK(subs.count(t.tail()) == 1);
        }
    }
}

TEST_CASE("canonicalization is idempotent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        const lasso s = test_util::random_lasso(rng, -3, 3, 5, 5);
        CHECK(lasso(s.prefix(), s.cycle()) == s);
    }
}

TEST_CASE("lasso text form") {
    CHECK(regco::to_string(lasso::repeat(1)) == "|1");
    CHECK(regco::to_string(lasso({1, 0}, {2, 3})) == "1,0|2,3");
}
