#include "regco/ground.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

namespace regco {

namespace {

constexpr std::size_t k_bruteforce_universe_cap = 16;

std::vector<judgment> universe_index(const ground_system& g) {
    return {g.universe().begin(), g.universe().end()};
}

std::uint32_t to_mask(const std::set<judgment>& xs, const std::vector<judgment>& index) {
    std::uint32_t mask = 0;
    for (const judgment& j : xs) {
        const auto it = std::lower_bound(index.begin(), index.end(), j);
        mask |= 1u << static_cast<std::uint32_t>(it - index.begin());
    }
    return mask;
}

std::set<judgment> from_mask(std::uint32_t mask, const std::vector<judgment>& index) {
    std::set<judgment> out;
    for (std::size_t i = 0; i < index.size(); ++i) {
        if (mask & (1u << i)) out.insert(index[i]);
    }
    return out;
}

struct masked_rule {
    std::uint32_t premises;
    std::uint32_t conclusion;
};

std::vector<masked_rule> mask_rules(const ground_system& g, const std::vector<judgment>& index) {
    std::vector<masked_rule> out;
    out.reserve(g.rules().size());
    for (const rule_instance& r : g.rules()) {
        masked_rule m{};
        m.premises = to_mask({r.premises().begin(), r.premises().end()}, index);
        m.conclusion = to_mask({r.conclusion()}, index);
        out.push_back(m);
    }
    return out;
}

std::uint32_t apply_masked(const std::vector<masked_rule>& rules, std::uint32_t x) {
    std::uint32_t out = 0;
    for (const masked_rule& r : rules) {
        if ((r.premises & x) == r.premises) out |= r.conclusion;
    }
    return out;
}

std::uint32_t rfp_mask(const ground_system& g, const std::vector<judgment>& index) {
    if (index.size() > k_bruteforce_universe_cap) {
        throw std::invalid_argument("rfp_bruteforce: universe larger than " +
                                    std::to_string(k_bruteforce_universe_cap) + " judgments");
    }
    const std::vector<masked_rule> rules = mask_rules(g, index);
    const std::uint64_t subsets = 1ull << index.size();
    std::uint32_t joined = 0;
    for (std::uint64_t x = 0; x < subsets; ++x) {
        const auto mask = static_cast<std::uint32_t>(x);
        if ((mask & apply_masked(rules, mask)) == mask) joined |= mask; // post-fixed
    }
    const std::uint32_t greatest = to_mask(gfp(g), index);
    if (joined != greatest) {
        throw std::logic_error("rfp_bruteforce: rational fixed point differs from gfp");
    }
    return joined;
}

} // namespace

ground_system::ground_system(std::set<judgment> universe, std::vector<rule_instance> rules)
    : universe_(std::move(universe)) {
    for (const rule_instance& r : rules) {
        if (universe_.count(r.conclusion()) == 0) {
            throw std::invalid_argument("ground_system: conclusion " + r.conclusion().render() +
                                        " is outside the universe");
        }
        for (const judgment& p : r.premises()) {
            if (universe_.count(p) == 0) {
                throw std::invalid_argument("ground_system: premise " + p.render() +
                                            " is outside the universe");
            }
        }
        if (std::find(rules_.begin(), rules_.end(), r) == rules_.end()) {
            rules_.push_back(r);
            by_conclusion_[r.conclusion()].push_back(r);
        }
    }
}

std::vector<rule_instance> ground_system::rules_for(const judgment& goal) const {
    const auto it = by_conclusion_.find(goal);
    return it == by_conclusion_.end() ? std::vector<rule_instance>{} : it->second;
}

std::set<judgment> inf_op(const ground_system& g, const std::set<judgment>& x) {
    for (const judgment& j : x) {
        if (g.universe().count(j) == 0) {
            throw std::invalid_argument("inf_op: " + j.render() + " is outside the universe");
        }
    }
    std::set<judgment> out;
    for (const rule_instance& r : g.rules()) {
        if (std::includes(x.begin(), x.end(), r.premises().begin(), r.premises().end())) {
            out.insert(r.conclusion());
        }
    }
    return out;
}

std::set<judgment> lfp(const ground_system& g) {
    std::set<judgment> x;
    for (;;) {
        std::set<judgment> next = inf_op(g, x);
        if (next == x) return x;
        x = std::move(next);
    }
}

std::set<judgment> gfp(const ground_system& g) {
    std::set<judgment> x = g.universe();
    for (;;) {
        std::set<judgment> next = inf_op(g, x);
        if (next == x) return x;
        x = std::move(next);
    }
}

std::set<judgment> rfp_bruteforce(const ground_system& g) {
    const std::vector<judgment> index = universe_index(g);
    return from_mask(rfp_mask(g, index), index);
}

std::set<judgment> flex_regular_bruteforce(const ground_system& gi, const ground_system& gco) {
    if (gi.universe() != gco.universe()) {
        throw std::invalid_argument("flex_regular_bruteforce: systems must share a universe");
    }
    std::vector<rule_instance> joint = gi.rules();
    for (const rule_instance& r : gco.rules()) {
        if (std::find(joint.begin(), joint.end(), r) == joint.end()) joint.push_back(r);
    }
    const ground_system joint_system(gi.universe(), std::move(joint));
    const std::set<judgment> bound = lfp(joint_system);

    std::vector<rule_instance> kept;
    for (const rule_instance& r : gi.rules()) {
        if (bound.count(r.conclusion()) != 0) kept.push_back(r);
    }
    return rfp_bruteforce(ground_system(gi.universe(), std::move(kept)));
}

ground_system random_ground_system(std::uint64_t seed, std::size_t max_universe,
                                   std::size_t max_rules) {
    if (max_universe == 0) {
        throw std::invalid_argument("random_ground_system: max_universe must be at least 1");
    }
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_universe);
    std::vector<judgment> atoms;
    std::set<judgment> universe;
    for (std::size_t i = 0; i < n; ++i) {
        judgment j = make_atom("j" + std::to_string(i));
        atoms.push_back(j);
        universe.insert(j);
    }
    std::vector<rule_instance> rules;
    const std::size_t m = max_rules == 0 ? 0 : static_cast<std::size_t>(rng() % (max_rules + 1));
    for (std::size_t i = 0; i < m; ++i) {
        const judgment& conclusion = atoms[rng() % n];
        const std::size_t k = static_cast<std::size_t>(rng() % 4);
        std::vector<judgment> premises;
        for (std::size_t p = 0; p < k; ++p) premises.push_back(atoms[rng() % n]);
        rules.emplace_back(std::move(premises), conclusion);
    }
    return ground_system(std::move(universe), std::move(rules));
}

ground_system ground_from_enumerator(const inference_system& sys,
                                     const std::set<judgment>& universe) {
    std::vector<rule_instance> rules;
    for (const judgment& j : universe) {
        for (rule_instance& r : sys.rules_for(j)) {
            rules.push_back(std::move(r));
        }
    }
    return ground_system(universe, std::move(rules));
}

} // namespace regco
