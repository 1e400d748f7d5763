#include "regco/examples.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regco::examples {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_lasso(const lasso& s) {
    std::size_t h = 0x2545f4914f6cdd1dull;
    for (std::int64_t v : s.prefix()) h = hash_combine(h, std::hash<std::int64_t>{}(v));
    h = hash_combine(h, 0x517cc1b727220a95ull);
    for (std::int64_t v : s.cycle()) h = hash_combine(h, std::hash<std::int64_t>{}(v));
    return h;
}

int order_to_int(std::strong_ordering o) {
    if (o < 0) return -1;
    if (o > 0) return 1;
    return 0;
}

} // namespace

// -- graph ---------------------------------------------------------------------

graph graph::make(std::string id, std::map<std::string, std::set<std::string>> adjacency) {
    graph g;
    g.id = std::move(id);
    g.adjacency = std::move(adjacency);
    for (const auto& [v, targets] : g.adjacency) {
        g.nodes.insert(v);
        g.nodes.insert(targets.begin(), targets.end());
    }
    for (const auto& [v, targets] : g.adjacency) {
        for (const std::string& u : targets) {
            if (g.adjacency.count(u) == 0 && g.nodes.count(u) == 0) {
                throw std::invalid_argument("graph: adjacency target " + u + " is not a node");
            }
        }
    }
    return g;
}

const std::set<std::string>& graph::neighbours(const std::string& v) const {
    static const std::set<std::string> none;
    const auto it = adjacency.find(v);
    return it == adjacency.end() ? none : it->second;
}

graph example_graph() {
    return graph::make("demo", {{"a", {"b", "d"}},
                                {"b", {"a", "c"}},
                                {"c", {}},
                                {"d", {"d"}}});
}

// -- judgments -----------------------------------------------------------------

int allpos_judgment::compare_same_kind(const judgment_value& other) const {
    return order_to_int(stream_ <=> static_cast<const allpos_judgment&>(other).stream_);
}

std::size_t allpos_judgment::hash() const { return hash_lasso(stream_); }

std::string allpos_judgment::render() const { return "allpos " + to_string(stream_); }

dist_judgment::dist_judgment(std::string graph_id, std::string from, std::string to,
                             distance delta)
    : graph_id_(std::move(graph_id)), from_(std::move(from)), to_(std::move(to)), delta_(delta) {}

int dist_judgment::compare_same_kind(const judgment_value& other) const {
    const auto& o = static_cast<const dist_judgment&>(other);
    if (int c = graph_id_.compare(o.graph_id_); c != 0) return c;
    if (int c = from_.compare(o.from_); c != 0) return c;
    if (int c = to_.compare(o.to_); c != 0) return c;
    return order_to_int(delta_ <=> o.delta_);
}

std::size_t dist_judgment::hash() const {
    std::size_t h = std::hash<std::string>{}(graph_id_);
    h = hash_combine(h, std::hash<std::string>{}(from_));
    h = hash_combine(h, std::hash<std::string>{}(to_));
    h = hash_combine(h, delta_.is_infinite() ? 0xffffffffull : delta_.finite_value());
    return h;
}

std::string dist_judgment::render() const {
    return "dist " + from_ + " " + to_ + " " + delta_.render();
}

int min_judgment::compare_same_kind(const judgment_value& other) const {
    const auto& o = static_cast<const min_judgment&>(other);
    if (value_ != o.value_) return value_ < o.value_ ? -1 : 1;
    return order_to_int(stream_ <=> o.stream_);
}

std::size_t min_judgment::hash() const {
    return hash_combine(std::hash<std::int64_t>{}(value_), hash_lasso(stream_));
}

std::string min_judgment::render() const {
    return "min " + std::to_string(value_) + " " + to_string(stream_);
}

add_judgment::add_judgment(std::uint32_t base, lasso left, lasso right, lasso sum,
                           std::int64_t carry)
    : base_(base), left_(std::move(left)), right_(std::move(right)), sum_(std::move(sum)),
      carry_(carry) {
    if (base_ < 2 || base_ > 36) {
        throw std::invalid_argument("add_judgment: base must lie in 2..36");
    }
    for (const lasso* s : {&left_, &right_, &sum_}) {
        for (std::int64_t d : s->elements()) {
            if (d < 0 || d >= static_cast<std::int64_t>(base_)) {
                throw std::invalid_argument("add_judgment: digit " + std::to_string(d) +
                                            " out of range for base " + std::to_string(base_));
            }
        }
    }
}

int add_judgment::compare_same_kind(const judgment_value& other) const {
    const auto& o = static_cast<const add_judgment&>(other);
    if (base_ != o.base_) return base_ < o.base_ ? -1 : 1;
    if (int c = order_to_int(left_ <=> o.left_); c != 0) return c;
    if (int c = order_to_int(right_ <=> o.right_); c != 0) return c;
    if (int c = order_to_int(sum_ <=> o.sum_); c != 0) return c;
    if (carry_ != o.carry_) return carry_ < o.carry_ ? -1 : 1;
    return 0;
}

std::size_t add_judgment::hash() const {
    std::size_t h = hash_combine(base_, hash_lasso(left_));
    h = hash_combine(h, hash_lasso(right_));
    h = hash_combine(h, hash_lasso(sum_));
    return hash_combine(h, std::hash<std::int64_t>{}(carry_));
}

std::string add_judgment::render() const {
    return "add " + to_string(left_) + " " + to_string(right_) + " " + to_string(sum_) + " " +
           std::to_string(carry_);
}

judgment make_allpos(lasso stream) {
    return judgment::of<allpos_judgment>(std::move(stream));
}

judgment make_dist(const graph& g, std::string from, std::string to, distance delta) {
    if (g.nodes.count(from) == 0 || g.nodes.count(to) == 0) {
        throw std::invalid_argument("make_dist: node is not in the graph");
    }
    if (!delta.is_infinite() && delta.finite_value() >= g.nodes.size()) {
        throw std::invalid_argument("make_dist: finite distance must be below the node count");
    }
    return judgment::of<dist_judgment>(g.id, std::move(from), std::move(to), delta);
}

judgment make_min(std::int64_t value, lasso stream) {
    return judgment::of<min_judgment>(value, std::move(stream));
}

judgment make_add(std::uint32_t base, lasso left, lasso right, lasso sum, std::int64_t carry) {
    return judgment::of<add_judgment>(base, std::move(left), std::move(right), std::move(sum),
                                      carry);
}

// -- systems -------------------------------------------------------------------

namespace {

class allpos_system_impl final : public inference_system {
public:
    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<allpos_judgment>();
        if (j == nullptr || j->stream().head() <= 0) return {};
        return {rule_instance({make_allpos(j->stream().tail())}, goal)};
    }
};

class dist_system_impl final : public inference_system {
public:
    explicit dist_system_impl(graph g) : graph_(std::move(g)) {
        for (std::size_t d = 0; d < graph_.nodes.size(); ++d) candidates_.emplace_back(d);
        candidates_.push_back(distance::infinity());
    }

    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<dist_judgment>();
        if (j == nullptr || j->graph_id() != graph_.id) return {};
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = cache_.find(goal); it != cache_.end()) return it->second;
        }
        std::vector<rule_instance> rules = enumerate(goal, *j);
        std::lock_guard<std::mutex> lock(mutex_);
        return cache_.emplace(goal, std::move(rules)).first->second;
    }

private:
    std::vector<rule_instance> enumerate(const judgment& goal, const dist_judgment& j) const {
        std::vector<rule_instance> out;
        if (j.from() == j.to()) {
            if (!j.delta().is_infinite() && j.delta().finite_value() == 0) {
                out.emplace_back(std::vector<judgment>{}, goal);
            }
            return out;
        }
        const std::set<std::string>& nbrs = graph_.neighbours(j.from());
        if (nbrs.empty()) {
            if (j.delta().is_infinite()) out.emplace_back(std::vector<judgment>{}, goal);
            return out;
        }
        if (!j.delta().is_infinite() && j.delta().finite_value() == 0) return out;
        // One rule per assignment of candidate distances to the neighbours
        // whose minimum, plus one, matches the conclusion.
        const distance target = j.delta().is_infinite()
                                    ? distance::infinity()
                                    : distance(j.delta().finite_value() - 1);
        const std::vector<std::string> order(nbrs.begin(), nbrs.end());
        std::vector<distance> chosen;
        std::function<void(std::size_t, distance)> rec = [&](std::size_t i, distance best) {
            if (i == order.size()) {
                if (best == target) {
                    std::vector<judgment> premises;
                    premises.reserve(order.size());
                    for (std::size_t k = 0; k < order.size(); ++k) {
                        premises.push_back(
                            judgment::of<dist_judgment>(graph_.id, order[k], j.to(), chosen[k]));
                    }
                    out.emplace_back(std::move(premises), goal);
                }
                return;
            }
            for (const distance& d : candidates_) {
                chosen.push_back(d);
                rec(i + 1, d < best ? d : best);
                chosen.pop_back();
            }
        };
        rec(0, distance::infinity());
        return out;
    }

    graph graph_;
    std::vector<distance> candidates_;
    mutable std::mutex mutex_;
    mutable std::map<judgment, std::vector<rule_instance>> cache_;
};

class min_rules_impl final : public inference_system {
public:
    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<min_judgment>();
        if (j == nullptr) return {};
        const std::int64_t x = j->stream().head();
        const std::int64_t z = j->min_value();
        if (std::min(x, z) != z) return {};
        const lasso rest = j->stream().tail();
        std::set<std::int64_t> candidates{z};
        for (std::int64_t e : rest.elements()) {
            if (std::min(x, e) == z) candidates.insert(e);
        }
        std::vector<rule_instance> out;
        for (std::int64_t y : candidates) {
            out.emplace_back(std::vector<judgment>{make_min(y, rest)}, goal);
        }
        return out;
    }
};

class min_coaxiom_impl final : public inference_system {
public:
    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<min_judgment>();
        if (j == nullptr || j->min_value() != j->stream().head()) return {};
        return {rule_instance({}, goal)};
    }
};

constexpr std::int64_t k_carry_low = -1;
constexpr std::int64_t k_carry_high = 2;

class add_rules_impl final : public inference_system {
public:
    explicit add_rules_impl(std::uint32_t base) : base_(base) {}

    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<add_judgment>();
        if (j == nullptr || j->base() != base_) return {};
        if (j->carry() < k_carry_low || j->carry() > k_carry_high) return {};
        const std::int64_t b = base_;
        const std::int64_t carry_in =
            b * j->carry() + j->sum().head() - j->left().head() - j->right().head();
        judgment premise = make_add(base_, j->left().tail(), j->right().tail(), j->sum().tail(),
                                    carry_in);
        return {rule_instance({std::move(premise)}, goal)};
    }

private:
    std::uint32_t base_;
};

class add_coaxiom_impl final : public inference_system {
public:
    explicit add_coaxiom_impl(std::uint32_t base) : base_(base) {}

    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        const auto* j = goal.as<add_judgment>();
        if (j == nullptr || j->base() != base_) return {};
        if (j->carry() < k_carry_low || j->carry() > k_carry_high) return {};
        return {rule_instance({}, goal)};
    }

private:
    std::uint32_t base_;
};

} // namespace

system_ptr allpos_system() {
    static const auto instance = std::make_shared<const allpos_system_impl>();
    return instance;
}

system_ptr dist_system(graph g) {
    return std::make_shared<const dist_system_impl>(std::move(g));
}

generalized_system min_system() {
    return {std::make_shared<const min_rules_impl>(), std::make_shared<const min_coaxiom_impl>()};
}

generalized_system add_system(std::uint32_t base) {
    if (base < 2 || base > 36) {
        throw std::invalid_argument("add_system: base must lie in 2..36");
    }
    return {std::make_shared<const add_rules_impl>(base),
            std::make_shared<const add_coaxiom_impl>(base)};
}

} // namespace regco::examples
