#ifndef REGCO_EXAMPLES_HPP
#define REGCO_EXAMPLES_HPP

#include "regco/judgment.hpp"
#include "regco/lasso.hpp"
#include "regco/system.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>

namespace regco::examples {

/// A natural distance or ∞ (∞ greater than every natural).
class distance {
public:
    static distance infinity() { return distance(); }
    explicit distance(std::size_t v) : value_(v) {}

    bool is_infinite() const noexcept { return !value_.has_value(); }
    std::size_t finite_value() const { return value_.value(); }
    std::string render() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const distance&, const distance&) = default;
    friend std::strong_ordering operator<=>(const distance& a, const distance& b) {
        if (a.value_ && b.value_) return *a.value_ <=> *b.value_;
        if (a.value_) return std::strong_ordering::less;    // finite < inf
        if (b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    distance() = default;
    std::optional<std::size_t> value_;
};

/// A directed graph as an accessibility function over named nodes.
struct graph {
    std::string id;
    std::set<std::string> nodes;
    std::map<std::string, std::set<std::string>> adjacency;

    /// Throws std::invalid_argument if an adjacency target is not a node.
    static graph make(std::string id, std::map<std::string, std::set<std::string>> adjacency);

    const std::set<std::string>& neighbours(const std::string& v) const;
};

/// The 4-node graph with edges a→b, a→d, b→a, b→c, d→d.
graph example_graph();

// -- judgment payloads --------------------------------------------------------

class allpos_judgment final : public judgment_value {
public:
    explicit allpos_judgment(lasso stream) : stream_(std::move(stream)) {}
    const lasso& stream() const noexcept { return stream_; }

    std::string_view kind() const noexcept override { return "allpos"; }
    int compare_same_kind(const judgment_value& other) const override;
    std::size_t hash() const override;
    std::string render() const override;

private:
    lasso stream_;
};

class dist_judgment final : public judgment_value {
public:
    dist_judgment(std::string graph_id, std::string from, std::string to, distance delta);

    const std::string& graph_id() const noexcept { return graph_id_; }
    const std::string& from() const noexcept { return from_; }
    const std::string& to() const noexcept { return to_; }
    const distance& delta() const noexcept { return delta_; }

    std::string_view kind() const noexcept override { return "dist"; }
    int compare_same_kind(const judgment_value& other) const override;
    std::size_t hash() const override;
    std::string render() const override;

private:
    std::string graph_id_;
    std::string from_;
    std::string to_;
    distance delta_;
};

class min_judgment final : public judgment_value {
public:
    min_judgment(std::int64_t value, lasso stream) : value_(value), stream_(std::move(stream)) {}

    std::int64_t min_value() const noexcept { return value_; }
    const lasso& stream() const noexcept { return stream_; }

    std::string_view kind() const noexcept override { return "min"; }
    int compare_same_kind(const judgment_value& other) const override;
    std::size_t hash() const override;
    std::string render() const override;

private:
    std::int64_t value_;
    lasso stream_;
};

class add_judgment final : public judgment_value {
public:
    /// All three streams must carry digits in 0..base-1; the carry is any
    /// integer. Base must lie in 2..36.
    add_judgment(std::uint32_t base, lasso left, lasso right, lasso sum, std::int64_t carry);

    std::uint32_t base() const noexcept { return base_; }
    const lasso& left() const noexcept { return left_; }
    const lasso& right() const noexcept { return right_; }
    const lasso& sum() const noexcept { return sum_; }
    std::int64_t carry() const noexcept { return carry_; }

    std::string_view kind() const noexcept override { return "add"; }
    int compare_same_kind(const judgment_value& other) const override;
    std::size_t hash() const override;
    std::string render() const override;

private:
    std::uint32_t base_;
    lasso left_;
    lasso right_;
    lasso sum_;
    std::int64_t carry_;
};

judgment make_allpos(lasso stream);
judgment make_dist(const graph& g, std::string from, std::string to, distance delta);
judgment make_min(std::int64_t value, lasso stream);
judgment make_add(std::uint32_t base, lasso left, lasso right, lasso sum, std::int64_t carry);

// -- systems ------------------------------------------------------------------

/// allPos(x : s) follows from allPos(s) when x > 0.
system_ptr allpos_system();

/// dist(v, v, 0) is an axiom; for v ≠ u with neighbours v1..vn,
/// dist(v, u, 1 + min{δ1..δn}) follows from dist(vi, u, δi). Backward, the
/// δi range over {0..|V|-1} ∪ {∞} (one rule per assignment whose minimum
/// matches), and min ∅ = ∞ makes dist(v, u, ∞) an axiom for sink nodes.
system_ptr dist_system(graph g);

/// min(z, x : s) follows from min(y, s) when z = min{x, y}; candidates for y
/// are z itself plus the elements of s with min{x, y} = z. The coaxiom is
/// min(x, x : s).
generalized_system min_system();

/// Digit-stream addition in the given base: the carry of the premise is
/// determined by the conclusion (c = base·carry + digit − d1 − d2), so the
/// backward step is deterministic. Rules are only emitted for conclusions
/// whose carry lies in −1..2, matching the judgments that admit a finite
/// derivation with the coaxiom (carry ∈ −1..2, empty premises).
generalized_system add_system(std::uint32_t base);

} // namespace regco::examples

#endif
