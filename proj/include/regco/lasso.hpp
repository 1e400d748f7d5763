#ifndef REGCO_LASSO_HPP
#define REGCO_LASSO_HPP

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace regco {

/// A rational stream as prefix + repeating cycle, kept in canonical form:
/// the cycle is primitive (not a power of a shorter word) and the prefix is
/// minimal (empty, or its last element differs from the cycle's last
/// element). Two canonical lassos compare equal exactly when they denote the
/// same stream, so lassos can serve as components of judgment keys.
class lasso {
public:
    /// Canonicalizes; throws std::invalid_argument on an empty cycle.
    lasso(std::vector<std::int64_t> prefix, std::vector<std::int64_t> cycle);

    static lasso repeat(std::int64_t v) { return lasso({}, {v}); }

    const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
    const std::vector<std::int64_t>& cycle() const noexcept { return cycle_; }

    std::int64_t head() const;
    lasso tail() const;

    /// All iterated tails, including the stream itself; at most
    /// |prefix| + |cycle| of them.
    std::set<lasso> substreams() const;

    /// The set of values the stream visits.
    std::set<std::int64_t> elements() const;

    /// The first n values of the denoted stream.
    std::vector<std::int64_t> unfold_values(std::size_t n) const;

    friend bool operator==(const lasso& a, const lasso& b);
    friend std::strong_ordering operator<=>(const lasso& a, const lasso& b);

private:
    std::vector<std::int64_t> prefix_;
    std::vector<std::int64_t> cycle_;
};

/// Builds the canonical lasso for the stream prefix · cycle^ω.
inline lasso canonicalize(std::vector<std::int64_t> prefix, std::vector<std::int64_t> cycle) {
    return lasso(std::move(prefix), std::move(cycle));
}

/// `p1,p2|c1,c2` with an empty prefix written as `|c1,c2`.
std::string to_string(const lasso& s);

} // namespace regco

#endif
