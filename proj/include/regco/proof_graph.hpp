#ifndef REGCO_PROOF_GRAPH_HPP
#define REGCO_PROOF_GRAPH_HPP

#include "regco/judgment.hpp"
#include "regco/system.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace regco {

/// A regular-derivation certificate: a finite set of judgments (the keys of
/// `assignment`) with one witnessing rule per judgment. When the key set is
/// closed under premises and reachable from the root, it is a finite
/// post-fixed point of the inference operator.
///
/// The constructor is permissive; use validate_proof_graph to check the
/// invariants against a system.
class proof_graph {
public:
    proof_graph(judgment root, std::map<judgment, rule_instance> assignment);

    const judgment& root() const noexcept { return root_; }
    const std::map<judgment, rule_instance>& assignment() const noexcept { return assignment_; }
    std::size_t size() const noexcept { return assignment_.size(); }

    friend bool operator==(const proof_graph& a, const proof_graph& b);

private:
    judgment root_;
    std::map<judgment, rule_instance> assignment_;
};

struct validation_result {
    bool ok = false;
    std::string diagnostic; // empty when ok

    explicit operator bool() const noexcept { return ok; }
};

/// Executable regular coinduction: accepts iff the assignment's key set X is
/// a post-fixed point containing and reachable from the root, every key maps
/// to a rule concluding it, and every assigned rule is among the rules the
/// system enumerates for that key. On failure the diagnostic names the first
/// offending judgment in the judgment order.
validation_result validate_proof_graph(const inference_system& sys, const proof_graph& cert);

enum class bounded_validity { valid, invalid, out_of_fuel };

struct bounded_validation_result {
    bounded_validity verdict = bounded_validity::invalid;
    std::string diagnostic;
    std::uint64_t budget_spent = 0;

    explicit operator bool() const noexcept { return verdict == bounded_validity::valid; }
};

/// Bounded variant for systems with corules: additionally every key must
/// have a finite derivation in I ∪ CO, searched within `budget` rule
/// applications shared across all keys. Throws std::invalid_argument when
/// budget is zero.
bounded_validation_result validate_bounded_proof_graph(const generalized_system& gen,
                                                       const proof_graph& cert,
                                                       std::uint64_t budget);

} // namespace regco

#endif
