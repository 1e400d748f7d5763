#ifndef REGCO_SYSTEM_HPP
#define REGCO_SYSTEM_HPP

#include "regco/judgment.hpp"

#include <compare>
#include <memory>
#include <vector>

namespace regco {

/// A rule ⟨premises, conclusion⟩. Premises form a finite set: the constructor
/// sorts them and drops duplicates.
class rule_instance {
public:
    rule_instance(std::vector<judgment> premises, judgment conclusion);

    const std::vector<judgment>& premises() const noexcept { return premises_; }
    const judgment& conclusion() const noexcept { return conclusion_; }
    bool is_axiom() const noexcept { return premises_.empty(); }

    friend bool operator==(const rule_instance& a, const rule_instance& b);
    friend std::strong_ordering operator<=>(const rule_instance& a, const rule_instance& b);

private:
    std::vector<judgment> premises_; // sorted, unique
    judgment conclusion_;
};

/// Backward rule enumerator: all rules concluding a given judgment, as a
/// finite list. Enumerators must be pure; the same query always yields the
/// same list in the same order, and every emitted rule concludes the query.
class inference_system {
public:
    virtual ~inference_system() = default;
    virtual std::vector<rule_instance> rules_for(const judgment& goal) const = 0;
};

using system_ptr = std::shared_ptr<const inference_system>;

/// A system with corules ⟨I, CO⟩.
struct generalized_system {
    system_ptr rules;
    system_ptr corules;
};

/// Enumerates no rules for any judgment.
system_ptr empty_system();

/// Enumerator for I ∪ CO: rules of `first`, then rules of `second` that are
/// not already present.
system_ptr union_system(system_ptr first, system_ptr second);

} // namespace regco

#endif
