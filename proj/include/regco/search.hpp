#ifndef REGCO_SEARCH_HPP
#define REGCO_SEARCH_HPP

#include "regco/finite_tree.hpp"
#include "regco/judgment.hpp"
#include "regco/proof_graph.hpp"
#include "regco/system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>

namespace regco {

enum class outcome_kind { proved, refuted, out_of_fuel };

/// Result of a proof search. `proved` always carries a certificate that the
/// matching checker accepts: a proof_graph for the regular searches, a
/// finite_tree for the inductive one. `refuted` is claimed only when the
/// whole alternative space was exhausted without running out of budget.
struct search_outcome {
    outcome_kind kind = outcome_kind::refuted;
    std::optional<proof_graph> certificate; // regular searches
    std::optional<finite_tree> derivation;  // inductive search
    std::uint64_t budget_spent = 0;

    bool proved() const noexcept { return kind == outcome_kind::proved; }
    bool refuted() const noexcept { return kind == outcome_kind::refuted; }
    bool out_of_fuel() const noexcept { return kind == outcome_kind::out_of_fuel; }
};

/// A finite set of circular hypotheses.
class hypothesis_set {
public:
    hypothesis_set() = default;
    explicit hypothesis_set(std::set<judgment> items) : items_(std::move(items)) {}

    bool contains(const judgment& j) const { return items_.count(j) != 0; }
    hypothesis_set with(const judgment& j) const;
    bool subset_of(const hypothesis_set& other) const;
    const std::set<judgment>& items() const noexcept { return items_; }
    std::size_t size() const noexcept { return items_.size(); }

private:
    std::set<judgment> items_;
};

/// Looks for a regular derivation of `goal`: depth-first cycle-detecting
/// search that closes a branch as soon as the current judgment is among the
/// circular hypotheses, and otherwise tries each rule in enumerator order,
/// adding the conclusion to the hypotheses while exploring its premises
/// (premises in judgment order). One budget unit is consumed per rule
/// application tried. Throws std::invalid_argument when budget is zero.
search_outcome prove_regular(const inference_system& sys, const judgment& goal,
                             std::uint64_t budget);

/// Same search over gen.rules, except that closing a branch by circular
/// hypothesis additionally requires the judgment to have a finite derivation
/// in rules ∪ corules (searched within the shared budget); when that check
/// refutes, the search falls through to the rules of the judgment instead.
search_outcome prove_regular_co(const generalized_system& gen, const judgment& goal,
                                std::uint64_t budget);

/// Depth-first search for a finite derivation; a branch is pruned when its
/// judgment already occurs on the current root path.
search_outcome prove_inductive(const inference_system& sys, const judgment& goal,
                               std::uint64_t budget);

/// Outcome of a search started from explicit circular hypotheses; carries the
/// subset of hypotheses actually consumed instead of a certificate.
struct hypothesis_run {
    outcome_kind kind = outcome_kind::refuted;
    std::set<judgment> used_hypotheses;
    std::uint64_t budget_spent = 0;

    bool proved() const noexcept { return kind == outcome_kind::proved; }
};

/// The cycle-detecting search started from hypotheses `from` instead of the
/// empty set (the relation ⊢ (H; j) directly).
hypothesis_run prove_regular_from(const inference_system& sys, const judgment& goal,
                                  const hypothesis_set& from, std::uint64_t budget);

/// What an accepting regular search leaves behind: the goal plus the rule
/// that succeeded for every judgment closed by an unfold step.
struct accepting_trace {
    judgment root;
    std::map<judgment, rule_instance> closed;
};

/// Builds the certificate from an accepting run: keeps the bindings reachable
/// from the root by premise edges. Total on accepting traces; the result
/// passes validate_proof_graph against the searched system.
proof_graph extract_certificate(const accepting_trace& trace);

} // namespace regco

#endif
