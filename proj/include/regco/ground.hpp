#ifndef REGCO_GROUND_HPP
#define REGCO_GROUND_HPP

#include "regco/judgment.hpp"
#include "regco/system.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace regco {

/// An inference system with all rules explicitly listed over a finite
/// universe. Doubles as a backward enumerator by filtering rules on their
/// conclusion (listed order, duplicates dropped).
class ground_system final : public inference_system {
public:
    ground_system(std::set<judgment> universe, std::vector<rule_instance> rules);

    const std::set<judgment>& universe() const noexcept { return universe_; }
    const std::vector<rule_instance>& rules() const noexcept { return rules_; }

    std::vector<rule_instance> rules_for(const judgment& goal) const override;

private:
    std::set<judgment> universe_;
    std::vector<rule_instance> rules_;
    std::map<judgment, std::vector<rule_instance>> by_conclusion_;
};

/// The inference operator F(X) = { j | ⟨P, j⟩ a rule, P ⊆ X }. Throws
/// std::invalid_argument when x is not contained in the universe.
std::set<judgment> inf_op(const ground_system& g, const std::set<judgment>& x);

/// Least fixed point, by iteration from the empty set.
std::set<judgment> lfp(const ground_system& g);

/// Greatest fixed point, by iteration downward from the universe.
std::set<judgment> gfp(const ground_system& g);

/// The rational fixed point as the union of all post-fixed subsets of the
/// universe, by enumeration of all subsets. On a finite universe every
/// subset is compact, so the result must coincide with gfp; the
/// implementation checks this and throws std::logic_error on mismatch.
/// Universes above 16 judgments are rejected (std::invalid_argument).
std::set<judgment> rfp_bruteforce(const ground_system& g);

/// The flexible regular interpretation of ⟨gi, gco⟩: restrict gi to rules
/// whose conclusion has a finite derivation in gi ∪ gco, then take the
/// rational fixed point of the restriction. Requires a shared universe.
std::set<judgment> flex_regular_bruteforce(const ground_system& gi, const ground_system& gco);

/// Deterministic pseudo-random ground system over atoms j0..j{n-1}; at most
/// max_rules rules with premise sets of size at most 3.
ground_system random_ground_system(std::uint64_t seed, std::size_t max_universe,
                                   std::size_t max_rules);

/// Materializes a lazy system over an explicit universe by querying the
/// backward enumerator for every universe judgment.
ground_system ground_from_enumerator(const inference_system& sys,
                                     const std::set<judgment>& universe);

} // namespace regco

#endif
