#include "regco/search.hpp"

#include <algorithm>
#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace regco {

hypothesis_set hypothesis_set::with(const judgment& j) const {
    std::set<judgment> items = items_;
    items.insert(j);
    return hypothesis_set(std::move(items));
}

bool hypothesis_set::subset_of(const hypothesis_set& other) const {
    return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

namespace {

struct fuel_exhausted {};

// One budget unit per rule application tried, shared by the outer search and
// any nested boundedness checks. Exhaustion aborts the whole search.
class fuel_meter {
public:
    explicit fuel_meter(std::uint64_t budget) : remaining_(budget) {}

    void spend_one() {
        if (remaining_ == 0) throw fuel_exhausted{};
        --remaining_;
        ++spent_;
    }

    std::uint64_t spent() const noexcept { return spent_; }

private:
    std::uint64_t remaining_;
    std::uint64_t spent_ = 0;
};

constexpr std::size_t k_memo_cap = 1u << 20;

// Depth-first search for finite derivations with path-repetition pruning.
// Successes are cached per judgment (finite derivability does not depend on
// the path); failures are cached keyed by the exact path set at entry, which
// makes the cached value a fact about that query rather than about the
// surrounding exploration.
class inductive_searcher {
public:
    inductive_searcher(const inference_system& sys, fuel_meter& fuel) : sys_(sys), fuel_(fuel) {}

    bool prove(const judgment& goal) { return search(goal); }

    const finite_tree& tree_of(const judgment& j) const { return proved_.at(j); }

private:
    bool search(const judgment& j) {
        if (path_.count(j) != 0) return false; // repeated on the current root path
        if (proved_.count(j) != 0) return true;
        std::vector<judgment> path_key(path_.begin(), path_.end());
        if (failed_.count({j, path_key}) != 0) return false;

        path_.insert(j);
        for (const rule_instance& rule : sys_.rules_for(j)) {
            fuel_.spend_one();
            bool all = true;
            for (const judgment& p : rule.premises()) {
                if (!search(p)) {
                    all = false;
                    break;
                }
            }
            if (all) {
                std::vector<finite_tree> kids;
                kids.reserve(rule.premises().size());
                for (const judgment& p : rule.premises()) kids.push_back(proved_.at(p));
                path_.erase(j);
                proved_.emplace(j, finite_tree(j, std::move(kids)));
                return true;
            }
        }
        path_.erase(j);
        if (failed_.size() >= k_memo_cap) failed_.clear();
        failed_.insert({j, std::move(path_key)});
        return false;
    }

    const inference_system& sys_;
    fuel_meter& fuel_;
    std::map<judgment, finite_tree> proved_;
    std::set<std::pair<judgment, std::vector<judgment>>> failed_;
    std::set<judgment> path_;
};

// Partial rule assignment recorded by an accepting subtree. Shared so that
// replayed memo entries do not copy their certificates.
struct frag_node {
    judgment conclusion;
    rule_instance rule;
    std::vector<std::shared_ptr<const frag_node>> parts;
};

void flatten_into(const frag_node* f, std::map<judgment, rule_instance>& out) {
    if (f == nullptr) return;
    out.emplace(f->conclusion, f->rule);
    for (const auto& part : f->parts) flatten_into(part.get(), out);
}

struct loop_result {
    bool accepted = false;
    bool tainted = false; // refutation depended on path pruning; not a reusable fact
    std::set<judgment> used;
    std::set<judgment> consulted; // judgments whose hypothesis membership the run depended on
    std::shared_ptr<const frag_node> fragment;
};

// The cycle-detecting search, deterministic variant: a branch closes by
// circular hypothesis as soon as its judgment is among the hypotheses.
// With corules the closure additionally requires a finite derivation in
// rules ∪ corules; when that check refutes, the search falls through to the
// rules of the judgment (the hypotheses do not grow there, so a query that
// repeats an open unfold at the same hypothesis set is pruned).
//
// Memoization: accepted runs are replayed whenever the hypotheses they
// consumed all hold. A failed exhaustive run only ever inspected the
// hypothesis set through membership of the judgments it visited, so its
// outcome is a fact about every hypothesis set that agrees with the recorded
// one on that consulted set; refutations are cached and reused on that
// condition (results that depended on path pruning are not cached at all).
class loop_searcher {
public:
    loop_searcher(const inference_system& sys, const inference_system* bound, fuel_meter& fuel)
        : sys_(sys), fuel_(fuel) {
        if (bound != nullptr) bounded_.emplace(*bound, fuel);
    }

    loop_result run(const judgment& goal, const std::set<judgment>& initial) {
        hyps_ = initial;
        return search(goal);
    }

private:
    struct positive_entry {
        std::set<judgment> used;
        std::shared_ptr<const frag_node> fragment;
    };

    struct negative_entry {
        std::set<judgment> relevant; // hypotheses ∩ consulted at recording time
        std::set<judgment> consulted;
    };

    // hyps_ ∩ consulted, collected without materializing the intersection
    bool matches(const negative_entry& e) const {
        std::size_t held = 0;
        for (const judgment& j : e.consulted) {
            if (hyps_.count(j) != 0) {
                if (e.relevant.count(j) == 0) return false;
                ++held;
            }
        }
        return held == e.relevant.size();
    }

    loop_result search(const judgment& j) {
        const bool hyp = hyps_.count(j) != 0;
        if (hyp) {
            if (!bounded_ || bounded_->prove(j)) {
                loop_result r;
                r.accepted = true;
                r.used.insert(j);
                r.consulted.insert(j);
                return r;
            }
            // boundedness refuted: hp closure unavailable, fall through to rules
        }
        if (auto it = positives_.find(j); it != positives_.end()) {
            for (const positive_entry& e : it->second) {
                if (std::includes(hyps_.begin(), hyps_.end(), e.used.begin(), e.used.end())) {
                    loop_result r;
                    r.accepted = true;
                    r.used = e.used;
                    r.consulted = e.used;
                    r.consulted.insert(j);
                    r.fragment = e.fragment;
                    return r;
                }
            }
        }
        if (auto it = negatives_.find(j); it != negatives_.end()) {
            for (const negative_entry& e : it->second) {
                if (matches(e)) {
                    loop_result r;
                    r.consulted = e.consulted;
                    r.consulted.insert(j);
                    return r;
                }
            }
        }
        if (hyp && open_.count({j, hyps_.size()}) != 0) {
            loop_result r;
            r.tainted = true;
            r.consulted.insert(j);
            return r;
        }

        const bool inserted = hyps_.insert(j).second;
        const auto open_key = std::make_pair(j, hyps_.size());
        open_.insert(open_key);
        bool tainted_any = false;
        std::set<judgment> consulted{j};
        for (const rule_instance& rule : sys_.rules_for(j)) {
            fuel_.spend_one();
            bool all = true;
            std::set<judgment> used;
            std::vector<std::shared_ptr<const frag_node>> parts;
            for (const judgment& p : rule.premises()) {
                loop_result r = search(p);
                consulted.insert(r.consulted.begin(), r.consulted.end());
                if (!r.accepted) {
                    all = false;
                    tainted_any = tainted_any || r.tainted;
                    break;
                }
                used.insert(r.used.begin(), r.used.end());
                if (r.fragment) parts.push_back(std::move(r.fragment));
            }
            if (all) {
                used.erase(j);
                auto fragment =
                    std::make_shared<const frag_node>(frag_node{j, rule, std::move(parts)});
                positives_[j].push_back({used, fragment});
                open_.erase(open_key);
                if (inserted) hyps_.erase(j);
                loop_result r;
                r.accepted = true;
                r.used = std::move(used);
                r.consulted = std::move(consulted);
                r.fragment = std::move(fragment);
                return r;
            }
        }
        open_.erase(open_key);
        if (inserted) hyps_.erase(j);
        if (!tainted_any) {
            if (negatives_size_ >= k_memo_cap) {
                negatives_.clear();
                negatives_size_ = 0;
            }
            std::set<judgment> relevant;
            for (const judgment& h : hyps_) {
                if (consulted.count(h) != 0) relevant.insert(h);
            }
            negatives_[j].push_back({std::move(relevant), consulted});
            ++negatives_size_;
        }
        loop_result r;
        r.tainted = tainted_any;
        r.consulted = std::move(consulted);
        return r;
    }

    const inference_system& sys_;
    fuel_meter& fuel_;
    std::optional<inductive_searcher> bounded_;

    std::set<judgment> hyps_;
    std::set<std::pair<judgment, std::size_t>> open_;
    std::map<judgment, std::vector<positive_entry>> positives_;
    std::map<judgment, std::vector<negative_entry>> negatives_;
    std::size_t negatives_size_ = 0;
};

void require_budget(std::uint64_t budget) {
    if (budget == 0) throw std::invalid_argument("proof search: budget must be positive");
}

// The component the cycle-detecting search can ever explore from a goal:
// judgments reachable through premise edges, stopping at hypothesis members
// (those close by hp and are never unfolded). Rules are charged against the
// budget as they are materialized, so searches over judgment spaces the
// budget cannot cover end in fuel exhaustion.
class reachable_component {
public:
    reachable_component(const inference_system& sys, const judgment& goal,
                        const std::set<judgment>& hypotheses, fuel_meter& fuel) {
        id_of(goal);
        for (std::size_t next = 0; next < judgments_.size(); ++next) {
            const judgment j = judgments_[next];
            if (hypotheses.count(j) != 0) {
                hyp_[next] = true;
                continue;
            }
            std::vector<rule_instance> rules = sys.rules_for(j);
            for (rule_instance& r : rules) {
                fuel.spend_one();
                std::vector<std::size_t> premise_ids;
                premise_ids.reserve(r.premises().size());
                for (const judgment& p : r.premises()) premise_ids.push_back(id_of(p));
                rule_premises_.push_back(std::move(premise_ids));
                rule_conclusion_.push_back(next);
                rules_of_[next].push_back(rule_premises_.size() - 1);
                materialized_[next].push_back(std::move(r));
            }
        }
    }

    // Largest consistent subset of the component: every member is a
    // hypothesis or concludes some rule whose premises are all members.
    std::vector<bool> largest_consistent_subset() const {
        std::vector<bool> in(judgments_.size(), true);
        std::vector<std::size_t> missing(rule_premises_.size(), 0);
        std::vector<std::size_t> alive(judgments_.size(), 0);
        std::vector<std::vector<std::size_t>> uses(judgments_.size());
        for (std::size_t r = 0; r < rule_premises_.size(); ++r) {
            alive[rule_conclusion_[r]] += 1;
            for (std::size_t p : rule_premises_[r]) uses[p].push_back(r);
        }
        std::vector<std::size_t> removed;
        for (std::size_t j = 0; j < judgments_.size(); ++j) {
            if (!hyp_[j] && alive[j] == 0) {
                in[j] = false;
                removed.push_back(j);
            }
        }
        while (!removed.empty()) {
            const std::size_t j = removed.back();
            removed.pop_back();
            for (std::size_t r : uses[j]) {
                if (missing[r]++ != 0) continue; // rule already dead
                const std::size_t c = rule_conclusion_[r];
                if (in[c] && !hyp_[c] && --alive[c] == 0) {
                    in[c] = false;
                    removed.push_back(c);
                }
            }
        }
        return in;
    }

    std::size_t goal_id() const { return 0; }
    const judgment& judgment_of(std::size_t id) const { return judgments_[id]; }
    bool is_hypothesis(std::size_t id) const { return hyp_[id]; }

    // First rule in enumerator order whose premises all lie in `in`.
    const rule_instance* witness(std::size_t id, const std::vector<bool>& in,
                                 std::vector<std::size_t>& premise_ids) const {
        const auto it = rules_of_.find(id);
        if (it == rules_of_.end()) return nullptr;
        for (std::size_t k = 0; k < it->second.size(); ++k) {
            const std::size_t r = it->second[k];
            bool all = true;
            for (std::size_t p : rule_premises_[r]) {
                if (!in[p]) {
                    all = false;
                    break;
                }
            }
            if (all) {
                premise_ids = rule_premises_[r];
                return &materialized_.at(id)[k];
            }
        }
        return nullptr;
    }

private:
    std::size_t id_of(const judgment& j) {
        const auto [it, fresh] = ids_.emplace(j, judgments_.size());
        if (fresh) {
            judgments_.push_back(j);
            hyp_.push_back(false);
        }
        return it->second;
    }

    std::map<judgment, std::size_t> ids_;
    std::vector<judgment> judgments_;
    std::vector<bool> hyp_;
    std::vector<std::vector<std::size_t>> rule_premises_;
    std::vector<std::size_t> rule_conclusion_;
    std::map<std::size_t, std::vector<std::size_t>> rules_of_;
    std::map<std::size_t, std::vector<rule_instance>> materialized_;
};

struct component_answer {
    bool derivable = false;
    std::map<judgment, rule_instance> closed; // witness assignment, closure from the goal
    std::set<judgment> used;                  // hypotheses reached by the closure
};

// Decides the cycle-detecting search on its reachable component. The
// deterministic search closes a branch by hypothesis as soon as it can, so
// every judgment unfolded in a surviving run is supported inside the largest
// consistent subset, and the first rule whose premises all lie in that
// subset is exactly the rule a surviving run commits to.
component_answer decide_regular(const inference_system& sys, const judgment& goal,
                                const std::set<judgment>& hypotheses, fuel_meter& fuel) {
    component_answer out;
    if (hypotheses.count(goal) != 0) {
        out.derivable = true;
        out.used.insert(goal);
        return out;
    }
    const reachable_component comp(sys, goal, hypotheses, fuel);
    const std::vector<bool> in = comp.largest_consistent_subset();
    if (!in[comp.goal_id()]) return out;
    out.derivable = true;
    std::vector<std::size_t> stack{comp.goal_id()};
    std::set<std::size_t> seen{comp.goal_id()};
    while (!stack.empty()) {
        const std::size_t id = stack.back();
        stack.pop_back();
        if (comp.is_hypothesis(id)) {
            out.used.insert(comp.judgment_of(id));
            continue;
        }
        std::vector<std::size_t> premise_ids;
        const rule_instance* rule = comp.witness(id, in, premise_ids);
        if (rule == nullptr) {
            throw std::logic_error("decide_regular: consistent member without a witness");
        }
        out.closed.emplace(comp.judgment_of(id), *rule);
        for (std::size_t p : premise_ids) {
            if (seen.insert(p).second) stack.push_back(p);
        }
    }
    return out;
}

} // namespace

search_outcome prove_regular(const inference_system& sys, const judgment& goal,
                             std::uint64_t budget) {
    require_budget(budget);
    fuel_meter fuel(budget);
    try {
        component_answer answer = decide_regular(sys, goal, {}, fuel);
        search_outcome out;
        out.kind = answer.derivable ? outcome_kind::proved : outcome_kind::refuted;
        out.budget_spent = fuel.spent();
        if (answer.derivable) {
            out.certificate = extract_certificate({goal, std::move(answer.closed)});
        }
        return out;
    } catch (const fuel_exhausted&) {
        search_outcome out;
        out.kind = outcome_kind::out_of_fuel;
        out.budget_spent = fuel.spent();
        return out;
    }
}

search_outcome prove_regular_co(const generalized_system& gen, const judgment& goal,
                                std::uint64_t budget) {
    if (!gen.rules || !gen.corules) {
        throw std::invalid_argument("prove_regular_co: system with null component");
    }
    require_budget(budget);
    system_ptr bound = union_system(gen.rules, gen.corules);
    fuel_meter fuel(budget);
    loop_searcher searcher(*gen.rules, bound.get(), fuel);
    try {
        loop_result r = searcher.run(goal, {});
        search_outcome out;
        out.budget_spent = fuel.spent();
        if (r.accepted) {
            out.kind = outcome_kind::proved;
            accepting_trace trace{goal, {}};
            flatten_into(r.fragment.get(), trace.closed);
            out.certificate = extract_certificate(trace);
        } else {
            out.kind = outcome_kind::refuted;
        }
        return out;
    } catch (const fuel_exhausted&) {
        search_outcome out;
        out.kind = outcome_kind::out_of_fuel;
        out.budget_spent = fuel.spent();
        return out;
    }
}

search_outcome prove_inductive(const inference_system& sys, const judgment& goal,
                               std::uint64_t budget) {
    require_budget(budget);
    fuel_meter fuel(budget);
    inductive_searcher searcher(sys, fuel);
    try {
        search_outcome out;
        if (searcher.prove(goal)) {
            out.kind = outcome_kind::proved;
            out.derivation = searcher.tree_of(goal);
        } else {
            out.kind = outcome_kind::refuted;
        }
        out.budget_spent = fuel.spent();
        return out;
    } catch (const fuel_exhausted&) {
        search_outcome out;
        out.kind = outcome_kind::out_of_fuel;
        out.budget_spent = fuel.spent();
        return out;
    }
}

hypothesis_run prove_regular_from(const inference_system& sys, const judgment& goal,
                                  const hypothesis_set& from, std::uint64_t budget) {
    require_budget(budget);
    fuel_meter fuel(budget);
    try {
        component_answer answer = decide_regular(sys, goal, from.items(), fuel);
        hypothesis_run out;
        out.kind = answer.derivable ? outcome_kind::proved : outcome_kind::refuted;
        out.used_hypotheses = std::move(answer.used);
        out.budget_spent = fuel.spent();
        return out;
    } catch (const fuel_exhausted&) {
        hypothesis_run out;
        out.kind = outcome_kind::out_of_fuel;
        out.budget_spent = fuel.spent();
        return out;
    }
}

proof_graph extract_certificate(const accepting_trace& trace) {
    if (trace.closed.count(trace.root) == 0) {
        throw std::invalid_argument("extract_certificate: root has no rule binding");
    }
    std::map<judgment, rule_instance> kept;
    std::vector<judgment> stack{trace.root};
    while (!stack.empty()) {
        judgment j = stack.back();
        stack.pop_back();
        if (kept.count(j) != 0) continue;
        auto it = trace.closed.find(j);
        if (it == trace.closed.end()) {
            throw std::invalid_argument("extract_certificate: premise " + j.render() +
                                        " has no rule binding");
        }
        kept.emplace(j, it->second);
        for (const judgment& p : it->second.premises()) stack.push_back(p);
    }
    return proof_graph(trace.root, std::move(kept));
}

} // namespace regco
