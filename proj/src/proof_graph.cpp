#include "regco/proof_graph.hpp"

#include "regco/search.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace regco {

proof_graph::proof_graph(judgment root, std::map<judgment, rule_instance> assignment)
    : root_(std::move(root)), assignment_(std::move(assignment)) {}

bool operator==(const proof_graph& a, const proof_graph& b) {
    return a.root_ == b.root_ && a.assignment_ == b.assignment_;
}

validation_result validate_proof_graph(const inference_system& sys, const proof_graph& cert) {
    const auto& assignment = cert.assignment();
    if (assignment.count(cert.root()) == 0) {
        return {false, "root " + cert.root().render() + " has no assigned rule"};
    }
    for (const auto& [j, rule] : assignment) {
        if (!(rule.conclusion() == j)) {
            return {false, "rule assigned to " + j.render() + " concludes " +
                               rule.conclusion().render()};
        }
    }
    for (const auto& [j, rule] : assignment) {
        for (const judgment& p : rule.premises()) {
            if (assignment.count(p) == 0) {
                return {false, "premise " + p.render() + " of node " + j.render() +
                                   " is missing from the certificate"};
            }
        }
    }
    std::set<judgment> reached;
    std::vector<judgment> stack{cert.root()};
    while (!stack.empty()) {
        judgment j = stack.back();
        stack.pop_back();
        if (!reached.insert(j).second) continue;
        for (const judgment& p : assignment.at(j).premises()) stack.push_back(p);
    }
    for (const auto& [j, rule] : assignment) {
        if (reached.count(j) == 0) {
            return {false, "node " + j.render() + " is unreachable from the root"};
        }
    }
    for (const auto& [j, rule] : assignment) {
        std::vector<rule_instance> rules = sys.rules_for(j);
        if (std::find(rules.begin(), rules.end(), rule) == rules.end()) {
            return {false, "rule assigned to " + j.render() + " is not in the system"};
        }
    }
    return {true, ""};
}

bounded_validation_result validate_bounded_proof_graph(const generalized_system& gen,
                                                       const proof_graph& cert,
                                                       std::uint64_t budget) {
    if (budget == 0) {
        throw std::invalid_argument("validate_bounded_proof_graph: budget must be positive");
    }
    if (!gen.rules || !gen.corules) {
        throw std::invalid_argument("validate_bounded_proof_graph: system with null component");
    }
    validation_result structural = validate_proof_graph(*gen.rules, cert);
    if (!structural) {
        return {bounded_validity::invalid, structural.diagnostic, 0};
    }
    system_ptr joint = union_system(gen.rules, gen.corules);
    std::uint64_t spent = 0;
    for (const auto& [j, rule] : cert.assignment()) {
        if (spent >= budget) {
            return {bounded_validity::out_of_fuel, "", spent};
        }
        search_outcome r = prove_inductive(*joint, j, budget - spent);
        spent += r.budget_spent;
        if (r.out_of_fuel()) {
            return {bounded_validity::out_of_fuel, "", spent};
        }
        if (r.refuted()) {
            return {bounded_validity::invalid,
                    "node " + j.render() + " has no finite derivation in rules + corules", spent};
        }
    }
    return {bounded_validity::valid, "", spent};
}

} // namespace regco
