#include "regco/system.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace regco {

rule_instance::rule_instance(std::vector<judgment> premises, judgment conclusion)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
    std::sort(premises_.begin(), premises_.end());
    premises_.erase(std::unique(premises_.begin(), premises_.end()), premises_.end());
}

bool operator==(const rule_instance& a, const rule_instance& b) {
    return a.conclusion_ == b.conclusion_ && a.premises_ == b.premises_;
}

std::strong_ordering operator<=>(const rule_instance& a, const rule_instance& b) {
    if (auto c = a.conclusion_ <=> b.conclusion_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.premises_.begin(), a.premises_.end(),
                                                  b.premises_.begin(), b.premises_.end());
}

namespace {

class empty_system_impl final : public inference_system {
public:
    std::vector<rule_instance> rules_for(const judgment&) const override { return {}; }
};

class union_system_impl final : public inference_system {
public:
    union_system_impl(system_ptr first, system_ptr second)
        : first_(std::move(first)), second_(std::move(second)) {}

    std::vector<rule_instance> rules_for(const judgment& goal) const override {
        std::vector<rule_instance> out = first_->rules_for(goal);
        for (rule_instance& r : second_->rules_for(goal)) {
            if (std::find(out.begin(), out.end(), r) == out.end()) {
                out.push_back(std::move(r));
            }
        }
        return out;
    }

private:
    system_ptr first_;
    system_ptr second_;
};

} // namespace

system_ptr empty_system() {
    static const auto instance = std::make_shared<const empty_system_impl>();
    return instance;
}

system_ptr union_system(system_ptr first, system_ptr second) {
    if (!first || !second) {
        throw std::invalid_argument("union_system: null component");
    }
    return std::make_shared<const union_system_impl>(std::move(first), std::move(second));
}

} // namespace regco
