#include "regco/finite_tree.hpp"

#include <algorithm>
#include <stdexcept>

namespace regco {

finite_tree::finite_tree(judgment root, std::vector<finite_tree> children)
    : root_(std::move(root)), children_(std::move(children)) {
    std::sort(children_.begin(), children_.end(),
              [](const finite_tree& a, const finite_tree& b) { return a.root() < b.root(); });
    for (std::size_t i = 1; i < children_.size(); ++i) {
        if (children_[i - 1].root() == children_[i].root()) {
            throw std::invalid_argument("finite_tree: sibling nodes share a label");
        }
    }
}

std::size_t finite_tree::node_count() const {
    std::size_t n = 1;
    for (const finite_tree& c : children_) n += c.node_count();
    return n;
}

std::size_t finite_tree::depth() const {
    std::size_t d = 0;
    for (const finite_tree& c : children_) d = std::max(d, c.depth() + 1);
    return d;
}

bool operator==(const finite_tree& a, const finite_tree& b) {
    return a.root_ == b.root_ && a.children_ == b.children_;
}

} // namespace regco
