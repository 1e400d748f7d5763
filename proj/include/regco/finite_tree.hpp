#ifndef REGCO_FINITE_TREE_HPP
#define REGCO_FINITE_TREE_HPP

#include "regco/judgment.hpp"

#include <cstddef>
#include <vector>

namespace regco {

/// A finite tree of judgments. Children are kept sorted by root judgment and
/// have pairwise distinct roots (sibling labels never repeat), so the child
/// roots of any node form a set.
class finite_tree {
public:
    explicit finite_tree(judgment root, std::vector<finite_tree> children = {});

    const judgment& root() const noexcept { return root_; }
    const std::vector<finite_tree>& children() const noexcept { return children_; }

    std::size_t node_count() const;
    std::size_t depth() const; // edges on the longest root path; 0 for a leaf

    friend bool operator==(const finite_tree& a, const finite_tree& b);

private:
    judgment root_;
    std::vector<finite_tree> children_;
};

} // namespace regco

#endif
