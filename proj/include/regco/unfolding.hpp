#ifndef REGCO_UNFOLDING_HPP
#define REGCO_UNFOLDING_HPP

#include "regco/finite_tree.hpp"
#include "regco/judgment.hpp"
#include "regco/proof_graph.hpp"

#include <cstddef>
#include <functional>
#include <string>

namespace regco {

/// The depth-d truncation of the unique infinite tree the certificate
/// unfolds to: nodes at depth < d expand into the premises of their assigned
/// rule, nodes at depth d are leaves. Depth counts edges from the root.
/// Requires a certificate whose key set is premise-closed (what
/// validate_proof_graph checks).
finite_tree unfold(const proof_graph& cert, std::size_t depth);

/// `tree` cut at depth d (nodes at depth d become leaves).
finite_tree truncate(const finite_tree& tree, std::size_t depth);

/// Number of certificate nodes; an upper bound on the number of distinct
/// subtrees of the unfolded infinite tree.
std::size_t distinct_subtree_bound(const proof_graph& cert);

/// Directed-graph rendering: one `node <id> "<rendering>"` line per key and
/// one `edge <from> <to>` line per premise, ids assigned in judgment order
/// starting at 0.
std::string render_graph_text(const proof_graph& cert);

/// Machine-readable record: a `root <id>` line, the `node` lines as in the
/// graph rendering, then one `rule <id> : <premise ids>` line per node.
std::string render_structured_text(const proof_graph& cert);

/// Parses render_structured_text output back, using `parse_judgment` to
/// rebuild each node's judgment from its rendering. Throws
/// std::invalid_argument on malformed input (message carries the line
/// number).
proof_graph parse_structured_text(const std::string& text,
                                  const std::function<judgment(const std::string&)>& parse_judgment);

} // namespace regco

#endif
