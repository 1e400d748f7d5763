#ifndef REGCO_TEXTIO_HPP
#define REGCO_TEXTIO_HPP

#include "regco/examples.hpp"
#include "regco/ground.hpp"
#include "regco/judgment.hpp"
#include "regco/lasso.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace regco {

class parse_failure : public std::runtime_error {
public:
    explicit parse_failure(const std::string& message, std::size_t line = 0)
        : std::runtime_error(line == 0 ? message
                                       : "line " + std::to_string(line) + ": " + message),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A ground system loaded from a file; `corules` is present when the file
/// carried corule lines. Both components share one universe: every judgment
/// mentioned anywhere in the file.
struct loaded_system {
    ground_system rules;
    std::optional<ground_system> corules;
};

/// Line-oriented ground system format: `rule: [j1, j2, ...] => j` and
/// `corule: [...] => j`; the `rule:` prefix may be omitted. Judgments are
/// bare identifiers; blank lines and `#` comments are ignored.
loaded_system parse_ground_text(const std::string& text);
loaded_system load_ground_system(const std::string& path);

/// Graph format: one `node a -> b, d` line per node (empty target list for
/// sinks); targets need not have their own line.
examples::graph parse_graph_text(const std::string& text, std::string id);
examples::graph load_graph(const std::string& path);

/// `p1,p2|c1,c2` with an empty prefix written as `|c1,c2`.
lasso parse_lasso(const std::string& text);

enum class example_kind { allpos, dist, min, add };

/// Parameters the example goals need: the graph for dist, the base for add.
struct example_context {
    std::optional<examples::graph> graph;
    std::uint32_t base = 10;
};

/// Goal syntax, one judgment per string:
///   allpos <lasso>
///   dist <from> <to> <delta|inf>
///   min <int> <lasso>
///   add <lasso> <lasso> <lasso> <int>
judgment parse_example_goal(example_kind kind, const std::string& text,
                            const example_context& ctx);

/// A bare identifier naming a judgment of the system's universe.
judgment parse_atom_goal(const ground_system& sys, const std::string& text);

/// Table with one row per universe judgment and membership columns for the
/// inductive, regular, coinductive, and corule-regular interpretations.
/// Checks lfp ⊆ rfp = gfp internally.
std::string oracle_report(const loaded_system& sys);

} // namespace regco

#endif
