#include "regco/examples.hpp"
#include "regco/ground.hpp"
#include "regco/search.hpp"
#include "regco/textio.hpp"
#include "regco/unfolding.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

namespace {

constexpr int exit_proved = 0;
constexpr int exit_refuted = 1;
constexpr int exit_out_of_fuel = 2;
constexpr int exit_usage = 64;
constexpr int exit_parse = 65;

struct query_setup {
    regco::system_ptr rules;
    std::optional<regco::generalized_system> with_corules; // present when corules exist
    regco::judgment goal;
};

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return exit_usage;
}

void print_tree(const regco::finite_tree& t, std::size_t depth, std::ostream& out) {
    out << std::string(2 * (depth + 1), ' ') << t.root().render() << "\n";
    for (const regco::finite_tree& c : t.children()) print_tree(c, depth + 1, out);
}

int report_outcome(const regco::search_outcome& outcome, const std::string& emit_graph_path) {
    switch (outcome.kind) {
    case regco::outcome_kind::proved:
        std::cout << "PROVED\n";
        if (outcome.certificate) {
            std::cout << regco::render_structured_text(*outcome.certificate);
            if (!emit_graph_path.empty()) {
                std::ofstream out(emit_graph_path, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << emit_graph_path << "\n";
                    return exit_usage;
                }
                out << regco::render_graph_text(*outcome.certificate);
            }
        } else if (outcome.derivation) {
            std::cout << "tree:\n";
            print_tree(*outcome.derivation, 0, std::cout);
        }
        return exit_proved;
    case regco::outcome_kind::refuted:
        std::cout << "REFUTED\n";
        return exit_refuted;
    case regco::outcome_kind::out_of_fuel:
        std::cout << "OUT-OF-FUEL\n";
        return exit_out_of_fuel;
    }
    return exit_usage;
}

} // namespace

int main(int argc, char** argv) {
    std::string system_path;
    std::string example_name;
    std::string graph_path;
    std::string emit_graph_path;
    std::string mode = "regular";
    std::string goal_text;
    std::uint64_t budget = 10000;
    std::uint32_t base = 10;
    bool want_oracle_report = false;

    CLI::App app{"proof search for finitary inference systems: inductive, regular "
                 "(cyclic), and corule-bounded regular interpretations"};
    app.add_option("--system", system_path, "ground system file");
    app.add_option("--example", example_name, "built-in system: allpos, dist, min, add");
    app.add_option("--graph", graph_path, "graph file (dist example)");
    app.add_option("--base", base, "digit base (add example)");
    app.add_option("--mode", mode, "inductive, regular, or regular-co")
        ->check(CLI::IsMember({"inductive", "regular", "regular-co"}));
    app.add_option("--budget", budget, "rule applications to spend (default 10000)");
    app.add_option("--emit-graph", emit_graph_path, "also write the certificate as graph text");
    app.add_flag("--oracle-report", want_oracle_report,
                 "tabulate the four interpretations of a ground system");
    app.add_option("goal", goal_text, "judgment to prove");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return exit_proved;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (system_path.empty() == example_name.empty()) {
        return usage_error("pass exactly one of --system or --example");
    }
    if (budget == 0) {
        return usage_error("--budget must be at least 1");
    }

    try {
        std::optional<query_setup> setup;
        std::optional<regco::loaded_system> loaded;

        if (want_oracle_report) {
            if (system_path.empty()) {
                return usage_error("--oracle-report needs --system");
            }
            if (!goal_text.empty()) {
                return usage_error("--oracle-report takes no goal");
            }
            loaded = regco::load_ground_system(system_path);
            if (loaded->rules.universe().size() > 16) {
                return usage_error("oracle report: universe larger than 16 judgments");
            }
            std::cout << regco::oracle_report(*loaded);
            return exit_proved;
        }

        if (goal_text.empty()) {
            return usage_error("missing goal");
        }

        if (!system_path.empty()) {
            loaded = regco::load_ground_system(system_path);
            auto rules = std::make_shared<const regco::ground_system>(loaded->rules);
            std::optional<regco::generalized_system> gen;
            if (loaded->corules) {
                gen = regco::generalized_system{
                    rules, std::make_shared<const regco::ground_system>(*loaded->corules)};
            }
            setup = query_setup{rules, gen, regco::parse_atom_goal(loaded->rules, goal_text)};
        } else if (example_name == "allpos") {
            regco::example_context ctx;
            setup = query_setup{
                regco::examples::allpos_system(), std::nullopt,
                regco::parse_example_goal(regco::example_kind::allpos, goal_text, ctx)};
        } else if (example_name == "dist") {
            if (graph_path.empty()) {
                return usage_error("the dist example needs --graph");
            }
            regco::example_context ctx;
            ctx.graph = regco::load_graph(graph_path);
            setup = query_setup{
                regco::examples::dist_system(*ctx.graph), std::nullopt,
                regco::parse_example_goal(regco::example_kind::dist, goal_text, ctx)};
        } else if (example_name == "min") {
            regco::generalized_system gen = regco::examples::min_system();
            regco::example_context ctx;
            setup = query_setup{
                gen.rules, gen,
                regco::parse_example_goal(regco::example_kind::min, goal_text, ctx)};
        } else if (example_name == "add") {
            if (base < 2 || base > 36) {
                return usage_error("--base must lie in 2..36");
            }
            regco::generalized_system gen = regco::examples::add_system(base);
            regco::example_context ctx;
            ctx.base = base;
            setup = query_setup{
                gen.rules, gen,
                regco::parse_example_goal(regco::example_kind::add, goal_text, ctx)};
        } else {
            return usage_error("unknown example '" + example_name + "'");
        }

        regco::search_outcome outcome;
        if (mode == "regular") {
            outcome = regco::prove_regular(*setup->rules, setup->goal, budget);
        } else if (mode == "inductive") {
            if (!emit_graph_path.empty()) {
                return usage_error("--emit-graph needs mode regular or regular-co");
            }
            outcome = regco::prove_inductive(*setup->rules, setup->goal, budget);
        } else { // regular-co
            if (!setup->with_corules) {
                return usage_error("mode regular-co needs a system with corules");
            }
            outcome = regco::prove_regular_co(*setup->with_corules, setup->goal, budget);
        }
        return report_outcome(outcome, emit_graph_path);
    } catch (const regco::parse_failure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_parse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
}
