#include "regco/textio.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <vector>

namespace regco {

namespace {

std::string strip(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
    }
    return true;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_failure("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::int64_t parse_int(const std::string& text, std::size_t line = 0) {
    const std::string t = strip(text);
    try {
        std::size_t used = 0;
        const long long v = std::stoll(t, &used);
        if (used != t.size()) throw parse_failure("trailing characters after integer: " + t, line);
        return v;
    } catch (const parse_failure&) {
        throw;
    } catch (const std::exception&) {
        throw parse_failure("not an integer: " + t, line);
    }
}

struct raw_rule {
    bool corule;
    std::vector<std::string> premises;
    std::string conclusion;
};

raw_rule parse_rule_line(std::string body, std::size_t line_no) {
    raw_rule out{};
    if (body.rfind("corule:", 0) == 0) {
        out.corule = true;
        body = strip(body.substr(7));
    } else if (body.rfind("rule:", 0) == 0) {
        body = strip(body.substr(5));
    }
    if (body.empty() || body.front() != '[') {
        throw parse_failure("expected '[' starting the premise list", line_no);
    }
    const std::size_t close = body.find(']');
    if (close == std::string::npos) {
        throw parse_failure("unterminated premise list", line_no);
    }
    const std::string inside = strip(body.substr(1, close - 1));
    if (!inside.empty()) {
        for (const std::string& item : split(inside, ',')) {
            const std::string name = strip(item);
            if (!is_identifier(name)) {
                throw parse_failure("bad judgment identifier '" + name + "'", line_no);
            }
            out.premises.push_back(name);
        }
    }
    std::string rest = strip(body.substr(close + 1));
    if (rest.rfind("=>", 0) != 0) {
        throw parse_failure("expected '=>' after the premise list", line_no);
    }
    out.conclusion = strip(rest.substr(2));
    if (!is_identifier(out.conclusion)) {
        throw parse_failure("bad judgment identifier '" + out.conclusion + "'", line_no);
    }
    return out;
}

} // namespace

loaded_system parse_ground_text(const std::string& text) {
    std::set<judgment> universe;
    std::vector<rule_instance> rules;
    std::vector<rule_instance> corules;
    bool saw_corule = false;

    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = strip(line);
        if (line.empty()) continue;
        const raw_rule raw = parse_rule_line(line, line_no);
        std::vector<judgment> premises;
        premises.reserve(raw.premises.size());
        for (const std::string& name : raw.premises) {
            judgment j = make_atom(name);
            universe.insert(j);
            premises.push_back(std::move(j));
        }
        judgment conclusion = make_atom(raw.conclusion);
        universe.insert(conclusion);
        (raw.corule ? corules : rules).emplace_back(std::move(premises), std::move(conclusion));
        saw_corule = saw_corule || raw.corule;
    }

    loaded_system out{ground_system(universe, std::move(rules)), std::nullopt};
    if (saw_corule) {
        out.corules.emplace(universe, std::move(corules));
    }
    return out;
}

loaded_system load_ground_system(const std::string& path) {
    return parse_ground_text(read_file(path));
}

examples::graph parse_graph_text(const std::string& text, std::string id) {
    std::map<std::string, std::set<std::string>> adjacency;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const std::size_t hash = line.find('#'); hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = strip(line);
        if (line.empty()) continue;
        if (line.rfind("node", 0) != 0) {
            throw parse_failure("expected a 'node' line", line_no);
        }
        std::string rest = strip(line.substr(4));
        const std::size_t arrow = rest.find("->");
        if (arrow == std::string::npos) {
            throw parse_failure("expected '->' in node line", line_no);
        }
        const std::string name = strip(rest.substr(0, arrow));
        if (!is_identifier(name)) {
            throw parse_failure("bad node name '" + name + "'", line_no);
        }
        std::set<std::string> targets;
        const std::string target_list = strip(rest.substr(arrow + 2));
        if (!target_list.empty()) {
            for (const std::string& item : split(target_list, ',')) {
                const std::string t = strip(item);
                if (!is_identifier(t)) {
                    throw parse_failure("bad node name '" + t + "'", line_no);
                }
                targets.insert(t);
            }
        }
        if (!adjacency.emplace(name, std::move(targets)).second) {
            throw parse_failure("duplicate node line for '" + name + "'", line_no);
        }
    }
    // Targets without their own line become sink nodes.
    std::set<std::string> mentioned;
    for (const auto& [v, targets] : adjacency) mentioned.insert(targets.begin(), targets.end());
    for (const std::string& v : mentioned) adjacency.try_emplace(v);
    return examples::graph::make(std::move(id), std::move(adjacency));
}

examples::graph load_graph(const std::string& path) {
    return parse_graph_text(read_file(path), path);
}

lasso parse_lasso(const std::string& text) {
    const std::string t = strip(text);
    const std::size_t bar = t.find('|');
    if (bar == std::string::npos) {
        throw parse_failure("lasso must contain '|' separating prefix and cycle: " + t);
    }
    const auto parse_values = [&](const std::string& part) {
        std::vector<std::int64_t> out;
        const std::string p = strip(part);
        if (p.empty()) return out;
        for (const std::string& item : split(p, ',')) out.push_back(parse_int(item));
        return out;
    };
    std::vector<std::int64_t> prefix = parse_values(t.substr(0, bar));
    std::vector<std::int64_t> cycle = parse_values(t.substr(bar + 1));
    if (cycle.empty()) throw parse_failure("lasso cycle must be non-empty: " + t);
    return lasso(std::move(prefix), std::move(cycle));
}

namespace {

std::vector<std::string> tokens_of(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

[[noreturn]] void bad_goal(const std::string& text, const std::string& expected) {
    throw parse_failure("bad goal '" + text + "': expected " + expected);
}

} // namespace

judgment parse_example_goal(example_kind kind, const std::string& text,
                            const example_context& ctx) {
    const std::vector<std::string> toks = tokens_of(text);
    try {
        switch (kind) {
        case example_kind::allpos:
            if (toks.size() != 2 || toks[0] != "allpos") bad_goal(text, "allpos <lasso>");
            return examples::make_allpos(parse_lasso(toks[1]));
        case example_kind::dist: {
            if (toks.size() != 4 || toks[0] != "dist") {
                bad_goal(text, "dist <from> <to> <delta|inf>");
            }
            if (!ctx.graph) throw parse_failure("dist goal needs a graph");
            examples::distance d = examples::distance::infinity();
            if (toks[3] != "inf") {
                const std::int64_t v = parse_int(toks[3]);
                if (v < 0) throw parse_failure("distance must be non-negative: " + toks[3]);
                d = examples::distance(static_cast<std::size_t>(v));
            }
            return examples::make_dist(*ctx.graph, toks[1], toks[2], d);
        }
        case example_kind::min:
            if (toks.size() != 3 || toks[0] != "min") bad_goal(text, "min <int> <lasso>");
            return examples::make_min(parse_int(toks[1]), parse_lasso(toks[2]));
        case example_kind::add:
            if (toks.size() != 5 || toks[0] != "add") {
                bad_goal(text, "add <lasso> <lasso> <lasso> <int>");
            }
            return examples::make_add(ctx.base, parse_lasso(toks[1]), parse_lasso(toks[2]),
                                      parse_lasso(toks[3]), parse_int(toks[4]));
        }
    } catch (const std::invalid_argument& e) {
        throw parse_failure(std::string("bad goal '") + text + "': " + e.what());
    }
    throw parse_failure("unknown example goal kind");
}

judgment parse_atom_goal(const ground_system& sys, const std::string& text) {
    const std::string name = strip(text);
    if (!is_identifier(name)) {
        throw parse_failure("bad judgment identifier '" + name + "'");
    }
    judgment j = make_atom(name);
    if (sys.universe().count(j) == 0) {
        throw parse_failure("judgment '" + name + "' is not in the system's universe");
    }
    return j;
}

std::string oracle_report(const loaded_system& sys) {
    const ground_system& rules = sys.rules;
    const std::set<judgment> ind = lfp(rules);
    const std::set<judgment> reg = rfp_bruteforce(rules); // also checks reg = gfp
    const std::set<judgment> coind = gfp(rules);
    const ground_system co =
        sys.corules ? *sys.corules : ground_system(rules.universe(), {});
    const std::set<judgment> flex = flex_regular_bruteforce(rules, co);
    if (!std::includes(reg.begin(), reg.end(), ind.begin(), ind.end())) {
        throw std::logic_error("oracle_report: lfp is not contained in the rational fixed point");
    }

    std::size_t width = std::string("judgment").size();
    for (const judgment& j : rules.universe()) width = std::max(width, j.render().size());
    const auto cell = [](bool yes) { return yes ? "yes" : "no"; };

    std::ostringstream out;
    out << std::left << std::setw(static_cast<int>(width + 2)) << "judgment"
        << std::setw(5) << "Ind" << std::setw(5) << "Reg" << std::setw(7) << "CoInd"
        << "Reg+CO\n";
    for (const judgment& j : rules.universe()) {
        out << std::left << std::setw(static_cast<int>(width + 2)) << j.render()
            << std::setw(5) << cell(ind.count(j) != 0) << std::setw(5) << cell(reg.count(j) != 0)
            << std::setw(7) << cell(coind.count(j) != 0) << cell(flex.count(j) != 0) << "\n";
    }
    return out.str();
}

} // namespace regco
