#include "regco/unfolding.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace regco {

namespace {

finite_tree unfold_from(const proof_graph& cert, const judgment& at, std::size_t depth) {
    if (depth == 0) return finite_tree(at);
    const auto it = cert.assignment().find(at);
    if (it == cert.assignment().end()) {
        throw std::invalid_argument("unfold: judgment " + at.render() +
                                    " is missing from the certificate");
    }
    std::vector<finite_tree> kids;
    kids.reserve(it->second.premises().size());
    for (const judgment& p : it->second.premises()) {
        kids.push_back(unfold_from(cert, p, depth - 1));
    }
    return finite_tree(at, std::move(kids));
}

std::map<judgment, std::size_t> number_nodes(const proof_graph& cert) {
    std::map<judgment, std::size_t> ids;
    std::size_t next = 0;
    for (const auto& [j, rule] : cert.assignment()) ids.emplace(j, next++);
    return ids;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string cur;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) lines.push_back(cur);
    return lines;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("structured certificate, line " + std::to_string(line_no) + ": " +
                                what);
}

} // namespace

finite_tree unfold(const proof_graph& cert, std::size_t depth) {
    return unfold_from(cert, cert.root(), depth);
}

finite_tree truncate(const finite_tree& tree, std::size_t depth) {
    if (depth == 0) return finite_tree(tree.root());
    std::vector<finite_tree> kids;
    kids.reserve(tree.children().size());
    for (const finite_tree& c : tree.children()) kids.push_back(truncate(c, depth - 1));
    return finite_tree(tree.root(), std::move(kids));
}

std::size_t distinct_subtree_bound(const proof_graph& cert) {
    return cert.assignment().size();
}

std::string render_graph_text(const proof_graph& cert) {
    const std::map<judgment, std::size_t> ids = number_nodes(cert);
    std::ostringstream out;
    for (const auto& [j, id] : ids) {
        out << "node " << id << " \"" << j.render() << "\"\n";
    }
    for (const auto& [j, rule] : cert.assignment()) {
        for (const judgment& p : rule.premises()) {
            out << "edge " << ids.at(j) << " " << ids.at(p) << "\n";
        }
    }
    return out.str();
}

std::string render_structured_text(const proof_graph& cert) {
    const std::map<judgment, std::size_t> ids = number_nodes(cert);
    std::ostringstream out;
    out << "root " << ids.at(cert.root()) << "\n";
    for (const auto& [j, id] : ids) {
        out << "node " << id << " \"" << j.render() << "\"\n";
    }
    for (const auto& [j, rule] : cert.assignment()) {
        out << "rule " << ids.at(j) << " :";
        for (const judgment& p : rule.premises()) {
            out << " " << ids.at(p);
        }
        out << "\n";
    }
    return out.str();
}

proof_graph parse_structured_text(
    const std::string& text,
    const std::function<judgment(const std::string&)>& parse_judgment) {
    const std::vector<std::string> lines = split_lines(text);
    std::map<std::size_t, judgment> nodes;
    std::map<std::size_t, std::vector<std::size_t>> premise_ids;
    std::size_t root_id = 0;
    bool saw_root = false;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        std::istringstream in(lines[i]);
        std::string tag;
        if (!(in >> tag)) bad_line(line_no, "empty line");
        if (tag == "root") {
            if (saw_root) bad_line(line_no, "duplicate root line");
            if (!(in >> root_id)) bad_line(line_no, "missing root id");
            saw_root = true;
        } else if (tag == "node") {
            std::size_t id = 0;
            if (!(in >> id)) bad_line(line_no, "missing node id");
            const std::string& raw = lines[i];
            const std::size_t open = raw.find('"');
            const std::size_t close = raw.rfind('"');
            if (open == std::string::npos || close <= open) bad_line(line_no, "missing rendering");
            if (!nodes.emplace(id, parse_judgment(raw.substr(open + 1, close - open - 1))).second) {
                bad_line(line_no, "duplicate node id");
            }
        } else if (tag == "rule") {
            std::size_t id = 0;
            std::string colon;
            if (!(in >> id >> colon) || colon != ":") bad_line(line_no, "malformed rule line");
            std::vector<std::size_t> ps;
            std::size_t p = 0;
            while (in >> p) ps.push_back(p);
            if (!in.eof()) bad_line(line_no, "malformed premise list");
            if (!premise_ids.emplace(id, std::move(ps)).second) {
                bad_line(line_no, "duplicate rule line");
            }
        } else {
            bad_line(line_no, "unknown tag '" + tag + "'");
        }
    }

    if (!saw_root) throw std::invalid_argument("structured certificate: missing root line");
    const auto lookup = [&](std::size_t id) -> const judgment& {
        const auto it = nodes.find(id);
        if (it == nodes.end()) {
            throw std::invalid_argument("structured certificate: unknown node id " +
                                        std::to_string(id));
        }
        return it->second;
    };

    std::map<judgment, rule_instance> assignment;
    for (const auto& [id, j] : nodes) {
        const auto it = premise_ids.find(id);
        if (it == premise_ids.end()) {
            throw std::invalid_argument("structured certificate: node " + std::to_string(id) +
                                        " has no rule line");
        }
        std::vector<judgment> premises;
        premises.reserve(it->second.size());
        for (std::size_t pid : it->second) premises.push_back(lookup(pid));
        assignment.emplace(j, rule_instance(std::move(premises), j));
    }
    return proof_graph(lookup(root_id), std::move(assignment));
}

} // namespace regco
