#include "regco/lasso.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace regco {

namespace {

// Shortest word w such that `cycle` is a power of w.
std::vector<std::int64_t> primitive_root(const std::vector<std::int64_t>& cycle) {
    const std::size_t n = cycle.size();
    for (std::size_t p = 1; p <= n / 2; ++p) {
        if (n % p != 0) continue;
        bool repeats = true;
        for (std::size_t i = p; i < n; ++i) {
            if (cycle[i] != cycle[i - p]) {
                repeats = false;
                break;
            }
        }
        if (repeats) return {cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(p)};
    }
    return cycle;
}

} // namespace

lasso::lasso(std::vector<std::int64_t> prefix, std::vector<std::int64_t> cycle)
    : prefix_(std::move(prefix)) {
    if (cycle.empty()) {
        throw std::invalid_argument("lasso: cycle must be non-empty");
    }
    cycle_ = primitive_root(cycle);
    // Fold the prefix into the cycle while its last element matches the
    // cycle's last element, rotating the cycle backward each time. Rotations
    // of a primitive word stay primitive.
    while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
        prefix_.pop_back();
        std::rotate(cycle_.begin(), cycle_.end() - 1, cycle_.end());
    }
}

std::int64_t lasso::head() const {
    return prefix_.empty() ? cycle_.front() : prefix_.front();
}

lasso lasso::tail() const {
    if (!prefix_.empty()) {
        return lasso(std::vector<std::int64_t>(prefix_.begin() + 1, prefix_.end()), cycle_);
    }
    std::vector<std::int64_t> rotated = cycle_;
    std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
    return lasso({}, std::move(rotated));
}

std::set<lasso> lasso::substreams() const {
    std::set<lasso> out;
    lasso cur = *this;
    while (out.insert(cur).second) {
        cur = cur.tail();
    }
    return out;
}

std::set<std::int64_t> lasso::elements() const {
    std::set<std::int64_t> out(prefix_.begin(), prefix_.end());
    out.insert(cycle_.begin(), cycle_.end());
    return out;
}

std::vector<std::int64_t> lasso::unfold_values(std::size_t n) const {
    std::vector<std::int64_t> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i < prefix_.size()) {
            out.push_back(prefix_[i]);
        } else {
            out.push_back(cycle_[(i - prefix_.size()) % cycle_.size()]);
        }
    }
    return out;
}

std::string to_string(const lasso& s) {
    std::string out;
    for (std::size_t i = 0; i < s.prefix().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.prefix()[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < s.cycle().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.cycle()[i]);
    }
    return out;
}

bool operator==(const lasso& a, const lasso& b) {
    return a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_;
}

std::strong_ordering operator<=>(const lasso& a, const lasso& b) {
    if (auto c = a.prefix_ <=> b.prefix_; c != 0) return c;
    return a.cycle_ <=> b.cycle_;
}

} // namespace regco
