#include "regco/judgment.hpp"

#include <functional>
#include <stdexcept>

namespace regco {

judgment::judgment(std::shared_ptr<const judgment_value> value) : value_(std::move(value)) {
    if (!value_) {
        throw std::invalid_argument("judgment: null payload");
    }
}

std::size_t judgment::hash() const {
    const std::size_t k = std::hash<std::string_view>{}(value_->kind());
    return k ^ (value_->hash() + 0x9e3779b97f4a7c15ull + (k << 6) + (k >> 2));
}

bool operator==(const judgment& a, const judgment& b) {
    if (a.value_.get() == b.value_.get()) return true;
    if (a.value_->kind() != b.value_->kind()) return false;
    return a.value_->compare_same_kind(*b.value_) == 0;
}

std::strong_ordering operator<=>(const judgment& a, const judgment& b) {
    if (a.value_.get() == b.value_.get()) return std::strong_ordering::equal;
    const int k = a.value_->kind().compare(b.value_->kind());
    if (k != 0) return k < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    const int c = a.value_->compare_same_kind(*b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

atom_judgment::atom_judgment(std::string name) : name_(std::move(name)) {
    if (name_.empty()) {
        throw std::invalid_argument("atom_judgment: empty name");
    }
}

int atom_judgment::compare_same_kind(const judgment_value& other) const {
    return name_.compare(static_cast<const atom_judgment&>(other).name_);
}

std::size_t atom_judgment::hash() const {
    return std::hash<std::string>{}(name_);
}

judgment make_atom(std::string name) {
    return judgment::of<atom_judgment>(std::move(name));
}

} // namespace regco
