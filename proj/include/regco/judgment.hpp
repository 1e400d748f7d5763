#ifndef REGCO_JUDGMENT_HPP
#define REGCO_JUDGMENT_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace regco {

/// Base for concrete judgment payloads. Implementations must be immutable;
/// `compare_same_kind` is only called with an operand of the same `kind()`.
class judgment_value {
public:
    virtual ~judgment_value() = default;
    virtual std::string_view kind() const noexcept = 0;
    virtual int compare_same_kind(const judgment_value& other) const = 0;
    virtual std::size_t hash() const = 0;
    virtual std::string render() const = 0;
};

/// An element of the universe: an opaque, equatable, totally ordered value
/// with a stable textual rendering. Cheap to copy (shared immutable payload).
class judgment {
public:
    explicit judgment(std::shared_ptr<const judgment_value> value);

    template <typename T, typename... Args>
    static judgment of(Args&&... args) {
        return judgment(std::make_shared<T>(std::forward<Args>(args)...));
    }

    const judgment_value& value() const noexcept { return *value_; }

    template <typename T>
    const T* as() const noexcept {
        return dynamic_cast<const T*>(value_.get());
    }

    std::string render() const { return value_->render(); }
    std::size_t hash() const;

    friend bool operator==(const judgment& a, const judgment& b);
    friend std::strong_ordering operator<=>(const judgment& a, const judgment& b);

private:
    std::shared_ptr<const judgment_value> value_;
};

/// Named atom; the judgment shape of ground systems loaded from files.
class atom_judgment final : public judgment_value {
public:
    explicit atom_judgment(std::string name);

    const std::string& name() const noexcept { return name_; }

    std::string_view kind() const noexcept override { return "atom"; }
    int compare_same_kind(const judgment_value& other) const override;
    std::size_t hash() const override;
    std::string render() const override { return name_; }

private:
    std::string name_;
};

judgment make_atom(std::string name);

} // namespace regco

template <>
struct std::hash<regco::judgment> {
    std::size_t operator()(const regco::judgment& j) const noexcept { return j.hash(); }
};

#endif
