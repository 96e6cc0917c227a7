#pragma once

#include <paraf/error.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace paraf {

using Mask = std::uint64_t;

class Framework;

/// A set of arguments of one framework, stored as a bit vector over the
/// framework's dense argument indices. Set algebra between sets bound to
/// different frameworks raises BindingError.
class ArgSet {
public:
    ArgSet() = default;

    std::uint64_t framework_id() const noexcept { return framework_; }
    Mask bits() const noexcept { return bits_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    bool empty() const noexcept { return bits_ == 0; }
    bool contains(std::size_t index) const noexcept { return index < 64 && ((bits_ >> index) & 1U) != 0; }

    /// Member indices in ascending order.
    std::vector<std::size_t> indices() const;

    bool subset_of(const ArgSet& other) const;
    bool strict_subset_of(const ArgSet& other) const;
    bool intersects(const ArgSet& other) const;

    ArgSet operator|(const ArgSet& other) const;
    ArgSet operator&(const ArgSet& other) const;
    ArgSet operator-(const ArgSet& other) const;

    bool operator==(const ArgSet& other) const;
    /// Raw bit order, for use as an ordered-container key (same framework only).
    bool operator<(const ArgSet& other) const;

private:
    friend class Framework;
    ArgSet(std::uint64_t framework, Mask bits) : framework_(framework), bits_(bits) {}
    void check_same(const ArgSet& other) const;

    std::uint64_t framework_ = 0;
    Mask bits_ = 0;
};

/// Unvalidated framework description, as produced by the parsers.
struct RawFramework {
    std::vector<std::string> args;
    std::vector<std::pair<std::string, std::string>> attacks;
};

struct Defect {
    enum class Kind { InvalidName, DuplicateArgument, UnknownArgument, DuplicateAttack, TooLarge };
    Kind kind;
    std::string message;
};

/// Reports every defect of a raw description. An empty result means ok.
std::vector<Defect> validate(const RawFramework& raw);

/// Immutable attack graph over named arguments. Arguments are interned to
/// dense indices in declaration order; the attack relation carries no
/// duplicates. Copies share the binding identity of the original.
class Framework {
public:
    static constexpr std::size_t kMaxArguments = 64;

    /// The empty framework.
    Framework();

    /// Builds from a raw description. Duplicate attacks are dropped
    /// silently; every other defect raises InputError.
    explicit Framework(const RawFramework& raw);

    /// Builds from names and index pairs.
    Framework(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> attacks);

    std::uint64_t id() const noexcept { return id_; }
    std::size_t size() const noexcept { return names_.size(); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::string& name(std::size_t index) const { return names_.at(index); }
    std::optional<std::size_t> find(std::string_view name) const;
    /// Index of a named argument; InputError when absent.
    std::size_t index(std::string_view name) const;

    /// Attack pairs sorted by (attacker, target).
    const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const noexcept { return attacks_; }
    bool attacks(std::size_t from, std::size_t to) const { return ((out_.at(from) >> to) & 1U) != 0; }
    Mask out_mask(std::size_t index) const { return out_.at(index); }
    Mask in_mask(std::size_t index) const { return in_.at(index); }
    Mask all_mask() const noexcept;

    ArgSet none() const { return ArgSet(id_, 0); }
    ArgSet all() const { return ArgSet(id_, all_mask()); }
    ArgSet make(Mask bits) const;
    ArgSet make(std::initializer_list<std::string_view> names) const;
    ArgSet make(const std::vector<std::string>& names) const;

    /// Raises BindingError unless the set is bound to this framework.
    void check(const ArgSet& set) const;

    /// Member names in name order.
    std::vector<std::string> member_names(const ArgSet& set) const;
    /// Renders as `[x,y,z]` with members in name order.
    std::string format(const ArgSet& set) const;

    /// Canonical order: cardinality first, then lexicographic on the
    /// name-sorted member lists.
    bool canonical_less(const ArgSet& lhs, const ArgSet& rhs) const;

    RawFramework raw() const;

    /// Same argument names and same attacks by name, irrespective of index order.
    bool same_graph(const Framework& other) const;

private:
    void build(std::vector<std::pair<std::size_t, std::size_t>> attacks);

    std::uint64_t id_;
    std::vector<std::string> names_;
    std::vector<std::pair<std::size_t, std::size_t>> attacks_;
    std::vector<Mask> out_;
    std::vector<Mask> in_;
    std::vector<std::size_t> by_name_;
};

/// Union of the out-neighborhoods of the members.
ArgSet attacked_set(const Framework& f, const ArgSet& set);
bool is_conflict_free(const Framework& f, const ArgSet& set);
/// The set together with everything it attacks.
ArgSet range(const Framework& f, const ArgSet& set);

// Mask-level kernels shared by the enumerators.
inline Mask attacked_mask(const Framework& f, Mask set) {
    Mask out = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
        out |= f.out_mask(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return out;
}

inline bool conflict_free_mask(const Framework& f, Mask set) { return (attacked_mask(f, set) & set) == 0; }

bool is_valid_name(std::string_view name);

} // namespace paraf
