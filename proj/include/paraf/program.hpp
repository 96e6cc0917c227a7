#pragma once

#include <paraf/error.hpp>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace paraf {

/// Atom kinds, in signature order.
enum class AtomKind : std::uint8_t {
    Plain,      ///< a
    Belief,     ///< Ka, rendered k__a
    Aux,        ///< λ_{r,i}, rendered l__<r>_<i>
    Shadow,     ///< s_a, rendered s__a
    Complement, ///< complement of s_a, rendered n__a
};

struct Atom {
    AtomKind kind = AtomKind::Plain;
    std::string name;
    int rule = 0;
    int position = 0;

    static Atom plain(std::string name) { return {AtomKind::Plain, std::move(name), 0, 0}; }
    static Atom belief(std::string name) { return {AtomKind::Belief, std::move(name), 0, 0}; }
    static Atom aux(int rule, int position) { return {AtomKind::Aux, {}, rule, position}; }
    static Atom shadow(std::string name) { return {AtomKind::Shadow, std::move(name), 0, 0}; }
    static Atom complement(std::string name) { return {AtomKind::Complement, std::move(name), 0, 0}; }

    /// Text form with the reserved prefixes.
    std::string text() const;

    auto operator<=>(const Atom&) const = default;
};

/// Decodes the text form of an atom; InputError on reserved-prefix misuse.
Atom decode_atom(std::string_view text);

/// a₁ ∨ … ∨ a_l ← b₁, …, b_m, not c₁, …, not c_n. Duplicate atoms within a
/// part are dropped (first occurrence wins).
class Rule {
public:
    Rule() = default;
    Rule(std::vector<Atom> head, std::vector<Atom> positive, std::vector<Atom> negative);

    const std::vector<Atom>& head() const noexcept { return head_; }
    const std::vector<Atom>& positive() const noexcept { return positive_; }
    const std::vector<Atom>& negative() const noexcept { return negative_; }

    bool is_normal() const noexcept { return head_.size() <= 1; }
    bool is_constraint() const noexcept { return head_.empty(); }
    bool is_fact() const noexcept { return positive_.empty() && negative_.empty(); }

    auto operator<=>(const Rule&) const = default;

private:
    std::vector<Atom> head_;
    std::vector<Atom> positive_;
    std::vector<Atom> negative_;
};

struct Program {
    std::vector<Rule> rules;

    /// Atoms in bit-layout order: Plain atoms by first occurrence, then
    /// Belief, Aux, Shadow and Complement atoms, each by first occurrence.
    std::vector<Atom> signature() const;
    /// Plain atoms by first occurrence.
    std::vector<Atom> plain_atoms() const;
    bool has_negation() const;

    /// Equality modulo rule order.
    bool operator==(const Program& other) const;
};

class Interpretation {
public:
    Interpretation() = default;
    Interpretation(std::initializer_list<Atom> atoms) : atoms_(atoms) {}
    explicit Interpretation(std::set<Atom> atoms) : atoms_(std::move(atoms)) {}

    const std::set<Atom>& atoms() const noexcept { return atoms_; }
    std::size_t size() const noexcept { return atoms_.size(); }
    bool empty() const noexcept { return atoms_.empty(); }
    bool contains(const Atom& atom) const { return atoms_.contains(atom); }
    void insert(Atom atom) { atoms_.insert(std::move(atom)); }
    auto begin() const { return atoms_.begin(); }
    auto end() const { return atoms_.end(); }

    /// Keeps only atoms of the listed kinds.
    Interpretation restricted(std::initializer_list<AtomKind> kinds) const;
    /// `{a,k__b}` in atom order.
    std::string text() const;

    bool operator==(const Interpretation& other) const { return atoms_ == other.atoms_; }
    bool operator<(const Interpretation& other) const { return atoms_ < other.atoms_; }

private:
    std::set<Atom> atoms_;
};

/// Sorts by size, then lexicographically, and removes duplicates.
void canonicalize(std::vector<Interpretation>& models);

/// Bit width of the model-search engine.
inline constexpr std::size_t kMaxAtoms = 64;

/// Classical model check, rule by rule.
bool satisfies(const Interpretation& interpretation, const Program& program);

/// Gelfond–Lifschitz reduct: rules whose negative body meets the
/// interpretation are dropped, the rest lose their negative bodies.
Program gl_reduct(const Program& program, const Interpretation& interpretation);

/// ⊆-minimal models of a negation-free program, canonically ordered.
/// PreconditionError on negative bodies, SizeError above kMaxAtoms.
std::vector<Interpretation> minimal_models(const Program& program);

/// Answer sets, canonically ordered. SizeError above kMaxAtoms.
std::vector<Interpretation> answer_sets(const Program& program);

} // namespace paraf
