#pragma once

#include <paraf/framework.hpp>
#include <paraf/semantics.hpp>

#include <map>
#include <string_view>
#include <vector>

namespace paraf {

/// A pair (A, S) with A⁺ ∪ S⁺ = Ar ∖ A.
struct StabilizerWitness {
    ArgSet extension;
    ArgSet stabilizer;
};

/// The ⊆-minimal stabilizers of a framework, with the locally minimal
/// stabilizers of every conflict-free set that admits one.
struct SigmaF {
    /// Canonically ordered, pairwise ⊆-incomparable.
    std::vector<ArgSet> minimal_elements;
    /// Conflict-free set -> its locally minimal stabilizers (canonical order).
    /// Sets admitting no stabilizer are absent.
    std::map<ArgSet, std::vector<ArgSet>> per_extension;

    bool is_minimal(const ArgSet& stabilizer) const;
};

/// Exact check of A⁺ ∪ S⁺ = Ar ∖ A.
bool is_stabilizer(const Framework& f, const ArgSet& stabilizer, const ArgSet& extension);

/// ⊆-minimal stabilizers of one set, computed as the minimal covers of
/// the arguments left outside its range by attackers that never hit the
/// set. Empty when the set admits no stabilizer.
std::vector<ArgSet> minimal_stabilizers_of(const Framework& f, const ArgSet& extension);

SigmaF global_minimal_stabilizers(const Framework& f, const EnumOptions& options = {});

/// Conflict-free sets admitting a stabilizer that is ⊆-minimal in Σ_F.
ExtensionSet paracoherent_extensions(const Framework& f, const EnumOptions& options = {});

/// Same as paracoherent_extensions, with one witness per extension
/// (the canonically first globally minimal stabilizer it admits).
std::vector<StabilizerWitness> paracoherent_witnesses(const Framework& f, const EnumOptions& options = {});

inline constexpr std::string_view kShadowPrefix = "s__";
inline constexpr std::string_view kGuardPrefix = "g__";

/// F plus, for every argument a that attacks something, a shadow s__a
/// attacking every target of a and a guard g__a in mutual attack with
/// s__a. Original indices are preserved; shadows follow, then guards.
Framework guarded_shadow_framework(const Framework& f);

/// Stable extensions of the guarded shadow framework whose shadow part is
/// ⊆-minimal, projected onto the original arguments.
ExtensionSet paracoherent_via_shadow(const Framework& f, const EnumOptions& options = {});

} // namespace paraf
