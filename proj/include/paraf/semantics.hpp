#pragma once

#include <paraf/framework.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace paraf {

enum class Semantics { CF, ADM, COMP, STB, SEM, STAGE, PARA };

std::string_view to_string(Semantics sem);
/// Accepts the CLI spellings cf, adm, com, comp, stb, sem, stage, para.
std::optional<Semantics> parse_semantics(std::string_view text);

/// Default cap on exhaustive enumeration: PARAF_MAX_ARGS when set, else 24.
std::size_t default_max_args();

struct EnumOptions {
    std::size_t max_args = default_max_args();
    /// Worker threads for per-candidate work; output never depends on it.
    unsigned jobs = 1;
};

/// SizeError when `arguments` exceeds the cap of `options`.
void require_within_cap(std::size_t arguments, const EnumOptions& options, std::string_view what);

/// Deduplicated, canonically ordered extensions of one framework.
class ExtensionSet {
public:
    ExtensionSet(const Framework& f, std::vector<ArgSet> extensions);

    std::uint64_t framework_id() const noexcept { return framework_; }
    std::size_t size() const noexcept { return extensions_.size(); }
    bool empty() const noexcept { return extensions_.empty(); }
    const ArgSet& operator[](std::size_t i) const { return extensions_[i]; }
    auto begin() const { return extensions_.begin(); }
    auto end() const { return extensions_.end(); }
    const std::vector<ArgSet>& items() const noexcept { return extensions_; }

    bool contains(const ArgSet& set) const;
    bool subset_of(const ExtensionSet& other) const;

    bool operator==(const ExtensionSet& other) const;

private:
    std::uint64_t framework_;
    std::vector<ArgSet> extensions_;
};

/// All conflict-free sets, as masks in generation order.
std::vector<Mask> conflict_free_masks(const Framework& f);

/// Exact σ-extensions for the six classical semantics. PARA raises
/// DispatchError; frameworks above the cap raise SizeError.
ExtensionSet enumerate(const Framework& f, Semantics sem, const EnumOptions& options = {});

/// Membership test for a single candidate. Maximality-based semantics
/// enumerate peers under the same cap.
bool is_extension(const Framework& f, const ArgSet& set, Semantics sem, const EnumOptions& options = {});

/// Stable extensions by backtracking over in/out labels. Not bound by the
/// exhaustive-enumeration cap; used for the enlarged shadow frameworks.
std::vector<Mask> stable_masks_by_search(const Framework& f);

/// Keeps the masks whose `key` is ⊆-maximal among all keys.
std::vector<std::size_t> maximal_by_key(const std::vector<Mask>& keys);

} // namespace paraf
