#include <paraf/semantics.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

namespace paraf {

std::string_view to_string(Semantics sem) {
    switch (sem) {
    case Semantics::CF: return "cf";
    case Semantics::ADM: return "adm";
    case Semantics::COMP: return "com";
    case Semantics::STB: return "stb";
    case Semantics::SEM: return "sem";
    case Semantics::STAGE: return "stage";
    case Semantics::PARA: return "para";
    }
    return "?";
}

std::optional<Semantics> parse_semantics(std::string_view text) {
    if (text == "cf") return Semantics::CF;
    if (text == "adm") return Semantics::ADM;
    if (text == "com" || text == "comp") return Semantics::COMP;
    if (text == "stb") return Semantics::STB;
    if (text == "sem") return Semantics::SEM;
    if (text == "stage") return Semantics::STAGE;
    if (text == "para") return Semantics::PARA;
    return std::nullopt;
}

std::size_t default_max_args() {
    if (const char* env = std::getenv("PARAF_MAX_ARGS")) {
        char* end = nullptr;
        const unsigned long value = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && value > 0) return value;
    }
    return 24;
}

void require_within_cap(std::size_t arguments, const EnumOptions& options, std::string_view what) {
    if (arguments > options.max_args) {
        throw SizeError(std::string(what) + ": " + std::to_string(arguments) + " arguments exceed the enumeration cap of " +
                        std::to_string(options.max_args) + " (raise it with --max-args or PARAF_MAX_ARGS)");
    }
}

// ---------------------------------------------------------------------------
// ExtensionSet

ExtensionSet::ExtensionSet(const Framework& f, std::vector<ArgSet> extensions)
    : framework_(f.id()), extensions_(std::move(extensions)) {
    for (const auto& e : extensions_) f.check(e);
    std::sort(extensions_.begin(), extensions_.end(),
              [&f](const ArgSet& a, const ArgSet& b) { return f.canonical_less(a, b); });
    extensions_.erase(std::unique(extensions_.begin(), extensions_.end()), extensions_.end());
}

bool ExtensionSet::contains(const ArgSet& set) const {
    if (set.framework_id() != framework_) throw BindingError("argument set is bound to a different framework");
    return std::any_of(extensions_.begin(), extensions_.end(), [&](const ArgSet& e) { return e == set; });
}

bool ExtensionSet::subset_of(const ExtensionSet& other) const {
    if (other.framework_ != framework_) throw BindingError("extension sets are bound to different frameworks");
    return std::all_of(extensions_.begin(), extensions_.end(), [&](const ArgSet& e) { return other.contains(e); });
}

bool ExtensionSet::operator==(const ExtensionSet& other) const {
    if (other.framework_ != framework_) throw BindingError("extension sets are bound to different frameworks");
    return extensions_ == other.extensions_;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void collect_conflict_free(const Framework& f, std::size_t i, Mask current, Mask blocked, std::vector<Mask>& out) {
    if (i == f.size()) {
        out.push_back(current);
        return;
    }
    collect_conflict_free(f, i + 1, current, blocked, out);
    const Mask bit = Mask{1} << i;
    if ((blocked & bit) == 0 && !f.attacks(i, i)) {
        collect_conflict_free(f, i + 1, current | bit, blocked | f.out_mask(i) | f.in_mask(i), out);
    }
}

Mask attackers_of(const Framework& f, Mask set) {
    Mask in = 0;
    for (Mask rest = set; rest != 0; rest &= rest - 1) {
        in |= f.in_mask(static_cast<std::size_t>(std::countr_zero(rest)));
    }
    return in;
}

bool admissible_cf(const Framework& f, Mask set) {
    return (attackers_of(f, set) & ~attacked_mask(f, set)) == 0;
}

// Arguments whose every attacker is attacked by the set.
Mask defended_by(const Framework& f, Mask set) {
    const Mask plus = attacked_mask(f, set);
    Mask defended = 0;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if ((f.in_mask(x) & ~plus) == 0) defended |= Mask{1} << x;
    }
    return defended;
}

bool complete_cf(const Framework& f, Mask set) {
    return admissible_cf(f, set) && (defended_by(f, set) & ~set) == 0;
}

bool stable_cf(const Framework& f, Mask set) { return attacked_mask(f, set) == (f.all_mask() & ~set); }

template <class Pred>
std::vector<Mask> filter(const std::vector<Mask>& candidates, unsigned jobs, Pred pred) {
    const std::size_t workers = detail::worker_count(candidates.size(), jobs);
    std::vector<std::vector<Mask>> parts(workers);
    detail::parallel_chunks(candidates.size(), jobs, [&](std::size_t begin, std::size_t end, std::size_t w) {
        for (std::size_t i = begin; i < end; ++i) {
            if (pred(candidates[i])) parts[w].push_back(candidates[i]);
        }
    });
    std::vector<Mask> out;
    for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<Mask> maximal_range(const Framework& f, const std::vector<Mask>& candidates) {
    std::vector<Mask> ranges;
    ranges.reserve(candidates.size());
    for (auto m : candidates) ranges.push_back(m | attacked_mask(f, m));
    std::vector<Mask> out;
    for (auto i : maximal_by_key(ranges)) out.push_back(candidates[i]);
    return out;
}

ExtensionSet to_extensions(const Framework& f, const std::vector<Mask>& masks) {
    std::vector<ArgSet> sets;
    sets.reserve(masks.size());
    for (auto m : masks) sets.push_back(f.make(m));
    return ExtensionSet(f, std::move(sets));
}

} // namespace

std::vector<Mask> conflict_free_masks(const Framework& f) {
    std::vector<Mask> out;
    collect_conflict_free(f, 0, 0, 0, out);
    return out;
}

std::vector<std::size_t> maximal_by_key(const std::vector<Mask>& keys) {
    std::vector<Mask> distinct(keys);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::stable_sort(distinct.begin(), distinct.end(),
                     [](Mask a, Mask b) { return std::popcount(a) > std::popcount(b); });
    // A strict superset has more members, so it is seen first; if it is not
    // maximal itself, a kept maximal key covers it.
    std::vector<Mask> maximal;
    for (auto key : distinct) {
        const bool dominated = std::any_of(maximal.begin(), maximal.end(),
                                           [key](Mask m) { return m != key && (key & ~m) == 0; });
        if (!dominated) maximal.push_back(key);
    }
    std::unordered_set<Mask> keep(maximal.begin(), maximal.end());
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
        if (keep.contains(keys[i])) out.push_back(i);
    }
    return out;
}

ExtensionSet enumerate(const Framework& f, Semantics sem, const EnumOptions& options) {
    if (sem == Semantics::PARA) {
        throw DispatchError("paracoherent extensions are computed by the stabilizer module");
    }
    require_within_cap(f.size(), options, "enumerate");
    const auto cf = conflict_free_masks(f);
    switch (sem) {
    case Semantics::CF: return to_extensions(f, cf);
    case Semantics::ADM: return to_extensions(f, filter(cf, options.jobs, [&](Mask m) { return admissible_cf(f, m); }));
    case Semantics::COMP: return to_extensions(f, filter(cf, options.jobs, [&](Mask m) { return complete_cf(f, m); }));
    case Semantics::STB: return to_extensions(f, filter(cf, options.jobs, [&](Mask m) { return stable_cf(f, m); }));
    case Semantics::SEM:
        return to_extensions(f, maximal_range(f, filter(cf, options.jobs, [&](Mask m) { return complete_cf(f, m); })));
    case Semantics::STAGE: return to_extensions(f, maximal_range(f, cf));
    case Semantics::PARA: break;
    }
    throw DispatchError("unknown semantics");
}

bool is_extension(const Framework& f, const ArgSet& set, Semantics sem, const EnumOptions& options) {
    f.check(set);
    const Mask m = set.bits();
    switch (sem) {
    case Semantics::CF: return conflict_free_mask(f, m);
    case Semantics::ADM: return conflict_free_mask(f, m) && admissible_cf(f, m);
    case Semantics::COMP: return conflict_free_mask(f, m) && complete_cf(f, m);
    case Semantics::STB: return conflict_free_mask(f, m) && stable_cf(f, m);
    case Semantics::SEM:
    case Semantics::STAGE: {
        const bool base = sem == Semantics::SEM ? conflict_free_mask(f, m) && complete_cf(f, m) : conflict_free_mask(f, m);
        return base && enumerate(f, sem, options).contains(set);
    }
    case Semantics::PARA: break;
    }
    throw DispatchError("paracoherent extensions are computed by the stabilizer module");
}

// ---------------------------------------------------------------------------
// Stable search

namespace {

struct StableSearch {
    const Framework& f;
    std::vector<Mask> found;

    // Every argument labelled out must keep at least one attacker that is
    // not labelled out.
    bool viable(Mask out) const {
        for (Mask rest = out; rest != 0; rest &= rest - 1) {
            const auto x = static_cast<std::size_t>(std::countr_zero(rest));
            if ((f.in_mask(x) & ~out) == 0) return false;
        }
        return true;
    }

    void run(std::size_t i, Mask in, Mask out) {
        if (i == f.size()) {
            found.push_back(in);
            return;
        }
        const Mask bit = Mask{1} << i;
        if ((out & bit) != 0) {
            run(i + 1, in, out);
            return;
        }
        if (!f.attacks(i, i)) {
            const Mask out_in = out | f.out_mask(i) | f.in_mask(i);
            if (viable(out_in)) run(i + 1, in | bit, out_in);
        }
        const Mask out_out = out | bit;
        if (viable(out_out)) run(i + 1, in, out_out);
    }
};

} // namespace

std::vector<Mask> stable_masks_by_search(const Framework& f) {
    StableSearch search{f, {}};
    search.run(0, 0, 0);
    return std::move(search.found);
}

} // namespace paraf
