#include <paraf/stabilizer.hpp>

#include "parallel.hpp"

#include <algorithm>
#include <unordered_set>

namespace paraf {

namespace {

struct Candidate {
    std::size_t arg;
    Mask cover;
};

// Enumerates the ⊆-minimal subsets of `pool` whose covers jointly contain
// `universe`. Branches on the lowest uncovered element; a candidate tried
// and abandoned at a branch point is excluded below it, so each cover is
// produced once.
class MinimalCovers {
public:
    MinimalCovers(Mask universe, std::vector<Candidate> pool) : universe_(universe), pool_(std::move(pool)) {}

    std::vector<Mask> run() {
        chosen_.clear();
        results_.clear();
        search(universe_, 0);
        std::sort(results_.begin(), results_.end());
        results_.erase(std::unique(results_.begin(), results_.end()), results_.end());
        return results_;
    }

private:
    bool all_have_private_elements() const {
        for (std::size_t i = 0; i < chosen_.size(); ++i) {
            Mask others = 0;
            for (std::size_t j = 0; j < chosen_.size(); ++j) {
                if (j != i) others |= pool_[chosen_[j]].cover;
            }
            if ((pool_[chosen_[i]].cover & universe_ & ~others) == 0) return false;
        }
        return true;
    }

    void search(Mask uncovered, Mask excluded) {
        if (uncovered == 0) {
            Mask set = 0;
            for (auto c : chosen_) set |= Mask{1} << pool_[c].arg;
            results_.push_back(set);
            return;
        }
        const Mask target = uncovered & (~uncovered + 1);
        Mask tried = 0;
        for (std::size_t c = 0; c < pool_.size(); ++c) {
            const Mask bit = Mask{1} << c;
            if ((pool_[c].cover & target) == 0 || ((excluded | tried) & bit) != 0) continue;
            chosen_.push_back(c);
            if (all_have_private_elements()) search(uncovered & ~pool_[c].cover, excluded | tried);
            chosen_.pop_back();
            tried |= bit;
        }
    }

    Mask universe_;
    std::vector<Candidate> pool_;
    std::vector<std::size_t> chosen_;
    std::vector<Mask> results_;
};

std::vector<Mask> minimal_stabilizer_masks(const Framework& f, Mask extension) {
    if (!conflict_free_mask(f, extension)) return {};
    const Mask range = extension | attacked_mask(f, extension);
    const Mask uncovered = f.all_mask() & ~range;
    if (uncovered == 0) return {0};
    std::vector<Candidate> pool;
    for (std::size_t x = 0; x < f.size(); ++x) {
        if ((f.out_mask(x) & extension) != 0) continue;
        const Mask cover = f.out_mask(x) & uncovered;
        if (cover != 0) pool.push_back({x, cover});
    }
    Mask coverable = 0;
    for (const auto& c : pool) coverable |= c.cover;
    if ((uncovered & ~coverable) != 0) return {};
    return MinimalCovers(uncovered, std::move(pool)).run();
}

// ⊆-minimal masks among `masks` (duplicates collapsed).
std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
    std::sort(masks.begin(), masks.end());
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
    std::stable_sort(masks.begin(), masks.end(), [](Mask a, Mask b) { return std::popcount(a) < std::popcount(b); });
    std::vector<Mask> minimal;
    for (auto m : masks) {
        const bool dominated =
            std::any_of(minimal.begin(), minimal.end(), [m](Mask k) { return k != m && (k & ~m) == 0; });
        if (!dominated) minimal.push_back(m);
    }
    return minimal;
}

struct LocalStabilizers {
    std::vector<Mask> extensions;
    std::vector<std::vector<Mask>> stabilizers;
};

LocalStabilizers local_stabilizers(const Framework& f, const EnumOptions& options) {
    require_within_cap(f.size(), options, "stabilizer enumeration");
    LocalStabilizers out;
    out.extensions = conflict_free_masks(f);
    out.stabilizers.resize(out.extensions.size());
    detail::parallel_chunks(out.extensions.size(), options.jobs, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t i = begin; i < end; ++i) {
            out.stabilizers[i] = minimal_stabilizer_masks(f, out.extensions[i]);
        }
    });
    return out;
}

std::vector<ArgSet> canonical_sets(const Framework& f, const std::vector<Mask>& masks) {
    std::vector<ArgSet> sets;
    sets.reserve(masks.size());
    for (auto m : masks) sets.push_back(f.make(m));
    std::sort(sets.begin(), sets.end(), [&f](const ArgSet& a, const ArgSet& b) { return f.canonical_less(a, b); });
    return sets;
}

} // namespace

bool SigmaF::is_minimal(const ArgSet& stabilizer) const {
    return std::any_of(minimal_elements.begin(), minimal_elements.end(),
                       [&](const ArgSet& m) { return m == stabilizer; });
}

bool is_stabilizer(const Framework& f, const ArgSet& stabilizer, const ArgSet& extension) {
    f.check(stabilizer);
    f.check(extension);
    const Mask covered = attacked_mask(f, extension.bits()) | attacked_mask(f, stabilizer.bits());
    return covered == (f.all_mask() & ~extension.bits());
}

std::vector<ArgSet> minimal_stabilizers_of(const Framework& f, const ArgSet& extension) {
    f.check(extension);
    return canonical_sets(f, minimal_stabilizer_masks(f, extension.bits()));
}

SigmaF global_minimal_stabilizers(const Framework& f, const EnumOptions& options) {
    const auto local = local_stabilizers(f, options);
    SigmaF sigma;
    std::vector<Mask> pooled;
    for (std::size_t i = 0; i < local.extensions.size(); ++i) {
        if (local.stabilizers[i].empty()) continue;
        pooled.insert(pooled.end(), local.stabilizers[i].begin(), local.stabilizers[i].end());
        sigma.per_extension.emplace(f.make(local.extensions[i]), canonical_sets(f, local.stabilizers[i]));
    }
    sigma.minimal_elements = canonical_sets(f, minimal_masks(std::move(pooled)));
    return sigma;
}

namespace {

std::vector<StabilizerWitness> witnesses_from(const Framework& f, const LocalStabilizers& local) {
    std::vector<Mask> pooled;
    for (const auto& s : local.stabilizers) pooled.insert(pooled.end(), s.begin(), s.end());
    const auto minimal = minimal_masks(std::move(pooled));
    const std::unordered_set<Mask> global(minimal.begin(), minimal.end());

    std::vector<StabilizerWitness> out;
    for (std::size_t i = 0; i < local.extensions.size(); ++i) {
        std::vector<Mask> hits;
        for (auto s : local.stabilizers[i]) {
            if (global.contains(s)) hits.push_back(s);
        }
        if (hits.empty()) continue;
        const auto ordered = canonical_sets(f, hits);
        out.push_back({f.make(local.extensions[i]), ordered.front()});
    }
    std::sort(out.begin(), out.end(), [&f](const StabilizerWitness& a, const StabilizerWitness& b) {
        return f.canonical_less(a.extension, b.extension);
    });
    return out;
}

} // namespace

std::vector<StabilizerWitness> paracoherent_witnesses(const Framework& f, const EnumOptions& options) {
    return witnesses_from(f, local_stabilizers(f, options));
}

ExtensionSet paracoherent_extensions(const Framework& f, const EnumOptions& options) {
    std::vector<ArgSet> sets;
    for (const auto& w : paracoherent_witnesses(f, options)) sets.push_back(w.extension);
    return ExtensionSet(f, std::move(sets));
}

// ---------------------------------------------------------------------------
// Shadow route

Framework guarded_shadow_framework(const Framework& f) {
    for (const auto& name : f.names()) {
        if (name.starts_with(kShadowPrefix) || name.starts_with(kGuardPrefix)) {
            throw InputError("argument '" + name + "' uses a reserved shadow/guard prefix");
        }
    }
    std::vector<std::size_t> attackers;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f.out_mask(a) != 0) attackers.push_back(a);
    }
    const std::size_t n = f.size();
    const std::size_t k = attackers.size();
    if (n + 2 * k > Framework::kMaxArguments) {
        throw SizeError("guarded shadow framework would have " + std::to_string(n + 2 * k) + " arguments; at most " +
                        std::to_string(Framework::kMaxArguments) + " are supported");
    }
    std::vector<std::string> names = f.names();
    for (auto a : attackers) names.push_back(std::string(kShadowPrefix) + f.name(a));
    for (auto a : attackers) names.push_back(std::string(kGuardPrefix) + f.name(a));

    std::vector<std::pair<std::size_t, std::size_t>> attacks = f.attacks();
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t shadow = n + j;
        const std::size_t guard = n + k + j;
        for (Mask rest = f.out_mask(attackers[j]); rest != 0; rest &= rest - 1) {
            attacks.emplace_back(shadow, static_cast<std::size_t>(std::countr_zero(rest)));
        }
        attacks.emplace_back(shadow, guard);
        attacks.emplace_back(guard, shadow);
    }
    return Framework(std::move(names), std::move(attacks));
}

ExtensionSet paracoherent_via_shadow(const Framework& f, const EnumOptions& options) {
    require_within_cap(f.size(), options, "shadow route");
    const Framework shadowed = guarded_shadow_framework(f);
    std::size_t shadows = 0;
    for (std::size_t a = 0; a < f.size(); ++a) {
        if (f.out_mask(a) != 0) ++shadows;
    }
    Mask shadow_part = 0;
    for (std::size_t j = 0; j < shadows; ++j) shadow_part |= Mask{1} << (f.size() + j);

    const auto stable = stable_masks_by_search(shadowed);
    std::vector<Mask> parts;
    parts.reserve(stable.size());
    for (auto m : stable) parts.push_back(m & shadow_part);
    const auto minimal = minimal_masks(parts);
    const std::unordered_set<Mask> keep(minimal.begin(), minimal.end());

    std::vector<ArgSet> sets;
    for (auto m : stable) {
        if (keep.contains(m & shadow_part)) sets.push_back(f.make(m & f.all_mask()));
    }
    return ExtensionSet(f, std::move(sets));
}

} // namespace paraf
