#include <paraf/crosscheck.hpp>

#include <paraf/generators.hpp>
#include <paraf/paraco_asp.hpp>
#include <paraf/reasoning.hpp>
#include <paraf/stabilizer.hpp>

#include <algorithm>
#include <random>

namespace paraf {

namespace {

std::string show(const Framework& f, const ExtensionSet& set) {
    std::string out = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i > 0) out += ",";
        out += f.format(set[i]);
    }
    return out + "}";
}

} // namespace

std::vector<std::string> check_invariants(const Framework& f, const EnumOptions& options) {
    std::vector<std::string> bad;
    auto subset = [&](const ExtensionSet& small, const ExtensionSet& large, std::string_view what) {
        if (!small.subset_of(large)) bad.push_back(std::string(what) + ": " + show(f, small) + " vs " + show(f, large));
    };
    auto equal = [&](const ExtensionSet& a, const ExtensionSet& b, std::string_view what) {
        if (!(a == b)) bad.push_back(std::string(what) + ": " + show(f, a) + " vs " + show(f, b));
    };

    const auto cf = enumerate(f, Semantics::CF, options);
    const auto adm = enumerate(f, Semantics::ADM, options);
    const auto comp = enumerate(f, Semantics::COMP, options);
    const auto stb = enumerate(f, Semantics::STB, options);
    const auto sem = enumerate(f, Semantics::SEM, options);
    const auto stage = enumerate(f, Semantics::STAGE, options);
    const auto para = paracoherent_extensions(f, options);

    subset(sem, comp, "sem within comp");
    subset(comp, adm, "comp within adm");
    subset(adm, cf, "adm within cf");
    subset(stage, cf, "stage within cf");
    subset(stb, sem, "stb within sem");
    subset(stb, stage, "stb within stage");
    subset(para, cf, "para within cf");
    subset(stb, para, "stb within para");
    if (!stb.empty()) equal(stb, para, "para equals stb when stb is nonempty");
    if (para.empty()) bad.push_back("para is empty");

    const auto sigma = global_minimal_stabilizers(f, options);
    const bool empty_minimal = sigma.is_minimal(f.none());
    if (empty_minimal != !stb.empty()) bad.push_back("empty stabilizer minimal iff stable extension exists");
    for (const auto& w : paracoherent_witnesses(f, options)) {
        if (!is_conflict_free(f, w.extension)) bad.push_back("witness not conflict-free: " + f.format(w.extension));
        if (w.extension.intersects(attacked_set(f, w.stabilizer))) {
            bad.push_back("stabilizer attacks its extension: " + f.format(w.extension));
        }
        if (!is_stabilizer(f, w.stabilizer, w.extension)) bad.push_back("witness is no stabilizer: " + f.format(w.extension));
    }

    equal(paracoherent_via_shadow(f, options), para, "shadow route");

    const Program p = af_to_program(f);
    const auto sst = sst_models(p);
    const auto seq = seq_models(p);
    if (projected_models(sst) != projected_models(seq)) bad.push_back("SST and SEQ true parts differ");
    if (projected_models(paracoherent_models(kappa_simplified(p))) != projected_models(sst)) {
        bad.push_back("simplified kappa changes SST true parts");
    }
    equal(extensions_from_models(f, projected_models(seq)), para, "SEQ route");
    equal(extensions_from_models(f, projected_models(mes_models(p))), para, "MES route");
    return bad;
}

Framework crosscheck_framework(std::size_t max_args, std::uint64_t seed, std::size_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::size_t> size(1, std::max<std::size_t>(1, max_args));
    std::uniform_real_distribution<double> density(0.1, 0.5);
    const std::size_t n = size(rng);
    const double p = density(rng);
    return gen_random(n, p, rng());
}

CrosscheckReport run_crosscheck(std::size_t max_args, std::size_t trials, std::uint64_t seed,
                                const EnumOptions& options,
                                const std::function<void(std::size_t, const Framework&)>& on_trial) {
    CrosscheckReport report;
    for (std::size_t t = 0; t < trials; ++t) {
        const Framework f = crosscheck_framework(max_args, seed, t);
        if (on_trial) on_trial(t, f);
        for (auto& message : check_invariants(f, options)) {
            report.messages.push_back("trial " + std::to_string(t) + " (" + std::to_string(f.size()) + " args): " + message);
            ++report.violations;
        }
        ++report.trials;
    }
    return report;
}

} // namespace paraf
