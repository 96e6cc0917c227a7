#pragma once

#include <paraf/framework.hpp>
#include <paraf/semantics.hpp>

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace paraf {

/// Checks the semantic taxonomy, the stabilizer properties and the
/// agreement of every paracoherent route (direct, shadow framework, SST,
/// SEQ, MES) on one framework. Returns one line per violation.
std::vector<std::string> check_invariants(const Framework& f, const EnumOptions& options = {});

struct CrosscheckReport {
    std::size_t trials = 0;
    std::size_t violations = 0;
    /// "trial N (k args): message" for every violation found.
    std::vector<std::string> messages;
};

/// Random frameworks with 1..max_args arguments, fully determined by `seed`.
Framework crosscheck_framework(std::size_t max_args, std::uint64_t seed, std::size_t trial);

CrosscheckReport run_crosscheck(std::size_t max_args, std::size_t trials, std::uint64_t seed,
                                const EnumOptions& options = {},
                                const std::function<void(std::size_t, const Framework&)>& on_trial = {});

} // namespace paraf
