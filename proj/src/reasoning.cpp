#include <paraf/reasoning.hpp>

#include <paraf/stabilizer.hpp>

#include <algorithm>

namespace paraf {

std::optional<Task> parse_task(std::string_view text) {
    if (text == "EE") return Task::EE;
    if (text == "SE") return Task::SE;
    if (text == "DC") return Task::DC;
    if (text == "DS") return Task::DS;
    return std::nullopt;
}

std::string_view to_string(Task task) {
    switch (task) {
    case Task::EE: return "EE";
    case Task::SE: return "SE";
    case Task::DC: return "DC";
    case Task::DS: return "DS";
    }
    return "?";
}

ExtensionSet extensions(const Framework& f, Semantics sem, const EnumOptions& options) {
    if (sem == Semantics::PARA) return paracoherent_extensions(f, options);
    return enumerate(f, sem, options);
}

bool credulous(const Framework& f, Semantics sem, std::string_view argument, const EnumOptions& options) {
    const std::size_t index = f.index(argument);
    const auto found = extensions(f, sem, options);
    return std::any_of(found.begin(), found.end(), [index](const ArgSet& e) { return e.contains(index); });
}

bool skeptical(const Framework& f, Semantics sem, std::string_view argument, const EnumOptions& options) {
    const std::size_t index = f.index(argument);
    const auto found = extensions(f, sem, options);
    return std::all_of(found.begin(), found.end(), [index](const ArgSet& e) { return e.contains(index); });
}

} // namespace paraf
