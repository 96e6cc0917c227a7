#pragma once

#include <paraf/framework.hpp>
#include <paraf/semantics.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paraf {

enum class Task { EE, SE, DC, DS };

std::optional<Task> parse_task(std::string_view text);
std::string_view to_string(Task task);

/// σ-extensions for any of the seven semantics; PARA goes through the
/// stabilizer module.
ExtensionSet extensions(const Framework& f, Semantics sem, const EnumOptions& options = {});

/// Whether the argument belongs to some σ-extension. False when there are none.
bool credulous(const Framework& f, Semantics sem, std::string_view argument, const EnumOptions& options = {});

/// Whether the argument belongs to every σ-extension. Vacuously true when
/// there are none.
bool skeptical(const Framework& f, Semantics sem, std::string_view argument, const EnumOptions& options = {});

} // namespace paraf
