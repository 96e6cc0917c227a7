#pragma once

#include <paraf/framework.hpp>
#include <paraf/program.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace paraf {

enum class InputFormat { TGF, APX, LP };

std::optional<InputFormat> parse_format(std::string_view text);
/// From the file extension (.tgf, .apx, .lp) only.
std::optional<InputFormat> detect_format(std::string_view path);

/// Trivial Graph Format: one argument per line, a `#` line, then one
/// `source target` attack per line.
Framework parse_tgf(std::string_view text);
std::string render_tgf(const Framework& f);

/// ASPARTIX facts `arg(x).` and `att(x,y).` in any order, `%` comments.
/// Every attack endpoint must be declared somewhere in the input.
Framework parse_apx(std::string_view text);
std::string render_apx(const Framework& f);

/// Rules `a | b :- c, not d.`, facts `a.`, constraints `:- a, b.`, `%`
/// comments. Prefixes k__, l__, s__ and n__ decode to Belief, Aux, Shadow
/// and Complement atoms.
Program parse_program(std::string_view text);
/// One rule per line, in program order.
std::string render_program(const Program& program);

/// Whole file contents; InputError when unreadable.
std::string read_file(const std::string& path);

} // namespace paraf
