#include <paraf/cli.hpp>

#include <paraf/crosscheck.hpp>
#include <paraf/error.hpp>
#include <paraf/generators.hpp>
#include <paraf/io.hpp>
#include <paraf/paraco_asp.hpp>
#include <paraf/reasoning.hpp>
#include <paraf/stabilizer.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace paraf {

namespace {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;

struct SolveArgs {
    std::string sem;
    std::string task;
    std::string argument;
    std::string format;
    std::size_t max_args = default_max_args();
    unsigned jobs = 1;
    std::string file;
};

struct TranslateArgs {
    std::string to;
    std::string format;
    std::string file;
};

struct GenArgs {
    std::string format = "apx";
    int n = 0;
    std::string prefs;
    std::string name;
    std::size_t size = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

struct XcheckArgs {
    std::size_t max_args = 8;
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool verbose = false;
};

// `--task DC a` carries its argument inline; CLI11 cannot tell it from FILE.
std::vector<std::string> split_task_argument(std::vector<std::string> args) {
    for (std::size_t i = 0; i + 2 < args.size(); ++i) {
        if (args[i] == "--task" && (args[i + 1] == "DC" || args[i + 1] == "DS") && !args[i + 2].starts_with("-")) {
            args.insert(args.begin() + static_cast<std::ptrdiff_t>(i) + 2, "--arg");
            i += 3;
        }
    }
    return args;
}

InputFormat resolve_format(const std::string& flag, const std::string& path) {
    if (!flag.empty()) {
        if (const auto f = parse_format(flag)) return *f;
        throw InputError("unknown format '" + flag + "'");
    }
    if (const auto f = detect_format(path)) return *f;
    throw InputError("cannot infer the format of '" + path + "'; pass --format");
}

Framework load_framework(const std::string& path, InputFormat format) {
    const std::string text = read_file(path);
    switch (format) {
    case InputFormat::TGF: return parse_tgf(text);
    case InputFormat::APX: return parse_apx(text);
    case InputFormat::LP: break;
    }
    throw InputError("'" + path + "' is a program, not a framework");
}

std::string render_framework(const Framework& f, const std::string& format) {
    if (format == "tgf") return render_tgf(f);
    if (format == "apx") return render_apx(f);
    throw InputError("unknown output format '" + format + "'");
}

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
    const auto sem = parse_semantics(a.sem);
    if (!sem) throw InputError("unknown semantics '" + a.sem + "'");
    const auto task = parse_task(a.task);
    if (!task) throw InputError("unknown task '" + a.task + "'");
    const bool decision = *task == Task::DC || *task == Task::DS;
    if (decision && a.argument.empty()) throw InputError("task " + a.task + " needs an argument");
    if (!decision && !a.argument.empty()) throw InputError("task " + a.task + " takes no argument");

    const Framework f = load_framework(a.file, resolve_format(a.format, a.file));
    const EnumOptions options{a.max_args, a.jobs};
    if (decision) f.index(a.argument);
    const auto found = extensions(f, *sem, options);

    switch (*task) {
    case Task::EE:
        for (const auto& e : found) out << f.format(e) << '\n';
        return kOk;
    case Task::SE:
        if (found.empty()) {
            out << "NO\n";
            return kNo;
        }
        out << f.format(found[0]) << '\n';
        return kOk;
    case Task::DC:
    case Task::DS: {
        const std::size_t index = f.index(a.argument);
        auto has = [index](const ArgSet& e) { return e.contains(index); };
        bool yes = false;
        if (*task == Task::DC) {
            yes = std::any_of(found.begin(), found.end(), has);
        } else {
            yes = std::all_of(found.begin(), found.end(), has);
            if (found.empty()) err << "# no extensions\n";
        }
        out << (yes ? "YES" : "NO") << '\n';
        return yes ? kOk : kNo;
    }
    }
    return kOk;
}

int run_translate(const TranslateArgs& a, std::ostream& out) {
    const InputFormat format = resolve_format(a.format, a.file);
    if (a.to == "shadow-af") {
        out << render_apx(guarded_shadow_framework(load_framework(a.file, format)));
        return kOk;
    }
    const Program program =
        format == InputFormat::LP ? parse_program(read_file(a.file)) : af_to_program(load_framework(a.file, format));
    if (a.to == "lp") {
        out << render_program(program);
    } else if (a.to == "kappa") {
        out << render_program(kappa_transform(program));
    } else if (a.to == "kappa-simple") {
        out << render_program(kappa_simplified(program));
    } else if (a.to == "ht") {
        out << render_program(ht_transform(program));
    } else if (a.to == "mes") {
        out << render_program(externally_supported_program(program));
    } else {
        throw InputError("unknown translation target '" + a.to + "'");
    }
    return kOk;
}

int run_xcheck(const XcheckArgs& a, std::ostream& out) {
    const EnumOptions options{std::max(a.max_args, default_max_args()), a.jobs};
    const auto report = run_crosscheck(a.max_args, a.trials, a.seed, options,
                                       [&](std::size_t t, const Framework& f) {
                                           if (a.verbose) out << "# trial " << t << ": " << f.size() << " args\n";
                                       });
    for (const auto& line : report.messages) out << line << '\n';
    out << "xcheck: " << report.trials << " trials, " << report.violations << " violations\n";
    return report.violations == 0 ? kOk : kNo;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Paracoherent argumentation toolkit", "paraf"};
    app.require_subcommand(1);

    SolveArgs solve;
    auto* solve_cmd = app.add_subcommand("solve", "Enumerate or query extensions of a framework");
    solve_cmd->add_option("--sem", solve.sem, "cf|adm|com|stb|sem|stage|para")->required();
    solve_cmd->add_option("--task", solve.task, "EE|SE|DC <arg>|DS <arg>")->required();
    solve_cmd->add_option("--arg", solve.argument, "Query argument for DC/DS");
    solve_cmd->add_option("--format", solve.format, "tgf|apx (default: from the extension)");
    solve_cmd->add_option("--max-args", solve.max_args, "Enumeration cap")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--jobs", solve.jobs, "Worker threads")->check(CLI::PositiveNumber);
    solve_cmd->add_option("FILE", solve.file, "Framework file")->required();

    TranslateArgs translate;
    auto* translate_cmd = app.add_subcommand("translate", "Print a program or framework derived from the input");
    translate_cmd->add_option("--to", translate.to, "lp|kappa|kappa-simple|ht|mes|shadow-af")->required();
    translate_cmd->add_option("--format", translate.format, "tgf|apx|lp (default: from the extension)");
    translate_cmd->add_option("FILE", translate.file, "Framework or program file")->required();

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "Print a generated framework");
    gen_cmd->add_option("--format", gen.format, "apx|tgf")->capture_default_str();
    gen_cmd->require_subcommand(1);
    auto* gen_star = gen_cmd->add_subcommand("radial-star", "n-radial star polygon");
    gen_star->add_option("N", gen.n)->required();
    auto* gen_cycle_cmd = gen_cmd->add_subcommand("cycle", "Odd or even attack cycle");
    gen_cycle_cmd->add_option("N", gen.n)->required();
    auto* gen_srp_cmd = gen_cmd->add_subcommand("srp", "Roommate framework from a preference file");
    gen_srp_cmd->add_option("PREFS", gen.prefs)->required();
    auto* gen_fixture = gen_cmd->add_subcommand("fixture", "Named worked example");
    gen_fixture->add_option("NAME", gen.name)->required();
    auto* gen_random_cmd = gen_cmd->add_subcommand("random", "Random framework");
    gen_random_cmd->add_option("N", gen.size)->required();
    gen_random_cmd->add_option("P", gen.p)->required()->check(CLI::Range(0.0, 1.0));
    gen_random_cmd->add_option("SEED", gen.seed)->required();

    XcheckArgs xcheck;
    auto* xcheck_cmd = app.add_subcommand("xcheck", "Check invariants on random frameworks");
    xcheck_cmd->add_option("--max-args", xcheck.max_args)->check(CLI::Range(1, 24))->capture_default_str();
    xcheck_cmd->add_option("--trials", xcheck.trials)->capture_default_str();
    xcheck_cmd->add_option("--seed", xcheck.seed)->capture_default_str();
    xcheck_cmd->add_option("--jobs", xcheck.jobs)->check(CLI::PositiveNumber);
    xcheck_cmd->add_flag("--verbose", xcheck.verbose);

    std::vector<std::string> argv = split_task_argument(args);
    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(std::move(argv));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*solve_cmd) return run_solve(solve, out, err);
        if (*translate_cmd) return run_translate(translate, out);
        if (*xcheck_cmd) return run_xcheck(xcheck, out);
        if (*gen_cmd) {
            Framework f;
            if (*gen_star) f = gen_radial_star(gen.n);
            else if (*gen_cycle_cmd) f = gen_cycle(gen.n);
            else if (*gen_srp_cmd) f = gen_srp(parse_preferences(read_file(gen.prefs)));
            else if (*gen_fixture) f = fixture(gen.name);
            else f = gen_random(gen.size, gen.p, gen.seed);
            out << render_framework(f, gen.format);
            return kOk;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace paraf
