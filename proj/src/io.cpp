#include <paraf/io.hpp>

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace paraf {

std::optional<InputFormat> parse_format(std::string_view text) {
    if (text == "tgf") return InputFormat::TGF;
    if (text == "apx") return InputFormat::APX;
    if (text == "lp") return InputFormat::LP;
    return std::nullopt;
}

std::optional<InputFormat> detect_format(std::string_view path) {
    if (path.ends_with(".tgf")) return InputFormat::TGF;
    if (path.ends_with(".apx")) return InputFormat::APX;
    if (path.ends_with(".lp")) return InputFormat::LP;
    return std::nullopt;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

} // namespace

// ---------------------------------------------------------------------------
// TGF

Framework parse_tgf(std::string_view text) {
    RawFramework raw;
    std::unordered_map<std::string, std::size_t> declared;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    bool in_attacks = false;
    while (std::getline(in, line)) {
        ++number;
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (!in_attacks) {
            if (tokens.front() == "#") {
                in_attacks = true;
                continue;
            }
            const auto& name = tokens.front();
            if (!is_valid_name(name)) throw ParseError(number, "invalid argument name '" + name + "'");
            if (!declared.emplace(name, number).second) throw ParseError(number, "duplicate argument '" + name + "'");
            raw.args.push_back(name);
            continue;
        }
        if (tokens.size() != 2) throw ParseError(number, "expected 'source target'");
        for (const auto& endpoint : tokens) {
            if (!declared.contains(endpoint)) throw ParseError(number, "unknown argument '" + endpoint + "'");
        }
        raw.attacks.emplace_back(tokens[0], tokens[1]);
    }
    if (!in_attacks) throw ParseError(number == 0 ? 1 : number, "missing '#' separator");
    try {
        return Framework(raw);
    } catch (const SizeError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(number, e.what());
    }
}

std::string render_tgf(const Framework& f) {
    std::string out;
    for (const auto& name : f.names()) out += name + "\n";
    out += "#\n";
    for (const auto& [from, to] : f.attacks()) out += f.name(from) + " " + f.name(to) + "\n";
    return out;
}

// ---------------------------------------------------------------------------
// APX

namespace {

// Character cursor with line tracking and `%` comments.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                if (c == '\n') ++line_;
                ++pos_;
            } else {
                break;
            }
        }
    }

    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }

    bool peek_is(std::string_view token) {
        skip_space();
        return text_.substr(pos_).starts_with(token);
    }

    bool accept(std::string_view token) {
        if (!peek_is(token)) return false;
        pos_ += token.size();
        return true;
    }

    void expect(std::string_view token) {
        if (!accept(token)) throw ParseError(line_, "expected '" + std::string(token) + "'");
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) break;
            ++pos_;
        }
        if (start == pos_) throw ParseError(line_, "expected an identifier");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::size_t line() const noexcept { return line_; }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
};

} // namespace

Framework parse_apx(std::string_view text) {
    Cursor cur(text);
    RawFramework raw;
    std::set<std::string> declared;
    struct PendingAttack {
        std::string from;
        std::string to;
        std::size_t line;
    };
    std::vector<PendingAttack> pending;
    while (!cur.at_end()) {
        const std::size_t line = cur.line();
        const std::string head = cur.identifier();
        if (head == "arg") {
            cur.expect("(");
            const std::string name = cur.identifier();
            cur.expect(")");
            cur.expect(".");
            if (!declared.insert(name).second) throw ParseError(line, "duplicate argument '" + name + "'");
            raw.args.push_back(name);
        } else if (head == "att") {
            cur.expect("(");
            std::string from = cur.identifier();
            cur.expect(",");
            std::string to = cur.identifier();
            cur.expect(")");
            cur.expect(".");
            pending.push_back({std::move(from), std::move(to), line});
        } else {
            throw ParseError(line, "unknown statement '" + head + "'");
        }
    }
    for (const auto& att : pending) {
        for (const auto* endpoint : {&att.from, &att.to}) {
            if (!declared.contains(*endpoint)) {
                throw ParseError(att.line, "attack mentions undeclared argument '" + *endpoint + "'");
            }
        }
        raw.attacks.emplace_back(att.from, att.to);
    }
    try {
        return Framework(raw);
    } catch (const SizeError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(cur.line(), e.what());
    }
}

std::string render_apx(const Framework& f) {
    std::string out;
    for (const auto& name : f.names()) out += "arg(" + name + ").\n";
    for (const auto& [from, to] : f.attacks()) out += "att(" + f.name(from) + "," + f.name(to) + ").\n";
    return out;
}

// ---------------------------------------------------------------------------
// Logic programs

namespace {

Atom read_atom(Cursor& cur) {
    const std::size_t line = cur.line();
    const std::string token = cur.identifier();
    if (token == "not") throw ParseError(line, "'not' is not an atom");
    try {
        return decode_atom(token);
    } catch (const InputError& e) {
        throw ParseError(line, e.what());
    }
}

} // namespace

Program parse_program(std::string_view text) {
    Cursor cur(text);
    Program program;
    while (!cur.at_end()) {
        const std::size_t line = cur.line();
        std::vector<Atom> head;
        std::vector<Atom> positive;
        std::vector<Atom> negative;
        if (!cur.peek_is(":-")) {
            head.push_back(read_atom(cur));
            while (cur.accept("|")) head.push_back(read_atom(cur));
        }
        if (cur.accept(":-")) {
            do {
                const std::size_t at = cur.line();
                const std::string word = cur.identifier();
                if (word == "not") {
                    negative.push_back(read_atom(cur));
                    continue;
                }
                try {
                    positive.push_back(decode_atom(word));
                } catch (const InputError& e) {
                    throw ParseError(at, e.what());
                }
            } while (cur.accept(","));
            if (positive.empty() && negative.empty()) throw ParseError(line, "empty rule body");
        }
        cur.expect(".");
        if (head.empty() && positive.empty() && negative.empty()) throw ParseError(line, "empty rule");
        program.rules.emplace_back(std::move(head), std::move(positive), std::move(negative));
    }
    return program;
}

std::string render_program(const Program& program) {
    std::string out;
    for (const auto& r : program.rules) {
        std::string line;
        for (std::size_t i = 0; i < r.head().size(); ++i) {
            if (i > 0) line += " | ";
            line += r.head()[i].text();
        }
        if (!r.positive().empty() || !r.negative().empty() || r.head().empty()) {
            line += line.empty() ? ":-" : " :-";
            bool first = true;
            for (const auto& a : r.positive()) {
                line += first ? " " : ", ";
                line += a.text();
                first = false;
            }
            for (const auto& a : r.negative()) {
                line += first ? " not " : ", not ";
                line += a.text();
                first = false;
            }
        }
        out += line + ".\n";
    }
    return out;
}

} // namespace paraf
