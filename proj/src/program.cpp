#include <paraf/program.hpp>

#include <paraf/framework.hpp>

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <optional>

namespace paraf {

// ---------------------------------------------------------------------------
// Atoms and rules

std::string Atom::text() const {
    switch (kind) {
    case AtomKind::Plain: return name;
    case AtomKind::Belief: return "k__" + name;
    case AtomKind::Aux: return "l__" + std::to_string(rule) + "_" + std::to_string(position);
    case AtomKind::Shadow: return "s__" + name;
    case AtomKind::Complement: return "n__" + name;
    }
    return name;
}

namespace {

bool has_reserved_prefix(std::string_view text) {
    for (std::string_view prefix : {"k__", "l__", "s__", "n__"}) {
        if (text.starts_with(prefix)) return true;
    }
    return false;
}

std::optional<int> positive_int(std::string_view text) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || value <= 0) return std::nullopt;
    return value;
}

} // namespace

Atom decode_atom(std::string_view text) {
    if (!is_valid_name(text)) throw InputError("invalid atom '" + std::string(text) + "'");
    if (!has_reserved_prefix(text)) return Atom::plain(std::string(text));

    const std::string_view rest = text.substr(3);
    if (text.starts_with("l__")) {
        const auto split = rest.find('_');
        if (split != std::string_view::npos) {
            const auto rule = positive_int(rest.substr(0, split));
            const auto position = positive_int(rest.substr(split + 1));
            if (rule && position) return Atom::aux(*rule, *position);
        }
        throw InputError("malformed auxiliary atom '" + std::string(text) + "' (expected l__<rule>_<position>)");
    }
    if (rest.empty() || has_reserved_prefix(rest)) {
        throw InputError("reserved prefix misused in atom '" + std::string(text) + "'");
    }
    if (text.starts_with("k__")) return Atom::belief(std::string(rest));
    if (text.starts_with("s__")) return Atom::shadow(std::string(rest));
    return Atom::complement(std::string(rest));
}

namespace {

std::vector<Atom> dedupe(std::vector<Atom> atoms) {
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (auto& a : atoms) {
        if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
    }
    return out;
}

} // namespace

Rule::Rule(std::vector<Atom> head, std::vector<Atom> positive, std::vector<Atom> negative)
    : head_(dedupe(std::move(head))), positive_(dedupe(std::move(positive))), negative_(dedupe(std::move(negative))) {}

// ---------------------------------------------------------------------------
// Program

std::vector<Atom> Program::signature() const {
    std::vector<Atom> order;
    std::set<Atom> seen;
    auto visit = [&](const Atom& a) {
        if (seen.insert(a).second) order.push_back(a);
    };
    for (const auto& r : rules) {
        for (const auto& a : r.head()) visit(a);
        for (const auto& a : r.positive()) visit(a);
        for (const auto& a : r.negative()) visit(a);
    }
    std::stable_sort(order.begin(), order.end(), [](const Atom& a, const Atom& b) { return a.kind < b.kind; });
    return order;
}

std::vector<Atom> Program::plain_atoms() const {
    auto sig = signature();
    std::erase_if(sig, [](const Atom& a) { return a.kind != AtomKind::Plain; });
    return sig;
}

bool Program::has_negation() const {
    return std::any_of(rules.begin(), rules.end(), [](const Rule& r) { return !r.negative().empty(); });
}

bool Program::operator==(const Program& other) const {
    auto lhs = rules;
    auto rhs = other.rules;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Interpretations

Interpretation Interpretation::restricted(std::initializer_list<AtomKind> kinds) const {
    std::set<Atom> kept;
    for (const auto& a : atoms_) {
        if (std::find(kinds.begin(), kinds.end(), a.kind) != kinds.end()) kept.insert(a);
    }
    return Interpretation(std::move(kept));
}

std::string Interpretation::text() const {
    std::string out = "{";
    bool first = true;
    for (const auto& a : atoms_) {
        if (!first) out += ',';
        out += a.text();
        first = false;
    }
    return out + "}";
}

void canonicalize(std::vector<Interpretation>& models) {
    std::sort(models.begin(), models.end(), [](const Interpretation& a, const Interpretation& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    models.erase(std::unique(models.begin(), models.end()), models.end());
}

bool satisfies(const Interpretation& interpretation, const Program& program) {
    auto holds = [&](const Atom& a) { return interpretation.contains(a); };
    for (const auto& r : program.rules) {
        const bool body = std::all_of(r.positive().begin(), r.positive().end(), holds) &&
                          std::none_of(r.negative().begin(), r.negative().end(), holds);
        if (body && std::none_of(r.head().begin(), r.head().end(), holds)) return false;
    }
    return true;
}

Program gl_reduct(const Program& program, const Interpretation& interpretation) {
    Program out;
    for (const auto& r : program.rules) {
        const bool blocked = std::any_of(r.negative().begin(), r.negative().end(),
                                         [&](const Atom& a) { return interpretation.contains(a); });
        if (!blocked) out.rules.emplace_back(r.head(), r.positive(), std::vector<Atom>{});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Model search

namespace {

using Bits = std::uint64_t;

struct MaskRule {
    Bits head = 0;
    Bits positive = 0;
    Bits negative = 0;
};

// A clause holds when some atom of `pos` is true or some atom of `neg` is false.
struct Clause {
    Bits pos = 0;
    Bits neg = 0;
};

struct Compiled {
    std::vector<Atom> atoms;
    std::map<Atom, std::size_t> index;
    std::vector<MaskRule> rules;

    Bits all() const { return atoms.size() >= 64 ? ~Bits{0} : (Bits{1} << atoms.size()) - 1; }

    Interpretation decode(Bits bits) const {
        std::set<Atom> out;
        for (Bits rest = bits; rest != 0; rest &= rest - 1) out.insert(atoms[std::countr_zero(rest)]);
        return Interpretation(std::move(out));
    }
};

Compiled compile(const Program& program) {
    Compiled c;
    c.atoms = program.signature();
    if (c.atoms.size() > kMaxAtoms) {
        throw SizeError("program has " + std::to_string(c.atoms.size()) + " atoms; the model search supports at most " +
                        std::to_string(kMaxAtoms));
    }
    for (std::size_t i = 0; i < c.atoms.size(); ++i) c.index.emplace(c.atoms[i], i);
    auto bits = [&](const std::vector<Atom>& atoms) {
        Bits out = 0;
        for (const auto& a : atoms) out |= Bits{1} << c.index.at(a);
        return out;
    };
    for (const auto& r : program.rules) c.rules.push_back({bits(r.head()), bits(r.positive()), bits(r.negative())});
    return c;
}

// Clause propagation over a partial assignment (true, false). Returns false
// on conflict.
bool propagate_clauses(const std::vector<Clause>& clauses, Bits& t, Bits& f) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& cl : clauses) {
            if ((cl.pos & t) != 0 || (cl.neg & f) != 0) continue;
            const Bits open_pos = cl.pos & ~f;
            const Bits open_neg = cl.neg & ~t;
            const int open = std::popcount(open_pos) + std::popcount(open_neg);
            if (open == 0) return false;
            if (open == 1) {
                if (open_pos != 0) t |= open_pos;
                else f |= open_neg;
                changed = true;
            }
        }
    }
    return true;
}

// Some model of `clauses` over `all`, preferring false. Atoms in `f` are
// fixed false.
std::optional<Bits> find_model(const std::vector<Clause>& clauses, Bits all, Bits t, Bits f) {
    if (!propagate_clauses(clauses, t, f)) return std::nullopt;
    const Bits open = all & ~(t | f);
    if (open == 0) return t;
    const Bits var = open & (~open + 1);
    if (auto m = find_model(clauses, all, t, f | var)) return m;
    return find_model(clauses, all, t | var, f);
}

std::vector<Clause> positive_clauses(const std::vector<MaskRule>& rules) {
    std::vector<Clause> out;
    out.reserve(rules.size());
    for (const auto& r : rules) out.push_back({r.head, r.positive});
    return out;
}

// Whether `m` is a ⊆-minimal model of the negation-free `clauses`.
bool is_minimal_model(const std::vector<Clause>& clauses, Bits all, Bits m) {
    auto probe = clauses;
    probe.push_back({0, m});
    return !find_model(probe, all, 0, all & ~m).has_value();
}

std::vector<Bits> minimal_model_masks(const std::vector<Clause>& base, Bits all) {
    std::vector<Bits> found;
    auto clauses = base;
    while (auto model = find_model(clauses, all, 0, 0)) {
        Bits m = *model;
        // Shrink to a minimal model below the one found.
        while (true) {
            auto probe = base;
            probe.push_back({0, m});
            auto smaller = find_model(probe, all, 0, all & ~m);
            if (!smaller) break;
            m = *smaller;
        }
        found.push_back(m);
        // Every superset of a minimal model is non-minimal.
        clauses.push_back({0, m});
    }
    return found;
}

// Enumerates supported classical models and keeps those that are minimal
// models of their own reduct.
class AnswerSetSearch {
public:
    explicit AnswerSetSearch(const Compiled& program) : p_(program), all_(program.all()) {
        for (const auto& r : p_.rules) model_clauses_.push_back({r.head | r.negative, r.positive});
    }

    std::vector<Bits> run() {
        found_.clear();
        search(0, 0);
        return found_;
    }

private:
    bool supportable(std::size_t atom, Bits t, Bits f) const {
        const Bits bit = Bits{1} << atom;
        for (const auto& r : p_.rules) {
            if ((r.head & bit) == 0) continue;
            if ((r.positive & f) != 0 || (r.negative & t) != 0) continue;
            if ((r.head & ~bit & t) != 0) continue;
            return true;
        }
        return false;
    }

    bool propagate(Bits& t, Bits& f) const {
        while (true) {
            if (!propagate_clauses(model_clauses_, t, f)) return false;
            bool changed = false;
            for (std::size_t a = 0; a < p_.atoms.size(); ++a) {
                const Bits bit = Bits{1} << a;
                if ((f & bit) != 0) continue;
                if (!supportable(a, t, f)) {
                    if ((t & bit) != 0) return false;
                    f |= bit;
                    changed = true;
                }
            }
            if (!changed) return true;
        }
    }

    bool reduct_minimal(Bits m) const {
        std::vector<Clause> reduct;
        for (const auto& r : p_.rules) {
            if ((r.negative & m) == 0) reduct.push_back({r.head, r.positive});
        }
        return is_minimal_model(reduct, all_, m);
    }

    void search(Bits t, Bits f) {
        if (!propagate(t, f)) return;
        const Bits open = all_ & ~(t | f);
        if (open == 0) {
            if (reduct_minimal(t)) found_.push_back(t);
            return;
        }
        const Bits var = open & (~open + 1);
        search(t, f | var);
        search(t | var, f);
    }

    const Compiled& p_;
    Bits all_;
    std::vector<Clause> model_clauses_;
    std::vector<Bits> found_;
};

std::vector<Interpretation> decode_all(const Compiled& c, const std::vector<Bits>& masks) {
    std::vector<Interpretation> out;
    out.reserve(masks.size());
    for (auto m : masks) out.push_back(c.decode(m));
    canonicalize(out);
    return out;
}

} // namespace

std::vector<Interpretation> minimal_models(const Program& program) {
    if (program.has_negation()) throw PreconditionError("minimal_models requires a negation-free program");
    const auto c = compile(program);
    return decode_all(c, minimal_model_masks(positive_clauses(c.rules), c.all()));
}

std::vector<Interpretation> answer_sets(const Program& program) {
    const auto c = compile(program);
    if (!program.has_negation()) {
        return decode_all(c, minimal_model_masks(positive_clauses(c.rules), c.all()));
    }
    AnswerSetSearch search(c);
    return decode_all(c, search.run());
}

} // namespace paraf
