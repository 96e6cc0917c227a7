#include <paraf/paraco_asp.hpp>

#include <algorithm>
#include <map>

namespace paraf {

Program af_to_program(const Framework& f) {
    Program p;
    p.rules.reserve(f.size());
    for (std::size_t a = 0; a < f.size(); ++a) {
        std::vector<Atom> negative;
        for (std::size_t c = 0; c < f.size(); ++c) {
            if (f.attacks(c, a)) negative.push_back(Atom::plain(f.name(c)));
        }
        p.rules.emplace_back(std::vector<Atom>{Atom::plain(f.name(a))}, std::vector<Atom>{}, std::move(negative));
    }
    return p;
}

namespace {

bool all_plain(const std::vector<Atom>& atoms) {
    return std::all_of(atoms.begin(), atoms.end(), [](const Atom& a) { return a.kind == AtomKind::Plain; });
}

void require_plain(const Program& program, const char* what) {
    for (const auto& r : program.rules) {
        if (!all_plain(r.head()) || !all_plain(r.positive()) || !all_plain(r.negative())) {
            throw PreconditionError(std::string(what) + " expects a program over Plain atoms only");
        }
    }
}

void require_af_shaped(const Program& program, const char* what) {
    if (!is_af_shaped(program)) {
        throw PreconditionError(std::string(what) +
                                " expects an AF-shaped program (one normal rule per head atom, empty positive bodies)");
    }
}

std::vector<Atom> beliefs(const std::vector<Atom>& atoms) {
    std::vector<Atom> out;
    out.reserve(atoms.size());
    for (const auto& a : atoms) out.push_back(Atom::belief(a.name));
    return out;
}

} // namespace

bool is_af_shaped(const Program& program) {
    std::set<Atom> heads;
    for (const auto& r : program.rules) {
        if (r.head().size() != 1 || !r.positive().empty()) return false;
        if (!all_plain(r.head()) || !all_plain(r.negative())) return false;
        if (!heads.insert(r.head().front()).second) return false;
    }
    return true;
}

Program kappa_transform(const Program& program) {
    require_plain(program, "kappa_transform");
    Program out;
    for (std::size_t idx = 0; idx < program.rules.size(); ++idx) {
        const Rule& r = program.rules[idx];
        if (r.negative().empty()) {
            out.rules.push_back(r);
            continue;
        }
        const int id = static_cast<int>(idx + 1);
        const auto& heads = r.head();
        std::vector<Atom> lambdas;
        for (std::size_t i = 0; i < heads.size(); ++i) lambdas.push_back(Atom::aux(id, static_cast<int>(i + 1)));

        std::vector<Atom> disjunction = lambdas;
        for (const auto& c : r.negative()) disjunction.push_back(Atom::belief(c.name));
        out.rules.emplace_back(std::move(disjunction), r.positive(), std::vector<Atom>{});

        for (std::size_t i = 0; i < heads.size(); ++i) {
            out.rules.emplace_back(std::vector<Atom>{heads[i]}, std::vector<Atom>{lambdas[i]}, std::vector<Atom>{});
        }
        for (std::size_t i = 0; i < heads.size(); ++i) {
            for (const auto& c : r.negative()) {
                out.rules.emplace_back(std::vector<Atom>{}, std::vector<Atom>{lambdas[i], c}, std::vector<Atom>{});
            }
        }
        for (std::size_t i = 0; i < heads.size(); ++i) {
            for (std::size_t k = 0; k < heads.size(); ++k) {
                if (i == k) continue;
                out.rules.emplace_back(std::vector<Atom>{lambdas[i]}, std::vector<Atom>{heads[i], lambdas[k]},
                                       std::vector<Atom>{});
            }
        }
    }
    return out;
}

Program kappa_simplified(const Program& program) {
    require_af_shaped(program, "kappa_simplified");
    Program out;
    for (const auto& r : program.rules) {
        if (r.negative().empty()) {
            out.rules.push_back(r);
            continue;
        }
        const Atom& a = r.head().front();
        std::vector<Atom> disjunction{a};
        for (const auto& c : r.negative()) disjunction.push_back(Atom::belief(c.name));
        out.rules.emplace_back(std::move(disjunction), std::vector<Atom>{}, std::vector<Atom>{});
        for (const auto& c : r.negative()) {
            out.rules.emplace_back(std::vector<Atom>{}, std::vector<Atom>{a, c}, std::vector<Atom>{});
        }
    }
    return out;
}

Program ht_transform(const Program& program) {
    Program out = kappa_transform(program);
    for (const auto& a : program.plain_atoms()) {
        out.rules.emplace_back(std::vector<Atom>{Atom::belief(a.name)}, std::vector<Atom>{a}, std::vector<Atom>{});
    }
    for (const auto& r : program.rules) {
        std::vector<Atom> head = beliefs(r.head());
        const auto negated = beliefs(r.negative());
        head.insert(head.end(), negated.begin(), negated.end());
        out.rules.emplace_back(std::move(head), beliefs(r.positive()), std::vector<Atom>{});
    }
    return out;
}

std::set<Atom> gap(const Interpretation& interpretation) {
    std::set<Atom> out;
    for (const auto& a : interpretation) {
        if (a.kind == AtomKind::Belief && !interpretation.contains(Atom::plain(a.name))) out.insert(a);
    }
    return out;
}

std::vector<Interpretation> maximal_canonical(const std::vector<Interpretation>& models) {
    std::vector<std::set<Atom>> gaps;
    gaps.reserve(models.size());
    for (const auto& m : models) gaps.push_back(gap(m));
    std::vector<Interpretation> out;
    for (std::size_t i = 0; i < models.size(); ++i) {
        const bool dominated = std::any_of(gaps.begin(), gaps.end(), [&](const std::set<Atom>& other) {
            return other.size() < gaps[i].size() && std::includes(gaps[i].begin(), gaps[i].end(), other.begin(), other.end());
        });
        if (!dominated) out.push_back(models[i]);
    }
    return out;
}

std::vector<Interpretation> paracoherent_models(const Program& transformed) {
    std::vector<Interpretation> out;
    for (const auto& m : maximal_canonical(answer_sets(transformed))) {
        out.push_back(m.restricted({AtomKind::Plain, AtomKind::Belief}));
    }
    canonicalize(out);
    return out;
}

std::vector<Interpretation> sst_models(const Program& program) { return paracoherent_models(kappa_transform(program)); }

std::vector<Interpretation> seq_models(const Program& program) { return paracoherent_models(ht_transform(program)); }

std::vector<Interpretation> projected_models(const std::vector<Interpretation>& models) {
    std::vector<Interpretation> out;
    out.reserve(models.size());
    for (const auto& m : models) out.push_back(m.restricted({AtomKind::Plain}));
    canonicalize(out);
    return out;
}

std::vector<Interpretation> compact_models(const std::vector<Interpretation>& models) {
    std::vector<Interpretation> out;
    out.reserve(models.size());
    for (const auto& m : models) {
        Interpretation c = m.restricted({AtomKind::Plain});
        for (const auto& k : gap(m)) c.insert(k);
        out.push_back(std::move(c));
    }
    canonicalize(out);
    return out;
}

ExtensionSet extensions_from_models(const Framework& f, const std::vector<Interpretation>& models) {
    std::vector<ArgSet> sets;
    for (const auto& m : models) {
        Mask bits = 0;
        for (const auto& a : m) {
            if (a.kind != AtomKind::Plain) continue;
            bits |= Mask{1} << f.index(a.name);
        }
        sets.push_back(f.make(bits));
    }
    return ExtensionSet(f, std::move(sets));
}

Program externally_supported_program(const Program& program) {
    require_af_shaped(program, "externally_supported_program");
    Program out;
    std::vector<Atom> negated;
    for (const auto& r : program.rules) {
        std::vector<Atom> negative = r.negative();
        for (const auto& c : r.negative()) {
            negative.push_back(Atom::shadow(c.name));
            if (std::find(negated.begin(), negated.end(), c) == negated.end()) negated.push_back(c);
        }
        out.rules.emplace_back(r.head(), std::vector<Atom>{}, std::move(negative));
    }
    // Keep the choice pairs in signature order of the source program.
    const auto order = program.plain_atoms();
    for (const auto& a : order) {
        if (std::find(negated.begin(), negated.end(), a) == negated.end()) continue;
        out.rules.emplace_back(std::vector<Atom>{Atom::shadow(a.name)}, std::vector<Atom>{},
                               std::vector<Atom>{Atom::complement(a.name)});
        out.rules.emplace_back(std::vector<Atom>{Atom::complement(a.name)}, std::vector<Atom>{},
                               std::vector<Atom>{Atom::shadow(a.name)});
    }
    return out;
}

std::vector<Interpretation> mes_models(const Program& program) {
    const auto models = answer_sets(externally_supported_program(program));
    std::vector<Interpretation> shadows;
    shadows.reserve(models.size());
    for (const auto& m : models) shadows.push_back(m.restricted({AtomKind::Shadow}));

    std::vector<Interpretation> out;
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto& mine = shadows[i].atoms();
        const bool dominated = std::any_of(shadows.begin(), shadows.end(), [&](const Interpretation& other) {
            return other.size() < mine.size() && std::includes(mine.begin(), mine.end(), other.begin(), other.end());
        });
        if (!dominated) out.push_back(models[i].restricted({AtomKind::Plain, AtomKind::Shadow}));
    }
    canonicalize(out);
    return out;
}

} // namespace paraf
