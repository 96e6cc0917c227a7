#include <paraf/generators.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace paraf {

namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

Framework from_names(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& attacks) {
    RawFramework raw{std::move(names), attacks};
    return Framework(raw);
}

} // namespace

// ---------------------------------------------------------------------------
// Preference profiles

PreferenceProfile parse_preferences(std::string_view text) {
    PreferenceProfile profile;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (const auto cut = line.find_first_of("%#"); cut != std::string::npos) line.erase(cut);
        const std::string body = trim(line);
        if (body.empty()) continue;
        const auto colon = body.find(':');
        if (colon == std::string::npos) throw ParseError(number, "expected 'name: p1 > p2 > ...'");
        PreferenceProfile::Person person;
        person.name = trim(std::string_view(body).substr(0, colon));
        if (!is_valid_name(person.name) || person.name == "alone") {
            throw ParseError(number, "invalid person name '" + person.name + "'");
        }
        const std::string rest = trim(std::string_view(body).substr(colon + 1));
        if (!rest.empty()) {
            std::size_t start = 0;
            while (true) {
                const auto gt = rest.find('>', start);
                const std::string item = trim(std::string_view(rest).substr(start, gt == std::string::npos ? std::string::npos : gt - start));
                if (!is_valid_name(item)) throw ParseError(number, "invalid ranking entry '" + item + "'");
                if (person.alone) throw ParseError(number, "'alone' must be the last option");
                if (item == "alone") person.alone = true;
                else person.ranking.push_back(item);
                if (gt == std::string::npos) break;
                start = gt + 1;
            }
        }
        profile.persons.push_back(std::move(person));
    }
    try {
        check_profile(profile);
    } catch (const ParseError&) {
        throw;
    } catch (const InputError& e) {
        throw ParseError(number, e.what());
    }
    return profile;
}

void check_profile(const PreferenceProfile& profile) {
    std::set<std::string> names;
    for (const auto& p : profile.persons) {
        if (!is_valid_name(p.name) || p.name == "alone") throw InputError("invalid person name '" + p.name + "'");
        if (!names.insert(p.name).second) throw InputError("person '" + p.name + "' declared twice");
    }
    for (const auto& p : profile.persons) {
        std::set<std::string> ranked;
        for (const auto& q : p.ranking) {
            if (q == p.name) throw InputError("person '" + p.name + "' ranks themselves");
            if (!names.contains(q)) throw InputError("person '" + p.name + "' ranks unknown person '" + q + "'");
            if (!ranked.insert(q).second) throw InputError("person '" + p.name + "' ranks '" + q + "' twice");
        }
    }
}

Framework gen_srp(const PreferenceProfile& profile) {
    check_profile(profile);
    std::unordered_map<std::string, const PreferenceProfile::Person*> by_name;
    for (const auto& p : profile.persons) by_name.emplace(p.name, &p);

    auto rank_of = [&](const std::string& who, const std::string& partner) -> std::ptrdiff_t {
        const auto& ranking = by_name.at(who)->ranking;
        const auto it = std::find(ranking.begin(), ranking.end(), partner);
        return it == ranking.end() ? -1 : it - ranking.begin();
    };

    struct Pair {
        std::string x;
        std::string y;
        std::string name;
    };
    std::vector<Pair> pairs;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& p : profile.persons) {
        for (const auto& q : p.ranking) {
            auto key = std::minmax(p.name, q);
            if (!seen.emplace(key.first, key.second).second) continue;
            const bool short_names = key.first.size() == 1 && key.second.size() == 1;
            pairs.push_back({key.first, key.second, short_names ? key.first + key.second : key.first + "_" + key.second});
        }
    }

    std::vector<std::string> names;
    for (const auto& pair : pairs) names.push_back(pair.name);
    for (const auto& p : profile.persons) {
        if (p.alone) names.push_back(p.name);
    }

    // `who` prefers partner `better` over partner `worse`.
    auto prefers = [&](const std::string& who, const std::string& better, const std::string& worse) {
        const auto rb = rank_of(who, better);
        const auto rw = rank_of(who, worse);
        return rb >= 0 && (rw < 0 || rb < rw);
    };
    auto partner = [](const Pair& pair, const std::string& who) { return pair.x == who ? pair.y : pair.x; };

    std::vector<std::pair<std::string, std::string>> attacks;
    for (const auto& p : pairs) {
        for (const auto& q : pairs) {
            if (&p == &q) continue;
            for (const auto& shared : {p.x, p.y}) {
                if (shared != q.x && shared != q.y) continue;
                if (prefers(shared, partner(p, shared), partner(q, shared))) attacks.emplace_back(p.name, q.name);
            }
        }
        for (const auto& who : {p.x, p.y}) {
            if (by_name.at(who)->alone) attacks.emplace_back(p.name, who);
        }
    }
    return from_names(std::move(names), attacks);
}

PreferenceProfile srp_a_profile() {
    return parse_preferences("m: j > a > s\n"
                             "j: r > m > s\n"
                             "r: a > j > s\n"
                             "a: m > r > s\n"
                             "s: alone\n");
}

PreferenceProfile srp_b_profile() {
    return parse_preferences("m: j > a > s\n"
                             "j: a > m > s\n"
                             "a: m > j > s\n"
                             "s: alone\n");
}

// ---------------------------------------------------------------------------
// Parametric families

Framework gen_radial_star(int n) {
    if (n < 3) throw InputError("radial star polygon needs n >= 3");
    const auto count = static_cast<std::size_t>(n);
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= count; ++i) names.push_back("a" + std::to_string(i));
    for (std::size_t i = 1; i <= count; ++i) names.push_back("b" + std::to_string(i));
    names.push_back("c");
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    const std::size_t c = 2 * count;
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t next = (i + 1) % count;
        attacks.emplace_back(i, next);
        attacks.emplace_back(i, count + i);
        attacks.emplace_back(i, count + next);
        attacks.emplace_back(count + i, c);
    }
    return Framework(std::move(names), std::move(attacks));
}

Framework gen_cycle(int n) {
    if (n < 1) throw InputError("cycle needs n >= 1");
    const auto count = static_cast<std::size_t>(n);
    std::vector<std::string> names;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    for (std::size_t i = 0; i < count; ++i) {
        names.push_back("a" + std::to_string(i + 1));
        attacks.emplace_back(i, (i + 1) % count);
    }
    return Framework(std::move(names), std::move(attacks));
}

Framework gen_random(std::size_t n, double attack_probability, std::uint64_t seed) {
    if (attack_probability < 0.0 || attack_probability > 1.0) throw InputError("attack probability must lie in [0,1]");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (coin(rng) < attack_probability) attacks.emplace_back(i, j);
        }
    }
    return Framework(std::move(names), std::move(attacks));
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

Framework make_fixture(std::string_view name) {
    using Attacks = std::vector<std::pair<std::string, std::string>>;
    if (name == "fig1a") return from_names({"a", "b", "c", "d"}, Attacks{{"a", "b"}, {"c", "b"}, {"b", "d"}});
    if (name == "fig1b") {
        return from_names({"a", "b", "c", "d"}, Attacks{{"a", "a"}, {"a", "b"}, {"c", "b"}, {"b", "d"}});
    }
    if (name == "fig3") {
        return from_names({"a", "b", "c", "d", "e", "f", "g"},
                          Attacks{{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "c"}, {"d", "e"},
                                  {"e", "f"}, {"f", "f"}, {"f", "g"}, {"g", "e"}});
    }
    if (name == "fig4") {
        return from_names({"a", "b", "c", "d", "e"},
                          Attacks{{"b", "d"}, {"b", "c"}, {"a", "d"}, {"a", "b"}, {"c", "d"}, {"c", "a"}, {"d", "e"}});
    }
    if (name == "sec61_loop") {
        return from_names({"a", "b", "c", "d", "e"}, Attacks{{"a", "a"}, {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}});
    }
    if (name == "sec62_unattacked") {
        return from_names({"a", "b", "c", "d", "e"}, Attacks{{"a", "b"}, {"b", "c"}, {"c", "c"}, {"c", "d"}, {"d", "e"}});
    }
    // The roommate drawings: an outer preference cycle of pairs, each pair
    // attacking the two adjacent person-with-Shrek arguments, each of which
    // attacks s ("Shrek is alone").
    if (name == "srp_a") {
        return from_names({"jm", "am", "ar", "jr", "js", "ms", "as", "rs", "s"},
                          Attacks{{"jm", "am"}, {"am", "ar"}, {"ar", "jr"}, {"jr", "jm"},
                                  {"jm", "js"}, {"jm", "ms"}, {"am", "ms"}, {"am", "as"},
                                  {"ar", "as"}, {"ar", "rs"}, {"jr", "rs"}, {"jr", "js"},
                                  {"js", "s"}, {"ms", "s"}, {"as", "s"}, {"rs", "s"}});
    }
    if (name == "srp_b") {
        return from_names({"jm", "am", "aj", "js", "ms", "as", "s"},
                          Attacks{{"jm", "am"}, {"am", "aj"}, {"aj", "jm"},
                                  {"jm", "js"}, {"jm", "ms"}, {"am", "ms"}, {"am", "as"},
                                  {"aj", "as"}, {"aj", "js"},
                                  {"js", "s"}, {"ms", "s"}, {"as", "s"}});
    }
    throw InputError("unknown fixture '" + std::string(name) + "'");
}

} // namespace

std::vector<std::string> fixture_names() {
    return {"fig1a", "fig1b", "fig3", "fig4", "sec61_loop", "sec62_unattacked", "srp_a", "srp_b"};
}

std::map<std::string, Framework> fixtures() {
    std::map<std::string, Framework> out;
    for (const auto& name : fixture_names()) out.emplace(name, make_fixture(name));
    return out;
}

Framework fixture(std::string_view name) { return make_fixture(name); }

} // namespace paraf
