#pragma once

#include <paraf/framework.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace paraf {

/// Roommate preferences. Each person ranks acceptable partners strictly;
/// `alone` marks that the person may also stay alone.
struct PreferenceProfile {
    struct Person {
        std::string name;
        std::vector<std::string> ranking;
        bool alone = false;
    };
    std::vector<Person> persons;
};

/// Parses lines `name: p1 > p2 > ... [> alone]`; `%` and `#` start
/// comments. ParseError on malformed lines or invalid profiles.
PreferenceProfile parse_preferences(std::string_view text);

/// InputError unless names are valid and unique, nobody ranks themselves,
/// rankings are duplicate-free and only mention declared persons.
void check_profile(const PreferenceProfile& profile);

/// Matching framework for a profile:
///  - one argument per pair {x,y} where x ranks y or y ranks x, named by the
///    sorted names (concatenated when both are one character, else x_y);
///  - one argument per person declaring `alone`, named after the person;
///  - pair P attacks pair Q when they share a person who ranks the P-partner
///    and either does not rank the Q-partner or ranks it lower;
///  - every pair containing x attacks x's `alone` argument.
Framework gen_srp(const PreferenceProfile& profile);

/// Arguments a1..an, b1..bn, c; attacks (a_i,a_{i+1}), (a_i,b_i),
/// (a_i,b_{i+1}) and (b_i,c), indices wrapping at n. InputError for n < 3.
Framework gen_radial_star(int n);

/// Arguments a1..an in a single attack cycle a1→a2→…→an→a1. InputError for n < 1.
Framework gen_cycle(int n);

/// Arguments a1..an; every ordered pair, self-loops included, is an attack
/// with the given probability. Fully determined by the seed.
Framework gen_random(std::size_t n, double attack_probability, std::uint64_t seed);

PreferenceProfile srp_a_profile();
PreferenceProfile srp_b_profile();

/// Worked-example frameworks: fig1a, fig1b, fig3, fig4, sec61_loop,
/// sec62_unattacked, srp_a, srp_b.
std::map<std::string, Framework> fixtures();
std::vector<std::string> fixture_names();
/// InputError for an unknown name.
Framework fixture(std::string_view name);

} // namespace paraf
