#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <paraf/generators.hpp>
#include <paraf/io.hpp>
#include <paraf/paraco_asp.hpp>
#include <paraf/program.hpp>

#include <random>

using namespace paraf;

namespace {

Atom A(const char* name) { return Atom::plain(name); }

Interpretation I(std::initializer_list<const char*> names) {
    Interpretation out;
    for (auto* n : names) out.insert(decode_atom(n));
    return out;
}

std::set<std::set<Atom>> models(std::initializer_list<Interpretation> list) {
    std::set<std::set<Atom>> out;
    for (const auto& m : list) out.insert(m.atoms());
    return out;
}

// Random programs over p1..pk. Disjunctive heads and constraints only when asked.
Program random_program(std::mt19937_64& rng, std::size_t atoms, bool disjunctive) {
    std::uniform_int_distribution<std::size_t> rule_count(1, 2 * atoms + 2);
    std::uniform_int_distribution<std::size_t> pick(1, atoms);
    std::bernoulli_distribution coin(0.25);
    std::bernoulli_distribution rare(0.1);
    Program p;
    const std::size_t rules = rule_count(rng);
    for (std::size_t r = 0; r < rules; ++r) {
        std::vector<Atom> head, pos, neg;
        const bool constraint = disjunctive && rare(rng);
        if (!constraint) {
            head.push_back(Atom::plain("p" + std::to_string(pick(rng))));
            while (disjunctive && coin(rng)) head.push_back(Atom::plain("p" + std::to_string(pick(rng))));
        }
        for (std::size_t a = 1; a <= atoms; ++a) {
            if (coin(rng)) (coin(rng) ? pos : neg).push_back(Atom::plain("p" + std::to_string(a)));
        }
        if (constraint && pos.empty() && neg.empty()) pos.push_back(Atom::plain("p1"));
        p.rules.emplace_back(std::move(head), std::move(pos), std::move(neg));
    }
    return p;
}

} // namespace

TEST_CASE("atom text and decoding") {
    CHECK(decode_atom("a") == Atom::plain("a"));
    CHECK(decode_atom("k__a") == Atom::belief("a"));
    CHECK(decode_atom("l__3_2") == Atom::aux(3, 2));
    CHECK(decode_atom("s__x1") == Atom::shadow("x1"));
    CHECK(decode_atom("n__x1") == Atom::complement("x1"));
    for (const auto& atom : {Atom::belief("a"), Atom::aux(12, 1), Atom::shadow("b"), Atom::complement("c")}) {
        CHECK(decode_atom(atom.text()) == atom);
    }
    CHECK_THROWS_AS(decode_atom("k__"), InputError);
    CHECK_THROWS_AS(decode_atom("k__s__a"), InputError);
    CHECK_THROWS_AS(decode_atom("l__x"), InputError);
    CHECK_THROWS_AS(decode_atom("l__0_1"), InputError);
    CHECK_THROWS_AS(decode_atom("a-b"), InputError);
}

TEST_CASE("signature order and rule normalisation") {
    const Rule r({A("a"), A("a")}, {A("b")}, {A("c"), A("c")});
    CHECK(r.head().size() == 1);
    CHECK(r.negative().size() == 1);
    const auto p = parse_program("k__b :- a. a | l__1_1. s__x :- not n__x. c.");
    const auto sig = p.signature();
    REQUIRE(sig.size() == 6);
    CHECK(sig[0] == A("a"));
    CHECK(sig[1] == A("c"));
    CHECK(sig[2] == Atom::belief("b"));
    CHECK(sig[3] == Atom::aux(1, 1));
    CHECK(sig[4] == Atom::shadow("x"));
    CHECK(sig[5] == Atom::complement("x"));
    CHECK(p.has_negation());
    CHECK(parse_program("b. a :- b.") == parse_program("a :- b. b."));
}

TEST_CASE("satisfaction") {
    CHECK(satisfies(I({"a"}), parse_program("a.")));
    CHECK_FALSE(satisfies(I({}), parse_program("a :- not b.")));
    CHECK(satisfies(I({"a", "c", "d"}), af_to_program(fixture("fig1a"))));
    CHECK_FALSE(satisfies(I({"a"}), parse_program(":- a.")));
    CHECK(satisfies(I({"b"}), parse_program("a | b.")));
}

TEST_CASE("reduct") {
    CHECK(gl_reduct(parse_program("a :- not b."), I({"a"})) == parse_program("a."));
    CHECK(gl_reduct(parse_program("a :- not b."), I({"b"})).rules.empty());
    // g :- not f survives as well, since f is false.
    CHECK(gl_reduct(af_to_program(fixture("fig3")), I({"a", "c", "e"})) == parse_program("a. c. e. g."));
}

TEST_CASE("minimal models") {
    CHECK(oracle::as_sets(minimal_models(parse_program("a | b."))) == models({I({"a"}), I({"b"})}));
    CHECK(oracle::as_sets(minimal_models(parse_program("a. b :- a."))) == models({I({"a", "b"})}));
    CHECK(oracle::as_sets(minimal_models(parse_program("a | k__b. :- a, b."))) == models({I({"a"}), I({"k__b"})}));
    CHECK(oracle::as_sets(minimal_models(parse_program(":- a, b. a | b."))) == models({I({"a"}), I({"b"})}));
    CHECK_THROWS_AS(minimal_models(parse_program("a :- not b.")), PreconditionError);
    CHECK(minimal_models(parse_program("a. :- a.")).empty());
}

TEST_CASE("answer sets of worked programs") {
    CHECK(oracle::as_sets(answer_sets(af_to_program(fixture("fig1a")))) == models({I({"a", "c", "d"})}));
    CHECK(answer_sets(af_to_program(fixture("fig3"))).empty());
    CHECK(answer_sets(parse_program("a :- not a.")).empty());
    CHECK(oracle::as_sets(answer_sets(parse_program("a :- not b. b :- not a."))) == models({I({"a"}), I({"b"})}));
    CHECK(oracle::as_sets(answer_sets(parse_program("a | b. a :- b. b :- a."))) == models({I({"a", "b"})}));
    CHECK(oracle::as_sets(answer_sets(Program{})) == models({I({})}));
}

TEST_CASE("answer sets are canonically ordered") {
    const auto found = answer_sets(parse_program("a | b | c. d :- a."));
    REQUIRE(found.size() == 3);
    CHECK(found[0] == I({"b"}));
    CHECK(found[1] == I({"c"}));
    CHECK(found[2] == I({"a", "d"}));
}

TEST_CASE("engine limit") {
    Program p;
    for (int i = 0; i < 65; ++i) p.rules.emplace_back(std::vector<Atom>{Atom::plain("x" + std::to_string(i))}, std::vector<Atom>{}, std::vector<Atom>{});
    CHECK_THROWS_AS(answer_sets(p), SizeError);
    CHECK_THROWS_AS(minimal_models(p), SizeError);
}

TEST_CASE("answer sets agree with the definition on random normal programs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_program(rng, 1 + static_cast<std::size_t>(trial % 8), false);
        INFO("trial " << trial << "\n" << render_program(p));
        CHECK(oracle::as_sets(answer_sets(p)) == oracle::answer_sets(p));
    }
}

TEST_CASE("answer sets agree with the definition on random disjunctive programs") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const auto p = random_program(rng, 1 + static_cast<std::size_t>(trial % 7), true);
        INFO("trial " << trial << "\n" << render_program(p));
        CHECK(oracle::as_sets(answer_sets(p)) == oracle::answer_sets(p));
    }
}

TEST_CASE("answer-set invariants") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 150; ++trial) {
        const auto p = random_program(rng, 1 + static_cast<std::size_t>(trial % 8), trial % 2 == 0);
        const auto found = answer_sets(p);
        for (std::size_t i = 0; i < found.size(); ++i) {
            CHECK(satisfies(found[i], p));
            // minimal model of its own reduct
            const auto reduct = gl_reduct(p, found[i]);
            const auto mins = minimal_models(reduct);
            CHECK(std::find(mins.begin(), mins.end(), found[i]) != mins.end());
            // answer sets form an antichain
            for (std::size_t j = 0; j < found.size(); ++j) {
                if (i == j) continue;
                const auto& a = found[i].atoms();
                const auto& b = found[j].atoms();
                CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
            }
        }
        if (!p.has_negation()) CHECK(found == minimal_models(p));
    }
}
