#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <paraf/generators.hpp>
#include <paraf/reasoning.hpp>

using namespace paraf;
using oracle::Family;

TEST_CASE("radial star shape") {
    const auto f = gen_radial_star(3);
    CHECK(f.size() == 7);
    CHECK(f.attacks().size() == 12);
    CHECK(f.attacks(f.index("a3"), f.index("a1")));
    CHECK(f.attacks(f.index("a3"), f.index("b1")));
    CHECK(f.attacks(f.index("b2"), f.index("c")));
    CHECK_THROWS_AS(gen_radial_star(2), InputError);
    CHECK(gen_radial_star(7).size() == 15);
}

TEST_CASE("radial star families") {
    for (int n : {4, 6, 8}) {
        const auto f = gen_radial_star(n);
        std::vector<std::string> odd{"c"}, even{"c"};
        for (int i = 1; i <= n; ++i) (i % 2 ? odd : even).push_back("a" + std::to_string(i));
        std::sort(odd.begin(), odd.end());
        std::sort(even.begin(), even.end());
        INFO("n " << n);
        CHECK(oracle::family(f, extensions(f, Semantics::STB)) == Family{odd, even});
        CHECK(skeptical(f, Semantics::STB, "c"));
    }
    for (int n : {3, 5}) {
        const auto f = gen_radial_star(n);
        INFO("n " << n);
        CHECK(extensions(f, Semantics::STB).empty());
        CHECK(oracle::family(f, extensions(f, Semantics::PARA)) == oracle::paracoherent(f).para);
        CHECK(skeptical(f, Semantics::PARA, "c"));
    }
}

TEST_CASE("cycles") {
    const auto c1 = gen_cycle(1);
    CHECK(c1.attacks(0, 0));
    CHECK(oracle::family(c1, extensions(c1, Semantics::PARA)) == Family{{}});
    const auto c4 = gen_cycle(4);
    CHECK(oracle::family(c4, extensions(c4, Semantics::STB)) == Family{{"a1", "a3"}, {"a2", "a4"}});
    CHECK_THROWS_AS(gen_cycle(0), InputError);
}

TEST_CASE("random frameworks are reproducible") {
    const auto a = gen_random(9, 0.3, 17);
    const auto b = gen_random(9, 0.3, 17);
    CHECK(a.same_graph(b));
    CHECK(gen_random(6, 0.0, 1).attacks().empty());
    CHECK(gen_random(4, 1.0, 1).attacks().size() == 16);
    CHECK_THROWS_AS(gen_random(4, 1.5, 1), InputError);
}

TEST_CASE("fixtures") {
    const auto all = fixtures();
    CHECK(all.size() == fixture_names().size());
    for (const auto& name : fixture_names()) CHECK(all.contains(name));
    CHECK_THROWS_AS(fixture("nope"), InputError);
    CHECK(fixture("fig3").attacks().size() == 9);
}

TEST_CASE("roommate profiles reproduce the drawn frameworks") {
    CHECK(gen_srp(srp_a_profile()).same_graph(fixture("srp_a")));
    CHECK(gen_srp(srp_b_profile()).same_graph(fixture("srp_b")));
}

TEST_CASE("roommate narratives") {
    const auto a = fixture("srp_a");
    CHECK(oracle::family(a, extensions(a, Semantics::STB)) == Family{{"am", "jr", "s"}, {"ar", "jm", "s"}});
    CHECK(skeptical(a, Semantics::STB, "s"));
    const auto b = fixture("srp_b");
    CHECK(extensions(b, Semantics::STB).empty());
    CHECK(oracle::family(b, extensions(b, Semantics::PARA)) == Family{{"jm", "s"}, {"am", "s"}, {"aj", "s"}});
}

TEST_CASE("preference parsing") {
    const auto p = parse_preferences("% comment\nx: y > alone\n\ny: x   # trailing\n");
    REQUIRE(p.persons.size() == 2);
    CHECK(p.persons[0].alone);
    CHECK(p.persons[0].ranking == std::vector<std::string>{"y"});
    CHECK_FALSE(p.persons[1].alone);

    const auto long_names = gen_srp(parse_preferences("ann: bob\nbob: ann\n"));
    CHECK(long_names.names() == std::vector<std::string>{"ann_bob"});

    auto line_of = [](const char* text) {
        try {
            parse_preferences(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(line_of("x: y\ny z\n") == 2);
    CHECK(line_of("x: x\n") == 1);
    CHECK(line_of("x: alone > y\ny: x\n") == 1);
    CHECK(line_of("x: y\n") != 0);
    CHECK(line_of("x: y\ny: x\nx: y\n") != 0);
}
