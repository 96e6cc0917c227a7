#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <paraf/generators.hpp>
#include <paraf/semantics.hpp>

using namespace paraf;
using oracle::Family;

namespace {

constexpr Semantics kClassical[] = {Semantics::CF, Semantics::ADM, Semantics::COMP,
                                    Semantics::STB, Semantics::SEM, Semantics::STAGE};

Family fam(std::initializer_list<std::vector<std::string>> sets) { return Family(sets.begin(), sets.end()); }

} // namespace

TEST_CASE("fig1a, all classical semantics") {
    const auto f = fixture("fig1a");
    CHECK(oracle::family(f, enumerate(f, Semantics::CF)) ==
          fam({{}, {"a"}, {"b"}, {"c"}, {"d"}, {"a", "c"}, {"a", "d"}, {"c", "d"}, {"a", "c", "d"}}));
    CHECK(enumerate(f, Semantics::ADM).size() == 7);
    for (auto sem : {Semantics::COMP, Semantics::STB, Semantics::SEM, Semantics::STAGE}) {
        CHECK(oracle::family(f, enumerate(f, sem)) == fam({{"a", "c", "d"}}));
    }
}

TEST_CASE("fig3 semi-stable and stage") {
    const auto f = fixture("fig3");
    CHECK(oracle::family(f, enumerate(f, Semantics::SEM)) == fam({{"a", "d"}}));
    CHECK(oracle::family(f, enumerate(f, Semantics::STAGE)) ==
          fam({{"a", "c", "e"}, {"a", "c", "g"}, {"a", "d", "g"}}));
    CHECK(enumerate(f, Semantics::STB).empty());
}

TEST_CASE("fig1b has no stable extension") { CHECK(enumerate(fixture("fig1b"), Semantics::STB).empty()); }

TEST_CASE("membership checks") {
    const auto f = fixture("fig1a");
    CHECK(is_extension(f, f.make({"a", "c", "d"}), Semantics::STB));
    CHECK(is_extension(f, f.none(), Semantics::CF));
    CHECK_FALSE(is_extension(f, f.make({"a", "c"}), Semantics::STB));
    const auto g = fixture("sec62_unattacked");
    CHECK(is_extension(g, g.make({"b", "d"}), Semantics::STAGE));
    CHECK_FALSE(is_extension(g, g.make({"b", "d"}), Semantics::SEM));
}

TEST_CASE("initial loop and unattacked-argument frameworks") {
    const auto g = fixture("sec62_unattacked");
    CHECK(oracle::family(g, enumerate(g, Semantics::STAGE)) == fam({{"a", "d"}, {"b", "d"}}));
    const auto h = fixture("sec61_loop");
    CHECK(oracle::family(h, enumerate(h, Semantics::SEM)) == fam({{}}));
}

TEST_CASE("canonical output order") {
    const auto f = fixture("fig3");
    const auto stage = enumerate(f, Semantics::STAGE);
    std::vector<std::string> shown;
    for (const auto& e : stage) shown.push_back(f.format(e));
    CHECK(shown == std::vector<std::string>{"[a,c,e]", "[a,c,g]", "[a,d,g]"});
    const auto cf = enumerate(f, Semantics::CF);
    for (std::size_t i = 1; i < cf.size(); ++i) CHECK(f.canonical_less(cf[i - 1], cf[i]));
}

TEST_CASE("ExtensionSet deduplicates and compares") {
    const auto f = fixture("fig1a");
    const ExtensionSet a(f, {f.make({"c"}), f.make({"a"}), f.make({"c"})});
    const ExtensionSet b(f, {f.make({"a"}), f.make({"c"})});
    CHECK(a.size() == 2);
    CHECK(a == b);
    CHECK(a.contains(f.make({"a"})));
    CHECK(a.subset_of(enumerate(f, Semantics::CF)));
    const auto other = fixture("fig1a");
    CHECK_THROWS_AS(ExtensionSet(f, {other.none()}), BindingError);
}

TEST_CASE("cap and dispatch errors") {
    const auto f = gen_cycle(12);
    CHECK_THROWS_AS(enumerate(f, Semantics::CF, EnumOptions{10, 1}), SizeError);
    CHECK_NOTHROW(enumerate(f, Semantics::CF, EnumOptions{12, 1}));
    CHECK_THROWS_AS(enumerate(f, Semantics::PARA), DispatchError);
}

TEST_CASE("semantics names") {
    CHECK(parse_semantics("com") == Semantics::COMP);
    CHECK(parse_semantics("comp") == Semantics::COMP);
    CHECK(parse_semantics("para") == Semantics::PARA);
    CHECK_FALSE(parse_semantics("grd").has_value());
    for (auto sem : kClassical) CHECK(parse_semantics(to_string(sem)) == sem);
}

TEST_CASE("enumeration agrees with the naive definitions") {
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        const std::size_t n = 1 + seed % 12;
        const double p = 0.1 + 0.05 * static_cast<double>(seed % 7);
        const auto f = gen_random(n, p, seed);
        for (auto sem : kClassical) {
            INFO("seed " << seed << " sem " << to_string(sem));
            CHECK(oracle::family(f, enumerate(f, sem)) == oracle::extensions(f, sem));
        }
    }
}

TEST_CASE("taxonomy inclusions") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = gen_random(1 + seed % 10, 0.25, 1000 + seed);
        const auto cf = enumerate(f, Semantics::CF);
        const auto adm = enumerate(f, Semantics::ADM);
        const auto comp = enumerate(f, Semantics::COMP);
        const auto stb = enumerate(f, Semantics::STB);
        const auto sem = enumerate(f, Semantics::SEM);
        const auto stage = enumerate(f, Semantics::STAGE);
        INFO("seed " << seed);
        CHECK(sem.subset_of(comp));
        CHECK(comp.subset_of(adm));
        CHECK(adm.subset_of(cf));
        CHECK(stage.subset_of(cf));
        CHECK(stb.subset_of(sem));
        CHECK(stb.subset_of(stage));
        CHECK_FALSE(sem.empty());
        CHECK_FALSE(stage.empty());
    }
}

TEST_CASE("output does not depend on the thread count") {
    const auto f = gen_random(14, 0.2, 99);
    for (auto sem : kClassical) {
        CHECK(enumerate(f, sem, EnumOptions{24, 1}).items() == enumerate(f, sem, EnumOptions{24, 4}).items());
    }
}

TEST_CASE("stable search matches enumeration") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto f = gen_random(1 + seed % 11, 0.2, 500 + seed);
        std::vector<ArgSet> found;
        for (Mask m : stable_masks_by_search(f)) found.push_back(f.make(m));
        CHECK(ExtensionSet(f, found) == enumerate(f, Semantics::STB));
    }
}

TEST_CASE("maximal_by_key") {
    const std::vector<Mask> keys{0b011, 0b001, 0b100, 0b011};
    CHECK(maximal_by_key(keys) == std::vector<std::size_t>{0, 2, 3});
}
