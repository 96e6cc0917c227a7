#include <catch_amalgamated.hpp>

#include "oracles.hpp"

#include <paraf/generators.hpp>
#include <paraf/stabilizer.hpp>

using namespace paraf;
using oracle::Family;

namespace {

Family fam(std::initializer_list<std::vector<std::string>> sets) { return Family(sets.begin(), sets.end()); }

} // namespace

TEST_CASE("fig4 stabilizers of {a}") {
    const auto f = fixture("fig4");
    const auto a = f.make({"a"});
    Family accepted;
    for (Mask s = 0; s <= f.all_mask(); ++s) {
        if (is_stabilizer(f, f.make(s), a)) accepted.insert(f.member_names(f.make(s)));
    }
    CHECK(accepted == fam({{"b", "d"}, {"a", "b", "d"}, {"b", "d", "e"}, {"a", "b", "d", "e"}}));
    CHECK(oracle::family(f, minimal_stabilizers_of(f, a)) == fam({{"b", "d"}}));
}

TEST_CASE("worked stabilizer examples") {
    const auto f4 = fixture("fig4");
    CHECK(is_stabilizer(f4, f4.make({"b"}), f4.make({"a", "e"})));
    CHECK(oracle::family(f4, minimal_stabilizers_of(f4, f4.make({"a", "e"}))) == fam({{"b"}}));
    CHECK(minimal_stabilizers_of(f4, f4.make({"a", "b"})).empty());
    for (Mask s = 0; s <= f4.all_mask(); ++s) CHECK_FALSE(is_stabilizer(f4, f4.make(s), f4.make({"a", "b"})));

    const auto f1 = fixture("fig1a");
    CHECK(is_stabilizer(f1, f1.none(), f1.make({"a", "c", "d"})));
    CHECK(oracle::family(f1, minimal_stabilizers_of(f1, f1.make({"a", "c", "d"}))) == fam({{}}));
}

TEST_CASE("global minimal stabilizers") {
    const auto f1 = fixture("fig1a");
    CHECK(oracle::family(f1, global_minimal_stabilizers(f1).minimal_elements) == fam({{}}));
    const auto f3 = fixture("fig3");
    CHECK(oracle::family(f3, global_minimal_stabilizers(f3).minimal_elements) == fam({{"e"}, {"f"}}));
    const auto f4 = fixture("fig4");
    const auto sigma = global_minimal_stabilizers(f4);
    CHECK(oracle::family(f4, sigma.minimal_elements) == fam({{"a"}, {"b"}, {"c"}}));
    CHECK(sigma.is_minimal(f4.make({"b"})));
    CHECK_FALSE(sigma.is_minimal(f4.make({"b", "d"})));
    CHECK_FALSE(sigma.per_extension.contains(f4.make({"a", "b"})));
}

TEST_CASE("paracoherent extensions of the worked examples") {
    const auto check = [](const char* name, Family expected) {
        const auto f = fixture(name);
        INFO(name);
        CHECK(oracle::family(f, paracoherent_extensions(f)) == expected);
        CHECK(oracle::family(f, paracoherent_via_shadow(f)) == expected);
    };
    check("fig1a", fam({{"a", "c", "d"}}));
    check("fig1b", fam({{"c", "d"}}));
    check("fig3", fam({{"a", "d"}, {"a", "c", "e"}, {"a", "c", "g"}, {"a", "d", "g"}}));
    check("fig4", fam({{"a", "e"}, {"b", "e"}, {"c", "e"}}));
    check("sec61_loop", fam({{"c", "e"}}));
    check("sec62_unattacked", fam({{"a", "d"}, {"a", "e"}}));
    check("srp_b", fam({{"jm", "s"}, {"am", "s"}, {"aj", "s"}}));
}

TEST_CASE("guarded shadow framework shape") {
    const Framework single({"a", "b"}, {{0, 1}});
    const auto s = guarded_shadow_framework(single);
    CHECK(s.names() == std::vector<std::string>{"a", "b", "s__a", "g__a"});
    RawFramework expected{{"a", "b", "s__a", "g__a"}, {{"a", "b"}, {"s__a", "b"}, {"s__a", "g__a"}, {"g__a", "s__a"}}};
    CHECK(s.same_graph(Framework(expected)));

    const Framework quiet({"a", "b"}, {});
    CHECK(guarded_shadow_framework(quiet).same_graph(quiet));

    CHECK(guarded_shadow_framework(fixture("fig3")).size() == 7 + 7 + 7);

    const Framework reserved({"s__x"}, {});
    CHECK_THROWS_AS(guarded_shadow_framework(reserved), InputError);
    CHECK_THROWS_AS(guarded_shadow_framework(gen_cycle(30)), SizeError);
}

TEST_CASE("stabilizer routes agree with the brute-force definition") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const auto f = gen_random(n, 0.15 + 0.05 * static_cast<double>(seed % 6), 7000 + seed);
        const auto expected = oracle::paracoherent(f);
        INFO("seed " << seed << " n " << n);
        CHECK(oracle::family(f, paracoherent_extensions(f)) == expected.para);
        CHECK(oracle::family(f, paracoherent_via_shadow(f)) == expected.para);
        CHECK(oracle::family(f, global_minimal_stabilizers(f).minimal_elements) == expected.minimal_stabilizers);
    }
}

TEST_CASE("locally minimal stabilizers are exactly the minimal ones") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = gen_random(1 + seed % 7, 0.3, 300 + seed);
        const auto sigma = global_minimal_stabilizers(f);
        for (const auto& [a, local] : sigma.per_extension) {
            // every stabilizer of a contains one of `local`, and `local` is an antichain of stabilizers
            for (Mask s = 0; s <= f.all_mask(); ++s) {
                const auto candidate = f.make(s);
                if (!is_stabilizer(f, candidate, a)) continue;
                const bool covered = std::any_of(local.begin(), local.end(),
                                                 [&](const ArgSet& m) { return m.subset_of(candidate); });
                CHECK(covered);
            }
            for (const auto& m : local) {
                CHECK(is_stabilizer(f, m, a));
                for (const auto& other : local) CHECK_FALSE(other.strict_subset_of(m));
            }
        }
    }
}

TEST_CASE("stabilizer properties and theorems") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = gen_random(1 + seed % 10, 0.25, 42 + seed);
        const auto stb = enumerate(f, Semantics::STB);
        const auto para = paracoherent_extensions(f);
        INFO("seed " << seed);
        CHECK(stb.subset_of(para));
        if (!stb.empty()) CHECK(stb == para);
        CHECK(para.subset_of(enumerate(f, Semantics::CF)));
        CHECK_FALSE(para.empty());
        CHECK(global_minimal_stabilizers(f).is_minimal(f.none()) == !stb.empty());
        for (const auto& w : paracoherent_witnesses(f)) {
            CHECK(is_conflict_free(f, w.extension));
            CHECK_FALSE(w.extension.intersects(attacked_set(f, w.stabilizer)));
            CHECK(is_stabilizer(f, w.stabilizer, w.extension));
        }
    }
}

TEST_CASE("para respects the cap on the original framework") {
    CHECK_THROWS_AS(paracoherent_extensions(gen_cycle(12), EnumOptions{10, 1}), SizeError);
    CHECK_THROWS_AS(paracoherent_via_shadow(gen_cycle(12), EnumOptions{10, 1}), SizeError);
}
