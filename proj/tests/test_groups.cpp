#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prc/groups.hpp"
#include "prc/prcode.hpp"

using namespace prc;

namespace {
std::uint64_t pair_mask(int a, int b) {
    return (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
}
} // namespace

TEST_CASE("permutation algebra") {
    auto s = shift_permutation(13);
    auto t = multiplier_permutation(13, 2);
    CHECK(compose(s, inverse(s)).is_identity());
    CHECK(perm_power(s, 13).is_identity());
    CHECK(perm_power(t, 12).is_identity());
    // tau_a sigma tau_a^{-1} = sigma^a
    CHECK(compose(compose(t, s), inverse(t)) == perm_power(s, 2));
    CHECK(apply_to_mask(s, pair_mask(11, 12)) == pair_mask(12, 0));
}

TEST_CASE("affine groups") {
    auto [h31, g31] = affine_group(31, 3);
    CHECK(h31.order() == 310);
    CHECK(g31.order() == 930);
    auto [h13, g13] = affine_group(13, 3);
    CHECK(h13.order() == 52);
    CHECK(g13.order() == 156);
    CHECK(is_normal(h13, g13));
    CHECK(is_normal(h31, g31));
}

TEST_CASE("pair orbits") {
    auto [h31, g31] = affine_group(31, 3);
    auto orbits = orbits_on_ksubsets(h31, 2);
    REQUIRE(orbits.orbits.size() == 3);
    for (const auto& orb : orbits.orbits) CHECK(orb.size() == 155);
    CHECK(orbits_on_ksubsets(g31, 2).orbits.size() == 1);

    // the three published representatives land in three different orbits
    std::set<int> ids{orbits.orbit_of(pair_mask(13, 18)), orbits.orbit_of(pair_mask(5, 9)),
                      orbits.orbit_of(pair_mask(5, 17))};
    CHECK(ids.size() == 3);
    CHECK_FALSE(ids.count(-1));

    // orbit-stabilizer
    for (const auto& orb : orbits.orbits)
        CHECK(static_cast<long long>(orb.size()) * stabilizer_order(h31, orb.front()) ==
              h31.order());

    auto [h13, g13] = affine_group(13, 3);
    auto o13 = orbits_on_ksubsets(h13, 2);
    REQUIRE(o13.orbits.size() == 3);
    for (const auto& orb : o13.orbits) CHECK(orb.size() == 26);
    std::set<int> ids13{o13.orbit_of(pair_mask(6, 12)), o13.orbit_of(pair_mask(4, 7)),
                        o13.orbit_of(pair_mask(2, 10))};
    CHECK(ids13.size() == 3);
}

TEST_CASE("conjugating permutation cycles the orbits") {
    auto [h13, g13] = affine_group(13, 3);
    auto o = orbits_on_ksubsets(h13, 2);
    auto sigma = conjugating_permutation(13, 3);
    CHECK(g13.contains(sigma));
    CHECK_FALSE(h13.contains(sigma));

    // sigma induces one 3-cycle on the orbit labels
    std::set<int> visited;
    std::uint64_t T = o.representatives[0];
    for (int i = 0; i < 3; ++i) {
        visited.insert(o.orbit_of(T));
        T = apply_to_mask(sigma, T);
    }
    CHECK(visited.size() == 3);
    CHECK(o.orbit_of(T) == o.orbit_of(o.representatives[0]));

    // the residue multiplier fixes each orbit
    std::uint64_t gm = 8; // 2^3 mod 13
    auto tau = multiplier_permutation(13, gm);
    for (auto rep : o.representatives)
        CHECK(o.orbit_of(apply_to_mask(tau, rep)) == o.orbit_of(rep));
}

TEST_CASE("code invariance under the index-m subgroup") {
    auto C = build_code(13, 3, 5);
    CodeMembership mem(C.code);
    std::vector<Permutation> gens{shift_permutation(13), multiplier_permutation(13, 8)};
    for (const auto& pi : gens)
        for (const auto& row : permute_code(C.code, pi).rows) CHECK(mem.contains(row));

    auto C31 = build_code(31, 3, 2);
    CodeMembership mem31(C31.code);
    // g = 3, g^3 = 27
    for (const auto& pi : {shift_permutation(31), multiplier_permutation(31, 27)})
        for (const auto& row : permute_code(C31.code, pi).rows) CHECK(mem31.contains(row));
}
