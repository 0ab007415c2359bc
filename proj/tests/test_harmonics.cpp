#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/designs.hpp"
#include "prc/harmonics.hpp"
#include "prc/jacobi.hpp"

using namespace prc;

namespace {
EnumOptions fast() {
    EnumOptions o;
    o.threads = 4;
    return o;
}
std::uint64_t pair_mask(int a, int b) {
    return (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
}
} // namespace

TEST_CASE("gamma and tilde on small functions") {
    SubsetFunction f;
    f.k = 2;
    f.v = 4;
    f.values[pair_mask(0, 1)] = 1;
    f.values[pair_mask(2, 3)] = 2;

    auto g = gamma(f);
    CHECK(g.k == 1);
    CHECK(g.at(1) == 1);
    CHECK(g.at(2) == 1);
    CHECK(g.at(4) == 2);
    CHECK(g.at(8) == 2);

    auto gg = gamma(g);
    CHECK(gg.k == 0);
    CHECK(gg.at(0) == 6); // each pair reached twice

    CHECK_THROWS_AS(gamma(gg), DegreeZero);

    CHECK(tilde_extend(f, 0b0111) == 1);  // only {0,1} inside
    CHECK(tilde_extend(f, 0b1111) == 3);
    CHECK(tilde_extend(f, 0b1100) == 2);
    CHECK(tilde_extend(f, 0b0001) == 0);
}

TEST_CASE("transport along permutations") {
    SubsetFunction f;
    f.k = 2;
    f.v = 5;
    f.values[pair_mask(0, 1)] = Rat(3, 2);
    auto s = shift_permutation(5);
    auto moved = act(f, s);
    CHECK(moved.at(pair_mask(1, 2)) == Rat(3, 2));
    CHECK(act(moved, inverse(s)) == f);
}

TEST_CASE("reynolds averages") {
    auto [H, G] = affine_group(13, 3);
    auto avg = reynolds_average(H, pair_mask(6, 12));
    CHECK(avg.values.size() == 26);
    Rat total = 0;
    for (const auto& [mask, v] : avg.values) {
        CHECK(v == Rat(1, 26));
        total += v;
    }
    CHECK(total == 1);
    // invariance under a generator
    for (const auto& gen : H.generators()) CHECK(act(avg, gen) == avg);
}

TEST_CASE("invariant harmonic bases") {
    auto [h13, g13] = affine_group(13, 3);
    auto basis13 = invariant_harmonic_basis(h13, 2);
    CHECK(basis13.dimension() == 2);
    for (const auto& f : basis13.functions) {
        CHECK(gamma(f).is_zero());
        for (const auto& gen : h13.generators()) CHECK(act(f, gen) == f);
    }

    auto [h31, g31] = affine_group(31, 3);
    auto basis31 = invariant_harmonic_basis(h31, 2);
    CHECK(basis31.dimension() == 2);
    for (const auto& f : basis31.functions) CHECK(gamma(f).is_zero());

    // fully symmetric invariants of positive degree are trivial
    CHECK(symmetric_invariant_harmonic_basis(13, 2).dimension() == 0);
    CHECK(symmetric_invariant_harmonic_basis(13, 1).dimension() == 0);
}

TEST_CASE("harmonic enumerators") {
    auto C = build_code(13, 3, 5);

    // degree-1 difference function: cyclic codes weigh all points equally
    SubsetFunction d;
    d.k = 1;
    d.v = 13;
    d.values[1] = 1;
    d.values[2] = -1;
    CHECK(enumerator_is_zero(harmonic_weight_enumerator(C.code, d, fast())));

    auto [H, G] = affine_group(13, 3);
    auto basis = invariant_harmonic_basis(H, 2);
    REQUIRE(basis.dimension() == 2);
    const auto& f0 = basis.functions[0];
    const auto& f1 = basis.functions[1];

    // linearity
    auto e0 = harmonic_weight_enumerator(C.code, f0, fast());
    auto e1 = harmonic_weight_enumerator(C.code, f1, fast());
    auto combo = harmonic_weight_enumerator(C.code, sf_add(sf_scale(f0, 3), f1), fast());
    for (std::size_t w = 0; w < combo.size(); ++w) CHECK(combo[w] == 3 * e0[w] + e1[w]);

    // equivariance: permuting the code matches transporting the function
    auto sigma = conjugating_permutation(13, 3);
    auto lhs = harmonic_weight_enumerator(permute_code(C.code, sigma), f0, fast());
    auto rhs = harmonic_weight_enumerator(C.code, act(f0, sigma), fast());
    CHECK(lhs == rhs);
}

TEST_CASE("conjugate sums vanish only for the full cycle") {
    auto C = build_code(13, 3, 5);
    auto sigma = conjugating_permutation(13, 3);
    auto [H, G] = affine_group(13, 3);
    auto basis = invariant_harmonic_basis(H, 2);

    auto van = conjugate_vanishing_check(C.code, sigma, 3, basis, fast());
    CHECK(van.all_zero);
    REQUIRE(van.sums.size() == 2);

    auto single = conjugate_vanishing_check(C.code, sigma, 1, basis, fast());
    CHECK_FALSE(single.all_zero);
}

TEST_CASE("design criterion") {
    ShellsUnionContext ctx(13, 3, 5, fast());
    auto B = ctx.shells_union(4);
    auto [H, G] = affine_group(13, 3);

    CHECK(delsarte_design_check(B, 2, &H));
    CHECK(delsarte_design_check(B, 2, nullptr));

    auto corrupted = B;
    corrupted.blocks.erase(corrupted.blocks.begin());
    CHECK_FALSE(delsarte_design_check(corrupted, 2, nullptr));
    CHECK_THROWS_AS(delsarte_design_check(corrupted, 2, &H), GroupNotAutomorphism);
}

TEST_CASE("published enumerator data is consistent") {
    // the three tabulated degree-2 enumerators for the length-31 binary code
    // add to zero coefficient-wise, so they span at most a 2-dimensional space
    std::map<int, long long> f1{{5, -155},   {7, 775},    {8, -465},   {9, -620},
                                {10, 3565},  {11, -4340}, {12, -11780}, {13, 15190},
                                {14, 21700}, {15, -23870}, {16, -23870}, {17, 21700},
                                {18, 15190}, {19, -11780}, {20, -4340}, {21, 3565},
                                {22, -620},  {23, -465},  {24, 775},   {26, -155}};
    std::map<int, long long> f2{{6, -465},   {7, -155},   {8, 3565},   {9, 775},
                                {10, -11780}, {11, -620},  {12, 21700}, {13, -4340},
                                {14, -23870}, {15, 15190}, {16, 15190}, {17, -23870},
                                {18, -4340}, {19, 21700}, {20, -620},  {21, -11780},
                                {22, 775},   {23, 3565},  {24, -155},  {25, -465}};
    std::map<int, long long> f3{{5, 155},    {6, 465},    {7, -620},   {8, -3100},
                                {9, -155},   {10, 8215},  {11, 4960},  {12, -9920},
                                {13, -10850}, {14, 2170},  {15, 8680},  {16, 8680},
                                {17, 2170},  {18, -10850}, {19, -9920}, {20, 4960},
                                {21, 8215},  {22, -155},  {23, -3100}, {24, -620},
                                {25, 465},   {26, 155}};
    for (int w = 0; w <= 31; ++w) {
        auto get = [w](const std::map<int, long long>& m) {
            auto it = m.find(w);
            return it == m.end() ? 0LL : it->second;
        };
        CHECK(get(f1) + get(f2) + get(f3) == 0);
    }
}
