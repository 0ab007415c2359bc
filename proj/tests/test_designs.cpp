#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <bit>

#include "prc/designs.hpp"
#include "prc/errors.hpp"

using namespace prc;

namespace {
EnumOptions fast() {
    EnumOptions o;
    o.threads = 4;
    return o;
}

// all k-subsets of {0..v-1} with multiplicity 1
BlockMultiset complete_design(int v, int k) {
    BlockMultiset B;
    B.v = v;
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    std::uint64_t top = std::uint64_t{1} << v;
    while (mask < top) {
        B.add(mask, 1);
        std::uint64_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return B;
}
} // namespace

TEST_CASE("binomial") {
    CHECK(binomial(31, 2) == 465);
    CHECK(binomial(13, 2) == 78);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(4, 7) == 0);
}

TEST_CASE("check_design on the complete design") {
    auto B = complete_design(7, 3);
    auto rep = check_design(B, 2);
    CHECK(rep.is_design);
    CHECK(rep.lambda == 5); // C(v-2, k-2)
    CHECK(rep.block_count == 35);

    B.blocks.erase(B.blocks.begin()); // corrupt: drop one block
    auto bad = check_design(B, 2);
    CHECK_FALSE(bad.is_design);
    CHECK(bad.min_count == 4);
    CHECK(bad.max_count == 5);
    CHECK(std::popcount(bad.witness) == 2);
}

TEST_CASE("check_design edge cases") {
    BlockMultiset empty;
    empty.v = 13;
    auto rep = check_design(empty, 2);
    CHECK(rep.empty);
    CHECK_FALSE(rep.is_design);

    BlockMultiset mixed;
    mixed.v = 5;
    mixed.add(0b111, 1);
    mixed.add(0b11, 1);
    CHECK_THROWS_AS(check_design(mixed, 2), NonUniformBlocks);

    BlockMultiset tiny;
    tiny.v = 5;
    tiny.add(0b1, 2);
    CHECK_THROWS_AS(check_design(tiny, 2), BlockSmallerThanT);
}

TEST_CASE("shell unions of the length-13 code") {
    ShellsUnionContext ctx(13, 3, 5, fast());

    auto B4 = ctx.shells_union(4);
    CHECK(B4.total_blocks() == 1092); // 3 x 364, no overlap at weight 4
    auto rep4 = check_design(B4, 2);
    CHECK(rep4.is_design);
    CHECK(rep4.lambda == 84);
    CHECK(rep4.block_count * binomial(4, 2) == rep4.lambda * binomial(13, 2));

    CHECK(ctx.shells_union(1).empty());
    CHECK(check_design(ctx.shells_union(2), 2).empty);

    // codewords shared between conjugates are counted once: at weight 7 the
    // three pairwise intersections each remove their weight-7 codewords
    auto pairwise = intersection_code(
        ctx.code().code, permute_code(ctx.code().code, ctx.sigma()));
    auto wd = weight_distribution(pairwise, fast());
    long long conjugate_total = 0;
    for (int i = 0; i < 3; ++i) conjugate_total += ctx.conjugate_shell(7, i).total_blocks();
    CHECK(ctx.shells_union(7).total_blocks() == conjugate_total - 3 * wd[7]);
}

TEST_CASE("every single shell is a 1-design") {
    ShellsUnionContext ctx(13, 3, 5, fast());
    for (int ell = 1; ell <= 13; ++ell) {
        auto B = ctx.base_shell(ell);
        if (B.empty()) continue;
        auto rep = check_design(B, 1);
        CHECK(rep.is_design);
        CHECK(rep.block_count * ell == rep.lambda * 13);
    }
}

TEST_CASE("reproduce_table rows") {
    auto rows = reproduce_table(13, 3, 5, 1, 12, 2, fast());
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].empty_shell);
    long long expected[] = {84, 820, 6360, 36540, 144368, 416376, 826560, 1107480, 883740};
    for (int ell = 4; ell <= 12; ++ell) {
        const auto& r = rows[ell - 1];
        CHECK(r.is_design);
        CHECK(r.lambda == expected[ell - 4]);
        CHECK(r.blocks * binomial(ell, 2) == r.lambda * binomial(13, 2));
    }
}

TEST_CASE("reports are invariant under code automorphisms") {
    ShellsUnionContext ctx(13, 3, 5, fast());
    auto B = ctx.shells_union(5);
    auto rep = check_design(B, 2);

    auto tau = multiplier_permutation(13, 8); // preserves each conjugate
    BlockMultiset moved;
    moved.v = B.v;
    for (const auto& [mask, mult] : B.blocks) moved.add(apply_to_mask(tau, mask), mult);
    auto rep2 = check_design(moved, 2);
    CHECK(rep2.is_design == rep.is_design);
    CHECK(rep2.lambda == rep.lambda);
    CHECK(rep2.block_count == rep.block_count);
}
