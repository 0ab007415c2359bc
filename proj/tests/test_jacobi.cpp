#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/designs.hpp"
#include "prc/errors.hpp"
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

TEST_CASE("empty T recovers the weight enumerator") {
    auto C = build_code(7, 2, 2);
    auto J = jacobi(C.code, 0, fast());
    auto A = weight_distribution(C.code, fast());
    CHECK(J.t == 0);
    for (int w = 0; w <= 7; ++w) CHECK(J.at(0, w) == A[w]);
}

TEST_CASE("known coefficients, length 13") {
    auto C = build_code(13, 3, 5);
    auto J = jacobi(C.code, pair_mask(6, 12), fast());
    CHECK(J.at(0, 0) == 1);     // w^2 x^11
    CHECK(J.at(0, 4) == 168);   // w^2 x^7 y^4
    CHECK(J.at(2, 2) == 28);    // z^2 x^9 y^2
    CHECK(J.at(2, 5) == 12308);
    CHECK(J.at(1, 3) == 168);   // w x^8 y^3 z
    CHECK(J.total() == 1953125);

    auto J2 = jacobi(C.code, pair_mask(4, 7), fast());
    CHECK(J2.at(0, 4) == 164);
    CHECK(J2.at(2, 2) == 24);
    auto J3 = jacobi(C.code, pair_mask(2, 10), fast());
    CHECK(J3.at(0, 4) == 172);
    CHECK(J3.at(2, 2) == 32);
}

TEST_CASE("incidence tables agree with direct enumeration") {
    auto C = build_code(13, 3, 5);
    PairIncidenceTables tables(C.code, fast());
    for (auto T : {std::uint64_t{0}, std::uint64_t{1} << 5, pair_mask(6, 12), pair_mask(0, 1)})
        CHECK(tables.jacobi_of(T) == jacobi(C.code, T, fast()));
}

TEST_CASE("constant on each orbit") {
    auto C = build_code(13, 3, 5);
    PairIncidenceTables tables(C.code, fast());
    auto [H, G] = affine_group(13, 3);
    auto orbits = orbits_on_ksubsets(H, 2);
    for (const auto& orb : orbits.orbits) {
        auto ref = tables.jacobi_of(orb.front());
        CHECK(tables.jacobi_of(orb[orb.size() / 2]) == ref);
        CHECK(tables.jacobi_of(orb.back()) == ref);
    }
}

TEST_CASE("translation identity") {
    auto C = build_code(13, 3, 5);
    auto sigma = conjugating_permutation(13, 3);
    std::uint64_t T = pair_mask(4, 7);
    // J over the permuted code equals J over C at the translated subset
    auto lhs = jacobi(permute_code(C.code, sigma), T, fast());
    auto rhs = jacobi(C.code, apply_to_mask(sigma, T), fast());
    CHECK(lhs == rhs);
}

TEST_CASE("conjugate sum routes agree") {
    auto C = build_code(13, 3, 5);
    auto sigma = conjugating_permutation(13, 3);
    std::uint64_t T = pair_mask(6, 12);
    auto via_translation = jacobi_conjugate_sum(C.code, sigma, 3, T, fast());
    auto via_direct = jacobi_conjugate_sum(C.code, sigma, 3, T, fast(), true);
    CHECK(via_translation == via_direct);

    PairIncidenceTables tables(C.code, fast());
    CHECK(jacobi_conjugate_sum(tables, sigma, 3, T) == via_translation);

    // s = 1 degenerates to the plain polynomial
    CHECK(jacobi_conjugate_sum(C.code, sigma, 1, T, fast()) == jacobi(C.code, T, fast()));

    // lambda at the smallest weights
    CHECK(via_translation.at(2, 2) == 84);  // 28 + 24 + 32
    CHECK(via_translation.at(2, 3) == 820); // 280 + 288 + 252
}

TEST_CASE("independence") {
    auto C = build_code(13, 3, 5);
    auto sigma = conjugating_permutation(13, 3);
    auto rep = independence_check(C.code, sigma, 3, 2, fast());
    CHECK(rep.independent);
    CHECK(rep.subsets_checked == 78);
    REQUIRE(rep.common.has_value());
    CHECK(rep.common->at(2, 2) == 84);

    // a single code's Jacobi polynomial does depend on T
    auto single = independence_check(C.code, Permutation::identity(13), 1, 2, fast());
    CHECK_FALSE(single.independent);
    CHECK(single.witness_a != single.witness_b);

    // orbit-driven variant agrees
    auto [H, G] = affine_group(13, 3);
    auto orbit_rep = independence_check(C.code, sigma, 3, 2, fast(), &H);
    CHECK(orbit_rep.independent);
    CHECK(orbit_rep.subsets_checked == 3);
    CHECK(*orbit_rep.common == *rep.common);
}

TEST_CASE("lambda extraction") {
    auto C = build_code(13, 3, 5);
    auto sigma = conjugating_permutation(13, 3);
    auto sum = jacobi_conjugate_sum(C.code, sigma, 3, pair_mask(6, 12), fast());
    CHECK(lambda_from_jacobi(sum, 4, 2) == 84);
    CHECK_THROWS_AS(lambda_from_jacobi(sum, 4, 2, false), NotIndependent);

    // coefficient totals per weight recover s * A_w
    auto A = weight_distribution(C.code, fast());
    for (int w = 0; w <= 13; ++w) {
        long long s = 0;
        for (const auto& [key, v] : sum.coeff)
            if (key.first + key.second == w) s += v;
        CHECK(s == 3 * A[w]);
    }
}

TEST_CASE("union polynomial matches the counted designs") {
    ConjugateJacobi cj(build_code(13, 3, 5).code, conjugating_permutation(13, 3), 3, fast());
    auto u = cj.union_sum(pair_mask(6, 12));
    auto rows = reproduce_table(13, 3, 5, 4, 12, 2, fast());
    for (const auto& r : rows) CHECK(lambda_from_jacobi(u, r.ell, 2) == r.lambda);

    // evaluation at 1 counts the distinct codewords of the union:
    // 3|C| - 3|C cap C^sigma| + |triple| = 3*5^9 - 3*5^5 + 5
    CHECK(u.total() == 5850005);

    // the union polynomial is the same for every choice of T
    CHECK(cj.union_sum(pair_mask(4, 7)) == u);
    CHECK(cj.union_sum(pair_mask(0, 1)) == u);

    // no overlap below the intersection's minimum weight
    auto c = cj.conjugate_sum(pair_mask(6, 12));
    CHECK(lambda_from_jacobi(c, 4, 2) == lambda_from_jacobi(u, 4, 2));
    CHECK(lambda_from_jacobi(c, 7, 2) != lambda_from_jacobi(u, 7, 2));
}
