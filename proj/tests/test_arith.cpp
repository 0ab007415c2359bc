#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/arith.hpp"
#include "prc/errors.hpp"

using namespace prc;

TEST_CASE("primality and orders") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK(is_prime(31));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));

    CHECK(multiplicative_order(2, 31) == 5);
    CHECK(multiplicative_order(5, 13) == 4);
    CHECK(multiplicative_order(2, 7) == 3);

    CHECK(smallest_primitive_root(31) == 3);
    CHECK(smallest_primitive_root(13) == 2);
    CHECK(smallest_primitive_root(7) == 3);
}

TEST_CASE("prime field inverses") {
    for (std::uint64_t q : {2ull, 5ull, 7ull, 31ull}) {
        PrimeField F(q);
        for (std::uint64_t a = 1; a < q; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
        CHECK_THROWS_AS(F.inv(0), ZeroInverse);
    }
    CHECK(field_inverse(3, 7) == 5);
    CHECK_THROWS_AS(field_inverse(0, 5), ZeroInverse);
}

TEST_CASE("polynomial ring laws") {
    PrimeField F(5);
    Poly f{{2, 0, 3, 1}};
    Poly g{{1, 4, 2}};
    Poly h{{3, 1}};

    CHECK(poly_mul(F, f, g) == poly_mul(F, g, f));
    CHECK(poly_mul(F, poly_mul(F, f, g), h) == poly_mul(F, f, poly_mul(F, g, h)));
    CHECK(poly_mul(F, f, poly_add(F, g, h)) ==
          poly_add(F, poly_mul(F, f, g), poly_mul(F, f, h)));

    Poly quot, rem;
    poly_divmod(F, f, h, quot, rem);
    CHECK(poly_add(F, poly_mul(F, quot, h), rem) == f);
    CHECK(rem.degree() < h.degree());

    CHECK(poly_mod(F, poly_mul(F, f, g), g).is_zero());
    CHECK(poly_divides(F, g, poly_mul(F, f, g)));
    CHECK_FALSE(poly_divides(F, Poly{{1, 1}}, Poly{{1, 0, 1}})); // x+1 | x^2+1 fails mod 5

    CHECK(poly_eval(F, f, 2) == (2 + 3 * 4 + 8) % 5);
}

TEST_CASE("irreducibility") {
    PrimeField F2(2), F5(5);
    CHECK(poly_is_irreducible(F2, Poly{{1, 1, 0, 1}}));  // x^3 + x + 1
    CHECK(poly_is_irreducible(F2, Poly{{1, 0, 1, 1}}));  // x^3 + x^2 + 1
    CHECK_FALSE(poly_is_irreducible(F2, Poly{{1, 0, 0, 1}}));
    CHECK_FALSE(poly_is_irreducible(F5, Poly{{1, 0, 1}})); // x^2+1 = (x+2)(x+3)
    CHECK(poly_is_irreducible(F5, Poly{{2, 1, 1}}));

    // minimality check against exhaustive scan over monic degree-3 polys
    Poly picked = find_irreducible(2, 3);
    CHECK(picked.degree() == 3);
    CHECK(poly_is_irreducible(F2, picked));
    bool earlier_irreducible = false;
    for (std::uint64_t idx = 0; idx < 8; ++idx) {
        Poly cand{{idx & 1, (idx >> 1) & 1, (idx >> 2) & 1, 1}};
        if (cand == picked) break;
        if (poly_is_irreducible(F2, poly_trim(cand))) earlier_irreducible = true;
    }
    CHECK_FALSE(earlier_irreducible);
}

TEST_CASE("extension field") {
    ExtField F(2, find_irreducible(2, 5));
    CHECK(F.order() == 32);
    auto a = F.from_index(19);
    auto b = F.from_index(27);
    auto c = F.from_index(6);
    CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
    CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
    // Lagrange: beta^(order-1) = 1 for nonzero beta
    CHECK(F.is_one(F.pow(a, 31)));
    // from_index walks coefficient tuples: index q^d - 1 is all "q-1" digits
    auto top = F.from_index(31);
    CHECK(top.degree() == 4);
}

TEST_CASE("primitive p-th roots") {
    {
        PthRoot r = primitive_pth_root(2, 31);
        CHECK(r.d == 5);
        CHECK(r.field.is_one(r.field.pow(r.alpha, 31)));
        CHECK_FALSE(r.field.is_one(r.alpha));
        for (int k = 1; k < 31; ++k) CHECK_FALSE(r.field.is_one(r.field.pow(r.alpha, k)));
    }
    {
        PthRoot r = primitive_pth_root(5, 13);
        CHECK(r.d == 4);
        CHECK(r.field.order() == 625);
        CHECK(r.field.is_one(r.field.pow(r.alpha, 13)));
        CHECK_FALSE(r.field.is_one(r.alpha));
    }
}
