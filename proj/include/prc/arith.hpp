#ifndef PRC_ARITH_HPP
#define PRC_ARITH_HPP

#include <cstdint>
#include <vector>

#include "prc/errors.hpp"

namespace prc {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod);

// Multiplicative order of a modulo m (a, m coprime).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

std::uint64_t smallest_primitive_root(std::uint64_t p);

/// Prime field F_q. Elements are plain uint64_t values in [0, q).
class PrimeField {
public:
    explicit PrimeField(std::uint64_t q);

    std::uint64_t q() const { return q_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % q_; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + q_ - b) % q_; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return mul_mod(a, b, q_); }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
    std::uint64_t inv(std::uint64_t a) const; // throws ZeroInverse on a == 0
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const { return pow_mod(a, e, q_); }

private:
    std::uint64_t q_;
};

/// Polynomial over F_q, coefficients lowest degree first.
/// The zero polynomial is the empty sequence (degree -1 here, standing in
/// for degree -inf); otherwise the leading coefficient is nonzero.
struct Poly {
    std::vector<std::uint64_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    std::uint64_t coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<std::size_t>(i)] : 0;
    }
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_trim(Poly f);
Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b);
Poly poly_scale(const PrimeField& F, const Poly& a, std::uint64_t s);
// Division with remainder; divisor must be nonzero.
void poly_divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem);
Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b);
bool poly_divides(const PrimeField& F, const Poly& divisor, const Poly& dividend);
std::uint64_t poly_eval(const PrimeField& F, const Poly& f, std::uint64_t x);

// Monic polynomial of degree d whose coefficient tuple (c_{d-1},...,c_0),
// compared entrywise as integers, is lexicographically smallest among the
// irreducible ones. Irreducibility by trial division (no factor of degree
// in [1, d/2]).
Poly find_irreducible(std::uint64_t q, int d);
bool poly_is_irreducible(const PrimeField& F, const Poly& f);

/// F_{q^d} = F_q[x] / (modulus), elements held as reduced polynomials.
class ExtField {
public:
    ExtField(std::uint64_t q, Poly modulus);

    using Elem = Poly;

    std::uint64_t q() const { return base_.q(); }
    int d() const { return mod_.degree(); }
    const Poly& modulus() const { return mod_; }
    const PrimeField& base() const { return base_; }
    // q^d; throws Error if it does not fit in 64 bits.
    std::uint64_t order() const;

    Elem zero() const { return Poly{}; }
    Elem one() const { return Poly{{1}}; }
    Elem from_base(std::uint64_t a) const { return a == 0 ? Poly{} : Poly{{a % base_.q()}}; }
    // Element whose coefficient tuple (c_{d-1},...,c_0) is the base-q digits
    // of idx, most significant digit first. Enumerating idx = 0,1,2,...
    // walks the field in coefficient-tuple order.
    Elem from_index(std::uint64_t idx) const;

    Elem add(const Elem& a, const Elem& b) const { return poly_add(base_, a, b); }
    Elem sub(const Elem& a, const Elem& b) const { return poly_sub(base_, a, b); }
    Elem neg(const Elem& a) const { return poly_scale(base_, a, base_.neg(1)); }
    Elem mul(const Elem& a, const Elem& b) const { return poly_mod(base_, poly_mul(base_, a, b), mod_); }
    Elem pow(const Elem& a, std::uint64_t e) const;
    bool is_one(const Elem& a) const { return a.c.size() == 1 && a.c[0] == 1; }

private:
    PrimeField base_;
    Poly mod_;
};

struct PthRoot {
    std::uint64_t d;   // multiplicative order of q mod p
    ExtField field;    // F_{q^d}, modulus = find_irreducible(q, d)
    ExtField::Elem alpha; // primitive p-th root of unity, chosen deterministically
};

// alpha != 1 with alpha^p = 1 in F_{q^d}: enumerate beta in coefficient-tuple
// order, return the first beta^((q^d-1)/p) != 1.
PthRoot primitive_pth_root(std::uint64_t q, std::uint64_t p);

// a^{-1} mod q; throws ZeroInverse on a == 0 (mod q).
std::uint64_t field_inverse(std::uint64_t a, std::uint64_t q);

} // namespace prc

#endif
