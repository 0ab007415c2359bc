#include "prc/arith.hpp"

#include <algorithm>

namespace prc {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % mod);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    a %= mod;
    while (e) {
        if (e & 1) r = mul_mod(r, a, mod);
        a = mul_mod(a, a, mod);
        e >>= 1;
    }
    return r;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // These witnesses are exact for all n < 2^64.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    a %= m;
    std::uint64_t x = a, d = 1;
    while (x != 1) {
        x = mul_mod(x, a, m);
        ++d;
        if (d > m) throw Error("multiplicative_order: not coprime");
    }
    return d;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw Error("smallest_primitive_root: p not prime");
    if (p == 2) return 1;
    std::vector<std::uint64_t> prime_factors;
    std::uint64_t n = p - 1;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            prime_factors.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) prime_factors.push_back(n);
    for (std::uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::uint64_t f : prime_factors) {
            if (pow_mod(g, (p - 1) / f, p) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw Error("smallest_primitive_root: none found");
}

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
    if (!is_prime(q)) throw Error("PrimeField: modulus " + std::to_string(q) + " is not prime");
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    a %= q_;
    if (a == 0) throw ZeroInverse("inverse of zero in F_" + std::to_string(q_));
    return pow_mod(a, q_ - 2, q_);
}

std::uint64_t field_inverse(std::uint64_t a, std::uint64_t q) {
    return PrimeField(q).inv(a);
}

Poly poly_trim(Poly f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
    return f;
}

Poly poly_add(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return poly_trim(std::move(r));
}

Poly poly_sub(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), 0);
    for (std::size_t i = 0; i < r.c.size(); ++i)
        r.c[i] = F.sub(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    return poly_trim(std::move(r));
}

Poly poly_mul(const PrimeField& F, const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
    }
    return poly_trim(std::move(r));
}

Poly poly_scale(const PrimeField& F, const Poly& a, std::uint64_t s) {
    Poly r = a;
    for (auto& x : r.c) x = F.mul(x, s);
    return poly_trim(std::move(r));
}

void poly_divmod(const PrimeField& F, const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    if (b.is_zero()) throw Error("poly_divmod: division by zero polynomial");
    rem = a;
    quot = Poly{};
    if (a.degree() >= b.degree()) quot.c.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
    std::uint64_t lead_inv = F.inv(b.c.back());
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        std::uint64_t factor = F.mul(rem.c.back(), lead_inv);
        quot.c[static_cast<std::size_t>(shift)] = factor;
        for (int i = 0; i <= b.degree(); ++i) {
            auto idx = static_cast<std::size_t>(i + shift);
            rem.c[idx] = F.sub(rem.c[idx], F.mul(factor, b.c[static_cast<std::size_t>(i)]));
        }
        rem = poly_trim(std::move(rem));
    }
    quot = poly_trim(std::move(quot));
}

Poly poly_mod(const PrimeField& F, const Poly& a, const Poly& b) {
    Poly q, r;
    poly_divmod(F, a, b, q, r);
    return r;
}

bool poly_divides(const PrimeField& F, const Poly& divisor, const Poly& dividend) {
    return poly_mod(F, dividend, divisor).is_zero();
}

std::uint64_t poly_eval(const PrimeField& F, const Poly& f, std::uint64_t x) {
    std::uint64_t r = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) r = F.add(F.mul(r, x), f.c[i]);
    return r;
}

namespace {

// Monic polynomial of degree d whose low coefficients are the base-q digits
// of idx (most significant digit = coefficient of x^{d-1}).
Poly monic_from_index(std::uint64_t q, int d, std::uint64_t idx) {
    Poly f;
    f.c.assign(static_cast<std::size_t>(d) + 1, 0);
    f.c[static_cast<std::size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        f.c[static_cast<std::size_t>(i)] = idx % q;
        idx /= q;
    }
    return f;
}

std::uint64_t pow_checked(std::uint64_t q, int d) {
    std::uint64_t r = 1;
    for (int i = 0; i < d; ++i) {
        if (r > UINT64_MAX / q) throw Error("field order q^d exceeds 64 bits");
        r *= q;
    }
    return r;
}

} // namespace

bool poly_is_irreducible(const PrimeField& F, const Poly& f) {
    int d = f.degree();
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int e = 1; e <= d / 2; ++e) {
        std::uint64_t count = pow_checked(F.q(), e);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            if (poly_divides(F, monic_from_index(F.q(), e, idx), f)) return false;
        }
    }
    return true;
}

Poly find_irreducible(std::uint64_t q, int d) {
    PrimeField F(q);
    if (d < 1) throw Error("find_irreducible: d must be >= 1");
    std::uint64_t count = pow_checked(q, d);
    // Index order is exactly the (c_{d-1},...,c_0) lexicographic order.
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Poly f = monic_from_index(q, d, idx);
        if (poly_is_irreducible(F, f)) return f;
    }
    throw Error("find_irreducible: none found"); // unreachable
}

ExtField::ExtField(std::uint64_t q, Poly modulus) : base_(q), mod_(std::move(modulus)) {
    if (mod_.degree() < 1) throw Error("ExtField: modulus must have degree >= 1");
}

std::uint64_t ExtField::order() const {
    return pow_checked(base_.q(), mod_.degree());
}

ExtField::Elem ExtField::from_index(std::uint64_t idx) const {
    Poly f;
    int d = mod_.degree();
    f.c.assign(static_cast<std::size_t>(d), 0);
    // Base-q digits of idx, least significant into c_0, so increasing idx
    // walks the tuples (c_{d-1},...,c_0) in lexicographic order.
    for (int i = 0; i < d; ++i) {
        f.c[static_cast<std::size_t>(i)] = idx % base_.q();
        idx /= base_.q();
    }
    return poly_trim(std::move(f));
}

ExtField::Elem ExtField::pow(const Elem& a, std::uint64_t e) const {
    Elem r = one();
    Elem base = poly_mod(base_, a, mod_);
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

PthRoot primitive_pth_root(std::uint64_t q, std::uint64_t p) {
    if (!is_prime(q) || !is_prime(p) || p == q)
        throw Error("primitive_pth_root: need distinct primes p, q");
    std::uint64_t d = multiplicative_order(q % p, p);
    ExtField K(q, find_irreducible(q, static_cast<int>(d)));
    std::uint64_t order = K.order();
    std::uint64_t exp = (order - 1) / p;
    for (std::uint64_t idx = 1; idx < order; ++idx) {
        ExtField::Elem beta = K.from_index(idx);
        ExtField::Elem alpha = K.pow(beta, exp);
        if (!K.is_one(alpha) && !alpha.is_zero())
            return PthRoot{d, std::move(K), std::move(alpha)};
    }
    throw Error("primitive_pth_root: no generator found"); // unreachable
}

} // namespace prc
