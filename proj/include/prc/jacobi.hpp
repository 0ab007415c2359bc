#ifndef PRC_JACOBI_HPP
#define PRC_JACOBI_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "prc/groups.hpp"
#include "prc/prcode.hpp"

namespace prc {

/// J_{C,T}(w,z,x,y): coefficient map keyed by (m1, n1); the other two
/// exponents are determined by m0 = t - m1, n0 = n - t - n1.
struct JacobiPolynomial {
    int t = 0;
    int n = 0;
    std::map<std::pair<int, int>, long long> coeff;

    long long at(int m1, int n1) const {
        auto it = coeff.find({m1, n1});
        return it == coeff.end() ? 0 : it->second;
    }
    // evaluation at w = z = x = y = 1, i.e. |C| (times the number of summed codes)
    long long total() const {
        long long s = 0;
        for (const auto& [k, v] : coeff) s += v;
        return s;
    }
    bool operator==(const JacobiPolynomial& o) const {
        return t == o.t && n == o.n && coeff == o.coeff;
    }
    bool operator<(const JacobiPolynomial& o) const {
        return std::tie(t, n, coeff) < std::tie(o.t, o.n, o.coeff);
    }

    JacobiPolynomial& operator+=(const JacobiPolynomial& o);
};

JacobiPolynomial jacobi(const LinearCode& C, std::uint64_t Tmask, const EnumOptions& opts = {});

/// One enumeration pass recording, per weight, the codeword counts incident
/// to each point and each pair; every |T| <= 2 Jacobi polynomial of the code
/// is a closed-form combination of these.
class PairIncidenceTables {
public:
    PairIncidenceTables(const LinearCode& C, const EnumOptions& opts = {});

    int n() const { return n_; }
    const std::vector<long long>& weights() const { return A_; }
    JacobiPolynomial jacobi_of(std::uint64_t Tmask) const; // popcount(Tmask) <= 2

private:
    int n_;
    std::vector<long long> A_;                 // [w]
    std::vector<std::vector<long long>> N1_;   // [point][w]
    std::vector<std::vector<long long>> N2_;   // [pair colex rank][w]
};

// Sum over the s conjugates C^{sigma^i}. Computed from one enumeration via
// the translation identity J_{C^sigma,T} = J_{C,T^sigma}; set direct = true
// to enumerate every permuted code instead (test oracle).
JacobiPolynomial jacobi_conjugate_sum(const LinearCode& C, const Permutation& sigma, int s,
                                      std::uint64_t Tmask, const EnumOptions& opts = {},
                                      bool direct = false);

// Same, reusing precomputed tables (|T| = 2 only).
JacobiPolynomial jacobi_conjugate_sum(const PairIncidenceTables& tables,
                                      const Permutation& sigma, int s, std::uint64_t Tmask);

/// Conjugate Jacobi sums with precomputed incidence tables for the code and
/// for every intersection of conjugates, so both the plain sum and the
/// union polynomial (shared codewords counted once) are closed-form.
class ConjugateJacobi {
public:
    ConjugateJacobi(const LinearCode& C, const Permutation& sigma, int s,
                    const EnumOptions& opts = {});

    const PairIncidenceTables& tables() const { return base_; }
    const Permutation& sigma() const { return sigma_; }

    // sum of J_{C^{sigma^i},T} over the s conjugates
    JacobiPolynomial conjugate_sum(std::uint64_t Tmask) const;
    // Jacobi polynomial of the union of the s codeword sets: a codeword
    // lying in several conjugates is counted once (inclusion-exclusion)
    JacobiPolynomial union_sum(std::uint64_t Tmask) const;

private:
    struct Leg {
        PairIncidenceTables tables;
        int length = 0;
        int sign = 0;
    };

    Permutation sigma_;
    int s_;
    PairIncidenceTables base_;
    std::vector<Leg> overlap_legs_;
};

struct IndependenceReport {
    bool independent = false;
    std::optional<JacobiPolynomial> common;     // the shared sum, when independent
    std::uint64_t witness_a = 0, witness_b = 0; // differing T's otherwise
    long long subsets_checked = 0;
};

// Checks that the conjugate sum is identical across all C(n,t) subsets T
// (t <= 2). With a group supplied, checks one representative per orbit and
// verifies J_{C,T} is constant on each orbit at sampled members.
IndependenceReport independence_check(const LinearCode& C, const Permutation& sigma, int s,
                                      int t, const EnumOptions& opts = {},
                                      const PermGroup* orbit_group = nullptr);

// Coefficient of z^t x^{n-ell} y^{ell-t}; throws NotIndependent unless the
// caller attests independence held.
long long lambda_from_jacobi(const JacobiPolynomial& sum, int ell, int t,
                             bool independence_verified = true);

} // namespace prc

#endif
