#ifndef PRC_HARMONICS_HPP
#define PRC_HARMONICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "prc/blocks.hpp"
#include "prc/groups.hpp"
#include "prc/prcode.hpp"
#include "prc/rat.hpp"

namespace prc {

/// Exact-rational function on the k-subsets of {0,...,v-1}; sparse,
/// absent = 0.
struct SubsetFunction {
    int k = 0;
    int v = 0;
    std::map<std::uint64_t, Rat> values;

    Rat at(std::uint64_t mask) const {
        auto it = values.find(mask);
        return it == values.end() ? Rat(0) : it->second;
    }
    bool is_zero() const;
    bool operator==(const SubsetFunction& o) const;
};

SubsetFunction sf_add(const SubsetFunction& a, const SubsetFunction& b);
SubsetFunction sf_scale(const SubsetFunction& a, const Rat& s);

// Transport along a permutation: act(f, pi)(pi(z)) = f(z).
SubsetFunction act(const SubsetFunction& f, const Permutation& pi);

// Differentiation: each k-subset maps to the sum of its (k-1)-subsets.
SubsetFunction gamma(const SubsetFunction& f);

// Sum of f over the k-subsets of u.
Rat tilde_extend(const SubsetFunction& f, std::uint64_t u_mask);

// (1/|orbit(T)|) * indicator of orbit(T); equals the group average of T.
SubsetFunction reynolds_average(const PermGroup& group, std::uint64_t Tmask);

struct HarmonicBasis {
    int k = 0;
    int v = 0;
    std::vector<SubsetFunction> functions; // integer-valued, primitive, sign-fixed
    int dimension() const { return static_cast<int>(functions.size()); }
};

// Basis of the group-invariant harmonic functions of degree k: exact kernel
// of the map (a_1,...,a_r) -> gamma(sum a_i * orbit-average_i).
HarmonicBasis invariant_harmonic_basis(const PermGroup& H, int k);
// Same computation driven by any orbit partition of the k-subsets.
HarmonicBasis invariant_harmonic_basis_from_orbits(int v, const OrbitPartition& orbits);
// The "full symmetric group" case: single orbit on k-subsets.
HarmonicBasis symmetric_invariant_harmonic_basis(int v, int k);

/// Coefficient of x^{n-w} y^w at index w.
using WeightEnumerator = std::vector<Rat>;

bool enumerator_is_zero(const WeightEnumerator& e);

WeightEnumerator harmonic_weight_enumerator(const LinearCode& C, const SubsetFunction& f,
                                            const EnumOptions& opts = {});

struct VanishReport {
    bool all_zero = false;
    std::vector<WeightEnumerator> sums; // one per basis function
};

// Theorem check: the s-conjugate enumerator sum must vanish for every basis
// function. Uses linearity: the sum equals w_{C, f + act(f,sigma) + ...}.
VanishReport conjugate_vanishing_check(const LinearCode& C, const Permutation& sigma, int s,
                                       const HarmonicBasis& basis, const EnumOptions& opts = {});

// Design criterion via harmonic functions: sum_b mult(b) * tilde_f(b) = 0
// for all f of degree 1..t. With a group (must fix B as a multiset), the
// invariant basis is used; with group == nullptr, a spanning set of the full
// harmonic space, built from differences of indicators projected onto
// ker(gamma) by exact solve.
bool delsarte_design_check(const BlockMultiset& B, int t, const PermGroup* group = nullptr);

} // namespace prc

#endif
