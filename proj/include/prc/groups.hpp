#ifndef PRC_GROUPS_HPP
#define PRC_GROUPS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "prc/errors.hpp"

namespace prc {

/// Permutation of {0,...,n-1}; images[i] is the image of point i.
struct Permutation {
    std::vector<int> images;

    int degree() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[static_cast<std::size_t>(i)]; }
    bool operator==(const Permutation& o) const { return images == o.images; }
    bool operator<(const Permutation& o) const { return images < o.images; }

    static Permutation identity(int n);
    bool is_identity() const;
};

// (a * b)(i) = a(b(i))
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& a);
Permutation perm_power(const Permutation& a, int e);

// Image of a point-set bitmask: { p(i) : i in mask }.
std::uint64_t apply_to_mask(const Permutation& p, std::uint64_t mask);

// i -> i + 1 (mod p)
Permutation shift_permutation(int p);
// i -> a*i (mod p)
Permutation multiplier_permutation(int p, std::uint64_t a);

/// Group of permutations given by generators; elements materialized by
/// breadth-first closure on first use.
class PermGroup {
public:
    explicit PermGroup(std::vector<Permutation> generators);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return gens_; }
    const std::vector<Permutation>& elements() const; // sorted, computed lazily
    long long order() const { return static_cast<long long>(elements().size()); }
    bool contains(const Permutation& p) const;

private:
    int degree_;
    std::vector<Permutation> gens_;
    mutable std::vector<Permutation> elems_; // empty until closure runs
};

struct OrbitPartition {
    int k = 0;
    // Orbits sorted by representative; each orbit sorted; representative =
    // lexicographically smallest member (== numerically smallest mask).
    std::vector<std::vector<std::uint64_t>> orbits;
    std::vector<std::uint64_t> representatives;

    // Index of the orbit containing the given k-subset, or -1.
    int orbit_of(std::uint64_t mask) const;
};

// (H, G) of the affine construction: G = <shift, mult by g>,
// H = <shift, mult by g^m>, g the smallest primitive root mod p.
std::pair<PermGroup, PermGroup> affine_group(std::uint64_t p, std::uint64_t m);

OrbitPartition orbits_on_ksubsets(const PermGroup& group, int k);

// True iff gHg^{-1} = H for every generator g of G. Throws NotSubgroup if
// H is not contained in G.
bool is_normal(const PermGroup& H, const PermGroup& G);

// Number of elements fixing the subset setwise (a single point is the
// one-element subset).
long long stabilizer_order(const PermGroup& group, std::uint64_t subset_mask);

// tau_g for the smallest primitive root g mod p, verified to act on the m
// H-orbits of pairs as one m-cycle. Throws CyclicActionFailed otherwise.
Permutation conjugating_permutation(std::uint64_t p, std::uint64_t m);

} // namespace prc

#endif
