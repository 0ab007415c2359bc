#ifndef PRC_DESIGNS_HPP
#define PRC_DESIGNS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "prc/blocks.hpp"
#include "prc/errors.hpp"
#include "prc/groups.hpp"
#include "prc/prcode.hpp"

namespace prc {

struct DesignReport {
    bool empty = false;      // no blocks at all: vacuously consistent
    bool is_design = false;
    int t = 0;
    long long lambda = 0;    // meaningful when is_design
    long long block_count = 0;
    long long min_count = 0;
    long long max_count = 0;
    std::uint64_t witness = 0; // a t-subset achieving min_count when not a design
};

// Counts, for every t-subset, the total multiplicity of the blocks
// containing it. Requires uniform block size >= t.
DesignReport check_design(const BlockMultiset& B, int t);

/// Union context: enumerate PR_q^m(p) once, reuse supports for every shell
/// of every conjugate.
class ShellsUnionContext {
public:
    ShellsUnionContext(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                       const EnumOptions& opts = {});

    const CyclicCode& code() const { return code_; }
    const Permutation& sigma() const { return sigma_; }

    // Shell of the i-th conjugate code C^{sigma^i}.
    BlockMultiset conjugate_shell(int ell, int i) const;
    // Supports of the union of the m conjugate codeword sets: a codeword
    // lying in several conjugates contributes its support once; distinct
    // codewords with equal support still stack. Resolved by
    // inclusion-exclusion over the conjugate intersections.
    BlockMultiset shells_union(int ell) const;
    // Shell of C itself.
    BlockMultiset base_shell(int ell) const;

    const std::vector<long long>& weight_distribution() const { return weights_; }

private:
    struct Leg {
        std::vector<std::map<std::uint64_t, long long>> by_weight;
        int length = 0;
        int sign = 0;
    };

    CyclicCode code_;
    Permutation sigma_;
    std::vector<Permutation> support_maps_; // mask action of conjugate i
    std::vector<std::map<std::uint64_t, long long>> by_weight_;
    std::vector<long long> weights_;
    std::vector<Leg> overlap_legs_; // conjugate intersections, |S| >= 2
};

BlockMultiset shells_union(std::uint64_t p, std::uint64_t m, std::uint64_t q, int ell,
                           const EnumOptions& opts = {});

struct TableRow {
    int ell = 0;
    bool empty_shell = false;
    bool is_design = false;
    long long lambda = 0;
    long long blocks = 0;
};

std::vector<TableRow> reproduce_table(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                                      int ell_lo, int ell_hi, int t = 2,
                                      const EnumOptions& opts = {});

long long binomial(int n, int k);

} // namespace prc

#endif
