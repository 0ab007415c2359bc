#ifndef PRC_PRCODE_HPP
#define PRC_PRCODE_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "prc/arith.hpp"
#include "prc/blocks.hpp"
#include "prc/errors.hpp"
#include "prc/groups.hpp"

namespace prc {

inline constexpr std::uint64_t DEFAULT_ENUM_CAP = std::uint64_t{1} << 26;

struct EnumOptions {
    std::uint64_t cap = DEFAULT_ENUM_CAP;
    int threads = 1;
};

/// Coset decomposition of F_p^* by the m-th powers: cosets[i] = g^i * A_0,
/// g the smallest primitive root mod p.
struct ResidueCosets {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t primitive_root = 0;
    std::vector<std::vector<std::uint64_t>> cosets; // each sorted ascending
};

ResidueCosets residue_cosets(std::uint64_t p, std::uint64_t m);

/// A linear code given by a generator matrix; rows are full codewords.
struct LinearCode {
    int n = 0;
    std::uint64_t q = 0;
    std::vector<std::vector<std::uint8_t>> rows; // dim x n, entries in [0, q)

    int dim() const { return static_cast<int>(rows.size()); }
};

/// PR_q^m(p): cyclic, length p, generated by the product of (x - alpha^a)
/// over the m-th power residues a. Coordinate i corresponds to x^i.
struct CyclicCode {
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t q = 0;
    Poly generator;
    LinearCode code; // row r = x^r * g(x)
};

// Product of (x - alpha^a) over a in cosets[coset_index], computed in
// F_{q^d} and projected to F_q. Throws CoefficientOutsideBaseField if a
// coefficient fails to land in the base field.
Poly coset_generator_polynomial(std::uint64_t p, std::uint64_t m, std::uint64_t q,
                                std::size_t coset_index);

// The coset_index = 0 case, with the precondition q mod p in A_0 enforced
// (throws NotResidue otherwise).
Poly generator_polynomial(std::uint64_t p, std::uint64_t m, std::uint64_t q);

CyclicCode build_code(std::uint64_t p, std::uint64_t m, std::uint64_t q);

// q^dim, throwing CapExceeded (carrying the required count) when above cap.
std::uint64_t code_size_checked(const LinearCode& C, std::uint64_t cap);
std::uint64_t code_size(const LinearCode& C);

/// Visits every codeword exactly once, message indices in [begin, end).
/// Message index -> digits base q, codeword = sum digit_j * row_j. The
/// visitor receives (entries, support_mask, weight).
template <class Visitor>
void enumerate_range(const LinearCode& C, std::uint64_t begin, std::uint64_t end,
                     Visitor&& visit) {
    const int n = C.n;
    const int k = C.dim();
    const std::uint64_t q = C.q;
    std::vector<std::uint8_t> digits(static_cast<std::size_t>(k), 0);
    std::vector<std::uint8_t> cur(static_cast<std::size_t>(n), 0);
    {
        std::uint64_t t = begin;
        for (int j = 0; j < k && t; ++j) {
            digits[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(t % q);
            t /= q;
        }
    }
    for (int j = 0; j < k; ++j) {
        std::uint8_t d = digits[static_cast<std::size_t>(j)];
        if (!d) continue;
        const auto& row = C.rows[static_cast<std::size_t>(j)];
        for (int i = 0; i < n; ++i)
            cur[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(
                (cur[static_cast<std::size_t>(i)] + static_cast<std::uint64_t>(d) * row[static_cast<std::size_t>(i)]) % q);
    }
    for (std::uint64_t idx = begin; idx < end; ++idx) {
        std::uint64_t mask = 0;
        int w = 0;
        for (int i = 0; i < n; ++i) {
            if (cur[static_cast<std::size_t>(i)]) {
                mask |= std::uint64_t{1} << i;
                ++w;
            }
        }
        visit(cur.data(), mask, w);
        // mixed-radix odometer; each unit step adds one generator row
        int j = 0;
        while (j < k) {
            const auto& row = C.rows[static_cast<std::size_t>(j)];
            for (int i = 0; i < n; ++i) {
                std::uint8_t s = static_cast<std::uint8_t>(cur[static_cast<std::size_t>(i)] + row[static_cast<std::size_t>(i)]);
                cur[static_cast<std::size_t>(i)] = s >= q ? static_cast<std::uint8_t>(s - q) : s;
            }
            auto& d = digits[static_cast<std::size_t>(j)];
            if (++d == q) { d = 0; ++j; } else break;
        }
    }
}

// A_w = number of codewords of weight w, indices 0..n.
std::vector<long long> weight_distribution(const LinearCode& C, const EnumOptions& opts = {});

// Support multisets of all codewords, grouped by weight (index 0..n).
std::vector<std::map<std::uint64_t, long long>> supports_by_weight(const LinearCode& C,
                                                                   const EnumOptions& opts = {});

// Multiset of supports of the weight-ell codewords.
BlockMultiset shell(const LinearCode& C, int ell, const EnumOptions& opts = {});

// Codeword set {c o pi : c in C} via column permutation of the rows.
LinearCode permute_code(const LinearCode& C, const Permutation& pi);

LinearCode dual(const LinearCode& C);

// Code {c : c in A and c in B}, as a basis of the row-space intersection.
LinearCode intersection_code(const LinearCode& A, const LinearCode& B);

/// One rotation class of intersections of two or more conjugates
/// C^{sigma^i}, i in S: `code` is the representative with 0 in S, `length`
/// the number of distinct shifts S + r, `sign` the inclusion-exclusion
/// sign (-1)^(|S|+1).
struct ConjugateIntersection {
    LinearCode code;
    int length = 0;
    int sign = 0;
};

// All rotation classes with |S| >= 2; together with the conjugates
// themselves they resolve the union of the s codeword sets by
// inclusion-exclusion.
std::vector<ConjugateIntersection> conjugate_intersections(const LinearCode& C,
                                                           const Permutation& sigma, int s);

/// Row-echelon form of the generator matrix, for membership tests.
class CodeMembership {
public:
    explicit CodeMembership(const LinearCode& C);
    bool contains(const std::vector<std::uint8_t>& word) const;
    int rank() const { return static_cast<int>(echelon_.size()); }

private:
    int n_;
    std::uint64_t q_;
    std::vector<std::vector<std::uint8_t>> echelon_;
    std::vector<int> pivot_;
};

bool same_codeword_set(const LinearCode& A, const LinearCode& B);

// Checks that the rows of C permuted by pi^i all lie in the power residue
// code generated from coset A_{i mod m} (root-set membership, exact).
bool verify_conjugate_code(const CyclicCode& C, const Permutation& pi, int power);

// Text round trip: "p m q k" header, generator coefficients low-to-high,
// then the k generator rows.
std::string export_code(const CyclicCode& C);
CyclicCode import_code(const std::string& text);

} // namespace prc

#endif
