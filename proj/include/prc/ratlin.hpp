#ifndef PRC_RATLIN_HPP
#define PRC_RATLIN_HPP

#include <vector>

#include "prc/rat.hpp"

namespace prc {

using IntMatrix = std::vector<std::vector<Int>>;
using RatMatrix = std::vector<std::vector<Rat>>;

int rat_rank(RatMatrix M);

// Solves M x = b for square nonsingular M; throws Error when singular.
std::vector<Rat> rat_solve(RatMatrix M, std::vector<Rat> b);

// Basis of { x : M x = 0 } by fraction-free (Bareiss) elimination over the
// integers. Each vector is primitive (integer entries, content 1) with its
// first nonzero entry positive; vectors are ordered by free column.
std::vector<std::vector<Int>> integer_kernel(IntMatrix M);

// Scales to a primitive integer vector, first nonzero entry positive.
// Zero vector stays zero.
std::vector<Int> primitive_normalize(const std::vector<Rat>& v);

// True iff v lies in the span of the given vectors (all same length).
bool in_span(const std::vector<std::vector<Rat>>& span, const std::vector<Rat>& v);

} // namespace prc

#endif
