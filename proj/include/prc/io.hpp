#ifndef PRC_IO_HPP
#define PRC_IO_HPP

#include <string>

#include "prc/blocks.hpp"
#include "prc/harmonics.hpp"
#include "prc/jacobi.hpp"

namespace prc {

// "v h" header, then one block per line: sorted points, "*", multiplicity.
std::string format_blocks(const BlockMultiset& B);
BlockMultiset parse_blocks(const std::string& text);

// One monomial per line: "coeff w^a z^b x^c y^d", zero exponents omitted,
// sorted by (b, d) ascending.
std::string format_jacobi_text(const JacobiPolynomial& J);
std::string format_jacobi_json(const JacobiPolynomial& J);

// One line per supported subset: sorted points then the value "num/den".
std::string format_subset_function(const SubsetFunction& f);
SubsetFunction parse_subset_function(const std::string& text, int v);

// One line per weight: "w num/den"; zero coefficients skipped.
std::string format_enumerator(const WeightEnumerator& e);

} // namespace prc

#endif
