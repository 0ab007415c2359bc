#ifndef PRC_RAT_HPP
#define PRC_RAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace prc {

// All exact arithmetic in the project runs on these; no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Rat rat_from_string(const std::string& s);

} // namespace prc

#endif
