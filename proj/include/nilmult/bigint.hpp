#ifndef NILMULT_BIGINT_HPP
#define NILMULT_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace nilmult {

// All counting and Magnus-coefficient arithmetic is exact; ranks and
// coefficients overflow fixed-width integers quickly.
using Int = boost::multiprecision::cpp_int;

}  // namespace nilmult

#endif  // NILMULT_BIGINT_HPP
