#ifndef HMS_BUILTIN_SPECS_HPP
#define HMS_BUILTIN_SPECS_HPP

#include "hms/tropical.hpp"

namespace hms {

// x_1 + ... + x_n + 1, all heights zero.  Terms: x_1..x_n then the constant.
LaurentPolySpec pants_spec(int n);

// x_1 + ... + x_n + t/(x_1...x_n) + 1; the product term carries height 1.
// Terms: x_1..x_n, then (-1,..,-1), then the constant.
LaurentPolySpec local_pn_spec(int n);

// Degree-3 ruled-surface example: exponents (0,0), (-1,0), (0,-1), (0,1),
// (1,3) with heights (0, 0, 0, 1, 4).  Its subdivision is unimodular but one
// maximal cell misses the origin.
LaurentPolySpec hirzebruch3_spec();

}  // namespace hms

#endif
