#pragma once

// Carlitz brackets and factorials over A = F_q[T]:
//   [n] = T^(q^n) - T
//   D_n = [n] [n-1]^q ... [1]^(q^(n-1)),   D_0 = 1
//   L_n = [n] [n-1] ... [1],               L_0 = 1

#include "dss/fqpoly.hpp"

namespace dss {

// [n]; n >= 1.  Throws BoundError once q^n exceeds the degree bound.
FqPoly bracket(const Fq& F, long n);

// D_n via D_n = [n] * D_{n-1}^q
FqPoly carlitz_d(const Fq& F, long n);

// L_n via L_n = [n] * L_{n-1}
FqPoly carlitz_l(const Fq& F, long n);

struct CarlitzProducts {
  FqPoly d, l;
};
CarlitzProducts carlitz_products(const Fq& F, long n);  // n >= 0

// q^n as int64 with an overflow guard
std::int64_t q_power(const Fq& F, long n);

}  // namespace dss
