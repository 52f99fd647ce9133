#include "dss/carlitz.hpp"

#include <stdexcept>

namespace dss {

std::int64_t q_power(const Fq& F, long n) {
  if (n < 0) throw std::invalid_argument("q_power: negative exponent");
  std::int64_t v = 1;
  for (long i = 0; i < n; ++i) {
    if (v > (INT64_MAX / F.q())) throw BoundError("q_power: overflow");
    v *= F.q();
  }
  return v;
}

FqPoly bracket(const Fq& F, long n) {
  if (n < 1) throw std::invalid_argument("bracket: n must be positive");
  std::int64_t qn = q_power(F, n);
  if (qn > kMaxPolyDegree) throw BoundError("bracket: degree exceeds bound");
  FqPoly f = FqPoly::monomial(F, F.one(), qn);
  return f.sub(FqPoly::variable(F));
}

FqPoly carlitz_d(const Fq& F, long n) {
  if (n < 0) throw std::invalid_argument("carlitz_d: n must be nonnegative");
  FqPoly d = FqPoly::one(F);
  for (long i = 1; i <= n; ++i) d = bracket(F, i).mul(d.frobenius_pow(1));
  return d;
}

FqPoly carlitz_l(const Fq& F, long n) {
  if (n < 0) throw std::invalid_argument("carlitz_l: n must be nonnegative");
  FqPoly l = FqPoly::one(F);
  for (long i = 1; i <= n; ++i) l = l.mul(bracket(F, i));
  return l;
}

CarlitzProducts carlitz_products(const Fq& F, long n) {
  return {carlitz_d(F, n), carlitz_l(F, n)};
}

}  // namespace dss
