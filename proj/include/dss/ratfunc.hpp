#pragma once

// The rational function field K = F_q(T).  A RatFunc is always canonical:
// the denominator is monic and coprime to the numerator, and zero is 0/1.
// Canonical form makes operator== exact equality in K.

#include <cstdint>
#include <optional>
#include <string>

#include "dss/fqpoly.hpp"

namespace dss {

class RatFunc {
 public:
  explicit RatFunc(const Fq& F) : num_(F), den_(FqPoly::one(F)) {}
  explicit RatFunc(FqPoly num) : num_(std::move(num)), den_(FqPoly::one(num_.field())) {}
  RatFunc(FqPoly num, FqPoly den);  // normalizes

  static RatFunc zero(const Fq& F) { return RatFunc(F); }
  static RatFunc one(const Fq& F) { return RatFunc(FqPoly::one(F)); }
  static RatFunc variable(const Fq& F) { return RatFunc(FqPoly::variable(F)); }
  static RatFunc from_int(const Fq& F, long n) {
    return RatFunc(FqPoly::constant(F, F.from_int(n)));
  }
  // T^k for any sign of k
  static RatFunc t_power(const Fq& F, std::int64_t k);

  const Fq& field() const { return num_.field(); }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc add(const RatFunc& g) const;
  RatFunc sub(const RatFunc& g) const;
  RatFunc neg() const;
  RatFunc mul(const RatFunc& g) const;
  RatFunc div(const RatFunc& g) const;
  RatFunc inv() const;
  RatFunc mul_scalar(FqElem c) const;
  RatFunc pow(std::int64_t n) const;
  RatFunc frobenius_pow(long k) const;  // f^(q^k)

  // v(num/den) = deg den - deg num, v(0) = +infinity (nullopt)
  std::optional<std::int64_t> valuation() const;

  friend bool operator==(const RatFunc&, const RatFunc&) = default;
  RatFunc operator+(const RatFunc& g) const { return add(g); }
  RatFunc operator-(const RatFunc& g) const { return sub(g); }
  RatFunc operator*(const RatFunc& g) const { return mul(g); }
  RatFunc operator-() const { return neg(); }

  // "num" when the denominator is 1, otherwise "(num)/(den)"
  std::string to_string(const std::string& var = "T") const;

 private:
  void normalize();
  FqPoly num_, den_;
};

// v(r) for r given as an unreduced fraction; reduction never changes it
std::optional<std::int64_t> fraction_valuation(const FqPoly& num, const FqPoly& den);

}  // namespace dss
