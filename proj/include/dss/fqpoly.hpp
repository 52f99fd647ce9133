#pragma once

// Dense polynomials over F_q.  Coefficients ascend by T-degree and carry no
// trailing zeros, so representations are canonical and operator== is exact
// equality in A = F_q[T].  The zero polynomial has an empty coefficient
// vector and no degree (degree() returns nullopt rather than a sentinel
// integer).

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dss/fq.hpp"

namespace dss {

class FqPoly {
 public:
  explicit FqPoly(const Fq& F) : F_(&F) {}
  FqPoly(const Fq& F, std::vector<FqElem> coeffs);

  static FqPoly zero(const Fq& F) { return FqPoly(F); }
  static FqPoly one(const Fq& F) { return constant(F, F.one()); }
  static FqPoly constant(const Fq& F, FqElem c);
  static FqPoly monomial(const Fq& F, FqElem c, std::int64_t k);
  static FqPoly variable(const Fq& F) { return monomial(F, F.one(), 1); }  // T

  const Fq& field() const { return *F_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == F_->one(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == F_->one(); }
  bool is_monomial() const;  // exactly one nonzero term

  std::optional<std::int64_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<std::int64_t>(c_.size()) - 1;
  }
  // degree of a nonzero polynomial; throws on zero
  std::int64_t deg() const;

  FqElem coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return FqElem{};
    return c_[static_cast<std::size_t>(i)];
  }
  FqElem leading() const;
  FqElem constant_term() const { return coeff(0); }
  const std::vector<FqElem>& coeffs() const { return c_; }

  std::size_t term_count() const;  // number of nonzero coefficients
  std::vector<std::pair<std::int64_t, FqElem>> terms() const;  // ascending degree

  FqPoly add(const FqPoly& g) const;
  FqPoly sub(const FqPoly& g) const;
  FqPoly neg() const;
  FqPoly mul(const FqPoly& g) const;
  FqPoly mul_scalar(FqElem c) const;
  FqPoly shift(std::int64_t k) const;  // * T^k, k >= 0
  FqPoly monic() const;                // divide by leading coefficient

  // a = q*b + r with deg r < deg b; throws std::domain_error on b = 0
  std::pair<FqPoly, FqPoly> divmod(const FqPoly& b) const;
  FqPoly mod(const FqPoly& b) const { return divmod(b).second; }
  // exact quotient; throws std::logic_error if the remainder is nonzero
  FqPoly divexact(const FqPoly& b) const;

  FqPoly pow(std::uint64_t n) const;
  // f^(q^k): in characteristic p this just multiplies exponents by q^k
  FqPoly frobenius_pow(long k) const;

  FqElem eval(FqElem x) const;

  std::int64_t t_valuation() const;  // largest k with T^k | f; 0 for f = 0

  friend bool operator==(const FqPoly&, const FqPoly&) = default;
  FqPoly operator+(const FqPoly& g) const { return add(g); }
  FqPoly operator-(const FqPoly& g) const { return sub(g); }
  FqPoly operator*(const FqPoly& g) const { return mul(g); }
  FqPoly operator-() const { return neg(); }

  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();
  const Fq* F_;
  std::vector<FqElem> c_;
};

// monic gcd; gcd(0, 0) = 0
FqPoly poly_gcd(FqPoly a, FqPoly b);
// monic g = gcd(a, b) together with s, t satisfying s*a + t*b = g
struct XgcdResult {
  FqPoly g, s, t;
};
XgcdResult poly_xgcd(const FqPoly& a, const FqPoly& b);

// base^n mod m
FqPoly pow_mod(const FqPoly& base, std::uint64_t n, const FqPoly& m);
// inverse of a mod m; throws std::domain_error if gcd(a, m) != 1
FqPoly inv_mod(const FqPoly& a, const FqPoly& m);

// f^n computed through the base-q expansion of n, so large powers of sparse
// polynomials stay sparse (f^(sum d_i q^i) = prod Frob^i(f^(d_i)))
FqPoly pow_base_q(const FqPoly& f, std::uint64_t n);

// Trial division by every monic polynomial of degree <= deg(f)/2.
// Throws std::invalid_argument on constant input.
bool is_irreducible(const FqPoly& f);

// All monic irreducible polynomials of degree d, ordered by coefficient
// tuple from the highest degree down to the constant term (equivalently by
// the integer code sum_i idx(c_i) q^i).  Throws BoundError when q^d exceeds
// kMaxEnumField.
std::vector<FqPoly> monic_irreducibles(const Fq& F, long d);

// Monic polynomial of degree d with the given integer code (see above).
FqPoly monic_from_code(const Fq& F, long d, long code);

}  // namespace dss
