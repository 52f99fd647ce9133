#pragma once

// Exact arithmetic in the finite field F_q, q = p^e.
//
// Elements are stored as a single byte index in [0, q).  The index encodes
// the coordinates of the element over the prime field in mixed radix base p:
// the element c_0 + c_1*u + ... + c_{e-1}*u^{e-1} (u a root of the defining
// modulus) has index c_0 + c_1*p + ... + c_{e-1}*p^{e-1}.  All arithmetic is
// table lookup, so a context is cheap to share and safe to use concurrently
// once built.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace dss {

inline constexpr long kMaxQ = 64;                      // largest supported q
inline constexpr std::int64_t kMaxPolyDegree = 200000; // global T-degree bound
inline constexpr long kMaxEnumField = 4096;            // enumeration bound on q^d

// Raised when a computation would exceed a configured size bound.
class BoundError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FqElem {
  std::uint8_t v = 0;
  friend bool operator==(FqElem, FqElem) = default;
};

class Fq {
 public:
  long p() const { return p_; }
  long e() const { return e_; }
  long q() const { return q_; }

  // Digits of the defining modulus over F_p, ascending degree, length e+1,
  // leading digit 1.  For e = 1 this is (0, 1), i.e. the polynomial u.
  const std::vector<std::uint8_t>& modulus_digits() const { return modulus_; }

  FqElem zero() const { return {}; }
  FqElem one() const { return {1}; }
  FqElem elem(long index) const;       // index in [0, q)
  FqElem from_int(long n) const;       // n mod p, embedded via the prime field
  FqElem minus_one() const { return neg(one()); }

  bool is_zero(FqElem a) const { return a.v == 0; }

  FqElem add(FqElem a, FqElem b) const { return {add_[idx(a, b)]}; }
  FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
  FqElem mul(FqElem a, FqElem b) const { return {mul_[idx(a, b)]}; }
  FqElem neg(FqElem a) const { return {neg_[a.v]}; }
  FqElem inv(FqElem a) const;
  FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
  FqElem pow(FqElem a, std::uint64_t n) const;

  // Coordinates over the prime field, ascending; length e.
  std::vector<std::uint8_t> digits(FqElem a) const;
  FqElem from_digits(const std::vector<std::uint8_t>& d) const;

  std::string to_string(FqElem a) const;  // "2", "u", "u+1", "2*u^2+1", ...

  Fq(const Fq&) = delete;
  Fq& operator=(const Fq&) = delete;

 private:
  friend const Fq& make_context(long, long);
  Fq(long p, long e);

  std::size_t idx(FqElem a, FqElem b) const {
    return static_cast<std::size_t>(a.v) * q_ + b.v;
  }

  long p_, e_, q_;
  std::vector<std::uint8_t> modulus_;
  std::vector<std::uint8_t> add_, mul_;  // q*q tables
  std::vector<std::uint8_t> neg_, inv_;  // q tables; inv_[0] unused
};

// Returns the interned context for F_{p^e}.  Deterministic: the modulus is
// the lexicographically smallest monic irreducible of degree e over F_p
// (coefficients compared from the highest degree down, constant term last).
// Throws std::invalid_argument for non-prime p or e < 1, BoundError when
// p^e exceeds kMaxQ.
const Fq& make_context(long p, long e);

}  // namespace dss
