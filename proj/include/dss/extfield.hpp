#pragma once

// Finite extensions L of F_q, used as the ambient field for torsion kernels
// and the supersingular j-invariant scan.  Elements are coordinate vectors
// over F_q in the basis 1, w, ..., w^(d-1), where w is a root of the
// canonical (smallest) monic irreducible of degree d.  Field sizes are
// bounded by kMaxEnumField, so d <= 12 and coordinates fit a fixed array.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "dss/fqpoly.hpp"

namespace dss {

inline constexpr long kMaxExtDegree = 12;

struct ExtElem {
  std::array<FqElem, kMaxExtDegree> c{};
  friend bool operator==(const ExtElem&, const ExtElem&) = default;
};

class ExtField {
 public:
  // interned; throws BoundError when q^d exceeds kMaxEnumField
  static const ExtField& get(const Fq& F, long d);

  const Fq& base() const { return *F_; }
  long degree() const { return d_; }
  long size() const { return size_; }
  const FqPoly& defining_poly() const { return defining_; }

  ExtElem zero() const { return {}; }
  ExtElem one() const { return from_base(F_->one()); }
  ExtElem gen() const;  // w
  ExtElem from_base(FqElem a) const;

  // enumeration in a fixed order: index = sum_i idx(c_i) q^i
  ExtElem from_index(long idx) const;
  long index(const ExtElem& a) const;

  bool is_zero(const ExtElem& a) const;

  ExtElem add(const ExtElem& a, const ExtElem& b) const;
  ExtElem sub(const ExtElem& a, const ExtElem& b) const;
  ExtElem neg(const ExtElem& a) const;
  ExtElem mul(const ExtElem& a, const ExtElem& b) const;
  ExtElem inv(const ExtElem& a) const;
  ExtElem div(const ExtElem& a, const ExtElem& b) const { return mul(a, inv(b)); }
  ExtElem pow(const ExtElem& a, std::uint64_t n) const;

  // x -> x^q (the precomputed F_q-linear map) and its iterates
  ExtElem frobenius_q(const ExtElem& a) const;
  ExtElem frobenius_qn(const ExtElem& a, long n) const;

  // a(x) for a in A = F_q[T]
  ExtElem eval_poly(const FqPoly& a, const ExtElem& x) const;

  std::string to_string(const ExtElem& a) const;  // polynomial in w

  ExtField(const ExtField&) = delete;
  ExtField& operator=(const ExtField&) = delete;

 private:
  ExtField(const Fq& F, long d);

  const Fq* F_;
  long d_, size_;
  FqPoly defining_;
  std::vector<ExtElem> frob_basis_;   // (w^i)^q for i < d
  std::vector<ExtElem> red_high_;     // w^(d+i) reduced, i < d-1
};

// First root of p in L in enumeration order; p monic irreducible with
// deg(p) | deg(L).  Throws std::logic_error if no root exists.
ExtElem embed_prime_root(const FqPoly& p, const ExtField& L);

// Writes x, assumed fixed by the (q^n)-power Frobenius with n = deg(p), as
// c(t0) for a unique c in A of degree < n.  Throws std::invalid_argument
// when x is not Frobenius-fixed and std::logic_error if the linear system
// degenerates.
FqPoly subfield_express(const ExtField& L, const ExtElem& x, const ExtElem& t0,
                        const FqPoly& p);

}  // namespace dss
