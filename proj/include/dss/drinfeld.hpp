#pragma once

// Rank-2 Drinfeld modules phi_T = i(T) + g*tau + Delta*tau^2 over an A-field
// L, where i : A -> L is determined by i(T).  Construction, phi_a expansion,
// the j-invariant, reduction at primes, the kernel-based supersingularity
// test, the Legendre family and F_delta^* membership.

#include <stdexcept>

#include "dss/skew.hpp"

namespace dss {

class BadReduction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class Fld>
struct DrinfeldModule {
  Fld field;
  typename Fld::Elem iT;  // image of T under the structure map
  typename Fld::Elem g;
  typename Fld::Elem delta;  // never zero (rank exactly 2)
};

template <class Fld>
DrinfeldModule<Fld> make_module(Fld field, typename Fld::Elem iT, typename Fld::Elem g,
                                typename Fld::Elem delta) {
  if (field.is_zero(delta))
    throw std::invalid_argument("DrinfeldModule: Delta must be nonzero");
  return {std::move(field), std::move(iT), std::move(g), std::move(delta)};
}

// i(a) = a(i(T)) for a in A
template <class Fld>
typename Fld::Elem iota(const DrinfeldModule<Fld>& dm, const FqPoly& a) {
  auto acc = dm.field.zero();
  const auto& cs = a.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;)
    acc = dm.field.add(dm.field.mul(acc, dm.iT), dm.field.embed_const(cs[i]));
  return acc;
}

template <class Fld>
SkewPoly<Fld> phi_T(const DrinfeldModule<Fld>& dm) {
  return SkewPoly<Fld>(dm.field, {dm.iT, dm.g, dm.delta});
}

// phi_a by Horner expansion of a at phi_T in the skew ring
template <class Fld>
SkewPoly<Fld> phi_of(const DrinfeldModule<Fld>& dm, const FqPoly& a) {
  SkewPoly<Fld> pt = phi_T(dm);
  SkewPoly<Fld> acc = SkewPoly<Fld>::zero(dm.field);
  const auto& cs = a.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) {
    acc = acc.mul(pt);
    acc = acc.add(SkewPoly<Fld>::constant(dm.field, dm.field.embed_const(cs[i])));
  }
  return acc;
}

template <class Fld>
typename Fld::Elem j_invariant(const DrinfeldModule<Fld>& dm) {
  auto p = dm.field.one();
  for (long i = 0; i < dm.field.q() + 1; ++i) p = dm.field.mul(p, dm.g);
  return dm.field.mul(p, dm.field.inv(dm.delta));
}

// The Legendre-type module phi_T = T - (T+Delta) tau + Delta tau^2; the
// identity element then lies in ker(phi_T).
DrinfeldModule<KField> legendre(const Fq& F, const RatFunc& delta);

// Reduce a module over K with integral g, Delta at a monic prime p.
// Throws BadReduction when Delta = 0 mod p.
DrinfeldModule<ResidueField> reduce_at(const DrinfeldModule<KField>& dm, const FqPoly& p);

// Supersingularity at p for a module over a finite A-field with i(p) = 0:
// phi_p is purely inseparable iff its tau-valuation is 2*deg(p).  A
// tau-valuation other than deg(p) or 2*deg(p) cannot occur and raises
// std::logic_error.
template <class Fld>
bool is_supersingular(const DrinfeldModule<Fld>& dm, const FqPoly& p) {
  if (!p.is_monic() || p.is_constant() || !is_irreducible(p))
    throw std::invalid_argument("is_supersingular: p must be a monic prime");
  if (!dm.field.is_zero(iota(dm, p)))
    throw std::invalid_argument("is_supersingular: module not in characteristic p");
  const std::int64_t n = p.deg();
  SkewPoly<Fld> fp = phi_of(dm, p);
  auto v = fp.tau_valuation();
  if (!v || (*v != n && *v != 2 * n))
    throw std::logic_error("is_supersingular: height anomaly in phi_p");
  return *v == 2 * n;
}

// F_delta^* membership: v(j) < -q and (q^2-q) v(delta) = v(g) - v(Delta).
bool f_star_check(const DrinfeldModule<KField>& dm, const RatFunc& delta);

}  // namespace dss
