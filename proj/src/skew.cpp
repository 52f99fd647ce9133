#include "dss/skew.hpp"

#include <stdexcept>

namespace dss {

namespace {

long count_roots_scan(const SkewPoly<ExtFieldRef>& f) {
  const ExtField& M = *f.field().E;
  long count = 0;
  for (long idx = 0; idx < M.size(); ++idx)
    if (M.is_zero(f.eval(M.from_index(idx)))) ++count;
  return count;
}

}  // namespace

long count_roots_in(const SkewPoly<ResidueField>& f, const ExtField& M) {
  const ResidueField& R = f.field();
  if (&M.base() != R.F) throw std::invalid_argument("count_roots_in: base field mismatch");
  ExtElem t0 = embed_prime_root(R.p, M);  // checks deg(p) | deg(M)
  std::vector<ExtElem> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) coeffs.push_back(M.eval_poly(c, t0));
  SkewPoly<ExtFieldRef> g(ExtFieldRef{&M}, std::move(coeffs));
  return count_roots_scan(g);
}

long count_roots_in(const SkewPoly<ExtFieldRef>& f, const ExtField& M) {
  const ExtField& L = *f.field().E;
  if (&L == &M) return count_roots_scan(f);
  if (&L.base() != &M.base() || M.degree() % L.degree() != 0)
    throw std::invalid_argument("count_roots_in: L does not embed in M");
  // embed L into M by sending the generator of L to the first root of its
  // defining polynomial, then evaluating coordinate vectors there
  ExtElem r = embed_prime_root(L.defining_poly(), M);
  std::vector<ExtElem> coeffs;
  coeffs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    ExtElem acc = M.zero();
    for (long i = L.degree() - 1; i >= 0; --i)
      acc = M.add(M.mul(acc, r), M.from_base(c.c[static_cast<std::size_t>(i)]));
    coeffs.push_back(acc);
  }
  SkewPoly<ExtFieldRef> g(ExtFieldRef{&M}, std::move(coeffs));
  return count_roots_scan(g);
}

}  // namespace dss
