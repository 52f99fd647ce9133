#include "dss/drinfeld.hpp"

namespace dss {

DrinfeldModule<KField> legendre(const Fq& F, const RatFunc& delta) {
  if (delta.is_zero()) throw std::invalid_argument("legendre: Delta must be nonzero");
  RatFunc T = RatFunc::variable(F);
  return make_module(KField{&F}, T, T.add(delta).neg(), delta);
}

DrinfeldModule<ResidueField> reduce_at(const DrinfeldModule<KField>& dm, const FqPoly& p) {
  if (!p.is_monic() || p.is_constant() || !is_irreducible(p))
    throw std::invalid_argument("reduce_at: p must be a monic prime");
  if (!dm.g.is_polynomial() || !dm.delta.is_polynomial())
    throw std::invalid_argument("reduce_at: g and Delta must be integral");
  ResidueField R(*dm.field.F, p);
  FqPoly g = R.reduce(dm.g.num());
  FqPoly d = R.reduce(dm.delta.num());
  if (d.is_zero()) throw BadReduction("reduce_at: Delta vanishes mod p (rank drops)");
  return {R, R.reduce(FqPoly::variable(*dm.field.F)), std::move(g), std::move(d)};
}

bool f_star_check(const DrinfeldModule<KField>& dm, const RatFunc& delta) {
  if (delta.is_zero()) throw std::invalid_argument("f_star_check: delta must be nonzero");
  const long q = dm.field.q();
  auto vj = j_invariant(dm).valuation();
  if (!vj || !(*vj < -q)) return false;
  auto vg = dm.g.valuation();
  auto vd = dm.delta.valuation();
  auto vdel = delta.valuation();
  if (!vg) return false;  // g = 0 cannot satisfy the valuation equation
  return static_cast<std::int64_t>(q) * (q - 1) * *vdel == *vg - *vd;
}

}  // namespace dss
