#include "dss/legendre.hpp"

#include <stdexcept>

#include "dss/carlitz.hpp"

namespace dss {

namespace {

void check_subset_count(long n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > 30) throw BoundError("subset enumeration bound exceeded");
}

// sum over S subset {0..n-1} of sign(S) * X^w(S) / m(S), with
// sign(S) = (-1)^(n-|S|) when signed, else 1
SeriesPoly subset_sum(const Fq& F, long n, const char* var, bool signed_terms) {
  check_subset_count(n);
  SeriesPoly out(F, var);
  FqElem m1 = F.minus_one();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    IndexSet s{bits};
    ShadowStats st = shadow_stats(F, s);
    FqElem c = F.one();
    if (signed_terms && ((n - s.size()) % 2 == 1)) c = m1;
    out.add_term(st.weight, RatFunc(FqPoly::constant(F, c), st.monomial));
  }
  return out;
}

}  // namespace

SeriesPoly legendre_bn(const Fq& F, long n, EvalMode mode) {
  if (n < 0) throw std::invalid_argument("legendre_bn: n must be nonnegative");
  if (mode == EvalMode::closed) return subset_sum(F, n, "D", /*signed_terms=*/false);

  SeriesPoly prev2(F, "D");  // b_{-1} = 0
  SeriesPoly prev(F, "D");   // b_0 = 1
  prev.add_term(0, RatFunc::one(F));
  if (n == 0) return prev;
  for (long k = 1; k <= n; ++k) {
    std::int64_t e = q_power(F, k - 1);
    // (1 + D^e) b_{k-1}
    SeriesPoly cur = prev.add(prev.mul_monomial(static_cast<std::uint64_t>(e), RatFunc::one(F)));
    // + D^e (T^(1-e) - 1) b_{k-2}
    RatFunc scale = RatFunc::t_power(F, 1 - e).sub(RatFunc::one(F));
    cur = cur.add(prev2.mul_monomial(static_cast<std::uint64_t>(e), scale));
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

SeriesPoly legendre_an(const Fq& F, long n) {
  if (n < 0) throw std::invalid_argument("legendre_an: n must be nonnegative");
  std::int64_t expo = 0;
  std::int64_t pw = 1;
  for (long i = 0; i <= n; ++i) {
    expo += pw;
    if (i < n) pw *= F.q();
    if (expo > kMaxPolyDegree) throw BoundError("legendre_an: T-power exceeds bound");
  }
  RatFunc scale(FqPoly::monomial(F, F.one(), expo), carlitz_l(F, n));
  return subset_sum(F, n, "D", false).mul_scalar(scale);
}

SeriesPoly bassa_beelen_pn(const Fq& F, long n, EvalMode mode) {
  if (n < -1) throw std::invalid_argument("bassa_beelen_pn: n must be >= -1");
  if (n == -1) return SeriesPoly(F, "x");
  if (mode == EvalMode::closed) return subset_sum(F, n, "x", /*signed_terms=*/true);

  SeriesPoly prev2(F, "x");  // p_{-1} = 0
  SeriesPoly prev(F, "x");   // p_0 = 1
  prev.add_term(0, RatFunc::one(F));
  if (n == 0) return prev;
  for (long k = 0; k < n; ++k) {
    std::int64_t e = q_power(F, k);
    // (x^e - 1) p_k
    SeriesPoly cur = prev.mul_monomial(static_cast<std::uint64_t>(e), RatFunc::one(F)).sub(prev);
    // + (1 - T^(1-e)) x^e p_{k-1}
    RatFunc scale = RatFunc::one(F).sub(RatFunc::t_power(F, 1 - e));
    cur = cur.add(prev2.mul_monomial(static_cast<std::uint64_t>(e), scale));
    prev2 = std::move(prev);
    prev = std::move(cur);
  }
  return prev;
}

bool legendre_ss_by_pn(const Fq& F, const FqPoly& delta, const FqPoly& p) {
  if (!p.is_monic() || p.is_constant() || !is_irreducible(p))
    throw std::invalid_argument("legendre_ss_by_pn: p must be a monic prime");
  if (p == FqPoly::variable(F))
    throw std::invalid_argument("legendre_ss_by_pn: criterion inapplicable at p = T");
  FqPoly d = delta.mod(p);
  if (d.is_zero()) throw BadReduction("legendre_ss_by_pn: Delta vanishes mod p");

  const long n = static_cast<long>(p.deg());
  const std::int64_t q = F.q();
  SeriesPoly pn = bassa_beelen_pn(F, n, EvalMode::closed);

  // evaluate p_n at -Delta/T^q mod p after clearing every T-power
  // denominator: multiply through by T^E, E = max_S (q w(S) + deg m(S))
  std::int64_t E = 0;
  for (const auto& [w, c] : pn.terms()) {
    if (!c.num().is_constant() || !c.den().is_monomial())
      throw std::logic_error("legendre_ss_by_pn: unexpected p_n coefficient shape");
    std::int64_t e = q * static_cast<std::int64_t>(w) + c.den().deg();
    E = std::max(E, e);
  }
  FqPoly minus_d = d.neg();
  FqPoly acc(F);
  for (const auto& [w, c] : pn.terms()) {
    FqPoly term = FqPoly::constant(F, c.num().constant_term());
    term = term.mul(pow_mod(minus_d, w, p)).mod(p);
    std::int64_t tpow = E - q * static_cast<std::int64_t>(w) - c.den().deg();
    term = term.mul(pow_mod(FqPoly::variable(F), static_cast<std::uint64_t>(tpow), p)).mod(p);
    acc = acc.add(term);
  }
  return acc.mod(p).is_zero();
}

LogExpCoeffs log_exp_coeffs(const DrinfeldModule<KField>& dm, long N) {
  if (N < 0) throw std::invalid_argument("log_exp_coeffs: N must be nonnegative");
  const Fq& F = *dm.field.F;
  LogExpCoeffs out;
  out.beta.reserve(static_cast<std::size_t>(N) + 1);
  out.alpha.reserve(static_cast<std::size_t>(N) + 1);

  if (dm.g.is_polynomial() && dm.delta.is_polynomial()) {
    // integral g, Delta: run the recursions on numerators over the known
    // denominators L_n and D_n, reducing once per returned coefficient
    const FqPoly& g = dm.g.num();
    const FqPoly& d = dm.delta.num();
    std::vector<FqPoly> nb{FqPoly::one(F)}, na{FqPoly::one(F)};
    FqPoly ln = FqPoly::one(F), dn = FqPoly::one(F);
    out.beta.emplace_back(RatFunc::one(F));
    out.alpha.emplace_back(RatFunc::one(F));
    for (long n = 1; n <= N; ++n) {
      FqPoly bnum = g.frobenius_pow(n - 1).mul(nb[static_cast<std::size_t>(n - 1)]);
      if (n >= 2)
        bnum = bnum.add(d.frobenius_pow(n - 2)
                            .mul(bracket(F, n - 1))
                            .mul(nb[static_cast<std::size_t>(n - 2)]));
      bnum = bnum.neg();

      FqPoly anum = g.mul(na[static_cast<std::size_t>(n - 1)].frobenius_pow(1));
      if (n >= 2)
        anum = anum.add(d.mul(bracket(F, n - 1).frobenius_pow(1))
                            .mul(na[static_cast<std::size_t>(n - 2)].frobenius_pow(2)));

      ln = ln.mul(bracket(F, n));
      dn = bracket(F, n).mul(dn.frobenius_pow(1));
      out.beta.emplace_back(RatFunc(bnum, ln));
      out.alpha.emplace_back(RatFunc(anum, dn));
      nb.push_back(std::move(bnum));
      na.push_back(std::move(anum));
    }
    return out;
  }

  // rational g or Delta: plain recursion in K
  out.beta.emplace_back(RatFunc::one(F));
  out.alpha.emplace_back(RatFunc::one(F));
  for (long n = 1; n <= N; ++n) {
    RatFunc brk(bracket(F, n));
    RatFunc b = dm.g.frobenius_pow(n - 1).mul(out.beta[static_cast<std::size_t>(n - 1)]);
    if (n >= 2)
      b = b.add(dm.delta.frobenius_pow(n - 2).mul(out.beta[static_cast<std::size_t>(n - 2)]));
    out.beta.emplace_back(b.div(brk).neg());

    RatFunc a = dm.g.mul(out.alpha[static_cast<std::size_t>(n - 1)].frobenius_pow(1));
    if (n >= 2)
      a = a.add(dm.delta.mul(out.alpha[static_cast<std::size_t>(n - 2)].frobenius_pow(2)));
    out.alpha.emplace_back(a.div(brk));
  }
  return out;
}

std::vector<RatFunc> a_delta_series(const DrinfeldModule<KField>& dm, const RatFunc& delta,
                                    long N) {
  if (delta.is_zero()) throw std::invalid_argument("a_delta_series: delta must be nonzero");
  if (!phi_T(dm).eval(delta).is_zero())
    throw std::invalid_argument("a_delta_series: delta is not a T-torsion point of phi");
  LogExpCoeffs lc = log_exp_coeffs(dm, N);
  RatFunc T = RatFunc::variable(*dm.field.F);
  std::vector<RatFunc> out;
  RatFunc sum = RatFunc::zero(*dm.field.F);
  for (long n = 0; n <= N; ++n) {
    sum = sum.add(lc.beta[static_cast<std::size_t>(n)].mul(delta.frobenius_pow(n)));
    out.push_back(T.mul(sum));
  }
  return out;
}

}  // namespace dss
