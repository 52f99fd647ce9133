#include "dss/period.hpp"

#include <algorithm>
#include <stdexcept>

#include "dss/carlitz.hpp"

namespace dss {

Rat64 Rat64::of(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::domain_error("Rat64: zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n < 0 ? -n : n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  return {n, d};
}

// ---- Kummer ring ----

namespace {

void check_valuation_class(const Fq& F, const RatFunc& tod) {
  if (tod.is_zero()) throw std::invalid_argument("KummerElem: T/Delta must be nonzero");
  const long qm1 = F.q() - 1;
  if (qm1 == 1) return;
  std::int64_t m = *tod.valuation();
  std::int64_t a = m < 0 ? -m : m;
  if (std::gcd(a, static_cast<std::int64_t>(qm1)) != 1)
    throw std::invalid_argument(
        "KummerElem: degenerate valuation class (gcd(v(T/Delta), q-1) != 1)");
}

}  // namespace

KummerElem::KummerElem(const Fq& F, RatFunc t_over_delta)
    : F_(&F), tod_(std::move(t_over_delta)) {
  check_valuation_class(F, tod_);
  k_.assign(static_cast<std::size_t>(std::max<long>(F.q() - 1, 1)), RatFunc::zero(F));
}

KummerElem::KummerElem(const Fq& F, RatFunc t_over_delta, std::vector<RatFunc> slots)
    : F_(&F), tod_(std::move(t_over_delta)), k_(std::move(slots)) {
  check_valuation_class(F, tod_);
  if (k_.size() != static_cast<std::size_t>(std::max<long>(F.q() - 1, 1)))
    throw std::invalid_argument("KummerElem: wrong slot count");
}

Rat64 KummerElem::c_valuation() const {
  return Rat64::of(*tod_.valuation(), F_->q() - 1);
}

void KummerElem::add_c_power(const RatFunc& coeff, std::uint64_t e) {
  if (coeff.is_zero()) return;
  const std::uint64_t qm1 = static_cast<std::uint64_t>(k_.size());
  std::uint64_t r = e % qm1;
  std::uint64_t k = (e - r) / qm1;
  if (k > INT64_MAX) throw BoundError("KummerElem::add_c_power: exponent overflow");
  RatFunc v = coeff.mul(tod_.pow(static_cast<std::int64_t>(k)));
  k_[static_cast<std::size_t>(r)] = k_[static_cast<std::size_t>(r)].add(v);
}

bool KummerElem::is_zero() const {
  for (const auto& k : k_)
    if (!k.is_zero()) return false;
  return true;
}

std::optional<Rat64> KummerElem::valuation() const {
  std::optional<Rat64> best;
  Rat64 vc = c_valuation();
  for (std::size_t i = 0; i < k_.size(); ++i) {
    auto v = k_[i].valuation();
    if (!v) continue;
    Rat64 cand = Rat64::from_int(*v).add(vc.mul_int(static_cast<std::int64_t>(i)));
    if (!best || cand.less(*best)) best = cand;
  }
  return best;
}

std::string KummerElem::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < k_.size(); ++i) {
    if (k_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + k_[i].to_string() + ")";
    if (i == 1) s += "*c";
    if (i > 1) s += "*c^" + std::to_string(i);
  }
  return s;
}

// ---- shared setup for the period sums ----

namespace {

struct PeriodContext {
  const Fq* F;
  FqPoly g, d;            // integral module parameters, g = -(T + Delta)
  long q;
  std::int64_t m;         // v(T/Delta) = deg(Delta) - 1
  RatFunc tod;            // T/Delta
};

PeriodContext setup_period(const DrinfeldModule<KField>& dm) {
  const Fq& F = *dm.field.F;
  if (!dm.delta.is_polynomial() || !dm.g.is_polynomial())
    throw std::invalid_argument("period: g and Delta must be integral");
  RatFunc one = RatFunc::one(F);
  if (!phi_T(dm).eval(one).is_zero())
    throw std::invalid_argument("period: module is not in F_1 (phi_T(1) != 0)");
  if (!f_star_check(dm, one))
    throw std::invalid_argument("period: module fails the F_1* valuation conditions");
  RatFunc tod = RatFunc::variable(F).div(dm.delta);
  std::int64_t m = dm.delta.num().deg() - 1;
  return {&F, dm.g.num(), dm.delta.num(), F.q(), m, std::move(tod)};
}

// numerators of beta_n over L_n:  Nb_0 = 1,
// Nb_n = -(g^(q^(n-1)) Nb_{n-1} + Delta^(q^(n-2)) [n-1] Nb_{n-2})
std::vector<FqPoly> beta_numerators(const PeriodContext& ctx, long N) {
  const Fq& F = *ctx.F;
  std::vector<FqPoly> nb{FqPoly::one(F)};
  for (long n = 1; n <= N; ++n) {
    FqPoly t = ctx.g.frobenius_pow(n - 1).mul(nb[static_cast<std::size_t>(n - 1)]);
    if (n >= 2)
      t = t.add(ctx.d.frobenius_pow(n - 2)
                    .mul(bracket(F, n - 1))
                    .mul(nb[static_cast<std::size_t>(n - 2)]));
    nb.push_back(t.neg());
  }
  return nb;
}

// partial-sum numerators S_n with a_n = T * S_n / L_n:  S_n = [n] S_{n-1} + Nb_n
std::vector<FqPoly> partial_sum_numerators(const PeriodContext& ctx,
                                           const std::vector<FqPoly>& nb) {
  const Fq& F = *ctx.F;
  std::vector<FqPoly> s{FqPoly::one(F)};
  for (long n = 1; n < static_cast<long>(nb.size()); ++n)
    s.push_back(bracket(F, n).mul(s[static_cast<std::size_t>(n - 1)])
                    .add(nb[static_cast<std::size_t>(n)]));
  return s;
}

std::int64_t geometric_exponent(long q, long n) {
  // (q^n - 1) / (q - 1), guarded
  std::int64_t acc = 0, pw = 1;
  for (long i = 0; i < n; ++i) {
    if (acc > kMaxPolyDegree * 4) throw BoundError("period: c-exponent exceeds bound");
    acc += pw;
    pw *= q;
  }
  return acc;
}

}  // namespace

PeriodPartial period_partial(const DrinfeldModule<KField>& dm, long N) {
  if (N < 0) throw std::invalid_argument("period_partial: N must be nonnegative");
  PeriodContext ctx = setup_period(dm);
  const Fq& F = *ctx.F;
  KummerElem value(F, ctx.tod);  // also validates the valuation class
  Rat64 vc = value.c_valuation();

  auto nb = beta_numerators(ctx, N);
  auto sums = partial_sum_numerators(ctx, nb);

  std::vector<std::optional<Rat64>> vals;
  std::int64_t deg_ln = 0;
  for (long n = 0; n <= N; ++n) {
    if (n >= 1) deg_ln += q_power(F, n);
    const FqPoly& sn = sums[static_cast<std::size_t>(n)];
    if (sn.is_zero()) {
      vals.emplace_back(std::nullopt);
      continue;
    }
    std::int64_t van = deg_ln - (sn.deg() + 1);  // v(a_n) = v(T S_n / L_n)
    std::int64_t qn = q_power(F, n);
    vals.emplace_back(Rat64::from_int(van).add(vc.mul_int(qn)));
  }

  // slot accumulation over the common denominator L_N * Delta^kN:
  //   term_n = T^(kn+1) S_n (L_N/L_n) Delta^(kN-kn)
  std::int64_t kN = geometric_exponent(ctx.q, N);
  FqPoly acc(F);
  FqPoly ln_quot = FqPoly::one(F);  // L_N / L_n, built downward
  FqPoly d_pow = FqPoly::one(F);    // Delta^(kN - kn) = prod_{i=n..N-1} Delta^(q^i)
  for (long n = N; n >= 0; --n) {
    std::int64_t kn = geometric_exponent(ctx.q, n);
    FqPoly term = sums[static_cast<std::size_t>(n)]
                      .mul(ln_quot)
                      .mul(d_pow)
                      .shift(kn + 1);
    acc = acc.add(term);
    if (n > 0) {
      ln_quot = ln_quot.mul(bracket(F, n));
      d_pow = d_pow.mul(ctx.d.frobenius_pow(n - 1));
    }
  }
  FqPoly den = carlitz_l(F, N).mul(pow_base_q(ctx.d, static_cast<std::uint64_t>(kN)));
  // every term lands in the same slot: q^n = 1 mod (q-1)
  std::uint64_t slot = static_cast<std::uint64_t>(ctx.q) % std::max<long>(ctx.q - 1, 1);
  std::vector<RatFunc> slots(static_cast<std::size_t>(std::max<long>(ctx.q - 1, 1)),
                             RatFunc::zero(F));
  slots[static_cast<std::size_t>(slot)] = RatFunc(std::move(acc), std::move(den));
  return {KummerElem(F, ctx.tod, std::move(slots)), std::move(vals)};
}

// ---- truncated Laurent series over F_q in the valuation coordinate ----
//
// A series holds coefficients for exponents lead, lead+1, ..., lead+len-1 of
// the uniformizer 1/T; exponents >= prec are unknown.  Every operation
// truncates storage at a shared cap so Frobenius powers stay bounded.

namespace {

constexpr std::int64_t kInfPrec = INT64_MAX / 4;

struct Laurent {
  std::int64_t lead = 0;
  std::int64_t prec = kInfPrec;
  std::vector<FqElem> a;

  std::int64_t end() const { return lead + static_cast<std::int64_t>(a.size()); }
};

Laurent laurent_from_poly(const FqPoly& f, std::int64_t cap) {
  Laurent s;
  s.prec = std::min(kInfPrec, cap);
  if (f.is_zero()) {
    s.lead = 0;
    return s;
  }
  s.lead = -f.deg();
  std::int64_t count = std::min<std::int64_t>(f.deg() + 1, cap - s.lead);
  if (count < 0) count = 0;
  s.a.resize(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i)
    s.a[static_cast<std::size_t>(i)] = f.coeff(f.deg() - i);
  if (static_cast<std::int64_t>(f.deg()) + 1 <= count) s.prec = std::min(kInfPrec, cap);
  return s;
}

std::size_t laurent_nnz(const Laurent& s) {
  std::size_t n = 0;
  for (auto c : s.a)
    if (c.v != 0) ++n;
  return n;
}

Laurent laurent_mul(const Fq& F, const Laurent& x, const Laurent& y, std::int64_t cap) {
  Laurent out;
  out.lead = x.lead + y.lead;
  std::int64_t px = x.prec >= kInfPrec ? kInfPrec : x.prec + y.lead;
  std::int64_t py = y.prec >= kInfPrec ? kInfPrec : y.prec + x.lead;
  out.prec = std::min({px, py, cap});
  if (x.a.empty() || y.a.empty()) {
    out.lead = std::min(out.lead, out.prec);
    return out;
  }
  std::int64_t len = std::min(out.prec, x.end() + y.end() - 1) - out.lead;
  if (len <= 0) {
    out.a.clear();
    return out;
  }
  out.a.assign(static_cast<std::size_t>(len), FqElem{});
  const Laurent* sp = &x;
  const Laurent* dn = &y;
  if (laurent_nnz(*sp) > laurent_nnz(*dn)) std::swap(sp, dn);
  for (std::size_t i = 0; i < sp->a.size(); ++i) {
    FqElem c = sp->a[i];
    if (c.v == 0) continue;
    std::int64_t base = static_cast<std::int64_t>(i);
    std::int64_t jmax = std::min<std::int64_t>(static_cast<std::int64_t>(dn->a.size()),
                                               len - base);
    for (std::int64_t j = 0; j < jmax; ++j) {
      FqElem d = dn->a[static_cast<std::size_t>(j)];
      if (d.v == 0) continue;
      auto& slot = out.a[static_cast<std::size_t>(base + j)];
      slot = F.add(slot, F.mul(c, d));
    }
  }
  return out;
}

Laurent laurent_add(const Fq& F, const Laurent& x, const Laurent& y) {
  Laurent out;
  out.prec = std::min(x.prec, y.prec);
  out.lead = std::min(x.lead, y.lead);
  std::int64_t end = std::min(std::max(x.end(), y.end()), out.prec);
  if (end < out.lead) end = out.lead;
  out.a.assign(static_cast<std::size_t>(end - out.lead), FqElem{});
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    std::int64_t e = x.lead + static_cast<std::int64_t>(i);
    if (e >= out.prec) break;
    out.a[static_cast<std::size_t>(e - out.lead)] = x.a[i];
  }
  for (std::size_t i = 0; i < y.a.size(); ++i) {
    std::int64_t e = y.lead + static_cast<std::int64_t>(i);
    if (e >= out.prec) break;
    auto& slot = out.a[static_cast<std::size_t>(e - out.lead)];
    slot = F.add(slot, y.a[i]);
  }
  return out;
}

// 1 / x to `len` coefficients past the (negated) valuation of x
Laurent laurent_inv(const Fq& F, const Laurent& x, std::int64_t len) {
  std::optional<std::int64_t> v0;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i].v != 0) {
      v0 = x.lead + static_cast<std::int64_t>(i);
      break;
    }
  if (!v0) throw std::domain_error("laurent_inv: zero series");
  const std::int64_t v = *v0;
  std::int64_t rel = x.prec >= kInfPrec ? kInfPrec : x.prec - v;
  std::int64_t n = std::min(len, rel);
  Laurent out;
  out.lead = -v;
  out.prec = -v + n;
  out.a.assign(static_cast<std::size_t>(n), FqElem{});
  FqElem lead_inv = F.inv(x.a[static_cast<std::size_t>(v - x.lead)]);
  out.a[0] = lead_inv;
  auto xat = [&](std::int64_t k) {  // coefficient of exponent v + k
    std::int64_t idx = v + k - x.lead;
    if (idx < 0 || idx >= static_cast<std::int64_t>(x.a.size())) return FqElem{};
    return x.a[static_cast<std::size_t>(idx)];
  };
  for (std::int64_t k = 1; k < n; ++k) {
    FqElem acc{};
    for (std::int64_t j = 1; j <= k; ++j) {
      FqElem xj = xat(j);
      if (xj.v == 0) continue;
      acc = F.add(acc, F.mul(xj, out.a[static_cast<std::size_t>(k - j)]));
    }
    out.a[static_cast<std::size_t>(k)] = F.neg(F.mul(lead_inv, acc));
  }
  return out;
}

// x^(q^k): exponents scale by q^k; absolute precision improves accordingly
Laurent laurent_frob(const Fq& F, const Laurent& x, long k, std::int64_t cap) {
  std::int64_t scale = 1;
  for (long i = 0; i < k; ++i) scale *= F.q();
  Laurent out;
  out.lead = x.lead * scale;
  out.prec = x.prec >= kInfPrec ? kInfPrec : x.prec * scale;
  out.prec = std::min(out.prec, cap);
  std::int64_t len = std::min(out.prec, (x.end() - 1) * scale + 1) - out.lead;
  if (len <= 0 || x.a.empty()) {
    out.a.clear();
    return out;
  }
  out.a.assign(static_cast<std::size_t>(len), FqElem{});
  for (std::size_t i = 0; i < x.a.size(); ++i) {
    if (x.a[i].v == 0) continue;
    std::int64_t e = (x.lead + static_cast<std::int64_t>(i)) * scale;
    if (e >= out.prec) break;
    out.a[static_cast<std::size_t>(e - out.lead)] = x.a[i];  // c^(q^k) = c in F_q
  }
  return out;
}

std::optional<std::int64_t> laurent_valuation(const Laurent& x) {
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (x.a[i].v != 0) return x.lead + static_cast<std::int64_t>(i);
  return std::nullopt;
}

// numerators of alpha_n over D_n: Na_0 = 1,
// Na_n = g Na_{n-1}^q + Delta [n-1]^q Na_{n-2}^(q^2)
std::vector<FqPoly> alpha_numerators(const PeriodContext& ctx, long N) {
  const Fq& F = *ctx.F;
  std::vector<FqPoly> na{FqPoly::one(F)};
  for (long n = 1; n <= N; ++n) {
    FqPoly t = ctx.g.mul(na[static_cast<std::size_t>(n - 1)].frobenius_pow(1));
    if (n >= 2)
      t = t.add(ctx.d.mul(bracket(F, n - 1).frobenius_pow(1))
                    .mul(na[static_cast<std::size_t>(n - 2)].frobenius_pow(2)));
    na.push_back(std::move(t));
  }
  return na;
}

}  // namespace

Rat64 period_residual(const DrinfeldModule<KField>& dm, long N) {
  if (N < 0) throw std::invalid_argument("period_residual: N must be nonnegative");
  PeriodContext ctx = setup_period(dm);
  const Fq& F = *ctx.F;
  KummerElem probe(F, ctx.tod);  // validates the valuation class
  Rat64 vc = probe.c_valuation();

  // omega's slot data, unreduced: omega = (W / B) * c^s0.  One extra series
  // term feeds the precision estimate when the brackets stay within bounds.
  long nb_terms = N;
  try {
    bracket(F, N + 1);
    nb_terms = N + 1;
  } catch (const BoundError&) {
  }
  auto nb = beta_numerators(ctx, nb_terms);
  auto sums = partial_sum_numerators(ctx, nb);
  std::int64_t kN = geometric_exponent(ctx.q, N);
  FqPoly W(F);
  {
    FqPoly ln_quot = FqPoly::one(F);
    FqPoly d_pow = FqPoly::one(F);
    for (long n = N; n >= 0; --n) {
      std::int64_t kn = geometric_exponent(ctx.q, n);
      W = W.add(sums[static_cast<std::size_t>(n)].mul(ln_quot).mul(d_pow).shift(kn + 1));
      if (n > 0) {
        ln_quot = ln_quot.mul(bracket(F, n));
        d_pow = d_pow.mul(ctx.d.frobenius_pow(n - 1));
      }
    }
  }
  if (W.is_zero()) throw std::logic_error("period_residual: vanishing partial period");
  FqPoly B = carlitz_l(F, N).mul(pow_base_q(ctx.d, static_cast<std::uint64_t>(kN)));
  const long s0 = static_cast<long>(static_cast<std::uint64_t>(ctx.q) %
                                    std::max<long>(ctx.q - 1, 1));

  auto na = alpha_numerators(ctx, N);

  // expected residual valuation ~ v(a_{N+1} c^(q^(N+1))): the first omitted
  // term of the period series dominates e_phi(omega_N - Omega)
  std::int64_t est = 256;
  if (nb_terms == N + 1) {
    const FqPoly& snext = sums[static_cast<std::size_t>(N + 1)];
    if (!snext.is_zero()) {
      std::int64_t deg_l = 0;
      for (long i = 1; i <= N + 1; ++i) deg_l += q_power(F, i);
      Rat64 v = Rat64::from_int(deg_l - snext.deg() - 1)
                    .add(vc.mul_int(q_power(F, N + 1)));
      est = v.num / v.den + 1;
    }
  }

  const std::int64_t slot_shift_den = std::max<long>(ctx.q - 1, 1);
  for (std::int64_t cap = std::max<std::int64_t>(est + 64, 128);; cap *= 2) {
    if (cap > (std::int64_t{1} << 21))
      throw BoundError("period_residual: precision cap exceeded");

    Laurent w = laurent_mul(F, laurent_from_poly(W, cap),
                            laurent_inv(F, laurent_from_poly(B, cap),
                                        cap + B.deg() + 1),
                            cap);
    Laurent sum;
    sum.prec = cap;
    FqPoly dn = FqPoly::one(F);
    for (long n = 0; n <= N; ++n) {
      if (n >= 1) dn = bracket(F, n).mul(dn.frobenius_pow(1));
      // alpha_n as a series
      Laurent alpha = laurent_mul(
          F, laurent_from_poly(na[static_cast<std::size_t>(n)], cap),
          laurent_inv(F, laurent_from_poly(dn, cap), cap + dn.coeffs().size() + 1), cap);
      // omega^(q^n): slot coefficient (W/B)^(q^n) times (T/Delta)^e_n, e_n =
      // s0 (q^n - 1)/(q - 1)
      Laurent term = laurent_mul(F, alpha, laurent_frob(F, w, n, cap), cap);
      if (s0 == 1) {
        std::int64_t en = geometric_exponent(ctx.q, n);
        if (en > 0) {
          FqPoly dpow = pow_base_q(ctx.d, static_cast<std::uint64_t>(en));
          Laurent td = laurent_mul(
              F, laurent_from_poly(FqPoly::monomial(F, F.one(), en), cap),
              laurent_inv(F, laurent_from_poly(dpow, cap), cap + dpow.coeffs().size() + 1),
              cap);
          term = laurent_mul(F, term, td, cap);
        }
      }
      sum = n == 0 ? term : laurent_add(F, sum, term);
    }

    auto v = laurent_valuation(sum);
    if (v && *v < sum.prec)
      return Rat64::from_int(*v).add(Rat64::of(s0 * *probe.t_over_delta().valuation(),
                                               slot_shift_den));
    // unresolved within this precision; retry with a larger window
  }
}

}  // namespace dss
