#include "dss/universal.hpp"

#include <chrono>
#include <stdexcept>

#include "dss/carlitz.hpp"

namespace dss {

void JPoly::add_term(std::uint64_t e, const FqPoly& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = it->second.add(c);
  if (it->second.is_zero()) t_.erase(it);
}

JPoly JPoly::reduce_mod(const FqPoly& p) const {
  JPoly out(*F_, var_);
  for (const auto& [e, c] : t_) out.add_term(e, c.mod(p));
  return out;
}

std::string JPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += '+';
    if (e == 0) {
      s += c.to_string();
      continue;
    }
    if (!c.is_one()) {
      std::string cs = c.to_string();
      bool parens = cs.find('+') != std::string::npos || cs.find('*') != std::string::npos;
      if (parens) s += '(';
      s += cs;
      if (parens) s += ')';
      s += '*';
    }
    s += var_;
    if (e > 1) {
      s += '^';
      s += std::to_string(e);
    }
  }
  return s;
}

WeightProducts weight_products(const Fq& F, long n, IndexSet S) {
  if (n < 1) throw std::invalid_argument("weight_products: n must be positive");
  if (!S.disjoint(IndexSet{~IndexSet::range(n).bits}))
    throw std::invalid_argument("weight_products: S not contained in {0..n-1}");
  FqPoly dn_s = FqPoly::one(F);
  for (long i : S.elements()) {
    // [n-i]^(q^i) = T^(q^n) - T^(q^i), a binomial
    FqPoly f = bracket(F, n - i).frobenius_pow(i);
    dn_s = dn_s.mul(f);
  }
  FqPoly ln_s = bracket(F, n);
  for (long i : S.elements())
    if (i != 0) ln_s = ln_s.mul(bracket(F, i));
  if (S.size() % 2 == 1) ln_s = ln_s.neg();
  return {std::move(dn_s), std::move(ln_s)};
}

EisensteinPair eisenstein_closed(const DrinfeldModule<KField>& dm, long n) {
  if (n < 0) throw std::invalid_argument("eisenstein_closed: n must be nonnegative");
  const Fq& F = *dm.field.F;
  if (n == 0) return {RatFunc::one(F), RatFunc::one(F)};

  auto pairs = shadowed_partitions(n);
  if (dm.g.is_polynomial() && dm.delta.is_polynomial()) {
    // integral g, Delta: accumulate numerators over the common denominators
    // D_n and (-1)^n L_n, then reduce once
    const FqPoly& g = dm.g.num();
    const FqPoly& d = dm.delta.num();
    FqPoly dn = carlitz_d(F, n), ln = carlitz_l(F, n);
    FqPoly na(F), nb(F);
    for (const auto& pr : pairs) {
      IndexSet s = pr.s1.unite(pr.s2);
      WeightProducts wp = weight_products(F, n, s);
      FqPoly gd = pow_base_q(g, set_weight(F, pr.s1)).mul(pow_base_q(d, set_weight(F, pr.s2)));
      na = na.add(dn.divexact(wp.dn_s).mul(gd));
      // (-1)^n L_n / L_n(S) is the integral quotient;  beta_n carries an
      // extra (-1)^n from rewriting 1/L_n(S) over the denominator L_n
      FqPoly lq = (n % 2 == 1 ? ln.neg() : ln).divexact(wp.ln_s);
      nb = nb.add(lq.mul(gd));
    }
    if (n % 2 == 1) nb = nb.neg();
    return {RatFunc(na, dn), RatFunc(nb, ln)};
  }

  // rational parameters: term-by-term arithmetic in K
  RatFunc alpha = RatFunc::zero(F), beta = RatFunc::zero(F);
  for (const auto& pr : pairs) {
    IndexSet s = pr.s1.unite(pr.s2);
    WeightProducts wp = weight_products(F, n, s);
    std::uint64_t w1 = set_weight(F, pr.s1), w2 = set_weight(F, pr.s2);
    if (w1 > INT64_MAX || w2 > INT64_MAX) throw BoundError("eisenstein_closed: weight overflow");
    RatFunc gd = dm.g.pow(static_cast<std::int64_t>(w1))
                     .mul(dm.delta.pow(static_cast<std::int64_t>(w2)));
    alpha = alpha.add(gd.div(RatFunc(wp.dn_s)));
    beta = beta.add(gd.div(RatFunc(wp.ln_s)));
  }
  return {alpha, beta};
}

std::uint64_t universal_exponent(const Fq& F, IndexSet s1, long n) {
  const std::uint64_t q1 = static_cast<std::uint64_t>(F.q()) + 1;
  std::uint64_t w1 = set_weight(F, s1);
  if (n % 2 == 0) {
    if (w1 % q1 != 0) throw std::logic_error("universal_exponent: w(S1) not divisible by q+1");
    return w1 / q1;
  }
  if (w1 == 0 || (w1 - 1) % q1 != 0)
    throw std::logic_error("universal_exponent: w(S1)-1 not divisible by q+1");
  return (w1 - 1) / q1;
}

JPoly universal_poly(const Fq& F, long n, UniversalKind kind) {
  if (n < 1) throw std::invalid_argument("universal_poly: n must be positive");
  FqPoly dn(F), ln(F);
  if (kind == UniversalKind::mu)
    dn = carlitz_d(F, n);
  else
    ln = (n % 2 == 1) ? carlitz_l(F, n).neg() : carlitz_l(F, n);

  JPoly out(F);
  for (const auto& pr : shadowed_partitions(n)) {
    IndexSet s = pr.s1.unite(pr.s2);
    std::uint64_t e = universal_exponent(F, pr.s1, n);
    WeightProducts wp = weight_products(F, n, s);
    FqPoly c = (kind == UniversalKind::mu) ? dn.divexact(wp.dn_s) : ln.divexact(wp.ln_s);
    out.add_term(e, c);
  }
  return out;
}

SsOracleResult ss_oracle(const Fq& F, const FqPoly& p) {
  if (!p.is_monic() || p.is_constant() || !is_irreducible(p))
    throw std::invalid_argument("ss_oracle: p must be a monic prime");
  const long n = static_cast<long>(p.deg());
  const ExtField& L = ExtField::get(F, 2 * n);  // BoundError if q^(2n) too big

  SsOracleResult res(F);
  res.L = &L;
  res.t0 = embed_prime_root(p, L);
  ExtFieldRef fld{&L};

  for (long idx = 0; idx < L.size(); ++idx) {
    ExtElem j = L.from_index(idx);
    DrinfeldModule<ExtFieldRef> dm =
        L.is_zero(j) ? make_module(fld, res.t0, L.zero(), L.one())
                     : make_module(fld, res.t0, L.one(), L.inv(j));
    if (is_supersingular(dm, p)) {
      res.U.push_back(j);
      if (L.is_zero(j)) res.zero_in_U = true;
    }
  }

  // Galois stability of U under x -> x^(q^n)
  res.galois_stable = true;
  for (const ExtElem& j : res.U) {
    ExtElem img = L.frobenius_qn(j, n);
    bool found = false;
    for (const ExtElem& k : res.U)
      if (k == img) found = true;
    if (!found) res.galois_stable = false;
  }

  // ss = prod over nonzero U of (x - j), expanded over L
  std::vector<ExtElem> coeffs{L.one()};
  for (const ExtElem& j : res.U) {
    if (L.is_zero(j)) continue;
    std::vector<ExtElem> next(coeffs.size() + 1, L.zero());
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] = L.add(next[i + 1], coeffs[i]);
      next[i] = L.sub(next[i], L.mul(coeffs[i], j));
    }
    coeffs = std::move(next);
  }
  JPoly ss(F, "x");
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    ss.add_term(i, subfield_express(L, coeffs[i], res.t0, p));
  res.ss = std::move(ss);
  return res;
}

UniversalReport universal_check(const Fq& F, long n) {
  UniversalReport rep;
  rep.q = F.q();
  rep.n = n;
  rep.pass = true;
  JPoly mu = universal_poly(F, n, UniversalKind::mu);
  JPoly gamma = universal_poly(F, n, UniversalKind::gamma);
  for (const FqPoly& p : monic_irreducibles(F, n)) {
    auto start = std::chrono::steady_clock::now();
    SsOracleResult oracle = ss_oracle(F, p);
    PrimeCheck pc(F);
    pc.prime = p;
    pc.degree = n;
    pc.U_size = oracle.U.size();
    pc.zero_in_U = oracle.zero_in_U;
    pc.galois_stable = oracle.galois_stable;
    pc.mu_mod = mu.reduce_mod(p);
    pc.gamma_mod = gamma.reduce_mod(p);
    // the oracle product is in x; compare against mu/gamma in the same
    // indeterminate
    JPoly mu_x(F, "x"), gamma_x(F, "x");
    for (const auto& [e, c] : pc.mu_mod.terms()) mu_x.add_term(e, c);
    for (const auto& [e, c] : pc.gamma_mod.terms()) gamma_x.add_term(e, c);
    pc.ss = oracle.ss;
    pc.pass = (oracle.ss == mu_x) && (oracle.ss == gamma_x);
    pc.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                .count();
    if (!pc.pass) rep.pass = false;
    rep.primes.push_back(std::move(pc));
  }
  return rep;
}

}  // namespace dss
