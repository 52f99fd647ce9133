#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dss/carlitz.hpp"
#include "dss/legendre.hpp"
#include "dss/partitions.hpp"

using namespace dss;

namespace {

FqPoly ipoly(const Fq& F, std::vector<long> coeffs_ascending) {
  std::vector<FqElem> c;
  for (long v : coeffs_ascending) c.push_back(F.from_int(v));
  return FqPoly(F, std::move(c));
}

void add_term(const Fq& F, SeriesPoly& s, std::uint64_t e, std::int64_t tpow, int sign) {
  RatFunc c = RatFunc::t_power(F, tpow);
  if (sign < 0) c = c.neg();
  s.add_term(e, c);
}

// the displayed p_1..p_4 tables with q substituted
SeriesPoly expected_pn(const Fq& F, long n) {
  const std::int64_t q = F.q();
  SeriesPoly s(F, "x");
  switch (n) {
    case 1:
      add_term(F, s, 1, 0, +1);
      add_term(F, s, 0, 0, -1);
      break;
    case 2:
      add_term(F, s, q + 1, 0, +1);
      add_term(F, s, q, 1 - q, -1);
      add_term(F, s, 1, 0, -1);
      add_term(F, s, 0, 0, +1);
      break;
    case 3:
      add_term(F, s, q * q + q + 1, 0, +1);
      add_term(F, s, q * q + q, 1 - q, -1);
      add_term(F, s, q * q + 1, 1 - q * q, -1);
      add_term(F, s, q * q, 1 - q * q, +1);
      add_term(F, s, q + 1, 0, -1);
      add_term(F, s, q, 1 - q, +1);
      add_term(F, s, 1, 0, +1);
      add_term(F, s, 0, 0, -1);
      break;
    case 4: {
      std::int64_t q2 = q * q, q3 = q2 * q;
      add_term(F, s, q3 + q2 + q + 1, 0, +1);
      add_term(F, s, q3 + q2 + q, -(q - 1), -1);
      add_term(F, s, q3 + q2 + 1, -(q2 - 1), -1);
      add_term(F, s, q3 + q2, -(q2 - 1), +1);
      add_term(F, s, q3 + q + 1, -(q3 - 1), -1);
      add_term(F, s, q3 + q, -(q3 + q - 2), +1);
      add_term(F, s, q3 + 1, -(q3 - 1), +1);
      add_term(F, s, q3, -(q3 - 1), -1);
      add_term(F, s, q2 + q + 1, 0, -1);
      add_term(F, s, q2 + q, -(q - 1), +1);
      add_term(F, s, q2 + 1, -(q2 - 1), +1);
      add_term(F, s, q2, -(q2 - 1), -1);
      add_term(F, s, q + 1, 0, +1);
      add_term(F, s, q, -(q - 1), -1);
      add_term(F, s, 1, 0, -1);
      add_term(F, s, 0, 0, +1);
      break;
    }
    default:
      throw std::logic_error("expected_pn: table only covers n <= 4");
  }
  return s;
}

// the displayed b_0..b_3 tables
SeriesPoly expected_bn(const Fq& F, long n) {
  const std::int64_t q = F.q();
  SeriesPoly s(F, "D");
  switch (n) {
    case 0:
      add_term(F, s, 0, 0, +1);
      break;
    case 1:
      add_term(F, s, 1, 0, +1);
      add_term(F, s, 0, 0, +1);
      break;
    case 2:
      add_term(F, s, q + 1, 0, +1);
      add_term(F, s, q, 1 - q, +1);
      add_term(F, s, 1, 0, +1);
      add_term(F, s, 0, 0, +1);
      break;
    case 3: {
      std::int64_t q2 = q * q;
      add_term(F, s, q2 + q + 1, 0, +1);
      add_term(F, s, q2 + q, 1 - q, +1);
      add_term(F, s, q2 + 1, 1 - q2, +1);
      add_term(F, s, q2, 1 - q2, +1);
      add_term(F, s, q + 1, 0, +1);
      add_term(F, s, q, 1 - q, +1);
      add_term(F, s, 1, 0, +1);
      add_term(F, s, 0, 0, +1);
      break;
    }
    default:
      throw std::logic_error("expected_bn: table only covers n <= 3");
  }
  return s;
}

SeriesPoly rename_var(const SeriesPoly& s, const std::string& var) {
  SeriesPoly out(s.field(), var);
  for (const auto& [e, c] : s.terms()) out.add_term(e, c);
  return out;
}

}  // namespace

TEST_CASE("shadow stats") {
  const Fq& F = make_context(2, 1);

  auto st = shadow_stats(F, IndexSet{});
  CHECK(st.m_set.empty());
  CHECK(st.weight == 0);
  CHECK(st.monomial.is_one());

  st = shadow_stats(F, IndexSet::of({0}));
  CHECK(st.m_set == IndexSet::of({0}));
  CHECK(st.weight == 1);
  CHECK(st.monomial.is_one());  // T^(q^0 - 1)

  st = shadow_stats(F, IndexSet::of({0, 1, 3}));
  CHECK(st.m_set == IndexSet::of({0, 3}));
  CHECK(st.weight == 11);
  CHECK(st.monomial == FqPoly::monomial(F, F.one(), 7));

  // independent recomputation from the definitions on all subsets of {0..7}
  for (auto qp : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const Fq& G = make_context(qp.first, qp.second);
    for (std::uint64_t bits = 0; bits < 256; ++bits) {
      IndexSet s{bits};
      std::uint64_t w = 0, wm = 0;
      long msize = 0;
      for (long i = 0; i < 8; ++i) {
        std::uint64_t qi = 1;
        for (long k = 0; k < i; ++k) qi *= G.q();
        if (s.contains(i)) w += qi;
        if (s.contains(i) && !s.contains(i - 1)) {
          wm += qi;
          ++msize;
        }
      }
      auto got = shadow_stats(G, s);
      CHECK(got.weight == w);
      CHECK(got.monomial == FqPoly::monomial(G, G.one(), static_cast<std::int64_t>(wm - msize)));
    }
  }
}

TEST_CASE("shadowed partitions") {
  auto p0 = shadowed_partitions(0);
  REQUIRE(p0.size() == 1);
  CHECK(p0[0].s1.empty());
  CHECK(p0[0].s2.empty());

  auto p2 = shadowed_partitions(2);
  REQUIRE(p2.size() == 2);
  CHECK(p2[0].s1 == IndexSet::of({0, 1}));
  CHECK(p2[0].s2.empty());
  CHECK(p2[1].s1.empty());
  CHECK(p2[1].s2 == IndexSet::of({0}));

  CHECK(shadowed_partitions(5).size() == 8);

  // Fibonacci growth for n <= 15
  std::vector<std::size_t> sizes;
  for (long n = 0; n <= 15; ++n) sizes.push_back(shadowed_partitions(n).size());
  for (long n = 2; n <= 15; ++n)
    CHECK(sizes[static_cast<std::size_t>(n)] ==
          sizes[static_cast<std::size_t>(n - 1)] + sizes[static_cast<std::size_t>(n - 2)]);

  // exhaustive cross-check against the partition predicate for n <= 10
  for (long n = 0; n <= 10; ++n) {
    auto pairs = shadowed_partitions(n);
    std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
    for (const auto& pr : pairs) {
      CHECK(is_valid_shadowed_pair(pr.s1, pr.s2, n));
      CHECK(seen.insert({pr.s1.bits, pr.s2.bits}).second);  // no duplicates
    }
    std::size_t brute = 0;
    for (std::uint64_t b1 = 0; b1 < (std::uint64_t{1} << n); ++b1)
      for (std::uint64_t b2 = 0; b2 < (std::uint64_t{1} << n); ++b2)
        if (is_valid_shadowed_pair(IndexSet{b1}, IndexSet{b2}, n)) ++brute;
    CHECK(pairs.size() == brute);
  }
}

TEST_CASE("bn tables from the literature") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const Fq& F = make_context(pe.first, pe.second);
    for (long n = 0; n <= 3; ++n) {
      CHECK(legendre_bn(F, n, EvalMode::recursive) == expected_bn(F, n));
      CHECK(legendre_bn(F, n, EvalMode::closed) == expected_bn(F, n));
    }
  }
}

TEST_CASE("bn recursive equals closed") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const Fq& F = make_context(pe.first, pe.second);
    for (long n = 0; n <= 8; ++n) {
      SeriesPoly rec = legendre_bn(F, n, EvalMode::recursive);
      SeriesPoly cls = legendre_bn(F, n, EvalMode::closed);
      CHECK(rec == cls);
      CHECK(rec.term_count() == (std::size_t{1} << n));
    }
  }
}

TEST_CASE("pn tables from the literature") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const Fq& F = make_context(pe.first, pe.second);
    for (long n = 1; n <= 4; ++n) {
      CHECK(bassa_beelen_pn(F, n, EvalMode::recursive) == expected_pn(F, n));
      CHECK(bassa_beelen_pn(F, n, EvalMode::closed) == expected_pn(F, n));
    }
  }
}

TEST_CASE("pn structure") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const Fq& F = make_context(pe.first, pe.second);
    CHECK(bassa_beelen_pn(F, -1, EvalMode::recursive).is_zero());
    for (long n = 0; n <= 8; ++n) {
      SeriesPoly p = bassa_beelen_pn(F, n, EvalMode::recursive);
      CHECK(p == bassa_beelen_pn(F, n, EvalMode::closed));
      CHECK(p.term_count() == (std::size_t{1} << n));
      // monic of degree (q^n-1)/(q-1)
      std::uint64_t d = 0, pw = 1;
      for (long i = 0; i < n; ++i) {
        d += pw;
        pw *= static_cast<std::uint64_t>(F.q());
      }
      CHECK(p.degree() == d);
      CHECK(p.coeff(d).is_one());
      // constant term (-1)^n
      RatFunc c0 = p.coeff(0);
      CHECK(c0 == (n % 2 == 1 ? RatFunc::one(F).neg() : RatFunc::one(F)));
      // denominators are powers of T
      for (const auto& [e, c] : p.terms()) CHECK(c.den().is_monomial());
    }
  }
}

TEST_CASE("identity: p_n(-x) = (-1)^n b_n") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}, {5, 1}}) {
    const Fq& F = make_context(pe.first, pe.second);
    for (long n = 0; n <= 8; ++n) {
      SeriesPoly lhs = bassa_beelen_pn(F, n, EvalMode::closed).negate_variable();
      SeriesPoly rhs = rename_var(legendre_bn(F, n, EvalMode::closed), "x");
      if (n % 2 == 1) rhs = rhs.mul_scalar(RatFunc::one(F).neg());
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("a_n") {
  const Fq& F2 = make_context(2, 1);
  // n = 0: a_0 = T
  SeriesPoly a0 = legendre_an(F2, 0);
  REQUIRE(a0.term_count() == 1);
  CHECK(a0.coeff(0) == RatFunc::variable(F2));

  // n = 1, q = 2: (T^3/[1])(D+1)
  SeriesPoly a1 = legendre_an(F2, 1);
  RatFunc scale(FqPoly::monomial(F2, F2.one(), 3), bracket(F2, 1));
  CHECK(a1.coeff(0) == scale);
  CHECK(a1.coeff(1) == scale);

  // specialization at D = Delta/T^q equals T * partial log sums (Legendre)
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const Fq& F = make_context(pe.first, pe.second);
    for (const FqPoly& delta :
         {FqPoly::monomial(F, F.one(), 2), ipoly(F, {1, 1}), ipoly(F, {1, 0, 1})}) {
      RatFunc d(delta);
      RatFunc D0 = d.div(RatFunc::t_power(F, F.q()));
      auto dm = legendre(F, d);
      auto avals = a_delta_series(dm, RatFunc::one(F), 6);
      for (long n = 0; n <= 6; ++n)
        CHECK(legendre_an(F, n).eval(D0) == avals[static_cast<std::size_t>(n)]);
    }
  }
}

TEST_CASE("log and exp coefficients") {
  const Fq& F = make_context(2, 1);
  RatFunc one = RatFunc::one(F);

  // Legendre: beta_1 = (T+Delta)/[1], alpha_1 = g/[1]
  RatFunc delta(FqPoly::monomial(F, F.one(), 2));
  auto dm = legendre(F, delta);
  auto lc = log_exp_coeffs(dm, 6);
  CHECK(lc.beta[0] == one);
  CHECK(lc.alpha[0] == one);
  RatFunc tpd = RatFunc::variable(F).add(delta);
  CHECK(lc.beta[1] == tpd.div(RatFunc(bracket(F, 1))));
  CHECK(lc.alpha[1] == dm.g.div(RatFunc(bracket(F, 1))));

  // integral and rational recursion paths agree
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const Fq& G = make_context(pe.first, pe.second);
    KField K{&G};
    RatFunc T = RatFunc::variable(G);
    auto m1 = make_module(K, T, RatFunc(ipoly(G, {1, 1})), RatFunc(ipoly(G, {0, 1, 1})));
    auto m2 = make_module(K, T, m1.g.mul(T.inv()).mul(T), m1.delta);  // same values
    auto l1 = log_exp_coeffs(m1, 5);
    // force the rational path with an equivalent module carrying a
    // denominator that cancels
    auto m3 = make_module(K, T, RatFunc(m1.g.num().mul(FqPoly::variable(G)), FqPoly::variable(G)),
                          m1.delta);
    CHECK(m3.g == m1.g);  // canonical form reduces it back
    auto l2 = log_exp_coeffs(m2, 5);
    for (std::size_t i = 0; i < l1.beta.size(); ++i) {
      CHECK(l1.beta[i] == l2.beta[i]);
      CHECK(l1.alpha[i] == l2.alpha[i]);
    }
  }
}

TEST_CASE("exp composed with log is the identity to order q^N") {
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const Fq& F = make_context(pe.first, pe.second);
    KField K{&F};
    RatFunc T = RatFunc::variable(F);
    const long N = 6;
    for (const auto& dm :
         {legendre(F, RatFunc(FqPoly::monomial(F, F.one(), 2))),
          make_module(K, T, RatFunc(ipoly(F, {0, 1, 1})), RatFunc(ipoly(F, {1, 1})))}) {
      auto lc = log_exp_coeffs(dm, N);
      for (long n = 0; n <= N; ++n) {
        RatFunc acc = RatFunc::zero(F);
        for (long i = 0; i <= n; ++i)
          acc = acc.add(
              lc.alpha[static_cast<std::size_t>(i)]
                  .mul(lc.beta[static_cast<std::size_t>(n - i)].frobenius_pow(i)));
        if (n == 0)
          CHECK(acc.is_one());
        else
          CHECK(acc.is_zero());
      }
    }
  }
}

TEST_CASE("a_delta preconditions") {
  const Fq& F = make_context(2, 1);
  RatFunc delta(FqPoly::monomial(F, F.one(), 2));
  auto dm = legendre(F, delta);

  auto vals = a_delta_series(dm, RatFunc::one(F), 3);
  CHECK(vals[0] == RatFunc::variable(F));  // a_delta(0) = T * delta with delta = 1

  // delta not in ker(phi_T)
  CHECK_THROWS_AS(a_delta_series(dm, RatFunc::variable(F), 3), std::invalid_argument);

  // a member delta other than 1: for this family T-torsion includes delta
  // iff phi_T(delta) = 0; scaling by F_q^* preserves membership
  CHECK(a_delta_series(dm, RatFunc::one(F), 0).size() == 1);
}

TEST_CASE("supersingularity via p_n") {
  const Fq& F = make_context(2, 1);
  FqPoly p = ipoly(F, {1, 1, 1});

  CHECK(legendre_ss_by_pn(F, FqPoly::one(F), p));
  CHECK_THROWS_AS(legendre_ss_by_pn(F, FqPoly::one(F), FqPoly::variable(F)),
                  std::invalid_argument);
  CHECK_THROWS_AS(legendre_ss_by_pn(F, p, p), BadReduction);

  // cross-oracle equality on a grid: q = 2 primes of degree <= 4 (p != T),
  // q = 3 degree <= 3, all nonzero Delta mod p
  for (auto pe : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const Fq& G = make_context(pe.first, pe.second);
    long dmax = pe.first == 2 ? 4 : 3;
    for (long d = 1; d <= dmax; ++d) {
      for (const FqPoly& prime : monic_irreducibles(G, d)) {
        if (prime == FqPoly::variable(G)) continue;
        long count = 1;
        for (long i = 0; i < d; ++i) count *= G.q();
        for (long code = 1; code < count; ++code) {
          std::vector<FqElem> cs;
          long c = code;
          for (long i = 0; i < d; ++i) {
            cs.push_back(G.elem(c % G.q()));
            c /= G.q();
          }
          FqPoly delta(G, std::move(cs));
          bool by_pn = legendre_ss_by_pn(G, delta, prime);
          bool by_kernel = is_supersingular(reduce_at(legendre(G, RatFunc(delta)), prime), prime);
          CHECK(by_pn == by_kernel);
        }
      }
    }
  }
}
