#pragma once

// Universal supersingular polynomials in the j-invariant: the closed forms
// for mu_n and gamma_n over shadowed partitions, the Eisenstein /
// para-Eisenstein closed forms for alpha_n and beta_n, the brute-force
// ss_p oracle over the quadratic extension of A/p, and the three-way
// congruence check mu_n = gamma_n = ss_p mod p.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dss/drinfeld.hpp"
#include "dss/partitions.hpp"

namespace dss {

// sparse polynomial in j with coefficients in A (or in A/p after reduce_mod)
class JPoly {
 public:
  JPoly(const Fq& F, std::string var = "j") : F_(&F), var_(std::move(var)) {}

  const Fq& field() const { return *F_; }
  const std::string& var() const { return var_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  std::optional<std::uint64_t> degree() const {
    if (t_.empty()) return std::nullopt;
    return t_.rbegin()->first;
  }
  FqPoly coeff(std::uint64_t e) const {
    auto it = t_.find(e);
    return it == t_.end() ? FqPoly::zero(*F_) : it->second;
  }
  const std::map<std::uint64_t, FqPoly>& terms() const { return t_; }

  void add_term(std::uint64_t e, const FqPoly& c);

  JPoly reduce_mod(const FqPoly& p) const;

  friend bool operator==(const JPoly& a, const JPoly& b) {
    return a.var_ == b.var_ && a.t_ == b.t_;
  }

  std::string to_string() const;

 private:
  const Fq* F_;
  std::string var_;
  std::map<std::uint64_t, FqPoly> t_;
};

// D_n(S) = prod_{i in S} [n-i]^(q^i)  and  L_n(S) = (-1)^|S| [n] prod_{0 != i in S} [i]
struct WeightProducts {
  FqPoly dn_s;
  FqPoly ln_s;
};
WeightProducts weight_products(const Fq& F, long n, IndexSet S);

// closed forms
//   alpha_n = sum_{(S1,S2) in P_2(n)} g^w(S1) Delta^w(S2) / D_n(S1 u S2)
//   beta_n  = sum_{(S1,S2) in P_2(n)} g^w(S1) Delta^w(S2) / L_n(S1 u S2)
struct EisensteinPair {
  RatFunc alpha, beta;
};
EisensteinPair eisenstein_closed(const DrinfeldModule<KField>& dm, long n);

enum class UniversalKind { mu, gamma };

// j-exponent slot w(S1)/(q+1) (n even) or (w(S1)-1)/(q+1) (n odd); throws
// std::logic_error when the divisibility fails
std::uint64_t universal_exponent(const Fq& F, IndexSet s1, long n);

// mu_n (coefficients D_n/D_n(S1 u S2)) or gamma_n ((-1)^n L_n / L_n(S1 u S2));
// all quotients are computed by exact division and asserted to lie in A
JPoly universal_poly(const Fq& F, long n, UniversalKind kind);

struct SsOracleResult {
  explicit SsOracleResult(const Fq& F) : ss(F, "x") {}

  const ExtField* L = nullptr;         // the quadratic extension of A/p
  ExtElem t0;                          // embedded root of p
  std::vector<ExtElem> U;              // supersingular j-invariants, by index
  bool zero_in_U = false;
  bool galois_stable = false;          // U closed under x -> x^(q^n)
  JPoly ss;                            // prod_{0 != j in U} (x - j), coefficients in A/p
};
SsOracleResult ss_oracle(const Fq& F, const FqPoly& p);

struct PrimeCheck {
  explicit PrimeCheck(const Fq& F) : prime(F), ss(F, "x"), mu_mod(F), gamma_mod(F) {}

  FqPoly prime;
  long degree = 0;
  std::size_t U_size = 0;
  bool zero_in_U = false;
  bool galois_stable = false;
  JPoly ss, mu_mod, gamma_mod;
  bool pass = false;
  double ms = 0.0;  // wall time; excluded from canonical reports
};
struct UniversalReport {
  long q = 0;
  long n = 0;
  std::vector<PrimeCheck> primes;
  bool pass = false;
};

// For every monic prime of degree n: run the oracle, reduce mu_n and
// gamma_n, and require the three-way equality.  Mismatches mark the entry
// as failed rather than throwing.
UniversalReport universal_check(const Fq& F, long n);

}  // namespace dss
