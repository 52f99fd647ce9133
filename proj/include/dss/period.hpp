#pragma once

// Period computations for Legendre-family modules in F_1^*: partial sums of
// the period series f(z) = sum a_n z^(q^n) evaluated at z = c, where c is a
// fixed (q-1)-st root of T/Delta living in the Kummer ring
// K[c]/(c^(q-1) - T/Delta), together with the valuation of the exponential
// residual e_phi(omega_N) as a convergence witness.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dss/drinfeld.hpp"

namespace dss {

// small exact rational, for valuations in (1/(q-1)) Z
struct Rat64 {
  std::int64_t num = 0;
  std::int64_t den = 1;  // > 0, reduced

  static Rat64 of(std::int64_t n, std::int64_t d);
  static Rat64 from_int(std::int64_t n) { return {n, 1}; }
  Rat64 add(Rat64 o) const { return of(num * o.den + o.num * den, den * o.den); }
  Rat64 mul_int(std::int64_t k) const { return of(num * k, den); }
  friend bool operator==(Rat64, Rat64) = default;
  bool less(Rat64 o) const { return num * o.den < o.num * den; }
  std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// element of K[c]/(c^(q-1) - T/Delta); slot i holds the coefficient of c^i.
// The valuation of a nonzero element is min_i v(k_i) + i*v(c), which is
// well defined exactly when the classes i*v(c) mod 1 are pairwise distinct;
// the constructor rejects moduli where that fails (the reduced denominator
// of v(c) must be q-1, trivially so for q = 2).
class KummerElem {
 public:
  KummerElem(const Fq& F, RatFunc t_over_delta);
  KummerElem(const Fq& F, RatFunc t_over_delta, std::vector<RatFunc> slots);

  const Fq& field() const { return *F_; }
  long slot_count() const { return static_cast<long>(k_.size()); }
  const RatFunc& slot(long i) const { return k_.at(static_cast<std::size_t>(i)); }
  const RatFunc& t_over_delta() const { return tod_; }

  Rat64 c_valuation() const;

  // add coeff * c^e with e reduced through c^(q-1) = T/Delta
  void add_c_power(const RatFunc& coeff, std::uint64_t e);

  bool is_zero() const;
  std::optional<Rat64> valuation() const;  // nullopt for zero

  std::string to_string() const;  // slots as "(k_i)*c^i" joined by " + "

 private:
  const Fq* F_;
  RatFunc tod_;
  std::vector<RatFunc> k_;
};

struct PeriodPartial {
  KummerElem value;
  // v(a_n) + q^n v(c) per term; a vanishing term yields nullopt
  std::vector<std::optional<Rat64>> term_valuations;
};

// Partial period sum_{n<=N} a_n c^(q^n) for a module in F_1^* with Delta in
// A (delta = 1 throughout).  Preconditions checked: F_1 membership
// (phi_T(1) = 0), the F_1^* valuation conditions, integrality of Delta, and
// the Kummer valuation-class condition.
PeriodPartial period_partial(const DrinfeldModule<KField>& dm, long N);

// v( sum_{n<=N} alpha_n omega^(q^n) ) for omega = period_partial(dm, N).
// Computed through valuation-truncated Laurent expansions with adaptive
// precision; the result is exact.
Rat64 period_residual(const DrinfeldModule<KField>& dm, long N);

}  // namespace dss
