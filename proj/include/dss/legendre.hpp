#pragma once

// The Legendre-family period machinery: the normalized period coefficients
// b_n (recursion and closed subset-sum form), the rescaled series
// coefficients a_n, the Bassa-Beelen polynomials p_n, the p_n-based
// supersingularity criterion, and the logarithm/exponential coefficients of
// a rank-2 module over K.

#include <vector>

#include "dss/drinfeld.hpp"
#include "dss/series.hpp"
#include "dss/shadow.hpp"

namespace dss {

enum class EvalMode { recursive, closed };

// b_n as a polynomial in the indeterminate D:
//   recursion  b_n = (1 + D^(q^(n-1))) b_{n-1}
//                  + D^(q^(n-1)) (T^(1-q^(n-1)) - 1) b_{n-2},  b_{-1}=0, b_0=1
//   closed     b_n = sum_{S subset {0..n-1}} D^w(S) / m(S)
SeriesPoly legendre_bn(const Fq& F, long n, EvalMode mode);

// a_n = T^((q^(n+1)-1)/(q-1)) / L_n * (closed subset sum), again in D
SeriesPoly legendre_an(const Fq& F, long n);

// p_n in x:
//   recursion  p_{n+1} = (x^(q^n) - 1) p_n + (1 - T^(1-q^n)) x^(q^n) p_{n-1},
//              p_{-1} = 0, p_0 = 1
//   closed     p_n = sum_S (-1)^(n-|S|) x^w(S) / m(S)
// Monic of degree (q^n-1)/(q-1) for n >= 1, constant term (-1)^n, and every
// coefficient denominator is a power of T.
SeriesPoly bassa_beelen_pn(const Fq& F, long n, EvalMode mode);

// Supersingularity of the Legendre module with parameter Delta at p via
// p_n(-Delta/T^q) = 0 mod p.  Requires p != T (T must be invertible mod p)
// and Delta != 0 mod p (BadReduction otherwise).
bool legendre_ss_by_pn(const Fq& F, const FqPoly& delta, const FqPoly& p);

struct LogExpCoeffs {
  std::vector<RatFunc> beta;   // log_phi(z)  = sum beta_n z^(q^n)
  std::vector<RatFunc> alpha;  // e_phi(z)    = sum alpha_n z^(q^n)
};

// Coefficients 0..N from the functional-equation recursions
//   -[n] beta_n  = g^(q^(n-1)) beta_{n-1} + Delta^(q^(n-2)) beta_{n-2}
//    [n] alpha_n = g alpha_{n-1}^q + Delta alpha_{n-2}^(q^2)
LogExpCoeffs log_exp_coeffs(const DrinfeldModule<KField>& dm, long N);

// a_delta(n) = T sum_{j<=n} beta_j delta^(q^j) for a module with
// F_q*delta contained in ker(phi_T); throws std::invalid_argument when the
// membership fails.
std::vector<RatFunc> a_delta_series(const DrinfeldModule<KField>& dm, const RatFunc& delta,
                                    long N);

}  // namespace dss
