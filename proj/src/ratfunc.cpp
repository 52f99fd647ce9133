#include "dss/ratfunc.hpp"

#include <stdexcept>

namespace dss {

RatFunc::RatFunc(FqPoly num, FqPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field())
    throw std::invalid_argument("RatFunc: mixed field contexts");
  if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
  normalize();
}

void RatFunc::normalize() {
  const Fq& F = num_.field();
  if (num_.is_zero()) {
    den_ = FqPoly::one(F);
    return;
  }
  // monomial denominators (and numerators) dominate the series code; cancel
  // the common T-power directly instead of running Euclid
  if (den_.is_monomial() || num_.is_monomial()) {
    std::int64_t v = std::min(num_.t_valuation(), den_.t_valuation());
    if (v > 0) {
      num_ = num_.divexact(FqPoly::monomial(F, F.one(), v));
      den_ = den_.divexact(FqPoly::monomial(F, F.one(), v));
    }
    if (!den_.is_monomial()) {
      FqPoly g = poly_gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
      }
    }
  } else {
    FqPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.divexact(g);
      den_ = den_.divexact(g);
    }
  }
  if (!den_.is_monic()) {
    FqElem c = F.inv(den_.leading());
    num_ = num_.mul_scalar(c);
    den_ = den_.mul_scalar(c);
  }
}

RatFunc RatFunc::t_power(const Fq& F, std::int64_t k) {
  if (k >= 0) return RatFunc(FqPoly::monomial(F, F.one(), k));
  return RatFunc(FqPoly::one(F), FqPoly::monomial(F, F.one(), -k));
}

RatFunc RatFunc::add(const RatFunc& g) const {
  if (is_zero()) return g;
  if (g.is_zero()) return *this;
  if (den_ == g.den_) return RatFunc(num_.add(g.num_), den_);
  return RatFunc(num_.mul(g.den_).add(g.num_.mul(den_)), den_.mul(g.den_));
}

RatFunc RatFunc::sub(const RatFunc& g) const { return add(g.neg()); }

RatFunc RatFunc::neg() const {
  RatFunc out = *this;
  out.num_ = out.num_.neg();
  return out;
}

RatFunc RatFunc::mul(const RatFunc& g) const {
  if (is_zero() || g.is_zero()) return RatFunc(field());
  return RatFunc(num_.mul(g.num_), den_.mul(g.den_));
}

RatFunc RatFunc::div(const RatFunc& g) const { return mul(g.inv()); }

RatFunc RatFunc::inv() const {
  if (is_zero()) throw std::domain_error("RatFunc::inv: zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::mul_scalar(FqElem c) const {
  if (field().is_zero(c)) return RatFunc(field());
  RatFunc out = *this;
  out.num_ = out.num_.mul_scalar(c);
  return out;
}

RatFunc RatFunc::pow(std::int64_t n) const {
  if (n == 0) return one(field());
  if (n < 0) return inv().pow(-n);
  // reduced fractions stay reduced under powers, so skip renormalization
  RatFunc out = *this;
  out.num_ = pow_base_q(num_, static_cast<std::uint64_t>(n));
  out.den_ = pow_base_q(den_, static_cast<std::uint64_t>(n));
  return out;
}

RatFunc RatFunc::frobenius_pow(long k) const {
  RatFunc out = *this;
  out.num_ = out.num_.frobenius_pow(k);
  out.den_ = out.den_.frobenius_pow(k);
  return out;
}

std::optional<std::int64_t> RatFunc::valuation() const {
  return fraction_valuation(num_, den_);
}

std::string RatFunc::to_string(const std::string& var) const {
  if (den_.is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
}

std::optional<std::int64_t> fraction_valuation(const FqPoly& num, const FqPoly& den) {
  if (den.is_zero()) throw std::domain_error("fraction_valuation: zero denominator");
  if (num.is_zero()) return std::nullopt;
  return den.deg() - num.deg();
}

}  // namespace dss
