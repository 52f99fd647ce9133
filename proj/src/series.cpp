#include "dss/series.hpp"

#include <stdexcept>

namespace dss {

void SeriesPoly::add_term(std::uint64_t e, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
    return;
  }
  it->second = it->second.add(c);
  if (it->second.is_zero()) t_.erase(it);
}

void SeriesPoly::set_term(std::uint64_t e, const RatFunc& c) {
  if (c.is_zero())
    t_.erase(e);
  else
    t_.insert_or_assign(e, c);
}

SeriesPoly SeriesPoly::add(const SeriesPoly& g) const {
  if (var_ != g.var_) throw std::invalid_argument("SeriesPoly: mixed indeterminates");
  SeriesPoly out = *this;
  for (const auto& [e, c] : g.t_) out.add_term(e, c);
  return out;
}

SeriesPoly SeriesPoly::sub(const SeriesPoly& g) const { return add(g.neg()); }

SeriesPoly SeriesPoly::neg() const {
  SeriesPoly out(*F_, var_);
  for (const auto& [e, c] : t_) out.t_.emplace(e, c.neg());
  return out;
}

SeriesPoly SeriesPoly::mul_scalar(const RatFunc& c) const {
  SeriesPoly out(*F_, var_);
  if (c.is_zero()) return out;
  for (const auto& [e, v] : t_) {
    RatFunc w = v.mul(c);
    if (!w.is_zero()) out.t_.emplace(e, std::move(w));
  }
  return out;
}

SeriesPoly SeriesPoly::mul_monomial(std::uint64_t e, const RatFunc& c) const {
  SeriesPoly out(*F_, var_);
  if (c.is_zero()) return out;
  for (const auto& [e0, v] : t_) {
    RatFunc w = v.mul(c);
    if (!w.is_zero()) out.t_.emplace(e0 + e, std::move(w));
  }
  return out;
}

SeriesPoly SeriesPoly::negate_variable() const {
  SeriesPoly out(*F_, var_);
  FqElem m1 = F_->minus_one();
  for (const auto& [e, v] : t_) {
    RatFunc w = (e % 2 == 1) ? v.mul_scalar(m1) : v;
    out.t_.emplace(e, std::move(w));
  }
  return out;
}

RatFunc SeriesPoly::eval(const RatFunc& x) const {
  RatFunc acc = RatFunc::zero(*F_);
  for (const auto& [e, c] : t_) {
    if (e > static_cast<std::uint64_t>(INT64_MAX))
      throw BoundError("SeriesPoly::eval: exponent too large");
    acc = acc.add(c.mul(x.pow(static_cast<std::int64_t>(e))));
  }
  return acc;
}

std::string SeriesPoly::to_string() const {
  if (t_.empty()) return "0";
  std::string s;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!s.empty()) s += '+';

    // Laurent-monomial coefficients print inline as a*T^k (k possibly
    // negative); everything else is parenthesized
    std::string cs;
    bool coeff_is_one = false;
    if (c.num().is_monomial() && c.den().is_monomial()) {
      FqElem a = c.num().leading();
      std::int64_t k = c.num().deg() - c.den().deg();
      if (k == 0) {
        cs = F_->to_string(a);
        coeff_is_one = a == F_->one();
        if (!coeff_is_one && e > 0 && cs.find('+') != std::string::npos) cs = "(" + cs + ")";
      } else {
        std::string pw = (k == 1) ? "T" : "T^" + std::to_string(k);
        if (a == F_->one()) {
          cs = pw;
        } else {
          std::string as = F_->to_string(a);
          if (as.find('+') != std::string::npos) as = "(" + as + ")";
          cs = as + "*" + pw;
        }
      }
    } else if (c.is_polynomial()) {
      cs = "(" + c.num().to_string() + ")";
    } else {
      cs = "(" + c.num().to_string() + ")/(" + c.den().to_string() + ")";
    }

    if (e == 0) {
      s += cs;
      continue;
    }
    if (!coeff_is_one) {
      s += cs;
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

}  // namespace dss
