#pragma once

// Sparse polynomials in one named indeterminate with coefficients in K.
// Exponents are kept in an ordered map, so iteration (and hence printing and
// serialization) is deterministic.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "dss/ratfunc.hpp"

namespace dss {

class SeriesPoly {
 public:
  SeriesPoly(const Fq& F, std::string var) : F_(&F), var_(std::move(var)) {}

  const Fq& field() const { return *F_; }
  const std::string& var() const { return var_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t term_count() const { return t_.size(); }
  std::optional<std::uint64_t> degree() const {
    if (t_.empty()) return std::nullopt;
    return t_.rbegin()->first;
  }

  RatFunc coeff(std::uint64_t e) const {
    auto it = t_.find(e);
    return it == t_.end() ? RatFunc::zero(*F_) : it->second;
  }
  const std::map<std::uint64_t, RatFunc>& terms() const { return t_; }

  void add_term(std::uint64_t e, const RatFunc& c);
  void set_term(std::uint64_t e, const RatFunc& c);

  SeriesPoly add(const SeriesPoly& g) const;
  SeriesPoly sub(const SeriesPoly& g) const;
  SeriesPoly neg() const;
  SeriesPoly mul_scalar(const RatFunc& c) const;
  // multiply by c * X^e
  SeriesPoly mul_monomial(std::uint64_t e, const RatFunc& c) const;

  // X -> -X
  SeriesPoly negate_variable() const;

  RatFunc eval(const RatFunc& x) const;

  friend bool operator==(const SeriesPoly& a, const SeriesPoly& b) {
    return a.var_ == b.var_ && a.t_ == b.t_;
  }

  std::string to_string() const;

 private:
  const Fq* F_;
  std::string var_;
  std::map<std::uint64_t, RatFunc> t_;
};

}  // namespace dss
