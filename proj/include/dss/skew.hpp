#pragma once

// The twisted polynomial ring L{tau} with commutation rule tau*l = l^q*tau.
// Coefficient fields are small tag types over a shared interface so phi_a,
// kernels and the supersingularity test run through one code path whether L
// is K = F_q(T), a residue field A/p, or a finite extension of F_q.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dss/extfield.hpp"
#include "dss/fqpoly.hpp"
#include "dss/ratfunc.hpp"

namespace dss {

// ---- coefficient fields ----

struct KField {
  const Fq* F;
  using Elem = RatFunc;

  long q() const { return F->q(); }
  Elem zero() const { return RatFunc::zero(*F); }
  Elem one() const { return RatFunc::one(*F); }
  Elem embed_const(FqElem c) const { return RatFunc(FqPoly::constant(*F, c)); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a.add(b); }
  Elem sub(const Elem& a, const Elem& b) const { return a.sub(b); }
  Elem mul(const Elem& a, const Elem& b) const { return a.mul(b); }
  Elem neg(const Elem& a) const { return a.neg(); }
  Elem inv(const Elem& a) const { return a.inv(); }
  Elem frob_q(const Elem& a) const { return a.frobenius_pow(1); }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  bool same(const KField& o) const { return F == o.F; }
};

// A/p for a monic irreducible p; elements are residues of degree < deg p.
struct ResidueField {
  const Fq* F;
  FqPoly p;

  ResidueField(const Fq& field, FqPoly prime) : F(&field), p(std::move(prime)) {}

  using Elem = FqPoly;
  long q() const { return F->q(); }
  Elem zero() const { return FqPoly::zero(*F); }
  Elem one() const { return FqPoly::one(*F); }
  Elem embed_const(FqElem c) const { return FqPoly::constant(*F, c); }
  Elem reduce(const FqPoly& a) const { return a.mod(p); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a.add(b); }
  Elem sub(const Elem& a, const Elem& b) const { return a.sub(b); }
  Elem mul(const Elem& a, const Elem& b) const { return a.mul(b).mod(p); }
  Elem neg(const Elem& a) const { return a.neg(); }
  Elem inv(const Elem& a) const { return inv_mod(a, p); }
  Elem frob_q(const Elem& a) const { return pow_mod(a, static_cast<std::uint64_t>(F->q()), p); }
  std::string to_string(const Elem& a) const { return a.to_string(); }
  bool same(const ResidueField& o) const { return F == o.F && p == o.p; }
};

struct ExtFieldRef {
  const ExtField* E;
  using Elem = ExtElem;

  long q() const { return E->base().q(); }
  Elem zero() const { return E->zero(); }
  Elem one() const { return E->one(); }
  Elem embed_const(FqElem c) const { return E->from_base(c); }
  bool is_zero(const Elem& a) const { return E->is_zero(a); }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return E->add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return E->sub(a, b); }
  Elem mul(const Elem& a, const Elem& b) const { return E->mul(a, b); }
  Elem neg(const Elem& a) const { return E->neg(a); }
  Elem inv(const Elem& a) const { return E->inv(a); }
  Elem frob_q(const Elem& a) const { return E->frobenius_q(a); }
  std::string to_string(const Elem& a) const { return E->to_string(a); }
  bool same(const ExtFieldRef& o) const { return E == o.E; }
};

// ---- skew polynomials ----

template <class Fld>
class SkewPoly {
 public:
  using Elem = typename Fld::Elem;

  explicit SkewPoly(Fld field) : fld_(std::move(field)) {}
  SkewPoly(Fld field, std::vector<Elem> coeffs) : fld_(std::move(field)), c_(std::move(coeffs)) {
    trim();
  }

  static SkewPoly zero(Fld f) { return SkewPoly(std::move(f)); }
  static SkewPoly constant(Fld f, Elem c) {
    SkewPoly s(std::move(f));
    if (!s.fld_.is_zero(c)) s.c_.push_back(std::move(c));
    return s;
  }
  static SkewPoly tau(Fld f, long k = 1) {
    SkewPoly s(f);
    s.c_.assign(static_cast<std::size_t>(k) + 1, f.zero());
    s.c_.back() = f.one();
    return s;
  }

  const Fld& field() const { return fld_; }
  bool is_zero() const { return c_.empty(); }
  std::optional<std::int64_t> degree() const {
    if (c_.empty()) return std::nullopt;
    return static_cast<std::int64_t>(c_.size()) - 1;
  }
  Elem coeff(std::int64_t i) const {
    if (i < 0 || i >= static_cast<std::int64_t>(c_.size())) return fld_.zero();
    return c_[static_cast<std::size_t>(i)];
  }
  const std::vector<Elem>& coeffs() const { return c_; }

  // least i with c_i != 0; nullopt (+infinity) for the zero polynomial
  std::optional<std::int64_t> tau_valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!fld_.is_zero(c_[i])) return static_cast<std::int64_t>(i);
    return std::nullopt;
  }

  SkewPoly add(const SkewPoly& g) const {
    check_field(g);
    std::vector<Elem> out;
    std::size_t n = std::max(c_.size(), g.c_.size());
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Elem a = i < c_.size() ? c_[i] : fld_.zero();
      Elem b = i < g.c_.size() ? g.c_[i] : fld_.zero();
      out.push_back(fld_.add(a, b));
    }
    return SkewPoly(fld_, std::move(out));
  }

  SkewPoly sub(const SkewPoly& g) const {
    check_field(g);
    return add(g.neg());
  }

  SkewPoly neg() const {
    std::vector<Elem> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(fld_.neg(c));
    return SkewPoly(fld_, std::move(out));
  }

  // (sum a_i tau^i)(sum b_j tau^j) = sum_{i,j} a_i b_j^(q^i) tau^(i+j)
  SkewPoly mul(const SkewPoly& g) const {
    check_field(g);
    if (is_zero() || g.is_zero()) return SkewPoly(fld_);
    std::vector<Elem> out(c_.size() + g.c_.size() - 1, fld_.zero());
    std::vector<Elem> btw = g.c_;  // b twisted by q^i, updated per row
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fld_.is_zero(c_[i])) {
        for (std::size_t j = 0; j < btw.size(); ++j) {
          if (fld_.is_zero(btw[j])) continue;
          out[i + j] = fld_.add(out[i + j], fld_.mul(c_[i], btw[j]));
        }
      }
      if (i + 1 < c_.size())
        for (auto& b : btw) b = fld_.frob_q(b);
    }
    return SkewPoly(fld_, std::move(out));
  }

  // f(x) = sum c_i x^(q^i); F_q-linear in x
  Elem eval(const Elem& x) const {
    Elem acc = fld_.zero();
    Elem xp = x;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!fld_.is_zero(c_[i])) acc = fld_.add(acc, fld_.mul(c_[i], xp));
      if (i + 1 < c_.size()) xp = fld_.frob_q(xp);
    }
    return acc;
  }

  bool eq(const SkewPoly& g) const {
    check_field(g);
    if (c_.size() != g.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!fld_.eq(c_[i], g.c_[i])) return false;
    return true;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::int64_t i = static_cast<std::int64_t>(c_.size()) - 1; i >= 0; --i) {
      const Elem& c = c_[static_cast<std::size_t>(i)];
      if (fld_.is_zero(c)) continue;
      if (!s.empty()) s += '+';
      std::string cs = fld_.to_string(c);
      if (i == 0) {
        s += cs;
        continue;
      }
      if (cs != "1") {
        bool parens = cs.find('+') != std::string::npos || cs.find('/') != std::string::npos;
        if (parens) s += '(';
        s += cs;
        if (parens) s += ')';
        s += '*';
      }
      s += 't';
      if (i > 1) {
        s += '^';
        s += std::to_string(i);
      }
    }
    return s;
  }

 private:
  void check_field(const SkewPoly& g) const {
    if (!fld_.same(g.fld_)) throw std::invalid_argument("SkewPoly: mixed coefficient fields");
  }
  void trim() {
    while (!c_.empty() && fld_.is_zero(c_.back())) c_.pop_back();
  }

  Fld fld_;
  std::vector<Elem> c_;
};

// F_q-dimension of ker(f) in an algebraic closure: deg_tau(f) minus the
// tau-valuation (the separable part of f = g o tau^v has q^(deg-v) simple
// roots).  Throws std::domain_error for f = 0.
template <class Fld>
std::int64_t kernel_dim_closure(const SkewPoly<Fld>& f) {
  if (f.is_zero()) throw std::domain_error("kernel_dim_closure: zero polynomial");
  return *f.degree() - *f.tau_valuation();
}

// |{x in M : f(x) = 0}| by exhaustive scan.  The coefficients of f are
// embedded into M first; deg(L) must divide deg(M).
long count_roots_in(const SkewPoly<ResidueField>& f, const ExtField& M);
long count_roots_in(const SkewPoly<ExtFieldRef>& f, const ExtField& M);

}  // namespace dss
