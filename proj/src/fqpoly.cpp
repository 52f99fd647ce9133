#include "dss/fqpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dss {

namespace {

// r[0..n) += c * b[0..n) over F_p.  The small primes carry the heavy
// degree-1e5 gcd work, so each gets a kernel the compiler can vectorize.
template <int P>
void axpy_p(std::uint8_t* r, const std::uint8_t* b, std::size_t n, unsigned c) {
  for (std::size_t i = 0; i < n; ++i) {
    unsigned t = r[i] + c * b[i];
    r[i] = static_cast<std::uint8_t>(t % P);
  }
}

void axpy_xor(std::uint8_t* r, const std::uint8_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) r[i] ^= b[i];
}

void axpy_generic_prime(std::uint8_t* r, const std::uint8_t* b, std::size_t n, unsigned c,
                        unsigned p) {
  for (std::size_t i = 0; i < n; ++i) {
    unsigned t = r[i] + c * b[i];
    r[i] = static_cast<std::uint8_t>(t % p);
  }
}

void axpy(const Fq& F, FqElem* r, const FqElem* b, std::size_t n, FqElem c) {
  if (n == 0 || F.is_zero(c)) return;
  auto* rp = reinterpret_cast<std::uint8_t*>(r);
  auto* bp = reinterpret_cast<const std::uint8_t*>(b);
  if (F.e() == 1) {
    switch (F.p()) {
      case 2: axpy_xor(rp, bp, n); return;
      case 3: axpy_p<3>(rp, bp, n, c.v); return;
      case 5: axpy_p<5>(rp, bp, n, c.v); return;
      case 7: axpy_p<7>(rp, bp, n, c.v); return;
      default: axpy_generic_prime(rp, bp, n, c.v, static_cast<unsigned>(F.p())); return;
    }
  }
  for (std::size_t i = 0; i < n; ++i) r[i] = F.add(r[i], F.mul(c, b[i]));
}

void check_same_field(const FqPoly& a, const FqPoly& b) {
  if (&a.field() != &b.field())
    throw std::invalid_argument("FqPoly: mixed field contexts");
}

void check_degree_bound(std::int64_t d, const char* what) {
  if (d > kMaxPolyDegree)
    throw BoundError(std::string(what) + ": degree " + std::to_string(d) +
                     " exceeds bound " + std::to_string(kMaxPolyDegree));
}

}  // namespace

FqPoly::FqPoly(const Fq& F, std::vector<FqElem> coeffs) : F_(&F), c_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

FqPoly FqPoly::constant(const Fq& F, FqElem c) {
  FqPoly f(F);
  if (!F.is_zero(c)) f.c_.push_back(c);
  return f;
}

FqPoly FqPoly::monomial(const Fq& F, FqElem c, std::int64_t k) {
  if (k < 0) throw std::invalid_argument("FqPoly::monomial: negative exponent");
  check_degree_bound(k, "FqPoly::monomial");
  FqPoly f(F);
  if (!F.is_zero(c)) {
    f.c_.assign(static_cast<std::size_t>(k) + 1, FqElem{});
    f.c_.back() = c;
  }
  return f;
}

bool FqPoly::is_monomial() const {
  if (c_.empty()) return false;
  for (std::size_t i = 0; i + 1 < c_.size(); ++i)
    if (c_[i].v != 0) return false;
  return true;
}

std::int64_t FqPoly::deg() const {
  if (c_.empty()) throw std::domain_error("FqPoly::deg: zero polynomial");
  return static_cast<std::int64_t>(c_.size()) - 1;
}

FqElem FqPoly::leading() const {
  if (c_.empty()) throw std::domain_error("FqPoly::leading: zero polynomial");
  return c_.back();
}

std::size_t FqPoly::term_count() const {
  std::size_t n = 0;
  for (auto c : c_)
    if (c.v != 0) ++n;
  return n;
}

std::vector<std::pair<std::int64_t, FqElem>> FqPoly::terms() const {
  std::vector<std::pair<std::int64_t, FqElem>> out;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i].v != 0) out.emplace_back(static_cast<std::int64_t>(i), c_[i]);
  return out;
}

FqPoly FqPoly::add(const FqPoly& g) const {
  check_same_field(*this, g);
  FqPoly out(*F_);
  out.c_.resize(std::max(c_.size(), g.c_.size()), FqElem{});
  for (std::size_t i = 0; i < out.c_.size(); ++i) {
    FqElem a = i < c_.size() ? c_[i] : FqElem{};
    FqElem b = i < g.c_.size() ? g.c_[i] : FqElem{};
    out.c_[i] = F_->add(a, b);
  }
  out.trim();
  return out;
}

FqPoly FqPoly::sub(const FqPoly& g) const { return add(g.neg()); }

FqPoly FqPoly::neg() const {
  FqPoly out(*F_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->neg(c_[i]);
  return out;
}

FqPoly FqPoly::mul(const FqPoly& g) const {
  check_same_field(*this, g);
  if (is_zero() || g.is_zero()) return FqPoly(*F_);
  std::int64_t d = deg() + g.deg();
  check_degree_bound(d, "FqPoly::mul");

  // iterate over the sparser operand
  const FqPoly* a = this;
  const FqPoly* b = &g;
  if (a->term_count() > b->term_count()) std::swap(a, b);

  FqPoly out(*F_);
  out.c_.assign(static_cast<std::size_t>(d) + 1, FqElem{});
  for (std::size_t i = 0; i < a->c_.size(); ++i) {
    if (a->c_[i].v == 0) continue;
    axpy(*F_, out.c_.data() + i, b->c_.data(), b->c_.size(), a->c_[i]);
  }
  out.trim();
  return out;
}

FqPoly FqPoly::mul_scalar(FqElem c) const {
  if (F_->is_zero(c)) return FqPoly(*F_);
  FqPoly out(*F_);
  out.c_.resize(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i] = F_->mul(c_[i], c);
  out.trim();
  return out;
}

FqPoly FqPoly::shift(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("FqPoly::shift: negative shift");
  if (is_zero() || k == 0) return k == 0 ? *this : FqPoly(*F_, c_);
  check_degree_bound(deg() + k, "FqPoly::shift");
  FqPoly out(*F_);
  out.c_.assign(static_cast<std::size_t>(k), FqElem{});
  out.c_.insert(out.c_.end(), c_.begin(), c_.end());
  return out;
}

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return mul_scalar(F_->inv(leading()));
}

std::pair<FqPoly, FqPoly> FqPoly::divmod(const FqPoly& b) const {
  check_same_field(*this, b);
  if (b.is_zero()) throw std::domain_error("FqPoly::divmod: division by zero");
  if (is_zero() || deg() < b.deg()) return {FqPoly(*F_), *this};

  const std::int64_t db = b.deg();
  const FqElem lead_inv = F_->inv(b.leading());
  std::vector<FqElem> rem = c_;
  std::vector<FqElem> quo(rem.size() - static_cast<std::size_t>(db), FqElem{});

  // with a sparse divisor, touch only its nonzero coefficients
  const bool sparse = b.term_count() * 2 < b.c_.size();
  std::vector<std::pair<std::int64_t, FqElem>> bterms;
  if (sparse) {
    bterms = b.terms();
    bterms.pop_back();  // leading handled via quotient coefficient
  }

  for (std::int64_t k = static_cast<std::int64_t>(rem.size()) - 1 - db; k >= 0; --k) {
    FqElem top = rem[static_cast<std::size_t>(k + db)];
    if (top.v == 0) continue;
    FqElem qc = F_->mul(top, lead_inv);
    quo[static_cast<std::size_t>(k)] = qc;
    FqElem neg_qc = F_->neg(qc);
    if (sparse) {
      for (auto& [i, bv] : bterms) {
        auto& slot = rem[static_cast<std::size_t>(k + i)];
        slot = F_->add(slot, F_->mul(neg_qc, bv));
      }
      rem[static_cast<std::size_t>(k + db)] = FqElem{};
    } else {
      axpy(*F_, rem.data() + k, b.c_.data(), static_cast<std::size_t>(db), neg_qc);
      rem[static_cast<std::size_t>(k + db)] = FqElem{};
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {FqPoly(*F_, std::move(quo)), FqPoly(*F_, std::move(rem))};
}

FqPoly FqPoly::divexact(const FqPoly& b) const {
  auto [q, r] = divmod(b);
  if (!r.is_zero()) throw std::logic_error("FqPoly::divexact: nonzero remainder");
  return q;
}

FqPoly FqPoly::pow(std::uint64_t n) const {
  FqPoly r = one(*F_);
  FqPoly base = *this;
  if (n > 0 && !is_zero()) check_degree_bound(deg() * static_cast<std::int64_t>(n), "FqPoly::pow");
  while (n) {
    if (n & 1) r = r.mul(base);
    n >>= 1;
    if (n) base = base.mul(base);
  }
  return r;
}

FqPoly FqPoly::frobenius_pow(long k) const {
  if (is_zero() || k == 0) return *this;
  std::int64_t scale = 1;
  for (long i = 0; i < k; ++i) {
    scale *= F_->q();
    check_degree_bound(deg() * scale, "FqPoly::frobenius_pow");
  }
  FqPoly out(*F_);
  out.c_.assign(static_cast<std::size_t>(deg() * scale) + 1, FqElem{});
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i].v != 0) out.c_[i * static_cast<std::size_t>(scale)] = c_[i];  // c^q = c in F_q
  return out;
}

FqElem FqPoly::eval(FqElem x) const {
  FqElem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = F_->add(F_->mul(acc, x), c_[i]);
  return acc;
}

std::int64_t FqPoly::t_valuation() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i].v != 0) return static_cast<std::int64_t>(i);
  return 0;
}

std::string FqPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  const Fq& F = *F_;
  std::string s;
  for (std::int64_t i = static_cast<std::int64_t>(c_.size()) - 1; i >= 0; --i) {
    FqElem c = c_[static_cast<std::size_t>(i)];
    if (c.v == 0) continue;
    if (!s.empty()) s += '+';
    std::string cs = F.to_string(c);
    if (i == 0) {
      s += cs;
      continue;
    }
    if (!(c == F.one())) {
      bool needs_parens = cs.find('+') != std::string::npos;
      if (needs_parens) s += '(';
      s += cs;
      if (needs_parens) s += ')';
      s += '*';
    }
    s += var;
    if (i > 1) {
      s += '^';
      s += std::to_string(i);
    }
  }
  return s;
}

FqPoly poly_gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult poly_xgcd(const FqPoly& a, const FqPoly& b) {
  const Fq& F = a.field();
  FqPoly r0 = a, r1 = b;
  FqPoly s0 = FqPoly::one(F), s1 = FqPoly::zero(F);
  FqPoly t0 = FqPoly::zero(F), t1 = FqPoly::one(F);
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    FqPoly s2 = s0.sub(q.mul(s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    FqPoly t2 = t0.sub(q.mul(t1));
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  FqElem c = F.inv(r0.leading());
  return {r0.mul_scalar(c), s0.mul_scalar(c), t0.mul_scalar(c)};
}

FqPoly pow_mod(const FqPoly& base, std::uint64_t n, const FqPoly& m) {
  FqPoly r = FqPoly::one(base.field());
  FqPoly b = base.mod(m);
  while (n) {
    if (n & 1) r = r.mul(b).mod(m);
    b = b.mul(b).mod(m);
    n >>= 1;
  }
  return r;
}

FqPoly inv_mod(const FqPoly& a, const FqPoly& m) {
  auto res = poly_xgcd(a.mod(m), m);
  if (!res.g.is_one()) throw std::domain_error("inv_mod: element not invertible");
  return res.s.mod(m);
}

FqPoly pow_base_q(const FqPoly& f, std::uint64_t n) {
  const Fq& F = f.field();
  const std::uint64_t q = static_cast<std::uint64_t>(F.q());
  if (n == 0) return FqPoly::one(F);
  if (f.is_zero()) return f;
  // overall bound check up front; the per-step muls check again anyway
  if (static_cast<long double>(f.deg()) * n > static_cast<long double>(kMaxPolyDegree))
    throw BoundError("pow_base_q: degree exceeds bound");
  FqPoly acc = FqPoly::one(F);
  long level = 0;
  std::uint64_t rest = n;
  while (rest) {
    std::uint64_t digit = rest % q;
    rest /= q;
    if (digit) acc = acc.mul(f.pow(digit).frobenius_pow(level));
    ++level;
  }
  return acc;
}

bool is_irreducible(const FqPoly& f) {
  if (f.is_zero() || f.is_constant())
    throw std::invalid_argument("is_irreducible: constant input");
  const Fq& F = f.field();
  const long q = F.q();
  std::int64_t half = f.deg() / 2;
  for (std::int64_t d = 1; d <= half; ++d) {
    std::int64_t count = 1;
    for (std::int64_t i = 0; i < d; ++i) {
      count *= q;
      if (count > kMaxEnumField * static_cast<std::int64_t>(kMaxEnumField))
        throw BoundError("is_irreducible: trial divisor enumeration too large");
    }
    for (std::int64_t code = 0; code < count; ++code) {
      FqPoly g = monic_from_code(F, static_cast<long>(d), static_cast<long>(code));
      if (f.mod(g).is_zero()) return false;
    }
  }
  return true;
}

FqPoly monic_from_code(const Fq& F, long d, long code) {
  std::vector<FqElem> c(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i < d; ++i) {
    c[static_cast<std::size_t>(i)] = F.elem(code % F.q());
    code /= F.q();
  }
  c[static_cast<std::size_t>(d)] = F.one();
  return FqPoly(F, std::move(c));
}

std::vector<FqPoly> monic_irreducibles(const Fq& F, long d) {
  if (d < 1) throw std::invalid_argument("monic_irreducibles: degree must be positive");
  long count = 1;
  for (long i = 0; i < d; ++i) {
    count *= F.q();
    if (count > kMaxEnumField)
      throw BoundError("monic_irreducibles: q^d exceeds bound " + std::to_string(kMaxEnumField));
  }
  std::vector<FqPoly> out;
  for (long code = 0; code < count; ++code) {
    FqPoly f = monic_from_code(F, d, code);
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace dss
