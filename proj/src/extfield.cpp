#include "dss/extfield.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace dss {

ExtField::ExtField(const Fq& F, long d) : F_(&F), d_(d), defining_(F) {
  size_ = 1;
  for (long i = 0; i < d; ++i) size_ *= F.q();

  // canonical defining polynomial: smallest monic irreducible of degree d
  FqPoly found(F);
  long count = size_;
  for (long code = 0; code < count; ++code) {
    FqPoly f = monic_from_code(F, d, code);
    if (d == 1 || is_irreducible(f)) {
      found = f;
      break;
    }
  }
  defining_ = found;

  // reduction table for w^d .. w^(2d-2)
  red_high_.resize(static_cast<std::size_t>(std::max<long>(d - 1, 0)));
  ExtElem wd{};  // w^d = -(lower part of defining)
  for (long i = 0; i < d; ++i) wd.c[static_cast<std::size_t>(i)] = F.neg(defining_.coeff(i));
  if (d >= 1) {
    ExtElem cur = wd;
    for (long i = 0; i < d - 1; ++i) {
      red_high_[static_cast<std::size_t>(i)] = cur;
      // cur = cur * w
      ExtElem nxt{};
      FqElem top = cur.c[static_cast<std::size_t>(d - 1)];
      for (long j = d - 1; j > 0; --j) nxt.c[static_cast<std::size_t>(j)] = cur.c[static_cast<std::size_t>(j - 1)];
      nxt.c[0] = FqElem{};
      if (!(top == FqElem{}))
        for (long j = 0; j < d; ++j)
          nxt.c[static_cast<std::size_t>(j)] =
              F.add(nxt.c[static_cast<std::size_t>(j)], F.mul(top, wd.c[static_cast<std::size_t>(j)]));
      cur = nxt;
    }
  }

  // Frobenius is F_q-linear: x^q = sum_i c_i (w^q)^i, so precompute (w^q)^i
  frob_basis_.resize(static_cast<std::size_t>(d));
  ExtElem wq = pow(gen(), static_cast<std::uint64_t>(F.q()));
  ExtElem acc = one();
  for (long i = 0; i < d; ++i) {
    frob_basis_[static_cast<std::size_t>(i)] = acc;
    if (i + 1 < d) acc = mul(acc, wq);
  }
}

const ExtField& ExtField::get(const Fq& F, long d) {
  if (d < 1) throw std::invalid_argument("ExtField: degree must be positive");
  if (d > kMaxExtDegree) throw BoundError("ExtField: degree exceeds " + std::to_string(kMaxExtDegree));
  long size = 1;
  for (long i = 0; i < d; ++i) {
    size *= F.q();
    if (size > kMaxEnumField)
      throw BoundError("ExtField: q^d exceeds bound " + std::to_string(kMaxEnumField));
  }
  static std::mutex mu;
  static std::map<std::pair<const Fq*, long>, std::unique_ptr<ExtField>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{&F, d}];
  if (!slot) slot.reset(new ExtField(F, d));
  return *slot;
}

ExtElem ExtField::gen() const {
  ExtElem a{};
  if (d_ == 1) {
    // w is a root of the degree-1 defining polynomial, i.e. an F_q element
    a.c[0] = F_->neg(defining_.coeff(0));
  } else {
    a.c[1] = F_->one();
  }
  return a;
}

ExtElem ExtField::from_base(FqElem x) const {
  ExtElem a{};
  a.c[0] = x;
  return a;
}

ExtElem ExtField::from_index(long idx) const {
  if (idx < 0 || idx >= size_) throw std::invalid_argument("ExtField::from_index: out of range");
  ExtElem a{};
  for (long i = 0; i < d_; ++i) {
    a.c[static_cast<std::size_t>(i)] = F_->elem(idx % F_->q());
    idx /= F_->q();
  }
  return a;
}

long ExtField::index(const ExtElem& a) const {
  long idx = 0;
  for (long i = d_ - 1; i >= 0; --i) idx = idx * F_->q() + a.c[static_cast<std::size_t>(i)].v;
  return idx;
}

bool ExtField::is_zero(const ExtElem& a) const {
  for (long i = 0; i < d_; ++i)
    if (a.c[static_cast<std::size_t>(i)].v != 0) return false;
  return true;
}

ExtElem ExtField::add(const ExtElem& a, const ExtElem& b) const {
  ExtElem r{};
  for (long i = 0; i < d_; ++i)
    r.c[static_cast<std::size_t>(i)] =
        F_->add(a.c[static_cast<std::size_t>(i)], b.c[static_cast<std::size_t>(i)]);
  return r;
}

ExtElem ExtField::sub(const ExtElem& a, const ExtElem& b) const { return add(a, neg(b)); }

ExtElem ExtField::neg(const ExtElem& a) const {
  ExtElem r{};
  for (long i = 0; i < d_; ++i)
    r.c[static_cast<std::size_t>(i)] = F_->neg(a.c[static_cast<std::size_t>(i)]);
  return r;
}

ExtElem ExtField::mul(const ExtElem& a, const ExtElem& b) const {
  // schoolbook product then reduce the high part through red_high_
  std::array<FqElem, 2 * kMaxExtDegree> prod{};
  for (long i = 0; i < d_; ++i) {
    FqElem ai = a.c[static_cast<std::size_t>(i)];
    if (ai.v == 0) continue;
    for (long j = 0; j < d_; ++j) {
      FqElem bj = b.c[static_cast<std::size_t>(j)];
      if (bj.v == 0) continue;
      auto& slot = prod[static_cast<std::size_t>(i + j)];
      slot = F_->add(slot, F_->mul(ai, bj));
    }
  }
  ExtElem r{};
  for (long i = 0; i < d_; ++i) r.c[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
  for (long i = 0; i < d_ - 1; ++i) {
    FqElem hi = prod[static_cast<std::size_t>(d_ + i)];
    if (hi.v == 0) continue;
    const ExtElem& red = red_high_[static_cast<std::size_t>(i)];
    for (long j = 0; j < d_; ++j)
      r.c[static_cast<std::size_t>(j)] =
          F_->add(r.c[static_cast<std::size_t>(j)], F_->mul(hi, red.c[static_cast<std::size_t>(j)]));
  }
  return r;
}

ExtElem ExtField::inv(const ExtElem& a) const {
  if (is_zero(a)) throw std::domain_error("ExtField::inv: zero element");
  // a^(q^d - 2); fields are tiny so this is fine
  std::uint64_t n = static_cast<std::uint64_t>(size_) - 2;
  return pow(a, n);
}

ExtElem ExtField::pow(const ExtElem& a, std::uint64_t n) const {
  ExtElem r = one();
  ExtElem base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

ExtElem ExtField::frobenius_q(const ExtElem& a) const {
  // coordinates lie in F_q, hence are fixed by x -> x^q
  ExtElem r{};
  for (long i = 0; i < d_; ++i) {
    FqElem ci = a.c[static_cast<std::size_t>(i)];
    if (ci.v == 0) continue;
    const ExtElem& basis = frob_basis_[static_cast<std::size_t>(i)];
    for (long j = 0; j < d_; ++j)
      r.c[static_cast<std::size_t>(j)] =
          F_->add(r.c[static_cast<std::size_t>(j)], F_->mul(ci, basis.c[static_cast<std::size_t>(j)]));
  }
  return r;
}

ExtElem ExtField::frobenius_qn(const ExtElem& a, long n) const {
  ExtElem r = a;
  for (long i = 0; i < n; ++i) r = frobenius_q(r);
  return r;
}

ExtElem ExtField::eval_poly(const FqPoly& a, const ExtElem& x) const {
  ExtElem acc{};
  const auto& cs = a.coeffs();
  for (std::size_t i = cs.size(); i-- > 0;) acc = add(mul(acc, x), from_base(cs[i]));
  return acc;
}

std::string ExtField::to_string(const ExtElem& a) const {
  if (is_zero(a)) return "0";
  std::string s;
  for (long i = d_ - 1; i >= 0; --i) {
    FqElem c = a.c[static_cast<std::size_t>(i)];
    if (c.v == 0) continue;
    if (!s.empty()) s += '+';
    std::string cs = F_->to_string(c);
    if (i == 0) {
      s += cs;
      continue;
    }
    if (!(c == F_->one())) {
      bool parens = cs.find('+') != std::string::npos;
      if (parens) s += '(';
      s += cs;
      if (parens) s += ')';
      s += '*';
    }
    s += 'w';
    if (i > 1) {
      s += '^';
      s += std::to_string(i);
    }
  }
  return s;
}

ExtElem embed_prime_root(const FqPoly& p, const ExtField& L) {
  if (!p.is_monic() || p.is_constant())
    throw std::invalid_argument("embed_prime_root: p must be monic of positive degree");
  if (L.degree() % p.deg() != 0)
    throw std::invalid_argument("embed_prime_root: deg(p) does not divide deg(L)");
  for (long idx = 0; idx < L.size(); ++idx) {
    ExtElem x = L.from_index(idx);
    if (L.is_zero(L.eval_poly(p, x))) return x;
  }
  throw std::logic_error("embed_prime_root: no root found");
}

FqPoly subfield_express(const ExtField& L, const ExtElem& x, const ExtElem& t0,
                        const FqPoly& p) {
  const Fq& F = L.base();
  const long n = static_cast<long>(p.deg());
  const long d = L.degree();
  if (!(L.frobenius_qn(x, n) == x))
    throw std::invalid_argument("subfield_express: element not fixed by q^n-Frobenius");

  // solve sum_i c_i t0^i = x over F_q by Gaussian elimination on the
  // d x (n+1) coordinate matrix
  std::vector<std::vector<FqElem>> m(static_cast<std::size_t>(d),
                                     std::vector<FqElem>(static_cast<std::size_t>(n) + 1));
  ExtElem pw = L.one();
  for (long j = 0; j < n; ++j) {
    for (long i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pw.c[static_cast<std::size_t>(i)];
    pw = L.mul(pw, t0);
  }
  for (long i = 0; i < d; ++i)
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] = x.c[static_cast<std::size_t>(i)];

  long row = 0;
  std::vector<long> pivot_col(static_cast<std::size_t>(n), -1);
  for (long col = 0; col < n && row < d; ++col) {
    long pr = -1;
    for (long r = row; r < d; ++r)
      if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].v != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[static_cast<std::size_t>(pr)], m[static_cast<std::size_t>(row)]);
    FqElem inv = F.inv(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
    for (long c = col; c <= n; ++c)
      m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)] =
          F.mul(m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)], inv);
    for (long r = 0; r < d; ++r) {
      if (r == row) continue;
      FqElem f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      if (f.v == 0) continue;
      for (long c = col; c <= n; ++c)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
            F.sub(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                  F.mul(f, m[static_cast<std::size_t>(row)][static_cast<std::size_t>(c)]));
    }
    pivot_col[static_cast<std::size_t>(col)] = row;
    ++row;
  }
  // consistency: all remaining rows must be zero
  for (long r = row; r < d; ++r)
    if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)].v != 0)
      throw std::logic_error("subfield_express: inconsistent system");

  std::vector<FqElem> c(static_cast<std::size_t>(n));
  for (long col = 0; col < n; ++col) {
    long r = pivot_col[static_cast<std::size_t>(col)];
    if (r >= 0) c[static_cast<std::size_t>(col)] = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(n)];
  }
  FqPoly result(F, std::move(c));
  // sanity: the expression must evaluate back to x
  if (!(L.eval_poly(result, t0) == x))
    throw std::logic_error("subfield_express: verification failed");
  return result;
}

}  // namespace dss
