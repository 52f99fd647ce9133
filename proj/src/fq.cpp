#include "dss/fq.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

namespace dss {

namespace {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Small polynomials over F_p as digit vectors, ascending degree, trimmed.
using FpVec = std::vector<std::uint8_t>;

void trim(FpVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpVec fp_mul(const FpVec& a, const FpVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  FpVec out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] = static_cast<std::uint8_t>((out[i + j] + a[i] * b[j]) % p);
  trim(out);
  return out;
}

FpVec fp_mod(FpVec a, const FpVec& m, long p) {
  trim(a);
  while (a.size() >= m.size()) {
    // m is monic
    std::uint8_t c = a.back();
    std::size_t shift = a.size() - m.size();
    if (c != 0) {
      for (std::size_t i = 0; i < m.size(); ++i) {
        long t = a[shift + i] + (p - c) * m[i];
        a[shift + i] = static_cast<std::uint8_t>(t % p);
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d over F_p from its integer code: digit i of
// code (base p) is the coefficient of u^i, i < d.
FpVec monic_from_code(long code, long d, long p) {
  FpVec f(d + 1, 0);
  for (long i = 0; i < d; ++i) {
    f[i] = static_cast<std::uint8_t>(code % p);
    code /= p;
  }
  f[d] = 1;
  return f;
}

bool fp_irreducible(const FpVec& f, long p) {
  long d = static_cast<long>(f.size()) - 1;
  long half = d / 2;
  for (long dd = 1; dd <= half; ++dd) {
    long count = 1;
    for (long i = 0; i < dd; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
      FpVec g = monic_from_code(code, dd, p);
      if (fp_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

Fq::Fq(long p, long e) : p_(p), e_(e) {
  q_ = 1;
  for (long i = 0; i < e; ++i) q_ *= p;

  // canonical modulus: smallest monic irreducible of degree e over F_p
  long count = q_;
  modulus_.clear();
  for (long code = 0; code < count; ++code) {
    FpVec f = monic_from_code(code, e, p);
    if (fp_irreducible(f, p)) {
      modulus_.assign(f.begin(), f.end());
      break;
    }
  }
  if (modulus_.empty()) throw std::logic_error("Fq: no irreducible modulus found");

  auto to_digits = [&](long v) {
    FpVec d(e_, 0);
    for (long i = 0; i < e_; ++i) {
      d[i] = static_cast<std::uint8_t>(v % p_);
      v /= p_;
    }
    return d;
  };
  auto from_vec = [&](const FpVec& d) {
    long v = 0;
    for (long i = e_ - 1; i >= 0; --i)
      v = v * p_ + (i < static_cast<long>(d.size()) ? d[i] : 0);
    return v;
  };

  add_.resize(static_cast<std::size_t>(q_) * q_);
  mul_.resize(static_cast<std::size_t>(q_) * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);

  FpVec mod(modulus_.begin(), modulus_.end());
  for (long a = 0; a < q_; ++a) {
    FpVec da = to_digits(a);
    FpVec na(e_);
    for (long i = 0; i < e_; ++i) na[i] = static_cast<std::uint8_t>((p_ - da[i]) % p_);
    neg_[a] = static_cast<std::uint8_t>(from_vec(na));
    for (long b = 0; b < q_; ++b) {
      FpVec db = to_digits(b);
      FpVec s(e_);
      for (long i = 0; i < e_; ++i) s[i] = static_cast<std::uint8_t>((da[i] + db[i]) % p_);
      add_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(from_vec(s));
      FpVec prod = fp_mod(fp_mul(da, db, p_), mod, p_);
      mul_[static_cast<std::size_t>(a) * q_ + b] = static_cast<std::uint8_t>(from_vec(prod));
    }
  }
  for (long a = 1; a < q_; ++a)
    for (long b = 1; b < q_; ++b)
      if (mul_[static_cast<std::size_t>(a) * q_ + b] == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
}

FqElem Fq::elem(long index) const {
  if (index < 0 || index >= q_) throw std::invalid_argument("Fq::elem: index out of range");
  return {static_cast<std::uint8_t>(index)};
}

FqElem Fq::from_int(long n) const {
  long r = n % p_;
  if (r < 0) r += p_;
  return {static_cast<std::uint8_t>(r)};
}

FqElem Fq::inv(FqElem a) const {
  if (a.v == 0) throw std::domain_error("Fq::inv: zero element");
  return {inv_[a.v]};
}

FqElem Fq::pow(FqElem a, std::uint64_t n) const {
  FqElem r = one();
  FqElem base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

std::vector<std::uint8_t> Fq::digits(FqElem a) const {
  std::vector<std::uint8_t> d(e_);
  long v = a.v;
  for (long i = 0; i < e_; ++i) {
    d[i] = static_cast<std::uint8_t>(v % p_);
    v /= p_;
  }
  return d;
}

FqElem Fq::from_digits(const std::vector<std::uint8_t>& d) const {
  long v = 0;
  for (long i = e_ - 1; i >= 0; --i) {
    long c = i < static_cast<long>(d.size()) ? d[i] % p_ : 0;
    v = v * p_ + c;
  }
  return {static_cast<std::uint8_t>(v)};
}

std::string Fq::to_string(FqElem a) const {
  if (e_ == 1) return std::to_string(a.v);
  if (a.v == 0) return "0";
  auto d = digits(a);
  std::string s;
  for (long i = e_ - 1; i >= 0; --i) {
    if (d[i] == 0) continue;
    if (!s.empty()) s += '+';
    if (i == 0) {
      s += std::to_string(d[i]);
    } else {
      if (d[i] != 1) {
        s += std::to_string(d[i]);
        s += '*';
      }
      s += 'u';
      if (i > 1) {
        s += '^';
        s += std::to_string(i);
      }
    }
  }
  return s;
}

const Fq& make_context(long p, long e) {
  if (!is_prime(p)) throw std::invalid_argument("make_context: p must be prime");
  if (e < 1) throw std::invalid_argument("make_context: e must be positive");
  long q = 1;
  for (long i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxQ) throw BoundError("make_context: q exceeds bound " + std::to_string(kMaxQ));
  }

  static std::mutex mu;
  static std::map<std::pair<long, long>, std::unique_ptr<Fq>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = registry[{p, e}];
  if (!slot) slot.reset(new Fq(p, e));
  return *slot;
}

}  // namespace dss
