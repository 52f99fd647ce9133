#include "dss/shadow.hpp"

namespace dss {

std::vector<long> IndexSet::elements() const {
  std::vector<long> out;
  for (long i = 0; i < 64; ++i)
    if ((bits >> i) & 1) out.push_back(i);
  return out;
}

long IndexSet::max_element() const {
  return bits == 0 ? -1 : 63 - __builtin_clzll(bits);
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (long i : elements()) {
    if (!first) s += ',';
    first = false;
    s += std::to_string(i);
  }
  return s + "}";
}

IndexSet shadow_m(IndexSet s) { return {s.bits & ~(s.bits << 1)}; }

std::uint64_t set_weight(const Fq& F, IndexSet s) {
  const std::uint64_t q = static_cast<std::uint64_t>(F.q());
  std::uint64_t w = 0;
  std::uint64_t pw = 1;
  long prev = 0;
  for (long i : s.elements()) {
    for (long k = prev; k < i; ++k) {
      if (pw > UINT64_MAX / q) throw BoundError("set_weight: overflow");
      pw *= q;
    }
    prev = i;
    if (w > UINT64_MAX - pw) throw BoundError("set_weight: overflow");
    w += pw;
  }
  return w;
}

ShadowStats shadow_stats(const Fq& F, IndexSet s) {
  IndexSet m = shadow_m(s);
  std::uint64_t w = set_weight(F, s);
  std::uint64_t wm = set_weight(F, m);
  std::uint64_t expo = wm - static_cast<std::uint64_t>(m.size());
  if (expo > static_cast<std::uint64_t>(kMaxPolyDegree))
    throw BoundError("shadow_stats: monomial degree exceeds bound");
  return {m, w, FqPoly::monomial(F, F.one(), static_cast<std::int64_t>(expo))};
}

}  // namespace dss
