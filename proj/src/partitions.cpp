#include "dss/partitions.hpp"

#include <stdexcept>

namespace dss {

std::vector<ShadowedPair> shadowed_partitions(long n) {
  if (n < 0 || n > 30) throw std::invalid_argument("shadowed_partitions: n out of range");
  std::vector<ShadowedPair> out;
  struct Frame {
    long pos;
    IndexSet s1, s2;
  };
  // explicit stack, monomino branch pushed last so it is explored first
  std::vector<Frame> stack{{0, {}, {}}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    if (f.pos == n) {
      out.push_back({f.s1, f.s2, n});
      continue;
    }
    if (f.pos + 1 < n) stack.push_back({f.pos + 2, f.s1, f.s2.with(f.pos)});
    stack.push_back({f.pos + 1, f.s1.with(f.pos), f.s2});
  }
  return out;
}

bool is_valid_shadowed_pair(IndexSet s1, IndexSet s2, long n) {
  IndexSet range = IndexSet::range(n);
  IndexSet s2up = s2.shifted_up();
  if (!s1.disjoint(s2) || !s1.disjoint(s2up) || !s2.disjoint(s2up)) return false;
  return s1.unite(s2).unite(s2up) == range;
}

}  // namespace dss
