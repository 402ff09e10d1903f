#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperres {

/// One bit per vertex; vertex v (1-based) lives at bit v-1.
using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask vertex_bit(int v) { return Mask{1} << (v - 1); }

/// Mask with bits 1..n set.
constexpr Mask ground_mask(int n) {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr int popcount(Mask m) { return std::popcount(m); }

/// Lowest vertex in a non-empty mask.
constexpr int lowest_vertex(Mask m) { return std::countr_zero(m) + 1; }

inline std::vector<int> mask_vertices(Mask m) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(popcount(m)));
  while (m != 0) {
    out.push_back(lowest_vertex(m));
    m &= m - 1;
  }
  return out;
}

/// Calls fn(v) for each vertex of m in ascending order.
template <class Fn>
constexpr void for_each_vertex(Mask m, Fn&& fn) {
  while (m != 0) {
    fn(lowest_vertex(m));
    m &= m - 1;
  }
}

/// Next mask with the same popcount (Gosper). Returns 0 past the last
/// mask that fits in `limit`.
constexpr Mask next_same_popcount(Mask m, Mask limit) {
  if (m == 0) return 0;
  Mask c = m & (~m + 1);
  Mask r = m + c;
  if (r == 0) return 0;  // overflow past bit 63
  Mask next = (((r ^ m) >> 2) / c) | r;
  return (next & ~limit) != 0 ? 0 : next;
}

/// Calls fn(mask) for every subset of [n] of size
/// exactly `size`, in ascending numeric order.
template <class Fn>
void for_each_subset_of_size(int n, int size, Fn&& fn) {
  if (size < 0 || size > n) return;
  if (size == 0) {
    fn(Mask{0});
    return;
  }
  const Mask limit = ground_mask(n);
  for (Mask m = ground_mask(size); m != 0; m = next_same_popcount(m, limit)) {
    fn(m);
  }
}

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask mask) : mask_(mask) {}
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) mask_ |= vertex_bit(v);
  }
  static VertexSet from_vertices(const std::vector<int>& vertices) {
    VertexSet s;
    for (int v : vertices) s.mask_ |= vertex_bit(v);
    return s;
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool contains(int v) const { return (mask_ & vertex_bit(v)) != 0; }
  constexpr bool subset_of(VertexSet other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(VertexSet other) const {
    return (mask_ & other.mask_) != 0;
  }
  std::vector<int> vertices() const { return mask_vertices(mask_); }
  std::string to_string() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) {
    return VertexSet(a.mask_ | b.mask_);
  }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) {
    return VertexSet(a.mask_ & b.mask_);
  }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) {
    return VertexSet(a.mask_ & ~b.mask_);
  }
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  Mask mask_ = 0;
};

}  // namespace hyperres
