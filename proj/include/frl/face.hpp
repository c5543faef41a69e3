#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace frl {

/// Largest supported vertex count. Faces are stored as bitmasks.
inline constexpr int kMaxVertices = 62;

/// A subset of the vertex set [m] = {1, ..., m}, stored as a bitmask with
/// vertex v at bit v-1. Iteration and vertices() are increasing.
class Face {
 public:
  using Mask = std::uint64_t;

  constexpr Face() = default;
  Face(std::initializer_list<int> vertices);
  explicit Face(const std::vector<int>& vertices);

  static constexpr Face from_mask(Mask mask) {
    Face f;
    f.mask_ = mask;
    return f;
  }
  /// {1, ..., m}
  static constexpr Face full(int m) {
    return from_mask(m >= 64 ? ~Mask{0} : ((Mask{1} << m) - 1));
  }

  constexpr Mask mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  /// Largest vertex, 0 for the empty face.
  constexpr int max_vertex() const { return 64 - std::countl_zero(mask_); }

  constexpr bool contains(int v) const { return (mask_ >> (v - 1)) & 1U; }
  constexpr bool is_subset_of(Face other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr bool intersects(Face other) const {
    return (mask_ & other.mask_) != 0;
  }

  constexpr Face with(int v) const { return from_mask(mask_ | (Mask{1} << (v - 1))); }
  constexpr Face without(int v) const { return from_mask(mask_ & ~(Mask{1} << (v - 1))); }

  friend constexpr Face operator|(Face a, Face b) { return from_mask(a.mask_ | b.mask_); }
  friend constexpr Face operator&(Face a, Face b) { return from_mask(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr Face operator-(Face a, Face b) { return from_mask(a.mask_ & ~b.mask_); }

  friend constexpr bool operator==(Face a, Face b) { return a.mask_ == b.mask_; }
  friend constexpr auto operator<=>(Face a, Face b) { return a.mask_ <=> b.mask_; }

  std::vector<int> vertices() const;
  std::string to_string() const;

 private:
  Mask mask_ = 0;
};

/// Lexicographic order on increasing vertex sequences.
bool lex_less(Face a, Face b);

struct LexLess {
  bool operator()(Face a, Face b) const { return lex_less(a, b); }
};

/// Calls fn(vertex) for every vertex of `face` in increasing order.
template <typename Fn>
void for_each_vertex(Face face, Fn&& fn) {
  auto mask = face.mask();
  while (mask != 0) {
    const int bit = std::countr_zero(mask);
    fn(bit + 1);
    mask &= mask - 1;
  }
}

/// Calls fn(subface) for every subset of `face`, including empty and face itself.
template <typename Fn>
void for_each_subset(Face face, Fn&& fn) {
  const auto full = face.mask();
  auto sub = full;
  while (true) {
    fn(Face::from_mask(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

/// Number of vertices of `face` strictly smaller than v.
inline int count_below(Face face, int v) {
  return std::popcount(face.mask() & ((Face::Mask{1} << (v - 1)) - 1));
}

}  // namespace frl

template <>
struct std::hash<frl::Face> {
  std::size_t operator()(frl::Face f) const noexcept {
    return std::hash<std::uint64_t>{}(f.mask());
  }
};
