#ifndef VACT_VERTEX_SET_HPP
#define VACT_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace vact {

/// Vertex label. Labels are 1-based throughout the public API.
using Vertex = int;

inline constexpr int kMaxVertices = 64;

/// A subset of {1..64} stored as a single machine word; bit (v-1) encodes v.
class VertexSet {
public:
  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex *;
    using reference = Vertex;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}

    constexpr Vertex operator*() const { return std::countr_zero(rest_) + 1; }
    constexpr iterator &operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator &) const = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> labels);

  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  /// Labels first..last inclusive; empty when first > last.
  static VertexSet range(Vertex first, Vertex last);
  static VertexSet all(int n) { return range(1, n); }
  static VertexSet from_vector(const std::vector<Vertex> &labels);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }

  constexpr bool contains(Vertex v) const {
    return v >= 1 && v <= kMaxVertices && ((bits_ >> (v - 1)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);
  VertexSet with(Vertex v) const {
    VertexSet s = *this;
    s.insert(v);
    return s;
  }
  VertexSet without(Vertex v) const {
    VertexSet s = *this;
    s.erase(v);
    return s;
  }

  // Both require a non-empty set.
  Vertex min() const;
  Vertex max() const;

  constexpr bool is_subset_of(const VertexSet &other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(const VertexSet &other) const {
    return (bits_ & other.bits_) != 0;
  }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Vertex> to_vector() const;

  constexpr VertexSet &operator|=(const VertexSet &o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet &operator&=(const VertexSet &o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr VertexSet &operator-=(const VertexSet &o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet &b) {
    return a |= b;
  }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet &b) {
    return a &= b;
  }
  /// Set difference.
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet &b) {
    return a -= b;
  }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet &b) {
    return from_bits(a.bits_ ^ b.bits_);
  }

  friend constexpr bool operator==(const VertexSet &, const VertexSet &) = default;
  // Orders by bit pattern; use canonical_less for the member-list order.
  friend constexpr auto operator<=>(const VertexSet &, const VertexSet &) = default;

private:
  std::uint64_t bits_ = 0;
};

/// Labels strictly smaller than v.
VertexSet labels_below(Vertex v);
/// Labels strictly greater than v, up to n.
VertexSet labels_above(Vertex v, int n);

/// Lexicographic order of the ascending member lists ({1} < {1,2} < {2}).
bool canonical_less(const VertexSet &a, const VertexSet &b);

/// "{1,3,5}"
std::string to_string(const VertexSet &s);

} // namespace vact

#endif // VACT_VERTEX_SET_HPP
