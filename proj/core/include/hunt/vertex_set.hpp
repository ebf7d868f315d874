#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hunt {

using Vertex = std::uint32_t;

/// Subset of the vertex universe {0, ..., universe-1}.
///
/// Binary operations require both operands to share a universe and throw
/// std::invalid_argument otherwise.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);
  /// Requires universe <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);

  std::size_t universe() const noexcept { return bits_.size(); }
  std::size_t size() const noexcept { return bits_.count(); }
  bool empty() const noexcept { return bits_.none(); }

  bool contains(Vertex v) const noexcept {
    return v < bits_.size() && bits_.test(v);
  }
  void insert(Vertex v);
  void erase(Vertex v);

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  /// Set difference.
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  VertexSet complement() const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  std::optional<Vertex> first() const;
  /// Smallest member strictly greater than v.
  std::optional<Vertex> next(Vertex v) const;
  std::vector<Vertex> to_vector() const;
  std::uint64_t to_mask() const;

  template <class F>
  void for_each(F&& f) const {
    for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) {
      f(static_cast<Vertex>(i));
    }
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.bits_ == b.bits_;
  }

 private:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  void require_same_universe(const VertexSet& other) const;

  Bits bits_;
};

/// Formats as "{0,2,5}".
std::ostream& operator<<(std::ostream& os, const VertexSet& s);

}  // namespace hunt
