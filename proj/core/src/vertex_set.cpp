#include "hunt/vertex_set.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace hunt {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  s.bits_.set();
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) {
    throw std::invalid_argument("from_mask requires a universe of at most 64");
  }
  if (universe < 64 && (mask >> universe) != 0) {
    throw std::invalid_argument("mask has bits outside the universe");
  }
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i) {
    if ((mask >> i) & 1U) s.bits_.set(i);
  }
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " out of range for universe " +
                                std::to_string(bits_.size()));
  }
  bits_.set(v);
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size()) bits_.reset(v);
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (other.bits_.size() != bits_.size()) {
    throw std::invalid_argument("vertex set universe mismatch (" +
                                std::to_string(bits_.size()) + " vs " +
                                std::to_string(other.bits_.size()) + ")");
  }
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  require_same_universe(other);
  bits_ |= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  require_same_universe(other);
  bits_ &= other.bits_;
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  require_same_universe(other);
  bits_ -= other.bits_;
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s = *this;
  s.bits_.flip();
  return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.is_subset_of(other.bits_);
}

bool VertexSet::intersects(const VertexSet& other) const {
  require_same_universe(other);
  return bits_.intersects(other.bits_);
}

std::optional<Vertex> VertexSet::first() const {
  auto i = bits_.find_first();
  if (i == Bits::npos) return std::nullopt;
  return static_cast<Vertex>(i);
}

std::optional<Vertex> VertexSet::next(Vertex v) const {
  auto i = bits_.find_next(v);
  if (i == Bits::npos) return std::nullopt;
  return static_cast<Vertex>(i);
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

std::uint64_t VertexSet::to_mask() const {
  if (bits_.size() > 64) {
    throw std::invalid_argument("to_mask requires a universe of at most 64");
  }
  std::uint64_t mask = 0;
  for_each([&](Vertex v) { mask |= std::uint64_t{1} << v; });
  return mask;
}

std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  os << '{';
  bool first = true;
  s.for_each([&](Vertex v) {
    if (!first) os << ',';
    os << v;
    first = false;
  });
  return os << '}';
}

}  // namespace hunt
