#include "doctest.h"

#include <sstream>
#include <stdexcept>

#include "hunt/vertex_set.hpp"

using hunt::VertexSet;

TEST_CASE("set algebra over a shared universe") {
  VertexSet a(6, {0, 2, 4});
  VertexSet b(6, {2, 3});
  CHECK((a | b) == VertexSet(6, {0, 2, 3, 4}));
  CHECK((a & b) == VertexSet(6, {2}));
  CHECK((a - b) == VertexSet(6, {0, 4}));
  CHECK(a.complement() == VertexSet(6, {1, 3, 5}));
  CHECK(a.intersects(b));
  CHECK_FALSE(VertexSet(6, {1}).intersects(a));
  CHECK(VertexSet(6, {2}).is_subset_of(a));
  CHECK(a.size() == 3);
}

TEST_CASE("mismatched universes are rejected") {
  VertexSet a(4);
  VertexSet b(5);
  CHECK_THROWS_AS(a |= b, std::invalid_argument);
  CHECK_THROWS_AS((void)a.is_subset_of(b), std::invalid_argument);
}

TEST_CASE("iteration, masks and formatting") {
  VertexSet s(70, {1, 65, 3});
  CHECK(s.to_vector() == std::vector<hunt::Vertex>{1, 3, 65});
  CHECK(*s.first() == 1);
  CHECK(*s.next(3) == 65);
  CHECK_FALSE(s.next(65).has_value());
  CHECK_THROWS(s.to_mask());

  VertexSet m = VertexSet::from_mask(10, 0b1010010);
  CHECK(m.to_mask() == 0b1010010);
  CHECK(VertexSet::full(7).size() == 7);
  CHECK(VertexSet(5).empty());

  std::ostringstream os;
  os << VertexSet(6, {0, 2, 5});
  CHECK(os.str() == "{0,2,5}");
}

TEST_CASE("insert and erase check the range") {
  VertexSet s(3);
  s.insert(2);
  CHECK(s.contains(2));
  s.erase(2);
  CHECK(s.empty());
  CHECK_THROWS(s.insert(3));
  CHECK_FALSE(s.contains(7));
}
