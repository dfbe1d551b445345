#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hurwitz/splitting_type.hpp"

using namespace hurwitz;

namespace {

// Every non-decreasing tuple of the given rank with entries in [lo, hi].
std::vector<SplittingType> all_types(int rank, int lo, int hi) {
  std::vector<SplittingType> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int next_lo) -> void {
    if (static_cast<int>(cur.size()) == rank) {
      out.emplace_back(cur);
      return;
    }
    for (int e = next_lo; e <= hi; ++e) {
      cur.push_back(e);
      self(self, e);
      cur.pop_back();
    }
  };
  rec(rec, lo);
  return out;
}

}  // namespace

TEST_CASE("construction sorts and rejects the empty tuple") {
  CHECK(SplittingType({2, -3, 0}).exponents() == std::vector<int>{-3, 0, 2});
  CHECK_THROWS_AS(SplittingType(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("rank, degree, extremes") {
  const SplittingType t{-3, -3, 0, 2};
  CHECK(t.rank() == 4);
  CHECK(t.degree() == -4);
  CHECK(t.min_exponent() == -3);
  CHECK(t.max_exponent() == 2);
}

TEST_CASE("section counts of sample types") {
  CHECK(SplittingType{0, 0, 0}.h0() == 3);
  CHECK(SplittingType{-1, 1, 2}.h0() == 5);
  CHECK(SplittingType{-3, -3, -3, 0}.h0() == 1);
  CHECK(SplittingType{0, 0}.h1() == 0);
  CHECK(SplittingType{-3, -3, -3}.h1() == 6);
  CHECK(SplittingType{-2, 5}.h1() == 1);
  CHECK(SplittingType{-2, 5}.h0() == 6);
}

TEST_CASE("twist shifts every exponent") {
  CHECK(SplittingType{0, -3, -3, -3}.twist(2) ==
        SplittingType{-1, -1, -1, 2});
  const SplittingType t{-2, 0, 5};
  CHECK(t.twist(0) == t);
  CHECK(t.twist(3).twist(-3) == t);
  CHECK(t.twist(2).degree() == t.degree() + 2 * t.rank());
}

TEST_CASE("dual negates and is an involution") {
  CHECK(SplittingType{-3, -3, -3}.dual() == SplittingType{3, 3, 3});
  CHECK(SplittingType{0}.dual() == SplittingType{0});
  const SplittingType t{-2, 0, 5};
  CHECK(t.dual().dual() == t);
  CHECK(t.dual().degree() == -t.degree());
}

TEST_CASE("minimal section count by rank and degree") {
  CHECK(minimal_h0(3, 2) == 5);
  CHECK(minimal_h0(2, -5) == 0);
  for (int r = 1; r <= 6; ++r) CHECK(minimal_h0(r, 0) == r);
}

TEST_CASE("minimal-section detection") {
  CHECK(SplittingType{-1, 0, 1}.has_minimal_sections());
  CHECK_FALSE(SplittingType{-2, 0, 2}.has_minimal_sections());
  CHECK(SplittingType{0, 0, 0, 0}.has_minimal_sections());
  CHECK(SplittingType{-3, -2}.has_minimal_sections());
}

TEST_CASE("triviality and balance") {
  CHECK(SplittingType{0, 0, 0, 0}.is_trivial());
  CHECK_FALSE(SplittingType{-1, 0, 0, 1}.is_trivial());
  CHECK_FALSE(SplittingType{-1, 1}.is_trivial());
  CHECK(SplittingType{3, 3, 3}.is_balanced());
  CHECK_FALSE(SplittingType{-1, 0, 0, 1}.is_balanced());
  CHECK(SplittingType{2, 3}.is_balanced());
}

TEST_CASE("str joins exponents with commas") {
  CHECK(SplittingType{0, -3, -3}.str() == "-3,-3,0");
  CHECK(SplittingType{7}.str() == "7");
}

TEST_CASE("exhaustive small-type properties") {
  for (int rank = 1; rank <= 4; ++rank) {
    for (const SplittingType& t : all_types(rank, -4, 4)) {
      // Euler characteristic
      CHECK(t.h0() - t.h1() == t.degree() + t.rank());
      // section count never beats the minimum
      CHECK(t.h0() >= minimal_h0(t.rank(), t.degree()));
      // equality exactly when no exponent is <= -2 or degree < -rank
      if (t.min_exponent() >= -1)
        CHECK(t.h0() == minimal_h0(t.rank(), t.degree()));
      // duality exchanges the cohomology of the (-2)-twist
      CHECK(t.h1() == t.dual().twist(-2).h0());
      CHECK(t.dual().dual() == t);
      CHECK(t.twist(3).twist(-1) == t.twist(2));
    }
  }
}
