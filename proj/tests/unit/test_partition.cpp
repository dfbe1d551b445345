#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "hurwitz/partition.hpp"

using namespace hurwitz;

TEST_CASE("construction sorts non-increasingly") {
  CHECK(Partition({1, 3, 2}).parts() == std::vector<int>{3, 2, 1});
  CHECK(Partition{4, 1, 1}.sum() == 6);
  CHECK(Partition{5}.size() == 1);
  CHECK_THROWS_AS(Partition(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({-1}), std::invalid_argument);
}

TEST_CASE("parse accepts comma-separated parts in any order") {
  CHECK(Partition::parse("4,1,1") == Partition{4, 1, 1});
  CHECK(Partition::parse("1,1,4") == Partition{4, 1, 1});
  CHECK(Partition::parse("3") == Partition{3});
  CHECK_THROWS_AS(Partition::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("a,b"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,0"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,1x"), std::invalid_argument);
}

TEST_CASE("least common multiple of the parts") {
  CHECK(Partition{1, 1, 1}.lcm() == 1);
  CHECK(Partition{2, 1}.lcm() == 2);
  CHECK(Partition{3}.lcm() == 3);
  CHECK(Partition{4, 6}.lcm() == 12);
}

TEST_CASE("str round-trips through parse") {
  const Partition p{3, 2, 2, 1};
  CHECK(p.str() == "3,2,2,1");
  CHECK(Partition::parse(p.str()) == p);
}

TEST_CASE("partition listing is reverse-lexicographic") {
  CHECK(partitions(1) == std::vector<Partition>{Partition{1}});
  CHECK(partitions(3) ==
        std::vector<Partition>{Partition{3}, Partition{2, 1},
                               Partition{1, 1, 1}});
  const int counts[] = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int d = 1; d <= 8; ++d) {
    const auto list = partitions(d);
    CHECK(int(list.size()) == counts[d - 1]);
    for (std::size_t i = 0; i + 1 < list.size(); ++i)
      CHECK(list[i] < list[i + 1]);
    for (const Partition& p : list) CHECK(p.sum() == d);
  }
  CHECK_THROWS_AS(partitions(0), std::invalid_argument);
}
