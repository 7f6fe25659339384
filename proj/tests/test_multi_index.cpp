#include "doctest.h"
#include "workbench/errors.hpp"
#include "workbench/multi_index.hpp"

using namespace workbench;

TEST_CASE("graded lexicographic enumeration") {
  std::vector<MultiIndex> got = indices_up_to(2, 2);
  std::vector<MultiIndex> want = {{0, 0}, {0, 1}, {1, 0},
                                  {0, 2}, {1, 1}, {2, 0}};
  CHECK(got == want);
  CHECK(indices_up_to(3, 4).size() == 35); // binomial(7, 3)
  for (std::size_t k = 1; k < got.size(); ++k)
    CHECK(graded_lex_less(got[k - 1], got[k]));
}

TEST_CASE("index arithmetic") {
  MultiIndex a{2, 1, 0}, b{1, 0, 3};
  CHECK(degree(a) == 3);
  CHECK(add_index(a, b) == MultiIndex{3, 1, 3});
  CHECK(sub_index(add_index(a, b), b) == a);
  CHECK_THROWS_AS(sub_index(b, a), IndexOutOfRange);
  CHECK(index_leq(MultiIndex{1, 1, 0}, a));
  CHECK(!index_leq(a, MultiIndex{1, 1, 0}));
  CHECK_THROWS_AS(add_index(a, MultiIndex{1}), DimensionMismatch);
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(2, 6) == 0);
  CHECK(factorial(6) == 720);
  CHECK(multi_factorial(MultiIndex{3, 2}) == 12);
  CHECK(multi_binomial(MultiIndex{3, 2}, MultiIndex{1, 1}) == 6);
  CHECK(multi_binomial(MultiIndex{3, 2}, MultiIndex{4, 0}) == 0);
}

TEST_CASE("index display") {
  CHECK(index_str(MultiIndex{2, 0, 1}) == "2,0,1");
  CHECK(index_str(MultiIndex{5}) == "5");
  CHECK(parse_index("2,0,1") == MultiIndex{2, 0, 1});
}
