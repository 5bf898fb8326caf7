#include <doctest.h>

#include <stdexcept>
#include <set>

#include "tchains/group.hpp"

using namespace tchains;

namespace {

GroupElement w(std::vector<long long> data) { return GroupElement{std::move(data)}; }

std::vector<std::vector<int>> cyclic_table(int n) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  }
  return t;
}

}  // namespace

TEST_SUITE("groups") {

TEST_CASE("free group multiplication reduces freely") {
  const Group f2 = Group::free_group(2);
  CHECK(f2.multiply(w({1}), w({-1})) == f2.identity());
  CHECK(f2.multiply(w({1, 2}), w({-2, -1})) == f2.identity());
  CHECK(f2.multiply(w({1, 2}), w({-2, 1})) == w({1, 1}));
  // associativity spot-check across a cancellation boundary
  CHECK(f2.multiply(f2.multiply(w({1, 2}), w({-2})), w({1})) ==
        f2.multiply(w({1, 2}), f2.multiply(w({-2}), w({1}))));
}

TEST_CASE("abelian multiplication is componentwise addition") {
  const Group z2 = Group::free_abelian(2);
  CHECK(z2.multiply(w({2, -3}), w({-2, 5})) == w({0, 2}));
  CHECK(z2.inverse(w({2, -3})) == w({-2, 3}));
}

TEST_CASE("finite table product reads off the table") {
  const Group z3 = Group::finite_table(cyclic_table(3), {1});
  CHECK(z3.multiply(w({1}), w({2})) == w({0}));
  CHECK(z3.inverse(w({2})) == w({1}));
  CHECK(z3.identity() == w({0}));
}

TEST_CASE("word lengths") {
  const Group f2 = Group::free_group(2);
  CHECK(f2.word_length(w({1, 2, -1})) == 3);
  CHECK(f2.word_length(f2.identity()) == 0);

  const Group z2 = Group::free_abelian(2);
  CHECK(z2.word_length(w({2, -3})) == 5);
  CHECK(z2.word_length(z2.identity()) == 0);

  const Group z3 = Group::finite_table(cyclic_table(3), {1});
  CHECK(z3.word_length(w({0})) == 0);
  CHECK(z3.word_length(w({1})) == 1);
  CHECK(z3.word_length(w({2})) == 1);  // generator closure includes 1^{-1} = 2
}

TEST_CASE("distance is the left-invariant word metric") {
  const Group f2 = Group::free_group(2);
  CHECK(f2.distance(w({1}), w({1})) == 0);
  CHECK(f2.distance(w({1}), w({1, 2})) == 1);

  const Group z2 = Group::free_abelian(2);
  CHECK(z2.distance(w({1, 1}), w({-1, 0})) == 3);
}

TEST_CASE("ball enumeration is exact, deduplicated and canonically ordered") {
  const Group f2 = Group::free_group(2);
  const auto b1 = f2.ball(1);
  CHECK(b1 == std::vector<GroupElement>{w({}), w({-2}), w({-1}), w({1}), w({2})});
  CHECK(f2.ball(2).size() == 17);

  const Group z1 = Group::free_abelian(1);
  const auto b3 = z1.ball(3);
  CHECK(b3.size() == 7);
  CHECK(b3.front() == w({0}));
  std::set<long long> values;
  for (const auto& x : b3) values.insert(x.data[0]);
  CHECK(values == std::set<long long>{-3, -2, -1, 0, 1, 2, 3});
}

TEST_CASE("free group ball sizes match the closed formula") {
  for (int r = 1; r <= 3; ++r) {
    const Group fr = Group::free_group(r);
    for (long long R = 0; R <= 6; ++R) {
      long long expected = 1;
      long long layer = 2 * r;
      for (long long j = 1; j <= R; ++j) {
        expected += layer;
        layer *= 2 * r - 1;
      }
      CAPTURE(r);
      CAPTURE(R);
      const auto ball = fr.ball(R);
      CHECK(static_cast<long long>(ball.size()) == expected);
      // every enumerated element has the right length and is unique
      std::set<GroupElement> dedup(ball.begin(), ball.end());
      CHECK(dedup.size() == ball.size());
    }
  }
}

TEST_CASE("triangle inequality on ball(3)^3 for each family") {
  const Group groups[] = {Group::free_group(2), Group::free_abelian(2),
                          Group::finite_table(cyclic_table(5), {1})};
  for (const Group& g : groups) {
    const auto ball = g.ball(3);
    for (const auto& x : ball) {
      for (const auto& y : ball) {
        for (const auto& z : ball) {
          REQUIRE(g.distance(x, z) <= g.distance(x, y) + g.distance(y, z));
        }
      }
    }
  }
}

TEST_CASE("left invariance of the metric on ball(2)") {
  const Group groups[] = {Group::free_group(2), Group::free_abelian(2),
                          Group::finite_table(cyclic_table(5), {1})};
  for (const Group& g : groups) {
    const auto ball = g.ball(2);
    for (const auto& k : ball) {
      for (const auto& x : ball) {
        for (const auto& y : ball) {
          REQUIRE(g.distance(g.multiply(k, x), g.multiply(k, y)) == g.distance(x, y));
        }
      }
    }
  }
}

TEST_CASE("length symmetry and positivity") {
  const Group groups[] = {Group::free_group(2), Group::free_abelian(2),
                          Group::finite_table(cyclic_table(5), {1})};
  for (const Group& g : groups) {
    for (const auto& x : g.ball(3)) {
      REQUIRE(g.word_length(x) == g.word_length(g.inverse(x)));
      REQUIRE((g.word_length(x) == 0) == (x == g.identity()));
    }
  }
}

TEST_CASE("free words are validated as reduced") {
  const Group f2 = Group::free_group(2);
  CHECK_THROWS_AS(f2.validate(w({1, -1})), std::invalid_argument);
  CHECK_THROWS_AS(f2.validate(w({3})), std::invalid_argument);
  CHECK_THROWS_AS(f2.validate(w({0})), std::invalid_argument);
  CHECK_NOTHROW(f2.validate(w({1, 2, 1, -2})));
}

TEST_CASE("finite table construction validates the group axioms") {
  CHECK_THROWS_AS(Group::finite_table({{0, 1}, {1, 1}}, {1}), std::invalid_argument);
  // associativity failure: a Latin square that is not a group
  std::vector<std::vector<int>> latin = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(Group::finite_table(latin, {1}), std::invalid_argument);
  // generator subset must generate: {0} or {2} in Z/4 do not
  CHECK_THROWS_AS(Group::finite_table(cyclic_table(4), {2}), std::invalid_argument);
  CHECK_THROWS_AS(Group::finite_table(cyclic_table(4), {}), std::invalid_argument);
  CHECK_NOTHROW(Group::finite_table(cyclic_table(4), {1}));
  // generators are closed under inverse automatically: lengths use 1 and 3
  const Group z4 = Group::finite_table(cyclic_table(4), {1});
  CHECK(z4.word_length(w({3})) == 1);
  CHECK(z4.word_length(w({2})) == 2);
}

TEST_CASE("custom abelian generators give the BFS word metric") {
  const Group z23 = Group::free_abelian(1, {{2}, {3}});
  CHECK(z23.word_length(w({0})) == 0);
  CHECK(z23.word_length(w({2})) == 1);
  CHECK(z23.word_length(w({3})) == 1);
  CHECK(z23.word_length(w({1})) == 2);
  CHECK(z23.word_length(w({4})) == 2);
  CHECK(z23.word_length(w({6})) == 2);
  CHECK(z23.word_length(w({7})) == 3);
  CHECK(z23.word_length(w({-1})) == 2);
  CHECK(z23.ball(2).size() == 13);  // {-6..6}: everything within two steps

  CHECK_THROWS_AS(Group::free_abelian(1, {{2}}), std::invalid_argument);
  CHECK_THROWS_AS(Group::free_abelian(2, {{2, 0}, {0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Group::free_abelian(1, {{0}}), std::invalid_argument);
}

TEST_CASE("mismatched elements are rejected") {
  const Group z2 = Group::free_abelian(2);
  CHECK_THROWS_AS(z2.multiply(w({1, 2}), w({1})), std::invalid_argument);
  const Group z3 = Group::finite_table(cyclic_table(3), {1});
  CHECK_THROWS_AS(z3.word_length(w({5})), std::invalid_argument);
}

}  // TEST_SUITE
