#include <doctest.h>

#include <set>

#include "eulerlab/perm.hpp"
#include "oracles.hpp"

using namespace eulerlab;

TEST_CASE("enumerate small n") {
  std::vector<Perm> one(Permutations(1).begin(), Permutations(1).end());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == Perm::parse("1"));

  std::vector<std::string> three;
  for (const Perm& p : Permutations(3)) three.push_back(p.to_string());
  CHECK(three == std::vector<std::string>{"123", "132", "213", "231", "312", "321"});
}

TEST_CASE("enumerate counts and uniqueness") {
  long count9 = 0;
  for (const Perm& p : Permutations(9)) {
    (void)p;
    ++count9;
  }
  CHECK(count9 == 362880);

  std::set<std::vector<int>> seen;
  long count8 = 0;
  for (const Perm& p : Permutations(8)) {
    seen.insert(std::vector<int>(p.image().begin(), p.image().end()));
    ++count8;
  }
  CHECK(count8 == 40320);
  CHECK(seen.size() == 40320);
}

TEST_CASE("enumeration range guard") {
  CHECK_THROWS_AS((void)(Permutations(0)), usage_error);
  CHECK_THROWS_AS((void)(Permutations(14)), usage_error);
}

TEST_CASE("stats examples") {
  for (int n = 1; n <= 6; ++n) {
    const PermStats id = stats(Perm::identity(n));
    CHECK(id.des == 0);
    CHECK(id.exc == 0);
    CHECK(id.maj == 0);
    CHECK(id.fix == n);
  }
  const PermStats s21 = stats(Perm::parse("21"));
  CHECK(s21.des == 1);
  CHECK(s21.exc == 1);
  CHECK(s21.maj == 1);
  CHECK(s21.fix == 0);

  const PermStats s = stats(Perm::parse("2413"));
  CHECK(s.des == 1);
  CHECK(s.des_set() == std::vector<int>{2});
  CHECK(s.exc == 2);
  CHECK(s.maj == 2);
  CHECK(s.fix == 0);
}

TEST_CASE("stats agree with the naive oracle on S_n, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    for (const Perm& p : Permutations(n)) {
      const PermStats st = stats(p);
      const auto ref = oracle::naive_stats(std::vector<int>(p.image().begin(), p.image().end()));
      REQUIRE(st.des == ref.des);
      REQUIRE(st.exc == ref.exc);
      REQUIRE(st.fix == ref.fix);
      REQUIRE(st.maj == ref.maj);
      REQUIRE(st.des_set() == ref.des_set);
      REQUIRE(st.des == static_cast<int>(st.des_set().size()));
      REQUIRE(st.maj >= st.exc);
    }
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(Perm::identity(5)) == Perm::identity(5));
  CHECK(inverse(Perm::parse("231")) == Perm::parse("312"));
  for (const Perm& p : Permutations(5)) {
    REQUIRE(inverse(inverse(p)) == p);
    const Perm q = inverse(p);
    for (int i = 1; i <= 5; ++i) REQUIRE(q(p(i)) == i);
  }
}

TEST_CASE("derangements") {
  CHECK_FALSE(is_derangement(Perm::identity(3)));
  CHECK(is_derangement(Perm::parse("21")));
  for (int n = 1; n <= 9; ++n) {
    long count = 0;
    for (const Perm& p : Permutations(n)) count += is_derangement(p) ? 1 : 0;
    CHECK(count == oracle::subfactorial(n));
  }
  long d4 = 0;
  for (const Perm& p : Permutations(4)) d4 += is_derangement(p) ? 1 : 0;
  CHECK(d4 == 9);
}

TEST_CASE("stable_subsets") {
  CHECK(stable_subsets(2, 1) == std::vector<std::vector<int>>{{}});
  CHECK(stable_subsets(2, 3) == std::vector<std::vector<int>>{{}, {2}, {3}});
  CHECK(stable_subsets(2, 5) ==
        std::vector<std::vector<int>>{{}, {2}, {3}, {4}, {5}, {2, 4}, {2, 5}, {3, 5}});

  // brute force over all subsets of {lo..hi}
  for (int hi = 1; hi <= 8; ++hi) {
    const int lo = 2;
    std::set<std::vector<int>> expected;
    const int width = std::max(0, hi - lo + 1);
    for (int mask = 0; mask < (1 << width); ++mask) {
      std::vector<int> set;
      bool ok = true;
      for (int i = 0; i < width; ++i) {
        if (!(mask & (1 << i))) continue;
        if (!set.empty() && set.back() == lo + i - 1) ok = false;
        set.push_back(lo + i);
      }
      if (ok) expected.insert(set);
    }
    const auto got = stable_subsets(lo, hi);
    CHECK(std::set<std::vector<int>>(got.begin(), got.end()) == expected);
    CHECK(got.size() == expected.size());
    for (const auto& set : got) {
      std::uint32_t mask = 0;
      for (int v : set) mask |= 1u << v;
      CHECK(is_stable_subset(mask, lo, hi));
    }
  }
  CHECK_FALSE(is_stable_subset(1u << 1, 2, 5));
  CHECK_FALSE(is_stable_subset((1u << 2) | (1u << 3), 2, 5));
}

TEST_CASE("MacMahon equidistribution on raw statistics") {
  for (int n = 1; n <= 9; ++n) {
    std::vector<long> des(n, 0), exc(n, 0);
    for (const Perm& p : Permutations(n)) {
      const PermStats st = stats(p);
      des[st.des]++;
      exc[st.exc]++;
    }
    CHECK(des == exc);
  }
}

TEST_CASE("parallel fold is independent of the thread count") {
  auto run = [](const char* threads) {
    setenv("EULERLAB_THREADS", threads, 1);
    return fold_permutations(
        8, std::vector<long>(64, 0),
        [](std::vector<long>& acc, std::span<const int> image, const PermStats& st) {
          acc[static_cast<std::size_t>(st.maj % 64)] += image[0];
        },
        [](std::vector<long>& a, std::vector<long>&& b) {
          for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
        });
  };
  const auto one = run("1");
  const auto four = run("4");
  unsetenv("EULERLAB_THREADS");
  CHECK(one == four);
}

TEST_CASE("perm parsing") {
  CHECK(Perm::parse("10,1,2,3,4,5,6,7,8,9").size() == 10);
  CHECK_THROWS_AS((void)(Perm::parse("122")), usage_error);
  CHECK_THROWS_AS((void)(Perm::parse("0")), usage_error);
  CHECK_THROWS_AS((void)(Perm::from_image({1, 3})), usage_error);
}
