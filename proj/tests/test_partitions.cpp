#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "scatter/partition.hpp"

using namespace scatter;

TEST_CASE("transpose") {
  CHECK(transpose({10, 7, 5, 4, 1}) == Partition{5, 4, 4, 4, 3, 2, 2, 1, 1, 1});
  CHECK(transpose({}) == Partition{});
  CHECK(transpose({3, 1}) == Partition{2, 1, 1});
  // involution on a spread of shapes
  std::mt19937 gen(7);
  for (int trial = 0; trial < 50; ++trial) {
    Partition p;
    long long top = 1 + gen() % 9;
    for (int r = 0; r < 6 && top > 0; ++r) {
      p.push_back(top);
      top -= gen() % 3;
    }
    CHECK(same_partition(transpose(transpose(p)), p));
  }
}

TEST_CASE("reverse lattice words") {
  // the worked row word
  CHECK(is_reverse_lattice_word({2, 3, 3, 4, 1, 1, 2, 2, 3, 1, 1, 2, 1}));
  // right-to-left reading convention
  CHECK(is_reverse_lattice_word({2, 2, 1, 1}));
  CHECK(is_reverse_lattice_word({2, 1}));
  CHECK(!is_reverse_lattice_word({1, 2}));
  CHECK(!is_reverse_lattice_word({1, 1, 2, 2}));
  CHECK(is_reverse_lattice_word({}));
  CHECK(is_reverse_lattice_word({1, 1, 1}));
  CHECK(is_reverse_lattice_word({3, 2, 1}));
  CHECK(!is_reverse_lattice_word({1, 3, 2}));
  CHECK(is_reverse_lattice_word({3, 2, 2, 1, 1, 1}));
}

TEST_CASE("Littlewood-Richardson coefficients") {
  CHECK(lr_coefficient({3, 2}, {}, {3, 2}) == 1);
  CHECK(lr_coefficient({2}, {1}, {2, 1}) == 1);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({2, 1}, {2, 1}, {4, 2}) == 1);
  CHECK(lr_coefficient({2}, {1, 1}, {3, 1}) == 1);
  CHECK(lr_coefficient({2}, {1, 1}, {4}) == 0);
  CHECK(lr_coefficient({1}, {1}, {3}) == 0);  // degree mismatch
  // the worked 13-cell skew certificate
  CHECK(lr_coefficient({15, 15, 15, 15, 8, 5, 5}, {5, 4, 3, 1}, {16, 15, 15, 15, 11, 10, 9}) >= 1);
  // symmetry in the two lower arguments
  std::mt19937 gen(11);
  for (int trial = 0; trial < 40; ++trial) {
    auto rand_partition = [&](long long cap) {
      Partition p;
      long long top = 1 + gen() % cap;
      for (int r = 0; r < 3 && top > 0; ++r) {
        p.push_back(top);
        top -= gen() % 3;
      }
      return p;
    };
    Partition a = rand_partition(4), b = rand_partition(4), c = rand_partition(5);
    while (partition_sum(c) < partition_sum(a) + partition_sum(b)) c[0] += 1;
    if (!is_partition(c)) continue;
    CHECK(lr_coefficient(a, b, c) == lr_coefficient(b, a, c));
  }
}

TEST_CASE("iterated LR occurrence") {
  CHECK(lr_iterated_positive({15, 15, 15, 15, 8, 5, 5},
                             {{15, 15, 15, 15}, {8}, {5, 5}}));
  CHECK(lr_iterated_positive({3, 1}, {{3}, {1}}));
  CHECK(!lr_iterated_positive({2, 2}, {{3}, {1}}));
  CHECK(lr_iterated_positive({2, 2}, {{2}, {2}}));
  CHECK(!lr_iterated_positive({4}, {{2}, {1, 1}}));
  // the frozen mutually-linked instance: only (7,6,6,3,3,2) carries the product
  CHECK(lr_iterated_positive({7, 6, 6, 3, 3, 2}, {{6, 6, 6}, {3, 3, 3}}));
  CHECK(!lr_iterated_positive({7, 6, 6, 4, 3, 1}, {{6, 6, 6}, {3, 3, 3}}));
  CHECK(!lr_iterated_positive({7, 6, 6, 4, 2, 2}, {{6, 6, 6}, {3, 3, 3}}));
  CHECK(!lr_iterated_positive({6, 6, 6, 4, 3, 2}, {{6, 6, 6}, {3, 3, 3}}));
}

TEST_CASE("canonical filling of the stacked skew shape") {
  auto t = lemma_filling({{15, 15, 15, 15}, {8}, {5, 5}}, {{1}, {3}, {5, 4}});
  CHECK(t.is_semistandard());
  CHECK(t.row_word() == std::vector<int>{2, 3, 3, 4, 1, 1, 2, 2, 3, 1, 1, 2, 1});
  CHECK(is_reverse_lattice_word(t.row_word()));
  CHECK(same_partition(t.weight(), {5, 4, 3, 1}));
  CHECK(t.outer == Partition{16, 15, 15, 15, 11, 10, 9});
  CHECK(t.inner == Partition{15, 15, 15, 15, 8, 5, 5});

  // single block: row k of the filling is all k's
  auto s = lemma_filling({{4, 4, 4}}, {{3, 2, 1}});
  CHECK(s.is_semistandard());
  CHECK(s.rows == std::vector<std::vector<int>>{{1, 1, 1}, {2, 2}, {3}});
  CHECK(is_reverse_lattice_word(s.row_word()));

  CHECK_THROWS_AS(lemma_filling({{2}}, {{3, 1}}), Error);
}

TEST_CASE("random canonical fillings certify their LR coefficient") {
  std::mt19937 gen(23);
  int built = 0;
  for (int trial = 0; trial < 200 && built < 40; ++trial) {
    // two or three blocks with staircase-like overlaps, mimicking the
    // correction patterns that arise from chains
    std::size_t nblocks = 2 + gen() % 2;
    std::vector<Partition> thetas(nblocks), nus(nblocks);
    long long base = 12;
    bool ok = true;
    for (std::size_t i = 0; i < nblocks && ok; ++i) {
      std::size_t len = 1 + gen() % 2;
      long long v = base - static_cast<long long>(gen() % 3);
      if (v < 1) { ok = false; break; }
      thetas[i].assign(len, v);
      long long p = 1 + gen() % 4;
      if (gen() % 2) {
        for (std::size_t r = 0; r < std::min<std::size_t>(len, static_cast<std::size_t>(p)); ++r)
          nus[i].push_back(p - static_cast<long long>(r));
      } else {
        for (std::size_t r = 0; r < len && p - static_cast<long long>(r) >= 1; ++r)
          nus[i].push_back(p - static_cast<long long>(r));
      }
      base = v - p - 1;
      if (base < 1) ok = false;
    }
    if (!ok) continue;
    SkewTableau t;
    try {
      t = lemma_filling(thetas, nus);
    } catch (const Error&) {
      continue;
    }
    ++built;
    CHECK(t.is_semistandard());
    CHECK(is_reverse_lattice_word(t.row_word()));
    Partition nu_all;
    for (const auto& nu : nus) for (long long part : nu) nu_all.push_back(part);
    std::sort(nu_all.begin(), nu_all.end(), std::greater<long long>());
    CHECK(same_partition(t.weight(), nu_all));
    CHECK(lr_coefficient(t.inner, nu_all, t.outer) >= 1);
  }
  CHECK(built >= 20);
}

TEST_CASE("staircase transpose identity") {
  CHECK(eqpt_check(10, {10, 7, 5, 4, 1}));
  CHECK(eqpt_check(5, {}));
  CHECK(eqpt_check(3, {2}));
  CHECK_THROWS_AS(eqpt_check(5, {2, 2}), Error);
  CHECK_THROWS_AS(eqpt_check(3, {4, 1}), Error);
  // both sides of the worked instance equal (5,5,4,3,3,3,2,2,1,0)
  Partition l(10), lhs;
  for (long long i = 0; i < 10; ++i) l[static_cast<std::size_t>(i)] = 10 - i;
  Partition p = {10, 7, 5, 4, 1};
  for (std::size_t i = 0; i < 10; ++i)
    lhs.push_back(l[i] - (i < p.size() ? p[i] : 0));
  std::sort(lhs.begin(), lhs.end(), std::greater<long long>());
  CHECK(lhs == Partition{5, 5, 4, 3, 3, 3, 2, 2, 1, 0});
}

TEST_CASE("exhaustive staircase identity for small m") {
  // every strict partition with p_1 <= m, m <= 6 here (acceptance covers 8)
  for (long long m = 1; m <= 6; ++m) {
    std::vector<Partition> stack = {{}};
    std::function<void(Partition&, long long)> rec = [&](Partition& cur, long long next) {
      CHECK(eqpt_check(m, cur));
      for (long long part = next; part >= 1; --part) {
        cur.push_back(part);
        rec(cur, part - 1);
        cur.pop_back();
      }
    };
    Partition cur;
    rec(cur, m);
  }
}

TEST_CASE("partition parsing") {
  CHECK(parse_partition("5,3,1") == Partition{5, 3, 1});
  CHECK(parse_partition("") == Partition{});
  CHECK_THROWS_AS(parse_partition("1,3"), Error);
  CHECK_THROWS_AS(parse_partition("2,-1"), Error);
  CHECK(partition_to_string({5, 3, 1}) == "(5,3,1)");
}
