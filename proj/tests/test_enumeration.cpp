#include <catch_amalgamated.hpp>

#include <set>

#include "oracles.hpp"
#include "rook/enumeration.hpp"

using namespace rook;

TEST_CASE("catalan numbers", "[enumeration]") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(1) == 1);
  CHECK(catalan(3) == 5);
  for (int m = 0; m <= 40; ++m) {
    CHECK(catalan(m) == oracle::catalan(m));
  }
}

TEST_CASE("enumeration matches the brute-force monoid", "[enumeration]") {
  CHECK(enumerate_Bn(1).size() == 2);
  CHECK(enumerate_Bn(2).size() == 5);
  CHECK(enumerate_Bn(3).size() == 14);
  for (int n = 0; n <= 6; ++n) {
    std::set<std::vector<PartialMap::Pair>> expected;
    for (auto const& m : oracle::monoid(n)) {
      expected.emplace(m.begin(), m.end());
    }
    std::set<std::vector<PartialMap::Pair>> got;
    for (auto const& f : enumerate_Bn(n)) {
      got.insert(f.pairs());
    }
    CHECK(got == expected);
    CHECK(enumerate_Bn(n).size() == got.size());
  }
}

TEST_CASE("enumeration order is by domain then range bitmask",
          "[enumeration]") {
  auto const all = enumerate_Bn(4);
  for (std::size_t i = 1; i < all.size(); ++i) {
    auto key = [](PartialMap const& f) {
      return std::pair(f.domain().mask(), f.range().mask());
    };
    CHECK(key(all[i - 1]) < key(all[i]));
  }
  CHECK_THROWS_AS(enumerate_Bn(15), Error);
}

TEST_CASE("orders", "[enumeration]") {
  CHECK(order_Bn(0) == 1);
  CHECK(order_Bn(1) == 2);
  CHECK(order_Bn(11) == oracle::catalan(12));
  CHECK(order_recursive(0) == 1);
  CHECK(order_recursive(1) == 2);
  CHECK(order_recursive(2) == 5);
  for (int n = 0; n <= 30; ++n) {
    CHECK(order_recursive(n) == oracle::catalan(n + 1));
    if (n > 0) {
      CHECK(order_Bn(n) > order_Bn(n - 1));
    }
  }
}

TEST_CASE("order table", "[enumeration]") {
  OrderTable t(12);
  for (int p = 0; p <= 11; ++p) {
    CHECK(t.bpq(p, 0) == p + 2);
    CHECK(t.bpq(p, p) == t.b(p + 1));
  }
  for (int p = 1; p <= 11; ++p) {
    for (int q = 0; q <= p; ++q) {
      CHECK(t.bpq_by_recurrence(p, q) == t.bpq(p, q));
    }
  }
}

TEST_CASE("b_{p,q} counts restricted elements", "[enumeration]") {
  // b_{p,q}: elements of B_n with domain in {n-q..n} and range in {n-p..n}.
  int const n = 6;
  OrderTable t(n);
  auto const all = oracle::monoid(n);
  for (int p = 0; p <= n - 1; ++p) {
    for (int q = 0; q <= p; ++q) {
      long count = 0;
      for (auto const& f : all) {
        bool ok = true;
        for (auto const& [x, y] : f) {
          ok = ok && x >= n - q && y >= n - p;
        }
        count += ok;
      }
      CHECK(t.bpq(p, q) == count);
    }
  }
}

TEST_CASE("ballot sequences", "[enumeration]") {
  CHECK(ballot_encode(PartialMap::identity(1)).str() == "1010");
  CHECK(ballot_encode(PartialMap::zero(1)).str() == "1100");
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> seen;
    for (auto const& f : enumerate_Bn(n)) {
      auto b = ballot_encode(f);
      CHECK(ballot_decode(b) == f);
      seen.insert(b.str());
    }
    CHECK(seen.size() == oracle::catalan(n + 1));
  }
  CHECK_THROWS_AS(BallotSequence::parse(1, "0110"), Error);
  CHECK_THROWS_AS(BallotSequence::parse(1, "1110"), Error);
  CHECK_THROWS_AS(BallotSequence::parse(1, "101"), Error);
  CHECK_THROWS_AS(ballot_encode(PartialMap(2, {{1, 2}})), Error);
}

TEST_CASE("every ballot sequence decodes", "[enumeration]") {
  // All +-1 sequences of length 2n + 2 with nonnegative prefix sums.
  for (int n = 0; n <= 5; ++n) {
    int const len   = 2 * n + 2;
    int       valid = 0;
    for (unsigned bits = 0; bits < (1u << len); ++bits) {
      std::vector<std::int8_t> steps;
      int                      sum = 0;
      bool                     ok  = true;
      for (int i = 0; i < len; ++i) {
        steps.push_back(bits >> i & 1 ? 1 : -1);
        sum += steps.back();
        ok = ok && sum >= 0;
      }
      if (!ok || sum != 0) {
        CHECK_THROWS_AS(BallotSequence(n, steps), Error);
        continue;
      }
      ++valid;
      BallotSequence b(n, steps);
      CHECK(ballot_encode(ballot_decode(b)) == b);
    }
    CHECK(valid == oracle::catalan(n + 1));
  }
}

TEST_CASE("echelon and planar counts", "[enumeration]") {
  CHECK(order_PRn(3) == 20);
  CHECK(count_echelon(0) == 1);
  CHECK(count_echelon(4) == 42);
  for (int n = 0; n <= 5; ++n) {
    CHECK(count_echelon(n) == oracle::catalan(n + 1));
    CHECK(count_planar(n) == oracle::choose(2 * n, n));
  }
  CHECK_THROWS_AS(count_echelon(9), Error);
}
