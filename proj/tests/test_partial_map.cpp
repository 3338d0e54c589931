#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "rook/element_io.hpp"
#include "rook/enumeration.hpp"
#include "rook/partial_map.hpp"

using namespace rook;

namespace {
  PartialMap from_oracle(int n, oracle::Map const& m) {
    return PartialMap(n, std::vector<PartialMap::Pair>(m.begin(), m.end()));
  }

  // f = (1,3,4,5 -> 1,2,3,4) and g = (2,3,4 -> 1,5,2) in degree 5.
  PartialMap const f5 = PartialMap(5, {{1, 1}, {3, 2}, {4, 3}, {5, 4}});
  PartialMap const g5 = PartialMap(5, {{2, 1}, {3, 5}, {4, 2}});

  ErrorCode code_of(auto&& fn) {
    try {
      fn();
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::invalid_range;
  }
}  // namespace

TEST_CASE("construction normalizes and validates", "[core]") {
  PartialMap sigma(5, {{5, 5}, {1, 1}, {3, 4}, {2, 2}});
  CHECK(sigma.pairs()
        == std::vector<PartialMap::Pair>{{1, 1}, {2, 2}, {3, 4}, {5, 5}});
  CHECK(sigma.rank() == 4);
  CHECK(sigma(3) == 4);
  CHECK_FALSE(sigma(4).has_value());

  CHECK(PartialMap(3, {}).is_zero());
  CHECK(code_of([] { PartialMap(2, {{1, 1}, {2, 1}}); })
        == ErrorCode::duplicate_range);
  CHECK(code_of([] { PartialMap(2, {{1, 1}, {1, 2}}); })
        == ErrorCode::duplicate_domain);
  CHECK(code_of([] { PartialMap(2, {{3, 1}}); })
        == ErrorCode::index_out_of_range);
  CHECK(code_of([] { PartialMap(63); }) == ErrorCode::index_out_of_range);
}

TEST_CASE("composition", "[core]") {
  CHECK(compose(g5, f5) == PartialMap(5, {{3, 1}, {4, 5}, {5, 2}}));
  CHECK(compose(PartialMap::identity(5), f5) == f5);
  CHECK(compose(PartialMap::zero(5), f5).is_zero());
  CHECK(code_of([] { compose(PartialMap(2), PartialMap(3)); })
        == ErrorCode::dimension_mismatch);
}

TEST_CASE("composition agrees with the oracle on all of R_3", "[core]") {
  auto const all = oracle::partial_injections(3);
  REQUIRE(all.size() == 34);
  for (auto const& a : all) {
    for (auto const& b : all) {
      CHECK(compose(from_oracle(3, a), from_oracle(3, b))
            == from_oracle(3, oracle::compose(a, b)));
    }
  }
}

TEST_CASE("predicates", "[core]") {
  PartialMap sigma(5, {{1, 1}, {2, 2}, {3, 4}, {5, 5}});
  CHECK(is_order_preserving(sigma));
  CHECK(is_order_preserving(PartialMap::zero(4)));
  CHECK_FALSE(is_order_preserving(PartialMap(2, {{1, 2}, {2, 1}})));

  CHECK(is_order_decreasing(f5));
  CHECK_FALSE(is_order_decreasing(g5));
  CHECK(is_order_decreasing(PartialMap::identity(4)));

  CHECK(in_Bn(f5));
  CHECK_FALSE(in_Bn(g5));
  CHECK(in_Bn(PartialMap::identity(4)));
}

TEST_CASE("B_4 is closed and associative", "[core]") {
  auto const b = enumerate_Bn(4);
  for (auto const& x : b) {
    for (auto const& y : b) {
      auto xy = compose(x, y);
      CHECK(in_Bn(xy));
      CHECK(to_matrix(xy) == to_matrix(x) * to_matrix(y));
    }
  }
  auto const b3 = enumerate_Bn(3);
  for (auto const& x : b3) {
    for (auto const& y : b3) {
      for (auto const& z : b3) {
        REQUIRE(compose(compose(x, y), z) == compose(x, compose(y, z)));
      }
    }
  }
}

TEST_CASE("matrix views", "[core]") {
  PartialMap sigma(5, {{1, 1}, {2, 2}, {3, 4}, {5, 5}});
  auto       m = to_matrix(sigma);
  std::vector<std::uint8_t> expected = {
      1, 0, 0, 0, 0,  //
      0, 1, 0, 0, 0,  //
      0, 0, 0, 0, 0,  //
      0, 0, 1, 0, 0,  //
      0, 0, 0, 0, 1,
  };
  CHECK(m.entries() == expected);
  CHECK(from_matrix(m) == sigma);
  CHECK(to_matrix(PartialMap::zero(3)) == RookMatrix(3));

  for (auto const& f : enumerate_Bn(3)) {
    CHECK(from_matrix(to_matrix(f)) == f);
  }
  CHECK(code_of([] { RookMatrix(2, {1, 1, 0, 0}); })
        == ErrorCode::not_a_rook_matrix);
  CHECK(code_of([] { RookMatrix(2, {1, 0, 0}); })
        == ErrorCode::not_a_rook_matrix);
}

TEST_CASE("echelon predicate", "[core]") {
  CHECK(is_generalized_reduced_echelon(to_matrix(PartialMap::identity(4))));
  CHECK_FALSE(is_generalized_reduced_echelon(to_matrix(g5)));

  int planar = 0;
  for_each_rook_matrix(3, [&planar](RookMatrix const& m) {
    bool echelon = is_generalized_reduced_echelon(m);
    CHECK(echelon == is_order_preserving(from_matrix(m)));
    bool in_b = in_Bn(from_matrix(m));
    CHECK(in_b == (echelon && m.is_upper_triangular()));
    planar += echelon;
  });
  CHECK(planar == 20);
}

TEST_CASE("element text forms", "[core][io]") {
  CHECK(parse_element("[{1,3,4,5}->{1,2,3,4}]", 5) == f5);
  CHECK(parse_element("[{}->{}]", 4) == PartialMap::zero(4));
  CHECK(print_element(PartialMap::zero(4)) == "[{}->{}]");
  CHECK(print_element(f5, ElementStyle::pairs) == "{(1,1),(3,2),(4,3),(5,4)}");
  CHECK(print_element(PartialMap(2, {{2, 1}}), ElementStyle::matrix)
        == "0 1\n0 0\n");
  CHECK(parse_element("[{2,3,4}->{1,5,2}]", 5) == g5);

  for (auto const& f : enumerate_Bn(4)) {
    for (auto style :
         {ElementStyle::twoline, ElementStyle::pairs, ElementStyle::matrix}) {
      CHECK(parse_element(print_element(f, style), 4) == f);
    }
  }
}

TEST_CASE("element parse errors carry positions", "[core][io]") {
  auto position_of = [](std::string_view text) {
    try {
      parse_element(text, 5);
    } catch (Error const& e) {
      CHECK(e.code() == ErrorCode::syntax_error);
      return e.position();
    }
    FAIL("no error raised");
    return std::size_t(0);
  };
  CHECK(position_of("[{1,2}->{1,x}]") == 11);
  CHECK(position_of("[{2,1}->{1,2}]") == 1);
  CHECK(position_of("[{1,2}->{1}]") == 12);
  CHECK(position_of("[{1}->{1}] extra") == 11);
  CHECK(position_of("x") == 0);
}
