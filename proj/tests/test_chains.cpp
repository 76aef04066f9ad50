#include <catch2/catch_amalgamated.hpp>

#include "scatter/chain.hpp"

using namespace scatter;

TEST_CASE("chain coordinates and ranks") {
  CHECK(Chain::segment(18, 12).coordinates() == std::vector<long long>{18, 16, 14, 12});
  CHECK(Chain::segment(1, 1).coordinates() == std::vector<long long>{1});
  CHECK(Chain::b_chain(7, 1).coordinates() == std::vector<long long>{13, 11, 9, 7, 5, 3, 2, 1});
  CHECK(Chain::b_chain(2, 0).coordinates() == std::vector<long long>{3, 1});
  CHECK(Chain::b_chain(1, 1).coordinates() == std::vector<long long>{2, 1});
  CHECK(Chain::c_even(3).coordinates() == std::vector<long long>{6, 4, 2});
  CHECK(Chain::c_odd(3).coordinates() == std::vector<long long>{5, 3, 1});
  CHECK(Chain::d_even(3).coordinates() == std::vector<long long>{4, 2, 0});
  CHECK(Chain::d_mixed(2, 2).coordinates() == std::vector<long long>{3, 2, 1, 0});
  CHECK(Chain::d_mixed(4, 2).coordinates() == std::vector<long long>{6, 4, 3, 2, 1, 0});
  for (auto c : {Chain::segment(8, 4), Chain::b_chain(3, 2), Chain::c_odd(4), Chain::d_mixed(3, 2)})
    CHECK(c.rank() == static_cast<long long>(c.coordinates().size()));
}

TEST_CASE("chain construction guards") {
  CHECK_THROWS_AS(Chain::segment(4, 0), Error);
  CHECK_THROWS_AS(Chain::segment(3, 2), Error);  // parity
  CHECK_THROWS_AS(Chain::segment(2, 4), Error);
  CHECK_THROWS_AS(Chain::b_chain(1, 2), Error);
  CHECK_THROWS_AS(Chain::d_mixed(2, 3), Error);
  CHECK_THROWS_AS(Chain::d_even(1), Error);
}

TEST_CASE("Zhelobenko rows") {
  Chain a = Chain::segment(18, 12);
  CHECK(a.top_row() == int_weight({9, 8, 7, 6}));
  CHECK(a.bottom_row() == int_weight({-6, -7, -8, -9}));
  Chain b = Chain::b_chain(7, 1);
  CHECK(b.top_row() == parse_weight("1/2,3/2,5/2,7/2,9/2,11/2,13/2,1"));
  CHECK(b.bottom_row() == b.top_row());
  Chain codd2 = Chain::c_odd(2);
  CHECK(codd2.top_row() == parse_weight("1/2,3/2"));
  CHECK(codd2.bottom_row() == parse_weight("1/2,3/2"));
  Chain codd3 = Chain::c_odd(3);
  CHECK(codd3.bottom_row() == parse_weight("-1/2,3/2,5/2"));
  Chain dm = Chain::d_mixed(3, 2);
  CHECK(dm.top_row() == parse_weight("0,1,2,1/2,3/2"));
  CHECK(dm.bottom_row() == parse_weight("0,1,2,1/2,3/2"));
  Chain dm3 = Chain::d_mixed(3, 3);
  CHECK(dm3.bottom_row() == parse_weight("0,1,2,-1/2,3/2,5/2"));
}

TEST_CASE("linkage") {
  // proper interval overlap
  CHECK(is_linked(Chain::segment(18, 12), Chain::b_chain(7, 1)));
  CHECK(is_linked(Chain::segment(8, 8), Chain::b_chain(7, 1)));
  CHECK(is_linked(Chain::segment(8, 4), Chain::segment(5, 1)));
  CHECK(!is_linked(Chain::segment(18, 12), Chain::segment(8, 8)));
  CHECK(!is_linked(Chain::segment(5, 3), Chain::c_even(1)));
  // the special bullet: {1} with any CEven
  CHECK(is_linked(Chain::segment(1, 1), Chain::c_even(2)));
  CHECK(is_linked(Chain::c_even(4), Chain::segment(1, 1)));
  // no bullet for larger singletons
  CHECK(!is_linked(Chain::segment(3, 3), Chain::c_even(1)));
  // {1} with DEven is linked by the ordinary test since 0 sits below 1
  CHECK(is_linked(Chain::segment(1, 1), Chain::d_even(3)));
}

TEST_CASE("union invariants") {
  auto u = ChainUnion::make(Family::B, {Chain::b_chain(7, 1), Chain::segment(6, 4),
                                        Chain::segment(18, 12), Chain::segment(8, 8)});
  CHECK(u.to_string() == "A(18,12)+A(8,8)+A(6,4)+B[15,2]");
  CHECK(u.rank() == 15);
  CHECK(u.is_interlaced());
  CHECK(is_scattered(u));
  CHECK(u.two_lambda() == int_weight({18, 16, 14, 13, 12, 11, 9, 8, 7, 6, 5, 4, 3, 2, 1}));
  CHECK(u.lkt() == int_weight({15, 15, 15, 15, 8, 5, 5, 0, 0, 0, 0, 0, 0, 0, 0}));

  CHECK_THROWS_AS(ChainUnion::make(Family::B, {Chain::b_chain(2, 0), Chain::segment(3, 1)}), Error);
  CHECK_THROWS_AS(ChainUnion::make(Family::C, {Chain::c_even(1), Chain::c_odd(2)}), Error);
  CHECK_THROWS_AS(ChainUnion::make(Family::C, {Chain::b_chain(2, 0)}), Error);
  try {
    ChainUnion::make(Family::B, {Chain::b_chain(2, 0), Chain::segment(3, 1)});
    FAIL("expected DuplicateCoordinate");
  } catch (const Error& e) {
    CHECK(e.code == Errc::DuplicateCoordinate);
  }
  try {
    ChainUnion::make(Family::C, {Chain::c_even(1), Chain::c_odd(2)});
    FAIL("expected MultipleXChains");
  } catch (const Error& e) {
    CHECK(e.code == Errc::MultipleXChains);
  }
}

TEST_CASE("interlacing examples") {
  // {2}u{3 1}_C is connected
  CHECK(is_scattered(ChainUnion::make(Family::C, {Chain::segment(2, 2), Chain::c_odd(2)})));
  // {1}u{4 2}_C only via the special bullet
  CHECK(is_scattered(ChainUnion::make(Family::C, {Chain::segment(1, 1), Chain::c_even(2)})));
  // {5 3}u{2}_C is disconnected
  CHECK(!is_scattered(ChainUnion::make(Family::C, {Chain::segment(5, 3), Chain::c_even(1)})));
  // frozen negative: A(6,4) and A(5,3) both miss C_even(1)
  CHECK(!ChainUnion::make(Family::C, {Chain::segment(6, 4), Chain::segment(5, 3), Chain::c_even(1)})
             .is_interlaced());
  // all-segment unions are never scattered
  CHECK(!is_scattered(ChainUnion::make(Family::C, {Chain::segment(3, 1)})));
  // a lone X-chain is scattered
  CHECK(is_scattered(ChainUnion::make(Family::C, {Chain::c_even(3)})));
}

TEST_CASE("grammar round trip") {
  for (const char* text : {"A(18,12)+A(8,8)+A(6,4)+B[15,2]", "B[5]", "B[3,2]", "C[6]",
                           "C[5,1]", "C[1,1]", "D[6]", "D[8,3,1]", "A(2,2)+C[3,1]",
                           "A(1,1)+C[4]", "A(3,1)+C[2]"}) {
    ChainUnion u = parse_union(text);
    CHECK(u.to_string() == text);
  }
  // orbit long form accepted, canonical short form printed
  CHECK(parse_union("B[5,0]").to_string() == "B[5]");
  // canonical ordering restored
  CHECK(parse_union("B[15,2]+A(6,4)+A(18,12)+A(8,8)").to_string() ==
        "A(18,12)+A(8,8)+A(6,4)+B[15,2]");
  CHECK(parse_union("A(4,2)", Family::C).rank() == 2);
  CHECK_THROWS_AS(parse_union("A(4,2)"), Error);          // family undetermined
  CHECK_THROWS_AS(parse_union("A(4,0)+C[2]"), Error);     // zero coordinate
  CHECK_THROWS_AS(parse_union("E[4]"), Error);
  CHECK_THROWS_AS(parse_union("C[4,2]"), Error);
  CHECK_THROWS_AS(parse_union("D[4,1,1]"), Error);
  CHECK_THROWS_AS(parse_union("B[4]"), Error);
  try {
    parse_union("A(4,0)+C[2]");
  } catch (const Error& e) {
    CHECK(e.code == Errc::ZeroInAChain);
  }
}

TEST_CASE("parameters of unions") {
  auto u = parse_union("A(2,2)+C[3,1]");
  ZhParam p = zh_param(u);
  CHECK(p.lambda_l == parse_weight("1,1/2,3/2"));
  CHECK(p.lambda_r == parse_weight("-1,1/2,3/2"));
  auto v = parse_union("C[5,1]");
  CHECK(zh_param(v).lambda_l == parse_weight("1/2,3/2,5/2"));
  CHECK(zh_param(v).lambda_r == parse_weight("-1/2,3/2,5/2"));
}
