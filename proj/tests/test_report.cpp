#include "doctest.h"
#include "srball/report.hpp"

using namespace srball;

TEST_SUITE("report") {
  TEST_CASE("integers and rationals") {
    CHECK(json_integer(BigInt(42)) == 42);
    BigInt big = BigInt(1) << 80;
    CHECK(json_integer(big) == big.str());
    CHECK(json_rational(Rational(35, 2)) == "35/2");
    CHECK(json_rational(Rational(-4, 2)) == "-2");
  }

  TEST_CASE("vectors and tables") {
    CHECK(to_json(make_h({1, 3, 3, 1})) == Json::array({1, 3, 3, 1}));
    BettiTable t;
    t.add(2, 4, 1);
    t.add(0, 0, 1);
    t.add(1, 2, 2);
    auto j = to_json(t);
    CHECK(j["p"] == 2);
    CHECK(j["entries"] == Json::parse("[[0,0,1],[1,2,2],[2,4,1]]"));
  }

  TEST_CASE("faces and points") {
    CHECK(faces_json({Face{0, 2}, Face{1}}) == Json::parse("[[0,2],[1]]"));
    CHECK(to_json(GridPoint{2, 3}) == Json::array({2, 3}));
  }

  TEST_CASE("text rendering") {
    Json j = {{"a", 1}, {"b", "x"}};
    CHECK(text_report(j) == "a: 1\nb: x\n");
  }

  TEST_CASE("csv rows") {
    auto c = build_complex({{0, 1, 2}, {1, 2, 3}}, 4);
    auto rep = check_conjecture(c, identity_order(c));
    const std::string row = csv_row(rep, "square");
    CHECK(row.rfind("square,4,3,2,4,", 0) == 0);
    const std::string header = csv_header();
    CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
    CHECK(csv_row(rep, "a,\"b\"").rfind("\"a,\"\"b\"\"\",4,", 0) == 0);
  }
}
