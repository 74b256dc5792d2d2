#include <catch2/catch_amalgamated.hpp>

#include "trunkforge/serialize.hpp"

using namespace trunkforge;

TEST_CASE("int list parsing and formatting") {
  CHECK(parse_int_list("2,4,2") == std::vector<int>{2, 4, 2});
  CHECK(parse_int_list(" 8 , 16 ,16, 8 ") == std::vector<int>{8, 16, 16, 8});
  CHECK(parse_int_list("").empty());
  CHECK_THROWS_AS(parse_int_list("2,,4"), Error);
  CHECK_THROWS_AS(parse_int_list("2,x"), Error);
  CHECK_THROWS_AS(parse_int_list("2 4"), Error);

  std::vector<int> xs{2, 4, 2};
  CHECK(format_int_list(xs) == "2,4,2");
  CHECK(format_int_list(std::vector<int>{}) == "");
}

TEST_CASE("report text is key-sorted and stable") {
  InvariantReport r = report(parse_word("u1 u2 n1 n1"));
  CHECK(report_text(r) ==
        "bridge=2\n"
        "profile=2,4,2\n"
        "thick=4\n"
        "thin=\n"
        "trunk=4\n"
        "width=8\n");
}

TEST_CASE("report json is key-sorted") {
  InvariantReport r = report(parse_word("u1 n1"));
  CHECK(report_json(r).dump() ==
        R"({"bridge":1,"profile":[2],"thick":[2],"thin":[],"trunk":2,"width":2})");
}
