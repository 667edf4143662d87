#include "doctest.h"
#include "dlab/class_membership.hpp"
#include "dlab/fixtures.hpp"

using namespace dlab;

TEST_CASE("class G on fixtures") {
  auto f2 = check_class_G(fixture("F2").graph);
  CHECK_FALSE(f2.member);
  REQUIRE(f2.witnesses.size() == 1u);
  CHECK(f2.witnesses[0].reason == ClassReason::Special9Cycle);
  CHECK(f2.witnesses[0].detail == "(3,8)-chord");
  CHECK(f2.witnesses[0].cycle == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8});

  CHECK(check_class_G(fixture("F3").graph).member);

  auto f7 = check_class_G(fixture("F7").graph);
  CHECK_FALSE(f7.member);
  REQUIRE(f7.witnesses.size() == 1u);
  CHECK(f7.witnesses[0].detail == "(5,5,5)-claw");

  auto f4 = check_class_G(fixture("F4").graph);
  CHECK_FALSE(f4.member);
  CHECK(f4.witnesses.size() == 1u);
  CHECK(f4.witnesses[0].reason == ClassReason::FourCycle);
  auto f4all = check_class_G(fixture("F4").graph, true);
  CHECK(f4all.witnesses.size() == 3u);
  CHECK(f4all.exhaustive);
}

TEST_CASE("no-4-6-9 class on fixtures") {
  auto f1 = check_theorem3_class(fixture("F1").graph);
  CHECK_FALSE(f1.member);
  CHECK(f1.witnesses[0].reason == ClassReason::NineCycle);
  CHECK(check_class_G(fixture("F1").graph).member);

  CHECK_FALSE(check_theorem3_class(fixture("F4").graph).member);
  CHECK(check_theorem3_class(fixture("F8").graph).member);

  // Two 9-cycles bound the faces on either side of the path v1 a b v7.
  auto f10 = check_theorem3_class(fixture("F10").graph, true);
  CHECK_FALSE(f10.member);
  CHECK(f10.witnesses.size() == 2u);
  CHECK(check_class_G(fixture("F10").graph).member);

  std::vector<std::string> members;
  for (const Fixture& fx : fixtures())
    if (check_theorem3_class(fx.graph).member) members.push_back(fx.name);
  CHECK(members == std::vector<std::string>{"F3", "F5", "F6", "F8"});
}

TEST_CASE("no-4-6-9 class is contained in G and reports are stable") {
  for (const Fixture& fx : fixtures()) {
    auto t3 = check_theorem3_class(fx.graph);
    auto g = check_class_G(fx.graph);
    if (t3.member) CHECK(g.member);
    CHECK(t3.member == t3.witnesses.empty());
    auto again = check_class_G(fx.graph);
    REQUIRE(again.witnesses.size() == g.witnesses.size());
    for (std::size_t i = 0; i < g.witnesses.size(); ++i) CHECK(again.witnesses[i].cycle == g.witnesses[i].cycle);
  }
}
