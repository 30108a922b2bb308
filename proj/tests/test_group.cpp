#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>

#include "wreath/error.hpp"
#include "wreath/group.hpp"

using namespace wreath;

TEST_SUITE_BEGIN("group");

TEST_CASE("trivial and cyclic groups") {
  GroupPtr t = load_group("trivial");
  CHECK(t->order() == 1);
  CHECK(t->class_count() == 1);

  GroupPtr c2 = load_group("c2");
  CHECK(c2->order() == 2);
  CHECK(c2->class_count() == 2);
  CHECK(c2->conjugacy_classes()[0] == std::vector<int>{0});
  CHECK(c2->conjugacy_classes()[1] == std::vector<int>{1});
  CHECK(c2->name_of(1) == "-1");
  CHECK(c2->element_by_name("-1") == 1);

  GroupPtr c3 = cyclic_group(3);
  CHECK(c3->class_count() == 3);
  CHECK(c3->is_abelian());
}

TEST_CASE("symmetric(3) has classes of sizes 1,3,2") {
  GroupPtr s3 = symmetric_group(3);
  CHECK(s3->order() == 6);
  REQUIRE(s3->class_count() == 3);
  CHECK(s3->conjugacy_classes()[0].size() == 1);
  CHECK(s3->conjugacy_classes()[1].size() == 3);
  CHECK(s3->conjugacy_classes()[2].size() == 2);
  CHECK_FALSE(s3->is_abelian());
  // every transposition lands in the size-3 class
  for (int g = 1; g < 6; ++g)
    if (s3->mult(g, g) == 0) CHECK(s3->class_of(g) == 1);
}

TEST_CASE("dihedral group is a valid nonabelian group") {
  GroupPtr d4 = dihedral_group(4);
  CHECK(d4->order() == 8);
  CHECK_FALSE(d4->is_abelian());
  // r * s has order two
  int r = d4->element_by_name("r");
  int s = d4->element_by_name("s");
  int rs = d4->mult(r, s);
  CHECK(d4->mult(rs, rs) == 0);
}

TEST_CASE("conjugation preserves classes and class sizes partition the group") {
  for (const char* spec : {"c2", "c3", "s3", "d4"}) {
    GroupPtr g = load_group(spec);
    size_t total = 0;
    for (const auto& cls : g->conjugacy_classes()) total += cls.size();
    CHECK(total == static_cast<size_t>(g->order()));
    for (int a = 0; a < g->order(); ++a)
      for (int b = 0; b < g->order(); ++b) {
        int conj = g->mult(g->mult(a, b), g->inverse(a));
        CHECK(g->class_of(conj) == g->class_of(b));
      }
  }
}

TEST_CASE("generators generate") {
  for (const char* spec : {"trivial", "c2", "s3", "d4"}) {
    GroupPtr g = load_group(spec);
    std::set<int> closed{0};
    for (int gen : g->generators()) closed.insert(gen);
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<int> cur(closed.begin(), closed.end());
      for (int a : cur)
        for (int b : cur) grew = closed.insert(g->mult(a, b)).second || grew;
    }
    CHECK(static_cast<int>(closed.size()) == g->order());
  }
}

TEST_CASE("file round trip preserves the table") {
  GroupPtr s3 = symmetric_group(3);
  std::string path = "test_group_roundtrip.tbl";
  save_group_file(*s3, path);
  GroupPtr back = load_group_file(path);
  REQUIRE(back->order() == s3->order());
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) CHECK(back->mult(a, b) == s3->mult(a, b));
  CHECK(back->name_of(1) == s3->name_of(1));
  std::remove(path.c_str());
}

TEST_CASE("invalid tables are rejected with the offending indices") {
  // identity not at 0
  CHECK_THROWS_WITH_AS(Group({{1, 0}, {0, 1}}), doctest::Contains("identity"), Error);
  // non-associative magma with 0 as identity: non-associativity forces a
  // failed inverse or associativity check
  CHECK_THROWS_AS(Group({{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}), Error);
  // entry out of range
  CHECK_THROWS_WITH_AS(Group({{0, 1}, {1, 7}}), doctest::Contains("out of range"), Error);
  // malformed file
  std::string path = "test_group_bad.tbl";
  std::ofstream(path) << "2\n0 1\n";
  CHECK_THROWS_WITH_AS(load_group_file(path), doctest::Contains("malformed"), Error);
  std::remove(path.c_str());
}

TEST_SUITE_END();
