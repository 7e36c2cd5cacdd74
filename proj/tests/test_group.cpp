#include "rankone/group.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

using namespace rankone;

namespace {

// S_3 on {e, (12), (13), (23), (123), (132)}; table[x][y] = x o y with the
// right factor applied first.
const std::vector<std::vector<int>> kS3Table = {
    {0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
    {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4}};

const std::vector<std::string> kS3Labels = {"e",    "(12)",  "(13)",
                                            "(23)", "(123)", "(132)"};

FiniteGroup s3() { return FiniteGroup::from_table(kS3Table, kS3Labels); }

}  // namespace

TEST_CASE("Klein four group via abelian factors") {
  const FiniteGroup v4 = FiniteGroup::abelian({2, 2});
  CHECK(v4.size() == 4);
  CHECK(v4.identity() == 0);
  CHECK(v4.is_abelian());
  CHECK(v4.exponent() == 2);
  CHECK(v4.abelian_factors() == std::vector<unsigned>{2, 2});
  for (int x = 0; x < 4; ++x) {
    CHECK(v4.inverse(x) == x);
    CHECK(v4.element_order(x) == (x == 0 ? 1 : 2));
    for (int y = 0; y < 4; ++y) CHECK(v4.mul(x, y) == v4.mul(y, x));
  }
  // Big-endian digits: element 2 is (1,0), element 1 is (0,1).
  CHECK(v4.mul(2, 1) == 3);
  CHECK(v4.center().size() == 4);
  CHECK(v4.conjugacy_classes().size() == 4);

  const FiniteGroup named = v4.with_labels({"1", "c", "b", "bc"});
  CHECK(named.label(2) == "b");
  CHECK(named.index_of_label("bc") == 3);
  CHECK(named.index_of_label("zz") == -1);
  CHECK_THROWS_AS(v4.with_labels({"a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(v4.with_labels({"a", "a", "b", "c"}), std::invalid_argument);
  CHECK_THROWS_AS(v4.with_labels({"a", "", "b", "c"}), std::invalid_argument);
}

TEST_CASE("cyclic group powers") {
  const FiniteGroup z6 = FiniteGroup::abelian({6});
  CHECK(z6.element_order(1) == 6);
  CHECK(z6.element_order(2) == 3);
  CHECK(z6.element_order(3) == 2);
  CHECK(z6.power(1, 4) == 4);
  CHECK(z6.power(1, -1) == 5);
  CHECK(z6.power(5, 0) == 0);
  CHECK(z6.exponent() == 6);
}

TEST_CASE("S3 from an explicit table") {
  const FiniteGroup g = s3();
  CHECK(g.size() == 6);
  CHECK_FALSE(g.is_abelian());
  CHECK(g.identity() == 0);
  CHECK(g.center() == std::vector<int>{0});
  CHECK(g.abelian_factors().empty());

  // Transpositions are involutions, 3-cycles invert each other.
  for (int t = 1; t <= 3; ++t) {
    CHECK(g.element_order(t) == 2);
    CHECK(g.inverse(t) == t);
  }
  CHECK(g.element_order(4) == 3);
  CHECK(g.inverse(4) == 5);
  CHECK(g.exponent() == 6);

  auto classes = g.conjugacy_classes();
  std::vector<std::size_t> sizes;
  for (const auto& cl : classes) sizes.push_back(cl.size());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<std::size_t>{1, 2, 3});
}

TEST_CASE("corrupt tables are rejected") {
  // Break closure.
  auto bad = kS3Table;
  bad[1][1] = 6;
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);

  // Break associativity but keep the table a latin square:
  // swap two entries in one row.
  bad = kS3Table;
  std::swap(bad[2][3], bad[2][4]);
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);

  // Ragged row.
  bad = kS3Table;
  bad[3].pop_back();
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), std::invalid_argument);

  // No identity element: constant table.
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 1}, {1, 1}}), std::invalid_argument);
}

TEST_CASE("abelian character tables validate and are orthogonal") {
  for (const auto& factors :
       std::vector<std::vector<unsigned>>{{2, 2}, {4}, {6}, {2, 3}}) {
    const FiniteGroup g = FiniteGroup::abelian(factors);
    const CharacterTable ct = CharacterTable::for_abelian(g);
    CHECK(ct.count() == static_cast<std::size_t>(g.size()));
    const CheckReport report = ct.validate();
    CHECK(report.ok);
    CHECK(report.problems.empty());
    for (std::size_t i = 0; i < ct.count(); ++i) {
      CHECK(ct.degree(i) == Rational(1));
      CHECK(ct.is_linear(i));
      CHECK(ct.find_row(ct.values(i)) == static_cast<int>(i));
    }
  }

  // Klein characters: row i has values (-1)^(i . h) under the bilinear
  // pairing of digit vectors; char 3 is the product of chars 1 and 2.
  const CharacterTable ct =
      CharacterTable::for_abelian(FiniteGroup::abelian({2, 2}));
  CHECK(ct.value(0, 3) == Cyclotomic::one());
  CHECK(ct.value(1, 1) == Cyclotomic(-1));
  CHECK(ct.value(1, 2) == Cyclotomic::one());
  CHECK(ct.value(2, 1) == Cyclotomic::one());
  CHECK(ct.value(2, 2) == Cyclotomic(-1));
  CHECK(ct.value(3, 1) == Cyclotomic(-1));
  CHECK(ct.value(3, 2) == Cyclotomic(-1));
  CHECK(ct.value(3, 3) == Cyclotomic::one());
}

TEST_CASE("user supplied S3 character table") {
  const FiniteGroup g = s3();
  const Cyclotomic one = Cyclotomic::one();
  const Cyclotomic neg = Cyclotomic(-1);
  const Cyclotomic zero = Cyclotomic::zero();
  const Cyclotomic two = Cyclotomic(2);
  std::vector<std::vector<Cyclotomic>> rows = {
      {one, one, one, one, one, one},
      {one, neg, neg, neg, one, one},
      {two, zero, zero, zero, neg, neg}};
  const CharacterTable ct(g, rows);
  CHECK(ct.count() == 3);
  CHECK(ct.validate().ok);
  CHECK(ct.degree(0) == Rational(1));
  CHECK(ct.degree(2) == Rational(2));
  CHECK(ct.is_linear(1));
  CHECK_FALSE(ct.is_linear(2));
  CHECK(ct.find_row(rows[1]) == 1);
  CHECK(ct.find_row({one, one, one, one, neg, neg}) == -1);

  // Duplicating a row breaks both row count and orthogonality.
  rows.push_back(rows[1]);
  const CharacterTable dup(g, rows);
  const CheckReport report = dup.validate();
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.problems.empty());

  // A row that is not constant on conjugacy classes is rejected.
  const CharacterTable skew(
      g, {{one, one, one, one, one, one}, {one, neg, one, one, one, one}});
  CHECK_FALSE(skew.validate().ok);
}
