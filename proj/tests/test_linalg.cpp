#include "rankone/linalg.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <vector>

using namespace rankone;
using testsupport::Rng;

namespace {

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = testsupport::random_cyclotomic(rng, 4);
  return m;
}

Subspace random_subspace(Rng& rng, std::size_t ambient) {
  return Subspace::span(random_matrix(rng, rng.range(0, ambient), ambient));
}

}  // namespace

TEST_CASE("matrix basics") {
  Matrix id = Matrix::identity(3);
  CHECK(id.is_identity());
  CHECK(id.trace() == Cyclotomic(3));
  CHECK(id.pow(5) == id);

  Matrix m(2, 2);
  m.at(0, 1) = Cyclotomic::one();
  CHECK_FALSE(m.is_zero());
  CHECK(m.pow(2).is_zero());
  CHECK(m.pow(0).is_identity());
  CHECK((m * m.transpose()).trace() == Cyclotomic::one());
  CHECK(m.scaled(Cyclotomic(2)).at(0, 1) == Cyclotomic(2));

  const std::vector<Cyclotomic> v{Cyclotomic(5), Cyclotomic(7)};
  const auto mv = rankone::apply(m, v);
  CHECK(mv[0] == Cyclotomic(7));
  CHECK(mv[1] == Cyclotomic::zero());
}

TEST_CASE("rref is idempotent and reports consistent pivots") {
  Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const std::size_t rows = rng.range(1, 5);
    const std::size_t cols = rng.range(1, 5);
    const Matrix m = random_matrix(rng, rows, cols);
    const Echelon e = rref(m);
    CHECK(e.rank == e.pivots.size());
    CHECK(e.rank <= std::min(m.rows(), m.cols()));

    // RREF pivot structure: pivot entries are 1 and alone in their column.
    for (std::size_t r = 0; r < e.rank; ++r) {
      const std::size_t pc = e.pivots[r];
      if (r > 0) CHECK(e.pivots[r - 1] < pc);
      CHECK(e.reduced.at(r, pc) == Cyclotomic::one());
      for (std::size_t r2 = 0; r2 < e.reduced.rows(); ++r2)
        if (r2 != r) CHECK(e.reduced.at(r2, pc).is_zero());
    }
    for (std::size_t r = e.rank; r < e.reduced.rows(); ++r)
      for (std::size_t c = 0; c < e.reduced.cols(); ++c)
        CHECK(e.reduced.at(r, c).is_zero());

    const Echelon again = rref(e.reduced);
    CHECK(again.reduced == e.reduced);
    CHECK(again.rank == e.rank);
  }
}

TEST_CASE("nullspace vectors are killed and rank-nullity holds") {
  Rng rng(47);
  for (int t = 0; t < 40; ++t) {
    const std::size_t rows = rng.range(1, 4);
    const std::size_t cols = rng.range(1, 5);
    const Matrix m = random_matrix(rng, rows, cols);
    const Subspace ns = nullspace(m);
    CHECK(ns.ambient() == m.cols());
    CHECK(rref(m).rank + ns.dim() == m.cols());
    for (std::size_t r = 0; r < ns.dim(); ++r) {
      const auto img = rankone::apply(m, ns.basis().row(r));
      for (const auto& c : img) CHECK(c.is_zero());
    }
  }
}

TEST_CASE("subspace span, membership, reduce") {
  // Rows (1, 1, 0) and (0, 0, 1) of Q^3.
  Matrix m(2, 3);
  m.at(0, 0) = Cyclotomic::one();
  m.at(0, 1) = Cyclotomic::one();
  m.at(1, 2) = Cyclotomic::one();
  const Subspace s = Subspace::span(m);
  CHECK(s.dim() == 2);
  CHECK(s.contains({Cyclotomic(3), Cyclotomic(3), Cyclotomic(-1)}));
  CHECK_FALSE(s.contains({Cyclotomic::one(), Cyclotomic::zero(), Cyclotomic::zero()}));

  // reduce eliminates pivot coordinates; members reduce to zero.
  const auto red = s.reduce({Cyclotomic(3), Cyclotomic(3), Cyclotomic(-1)});
  for (const auto& c : red) CHECK(c.is_zero());
  const auto red2 = s.reduce({Cyclotomic::one(), Cyclotomic(4), Cyclotomic::zero()});
  CHECK(red2[0].is_zero());
  CHECK(red2[1] == Cyclotomic(3));
  CHECK(red2[2].is_zero());

  CHECK(Subspace::zero(3).dim() == 0);
  CHECK(Subspace::full(3).dim() == 3);
  CHECK(Subspace::full(3).contains(s));
  CHECK_FALSE(s.contains(Subspace::full(3)));
}

TEST_CASE("span canonicalizes: scaled and shuffled generators agree") {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = random_matrix(rng, 3, 4);
    Matrix m2(3, 4);
    // Reverse row order and rescale each by a random nonzero value.
    for (std::size_t r = 0; r < 3; ++r) {
      Cyclotomic c = testsupport::random_cyclotomic(rng, 4);
      if (c.is_zero()) c = Cyclotomic(3);
      for (std::size_t j = 0; j < 4; ++j) m2.at(2 - r, j) = m.at(r, j) * c;
    }
    CHECK(Subspace::span(m) == Subspace::span(m2));
  }
}

TEST_CASE("sum and intersection satisfy the dimension identity") {
  Rng rng(1234);
  for (int t = 0; t < 40; ++t) {
    const Subspace a = random_subspace(rng, 4);
    const Subspace b = random_subspace(rng, 4);
    const Subspace s = sum(a, b);
    const Subspace i = intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
    for (std::size_t r = 0; r < i.dim(); ++r) {
      CHECK(a.contains(i.basis().row(r)));
      CHECK(b.contains(i.basis().row(r)));
    }
  }
}

TEST_CASE("echelon builder matches batch span") {
  Rng rng(555);
  for (int t = 0; t < 40; ++t) {
    const Matrix m = random_matrix(rng, rng.range(1, 6), 5);
    EchelonBuilder builder(5);
    std::size_t grew = 0;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (builder.add(m.row(r))) ++grew;
    const Subspace batch = Subspace::span(m);
    CHECK(grew == batch.dim());
    CHECK(builder.dim() == batch.dim());
    CHECK(builder.subspace() == batch);
    for (std::size_t r = 0; r < m.rows(); ++r) CHECK(builder.contains(m.row(r)));
  }
}
