#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

#include "kleinjet/catalog.hpp"
#include "kleinjet/jetfilt.hpp"
#include "kleinjet/liealg.hpp"
#include "support.hpp"

using namespace kleinjet;
using kleinjet::testing::vec;

namespace {

/// Closed-form matrices on v_i = y^{k-i+1} x^{i-1} (1-based i).
std::vector<Matrix> closed_form(int k) {
  const auto d = static_cast<std::size_t>(k + 1);
  Matrix e(d, d), f(d, d), h(d, d);
  for (std::size_t idx = 0; idx < d; ++idx) {
    const long i = static_cast<long>(idx) + 1;
    if (idx + 1 < d) e(idx + 1, idx) = k - i + 1;
    if (idx > 0) f(idx - 1, idx) = i - 1;
    h(idx, idx) = 2 * (i - 1) - k;
  }
  return {e, f, h};
}

Matrix matrix2(long a, long b, long c, long d) { return Matrix::from_rows({{a, b}, {c, d}}); }

}  // namespace

TEST(Sl2, BracketsMatchMatrixCommutators) {
  const Matrix e = matrix2(0, 1, 0, 0);
  const Matrix f = matrix2(0, 0, 1, 0);
  const Matrix h = matrix2(1, 0, 0, -1);
  const std::vector<Matrix> basis{e, f, h};
  const LieAlgebra g = sl2();
  EXPECT_EQ(g.basis_names(), (std::vector<std::string>{"e", "f", "h"}));
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      Matrix combo(2, 2);
      for (std::size_t k = 0; k < 3; ++k) combo.add_scaled(g.c(i, j, k), basis[k]);
      EXPECT_EQ(combo, commutator(basis[i], basis[j])) << i << "," << j;
    }
  }
  EXPECT_EQ(bracket(g, vec({1, 0, 0}), vec({0, 1, 0})), vec({0, 0, 1}));
  EXPECT_EQ(bracket(g, vec({0, 0, 1}), vec({1, 0, 0})), vec({2, 0, 0}));
  EXPECT_TRUE(validate_lie(g).passed);
}

TEST(Sympower, SymmetricSquareColumns) {
  const Representation rep = sympower(2);
  EXPECT_EQ(rep.space_dim(), 3u);
  EXPECT_EQ(rep.matrix(0), Matrix::from_rows({{0, 0, 0}, {2, 0, 0}, {0, 1, 0}}));
  EXPECT_EQ(rep.matrix(1), Matrix::from_rows({{0, 1, 0}, {0, 0, 2}, {0, 0, 0}}));
  EXPECT_EQ(rep.matrix(2), Matrix::from_rows({{-2, 0, 0}, {0, 0, 0}, {0, 0, 2}}));
}

TEST(Sympower, MatchesClosedFormAndValidates) {
  for (int k = 1; k <= 50; ++k) {
    const Representation rep = sympower(k);
    EXPECT_EQ(rep.matrices(), closed_form(k)) << k;
    EXPECT_TRUE(validate_rep(rep).passed) << k;
    EXPECT_TRUE(rep.matrix(0).col(static_cast<std::size_t>(k)).is_zero()) << k;
  }
}

TEST(Sympower, RejectsNonPositiveDegree) {
  EXPECT_THROW(sympower(0), std::invalid_argument);
  EXPECT_THROW(sympower(-3), std::invalid_argument);
}

TEST(NamedSubalgebra, Values) {
  const LieAlgebra g = sl2();
  EXPECT_EQ(named_subalgebra(NamedSubalgebra::cartan), span({vec({0, 0, 1})}, 3));
  EXPECT_EQ(named_subalgebra(NamedSubalgebra::borel_upper), span({vec({1, 0, 0}), vec({0, 0, 1})}, 3));
  const Subspace lower = named_subalgebra(NamedSubalgebra::borel_lower);
  EXPECT_EQ(lower, span({vec({0, 1, 0}), vec({0, 0, 1})}, 3));
  for (auto which : {NamedSubalgebra::cartan, NamedSubalgebra::borel_upper, NamedSubalgebra::borel_lower}) {
    EXPECT_TRUE(is_subalgebra(g, named_subalgebra(which)));
    EXPECT_EQ(parse_named_subalgebra(to_string(which)), which);
  }
  EXPECT_TRUE(is_solvable(g, lower));
  EXPECT_FALSE(is_abelian(g, lower));
  EXPECT_TRUE(is_abelian(g, named_subalgebra(NamedSubalgebra::cartan)));
  EXPECT_THROW(parse_named_subalgebra("borel"), std::invalid_argument);
}

TEST(NamedSubalgebra, LowerBorelIsTheGreedyStabilizer) {
  for (int k = 1; k <= 10; ++k) {
    const Representation rep = sympower(k);
    const Filtration f = greedy_chain(rep, Vector::unit(rep.space_dim(), 0)).filtration;
    const Subspace v0 = to_descending(f)[0];
    EXPECT_EQ(stabilizer_in_g(rep, v0), named_subalgebra(NamedSubalgebra::borel_lower)) << k;
  }
}

TEST(VerifyFamily, FirstTwoRows) {
  const FamilyReport report = verify_family(2);
  ASSERT_EQ(report.rows.size(), 2u);
  EXPECT_EQ(report.rows[0].jet_length, 1u);
  EXPECT_EQ(report.rows[1].jet_length, 2u);
  EXPECT_TRUE(report.rows[0].certified);
  EXPECT_TRUE(report.rows[1].certified);
  EXPECT_EQ(report.rows[0].ord_abelian, 1);
  EXPECT_EQ(report.rows[1].ord_abelian, 2);
  EXPECT_EQ(report.rows[0].ord_stated, 2);
  EXPECT_EQ(report.rows[1].ord_stated, 3);
  for (const FamilyRow& row : report.rows) {
    EXPECT_TRUE(row.effective);
    EXPECT_TRUE(row.half_tail);
    EXPECT_TRUE(row.witness_is_v1);
  }
  EXPECT_FALSE(report.discrepancy_note.empty());
}

TEST(VerifyFamily, ParallelMatchesSequential) {
  const FamilyReport a = verify_family(6, true);
  const FamilyReport b = verify_family(6, false);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].ord_abelian, b.rows[i].ord_abelian);
    EXPECT_EQ(a.rows[i].ord_stabilizer, b.rows[i].ord_stabilizer);
    EXPECT_EQ(a.rows[i].weissfeiler_dims_abelian, b.rows[i].weissfeiler_dims_abelian);
    EXPECT_EQ(a.rows[i].weissfeiler_dims_stabilizer, b.rows[i].weissfeiler_dims_stabilizer);
  }
}

TEST(VerifyFamily, RejectsNonPositiveBound) {
  EXPECT_THROW(verify_family(0), std::invalid_argument);
}
