#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace mixq {
namespace {

using testing::R;
using testing::mix;
using testing::point;
using testing::uniform;

bool holds(const ClassificationReport<Rational>& r, const std::string& text) {
  for (const auto& rel : r.relations_checked) {
    if (rel.text == text) return rel.holds;
  }
  ADD_FAILURE() << "relation not checked: " << text;
  return false;
}

TEST(CaseLabel, Ids) {
  EXPECT_EQ((CaseLabel{1, 1, Subcase::kNone}).id(), "1a");
  EXPECT_EQ((CaseLabel{3, 4, Subcase::kLeftEqualsP}).id(), "3d/F_S(sp-)=p");
  EXPECT_EQ((CaseLabel{4, 1, Subcase::kLeftBelowP}).id(), "4a/F_S(sp-)<p");
  EXPECT_EQ((CaseLabel{2, 3, Subcase::kNone}).transposed(), (CaseLabel{3, 2, Subcase::kNone}));
}

TEST(CaseLabel, FeasibleCells) {
  const auto labels = all_feasible_labels();
  EXPECT_EQ(labels.size(), 18u);
  std::set<std::string> cells;
  for (const auto& l : labels) {
    cells.insert(l.cell());
    EXPECT_EQ(l.branches_on_subcase(), l.subcase != Subcase::kNone);
  }
  EXPECT_EQ(cells.size(), 14u);
  EXPECT_FALSE(cells.count("2b"));
  EXPECT_FALSE(cells.count("4d"));
}

TEST(Classify, UniformOverShiftedUniform) {
  const auto r = classify(mix("0.5", uniform("0", "1"), uniform("1", "2")), R("0.25"));
  EXPECT_EQ(r.label.id(), "1b");
  ASSERT_TRUE(r.g_flat_witness);
  EXPECT_LT(*r.g_flat_witness, R("0.5"));
  EXPECT_FALSE(r.f_flat_witness);
  EXPECT_TRUE(r.all_relations_hold());
}

TEST(Classify, TwoPointMasses) {
  const auto r = classify(mix("0.5", point("0"), point("1")), R("0.25"));
  EXPECT_EQ(r.label.id(), "4b");
  EXPECT_TRUE(holds(r, "beta* = G(s_p)"));
  EXPECT_TRUE(holds(r, "s_p = F_X^-1(alpha*)"));
  EXPECT_TRUE(holds(r, "F_X^-1(alpha*) > F_Y^-1(beta*)"));
}

TEST(Classify, AtomAgainstUniform) {
  const auto r = classify(mix("0.5", point("0"), uniform("0", "1")), R("0.6"));
  EXPECT_EQ(r.label.id(), "2a");
  EXPECT_TRUE(holds(r, "alpha* = F(s_p)"));
  EXPECT_TRUE(holds(r, "s_p = F_Y^-1(beta*)"));
  EXPECT_TRUE(holds(r, "F_Y^-1(beta*) > F_X^-1(alpha*)"));
}

TEST(Classify, NormalPair) {
  const auto m = testing::fmix(0.5, ParametricDistribution::normal(0, 1),
                               ParametricDistribution::normal(1, 1));
  auto r = classify(m, 0.9);
  EXPECT_EQ(r.label.id(), "1a");
  EXPECT_TRUE(r.all_relations_hold());
  r = classify(testing::fmix(0.3, ParametricDistribution::normal(0, 1),
                             ParametricDistribution::normal(1, 1)),
               0.5);
  EXPECT_EQ(r.label.id(), "1a");
  EXPECT_TRUE(r.all_relations_hold());
  EXPECT_TRUE(r.solution.x_attains && r.solution.y_attains);
}

TEST(Classify, SubcaseBranches) {
  // X flat then atom at 2, Y continuous increasing through 2.
  const auto x = testing::piecewise({{"2", "0.5"}}, {{"0", "1", "0.5"}});
  const auto y = uniform("0", "4");
  const auto m = ExactMixture{R("0.5"), x, y};
  auto r = classify(m, R("0.6"));
  EXPECT_EQ(r.label.id(), "4a/F_S(sp-)<p");
  EXPECT_TRUE(r.all_relations_hold());
  // F_S(2-) = 0.5*0.5 + 0.5*0.5 = 0.5.
  r = classify(m, R("0.5"));
  EXPECT_EQ(r.label.id(), "4a/F_S(sp-)=p");
  EXPECT_TRUE(r.all_relations_hold());
}

TEST(Classify, TranspositionOnExamples) {
  const std::vector<std::pair<ExactMixture, Rational>> cases = {
      {mix("0.5", uniform("0", "1"), uniform("1", "2")), R("0.25")},
      {mix("0.5", point("0"), point("1")), R("0.25")},
      {mix("0.5", point("0"), uniform("0", "1")), R("0.6")},
      {mix("0.3", uniform("0", "2"), point("1")), R("0.4")}};
  for (const auto& [m, p] : cases) {
    const auto a = classify(m, p);
    const auto b = classify(swapped(m), p);
    EXPECT_EQ(b.label, a.label.transposed()) << a.label.id();
    EXPECT_EQ(a.s_p, b.s_p);
  }
}

TEST(Classify, SharedAtomAfterPlateausSignalsContradiction) {
  // Both components sit at 3 with nothing below, so the cell computes as 4d.
  const auto m = mix("0.5", point("3"), point("3"));
  EXPECT_EQ(case_label(m, R("0.5"), R("3")).id(), "4d");
  EXPECT_THROW(classify(m, R("0.5")), InternalContradiction);
}

TEST(Classify, RequiresInteriorWeight) {
  EXPECT_THROW(classify(mix("1", point("0"), point("1")), R("0.5")), DomainError);
}

TEST(Classify, SpecDispatch) {
  const MixtureSpec exact(R("0.5"), point("0"), point("1"));
  EXPECT_EQ(classify_exact(exact, R("0.25")).label.id(), "4b");
  const MixtureSpec normal(R("0.5"), ParametricDistribution::normal(0, 1),
                           ParametricDistribution::normal(1, 1));
  EXPECT_EQ(classify_float(normal, R("0.9")).label.id(), "1a");
}

}  // namespace
}  // namespace mixq
