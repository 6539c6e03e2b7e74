#include "gw/severi.hpp"

#include <algorithm>

#include <gtest/gtest.h>

#include "gw/error.hpp"
#include "gw/kontsevich.hpp"

namespace gw::severi {
namespace {

// The placement sum exactly as printed: j over 0..fixed_simple with no
// lower bound. Used to document why the lower bound is needed.
Integer uncapped_placements(int fixed_simple, int delta1, int interior) {
  Integer total = 0;
  for (int j = 0; j <= fixed_simple; ++j) {
    total += binomial(fixed_simple, j) * binomial(interior, delta1 - j);
  }
  return total;
}

const SplitTerm& find_term(const std::vector<SplitTerm>& terms,
                           const Partition& pi, const Partition& pi_free) {
  const auto it = std::find_if(terms.begin(), terms.end(), [&](const auto& t) {
    return t.pi == pi && t.pi_free == pi_free;
  });
  if (it == terms.end()) throw std::runtime_error("term not found");
  return *it;
}

TEST(RulingPlacementsTest, WorkedExampleFactors) {
  EXPECT_EQ(ruling_placements(1, 2, 2, 5), 15);
  EXPECT_EQ(ruling_placements(2, 1, 1, 5), 7);
  EXPECT_EQ(ruling_placements(0, 3, 3, 5), 10);
  EXPECT_EQ(ruling_placements(1, 1, 0, 5), 1);
}

TEST(RulingPlacementsTest, CapRegression) {
  EXPECT_EQ(ruling_placements(1, 1, 0, 5), 1);
  EXPECT_EQ(uncapped_placements(1, 1, 5), 6);
}

TEST(RulingPlacementsTest, EmptyRangeAndErrors) {
  EXPECT_EQ(ruling_placements(0, 2, 1, 5), 0);
  EXPECT_EQ(ruling_placements(0, 0, 0, 0), 1);
  EXPECT_THROW(ruling_placements(-1, 0, 0, 5), DomainError);
}

TEST(RulingPlacementsPropertyTest, VandermondeWhenCapInactive) {
  for (int fixed = 0; fixed <= 8; ++fixed) {
    for (int delta1 = 0; delta1 <= 8; ++delta1) {
      for (int free = delta1; free <= 8; ++free) {
        for (int interior = 0; interior <= 8; ++interior) {
          ASSERT_EQ(ruling_placements(fixed, delta1, free, interior),
                    binomial(fixed + interior, delta1))
              << fixed << " " << delta1 << " " << free << " " << interior;
        }
      }
    }
  }
}

TEST(Formula5Test, QuarticTerms) {
  const auto terms = formula5_terms(4, 3, *paper_aux());
  ASSERT_EQ(terms.size(), 8u);
  EXPECT_EQ(find_term(terms, {3}, {3}).product, 15);
  EXPECT_EQ(find_term(terms, {3}, {2}).product, 147);
  EXPECT_EQ(find_term(terms, {3}, {1}).product, 180);
  EXPECT_EQ(find_term(terms, {3}, {}).product, 10);
  EXPECT_EQ(find_term(terms, {1, 1}, {1}).product, 40);
  EXPECT_EQ(find_term(terms, {1, 1}, {0, 1}).product, 160);
  EXPECT_EQ(find_term(terms, {1, 1}, {1, 1}).product, 60);
  EXPECT_EQ(find_term(terms, {0, 0, 1}, {0, 0, 1}).product, 63);

  const auto& e2 = find_term(terms, {1, 1}, {0, 1});
  EXPECT_EQ(e2.placement, 5);
  EXPECT_EQ(e2.aux_value, 16);
  EXPECT_EQ(e2.aux, (AuxKey{3, 1, {1}, {0, 1}}));
}

TEST(Formula5Test, TermInvariants) {
  for (const auto& [d, delta] : {std::pair{4, 3}, {4, 2}, {7, 2}, {12, 2}}) {
    for (const auto& t : formula5_terms(d, delta, *paper_aux())) {
      EXPECT_EQ(t.pi.weight(), d - 1);
      EXPECT_EQ(t.pi_fixed_top, complement(t.pi, t.pi_free));
      EXPECT_EQ(t.delta1, t.pi_fixed_top.size());
      EXPECT_EQ(t.delta1 + t.delta2 + t.pi.tangency_excess(), delta);
      EXPECT_EQ(t.product,
                t.m_outer * t.m_comp * t.n_comp * t.placement * t.aux_value);
      EXPECT_EQ(t.aux.fixed.weight() + t.aux.free.weight(), t.aux.e);
    }
  }
}

TEST(Formula5Test, QuarticTotal) {
  EXPECT_EQ(formula5(4, 3, *paper_aux()), 675);
  const auto eval = evaluate_formula5(4, 3, *paper_aux());
  ASSERT_EQ(eval.dropped.size(), 2u);
  EXPECT_EQ(eval.dropped[0].reason, DropReason::EmptyPlacement);
  EXPECT_EQ(eval.dropped[0].pi, (Partition{1, 1}));
}

TEST(Formula5Test, UncappedPlacementBreaksTheQuarticTotal) {
  Integer uncapped_total = 0;
  for (const auto& t : formula5_terms(4, 3, *paper_aux())) {
    const Integer placement =
        uncapped_placements(t.pi_free.count(1), t.delta1, 5);
    uncapped_total +=
        t.m_outer * t.m_comp * t.n_comp * placement * t.aux_value;
  }
  EXPECT_EQ(uncapped_total, 875);
}

TEST(Formula5Test, TwoNodeCountsMatchRoberts) {
  for (int d = 4; d <= 20; ++d) {
    EXPECT_EQ(formula5(d, 2, *paper_aux()), roberts_closed(d)) << d;
  }
}

TEST(Formula5Test, TwoNodeComponentsMatchClosedLedger) {
  for (int d = 5; d <= 12; ++d) {
    const auto grouped = group_components(formula5_terms(d, 2, *paper_aux()));
    auto values = grouped.entries();
    std::vector<Integer> got;
    for (const auto& e : values) got.push_back(e.value);
    const auto closed = delta2_components(d);
    std::vector<Integer> want;
    for (const auto& e : closed.entries()) want.push_back(e.value);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << d;
  }
}

TEST(Formula5Test, DomainErrors) {
  EXPECT_THROW(formula5(4, 4, *paper_aux()), DomainError);
  EXPECT_THROW(formula5(4, -1, *paper_aux()), DomainError);
  EXPECT_THROW(formula5(1, 0, *paper_aux()), DomainError);
}

TEST(Formula5Test, MissingKeyIsReported) {
  try {
    formula5(5, 3, *paper_aux());
    FAIL() << "expected MissingAuxError";
  } catch (const MissingAuxError& e) {
    EXPECT_EQ(e.key().e, 4);
    EXPECT_FALSE(paper_aux()->lookup(e.key()));
  }
}

TEST(Formula5Test, ZeroAuxIsDropped) {
  TableAuxProvider zeros;
  zeros.insert({3, 3, {}, {}}, 0);
  LayeredAuxProvider aux(std::make_shared<TableAuxProvider>(zeros),
                         paper_aux());
  const auto eval = evaluate_formula5(4, 3, aux);
  EXPECT_EQ(eval.total, 675 - 15);
  EXPECT_EQ(eval.terms.size(), 7u);
  EXPECT_TRUE(std::any_of(eval.dropped.begin(), eval.dropped.end(),
                          [](const auto& c) {
                            return c.reason == DropReason::ZeroAux;
                          }));
}

TEST(RobertsTest, Values) {
  EXPECT_EQ(roberts_closed(3), 21);
  EXPECT_EQ(roberts_closed(4), 225);
  EXPECT_EQ(roberts_closed(5), 882);
  EXPECT_THROW(roberts_closed(2), DomainError);
}

TEST(RobertsTest, DifferencePolynomial) {
  EXPECT_EQ(delta2_difference(4), 204);
  EXPECT_EQ(delta2_difference(5), 657);
  EXPECT_THROW(delta2_difference(3), DomainError);
  for (int d = 4; d <= 50; ++d) {
    EXPECT_EQ(roberts_closed(d) - roberts_closed(d - 1), delta2_difference(d))
        << d;
  }
}

TEST(Delta2ComponentsTest, SmallDegrees) {
  ComponentLedger four;
  for (auto [label, v] : {std::pair{"A", 21}, {"B", 84}, {"C", 15},
                          {"D", 72}, {"E", 24}, {"F", 9}, {"G", 0}}) {
    four.add(label, v);
  }
  EXPECT_EQ(delta2_components(4), four);
  EXPECT_EQ(delta2_components(4).total(), 225);

  const auto five = delta2_components(5);
  EXPECT_EQ(five.value("A"), 225);
  EXPECT_EQ(five.value("B"), 243);
  EXPECT_EQ(five.value("C"), 28);
  EXPECT_EQ(five.value("D"), 288);
  EXPECT_EQ(five.value("E"), 64);
  EXPECT_EQ(five.value("F"), 18);
  EXPECT_EQ(five.value("G"), 16);
  EXPECT_EQ(five.total(), 882);
  EXPECT_THROW(delta2_components(3), DomainError);
  EXPECT_THROW(five.value("H"), DomainError);
}

TEST(Delta2ComponentsTest, SumsToDifferenceAndPrintedGDoesNot) {
  for (int d = 4; d <= 50; ++d) {
    const auto ledger = delta2_components(d);
    const Integer step = ledger.total() - ledger.value("A");
    EXPECT_EQ(step, delta2_difference(d)) << d;
    EXPECT_EQ(ledger.total(), roberts_closed(d)) << d;

    const Integer x = d;
    const Integer printed_g = 9 * x * x - 56 * x + 96;
    EXPECT_NE(step - ledger.value("G") + printed_g, delta2_difference(d))
        << d;
  }
}

TEST(QuarticTest, ComponentLedger) {
  const auto ledger = quartic_components();
  ASSERT_EQ(ledger.entries().size(), 7u);
  const std::vector<std::pair<std::string, int>> expected = {
      {"A", 15}, {"B", 147}, {"C", 180}, {"D", 10},
      {"E", 200}, {"F", 60}, {"G", 63}};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(ledger.entries()[i].label, expected[i].first);
    EXPECT_EQ(ledger.entries()[i].value, expected[i].second);
  }
  EXPECT_EQ(ledger.total(), 675);
}

TEST(QuarticTest, IrreducibleRationalQuartics) {
  EXPECT_EQ(binomial(11, 2), 55);
  EXPECT_EQ(irreducible_rational_quartics(), 620);
  EXPECT_EQ(irreducible_rational_quartics(), kontsevich_table(4).at(4));
}

TEST(GroupComponentsTest, LabelsByShapeAndNodes) {
  const auto ledger = group_components(formula5_terms(4, 3, *paper_aux()));
  EXPECT_EQ(ledger.entries().size(), 7u);
  EXPECT_EQ(ledger.value("V[1,1](1,1)"), 200);
  EXPECT_EQ(ledger.total(), 675);
}

}  // namespace
}  // namespace gw::severi
