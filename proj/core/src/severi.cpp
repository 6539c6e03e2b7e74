#include "gw/severi.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "gw/error.hpp"

namespace gw::severi {

Integer ruling_placements(int fixed_simple, int delta1, int free_simple,
                          int interior) {
  if (fixed_simple < 0 || delta1 < 0 || free_simple < 0 || interior < 0) {
    throw DomainError("ruling_placements: arguments must be non-negative");
  }
  const int lo = std::max(0, delta1 - free_simple);
  const int hi = std::min(fixed_simple, delta1);
  Integer total = 0;
  for (int j = lo; j <= hi; ++j) {
    total += binomial(fixed_simple, j) * binomial(interior, delta1 - j);
  }
  return total;
}

const char* to_string(DropReason reason) {
  switch (reason) {
    case DropReason::NegativeDelta2: return "negative_delta2";
    case DropReason::EmptyPlacement: return "empty_placement";
    case DropReason::ZeroAux: return "zero_aux";
  }
  return "unknown";
}

Formula5Evaluation evaluate_formula5(int d, int delta,
                                     const AuxProvider& aux) {
  if (d < 2) {
    throw DomainError("formula5: degree must be >= 2, got " +
                      std::to_string(d));
  }
  if (delta < 0 || delta >= d) {
    throw DomainError("formula5: need 0 <= delta < d, got d=" +
                      std::to_string(d) + " delta=" + std::to_string(delta));
  }

  Formula5Evaluation eval{d, delta, {}, {}, 0};
  const int interior = d + 1;
  for (const Partition& pi : partitions_of_weight(d - 1)) {
    const Integer m_outer = pi.mult_m();
    for (const Partition& pi_free : subpartitions(pi)) {
      const Partition fixed_top = complement(pi, pi_free);
      const int delta1 = fixed_top.size();
      const int delta2 = delta - delta1 - pi.tangency_excess();
      if (delta2 < 0) {
        eval.dropped.push_back(
            {pi, pi_free, delta1, delta2, DropReason::NegativeDelta2});
        continue;
      }
      Integer placement = ruling_placements(pi_free.count(1), delta1,
                                            fixed_top.count(1), interior);
      if (placement == 0) {
        eval.dropped.push_back(
            {pi, pi_free, delta1, delta2, DropReason::EmptyPlacement});
        continue;
      }
      AuxKey key{d - 1, delta2, fixed_top, pi_free};
      auto aux_value = aux.lookup(key);
      if (!aux_value) throw MissingAuxError(std::move(key));
      if (*aux_value == 0) {
        eval.dropped.push_back(
            {pi, pi_free, delta1, delta2, DropReason::ZeroAux});
        continue;
      }

      SplitTerm term{pi,
                     pi_free,
                     fixed_top,
                     delta1,
                     delta2,
                     std::move(placement),
                     m_outer,
                     fixed_top.mult_m(),
                     fixed_top.perm_count_n(),
                     std::move(key),
                     std::move(*aux_value),
                     0};
      term.product = term.m_outer * term.m_comp * term.n_comp *
                     term.placement * term.aux_value;
      if (term.delta1 + term.delta2 + term.pi.tangency_excess() != delta) {
        throw InternalError("formula5: node count mismatch for " +
                            term.pi.to_string());
      }
      eval.total += term.product;
      eval.terms.push_back(std::move(term));
    }
  }
  return eval;
}

std::vector<SplitTerm> formula5_terms(int d, int delta,
                                      const AuxProvider& aux) {
  return evaluate_formula5(d, delta, aux).terms;
}

Integer formula5(int d, int delta, const AuxProvider& aux) {
  return evaluate_formula5(d, delta, aux).total;
}

void ComponentLedger::add(std::string label, Integer value) {
  total_ += value;
  entries_.push_back({std::move(label), std::move(value)});
}

const Integer& ComponentLedger::value(const std::string& label) const {
  for (const auto& entry : entries_) {
    if (entry.label == label) return entry.value;
  }
  throw DomainError("ledger has no component " + label);
}

namespace {

std::string component_label(const SplitTerm& term) {
  return "V" + term.pi.to_string() + "(" + std::to_string(term.delta1) +
         "," + std::to_string(term.delta2) + ")";
}

}  // namespace

ComponentLedger group_components(const std::vector<SplitTerm>& terms) {
  std::vector<std::pair<std::string, Integer>> groups;
  for (const auto& term : terms) {
    const std::string label = component_label(term);
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first == label; });
    if (it == groups.end()) {
      groups.emplace_back(label, term.product);
    } else {
      it->second += term.product;
    }
  }
  ComponentLedger ledger;
  for (auto& [label, value] : groups) ledger.add(label, std::move(value));
  return ledger;
}

Integer roberts_closed(int d) {
  if (d < 3) {
    throw DomainError("roberts_closed: degree must be >= 3, got " +
                      std::to_string(d));
  }
  const Rational x = d;
  const Rational value = Rational(9, 2) * x * x * x * x - 18 * x * x * x +
                         6 * x * x + Rational(81, 2) * x - 33;
  return require_integral(value);
}

Integer delta2_difference(int d) {
  if (d < 4) {
    throw DomainError("delta2_difference: degree must be >= 4, got " +
                      std::to_string(d));
  }
  const Integer x = d;
  return 18 * x * x * x - 81 * x * x + 84 * x + 12;
}

ComponentLedger delta2_components(int d) {
  if (d < 4) {
    throw DomainError("delta2_components: degree must be >= 4, got " +
                      std::to_string(d));
  }
  const Integer x = d;
  ComponentLedger ledger;
  ledger.add("A", roberts_closed(d - 1));
  ledger.add("B", 3 * (2 * x - 1) * (x - 2) * (x - 2));
  ledger.add("C", 2 * x * x - 5 * x + 3);
  ledger.add("D", 12 * (x - 1) * (x - 2) * (x - 3));
  ledger.add("E", 8 * (x - 1) * (x - 3));
  ledger.add("F", 9 * x - 27);
  ledger.add("G", 16 * binomial(d - 3, 2));
  return ledger;
}

ComponentLedger quartic_components(const AuxProvider& aux) {
  // Limit components of N_{4,3} as (outer shape, delta1), in the order the
  // worked example lists them.
  static const std::array<std::pair<Partition, int>, 7> kOrder = {{
      {Partition{3}, 0},
      {Partition{3}, 1},
      {Partition{3}, 2},
      {Partition{3}, 3},
      {Partition{1, 1}, 1},
      {Partition{1, 1}, 0},
      {Partition{0, 0, 1}, 0},
  }};
  static const std::array<const char*, 7> kLabels = {"A", "B", "C", "D",
                                                     "E", "F", "G"};

  const auto terms = formula5_terms(4, 3, aux);
  std::array<Integer, 7> values{};
  std::array<bool, 7> seen{};
  for (const auto& term : terms) {
    const auto it = std::find(kOrder.begin(), kOrder.end(),
                              std::pair{term.pi, term.delta1});
    if (it == kOrder.end()) {
      throw InternalError("quartic_components: unexpected component " +
                          component_label(term));
    }
    const auto i = static_cast<std::size_t>(it - kOrder.begin());
    values[i] += term.product;
    seen[i] = true;
  }
  ComponentLedger ledger;
  for (std::size_t i = 0; i < kOrder.size(); ++i) {
    if (!seen[i]) {
      throw InternalError(std::string("quartic_components: component ") +
                          kLabels[i] + " has no terms");
    }
    ledger.add(kLabels[i], values[i]);
  }
  return ledger;
}

ComponentLedger quartic_components() {
  return quartic_components(*paper_aux());
}

Integer irreducible_rational_quartics(const AuxProvider& aux) {
  return quartic_components(aux).total() - binomial(11, 2);
}

Integer irreducible_rational_quartics() {
  return irreducible_rational_quartics(*paper_aux());
}

}  // namespace gw::severi
