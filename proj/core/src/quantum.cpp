#include "gw/quantum.hpp"

#include <string>

#include "gw/error.hpp"

namespace gw::quantum {

BasisClass basis_class(int index) {
  if (index < 0 || index > 2) {
    throw DomainError("basis class index must be 0, 1 or 2, got " +
                      std::to_string(index));
  }
  return static_cast<BasisClass>(index);
}

PairGrouping PairGrouping::points_lines() {
  return {{BasisClass::Point, BasisClass::Point},
          {BasisClass::Line, BasisClass::Line}};
}

PairGrouping PairGrouping::mixed() {
  return {{BasisClass::Point, BasisClass::Line},
          {BasisClass::Point, BasisClass::Line}};
}

namespace {

std::optional<BasisClass> class_from_letter(char c) {
  switch (c) {
    case 'f': return BasisClass::Fundamental;
    case 'l': return BasisClass::Line;
    case 'p': return BasisClass::Point;
    default: return std::nullopt;
  }
}

char letter(BasisClass c) {
  switch (c) {
    case BasisClass::Fundamental: return 'f';
    case BasisClass::Line: return 'l';
    case BasisClass::Point: return 'p';
  }
  return '?';
}

void add_class(InvariantKey& key, BasisClass c) {
  switch (c) {
    case BasisClass::Fundamental: ++key.fundamentals; break;
    case BasisClass::Line: ++key.lines; break;
    case BasisClass::Point: ++key.points; break;
  }
}

}  // namespace

std::optional<PairGrouping> PairGrouping::parse(std::string_view spec) {
  if (spec.size() != 5 || (spec[2] != ',' && spec[2] != '|')) {
    return std::nullopt;
  }
  const auto a = class_from_letter(spec[0]);
  const auto b = class_from_letter(spec[1]);
  const auto c = class_from_letter(spec[3]);
  const auto d = class_from_letter(spec[4]);
  if (!a || !b || !c || !d) return std::nullopt;
  return PairGrouping{{*a, *b}, {*c, *d}};
}

std::string PairGrouping::name() const {
  return {letter(first[0]), letter(first[1]), '|', letter(second[0]),
          letter(second[1])};
}

Integer classical_triple(BasisClass a, BasisClass b, BasisClass c) {
  return degree_of(a) + degree_of(b) + degree_of(c) == 2 ? 1 : 0;
}

std::vector<KunnethTerm> kunneth_pairs() {
  std::vector<KunnethTerm> out;
  for (int e = 0; e <= 2; ++e) {
    for (int f = 0; f <= 2; ++f) {
      if (e + f == 2) out.push_back({basis_class(e), basis_class(f), 1});
    }
  }
  return out;
}

Integer reduced_invariant(const InvariantKey& key, const NdTable& table) {
  if (key.degree < 0 || key.points < 0 || key.lines < 0 ||
      key.fundamentals < 0) {
    throw DomainError("reduced_invariant: negative field in key");
  }
  if (key.degree == 0) {
    if (key.insertions() != 3) return 0;
    return 2 * key.points + key.lines == 2 ? 1 : 0;
  }
  if (key.fundamentals > 0) return 0;
  if (key.points != 3 * key.degree - 1) return 0;
  return ipow(key.degree, static_cast<unsigned>(key.lines)) *
         table.at(key.degree);
}

Integer four_point_sum(int d, int n, const PairGrouping& grouping,
                       const NdTable& table, bool include_degenerate) {
  if (d < 0 || n < 0) {
    throw DomainError("four_point_sum: degree and point count must be >= 0");
  }
  const auto diagonal = kunneth_pairs();
  Integer total = 0;
  for (int d1 = 0; d1 <= d; ++d1) {
    const int d2 = d - d1;
    if (!include_degenerate && (d1 == 0 || d2 == 0)) continue;
    for (int n1 = 0; n1 <= n; ++n1) {
      const int n2 = n - n1;
      Integer split_total = 0;
      for (const auto& [e, f, coefficient] : diagonal) {
        InvariantKey left{d1, n1, 0, 0};
        add_class(left, grouping.first[0]);
        add_class(left, grouping.first[1]);
        add_class(left, e);
        InvariantKey right{d2, n2, 0, 0};
        add_class(right, grouping.second[0]);
        add_class(right, grouping.second[1]);
        add_class(right, f);
        const Integer lhs = reduced_invariant(left, table);
        if (lhs == 0) continue;
        split_total += lhs * reduced_invariant(right, table) * coefficient;
      }
      if (split_total != 0) total += binomial(n, n1) * split_total;
    }
  }
  return total;
}

Integer wdvv_residual(int d, const NdTable& table) {
  if (d < 2) {
    throw DomainError("wdvv_residual: degree must be >= 2, got " +
                      std::to_string(d));
  }
  const int n = 3 * d - 4;
  return four_point_sum(d, n, PairGrouping::points_lines(), table, true) -
         four_point_sum(d, n, PairGrouping::mixed(), table, true);
}

NdTable n_d_via_wdvv(int d_max) {
  if (d_max < 1) {
    throw DomainError("n_d_via_wdvv: degree must be >= 1, got " +
                      std::to_string(d_max));
  }
  NdTable table;
  for (int d = 2; d <= d_max; ++d) {
    const int n = 3 * d - 4;
    const Integer with_lines =
        four_point_sum(d, n, PairGrouping::points_lines(), table, false);
    const Integer mixed =
        four_point_sum(d, n, PairGrouping::mixed(), table, false);
    table.append(mixed - with_lines);
  }
  return table;
}

}  // namespace gw::quantum
