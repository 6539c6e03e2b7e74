#include "gw/kontsevich.hpp"

#include <string>

#include "gw/error.hpp"

namespace gw {

NdTable::NdTable() : values_{Integer(1)} {}

NdTable NdTable::from_values(std::vector<Integer> values) {
  if (values.empty() || values.front() != 1) {
    throw DomainError("NdTable: n_1 must be 1");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw DomainError("NdTable: n_" + std::to_string(i + 1) +
                        " must be positive");
    }
  }
  NdTable table;
  table.values_ = std::move(values);
  return table;
}

const Integer& NdTable::at(int d) const {
  if (!contains(d)) {
    throw DomainError("NdTable: no entry for degree " + std::to_string(d));
  }
  return values_[static_cast<std::size_t>(d - 1)];
}

void NdTable::append(Integer value) {
  if (value <= 0) {
    throw DomainError("NdTable: n_" + std::to_string(max_degree() + 1) +
                      " must be positive, got " + value.str());
  }
  values_.push_back(std::move(value));
}

namespace {

void check_split_args(const char* what, int d, int d1, const NdTable& table) {
  if (d < 2) {
    throw DomainError(std::string(what) + ": degree must be >= 2, got " +
                      std::to_string(d));
  }
  if (d1 < 1 || d1 >= d) {
    throw DomainError(std::string(what) + ": split " + std::to_string(d1) +
                      " + " + std::to_string(d - d1) + " is not positive");
  }
  if (!table.contains(d - 1)) {
    throw DomainError(std::string(what) + ": table must hold n_1..n_" +
                      std::to_string(d - 1));
  }
}

}  // namespace

Integer f_summand(int d, int d1, const NdTable& table) {
  check_split_args("f_sum", d, d1, table);
  const int d2 = d - d1;
  return table.at(d1) * table.at(d2) * d1 * ipow(d2, 3) *
         binomial(3 * d - 4, 3 * d2 - 1);
}

Integer g_summand(int d, int d1, const NdTable& table) {
  check_split_args("g_sum", d, d1, table);
  const int d2 = d - d1;
  return table.at(d1) * table.at(d2) * d1 * d1 * d2 * d2 *
         binomial(3 * d - 4, 3 * d2 - 2);
}

Integer f_sum(int d, const NdTable& table) {
  check_split_args("f_sum", d, 1, table);
  Integer total = 0;
  for (int d1 = 1; d1 < d; ++d1) total += f_summand(d, d1, table);
  return total;
}

Integer g_sum(int d, const NdTable& table) {
  check_split_args("g_sum", d, 1, table);
  Integer total = 0;
  for (int d1 = 1; d1 < d; ++d1) total += g_summand(d, d1, table);
  return total;
}

const Integer& n_d(int d, NdTable& table) {
  if (d <= 0) {
    throw DomainError("n_d: degree must be >= 1, got " + std::to_string(d));
  }
  while (table.max_degree() < d) {
    const int next = table.max_degree() + 1;
    table.append(g_sum(next, table) - f_sum(next, table));
  }
  return table.at(d);
}

NdTable kontsevich_table(int d_max) {
  NdTable table;
  n_d(d_max, table);
  return table;
}

}  // namespace gw
