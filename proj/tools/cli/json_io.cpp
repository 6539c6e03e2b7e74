#include "cli/json_io.hpp"

#include <fstream>
#include <string>

#include "gw/error.hpp"

namespace gw {

void to_json(nlohmann::json& j, const Partition& p) {
  j = nlohmann::json::array();
  for (int l : p.multiplicities()) j.push_back(l);
}

void from_json(const nlohmann::json& j, Partition& p) {
  if (!j.is_array()) throw DomainError("partition must be a JSON array");
  std::vector<int> mult;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      throw DomainError("partition entries must be integers");
    }
    mult.push_back(v.get<int>());
  }
  p = Partition(std::move(mult));
}

nlohmann::json integer_json(const Integer& value) { return value.str(); }

Integer parse_integer(const nlohmann::json& j) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (!j.is_string()) {
    throw DomainError("expected a decimal string, got " + j.dump());
  }
  const auto& s = j.get_ref<const std::string&>();
  const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (s.size() == start ||
      s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw DomainError("malformed decimal string \"" + s + "\"");
  }
  return Integer(s);
}

}  // namespace gw

namespace gw::severi {

namespace {

int require_int(const nlohmann::json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) {
    throw DomainError(std::string("missing integer field \"") + field + "\"");
  }
  return j.at(field).get<int>();
}

DropReason parse_reason(const std::string& s) {
  for (auto r : {DropReason::NegativeDelta2, DropReason::EmptyPlacement,
                 DropReason::ZeroAux}) {
    if (s == to_string(r)) return r;
  }
  throw DomainError("unknown drop reason \"" + s + "\"");
}

}  // namespace

void to_json(nlohmann::json& j, const AuxKey& key) {
  j = {{"e", key.e},
       {"delta", key.delta},
       {"fixed", key.fixed},
       {"free", key.free}};
}

void from_json(const nlohmann::json& j, AuxKey& key) {
  key.e = require_int(j, "e");
  key.delta = require_int(j, "delta");
  key.fixed = j.at("fixed").get<Partition>();
  key.free = j.at("free").get<Partition>();
}

void to_json(nlohmann::json& j, const SplitTerm& t) {
  j = {{"pi", t.pi},
       {"pi_free", t.pi_free},
       {"pi_fixed_top", t.pi_fixed_top},
       {"delta1", t.delta1},
       {"delta2", t.delta2},
       {"placement", integer_json(t.placement)},
       {"m_outer", integer_json(t.m_outer)},
       {"m_comp", integer_json(t.m_comp)},
       {"n_comp", integer_json(t.n_comp)},
       {"aux", t.aux},
       {"aux_value", integer_json(t.aux_value)},
       {"product", integer_json(t.product)}};
}

void from_json(const nlohmann::json& j, SplitTerm& t) {
  t.pi = j.at("pi").get<Partition>();
  t.pi_free = j.at("pi_free").get<Partition>();
  t.pi_fixed_top = j.at("pi_fixed_top").get<Partition>();
  t.delta1 = require_int(j, "delta1");
  t.delta2 = require_int(j, "delta2");
  t.placement = parse_integer(j.at("placement"));
  t.m_outer = parse_integer(j.at("m_outer"));
  t.m_comp = parse_integer(j.at("m_comp"));
  t.n_comp = parse_integer(j.at("n_comp"));
  t.aux = j.at("aux").get<AuxKey>();
  t.aux_value = parse_integer(j.at("aux_value"));
  t.product = parse_integer(j.at("product"));
}

void to_json(nlohmann::json& j, const DroppedCandidate& c) {
  j = {{"pi", c.pi},
       {"pi_free", c.pi_free},
       {"delta1", c.delta1},
       {"delta2", c.delta2},
       {"reason", to_string(c.reason)}};
}

void from_json(const nlohmann::json& j, DroppedCandidate& c) {
  c.pi = j.at("pi").get<Partition>();
  c.pi_free = j.at("pi_free").get<Partition>();
  c.delta1 = require_int(j, "delta1");
  c.delta2 = require_int(j, "delta2");
  c.reason = parse_reason(j.at("reason").get<std::string>());
}

void to_json(nlohmann::json& j, const ComponentLedger& ledger) {
  auto components = nlohmann::json::array();
  for (const auto& entry : ledger.entries()) {
    components.push_back(
        {{"label", entry.label}, {"value", integer_json(entry.value)}});
  }
  j = {{"components", std::move(components)},
       {"total", integer_json(ledger.total())}};
}

void from_json(const nlohmann::json& j, ComponentLedger& ledger) {
  ledger = ComponentLedger{};
  for (const auto& c : j.at("components")) {
    ledger.add(c.at("label").get<std::string>(), parse_integer(c.at("value")));
  }
  if (j.contains("total") && parse_integer(j.at("total")) != ledger.total()) {
    throw DomainError("ledger total does not match its components");
  }
}

TableAuxProvider parse_aux_table(const nlohmann::json& records) {
  if (!records.is_array()) {
    throw DomainError("aux table must be a JSON array of records");
  }
  TableAuxProvider table;
  for (const auto& record : records) {
    if (!record.is_object()) throw DomainError("aux record must be an object");
    AuxKey key;
    try {
      key = record.get<AuxKey>();
    } catch (const nlohmann::json::exception& e) {
      throw DomainError("malformed aux record " + record.dump() + ": " +
                        e.what());
    }
    if (!record.contains("value")) {
      throw DomainError("aux record " + key.to_string() + " has no value");
    }
    table.insert(key, parse_integer(record.at("value")));
  }
  return table;
}

TableAuxProvider load_aux_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open aux table " + path.string());
  nlohmann::json records;
  try {
    in >> records;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("aux table " + path.string() +
                             " is not valid JSON: " + e.what());
  }
  return parse_aux_table(records);
}

nlohmann::json aux_table_json(const TableAuxProvider& table) {
  auto out = nlohmann::json::array();
  for (const auto& [key, value] : table.entries()) {
    nlohmann::json record = key;
    record["value"] = integer_json(value);
    out.push_back(std::move(record));
  }
  return out;
}

}  // namespace gw::severi
