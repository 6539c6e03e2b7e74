#pragma once

#include <filesystem>

#include <nlohmann/json.hpp>

#include "gw/aux_provider.hpp"
#include "gw/partition.hpp"
#include "gw/severi.hpp"

// JSON encodings of the library's value types. Integers are always written
// as decimal strings; partitions as their multiplicity vectors.
namespace gw {

void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

/// Decimal-string encoding of an Integer.
nlohmann::json integer_json(const Integer& value);

/// Accepts a decimal string (or a JSON integer, for hand-written tables).
Integer parse_integer(const nlohmann::json& j);

}  // namespace gw

namespace gw::severi {

void to_json(nlohmann::json& j, const AuxKey& key);
void from_json(const nlohmann::json& j, AuxKey& key);

void to_json(nlohmann::json& j, const SplitTerm& term);
void from_json(const nlohmann::json& j, SplitTerm& term);

void to_json(nlohmann::json& j, const DroppedCandidate& dropped);
void from_json(const nlohmann::json& j, DroppedCandidate& dropped);

void to_json(nlohmann::json& j, const ComponentLedger& ledger);
void from_json(const nlohmann::json& j, ComponentLedger& ledger);

/// Parses an aux table: an array of
///   {"e": int, "delta": int, "fixed": [...], "free": [...], "value": "..."}
/// Throws DomainError on malformed records or duplicate (normalized) keys.
TableAuxProvider parse_aux_table(const nlohmann::json& records);

/// Reads and parses an aux table file. Throws std::runtime_error if the file
/// cannot be read or is not JSON.
TableAuxProvider load_aux_table(const std::filesystem::path& path);

/// Inverse of parse_aux_table, in key order.
nlohmann::json aux_table_json(const TableAuxProvider& table);

}  // namespace gw::severi
