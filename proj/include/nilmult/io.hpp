#ifndef NILMULT_IO_HPP
#define NILMULT_IO_HPP

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "nilmult/bigint.hpp"
#include "nilmult/commutator.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/witt.hpp"

namespace nilmult {

inline constexpr const char* kSchemaVersion = "1";

enum class OutputFormat { text, json, csv };

// Accepts "text", "json", "csv"; anything else is an invalid_argument.
OutputFormat parse_format(const std::string& name);
const char* to_string(OutputFormat format);

struct ChiPayload {
  int weight = 0;
  int generators = 0;
  Int value;

  friend bool operator==(const ChiPayload&, const ChiPayload&) = default;
};

struct BasisPayload {
  int generators = 0;
  int max_weight = 0;
  std::vector<Commutator> elements;

  friend bool operator==(const BasisPayload&, const BasisPayload&) = default;
};

struct RankPayload {
  std::string kind;  // "nilpotent" or "polynilpotent"
  RankReport report;

  friend bool operator==(const RankPayload&, const RankPayload&) = default;
};

struct VerifyPayload {
  std::vector<VerificationReport> reports;

  friend bool operator==(const VerifyPayload&, const VerifyPayload&) = default;
};

struct TableCell {
  int n = 0;
  int c = 0;
  int m = 0;
  std::optional<Int> rank;  // absent when the cell violates its hypothesis
  std::string note;         // "n/a" for such cells, empty otherwise

  friend bool operator==(const TableCell&, const TableCell&) = default;
};

struct TablePayload {
  std::string kind;
  std::vector<TableCell> cells;

  friend bool operator==(const TablePayload&, const TablePayload&) = default;
};

using Payload = std::variant<ChiPayload, BasisPayload, RankPayload, VerifyPayload, TablePayload>;

// One emission of the tool: what ran, with which parameters, and its result.
struct OutputDocument {
  std::string schema_version = kSchemaVersion;
  std::string command;
  std::map<std::string, std::string> parameters;
  Payload payload;

  friend bool operator==(const OutputDocument&, const OutputDocument&) = default;
};

// Machine form of a commutator: a generator is its index, a bracket is the
// two-element array [left, right]. [[x2,x1],x1] becomes [[2,1],1].
nlohmann::json commutator_tree(const Commutator& c);
Commutator commutator_from_tree(const nlohmann::json& tree);

nlohmann::json document_to_json(const OutputDocument& document);
OutputDocument document_from_json(const nlohmann::json& value);

// Rendering in the requested format, trailing newline included. Objects in
// the JSON form keep their keys sorted, so equal documents emit equal bytes.
std::string emit_document(const OutputDocument& document, OutputFormat format);

}  // namespace nilmult

#endif  // NILMULT_IO_HPP
