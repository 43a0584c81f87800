#include "nilmult/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace nilmult {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(cells[i]);
  }
  out += '\n';
  return out;
}

std::string join_details(const std::map<std::string, std::string>& details) {
  std::string out;
  for (const auto& [key, value] : details) {
    if (!out.empty()) out += "; ";
    out += key + "=" + value;
  }
  return out;
}

std::string summand_list(const std::vector<std::pair<int, Int>>& summands) {
  std::string out;
  for (const auto& [weight, count] : summands) {
    if (!out.empty()) out += " ";
    out += std::to_string(weight) + ":" + count.str();
  }
  return out;
}

std::string verify_heading(const VerificationReport& report) {
  if (report.target == "hall")
    return "verify hall generators=" + std::to_string(report.m);
  return "verify " + report.target + " n=" + std::to_string(report.n) + " c=" +
         std::to_string(report.c) + " m=" + std::to_string(report.m);
}

std::string render_text(const OutputDocument& document) {
  return std::visit(
      overloaded{
          [](const ChiPayload& p) { return p.value.str() + "\n"; },
          [](const BasisPayload& p) {
            std::string out;
            for (const Commutator& element : p.elements) out += to_string(element) + "\n";
            return out;
          },
          [](const RankPayload& p) {
            std::string out = "rank " + p.kind + " n=" + std::to_string(p.report.n) + " c=" +
                              std::to_string(p.report.c) + " m=" + std::to_string(p.report.m) +
                              "\n";
            out += "branch: " + std::string(to_string(p.report.branch)) + "\n";
            out += "summands: " + summand_list(p.report.summands) + "\n";
            out += "rank: " + p.report.rank.str() + "\n";
            return out;
          },
          [](const VerifyPayload& p) {
            std::string out;
            for (const VerificationReport& report : p.reports) {
              out += verify_heading(report) + "\n";
              out += "status: " + std::string(to_string(report.status)) + "\n";
              if (report.truncation) out += "truncation: " + std::to_string(*report.truncation) + "\n";
              if (report.trials) out += "trials: " + std::to_string(*report.trials) + "\n";
              if (report.seed) out += "seed: " + std::to_string(*report.seed) + "\n";
              if (report.counterexample) out += "counterexample: " + *report.counterexample + "\n";
              if (!report.details.empty()) {
                out += "details:\n";
                for (const auto& [key, value] : report.details)
                  out += "  " + key + ": " + value + "\n";
              }
            }
            return out;
          },
          [](const TablePayload& p) {
            std::string out = "table " + p.kind + "\n";
            if (p.cells.empty()) return out;
            std::vector<int> ms;
            for (const TableCell& cell : p.cells)
              if (std::find(ms.begin(), ms.end(), cell.m) == ms.end()) ms.push_back(cell.m);
            std::sort(ms.begin(), ms.end());
            out += "m:";
            for (int m : ms) out += " " + std::to_string(m);
            out += "\n";
            // cells arrive m-minor, so each (n, c) row is contiguous
            for (std::size_t i = 0; i < p.cells.size();) {
              const TableCell& head = p.cells[i];
              out += "n=" + std::to_string(head.n) + " c=" + std::to_string(head.c) + ":";
              for (; i < p.cells.size() && p.cells[i].n == head.n && p.cells[i].c == head.c; ++i)
                out += " " + (p.cells[i].rank ? p.cells[i].rank->str() : p.cells[i].note);
              out += "\n";
            }
            return out;
          },
      },
      document.payload);
}

std::string render_csv(const OutputDocument& document) {
  return std::visit(
      overloaded{
          [](const ChiPayload& p) {
            return csv_row({"weight", "generators", "value"}) +
                   csv_row({std::to_string(p.weight), std::to_string(p.generators),
                            p.value.str()});
          },
          [](const BasisPayload& p) {
            std::string out = csv_row({"index", "weight", "commutator"});
            for (std::size_t i = 0; i < p.elements.size(); ++i)
              out += csv_row({std::to_string(i), std::to_string(p.elements[i].weight()),
                              to_string(p.elements[i])});
            return out;
          },
          [](const RankPayload& p) {
            return csv_row({"kind", "n", "c", "m", "branch", "rank", "summands"}) +
                   csv_row({p.kind, std::to_string(p.report.n), std::to_string(p.report.c),
                            std::to_string(p.report.m), to_string(p.report.branch),
                            p.report.rank.str(), summand_list(p.report.summands)});
          },
          [](const VerifyPayload& p) {
            std::string out = csv_row({"target", "n", "c", "m", "truncation", "trials", "seed",
                                       "status", "counterexample", "details"});
            for (const VerificationReport& r : p.reports)
              out += csv_row({r.target, std::to_string(r.n), std::to_string(r.c),
                              std::to_string(r.m),
                              r.truncation ? std::to_string(*r.truncation) : "",
                              r.trials ? std::to_string(*r.trials) : "",
                              r.seed ? std::to_string(*r.seed) : "", to_string(r.status),
                              r.counterexample.value_or(""), join_details(r.details)});
            return out;
          },
          [](const TablePayload& p) {
            std::string out = csv_row({"kind", "n", "c", "m", "rank"});
            for (const TableCell& cell : p.cells)
              out += csv_row({p.kind, std::to_string(cell.n), std::to_string(cell.c),
                              std::to_string(cell.m),
                              cell.rank ? cell.rank->str() : cell.note});
            return out;
          },
      },
      document.payload);
}

nlohmann::json summands_json(const std::vector<std::pair<int, Int>>& summands) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [weight, count] : summands) out.push_back({weight, count.str()});
  return out;
}

std::vector<std::pair<int, Int>> summands_from_json(const nlohmann::json& value) {
  std::vector<std::pair<int, Int>> out;
  for (const auto& entry : value)
    out.emplace_back(entry.at(0).get<int>(), Int(entry.at(1).get<std::string>()));
  return out;
}

RankBranch branch_from_string(const std::string& name) {
  if (name == "c_ge_n") return RankBranch::c_ge_n;
  if (name == "c_le_n") return RankBranch::c_le_n;
  if (name == "polynilpotent_c1") return RankBranch::polynilpotent_c1;
  throw std::invalid_argument("unknown rank branch: " + name);
}

VerificationStatus status_from_string(const std::string& name) {
  if (name == "pass") return VerificationStatus::pass;
  if (name == "fail") return VerificationStatus::fail;
  if (name == "hypothesis_violation") return VerificationStatus::hypothesis_violation;
  throw std::invalid_argument("unknown verification status: " + name);
}

nlohmann::json rank_report_json(const RankReport& report) {
  return {{"n", report.n},
          {"c", report.c},
          {"m", report.m},
          {"branch", to_string(report.branch)},
          {"rank", report.rank.str()},
          {"summands", summands_json(report.summands)}};
}

RankReport rank_report_from_json(const nlohmann::json& value) {
  RankReport report;
  report.n = value.at("n").get<int>();
  report.c = value.at("c").get<int>();
  report.m = value.at("m").get<int>();
  report.branch = branch_from_string(value.at("branch").get<std::string>());
  report.rank = Int(value.at("rank").get<std::string>());
  report.summands = summands_from_json(value.at("summands"));
  return report;
}

nlohmann::json verification_report_json(const VerificationReport& report) {
  nlohmann::json out{{"target", report.target},
                     {"n", report.n},
                     {"c", report.c},
                     {"m", report.m},
                     {"status", to_string(report.status)},
                     {"details", report.details}};
  if (report.truncation) out["truncation"] = *report.truncation;
  if (report.trials) out["trials"] = *report.trials;
  if (report.seed) out["seed"] = *report.seed;
  if (report.counterexample) out["counterexample"] = *report.counterexample;
  return out;
}

VerificationReport verification_report_from_json(const nlohmann::json& value) {
  VerificationReport report;
  report.target = value.at("target").get<std::string>();
  report.n = value.at("n").get<int>();
  report.c = value.at("c").get<int>();
  report.m = value.at("m").get<int>();
  report.status = status_from_string(value.at("status").get<std::string>());
  report.details = value.at("details").get<std::map<std::string, std::string>>();
  if (value.contains("truncation")) report.truncation = value.at("truncation").get<int>();
  if (value.contains("trials")) report.trials = value.at("trials").get<int>();
  if (value.contains("seed")) report.seed = value.at("seed").get<std::uint64_t>();
  if (value.contains("counterexample"))
    report.counterexample = value.at("counterexample").get<std::string>();
  return report;
}

nlohmann::json payload_json(const Payload& payload) {
  return std::visit(
      overloaded{
          [](const ChiPayload& p) {
            return nlohmann::json{{"type", "chi"},
                                  {"weight", p.weight},
                                  {"generators", p.generators},
                                  {"value", p.value.str()}};
          },
          [](const BasisPayload& p) {
            nlohmann::json elements = nlohmann::json::array();
            for (const Commutator& element : p.elements)
              elements.push_back({{"weight", element.weight()},
                                  {"text", to_string(element)},
                                  {"tree", commutator_tree(element)}});
            return nlohmann::json{{"type", "basis"},
                                  {"generators", p.generators},
                                  {"max_weight", p.max_weight},
                                  {"elements", std::move(elements)}};
          },
          [](const RankPayload& p) {
            return nlohmann::json{
                {"type", "rank"}, {"kind", p.kind}, {"report", rank_report_json(p.report)}};
          },
          [](const VerifyPayload& p) {
            nlohmann::json reports = nlohmann::json::array();
            for (const VerificationReport& report : p.reports)
              reports.push_back(verification_report_json(report));
            return nlohmann::json{{"type", "verify"}, {"reports", std::move(reports)}};
          },
          [](const TablePayload& p) {
            nlohmann::json cells = nlohmann::json::array();
            for (const TableCell& cell : p.cells) {
              nlohmann::json entry{{"n", cell.n}, {"c", cell.c}, {"m", cell.m}};
              if (cell.rank) entry["rank"] = cell.rank->str();
              if (!cell.note.empty()) entry["note"] = cell.note;
              cells.push_back(std::move(entry));
            }
            return nlohmann::json{{"type", "table"}, {"kind", p.kind}, {"cells", std::move(cells)}};
          },
      },
      payload);
}

Payload payload_from_json(const nlohmann::json& value) {
  const std::string type = value.at("type").get<std::string>();
  if (type == "chi") {
    ChiPayload p;
    p.weight = value.at("weight").get<int>();
    p.generators = value.at("generators").get<int>();
    p.value = Int(value.at("value").get<std::string>());
    return p;
  }
  if (type == "basis") {
    BasisPayload p;
    p.generators = value.at("generators").get<int>();
    p.max_weight = value.at("max_weight").get<int>();
    for (const auto& entry : value.at("elements"))
      p.elements.push_back(commutator_from_tree(entry.at("tree")));
    return p;
  }
  if (type == "rank") {
    RankPayload p;
    p.kind = value.at("kind").get<std::string>();
    p.report = rank_report_from_json(value.at("report"));
    return p;
  }
  if (type == "verify") {
    VerifyPayload p;
    for (const auto& entry : value.at("reports"))
      p.reports.push_back(verification_report_from_json(entry));
    return p;
  }
  if (type == "table") {
    TablePayload p;
    p.kind = value.at("kind").get<std::string>();
    for (const auto& entry : value.at("cells")) {
      TableCell cell;
      cell.n = entry.at("n").get<int>();
      cell.c = entry.at("c").get<int>();
      cell.m = entry.at("m").get<int>();
      if (entry.contains("rank")) cell.rank = Int(entry.at("rank").get<std::string>());
      if (entry.contains("note")) cell.note = entry.at("note").get<std::string>();
      p.cells.push_back(std::move(cell));
    }
    return p;
  }
  throw std::invalid_argument("unknown payload type: " + type);
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format: " + name + " (expected text, json or csv)");
}

const char* to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return "text";
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
  }
  throw std::invalid_argument("unknown output format");
}

nlohmann::json commutator_tree(const Commutator& c) {
  if (c.is_generator()) return c.generator_index();
  return nlohmann::json::array({commutator_tree(c.left()), commutator_tree(c.right())});
}

Commutator commutator_from_tree(const nlohmann::json& tree) {
  if (tree.is_number_integer()) return Commutator::generator(tree.get<int>());
  if (tree.is_array() && tree.size() == 2)
    return Commutator::bracket(commutator_from_tree(tree[0]), commutator_from_tree(tree[1]));
  throw std::invalid_argument("commutator tree must be an index or a pair: " + tree.dump());
}

nlohmann::json document_to_json(const OutputDocument& document) {
  return {{"schema_version", document.schema_version},
          {"command", document.command},
          {"parameters", document.parameters},
          {"payload", payload_json(document.payload)}};
}

OutputDocument document_from_json(const nlohmann::json& value) {
  OutputDocument document;
  document.schema_version = value.at("schema_version").get<std::string>();
  document.command = value.at("command").get<std::string>();
  document.parameters = value.at("parameters").get<std::map<std::string, std::string>>();
  document.payload = payload_from_json(value.at("payload"));
  return document;
}

std::string emit_document(const OutputDocument& document, OutputFormat format) {
  switch (format) {
    case OutputFormat::text: return render_text(document);
    case OutputFormat::json: return document_to_json(document).dump(2) + "\n";
    case OutputFormat::csv: return render_csv(document);
  }
  throw std::invalid_argument("unknown output format");
}

}  // namespace nilmult
