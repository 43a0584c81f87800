#include <cstdint>
#include <iostream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilmult/errors.hpp"
#include "nilmult/hall_basis.hpp"
#include "nilmult/io.hpp"
#include "nilmult/multiplier.hpp"
#include "nilmult/witt.hpp"

namespace {

using namespace nilmult;

struct Range {
  int lo = 1;
  int hi = 0;  // lo > hi is an empty range
};

// "3" or "2..5"
Range parse_range(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad range '" + text + "' (expected N or A..B)"); };
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(part, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != part.size() || part.empty()) throw bad();
    return value;
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const int v = to_int(text);
    return {v, v};
  }
  return {to_int(text.substr(0, dots)), to_int(text.substr(dots + 2))};
}

int emit(const OutputDocument& document, const std::string& format) {
  std::cout << emit_document(document, parse_format(format));
  return 0;
}

int exit_code(VerificationStatus status) {
  switch (status) {
    case VerificationStatus::pass: return 0;
    case VerificationStatus::fail: return 1;
    case VerificationStatus::hypothesis_violation: return 2;
  }
  return 2;
}

struct Options {
  int weight = 0;
  int generators = 2;
  int max_weight = 6;
  int n = 0, c = 0, m = 0;
  std::string range_n, range_c, range_m;
  std::string kind, target;
  int trials = 25;
  std::uint64_t seed = 0;
  std::size_t max_elements = kDefaultMaxBasisElements;
  std::string format = "text";
};

int run_chi(const Options& opt) {
  OutputDocument doc;
  doc.command = "chi";
  doc.parameters = {{"weight", std::to_string(opt.weight)},
                    {"generators", std::to_string(opt.generators)}};
  doc.payload = ChiPayload{opt.weight, opt.generators,
                           chi(opt.weight, static_cast<std::int64_t>(opt.generators))};
  return emit(doc, opt.format);
}

int run_basis(const Options& opt) {
  HallBasis basis = enumerate_hall_basis(opt.generators, opt.max_weight, opt.max_elements);
  OutputDocument doc;
  doc.command = "basis";
  doc.parameters = {{"generators", std::to_string(opt.generators)},
                    {"max_weight", std::to_string(opt.max_weight)},
                    {"max_elements", std::to_string(opt.max_elements)}};
  doc.payload = BasisPayload{opt.generators, opt.max_weight, basis.elements()};
  return emit(doc, opt.format);
}

int run_rank(const Options& opt) {
  OutputDocument doc;
  doc.command = "rank";
  doc.parameters = {{"kind", opt.kind},
                    {"n", std::to_string(opt.n)},
                    {"c", std::to_string(opt.c)},
                    {"m", std::to_string(opt.m)}};
  doc.payload = RankPayload{opt.kind, opt.kind == "nilpotent"
                                          ? nilpotent_multiplier_rank(opt.n, opt.c, opt.m)
                                          : polynilpotent_c1_rank(opt.n, opt.c, opt.m)};
  return emit(doc, opt.format);
}

int run_verify(const Options& opt) {
  OutputDocument doc;
  doc.command = "verify";
  doc.parameters["target"] = opt.target;

  VerificationReport report;
  if (opt.target == "hall") {
    doc.parameters["generators"] = std::to_string(opt.generators);
    doc.parameters["max_weight"] = std::to_string(opt.max_weight);
    doc.parameters["max_elements"] = std::to_string(opt.max_elements);
    report = verify_hall_freeness(opt.generators, opt.max_weight, opt.max_elements);
  } else {
    if (opt.n < 1 || opt.c < 1 || opt.m < 1)
      throw std::invalid_argument("target " + opt.target + " needs --n, --c and --m (all >= 1)");
    doc.parameters["n"] = std::to_string(opt.n);
    doc.parameters["c"] = std::to_string(opt.c);
    doc.parameters["m"] = std::to_string(opt.m);
    doc.parameters["max_elements"] = std::to_string(opt.max_elements);
    if (opt.target == "lemma2.2") {
      report = verify_pair_basis_basic(build_multiplier_sets(opt.n, opt.c, opt.m, opt.max_elements));
    } else if (opt.target == "lemma2.4") {
      report =
          verify_cross_brackets_basic(build_multiplier_sets(opt.n, opt.c, opt.m, opt.max_elements));
    } else if (opt.target == "lemma2.3" || opt.target == "lemma2.5") {
      doc.parameters["trials"] = std::to_string(opt.trials);
      doc.parameters["seed"] = std::to_string(opt.seed);
      report = opt.target == "lemma2.3"
                   ? verify_pair_reduction(opt.n, opt.c, opt.m, opt.trials, opt.seed)
                   : verify_cross_reduction(opt.n, opt.c, opt.m, opt.trials, opt.seed);
    } else {  // thm2.6
      report = verify_basis_independence(opt.n, opt.c, opt.m, opt.max_elements);
    }
  }

  const VerificationStatus status = report.status;
  doc.payload = VerifyPayload{{std::move(report)}};
  emit(doc, opt.format);
  return exit_code(status);
}

int run_table(const Options& opt) {
  const Range rn = parse_range(opt.range_n);
  const Range rc = parse_range(opt.range_c);
  const Range rm = parse_range(opt.range_m);

  TablePayload payload;
  payload.kind = opt.kind;
  for (int n = rn.lo; n <= rn.hi; ++n)
    for (int c = rc.lo; c <= rc.hi; ++c)
      for (int m = rm.lo; m <= rm.hi; ++m) {
        TableCell cell;
        cell.n = n;
        cell.c = c;
        cell.m = m;
        try {
          cell.rank = opt.kind == "nilpotent" ? nilpotent_multiplier_rank(n, c, m).rank
                                              : polynilpotent_c1_rank(n, c, m).rank;
        } catch (const std::invalid_argument&) {
          cell.note = "n/a";
        }
        payload.cells.push_back(std::move(cell));
      }

  OutputDocument doc;
  doc.command = "table";
  doc.parameters = {
      {"kind", opt.kind}, {"n", opt.range_n}, {"c", opt.range_c}, {"m", opt.range_m}};
  doc.payload = std::move(payload);
  return emit(doc, opt.format);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multiplier structure of free nilpotent groups"};
  app.require_subcommand(1);

  Options opt;
  const std::vector<std::string> kinds{"nilpotent", "polynilpotent"};
  const std::vector<std::string> targets{"lemma2.2", "lemma2.3", "lemma2.4",
                                         "lemma2.5", "thm2.6",   "hall"};

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "text, json or csv")->capture_default_str();
  };
  auto add_cap = [&](CLI::App* cmd) {
    cmd->add_option("--max-elements", opt.max_elements, "resource cap on basis elements")
        ->capture_default_str();
  };
  auto add_ncm = [&](CLI::App* cmd, bool required) {
    auto* n = cmd->add_option("--n", opt.n, "nilpotency class of the group");
    auto* c = cmd->add_option("--c", opt.c, "multiplier class row");
    auto* m = cmd->add_option("--m", opt.m, "generator count");
    if (required) {
      n->required();
      c->required();
      m->required();
    }
  };

  const CLI::Range positive(1, std::numeric_limits<int>::max());
  const CLI::Range non_negative(0, std::numeric_limits<int>::max());

  auto* chi_cmd = app.add_subcommand("chi", "count basic commutators of one weight");
  chi_cmd->add_option("--weight", opt.weight, "commutator weight")
      ->required()
      ->check(positive);
  chi_cmd->add_option("--generators", opt.generators, "alphabet size")
      ->required()
      ->check(non_negative);
  add_format(chi_cmd);

  auto* basis_cmd = app.add_subcommand("basis", "list basic commutators up to a weight");
  basis_cmd->add_option("--generators", opt.generators, "alphabet size")
      ->required()
      ->check(positive);
  basis_cmd->add_option("--max-weight", opt.max_weight, "largest weight listed")
      ->required()
      ->check(positive);
  add_cap(basis_cmd);
  add_format(basis_cmd);

  auto* rank_cmd = app.add_subcommand("rank", "rank of a multiplier of a free nilpotent group");
  rank_cmd->add_option("kind", opt.kind, "nilpotent or polynilpotent")
      ->required()
      ->check(CLI::IsMember(kinds));
  add_ncm(rank_cmd, true);
  add_format(rank_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "machine-check one structural statement");
  verify_cmd->add_option("target", opt.target, "what to check")
      ->required()
      ->check(CLI::IsMember(targets));
  add_ncm(verify_cmd, false);
  verify_cmd->add_option("--trials", opt.trials, "randomized trials (lemma2.3, lemma2.5)")
      ->capture_default_str();
  verify_cmd->add_option("--seed", opt.seed, "RNG seed")->capture_default_str();
  verify_cmd->add_option("--generators", opt.generators, "alphabet size (hall)")
      ->capture_default_str();
  verify_cmd->add_option("--max-weight", opt.max_weight, "largest weight checked (hall)")
      ->capture_default_str();
  add_cap(verify_cmd);
  add_format(verify_cmd);

  auto* table_cmd = app.add_subcommand("table", "grid of ranks over parameter ranges");
  table_cmd->add_option("kind", opt.kind, "nilpotent or polynilpotent")
      ->required()
      ->check(CLI::IsMember(kinds));
  table_cmd->add_option("--n", opt.range_n, "range, N or A..B")->required();
  table_cmd->add_option("--c", opt.range_c, "range, N or A..B")->required();
  table_cmd->add_option("--m", opt.range_m, "range, N or A..B")->required();
  add_format(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(chi_cmd)) return run_chi(opt);
    if (app.got_subcommand(basis_cmd)) return run_basis(opt);
    if (app.got_subcommand(rank_cmd)) return run_rank(opt);
    if (app.got_subcommand(verify_cmd)) return run_verify(opt);
    return run_table(opt);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
