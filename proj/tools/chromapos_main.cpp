#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "chromapos/csf.hpp"
#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"
#include "chromapos/ncsym.hpp"
#include "chromapos/verify.hpp"
#include "json.hpp"

namespace {

using chromapos::Basis;
using chromapos::Error;
using chromapos::ErrorKind;
using chromapos::Graph;
using chromapos::SymFn;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // positivity verdict / verify failures
constexpr int kExitUsage = 2;     // parse and precondition errors
constexpr int kExitGuard = 3;     // size guards

json terms_json(const SymFn& f) {
  json out = json::array();
  for (const auto& [p, c] : f.terms()) {
    out.push_back({{"basis", std::string(1, chromapos::basis_char(f.basis()))},
                   {"partition", p.parts()},
                   {"num", c.get_num().get_str()},
                   {"den", c.get_den().get_str()}});
  }
  return out;
}

json witness_json(const chromapos::PositivityResult& r, Basis basis) {
  if (r.positive) return nullptr;
  return {{"basis", std::string(1, chromapos::basis_char(basis))},
          {"partition", r.witness->first.parts()},
          {"num", r.witness->second.get_num().get_str()},
          {"den", r.witness->second.get_den().get_str()}};
}

std::string witness_term(const chromapos::PositivityResult& r, Basis basis) {
  return chromapos::to_string(r.witness->second) + " " + chromapos::basis_char(basis) +
         r.witness->first.to_text();
}

void print_terms(const SymFn& f) {
  std::string text = chromapos::to_text(f);
  if (text.empty()) text = "0\n";
  std::cout << text;
}

std::string read_text(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) chromapos::fail(ErrorKind::ParseError, "cannot open file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

struct RangeSpec {
  int lo = 0, hi = -1;  // empty when lo > hi
};

RangeSpec parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    chromapos::fail(ErrorKind::ParseError, "range must look like 1..6: " + text);
  }
  RangeSpec out;
  try {
    std::size_t pos = 0;
    out.lo = std::stoi(text.substr(0, dots), &pos);
    if (pos != dots) throw std::invalid_argument(text);
    std::string rest = text.substr(dots + 2);
    out.hi = std::stoi(rest, &pos);
    if (pos != rest.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    chromapos::fail(ErrorKind::ParseError, "range must look like 1..6: " + text);
  }
  return out;
}

int run_csf(const std::string& file, char basis_c, bool json_mode) {
  Graph g = chromapos::load_graph_file(file);
  Basis basis = chromapos::basis_from_char(basis_c);
  SymFn f = chromapos::to_basis(chromapos::csf(g), basis);
  if (json_mode) {
    json out = {{"command", "csf"},
                {"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"basis", std::string(1, basis_c)},
                {"terms", terms_json(f)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_terms(f);
  }
  return kExitOk;
}

int run_convert(const std::string& file, char basis_c, bool json_mode) {
  SymFn f = chromapos::symfn_from_text(read_text(file));
  Basis basis = chromapos::basis_from_char(basis_c);
  SymFn g = chromapos::to_basis(f, basis);
  if (json_mode) {
    json out = {{"command", "convert"},
                {"basis", std::string(1, basis_c)},
                {"terms", terms_json(g)}};
    std::cout << out.dump(2) << "\n";
  } else {
    print_terms(g);
  }
  return kExitOk;
}

int run_transform(const std::string& file, const std::vector<int>& twin_v,
                  const std::vector<int>& clan_vk, const std::string& out_path,
                  bool json_mode) {
  Graph g = chromapos::load_graph_file(file);
  Graph result;
  if (!twin_v.empty()) {
    result = chromapos::twin(g, twin_v[0]);
  } else {
    result = chromapos::clan(g, clan_vk[0], clan_vk[1]);
  }
  std::string text = chromapos::to_graph_file(result);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) chromapos::fail(ErrorKind::ParseError, "cannot write file: " + out_path);
    out << text;
  }
  if (json_mode) {
    json out = {{"command", "transform"},
                {"vertices", result.vertex_count()},
                {"edges", result.edge_count()},
                {"output", out_path.empty() ? "-" : out_path}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_positivity(const std::string& file, char basis_c, bool json_mode) {
  Graph g = chromapos::load_graph_file(file);
  Basis basis = chromapos::basis_from_char(basis_c);
  auto result = chromapos::is_positive(chromapos::csf(g), basis);
  if (json_mode) {
    json out = {{"command", "positivity"},
                {"basis", std::string(1, basis_c)},
                {"positive", result.positive},
                {"witness", witness_json(result, basis)}};
    std::cout << out.dump(2) << "\n";
  } else if (result.positive) {
    std::cout << "POSITIVE\n";
  } else {
    std::cout << "NOT POSITIVE\n";
    std::cout << "witness: " << witness_term(result, basis) << "\n";
  }
  return result.positive ? kExitOk : kExitNegative;
}

int run_scan(const std::string& family, const std::string& range_text, char basis_c,
             bool json_mode) {
  RangeSpec range = parse_range(range_text);
  Basis basis = chromapos::basis_from_char(basis_c);
  if (basis == Basis::M) {
    chromapos::fail(ErrorKind::ParseError, "scan supports bases e and s only");
  }
  const bool tadpole_family = family == "twinned-tadpole4";
  if (!tadpole_family && family != "fork-clan") {
    chromapos::fail(ErrorKind::ParseError, "unknown family: " + family);
  }
  json rows = json::array();
  for (int param = range.lo; param <= range.hi; ++param) {
    SymFn f = tadpole_family ? chromapos::twinned_tadpole4_csf(param)
                             : chromapos::fork_clan_schur_closed_form(param);
    auto result = chromapos::is_positive(f, basis);
    std::string label = (tadpole_family ? "b=" : "k=") + std::to_string(param);
    if (json_mode) {
      rows.push_back({{"param", param},
                      {"positive", result.positive},
                      {"witness", witness_json(result, basis)}});
    } else if (result.positive) {
      std::cout << label << " POSITIVE\n";
    } else {
      std::cout << label << " NOT POSITIVE " << witness_term(result, basis) << "\n";
    }
  }
  if (json_mode) {
    json out = {{"command", "scan"},
                {"family", family},
                {"basis", std::string(1, basis_c)},
                {"rows", rows}};
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int run_verify(const std::string& section, bool deep, bool json_mode,
               const std::string& data_dir) {
  chromapos::verify::VerifyOptions options;
  options.deep = deep;
  options.data_dir = data_dir;
  if (section == "2") {
    options.section = 2;
  } else if (section == "3") {
    options.section = 3;
  } else if (section == "4") {
    options.section = 4;
  } else if (section != "all") {
    chromapos::fail(ErrorKind::ParseError, "unknown section: " + section + " (want 2, 3, 4 or all)");
  }
  auto report = chromapos::verify::run_verification(options);
  if (json_mode) {
    json checks = json::array();
    for (const auto& r : report.records) {
      checks.push_back({{"id", r.id},
                        {"status", chromapos::verify::status_name(r.status)},
                        {"section", r.section},
                        {"criterion", r.criterion},
                        {"expected", r.expected},
                        {"actual", r.actual},
                        {"elapsed_seconds", r.elapsed_seconds}});
    }
    json out = {{"command", "verify-paper"},
                {"section", section},
                {"deep", deep},
                {"checks", checks},
                {"failures", report.failure_count()}};
    std::cout << out.dump(2) << "\n";
  } else {
    char elapsed[32];
    for (const auto& r : report.records) {
      std::snprintf(elapsed, sizeof elapsed, "%.3fs", r.elapsed_seconds);
      std::cout << "[" << chromapos::verify::status_name(r.status) << "] " << r.id << " ("
                << elapsed << ")\n";
      if (r.status == chromapos::verify::CheckStatus::Fail) {
        std::cout << "  expected: " << r.expected << "\n  actual:   " << r.actual << "\n";
      }
    }
    std::cout << report.records.size() << " checks, " << report.failure_count()
              << " failures\n";
  }
  return report.all_passed() ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromapos: exact chromatic symmetric functions, twinning and positivity"};
  app.require_subcommand(1);

  std::string graph_file, terms_file, out_path, family, range_text, section = "all";
  std::string data_dir;
  char basis = 'e';
  bool json_mode = false, deep = false;
  std::vector<int> twin_v, clan_vk;

  auto* cmd_csf = app.add_subcommand("csf", "print X_G in a chosen basis");
  cmd_csf->add_option("graph", graph_file, "graph file ('-' for stdin)")->required();
  cmd_csf->add_option("--basis", basis, "m, e or s")->required();
  cmd_csf->add_flag("--json", json_mode, "JSON output");

  auto* cmd_convert = app.add_subcommand("convert", "change the basis of a term listing");
  cmd_convert->add_option("terms", terms_file, "term listing file ('-' for stdin)")->required();
  cmd_convert->add_option("--to", basis, "m, e or s")->required();
  cmd_convert->add_flag("--json", json_mode, "JSON output");

  auto* cmd_transform = app.add_subcommand("transform", "apply twin or clan to a graph");
  cmd_transform->add_option("graph", graph_file, "graph file ('-' for stdin)")->required();
  auto* twin_opt = cmd_transform->add_option("--twin", twin_v, "vertex to twin");
  twin_opt->expected(1);
  auto* clan_opt = cmd_transform->add_option("--clan", clan_vk, "vertex and k");
  clan_opt->expected(2);
  twin_opt->excludes(clan_opt);
  cmd_transform->add_option("-o,--output", out_path, "output file (default stdout)");
  cmd_transform->add_flag("--json", json_mode, "JSON output");

  auto* cmd_positivity = app.add_subcommand("positivity", "e- or s-positivity verdict for X_G");
  cmd_positivity->add_option("graph", graph_file, "graph file ('-' for stdin)")->required();
  cmd_positivity->add_option("--basis", basis, "e or s")->required();
  cmd_positivity->add_flag("--json", json_mode, "JSON output");

  auto* cmd_scan = app.add_subcommand("scan", "scan a counterexample family");
  cmd_scan->add_option("--family", family, "twinned-tadpole4 or fork-clan")->required();
  cmd_scan->add_option("--range", range_text, "parameter range, e.g. 1..6")->required();
  cmd_scan->add_option("--basis", basis, "e or s")->required();
  cmd_scan->add_flag("--json", json_mode, "JSON output");

  auto* cmd_verify = app.add_subcommand("verify-paper", "run the identity verification suite");
  cmd_verify->add_option("--section", section, "2, 3, 4 or all (default all)");
  cmd_verify->add_flag("--deep", deep, "raise brute-force bounds by one size step");
  cmd_verify->add_flag("--json", json_mode, "JSON output");
  cmd_verify->add_option("--data-dir", data_dir, "golden-file directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_csf->parsed()) return run_csf(graph_file, basis, json_mode);
    if (cmd_convert->parsed()) return run_convert(terms_file, basis, json_mode);
    if (cmd_transform->parsed()) {
      if (twin_v.empty() && clan_vk.empty()) {
        chromapos::fail(ErrorKind::ParseError, "transform needs --twin or --clan");
      }
      return run_transform(graph_file, twin_v, clan_vk, out_path, json_mode);
    }
    if (cmd_positivity->parsed()) return run_positivity(graph_file, basis, json_mode);
    if (cmd_scan->parsed()) return run_scan(family, range_text, basis, json_mode);
    if (cmd_verify->parsed()) return run_verify(section, deep, json_mode, data_dir);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    bool guard = e.kind() == ErrorKind::TooLarge || e.kind() == ErrorKind::DegreeCapExceeded;
    return guard ? kExitGuard : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
