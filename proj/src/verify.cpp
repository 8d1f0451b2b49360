#include "chromapos/verify.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>

#include "chromapos/csf.hpp"
#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"
#include "chromapos/ncsym.hpp"
#include "chromapos/rim_hooks.hpp"
#include "chromapos/tableaux.hpp"

#ifndef CHROMAPOS_DEFAULT_DATA_DIR
#define CHROMAPOS_DEFAULT_DATA_DIR "data"
#endif

namespace chromapos::verify {

bool VerifyReport::all_passed() const { return failure_count() == 0; }

int VerifyReport::failure_count() const {
  int n = 0;
  for (const auto& r : records) {
    if (r.status == CheckStatus::Fail) ++n;
  }
  return n;
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

std::string default_data_dir() {
  const char* env = std::getenv("CHROMAPOS_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
  return CHROMAPOS_DEFAULT_DATA_DIR;
}

SymFn load_golden_terms(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open golden file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return symfn_from_text(buffer.str());
}

std::vector<std::pair<std::string, Graph>> test_corpus(int max_vertices) {
  std::vector<std::pair<std::string, Graph>> all;
  for (int n = 1; n <= 8; ++n) all.emplace_back("P" + std::to_string(n), path(n));
  for (int n = 3; n <= 8; ++n) all.emplace_back("C" + std::to_string(n), cycle(n));
  for (int n = 2; n <= 5; ++n) all.emplace_back("K" + std::to_string(n), complete(n));
  all.emplace_back("claw", claw());
  all.emplace_back("bull", bull());
  all.emplace_back("net", net());
  all.emplace_back("fork", fork());
  all.emplace_back("S", s_graph());
  for (int a = 3; a <= 6; ++a) {
    for (int b = 1; a + b <= 8; ++b) {
      all.emplace_back("T(" + std::to_string(a) + "," + std::to_string(b) + ")", tadpole(a, b));
    }
  }
  all.emplace_back("P(4,3)", path_with_leaf(4, 3));
  all.emplace_back("P(5,2)", path_with_leaf(5, 2));
  all.emplace_back("P(5,3)", path_with_leaf(5, 3));
  all.emplace_back("P(6,3)", path_with_leaf(6, 3));
  all.emplace_back("T(4,1)-twin", twin(tadpole(4, 1), 4));
  all.emplace_back("T(4,2)-twin", twin(tadpole(4, 2), 4));
  all.emplace_back("fork-twin", twin(fork(), 3));
  all.emplace_back("fork-clan2", clan(fork(), 3, 2));
  all.emplace_back("H1", hb_graph(1));
  all.emplace_back("H2", hb_graph(2));

  std::vector<std::pair<std::string, Graph>> out;
  for (auto& item : all) {
    if (item.second.vertex_count() <= max_vertices) out.push_back(std::move(item));
  }
  return out;
}

namespace {

using RunBody = std::function<void(std::string& expected, std::string& actual)>;

struct Check {
  std::string id;
  int section;
  int criterion;
  RunBody run;
};

std::string describe_positivity(const PositivityResult& r, Basis basis) {
  if (r.positive) return "POSITIVE";
  return "NOT POSITIVE (witness " + to_string(r.witness->second) + " " +
         basis_char(basis) + r.witness->first.to_text() + ")";
}

// Expected/actual as full term listings; equal text means pass.
void compare_symfn(const SymFn& reference, const SymFn& computed, std::string& expected,
                   std::string& actual) {
  expected = to_text(reference);
  actual = to_text(computed);
}

long long brute_coloring_count(const Graph& g, int colors) {
  std::function<long long(int, std::vector<std::uint64_t>&)> rec =
      [&](int v, std::vector<std::uint64_t>& classes) -> long long {
    if (v > g.vertex_count()) return 1;
    long long total = 0;
    std::uint64_t nbrs = g.neighbors_mask(v);
    for (auto& cls : classes) {
      if ((cls & nbrs) != 0) continue;
      cls |= std::uint64_t{1} << v;
      total += rec(v + 1, classes);
      cls &= ~(std::uint64_t{1} << v);
    }
    return total;
  };
  std::vector<std::uint64_t> classes(static_cast<std::size_t>(colors), 0);
  return rec(1, classes);
}

std::vector<Partition> fork_six_partitions(int k) {
  return {Partition::with_ones({3, 2}, k),    Partition::with_ones({3}, k + 2),
          Partition::with_ones({2, 2, 2}, k - 1), Partition::with_ones({2, 2}, k + 1),
          Partition::with_ones({2}, k + 3),   Partition::with_ones({}, k + 5)};
}

Integer exact_div(const Integer& num, long den) {
  if (!mpz_divisible_ui_p(num.get_mpz_t(), static_cast<unsigned long>(den))) {
    fail(ErrorKind::Internal, "expected exact division");
  }
  return num / den;
}

std::vector<std::vector<Integer>> fork_kostka_formula(long k) {
  Integer K = k;
  return {
      {1, K + 1, 2, 2 * K + 2, (K + 3) * (K + 1), exact_div((K + 5) * (K + 3) * (K + 1), 3)},
      {0, 1, 0, 1, K + 3, exact_div((K + 4) * (K + 3), 2)},
      {0, 0, 1, K, exact_div((K + 3) * K, 2), exact_div((K + 5) * (K + 4) * K, 6)},
      {0, 0, 0, 1, K + 2, exact_div((K + 5) * (K + 2), 2)},
      {0, 0, 0, 0, 1, K + 4},
      {0, 0, 0, 0, 0, 1}};
}

std::vector<std::vector<Integer>> fork_inverse_formula(long k) {
  Integer K = k;
  return {
      {1, -K - 1, -2, K - 1, 2 * K + 2, -(K + 2) * (K + 1)},
      {0, 1, 0, -1, -1, K + 3},
      {0, 0, 1, -K, exact_div((K + 1) * K, 2), -exact_div((K + 2) * (K + 1) * K, 6)},
      {0, 0, 0, 1, -K - 2, exact_div((K + 3) * (K + 2), 2)},
      {0, 0, 0, 0, 1, -K - 4},
      {0, 0, 0, 0, 0, 1}};
}

std::string matrix_text(const std::vector<std::vector<Integer>>& m) {
  std::string out;
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out += ' ';
      out += to_string(row[j]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Integer>> parse_matrix_block(std::istream& in, int rows, int cols) {
  std::vector<std::vector<Integer>> m;
  for (int r = 0; r < rows; ++r) {
    std::vector<Integer> row;
    for (int c = 0; c < cols; ++c) {
      std::string token;
      if (!(in >> token)) fail(ErrorKind::ParseError, "truncated matrix golden file");
      row.emplace_back(token, 10);
    }
    m.push_back(std::move(row));
  }
  return m;
}

// File contents with '#' comment lines removed.
std::string load_data_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open golden file: " + path);
  std::string out, line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start != std::string::npos && line[start] == '#') continue;
    out += line;
    out += '\n';
  }
  return out;
}

// The m-expansion of X_{F^{(k)}_w} from the stable-partition counts
// (k+1, 2, 3k+5, k+6, 1) on the five realizable types.
SymFn fork_clan_m_formula(long k) {
  SymFn out(Basis::M);
  auto add = [&out](Partition p, Integer count) {
    out.add_term(p, Rational(count * p.multiplicity_factorial()));
  };
  add(Partition::with_ones({3, 2}, static_cast<int>(k)), Integer(k + 1));
  add(Partition::with_ones({3}, static_cast<int>(k) + 2), Integer(2));
  add(Partition::with_ones({2, 2}, static_cast<int>(k) + 1), Integer(3 * k + 5));
  add(Partition::with_ones({2}, static_cast<int>(k) + 3), Integer(k + 6));
  add(Partition::with_ones({}, static_cast<int>(k) + 5), Integer(1));
  return out;
}

struct CheckSet {
  std::vector<Check> checks;
  std::string data_dir;
  bool deep = false;

  std::string golden_path(const std::string& name) const {
    return data_dir + "/golden/" + name;
  }

  void add(std::string id, int section, int criterion, RunBody run) {
    checks.push_back({std::move(id), section, criterion, std::move(run)});
  }
};

void add_small_closed_forms(CheckSet& s) {
  struct Item {
    const char* id;
    const char* golden;
    std::function<SymFn()> closed;  // may be empty
    std::function<Graph()> graph;
  };
  std::vector<Item> items = {
      {"eq-p3", "x_p3_e.terms", [] { return path_csf(3); }, [] { return path(3); }},
      {"eq-p4", "x_p4_e.terms", [] { return path_csf(4); }, [] { return path(4); }},
      {"eq-c2", "x_c2_e.terms", [] { return cycle_csf(2); }, [] { return cycle(2); }},
      {"eq-c3", "x_c3_e.terms", [] { return cycle_csf(3); }, [] { return cycle(3); }},
      {"eq-c4", "x_c4_e.terms", [] { return cycle_csf(4); }, [] { return cycle(4); }},
      {"eq-xs", "x_s_e.terms", nullptr, [] { return s_graph(); }},
  };
  for (const auto& item : items) {
    std::string golden = s.golden_path(item.golden);
    auto closed = item.closed;
    auto graph = item.graph;
    s.add(item.id, 3, 1, [golden, closed, graph](std::string& expected, std::string& actual) {
      SymFn reference = load_golden_terms(golden);
      SymFn brute = to_basis(csf(graph()), Basis::E);
      expected = to_text(reference);
      if (closed) {
        SymFn cf = closed();
        if (cf != brute) {
          actual = "closed form and brute force disagree:\n" + to_text(cf) + "--\n" + to_text(brute);
          return;
        }
      }
      actual = to_text(brute);
    });
  }
}

void add_wolfe_checks(CheckSet& s) {
  int limit = s.deep ? 10 : 9;
  for (int n = 1; n <= limit; ++n) {
    s.add("wolfe-vs-bruteforce/n=" + std::to_string(n), 3, 2,
          [n](std::string& expected, std::string& actual) {
            compare_symfn(to_basis(csf(path(n)), Basis::E), path_csf(n), expected, actual);
          });
  }
}

void add_os_relation_checks(CheckSet& s) {
  for (int b : {1, 2}) {
    s.add("pc-lem/b=" + std::to_string(b), 3, 3,
          [b](std::string& expected, std::string& actual) {
            Graph g = twin(tadpole(4, b), 4);
            int vp = 5 + b;  // the twin vertex v4'
            bool ok = triangle_relation_check(g, {vp, 5}, {4, 5}, {4, vp});
            expected = "holds";
            actual = ok ? "holds" : "fails";
          });
  }
  struct TabCase { int a, b; };
  for (auto [a, b] : {TabCase{4, 1}, TabCase{5, 1}, TabCase{4, 2}, TabCase{6, 1}}) {
    s.add("eq-tab/a=" + std::to_string(a) + ",b=" + std::to_string(b), 3, 3,
          [a, b](std::string& expected, std::string& actual) {
            bool swap_ok = edge_swap_relation_check(tadpole(a, b), 1, a - 1, a);
            SymFn lhs = tadpole_csf(a, b);
            SymFn rhs = tadpole_csf(a - 1, b + 1) + path_csf(a + b) -
                        multiply(cycle_csf(a - 1), path_csf(b + 1));
            expected = "relation holds; closed forms agree";
            if (!swap_ok) {
              actual = "edge-swap relation fails";
            } else if (lhs != rhs) {
              actual = "closed forms disagree:\n" + to_text(lhs) + "--\n" + to_text(rhs);
            } else {
              actual = expected;
            }
          });
  }
  struct PmnCase { int m, n; };
  for (auto [m, n] : {PmnCase{4, 3}, PmnCase{5, 3}, PmnCase{5, 2}}) {
    s.add("eq-pmn/m=" + std::to_string(m) + ",n=" + std::to_string(n), 3, 3,
          [m, n](std::string& expected, std::string& actual) {
            bool swap_ok = edge_swap_relation_check(path_with_leaf(m, n), n - 1, m + 1, n);
            SymFn closed = path_with_leaf_csf(m, n);
            SymFn brute = to_basis(csf(path_with_leaf(m, n)), Basis::E);
            expected = "relation holds; closed form matches brute force";
            if (!swap_ok) {
              actual = "edge-swap relation fails";
            } else if (closed != brute) {
              actual = "closed form differs from brute force:\n" + to_text(closed) + "--\n" +
                       to_text(brute);
            } else {
              actual = expected;
            }
          });
  }
  // 25 randomized configurations over the corpus, deterministic seed.
  auto corpus = test_corpus(8);
  std::mt19937 rng(0x5eed);
  int made = 0;
  int attempts = 0;
  while (made < 25 && attempts < 1000) {
    ++attempts;
    const auto& [name, g] = corpus[rng() % corpus.size()];
    bool want_triangle = made % 2 == 0;
    if (want_triangle) {
      std::vector<std::array<int, 3>> triangles;
      for (int u = 1; u <= g.vertex_count(); ++u) {
        for (int v = u + 1; v <= g.vertex_count(); ++v) {
          if (!g.has_edge(u, v)) continue;
          for (int w = v + 1; w <= g.vertex_count(); ++w) {
            if (g.has_edge(u, w) && g.has_edge(v, w)) triangles.push_back({u, v, w});
          }
        }
      }
      if (triangles.empty()) continue;
      auto tri = triangles[rng() % triangles.size()];
      Graph graph = g;
      ++made;
      s.add("os-random/" + std::to_string(made) + "-triangle-" + name, 3, 3,
            [graph, tri](std::string& expected, std::string& actual) {
              bool ok = triangle_relation_check(graph, {tri[0], tri[1]}, {tri[1], tri[2]},
                                                {tri[0], tri[2]});
              expected = "holds";
              actual = ok ? "holds" : "fails";
            });
    } else {
      std::vector<std::array<int, 3>> configs;
      for (int v3 = 1; v3 <= g.vertex_count(); ++v3) {
        for (int v1 = 1; v1 <= g.vertex_count(); ++v1) {
          for (int v2 = v1 + 1; v2 <= g.vertex_count(); ++v2) {
            if (v1 == v3 || v2 == v3) continue;
            if (g.has_edge(v1, v3) && g.has_edge(v2, v3) && !g.has_edge(v1, v2)) {
              configs.push_back({v1, v2, v3});
            }
          }
        }
      }
      if (configs.empty()) continue;
      auto cfg = configs[rng() % configs.size()];
      Graph graph = g;
      ++made;
      s.add("os-random/" + std::to_string(made) + "-swap-" + name, 3, 3,
            [graph, cfg](std::string& expected, std::string& actual) {
              bool ok = edge_swap_relation_check(graph, cfg[0], cfg[1], cfg[2]);
              expected = "holds";
              actual = ok ? "holds" : "fails";
            });
    }
  }
}

void add_t_prime_checks(CheckSet& s) {
  int limit = s.deep ? 6 : 5;
  for (int b = 1; b <= limit; ++b) {
    s.add("eq-t-prime/b=" + std::to_string(b), 3, 4,
          [b](std::string& expected, std::string& actual) {
            SymFn brute = to_basis(csf(twin(tadpole(4, b), 4)), Basis::E);
            compare_symfn(brute, twinned_tadpole4_csf(b), expected, actual);
          });
  }
}

struct CounterexampleRow {
  int family, k, b;
  Partition lambda;
  Integer value;
};

std::vector<CounterexampleRow> load_counterexample_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open golden file: " + path);
  std::vector<CounterexampleRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    CounterexampleRow row;
    std::string lambda_text, value_text;
    if (!(ls >> row.family >> row.k >> row.b >> lambda_text >> value_text)) {
      fail(ErrorKind::ParseError, "bad counterexample golden line: " + line);
    }
    row.lambda = Partition::from_text(lambda_text);
    row.value = Integer(value_text, 10);
    rows.push_back(std::move(row));
  }
  return rows;
}

void add_counterexample_checks(CheckSet& s) {
  std::string path = s.golden_path("counterexample_coefficients.txt");
  int brute_limit = s.deep ? 10 : 9;
  for (const auto& row : load_counterexample_rows(path)) {
    std::string id = "counterexample-coefficients/family" + std::to_string(row.family) +
                     "/k=" + std::to_string(row.k);
    s.add(id, 3, 5, [row](std::string& expected, std::string& actual) {
      expected = to_string(row.value);
      actual = to_string(coefficient(twinned_tadpole4_csf(row.b), Basis::E, row.lambda));
    });
    if (5 + row.b <= brute_limit) {
      s.add(id + "/brute", 3, 5, [row](std::string& expected, std::string& actual) {
        expected = to_string(row.value);
        SymFn brute = csf(twin(tadpole(4, row.b), 4));
        actual = to_string(coefficient(brute, Basis::E, row.lambda));
      });
    }
  }
}

void add_tadpole_epos_checks(CheckSet& s) {
  int brute_limit = s.deep ? 10 : 9;
  for (int a = 3; a <= 6; ++a) {
    for (int b = 1; b <= 4; ++b) {
      std::string suffix = "a=" + std::to_string(a) + ",b=" + std::to_string(b);
      s.add("tadpole-epos/closed/" + suffix, 3, 6,
            [a, b](std::string& expected, std::string& actual) {
              expected = "POSITIVE";
              actual = describe_positivity(is_positive(tadpole_csf(a, b), Basis::E), Basis::E);
            });
      if (a + b <= brute_limit) {
        s.add("tadpole-epos/brute/" + suffix, 3, 6,
              [a, b](std::string& expected, std::string& actual) {
                expected = "POSITIVE";
                SymFn x = csf(tadpole(a, b));
                actual = describe_positivity(is_positive(x, Basis::E), Basis::E);
              });
      }
    }
  }
}

void add_gs_chain_checks(CheckSet& s) {
  struct Pair { int a, b; };
  for (auto [a, b] : {Pair{3, 0}, Pair{4, 0}, Pair{5, 0}, Pair{6, 0}, Pair{3, 1}, Pair{4, 1},
                      Pair{3, 2}, Pair{4, 2}, Pair{5, 3}}) {
    s.add("gs-chain/a=" + std::to_string(a) + ",b=" + std::to_string(b), 2, 7,
          [a, b](std::string& expected, std::string& actual) {
            expected = "(e)-positive at every stage";
            actual = verify_gs_chain(a, b) ? expected : "a stage has a negative class sum";
          });
  }
}

void add_fork_checks(CheckSet& s) {
  std::string xf1 = s.golden_path("x_fork_e.terms");
  s.add("eq-xf1", 4, 8, [xf1](std::string& expected, std::string& actual) {
    compare_symfn(load_golden_terms(xf1), to_basis(csf(fork()), Basis::E), expected, actual);
  });

  int am_limit = s.deep ? 3 : 2;
  for (int k = 1; k <= am_limit; ++k) {
    std::string golden = s.golden_path("eq_am_k" + std::to_string(k) + "_m.terms");
    bool from_golden = k <= 2;
    s.add("eq-am/k=" + std::to_string(k), 4, 8,
          [k, golden, from_golden](std::string& expected, std::string& actual) {
            SymFn reference = from_golden ? load_golden_terms(golden) : fork_clan_m_formula(k);
            if (from_golden && reference != fork_clan_m_formula(k)) {
              expected = to_text(reference);
              actual = "golden file disagrees with the count formula";
              return;
            }
            compare_symfn(reference, csf(clan(fork(), 3, k)), expected, actual);
          });
  }

  int matrix_limit = s.deep ? 6 : 5;
  for (int k = 1; k <= matrix_limit; ++k) {
    bool from_golden = k <= 5;
    std::string golden = s.golden_path("kostka_fork_k" + std::to_string(k) + ".txt");
    s.add("kostka-matrix-fork/k=" + std::to_string(k), 4, 8,
          [k, golden, from_golden](std::string& expected, std::string& actual) {
            auto formula = fork_kostka_formula(k);
            auto inverse_formula = fork_inverse_formula(k);
            if (from_golden) {
              std::istringstream in(load_data_text(golden));
              auto gk = parse_matrix_block(in, 6, 6);
              auto gi = parse_matrix_block(in, 6, 6);
              if (gk != formula || gi != inverse_formula) {
                expected = matrix_text(gk) + "--\n" + matrix_text(gi);
                actual = "golden file disagrees with transcribed closed forms";
                return;
              }
            }
            auto parts = fork_six_partitions(k);
            std::vector<std::vector<Integer>> computed(6, std::vector<Integer>(6, 0));
            for (int i = 0; i < 6; ++i) {
              for (int j = 0; j < 6; ++j) {
                computed[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Integer(
                    static_cast<long>(kostka(parts[static_cast<std::size_t>(i)],
                                             parts[static_cast<std::size_t>(j)])));
              }
            }
            const auto& ordering = partitions_of(k + 5);
            std::vector<std::vector<Integer>> inv_computed;
            for (int i = 0; i < 6; ++i) {
              auto row = inverse_kostka_row(parts[static_cast<std::size_t>(i)], ordering);
              std::vector<Integer> entries;
              for (int j = 0; j < 6; ++j) {
                std::size_t col = 0;
                while (ordering[col] != parts[static_cast<std::size_t>(j)]) ++col;
                entries.push_back(to_integer(row[col]));
              }
              inv_computed.push_back(std::move(entries));
            }
            expected = matrix_text(formula) + "--\n" + matrix_text(inverse_formula);
            actual = matrix_text(computed) + "--\n" + matrix_text(inv_computed);
          });
  }

  int xf_limit = s.deep ? 3 : 2;
  for (int k = 1; k <= xf_limit; ++k) {
    bool from_golden = k <= 2;
    std::string golden = s.golden_path("fork_clan_s_k" + std::to_string(k) + ".terms");
    s.add("eq-XF/k=" + std::to_string(k), 4, 8,
          [k, golden, from_golden](std::string& expected, std::string& actual) {
            SymFn closed = fork_clan_schur_closed_form(k);
            if (from_golden) {
              SymFn reference = load_golden_terms(golden);
              if (reference != closed) {
                expected = to_text(reference);
                actual = "closed form disagrees with golden file:\n" + to_text(closed);
                return;
              }
            }
            compare_symfn(closed, to_basis(csf(clan(fork(), 3, k)), Basis::S), expected, actual);
          });
  }

  for (int k = 1; k <= 10; ++k) {
    s.add("eq-XF-negativity/k=" + std::to_string(k), 4, 8,
          [k](std::string& expected, std::string& actual) {
            Integer want = Integer(-2) * factorial(k + 1);
            expected = to_string(want);
            Partition lambda = Partition::with_ones({2, 2, 2}, k - 1);
            actual = to_string(coefficient(fork_clan_schur_closed_form(k), Basis::S, lambda));
          });
  }
}

void add_tabloid_checks(CheckSet& s) {
  int limit = s.deep ? 8 : 7;
  for (const auto& [name, g] : test_corpus(limit)) {
    Graph graph = g;
    s.add("tabloid-coefficient/" + name, 4, 9,
          [graph](std::string& expected, std::string& actual) {
            SymFn schur = to_basis(csf(graph), Basis::S);
            std::string want, got;
            for (const Partition& lambda : partitions_of(graph.vertex_count())) {
              Rational via_conversion = coefficient(schur, Basis::S, lambda);
              Integer via_tabloids = schur_coeff_via_tabloids(graph, lambda);
              want += lambda.to_text() + ": " + to_string(via_conversion) + "\n";
              got += lambda.to_text() + ": " + to_string(via_tabloids) + "\n";
            }
            expected = want;
            actual = got;
          });
  }
  for (int k = 1; k <= 4; ++k) {
    s.add("tabloid-count/k=" + std::to_string(k), 4, 9,
          [k](std::string& expected, std::string& actual) {
            StablePartitionCensus census = stable_partition_census(clan(fork(), 3, k));
            Partition shape = Partition::with_ones({2, 2, 2}, k - 1);
            int count = 0;
            bool all_negative = true;
            for (const auto& t : enumerate_special_rim_hook_tabloids(shape)) {
              if (census.count_of(t.hook_type()) == 0) continue;
              ++count;
              if (t.sign() != -1) all_negative = false;
            }
            expected = "2 realizable tabloids, each sign -1";
            actual = std::to_string(count) + " realizable tabloids, " +
                     (all_negative ? "each sign -1" : "not all sign -1");
          });
  }
}

void add_property_checks(CheckSet& s) {
  int kostka_limit = s.deep ? 9 : 8;
  s.add("property/kostka-unitriangular", 2, 10,
        [kostka_limit](std::string& expected, std::string& actual) {
          expected = "K(l,mu) != 0 implies mu <= l; K(l,l) = 1";
          for (int n = 1; n <= kostka_limit; ++n) {
            for (const Partition& l : partitions_of(n)) {
              if (kostka(l, l) != 1) {
                actual = "K(l,l) != 1 at " + l.to_text();
                return;
              }
              for (const Partition& mu : partitions_of(n)) {
                if (kostka(l, mu) != 0 && !dominates(l, mu)) {
                  actual = "nonzero non-dominated pair " + l.to_text() + ", " + mu.to_text();
                  return;
                }
              }
            }
          }
          actual = expected;
        });

  s.add("property/hlf-vs-syt", 2, 10, [kostka_limit](std::string& expected, std::string& actual) {
    expected = "f^lambda = K(lambda, 1^n) for n <= " + std::to_string(kostka_limit);
    for (int n = 1; n <= kostka_limit; ++n) {
      Partition ones = Partition::rectangle(1, n);
      for (const Partition& l : partitions_of(n)) {
        if (num_standard_tableaux(l) != Integer(static_cast<long>(kostka(l, ones)))) {
          actual = "mismatch at " + l.to_text();
          return;
        }
      }
    }
    actual = expected;
  });

  s.add("property/conjugate-involution", 2, 10, [](std::string& expected, std::string& actual) {
    expected = "conjugate is an involution for n <= 12";
    for (int n = 0; n <= 12; ++n) {
      for (const Partition& l : partitions_of(n)) {
        if (conjugate(conjugate(l)) != l) {
          actual = "fails at " + l.to_text();
          return;
        }
      }
    }
    actual = expected;
  });

  s.add("property/tabloid-inverse-kostka", 2, 10, [](std::string& expected, std::string& actual) {
    expected = "signed tabloid sums equal inverse Kostka entries for n <= 6";
    for (int n = 1; n <= 6; ++n) {
      const auto& parts = partitions_of(n);
      const KostkaTables& t = kostka_tables(n);
      for (std::size_t shape = 0; shape < parts.size(); ++shape) {
        std::map<Partition, long long, TermOrder> sums;
        for (const auto& tab : enumerate_special_rim_hook_tabloids(parts[shape])) {
          sums[tab.hook_type()] += tab.sign();
        }
        for (std::size_t type = 0; type < parts.size(); ++type) {
          long long sum = sums.count(parts[type]) ? sums[parts[type]] : 0;
          if (t.inverse[type][shape] != Rational(static_cast<long>(sum))) {
            actual = "mismatch at shape " + parts[shape].to_text() + ", type " +
                     parts[type].to_text();
            return;
          }
        }
      }
    }
    actual = expected;
  });

  int roundtrip_degree = s.deep ? 9 : 8;
  s.add("property/roundtrip", 2, 10, [roundtrip_degree](std::string& expected, std::string& actual) {
    expected = "200 random elements round-trip through every basis pair";
    std::mt19937 gen(4093);
    Basis bases[] = {Basis::M, Basis::E, Basis::S};
    for (int trial = 0; trial < 200; ++trial) {
      SymFn f(bases[gen() % 3]);
      int terms = 1 + static_cast<int>(gen() % 4);
      for (int t = 0; t < terms; ++t) {
        int degree = 1 + static_cast<int>(gen() % static_cast<unsigned>(roundtrip_degree));
        const auto& parts = partitions_of(degree);
        long num = static_cast<long>(gen() % 19) - 9;
        long den = 1 + static_cast<long>(gen() % 3);
        if (num == 0) num = 1;
        f.add_term(parts[gen() % parts.size()], make_rational(num, den));
      }
      for (Basis b2 : bases) {
        if (to_basis(to_basis(f, b2), f.basis()) != f) {
          actual = "round trip failed on trial " + std::to_string(trial);
          return;
        }
      }
    }
    actual = expected;
  });

  int pair_budget = s.deep ? 11 : 10;
  s.add("property/multiplicativity", 2, 10, [pair_budget](std::string& expected, std::string& actual) {
    expected = "X_{G+H} = X_G * X_H on 20 random pairs";
    auto corpus = test_corpus(8);
    std::mt19937 gen(77101);
    int done = 0;
    while (done < 20) {
      const auto& [na, ga] = corpus[gen() % corpus.size()];
      const auto& [nb, gb] = corpus[gen() % corpus.size()];
      if (ga.vertex_count() + gb.vertex_count() > pair_budget) continue;
      SymFn lhs = to_basis(csf(disjoint_union(ga, gb)), Basis::E);
      SymFn rhs = multiply(csf(ga), csf(gb));
      if (lhs != rhs) {
        actual = "fails on " + na + " + " + nb;
        return;
      }
      ++done;
    }
    actual = expected;
  });

  int image_limit = s.deep ? 8 : 7;
  for (const auto& [name, g] : test_corpus(image_limit)) {
    Graph graph = g;
    s.add("property/ncsym-image/" + name, 2, 10,
          [graph](std::string& expected, std::string& actual) {
            SymFn via_ncsym = commutative_image(to_e_basis(y_graph(graph)));
            SymFn via_csf = to_basis(csf(graph), Basis::E);
            compare_symfn(via_csf, via_ncsym, expected, actual);
          });
  }

  int color_limit = s.deep ? 6 : 5;
  for (const auto& [name, g] : test_corpus(8)) {
    Graph graph = g;
    s.add("property/chromatic-polynomial/" + name, 2, 10,
          [graph, color_limit](std::string& expected, std::string& actual) {
            SymFn x = csf(graph);
            std::string want, got;
            for (int n = 0; n <= color_limit; ++n) {
              want += std::to_string(brute_coloring_count(graph, n)) + " ";
              got += to_string(principal_specialization_count(x, n)) + " ";
            }
            expected = want;
            actual = got;
          });
  }

  s.add("property/epos-implies-spos", 2, 10, [](std::string& expected, std::string& actual) {
    expected = "every e-positive corpus graph is s-positive";
    for (const auto& [name, g] : test_corpus(8)) {
      SymFn x = csf(g);
      if (is_positive(x, Basis::E).positive && !is_positive(x, Basis::S).positive) {
        actual = "fails on " + name;
        return;
      }
    }
    actual = expected;
  });
}

struct WitnessRow {
  int k;
  std::string text;  // e.g. "-4 s[2,2,2]"
};

std::vector<WitnessRow> load_witness_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open golden file: " + path);
  std::vector<WitnessRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream ls(line);
    std::string family, coeff, term;
    int k = 0;
    if (!(ls >> family >> k >> coeff >> term) || family != "fork-clan") {
      fail(ErrorKind::ParseError, "bad witness golden line: " + line);
    }
    rows.push_back({k, coeff + " " + term});
  }
  return rows;
}

void add_s_positivity_checks(CheckSet& s) {
  for (int b = 1; b <= 4; ++b) {
    s.add("s-positivity/twin-tadpole/b=" + std::to_string(b), 4, 11,
          [b](std::string& expected, std::string& actual) {
            expected = "POSITIVE";
            SymFn x = csf(twin(tadpole(4, b), 4));
            actual = describe_positivity(is_positive(x, Basis::S), Basis::S);
          });
  }
  for (const auto& row : load_witness_rows(s.golden_path("s_positivity_witnesses.txt"))) {
    if (row.k > 2) continue;
    s.add("s-positivity/fork-clan/k=" + std::to_string(row.k), 4, 11,
          [row](std::string& expected, std::string& actual) {
            expected = "NOT POSITIVE (witness " + row.text + ")";
            SymFn x = csf(clan(fork(), 3, row.k));
            actual = describe_positivity(is_positive(x, Basis::S), Basis::S);
          });
  }
}

void verify_embedded_constants(const CheckSet& s) {
  struct Item {
    const char* golden;
    std::function<Graph()> graph;
  };
  std::vector<Item> items = {
      {"x_s_e.terms", [] { return s_graph(); }},
      {"x_c2_e.terms", [] { return cycle(2); }},
      {"x_c3_e.terms", [] { return cycle(3); }},
      {"x_c4_e.terms", [] { return cycle(4); }},
      {"x_p3_e.terms", [] { return path(3); }},
      {"x_p4_e.terms", [] { return path(4); }},
  };
  for (const auto& item : items) {
    SymFn reference = load_golden_terms(s.golden_path(item.golden));
    SymFn brute = to_basis(csf(item.graph()), Basis::E);
    if (reference != brute) {
      fail(ErrorKind::Internal,
           std::string("embedded constant expansion disagrees with brute force: ") +
               item.golden);
    }
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& options) {
  CheckSet set;
  set.data_dir = options.data_dir.empty() ? default_data_dir() : options.data_dir;
  set.deep = options.deep;

  verify_embedded_constants(set);

  add_small_closed_forms(set);
  add_wolfe_checks(set);
  add_os_relation_checks(set);
  add_t_prime_checks(set);
  add_counterexample_checks(set);
  add_tadpole_epos_checks(set);
  add_gs_chain_checks(set);
  add_fork_checks(set);
  add_tabloid_checks(set);
  add_property_checks(set);
  add_s_positivity_checks(set);

  VerifyReport report;
  for (const Check& check : set.checks) {
    if (options.section != 0 && check.section != options.section) continue;
    if (options.criterion != 0 && check.criterion != options.criterion) continue;
    CheckRecord record;
    record.id = check.id;
    record.section = check.section;
    record.criterion = check.criterion;
    auto start = std::chrono::steady_clock::now();
    try {
      check.run(record.expected, record.actual);
      record.status = record.expected == record.actual ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const std::exception& e) {
      record.status = CheckStatus::Fail;
      record.actual = std::string("exception: ") + e.what();
    }
    record.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace chromapos::verify
