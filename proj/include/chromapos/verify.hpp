#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chromapos/graph.hpp"
#include "chromapos/symfunc.hpp"

namespace chromapos::verify {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckRecord {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string expected;
  std::string actual;
  double elapsed_seconds = 0.0;
  int section = 0;
  int criterion = 0;
};

struct VerifyReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  int failure_count() const;
};

struct VerifyOptions {
  int section = 0;    // 0 = all, else 2, 3 or 4
  int criterion = 0;  // 0 = all, else 1..11
  bool deep = false;  // raise brute-force bounds by one size step
  std::string data_dir;  // empty = default_data_dir()
};

// $CHROMAPOS_DATA_DIR when set, else the directory configured at build time.
std::string default_data_dir();

// Runs the identity/property suite. Re-derives the embedded constant
// expansions (X_S, X_{C_i}, X_{P_3}, X_{P_4}) by brute force first and throws
// Internal on any mismatch with the golden files.
VerifyReport run_verification(const VerifyOptions& options);

// Named graphs used by the randomized and property checks.
std::vector<std::pair<std::string, Graph>> test_corpus(int max_vertices);

SymFn load_golden_terms(const std::string& path);

std::string status_name(CheckStatus s);

}  // namespace chromapos::verify
