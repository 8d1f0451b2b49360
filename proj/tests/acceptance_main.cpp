// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <string>

#include "chromapos/verify.hpp"

namespace {

const char* kCriterionTitles[] = {
    "",
    "small closed forms (X_P3, X_P4, X_C2..C4, X_S)",
    "Wolfe path formula vs brute force, n = 1..9",
    "Orellana-Scott triangle and edge-swap relations",
    "twinned-tadpole expansion vs brute force, b = 1..5",
    "counterexample coefficient families, k = 0..2",
    "tadpole e-positivity, 3 <= a <= 6, 1 <= b <= 4",
    "Gebhard-Sagan (e)-positivity certificates",
    "fork pipeline: monomial counts, Kostka block, Schur expansion",
    "tabloid Schur coefficients vs basis conversion",
    "property suites (triangularity, round trips, images, specializations)",
    "s-positivity regression: twinned tadpoles and fork clans",
};

}  // namespace

int main() {
  using chromapos::verify::CheckStatus;
  int failed_criteria = 0;
  double total = 0.0;
  for (int criterion = 1; criterion <= 11; ++criterion) {
    chromapos::verify::VerifyOptions options;
    options.criterion = criterion;
    auto start = std::chrono::steady_clock::now();
    chromapos::verify::VerifyReport report;
    try {
      report = chromapos::verify::run_verification(options);
    } catch (const std::exception& e) {
      std::printf("[FAIL] criterion %2d: %s -- exception: %s\n", criterion,
                  kCriterionTitles[criterion], e.what());
      ++failed_criteria;
      continue;
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    total += elapsed;
    int failures = report.failure_count();
    std::printf("[%s] criterion %2d: %s (%zu checks, %.2fs)\n",
                failures == 0 ? "PASS" : "FAIL", criterion, kCriterionTitles[criterion],
                report.records.size(), elapsed);
    if (failures != 0) {
      ++failed_criteria;
      for (const auto& r : report.records) {
        if (r.status != CheckStatus::Fail) continue;
        std::printf("       failing check %s\n", r.id.c_str());
        std::printf("         expected: %s\n", r.expected.c_str());
        std::printf("         actual:   %s\n", r.actual.c_str());
      }
    }
  }
  std::printf("%d of 11 criteria failed (%.1fs total)\n", failed_criteria, total);
  return failed_criteria == 0 ? 0 : 1;
}
