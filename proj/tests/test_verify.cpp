#include "doctest.h"

#include <cstdlib>
#include <set>

#include "chromapos/csf.hpp"
#include "chromapos/error.hpp"
#include "chromapos/guards.hpp"
#include "chromapos/verify.hpp"

using namespace chromapos;

TEST_CASE("every check appears exactly once and ids are unique") {
  verify::VerifyOptions options;
  auto report = verify::run_verification(options);
  std::set<std::string> ids;
  for (const auto& r : report.records) {
    CHECK(ids.insert(r.id).second);
    CHECK((r.section == 2 || r.section == 3 || r.section == 4));
    CHECK(r.criterion >= 1);
    CHECK(r.criterion <= 11);
  }
  // Sections partition the suite.
  std::size_t by_section = 0;
  for (int section : {2, 3, 4}) {
    verify::VerifyOptions o;
    o.section = section;
    by_section += verify::run_verification(o).records.size();
  }
  CHECK(by_section == report.records.size());
}

TEST_CASE("golden loader") {
  SymFn xs = verify::load_golden_terms(verify::default_data_dir() + "/golden/x_s_e.terms");
  CHECK(xs.basis() == Basis::E);
  CHECK(coefficient(xs, Basis::E, Partition({5})) == Rational(50));
  CHECK_THROWS_AS(verify::load_golden_terms("/nonexistent.terms"), Error);
}

TEST_CASE("golden monomial counts convert to the golden schur expansion") {
  for (int k = 1; k <= 2; ++k) {
    SymFn m = verify::load_golden_terms(verify::default_data_dir() + "/golden/eq_am_k" +
                                        std::to_string(k) + "_m.terms");
    SymFn s = verify::load_golden_terms(verify::default_data_dir() + "/golden/fork_clan_s_k" +
                                        std::to_string(k) + ".terms");
    CHECK(to_basis(m, Basis::S) == s);
  }
}

TEST_CASE("corpus names are unique and sizes honored") {
  auto corpus = verify::test_corpus(8);
  std::set<std::string> names;
  for (const auto& [name, g] : corpus) {
    CHECK(names.insert(name).second);
    CHECK(g.vertex_count() <= 8);
  }
  CHECK(verify::test_corpus(5).size() < corpus.size());
}

TEST_CASE("CHROMAPOS_MAX_VERTICES lowers but never raises guards") {
  CHECK(effective_vertex_guard(kCsfMaxVertices) == kCsfMaxVertices);

  setenv("CHROMAPOS_MAX_VERTICES", "5", 1);
  CHECK(effective_vertex_guard(kCsfMaxVertices) == 5);
  CHECK_THROWS_AS(csf(path(6)), Error);
  CHECK(csf(path(5)).terms().size() > 0);

  setenv("CHROMAPOS_MAX_VERTICES", "99", 1);
  CHECK(effective_vertex_guard(kCsfMaxVertices) == kCsfMaxVertices);

  unsetenv("CHROMAPOS_MAX_VERTICES");
  CHECK(effective_vertex_guard(kCsfMaxVertices) == kCsfMaxVertices);
}
