#include "doctest.h"

#include <random>

#include "chromapos/csf.hpp"
#include "chromapos/error.hpp"
#include "chromapos/graph.hpp"
#include "chromapos/symfunc.hpp"

using namespace chromapos;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

SymFn e_term(std::vector<int> parts, long c) {
  return SymFn::term(Basis::E, P(std::move(parts)), Rational(c));
}

}  // namespace

TEST_CASE("term bookkeeping drops zeros") {
  SymFn f(Basis::E);
  f.add_term(P({2}), Rational(3));
  f.add_term(P({2}), Rational(-3));
  CHECK(f.is_zero());
  f.add_term(P({2, 1}), Rational(1, 2));
  CHECK(f.terms().size() == 1);
}

TEST_CASE("e2 in the schur basis") {
  SymFn e2 = e_term({2}, 1);
  SymFn s = to_basis(e2, Basis::S);
  CHECK(s == SymFn::term(Basis::S, P({1, 1}), Rational(1)));
}

TEST_CASE("fork E-expansion converts to the stable-partition M-expansion") {
  SymFn from_e = to_basis(e_term({5}, 5) + e_term({4, 1}, 7) + e_term({3, 2}, 1) +
                              e_term({3, 1, 1}, 2) + e_term({2, 2, 1}, 1),
                          Basis::M);
  CHECK(from_e == csf(fork()));
}

TEST_CASE("multiply is a part-multiset union in E") {
  CHECK(multiply(e_term({1}, 1), e_term({2, 1}, 1)) == e_term({2, 1, 1}, 1));
  SymFn p3 = csf(path(3));
  SymFn square = multiply(p3, p3);
  SymFn direct = to_basis(csf(disjoint_union(path(3), path(3))), Basis::E);
  CHECK(square == direct);
}

TEST_CASE("multiplication ring laws on random corpus elements") {
  std::mt19937 gen(1234);
  for (int trial = 0; trial < 15; ++trial) {
    auto random_fn = [&gen]() {
      SymFn f(Basis::E);
      int terms = 1 + static_cast<int>(gen() % 3);
      for (int t = 0; t < terms; ++t) {
        int degree = 1 + static_cast<int>(gen() % 6);
        const auto& parts = partitions_of(degree);
        f.add_term(parts[gen() % parts.size()],
                   Rational(static_cast<long>(gen() % 7) - 3));
      }
      return f;
    };
    SymFn a = random_fn(), b = random_fn(), c = random_fn();
    CHECK(multiply(a, b) == multiply(b, a));
    CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    CHECK(multiply(a, SymFn::unit(Basis::E)) == a);
  }
}

TEST_CASE("coefficient extraction") {
  SymFn x = csf(twin(tadpole(4, 1), 4));
  CHECK(coefficient(x, Basis::E, P({3, 3})) == Rational(-6));

  SymFn x2 = csf(twin(tadpole(4, 2), 4));
  CHECK(coefficient(x2, Basis::E, P({3, 3, 1})) == Rational(-4));

  // [m_lambda] e_1^n is the multinomial n!/prod(lambda_i!).
  for (int n = 1; n <= 5; ++n) {
    SymFn power = SymFn::unit(Basis::E);
    for (int i = 0; i < n; ++i) power = multiply(power, e_term({1}, 1));
    for (const Partition& lambda : partitions_of(n)) {
      Integer want = factorial(n);
      for (int p : lambda.parts()) want /= factorial(p);
      CHECK(coefficient(power, Basis::M, lambda) == Rational(want));
    }
  }
}

TEST_CASE("positivity verdicts and witnesses") {
  SymFn tadpole_x = to_basis(csf(tadpole(4, 1)), Basis::E);
  CHECK(is_positive(tadpole_x, Basis::E).positive);

  auto res = is_positive(csf(twin(tadpole(4, 1), 4)), Basis::E);
  CHECK_FALSE(res.positive);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->first == P({3, 3}));
  CHECK(res.witness->second == Rational(-6));

  CHECK(is_positive(SymFn::zero(Basis::E), Basis::E).positive);

  // Tie-break: equal most-negative coefficients pick the earlier partition.
  SymFn tie(Basis::E);
  tie.add_term(P({2, 2}), Rational(-5));
  tie.add_term(P({3, 1}), Rational(-5));
  auto w = is_positive(tie, Basis::E);
  CHECK(w.witness->first == P({3, 1}));
}

TEST_CASE("principal specialization counts colorings") {
  CHECK(principal_specialization_count(csf(path(3)), 2) == Rational(2));
  CHECK(principal_specialization_count(csf(cycle(3)), 3) == Rational(6));

  // Fork at n = 3 against direct enumeration of all 3^5 colorings.
  Graph f = fork();
  long count = 0;
  for (int code = 0; code < 243; ++code) {
    int colors[6] = {0};
    int c = code;
    for (int v = 1; v <= 5; ++v) {
      colors[v] = c % 3;
      c /= 3;
    }
    bool proper = true;
    for (auto [u, v] : f.edges()) {
      if (colors[u] == colors[v]) proper = false;
    }
    if (proper) ++count;
  }
  CHECK(principal_specialization_count(csf(f), 3) == Rational(count));
  CHECK(principal_specialization_count(csf(f), 0) == Rational(0));
}

TEST_CASE("round trips through every basis pair") {
  std::mt19937 gen(99);
  Basis bases[] = {Basis::M, Basis::E, Basis::S};
  for (int trial = 0; trial < 40; ++trial) {
    SymFn f(bases[gen() % 3]);
    int terms = 1 + static_cast<int>(gen() % 4);
    for (int t = 0; t < terms; ++t) {
      int degree = 1 + static_cast<int>(gen() % 8);
      const auto& parts = partitions_of(degree);
      long num = static_cast<long>(gen() % 19) - 9;
      if (num == 0) num = 2;
      f.add_term(parts[gen() % parts.size()], make_rational(num, 1 + (gen() % 3)));
    }
    for (Basis b : bases) {
      CHECK(to_basis(to_basis(f, b), f.basis()) == f);
    }
  }
}

TEST_CASE("degree cap is enforced") {
  SymFn f = SymFn::term(Basis::M, Partition::rectangle(1, 15), Rational(1));
  CHECK_THROWS_AS(to_basis(f, Basis::S), Error);
  // E-basis products beyond the cap are fine; only conversions are guarded.
  SymFn big = multiply(path_csf(20), path_csf(20));
  CHECK(big.max_degree() == 40);
}

TEST_CASE("term listing text form") {
  SymFn f(Basis::E);
  f.add_term(P({3, 1}), Rational(2));
  f.add_term(P({4}), Rational(-1, 2));
  f.add_term(P({2}), Rational(7));
  CHECK(to_text(f) == "-1/2 e[4]\n2 e[3,1]\n7 e[2]\n");
  CHECK(symfn_from_text(to_text(f)) == f);
  CHECK_THROWS_AS(symfn_from_text("1 e[2]\n1 m[1]\n"), Error);
  CHECK_THROWS_AS(symfn_from_text(""), Error);
  CHECK_THROWS_AS(symfn_from_text("x e[2]\n"), Error);
}

TEST_CASE("addition requires matching bases") {
  SymFn e = e_term({2}, 1);
  SymFn m = SymFn::term(Basis::M, P({2}), Rational(1));
  CHECK_THROWS_AS(e += m, Error);
}
