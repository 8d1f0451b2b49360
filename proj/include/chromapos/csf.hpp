#pragma once

#include <map>
#include <vector>

#include "chromapos/graph.hpp"
#include "chromapos/symfunc.hpp"

namespace chromapos {

// Counts of stable partitions by type: a_lambda = number of set partitions of
// V(G) into stable blocks whose block sizes form lambda.
struct StablePartitionCensus {
  int vertex_count = 0;
  std::map<Partition, long long, TermOrder> counts;
  // One list of blocks (vertex labels) per stable partition, kept only when
  // requested and d <= 9.
  std::map<Partition, std::vector<std::vector<std::vector<int>>>, TermOrder> witnesses;

  long long count_of(const Partition& type) const;
};

StablePartitionCensus stable_partition_census(const Graph& g,
                                              bool keep_witnesses = false);

// X_G in the monomial basis via the stable-partition census:
// X_G = sum_lambda a_lambda * (prod_j r_j!) * m_lambda. Guarded at d <= 12.
SymFn csf(const Graph& g);

// Number of proper colorings using color i exactly lambda_i times (i = 1..l);
// equals [m_lambda] csf(g). Guarded at d <= 9.
Integer csf_coloring_oracle(const Graph& g, const Partition& lambda);

using Edge = std::pair<int, int>;

// Checks X_G = X_{G-e1} + X_{G-e2} - X_{G-{e1,e2}} for a triangle e1,e2,e3.
// NotATriangle when the edges do not form one.
bool triangle_relation_check(const Graph& g, Edge e1, Edge e2, Edge e3);

// For e1 = v1v3, e2 = v2v3 in E and e3 = v1v2 not in E, checks
// X_G = X_{(G-e1)+e3} + X_{G-e2} - X_{(G-{e1,e2})+e3}.
bool edge_swap_relation_check(const Graph& g, int v1, int v2, int v3);

// Closed forms, all returned in the E basis.
SymFn path_csf(int n);                    // Wolfe's two-term formula, n <= 40
SymFn cycle_csf(int n);                   // n = 2 gives 2e_2; memoized, n <= 12
SymFn tadpole_csf(int a, int b);          // (a-1)X_P - sum X_C X_P
SymFn path_with_leaf_csf(int m, int n);   // X_{P_{m+1}} + e_1 X_{P_m} - X_{P_n} X_{P_{m-n+1}}
SymFn twinned_tadpole4_csf(int b);        // six-term expansion of X_{T^{<4,b>}_{v4}}
SymFn hb_csf(int b);                      // the intermediate graph H_b

// [s_lambda] X_G via special rim hook tabloids restricted to realizable hook
// types, with N_T = a_{kappa_T} * prod_j r_j!(kappa_T).
Integer schur_coeff_via_tabloids(const Graph& g, const Partition& lambda);

// Schur expansion of X of the fork clan graph F_w^{(k)}, k >= 1.
SymFn fork_clan_schur_closed_form(int k);

// The graph H_b: the twinned tadpole T^{<4,b>}_{v4} minus the edge v4'v5.
Graph hb_graph(int b);

}  // namespace chromapos
