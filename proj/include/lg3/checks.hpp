#ifndef LG3_CHECKS_HPP
#define LG3_CHECKS_HPP

#include <string>
#include <vector>

#include "lg3/graph.hpp"

namespace lg3 {

using IntMatrix = std::vector<std::vector<int>>;

struct CheckFailure {
    std::string instance;  // which input or index broke
    std::string relation;  // the inequality or identity expected
    std::string values;    // the numbers actually seen
};

struct CheckReport {
    std::string name;
    int instances = 0;       // elementary assertions evaluated
    int not_applicable = 0;  // inputs where the hypothesis did not hold
    std::vector<CheckFailure> failures;
    bool passed() const { return failures.empty(); }
};

// Eigenvalue inequalities for sums of real symmetric matrices, 1-based
// indices: the upper form lambda_i(A+B) <= lambda_{i-j+1}(A) + lambda_j(B)
// needs i >= j, the lower form lambda_i(A+B) >= lambda_{i-j+n}(A) +
// lambda_j(B) needs i <= j; both run when i == j. Float comparison with
// kPropertyTol slack. Throws on shape mismatch or indices outside 1..n.
CheckReport check_courant_weyl(const IntMatrix& a, const IntMatrix& b, int i, int j);
CheckReport check_courant_weyl(const Graph& a, const Graph& b, int i, int j);

// Deleting vertex v: eigenvalues of g-v must interlace those of g.
CheckReport check_interlacing(const Graph& g, int v);

// For a root graph h, when complement(line_graph(h)) is bipartite: its
// spectrum is symmetric about zero, its second-smallest eigenvalue is >= -1,
// and line_graph(h) has at most two positive eigenvalues. Non-bipartite
// complements count as not applicable.
CheckReport check_bipartite_complement_lambda3(const Graph& h);

// lambda_2(complement(line_graph(h))) <= 1, decided exactly.
CheckReport check_cvetkovic_lambda2(const Graph& h);

// The two family sides are complements: complement(cs2(n)) == b3(n) for
// n <= max_n, complement(cs3(m,n,p)) == b4(m,n,p) for m+n-1 <= max_mn, and
// complement(cs1) sits strictly inside b2.
CheckReport check_family_complements(int max_n, int max_mn);

// Odd cycles C_n, n >= 7: they contain an induced P6, lambda_2 > 1, their
// complements dip below -2 and are not line graphs. Plus the C5 facts:
// self-complementary with lambda_3 > 0.
CheckReport check_odd_cycle_facts(int max_n);

}  // namespace lg3

#endif
