#ifndef LG3_FAMILIES_HPP
#define LG3_FAMILIES_HPP

#include <string>
#include <vector>

#include "lg3/graph.hpp"

namespace lg3 {

enum class Family { cs1, cs2, cs3, b1, b2, b3, b4 };

const char* family_name(Family f);

struct FamilyParams {
    Family family = Family::cs1;
    int m = 0, n = 0, p = 0;  // only the fields the family uses are meaningful
    bool operator==(const FamilyParams&) const = default;
};

// The CS side is bipartite with line-graph complements; the B side consists
// of line graphs with at most two positive eigenvalues. Parameter rules:
// cs2/b3 take n >= 0; cs3/b4 take p < n <= m with p >= 0 and m,n >= 1.
Graph gen_cs1();
Graph gen_cs2(int n);
Graph gen_cs3(int m, int n, int p);
Graph gen_b1();
Graph gen_b2();
Graph gen_b3(int n);
Graph gen_b4(int m, int n, int p);

// Dispatch on params.family, reading only the parameter fields it uses.
Graph gen_family(const FamilyParams& params);

enum class Verdict { yes, no, undecided };

struct Membership {
    Verdict verdict = Verdict::no;
    FamilyParams witness{};      // set when verdict == yes
    std::vector<int> embedding;  // host vertex per input vertex, when yes
};

// Does g occur as an induced subgraph of a family member? Exhaustive within
// proven parameter bounds (see the generators' monotonicity); inputs beyond
// the n <= 20 search budget come back undecided, never silently no.
Membership member_cs_family(const Graph& g);
Membership member_b_family(const Graph& g);

}  // namespace lg3

#endif
