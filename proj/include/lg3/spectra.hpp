#ifndef LG3_SPECTRA_HPP
#define LG3_SPECTRA_HPP

#include <gmpxx.h>

#include <vector>

#include "lg3/graph.hpp"

namespace lg3 {

// Tolerances of the floating-point path only. Sign and threshold decisions
// (root counts, inertia, the lambda predicates) are exact and never use them.
inline constexpr double kJacobiOffdiagStop = 1e-12;  // rotation sweep target
inline constexpr double kSignDeadBand = 1e-9;        // |x| below this reads as 0
inline constexpr double kPropertyTol = 1e-8;         // float inequality slack

// det(xI - A): coeffs[k] multiplies x^k; coeffs[degree()] == 1.
struct CharPoly {
    std::vector<mpz_class> coeffs;
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

CharPoly char_poly(const Graph& g);

// Real roots strictly greater (resp. less) than a, counted with multiplicity.
int count_roots_greater(const CharPoly& p, const mpq_class& a);
int count_roots_less(const CharPoly& p, const mpq_class& a);

struct Inertia {
    int n_pos = 0, n_zero = 0, n_neg = 0;
    bool operator==(const Inertia&) const = default;
};

Inertia inertia(const Graph& g);

bool lambda3_nonpositive(const Graph& g);  // at most two eigenvalues > 0
bool min_eigenvalue_at_least(const Graph& g, const mpq_class& bound);
bool lambda2_at_most_one(const Graph& g);  // at most one eigenvalue > 1

// Exact test that the eigenvalue multiset is closed under negation.
bool spectrum_symmetric_about_zero(const Graph& g);

struct Spectrum {
    std::vector<double> values;  // descending
    double residual_bound = 0;   // max |Av - lambda.v| entry over all pairs
};

Spectrum eigenvalues_float(const Graph& g);

// Same solver for raw symmetric input (e.g. integer +/-1 matrices).
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a,
                                          double* residual_bound = nullptr);

}  // namespace lg3

#endif
