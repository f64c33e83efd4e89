#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lg3/spectra.hpp"

namespace lg3 {

Inertia inertia(const Graph& g) {
    const CharPoly p = char_poly(g);
    Inertia in;
    while (in.n_zero < p.degree() && p.coeffs[in.n_zero] == 0) ++in.n_zero;
    in.n_pos = count_roots_greater(p, 0);
    in.n_neg = g.n - in.n_pos - in.n_zero;
    return in;
}

bool lambda3_nonpositive(const Graph& g) {
    return count_roots_greater(char_poly(g), 0) <= 2;
}

bool min_eigenvalue_at_least(const Graph& g, const mpq_class& bound) {
    return count_roots_less(char_poly(g), bound) == 0;
}

bool lambda2_at_most_one(const Graph& g) {
    return count_roots_greater(char_poly(g), 1) <= 1;
}

bool spectrum_symmetric_about_zero(const Graph& g) {
    // p(x) and (-1)^n p(-x) agree iff coeffs of parity opposite to n vanish.
    const CharPoly p = char_poly(g);
    for (int k = 0; k <= p.degree(); ++k)
        if ((p.degree() - k) % 2 == 1 && p.coeffs[k] != 0) return false;
    return true;
}

std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a,
                                          double* residual_bound) {
    const int n = static_cast<int>(a.size());
    const std::vector<std::vector<double>> orig = residual_bound ? a
                                                  : std::vector<std::vector<double>>{};
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) v[i][i] = 1.0;

    const auto off_norm = [&] {
        double s = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
        return std::sqrt(2 * s);
    };

    int sweeps = 0;
    while (off_norm() > kJacobiOffdiagStop) {
        if (++sweeps > 100)
            throw std::runtime_error("jacobi: no convergence in 100 sweeps");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p][q];
                if (apq == 0.0) continue;
                const double theta = (a[q][q] - a[p][p]) / (2 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1));
                const double c = 1 / std::sqrt(t * t + 1);
                const double s = t * c;
                for (int k = 0; k < n; ++k) {  // A <- A.J
                    const double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {  // A <- J^T.A
                    const double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {  // V <- V.J
                    const double vkp = v[k][p], vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return a[x][x] > a[y][y]; });

    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = a[order[i]][order[i]];

    if (residual_bound) {
        double worst = 0;
        for (int j : order) {
            for (int i = 0; i < n; ++i) {
                double av = 0;
                for (int k = 0; k < n; ++k) av += orig[i][k] * v[k][j];
                worst = std::max(worst, std::abs(av - a[j][j] * v[i][j]));
            }
        }
        *residual_bound = worst;
    }
    return values;
}

Spectrum eigenvalues_float(const Graph& g) {
    std::vector<std::vector<double>> a(g.n, std::vector<double>(g.n, 0.0));
    for (int u = 0; u < g.n; ++u)
        for (int w = u + 1; w < g.n; ++w)
            if (g.has_edge(u, w)) a[u][w] = a[w][u] = 1.0;
    Spectrum sp;
    sp.values = symmetric_eigenvalues(std::move(a), &sp.residual_bound);
    return sp;
}

}  // namespace lg3
