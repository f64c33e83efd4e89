#include <bit>
#include <cstdint>
#include <utility>
#include <vector>

#include "lg3/spectra.hpp"

namespace lg3 {

// Berkowitz: division-free char poly via leading principal submatrices.
// `vec` holds the current submatrix's char poly, leading coefficient first.
// Adjacency matrices have zero diagonal and symmetric +-rows, which trims the
// general recurrence: the Toeplitz column is [1, 0, -s0, -s1, ...] with
// s_k = row . M^k . col and row == col^T.
CharPoly char_poly(const Graph& g) {
    const int n = g.n;
    CharPoly p;
    if (n == 0) {
        p.coeffs = {1};
        return p;
    }
    std::vector<mpz_class> vec = {1, 0};  // x - a_00
    for (int r = 2; r <= n; ++r) {
        const int m = r - 1;
        const std::uint64_t mmask = (std::uint64_t{1} << m) - 1;
        std::vector<mpz_class> w(m);
        for (int i = 0; i < m; ++i) w[i] = (g.adj[m] >> i) & 1;
        std::vector<mpz_class> s(m);
        for (int k = 0; k < m; ++k) {
            mpz_class dot = 0;
            std::uint64_t row = g.adj[m] & mmask;
            while (row) {
                dot += w[std::countr_zero(row)];
                row &= row - 1;
            }
            s[k] = dot;
            if (k + 1 < m) {
                std::vector<mpz_class> w2(m);
                for (int i = 0; i < m; ++i) {
                    mpz_class acc = 0;
                    std::uint64_t nb = g.adj[i] & mmask;
                    while (nb) {
                        acc += w[std::countr_zero(nb)];
                        nb &= nb - 1;
                    }
                    w2[i] = acc;
                }
                w.swap(w2);
            }
        }
        std::vector<mpz_class> nv(r + 1);
        for (int i = 0; i <= r; ++i) {
            mpz_class acc = 0;
            for (int j = std::max(0, i - r); j <= std::min(r - 1, i); ++j) {
                const int d = i - j;
                if (d == 0)
                    acc += vec[j];
                else if (d >= 2)
                    acc -= s[d - 2] * vec[j];
            }
            nv[i] = std::move(acc);
        }
        vec.swap(nv);
    }
    p.coeffs.assign(n + 1, 0);
    for (int i = 0; i <= n; ++i) p.coeffs[n - i] = vec[i];
    return p;
}

}  // namespace lg3
