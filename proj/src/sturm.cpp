#include <algorithm>
#include <utility>
#include <vector>

#include "lg3/spectra.hpp"

namespace lg3 {
namespace {

// Dense rational polynomial, index = degree, no trailing zero coefficients.
using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }  // -1: zero

Poly derivative(const Poly& p) {
    Poly d;
    for (int k = 1; k <= deg(p); ++k) d.push_back(p[k] * k);
    return d;
}

Poly remainder(Poly a, const Poly& b) {
    while (!a.empty() && deg(a) >= deg(b)) {
        const mpq_class f = a.back() / b.back();
        const int shift = deg(a) - deg(b);
        for (int k = 0; k < deg(b); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    return a;
}

Poly divide_exact(Poly a, const Poly& b) {  // precondition: b | a
    Poly q(std::max<int>(0, deg(a) - deg(b) + 1));
    while (!a.empty() && deg(a) >= deg(b)) {
        const mpq_class f = a.back() / b.back();
        const int shift = deg(a) - deg(b);
        q[shift] = f;
        for (int k = 0; k < deg(b); ++k) a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return q;
}

void make_monic(Poly& p) {
    if (p.empty() || p.back() == 1) return;
    const mpq_class lc = p.back();
    for (auto& c : p) c /= lc;
}

Poly poly_gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = remainder(std::move(a), b);
        a = std::move(b);
        b = std::move(r);
    }
    make_monic(a);
    return a;
}

mpq_class eval(const Poly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (int k = deg(p); k >= 0; --k) acc = acc * x + p[k];
    return acc;
}

Poly deflate(const Poly& p, const mpq_class& a) {  // p / (x - a), a a root
    const int d = deg(p);
    Poly q(d);
    q[d - 1] = p[d];
    for (int k = d - 1; k >= 1; --k) q[k - 1] = p[k] + a * q[k];
    return q;
}

// Sturm chain of a squarefree f, remainders rescaled to |lc| == 1 to keep
// coefficient sizes in check (positive scaling preserves all signs).
std::vector<Poly> sturm_chain(const Poly& f) {
    std::vector<Poly> chain{f, derivative(f)};
    while (deg(chain.back()) > 0) {
        Poly r = remainder(chain[chain.size() - 2], chain.back());
        if (r.empty()) break;  // unreachable for squarefree input
        const mpq_class scale = abs(r.back());
        for (auto& c : r) c = -c / scale;
        chain.push_back(std::move(r));
    }
    return chain;
}

int variations(const std::vector<int>& signs) {
    int prev = 0, count = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const std::vector<Poly>& chain, const mpq_class& x) {
    std::vector<int> signs;
    for (const Poly& p : chain) signs.push_back(sgn(eval(p, x)));
    return variations(signs);
}

int variations_at_pos_inf(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    for (const Poly& p : chain) signs.push_back(p.empty() ? 0 : sgn(p.back()));
    return variations(signs);
}

int variations_at_neg_inf(const std::vector<Poly>& chain) {
    std::vector<int> signs;
    for (const Poly& p : chain)
        signs.push_back(p.empty() ? 0
                                  : (deg(p) % 2 ? -sgn(p.back()) : sgn(p.back())));
    return variations(signs);
}

// Counts roots of p in an open half-line with multiplicity: peel gcd layers
// h_{j+1} = gcd(h_j, h_j'), count the distinct roots of each layer's
// squarefree part, and sum. Layer j contributes one per root of multiplicity
// > j, so the sum is the multiplicity total.
template <typename CountDistinct>
int count_with_multiplicity(const CharPoly& cp, const mpq_class& a,
                            CountDistinct count_distinct) {
    Poly h(cp.coeffs.begin(), cp.coeffs.end());
    trim(h);
    int total = 0;
    while (deg(h) >= 1) {
        Poly g = poly_gcd(h, derivative(h));
        Poly f = deg(g) >= 1 ? divide_exact(std::move(h), g) : std::move(h);
        make_monic(f);
        while (deg(f) >= 1 && eval(f, a) == 0) f = deflate(f, a);
        if (deg(f) >= 1) total += count_distinct(sturm_chain(f), a);
        if (deg(g) < 1) break;
        h = std::move(g);
    }
    return total;
}

}  // namespace

int count_roots_greater(const CharPoly& p, const mpq_class& a) {
    return count_with_multiplicity(
        p, a, [](const std::vector<Poly>& chain, const mpq_class& x) {
            return variations_at(chain, x) - variations_at_pos_inf(chain);
        });
}

int count_roots_less(const CharPoly& p, const mpq_class& a) {
    return count_with_multiplicity(
        p, a, [](const std::vector<Poly>& chain, const mpq_class& x) {
            return variations_at_neg_inf(chain) - variations_at(chain, x);
        });
}

}  // namespace lg3
