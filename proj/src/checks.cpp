#include <sstream>
#include <stdexcept>

#include "lg3/canonical.hpp"
#include "lg3/checks.hpp"
#include "lg3/families.hpp"
#include "lg3/linegraph.hpp"
#include "lg3/spectra.hpp"

namespace lg3 {

namespace {

std::string num(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

IntMatrix adjacency_matrix(const Graph& g) {
    IntMatrix a(static_cast<std::size_t>(g.n), std::vector<int>(g.n, 0));
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v) a[u][v] = g.has_edge(u, v) ? 1 : 0;
    return a;
}

std::vector<double> matrix_eigenvalues(const IntMatrix& a) {
    std::vector<std::vector<double>> d(a.size());
    for (std::size_t r = 0; r < a.size(); ++r) d[r].assign(a[r].begin(), a[r].end());
    return symmetric_eigenvalues(std::move(d));
}

void require_square_pair(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("matrices differ in dimension");
    for (std::size_t r = 0; r < n; ++r)
        if (a[r].size() != n || b[r].size() != n)
            throw std::invalid_argument("matrices must be square");
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r + 1; c < n; ++c)
            if (a[r][c] != a[c][r] || b[r][c] != b[c][r])
                throw std::invalid_argument("matrices must be symmetric");
}

}  // namespace

CheckReport check_courant_weyl(const IntMatrix& a, const IntMatrix& b, int i, int j) {
    require_square_pair(a, b);
    const int n = static_cast<int>(a.size());
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::out_of_range("courant-weyl indices must lie in 1..n");

    IntMatrix sum(a);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) sum[r][c] += b[r][c];
    const std::vector<double> la = matrix_eigenvalues(a);
    const std::vector<double> lb = matrix_eigenvalues(b);
    const std::vector<double> ls = matrix_eigenvalues(sum);

    CheckReport report;
    report.name = "courant-weyl";
    const auto record = [&](const char* form, double lhs, double rhs, bool ok) {
        ++report.instances;
        if (ok) return;
        std::ostringstream inst;
        inst << "i=" << i << " j=" << j << " n=" << n << " " << form;
        report.failures.push_back({inst.str(),
                                   form[0] == 'u'
                                       ? "lambda_i(A+B) <= lambda_{i-j+1}(A) + lambda_j(B)"
                                       : "lambda_i(A+B) >= lambda_{i-j+n}(A) + lambda_j(B)",
                                   "lhs=" + num(lhs) + " rhs=" + num(rhs)});
    };
    if (i >= j) {
        const double rhs = la[i - j] + lb[j - 1];
        record("upper", ls[i - 1], rhs, ls[i - 1] <= rhs + kPropertyTol);
    }
    if (i <= j) {
        const double rhs = la[i - j + n - 1] + lb[j - 1];
        record("lower", ls[i - 1], rhs, ls[i - 1] >= rhs - kPropertyTol);
    }
    return report;
}

CheckReport check_courant_weyl(const Graph& a, const Graph& b, int i, int j) {
    if (a.n != b.n) throw std::invalid_argument("graphs differ in vertex count");
    return check_courant_weyl(adjacency_matrix(a), adjacency_matrix(b), i, j);
}

CheckReport check_interlacing(const Graph& g, int v) {
    if (g.n < 2) throw std::invalid_argument("interlacing needs at least 2 vertices");
    if (v < 0 || v >= g.n) throw std::out_of_range("vertex out of range");

    std::vector<int> keep;
    for (int u = 0; u < g.n; ++u)
        if (u != v) keep.push_back(u);
    const std::vector<double> lam = eigenvalues_float(g).values;
    const std::vector<double> mu = eigenvalues_float(induced_subgraph(g, keep)).values;

    CheckReport report;
    report.name = "interlacing";
    for (int k = 0; k + 1 < g.n; ++k) {
        ++report.instances;
        if (!(lam[k] >= mu[k] - kPropertyTol))
            report.failures.push_back({"k=" + std::to_string(k + 1),
                                       "lambda_k(G) >= lambda_k(G-v)",
                                       "lhs=" + num(lam[k]) + " rhs=" + num(mu[k])});
        ++report.instances;
        if (!(mu[k] >= lam[k + 1] - kPropertyTol))
            report.failures.push_back({"k=" + std::to_string(k + 1),
                                       "lambda_k(G-v) >= lambda_{k+1}(G)",
                                       "lhs=" + num(mu[k]) + " rhs=" + num(lam[k + 1])});
    }
    return report;
}

CheckReport check_bipartite_complement_lambda3(const Graph& h) {
    CheckReport report;
    report.name = "bipartite-complement";
    const Graph lg = line_graph(h);
    const Graph comp = complement(lg);
    if (!is_bipartite(comp)) {
        report.not_applicable = 1;
        return report;
    }
    ++report.instances;
    if (!spectrum_symmetric_about_zero(comp))
        report.failures.push_back(
            {"complement spectrum", "symmetric about zero", "asymmetric"});
    if (comp.n >= 2) {
        ++report.instances;
        const double second_smallest = eigenvalues_float(comp).values[comp.n - 2];
        if (!(second_smallest >= -1 - kPropertyTol))
            report.failures.push_back({"complement eigenvalue n-1",
                                       "lambda_{n-1}(G) >= -1",
                                       "lhs=" + num(second_smallest)});
    }
    ++report.instances;
    if (!lambda3_nonpositive(lg))
        report.failures.push_back(
            {"line graph", "lambda_3(L(H)) <= 0", "positive third eigenvalue"});
    return report;
}

CheckReport check_cvetkovic_lambda2(const Graph& h) {
    CheckReport report;
    report.name = "cvetkovic";
    ++report.instances;
    if (!lambda2_at_most_one(complement(line_graph(h))))
        report.failures.push_back({"complement of line graph", "lambda_2(G) <= 1",
                                   "second eigenvalue above 1"});
    return report;
}

CheckReport check_family_complements(int max_n, int max_mn) {
    if (max_n + 6 > kMaxVertices || max_mn > kMaxVertices)
        throw std::invalid_argument("family bounds exceed 62 vertices");
    CheckReport report;
    report.name = "family-complements";
    for (int n = 0; n <= max_n; ++n) {
        ++report.instances;
        if (!are_isomorphic(complement(gen_cs2(n)), gen_b3(n)))
            report.failures.push_back({"n=" + std::to_string(n),
                                       "complement(cs2(n)) == b3(n)", "not isomorphic"});
    }
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= m && m + n - 1 <= max_mn; ++n)
            for (int p = 0; p < n; ++p) {
                ++report.instances;
                if (!are_isomorphic(complement(gen_cs3(m, n, p)), gen_b4(m, n, p))) {
                    std::ostringstream inst;
                    inst << "(m,n,p)=(" << m << "," << n << "," << p << ")";
                    report.failures.push_back({inst.str(),
                                               "complement(cs3(m,n,p)) == b4(m,n,p)",
                                               "not isomorphic"});
                }
            }
    const Graph cc = complement(gen_cs1());
    ++report.instances;
    if (!contains_induced(gen_b2(), cc))
        report.failures.push_back(
            {"complement(cs1)", "induced subgraph of b2", "no embedding"});
    ++report.instances;
    if (are_isomorphic(gen_b2(), cc))
        report.failures.push_back(
            {"complement(cs1)", "properly contained in b2", "isomorphic to b2"});
    return report;
}

CheckReport check_odd_cycle_facts(int max_n) {
    if (max_n > kMaxVertices)
        throw std::invalid_argument("cycle bound exceeds 62 vertices");
    CheckReport report;
    report.name = "odd-cycles";
    for (int n = 7; n <= max_n; n += 2) {
        const std::string inst = "n=" + std::to_string(n);
        const Graph cn = cycle(n);
        const Graph cc = complement(cn);
        ++report.instances;
        if (!contains_induced(cn, path(6)))
            report.failures.push_back({inst, "C_n contains induced P6", "no embedding"});
        ++report.instances;
        if (count_roots_greater(char_poly(cn), 1) < 2)
            report.failures.push_back({inst, "lambda_2(C_n) > 1", "at most one root above 1"});
        ++report.instances;
        if (min_eigenvalue_at_least(cc, -2))
            report.failures.push_back(
                {inst, "lambda_n(complement(C_n)) < -2", "bounded below by -2"});
        ++report.instances;
        if (is_line_graph(cc))
            report.failures.push_back(
                {inst, "complement(C_n) is not a line graph", "Krausz partition found"});
    }
    if (max_n >= 5) {
        ++report.instances;
        if (!are_isomorphic(complement(cycle(5)), cycle(5)))
            report.failures.push_back({"n=5", "complement(C_5) == C_5", "not isomorphic"});
        ++report.instances;
        if (lambda3_nonpositive(cycle(5)))
            report.failures.push_back({"n=5", "lambda_3(C_5) > 0", "nonpositive"});
    }
    return report;
}

}  // namespace lg3
