#include "loopcoh/sweeps.hpp"

#include <algorithm>

namespace loopcoh {

namespace detail {

namespace {

void enumerate_all(const UnstableAlgebra& A, std::size_t g, Monomial& m, int degree, int max_degree,
                   std::vector<std::vector<Monomial>>& out)
{
    if (g == A.num_generators()) {
        out[std::size_t(degree)].push_back(m);
        return;
    }
    const int d = A.generator_degree(g);
    for (unsigned e = 0; degree + int(e) * d <= max_degree && e <= kMaxExponent; ++e) {
        m.set(g, e);
        enumerate_all(A, g + 1, m, degree + int(e) * d, max_degree, out);
    }
    m.set(g, 0);
}

}  // namespace

std::vector<Monomial> all_monomials_up_to(const UnstableAlgebra& A, int max_degree)
{
    if (max_degree < 0)
        return {};
    std::vector<std::vector<Monomial>> by_degree(std::size_t(max_degree) + 1);
    Monomial m;
    enumerate_all(A, 0, m, 0, max_degree, by_degree);
    std::vector<Monomial> out;
    for (auto& v : by_degree) {
        std::sort(v.begin(), v.end());
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

std::vector<std::vector<SteenrodElement>> adem_pair_table(int bound)
{
    const std::size_t n = std::size_t(std::max(bound, 0)) + 1;
    std::vector<std::vector<SteenrodElement>> table(n, std::vector<SteenrodElement>(n));
    for (int b = 1; b <= bound; ++b)
        for (int a = 1; a < 2 * b && a + b <= bound; ++a)
            table[std::size_t(a)][std::size_t(b)] = adem_reduce(SteenrodElement(SqMonomial{a, b}));
    return table;
}

CoherenceReport coherence_serial(const UnstableAlgebra& A, int bound)
{
    CoherenceReport report;
    report.bound = bound;
    const auto basis = A.basis_by_degree(bound);
    const auto adem = adem_pair_table(bound);
    for (int d = 0; d <= bound; ++d) {
        for (const auto& m : basis[std::size_t(d)]) {
            const Poly pm(m);
            for (int b = 1; b + d <= bound; ++b) {
                for (int a = 1; a < 2 * b && a + b + d <= bound; ++a) {
                    Poly lhs = A.apply_sq(a, A.apply_sq(b, pm));
                    Poly rhs = A.apply(adem[std::size_t(a)][std::size_t(b)], pm);
                    ++report.checks;
                    if (lhs != rhs)
                        report.violations.push_back({m, a, b, std::move(lhs), std::move(rhs)});
                }
            }
        }
    }
    return report;
}

ConfluenceReport confluence_serial(const UnstableAlgebra& A, int bound)
{
    ConfluenceReport report;
    report.bound = bound;
    const auto& rels = A.presentation().relations;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        for (std::size_t j = i + 1; j < rels.size(); ++j) {
            const Monomial l = rels[i].lead.lcm(rels[j].lead);
            const int dl = A.order().degree(l);
            for (const auto& q : all_monomials_up_to(A, bound - dl)) {
                const Monomial m = l * q;
                Poly x = A.normal_form(A.rewrite_once(m, i));
                Poly y = A.normal_form(A.rewrite_once(m, j));
                ++report.checks;
                if (x != y)
                    report.divergences.push_back({m, i, j, std::move(x), std::move(y)});
            }
        }
    }
    return report;
}

InstabilityReport instability_serial(const UnstableAlgebra& A, int bound)
{
    InstabilityReport report;
    report.bound = bound;
    const auto basis = A.basis_by_degree(bound / 2);
    for (int d = 0; 2 * d <= bound; ++d) {
        for (const auto& m : basis[std::size_t(d)]) {
            const Poly pm(m);
            Poly top = A.apply_sq(d, pm);
            Poly square = A.normal_form(m.squared());
            ++report.checks;
            if (top != square)
                report.violations.push_back({m, d, std::move(top), std::move(square)});
            for (int k = d + 1; d + k <= bound; ++k) {
                Poly v = A.apply_sq(k, pm);
                ++report.checks;
                if (!v.is_zero())
                    report.violations.push_back({m, k, std::move(v), Poly{}});
            }
        }
    }
    return report;
}

}  // namespace detail

CoherenceReport check_adem_coherence(const UnstableAlgebra& A, int bound, Execution exec)
{
    return exec == Execution::serial ? detail::coherence_serial(A, bound) : detail::coherence_parallel(A, bound);
}

ConfluenceReport check_confluence(const UnstableAlgebra& A, int bound, Execution exec)
{
    return exec == Execution::serial ? detail::confluence_serial(A, bound) : detail::confluence_parallel(A, bound);
}

InstabilityReport check_instability(const UnstableAlgebra& A, int bound, Execution exec)
{
    return exec == Execution::serial ? detail::instability_serial(A, bound) : detail::instability_parallel(A, bound);
}

}  // namespace loopcoh
