#include "loopcoh/sweeps.hpp"

#include <exception>
#include <mutex>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace loopcoh::detail {

namespace {

// First exception thrown inside a parallel region, rethrown after it.
class ErrorSlot
{
public:
    template <typename F>
    void run(F&& f)
    {
        try {
            f();
        }
        catch (...) {
            std::lock_guard lock(mutex_);
            if (!error_)
                error_ = std::current_exception();
        }
    }

    void rethrow() const
    {
        if (error_)
            std::rethrow_exception(error_);
    }

private:
    std::mutex mutex_;
    std::exception_ptr error_;
};

// Truncated total squares of monomials: t -> (Sq^0 t, ..., Sq^{bound-|t|} t).
// The truncation depends only on t, so one cache serves every check of a
// sweep. Thread-private.
class TotalSquareCache
{
public:
    TotalSquareCache(const UnstableAlgebra& A, int bound) : A_(A), bound_(bound) {}

    const std::vector<Poly>& get(const Monomial& t)
    {
        if (auto it = cache_.find(t); it != cache_.end())
            return it->second;
        if (cache_.size() >= kMaxEntries)
            cache_.clear();
        return cache_.emplace(t, A_.total_square(t, bound_ - A_.order().degree(t))).first->second;
    }

private:
    static constexpr std::size_t kMaxEntries = 1u << 17;

    const UnstableAlgebra& A_;
    int bound_;
    std::unordered_map<Monomial, std::vector<Poly>, MonomialHash> cache_;
};

struct IndexedMonomial
{
    int degree;
    const Monomial* monomial;
};

std::vector<IndexedMonomial> flatten(const std::vector<std::vector<Monomial>>& basis)
{
    std::vector<IndexedMonomial> out;
    for (std::size_t d = 0; d < basis.size(); ++d)
        for (const auto& m : basis[d])
            out.push_back({int(d), &m});
    return out;
}

template <typename T>
std::vector<T> concat(std::vector<std::vector<T>>& parts)
{
    std::vector<T> out;
    for (auto& p : parts)
        for (auto& x : p)
            out.push_back(std::move(x));
    return out;
}

}  // namespace

CoherenceReport coherence_parallel(const UnstableAlgebra& A, int bound)
{
    CoherenceReport report;
    report.bound = bound;
    const auto basis = A.basis_by_degree(bound);
    const auto items = flatten(basis);
    const auto adem = adem_pair_table(bound);
    std::vector<std::vector<CoherenceViolation>> found(items.size());
    std::vector<std::size_t> checks(items.size(), 0);
    ErrorSlot errors;

#pragma omp parallel
    {
        TotalSquareCache cache(A, bound);
#pragma omp for schedule(dynamic, 1)
        for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(items.size()); ++idx) {
            errors.run([&] {
                const auto [d, mp] = items[std::size_t(idx)];
                const Monomial& m = *mp;
                const int room = bound - d;
                if (room < 2)
                    return;
                // Copy: the cache may be cleared while we still need it.
                const std::vector<Poly> S = cache.get(m);
                // U[b][a] = Sq^a Sq^b m for a + b <= room; U[0] = S.
                std::vector<std::vector<Poly>> U(std::size_t(room) + 1);
                U[0] = S;
                for (int b = 1; b <= room; ++b) {
                    auto& row = U[std::size_t(b)];
                    row.assign(std::size_t(room - b) + 1, Poly{});
                    for (const auto& t : S[std::size_t(b)]) {
                        const auto& ts = cache.get(t);
                        for (int a = 0; a <= room - b; ++a)
                            row[std::size_t(a)] += ts[std::size_t(a)];
                    }
                }
                auto applied = [&](const SqMonomial& op) -> Poly {
                    const auto& x = op.exponents();
                    if (x.empty())
                        return Poly(m);
                    if (x.size() == 1)
                        return S[std::size_t(x[0])];
                    if (x.size() == 2)
                        return U[std::size_t(x[1])][std::size_t(x[0])];
                    return A.apply(op, Poly(m));
                };
                auto& out = found[std::size_t(idx)];
                for (int b = 1; b <= room; ++b) {
                    for (int a = 1; a < 2 * b && a + b <= room; ++a) {
                        const Poly& lhs = U[std::size_t(b)][std::size_t(a)];
                        Poly rhs;
                        for (const auto& op : adem[std::size_t(a)][std::size_t(b)].terms())
                            rhs += applied(op);
                        ++checks[std::size_t(idx)];
                        if (lhs != rhs)
                            out.push_back({m, a, b, lhs, std::move(rhs)});
                    }
                }
            });
        }
    }
    errors.rethrow();
    for (auto c : checks)
        report.checks += c;
    report.violations = concat(found);
    return report;
}

ConfluenceReport confluence_parallel(const UnstableAlgebra& A, int bound)
{
    ConfluenceReport report;
    report.bound = bound;
    const auto& rels = A.presentation().relations;

    struct Task
    {
        std::size_t i, j;
        Monomial m;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < rels.size(); ++i) {
        for (std::size_t j = i + 1; j < rels.size(); ++j) {
            const Monomial l = rels[i].lead.lcm(rels[j].lead);
            for (const auto& q : all_monomials_up_to(A, bound - A.order().degree(l)))
                tasks.push_back({i, j, l * q});
        }
    }
    std::vector<std::vector<ConfluenceDivergence>> found(tasks.size());
    ErrorSlot errors;

#pragma omp parallel
    {
        NormalFormMemo memo;
#pragma omp for schedule(dynamic, 64)
        for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(tasks.size()); ++idx) {
            errors.run([&] {
                const auto& task = tasks[std::size_t(idx)];
                if (memo.size() > (1u << 18))
                    memo.clear();
                Poly x = A.normal_form(A.rewrite_once(task.m, task.i), memo);
                Poly y = A.normal_form(A.rewrite_once(task.m, task.j), memo);
                if (x != y)
                    found[std::size_t(idx)].push_back({task.m, task.i, task.j, std::move(x), std::move(y)});
            });
        }
    }
    errors.rethrow();
    report.checks = tasks.size();
    report.divergences = concat(found);
    return report;
}

InstabilityReport instability_parallel(const UnstableAlgebra& A, int bound)
{
    InstabilityReport report;
    report.bound = bound;
    const auto basis = A.basis_by_degree(bound / 2);
    const auto items = flatten(basis);
    std::vector<std::vector<InstabilityViolation>> found(items.size());
    std::vector<std::size_t> checks(items.size(), 0);
    ErrorSlot errors;

#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t idx = 0; idx < std::ptrdiff_t(items.size()); ++idx) {
        errors.run([&] {
            const auto [d, mp] = items[std::size_t(idx)];
            const Monomial& m = *mp;
            const int kmax = bound - d;
            const auto S = A.total_square(m, kmax);
            auto& out = found[std::size_t(idx)];
            Poly square = A.normal_form(m.squared());
            ++checks[std::size_t(idx)];
            if (S[std::size_t(d)] != square)
                out.push_back({m, d, S[std::size_t(d)], std::move(square)});
            for (int k = d + 1; k <= kmax; ++k) {
                ++checks[std::size_t(idx)];
                if (!S[std::size_t(k)].is_zero())
                    out.push_back({m, k, S[std::size_t(k)], Poly{}});
            }
        });
    }
    errors.rethrow();
    for (auto c : checks)
        report.checks += c;
    report.violations = concat(found);
    return report;
}

}  // namespace loopcoh::detail
