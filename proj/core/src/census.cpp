#include "tak/solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "tak/error.hpp"

namespace tak {

Corrections correction_terms(int n) {
    if (n < 1) throw ParameterError("correction terms need n >= 1");
    Corrections c;
    c.a = n % 6 == 1 ? 2 : 0;
    c.b = n % 5 == 1 ? 2 : 0;
    c.c = n % 3 == 1 ? 1 : 0;
    c.d = n % 6 == 5 ? 2 : 0;
    c.e = n % 5 == 4 ? 2 : 0;
    return c;
}

int theorem_count(Family family, int n, Mode mode) {
    ExceptionalSystem::make(family, n, mode);
    if (family == Family::B3) return 2 * n;
    if (mode == Mode::Deficient) return n % 2 == 0 ? 2 : 0;
    const Corrections c = correction_terms(n);
    if (family == Family::TwistEven) return 2 * n - 2 - c.a - c.b;
    return 2 * n - 2 - c.c - c.d - c.e;
}

namespace {

CountResult run_one(Family family, int n, Mode mode, const Tolerances& tol) {
    CountResult r;
    r.family = family;
    r.n = n;
    r.mode = mode;
    r.theorem_count = theorem_count(family, n, mode);
    r.witnesses = solve(ExceptionalSystem::make(family, n, mode), tol);
    r.found_count = static_cast<int>(r.witnesses.size());
    r.all_verified = std::all_of(r.witnesses.begin(), r.witnesses.end(), [](const auto& w) { return w.verified; });
    return r;
}

}  // namespace

std::vector<CountResult> census(Family family, int n_lo, int n_hi, const std::vector<Mode>& modes,
                                const CensusOptions& opts) {
    struct Job {
        int n;
        Mode mode;
    };
    std::vector<Job> jobs;
    for (int n = n_lo; n <= n_hi; ++n)
        for (Mode m : modes) jobs.push_back({n, m});

    std::vector<CountResult> results(jobs.size());
    std::vector<std::exception_ptr> errors(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                results[i] = run_one(family, jobs[i].n, jobs[i].mode, opts.tol);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };

    const unsigned threads = std::min<std::size_t>(std::max(1u, opts.threads), jobs.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return results;
}

}  // namespace tak
