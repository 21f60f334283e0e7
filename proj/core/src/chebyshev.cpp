#include "tak/chebyshev.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <utility>

#include "tak/error.hpp"

namespace tak::chebyshev {

namespace {

const IntPolynomial kZ{0, 1};

// Runs f_{j+1} = z f_j - f_{j-1} from the seeds (f_0, f_1) to index j in either direction.
template <typename Value, typename Step>
Value run_recurrence(int j, Value f0, Value f1, Step step) {
    if (j == 0) return f0;
    if (j > 0) {
        for (int k = 1; k < j; ++k) f0 = std::exchange(f1, step(f1, f0));
        return f1;
    }
    // backwards: f_{j-1} = z f_j - f_{j+1}
    for (int k = 0; k > j; --k) f1 = std::exchange(f0, step(f0, f1));
    return f0;
}

class PolyCache {
public:
    template <typename Build>
    IntPolynomial get(int j, Build build) {
        std::lock_guard lock(mu_);
        auto it = cache_.find(j);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(j, build(j)).first->second;
    }

private:
    std::mutex mu_;
    std::map<int, IntPolynomial> cache_;
};

}  // namespace

IntPolynomial S(int j) {
    static PolyCache cache;
    return cache.get(j, [](int k) {
        return run_recurrence<IntPolynomial>(k, IntPolynomial{1}, kZ,
                                             [](const IntPolynomial& cur, const IntPolynomial& prev) {
                                                 return kZ * cur - prev;
                                             });
    });
}

IntPolynomial T(int j) {
    static PolyCache cache;
    return cache.get(j, [](int k) {
        return run_recurrence<IntPolynomial>(k, IntPolynomial{2}, kZ,
                                             [](const IntPolynomial& cur, const IntPolynomial& prev) {
                                                 return kZ * cur - prev;
                                             });
    });
}

Complex S_value(int j, Complex z) {
    return run_recurrence<Complex>(j, 1.0, z, [z](Complex cur, Complex prev) { return z * cur - prev; });
}

Complex T_value(int j, Complex z) {
    return run_recurrence<Complex>(j, 2.0, z, [z](Complex cur, Complex prev) { return z * cur - prev; });
}

Mat2 sl2_power(const Mat2& m, int j, std::optional<Complex> z) {
    if (std::abs(det2(m) - 1.0) >= 1e-9) throw ParameterError("sl2_power: matrix is not in SL2");
    const Complex tr = z.value_or(m.trace());
    return S_value(j - 1, tr) * m - S_value(j - 2, tr) * Mat2::Identity();
}

}  // namespace tak::chebyshev
