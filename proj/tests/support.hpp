#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "tak/group_words.hpp"
#include "tak/knots.hpp"
#include "tak/matrix.hpp"
#include "tak/representations.hpp"

namespace tak::testing {

using Rng = std::mt19937_64;

inline Complex random_complex(Rng& rng, double r = 2.0) {
    std::uniform_real_distribution<double> d(-r, r);
    return {d(rng), d(rng)};
}

/// Random element of SL2(C): random entries, rescaled by a square root of the determinant.
inline Mat2 random_sl2(Rng& rng) {
    for (;;) {
        Mat2 m;
        m << random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng);
        const Complex d = det2(m);
        if (std::abs(d) < 0.1) continue;
        return m / std::sqrt(d);
    }
}

inline FreeWord random_word(Rng& rng, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> coin(0, 3);
    std::vector<Letter> raw;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        const int c = coin(rng);
        raw.push_back({c < 2 ? Generator::A : Generator::B, c % 2 == 0 ? 1 : -1});
    }
    return FreeWord::reduce(raw);
}

inline double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

/// Nonabelian representations whose second coordinate is uniform in the disk of radius 2,
/// keeping those with |x| <= 3. Outside this region matrix entries grow fast enough that
/// double precision no longer certifies Delta to 1e-8.
inline std::vector<Representation> random_riley_roots(const KnotPresentation& pres, Rng& rng, int count) {
    std::uniform_real_distribution<double> radius(0.0, 1.0), angle(0.0, 2.0 * M_PI);
    std::vector<Representation> out;
    while (static_cast<int>(out.size()) < count) {
        const Complex c = std::polar(2.0 * std::sqrt(radius(rng)), angle(rng));
        for (auto& rep : representations_at(pres, c)) {
            if (static_cast<int>(out.size()) >= count) break;
            if (std::abs(rep.x()) <= 3.0) out.push_back(std::move(rep));
        }
    }
    return out;
}

}  // namespace tak::testing
