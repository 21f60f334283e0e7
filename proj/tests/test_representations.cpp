#include <doctest.h>

#include "support.hpp"
#include "tak/chebyshev.hpp"
#include "tak/error.hpp"
#include "tak/representations.hpp"

using namespace tak;
using tak::testing::Rng;
using tak::testing::rel_err;

namespace {

Mat2 power(const Mat2& m, int j) { return chebyshev::sl2_power(m, j); }

}  // namespace

TEST_CASE("building from (x, z)") {
    CHECK_THROWS_AS(Representation::from_xz(2.0, 2.0), ReducibleRepresentation);

    const auto r = Representation::from_xz(0.0, 1.0);
    CHECK(std::abs(r.u() - 3.0) < 1e-12);
    CHECK(std::abs((r.a().matrix() * r.b().matrix()).trace() - 1.0) < 1e-12);

    const auto c = Representation::from_xz(3.0, 2.0);
    const Mat2 comm = c.a().matrix() * c.b().matrix() * adjugate(c.a().matrix()) * adjugate(c.b().matrix());
    CHECK(std::abs(comm.trace() - 2.0) < 1e-9);

    Rng rng(31);
    for (int i = 0; i < 100; ++i) {
        const Complex x = testing::random_complex(rng, 3), z = testing::random_complex(rng, 3);
        const auto rep = Representation::from_xz(x, z);
        const Mat2 &ma = rep.a().matrix(), &mb = rep.b().matrix();
        CHECK(std::abs(ma.trace() - x) < 1e-9);
        CHECK(std::abs(mb.trace() - x) < 1e-9);
        CHECK(std::abs((ma * mb).trace() - z) < 1e-9 * std::max(1.0, std::abs(z)));
        CHECK(std::abs(det2(ma) - 1.0) < 1e-9);
        CHECK(std::abs(det2(mb) - 1.0) < 1e-9);
        // tr[A, B] = 2 + (z - 2)(z + 2 - x^2)
        const Mat2 k = ma * mb * adjugate(ma) * adjugate(mb);
        CHECK(rel_err(k.trace(), 2.0 + (z - 2.0) * (z + 2.0 - x * x)) < 1e-9);
        CHECK(rep.nonabelian());
    }
}

TEST_CASE("building from (x, y)") {
    CHECK_THROWS_AS(Representation::from_xy(0.7, 2.0), ReducibleRepresentation);
    const auto r = Representation::from_xy(0.0, -2.0);
    CHECK(std::abs(r.u() - 4.0) < 1e-12);
    CHECK(std::abs((r.a().matrix() * adjugate(r.b().matrix())).trace() + 2.0) < 1e-12);
    CHECK(std::abs(r.a().trace()) < 1e-12);

    Rng rng(37);
    for (int i = 0; i < 100; ++i) {
        const Complex x = testing::random_complex(rng, 3), y = testing::random_complex(rng, 3);
        const auto rep = Representation::from_xy(x, y);
        const Mat2 &ma = rep.a().matrix(), &mb = rep.b().matrix();
        CHECK(std::abs((ma * adjugate(mb)).trace() - y) < 1e-9 * std::max(1.0, std::abs(y)));
        CHECK(rel_err((ma * mb).trace(), x * x - 2.0 + rep.u()) < 1e-9);
        CHECK(std::holds_alternative<TraceCoordsMinus>(rep.coords()));
    }
    // parabolic case x = 2 keeps working
    const auto p = Representation::from_xy(2.0, -1.0);
    CHECK(std::abs(p.s() - 1.0) < 1e-12);
}

TEST_CASE("trace and determinant identities") {
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Mat2 c = testing::random_sl2(rng), d = testing::random_sl2(rng);
        const Complex lhs = (c * d).trace();
        CHECK(rel_err(lhs, c.trace() * d.trace() - (c * adjugate(d)).trace()) < 1e-10);

        Mat2 g;
        g << testing::random_complex(rng), testing::random_complex(rng), testing::random_complex(rng),
            testing::random_complex(rng);
        CHECK(rel_err(det2(Mat2::Identity() + g), 1.0 + det2(g) + g.trace()) < 1e-10);
    }
}

TEST_CASE("commutator powers") {
    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const Complex x = testing::random_complex(rng, 2), z = testing::random_complex(rng, 2);
        const auto rep = Representation::from_xz(x, z);
        const Mat2 &ma = rep.a().matrix(), &mb = rep.b().matrix();
        for (int n = 1; n <= 8; ++n) {
            const Mat2 m = power(ma * mb, n) * power(mb * ma, -n);
            const Complex s = chebyshev::S_value(n - 1, z);
            CHECK(rel_err(m.trace(), 2.0 + (z - 2.0) * (z + 2.0 - x * x) * s * s) < 1e-8);

            const Complex want = boundary_coeff_b3(n, x, z);
            const Mat2 conj = ma * power(ma * mb, -n) * power(mb * ma, n) * adjugate(ma);
            CHECK(rel_err(det2(Mat2::Identity() + conj), want) < 1e-8);
            CHECK(rel_err(det2(Mat2::Identity() + m), want) < 1e-8);
        }
    }
    CHECK(boundary_coeff_b3(3, 1.7, 2.0) == Complex(4.0));
}

TEST_CASE("twist boundary coefficient") {
    CHECK(std::abs(boundary_coeff_twist(2, Complex(0.3, 0.4)) - Complex(2.3, 0.4)) < 1e-12);
    Rng rng(47);
    for (int n = 1; n <= 10; ++n) {
        CHECK(std::abs(boundary_coeff_twist(n, 2.0) - double(n * n)) < 1e-12);
        // the y = 2 limit agrees with the geometric sum of a parabolic element
        Mat2 par;
        par << 1.0, 1.0, 0.0, 1.0;
        Mat2 acc = Mat2::Zero(), pw = Mat2::Identity();
        for (int k = 0; k < n; ++k, pw = pw * par) acc += pw;
        CHECK(std::abs(det2(acc) - double(n * n)) < 1e-9);
    }
    for (int i = 0; i < 100; ++i) {
        const Complex x = testing::random_complex(rng, 2), y = testing::random_complex(rng, 2);
        const auto rep = Representation::from_xy(x, y);
        const Mat2 g = rep.a().matrix() * adjugate(rep.b().matrix());
        for (int n = 1; n <= 10; ++n) {
            Mat2 acc = Mat2::Zero(), pw = Mat2::Identity();
            for (int k = 0; k < n; ++k, pw = pw * g) acc += pw;
            CHECK(rel_err(boundary_coeff_twist(n, y), det2(acc)) < 1e-8);
        }
    }
}

TEST_CASE("generic Riley polynomial") {
    const auto rep = Representation::from_xz(Complex(0.4, 0.1), Complex(-0.7, 1.3));
    CHECK(std::abs(riley_generic(word_a() * word_b(), rep) - (Complex(-0.7, 1.3) - 1.0)) < 1e-12);
    CHECK_THROWS_AS(riley_generic(word_a() * word_b() * word_a(), rep), ParameterError);

    CHECK(std::abs(riley_b3_closed(1, std::sqrt(Complex(-1.0 / 6)), 0.5)) < 1e-12);
    CHECK(std::abs(riley_b3_closed(1, 0.0, 2.0) - 1.0) < 1e-12);

    Rng rng(53);
    for (int n = 1; n <= 6; ++n) {
        const FreeWord w = two_bridge_word(TwoBridgeKnot::b3(n));
        for (int i = 0; i < 30; ++i) {
            const Complex x = testing::random_complex(rng, 2), z = testing::random_complex(rng, 2);
            const auto r = Representation::from_xz(x, z);
            CHECK(rel_err(riley_generic(w, r), riley_b3_closed(n, x, z)) < 1e-8);
        }
    }
}

TEST_CASE("twist Riley polynomials against two-bridge words") {
    // K_2n = b(4n+1, 4n-1), K_2n-1 = b(4n-1, 4n-3); z = x^2 - y gives the same matrices
    Rng rng(59);
    for (int n = 1; n <= 6; ++n) {
        const FreeWord we = two_bridge_word(TwoBridgeKnot::make(4 * n + 1, 4 * n - 1));
        const FreeWord wo = two_bridge_word(TwoBridgeKnot::make(4 * n - 1, 4 * n - 3));
        for (int i = 0; i < 30; ++i) {
            const Complex x = testing::random_complex(rng, 2), y = testing::random_complex(rng, 2);
            const auto r = Representation::from_xz(x, x * x - y);
            CHECK(rel_err(riley_even(n, x, y), -riley_generic(we, r)) < 1e-8);
            CHECK(rel_err(riley_odd(n, x, y), riley_generic(wo, r)) < 1e-8);
        }
    }
}

TEST_CASE("twist Riley special values") {
    Rng rng(61);
    // at y = -2: S_{n-1} = (-1)^(n-1) n, S_n = (-1)^n (n+1)
    for (int n = 1; n <= 10; ++n)
        for (int i = 0; i < 5; ++i) {
            const Complex x = testing::random_complex(rng);
            const double nn = n;
            CHECK(rel_err(riley_even(n, x, -2.0), -(nn * (2 * nn + 1) * x * x + 1.0)) < 1e-9);
        }
    // beta^(n+1) = 1 gives x^2 = y + 1, beta^(n-1) = 1 gives x^2 = (y^2 + y - 1)/(y - 1); beta = -1 excluded
    for (int n = 2; n <= 10; ++n)
        for (int k = 1; k <= n; ++k) {
            const Complex x = testing::random_complex(rng);
            const double y1 = 2 * std::cos(2 * k * M_PI / (n + 1));
            if (2 * k != n + 1) CHECK(rel_err(riley_even(n, x, y1), (y1 + 1) - x * x) < 1e-9);
            if (k < n - 1 && 2 * k != n - 1) {
                const double y2 = 2 * std::cos(2 * k * M_PI / (n - 1));
                if (std::abs(y2 - 1) > 1e-6) {
                    const Complex x2 = (y2 * y2 + y2 - 1) / (y2 - 1);
                    CHECK(std::abs(riley_even(n, std::sqrt(x2), y2)) < 1e-9);
                }
            }
        }
    CHECK(std::abs(riley_odd(2, std::sqrt(0.5), -1.0)) < 1e-12);
}

TEST_CASE("relator residual and Le's criterion") {
    // abelian limit: commuting diagonal images satisfy every balanced relation
    const SL2Matrix d(Complex(1.3, 0.2), 0.0, 0.0, 1.0 / Complex(1.3, 0.2));
    const FreeWord w = two_bridge_word(TwoBridgeKnot::make(7, 3));
    const Mat2 wd = word_image(w, d.matrix(), d.matrix());
    CHECK(max_abs(wd * d.matrix() - d.matrix() * wd) < 1e-12);

    Rng rng(67);
    for (int n = 1; n <= 5; ++n) {
        const auto pres = presentation(TwoBridgeKnot::b3(n));
        for (const auto& rep : testing::random_riley_roots(pres, rng, 25)) {
            CHECK(std::abs(riley_generic(pres.word, rep)) < 1e-8);
            CHECK(relator_residual(rep, pres.word) < 1e-8);
        }
        for (int i = 0; i < 25; ++i) {
            const auto rep = Representation::from_xz(testing::random_complex(rng), testing::random_complex(rng));
            const bool root = std::abs(riley_generic(pres.word, rep)) < 1e-8;
            const bool rel = relator_residual(rep, pres.word) < 1e-6;
            CHECK(root == rel);
        }
    }
}

TEST_CASE("representations at a fixed coordinate") {
    const auto pres = presentation(TwoBridgeKnot::make(7, 3));
    const auto reps = representations_at(pres, 0.5);
    // R_w is even of degree 2 in x for b(7,3)
    CHECK(reps.size() == 2);
    for (const auto& r : reps) {
        CHECK(std::abs(r.x() * r.x() + 1.0 / 6) < 1e-9);
        CHECK(relator_residual(r, pres.word) < 1e-9);
    }
    const auto tw = presentation(TwistKnot::make(4));
    for (const auto& r : representations_at(tw, Complex(0.2, 0.9))) {
        CHECK(std::abs(riley_value(tw, r)) < 1e-9);
        CHECK(relator_residual(r, tw.word) < 1e-9);
    }
}
