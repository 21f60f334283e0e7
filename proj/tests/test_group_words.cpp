#include <doctest.h>

#include "support.hpp"
#include "tak/group_words.hpp"
#include "tak/knots.hpp"
#include "tak/laurent.hpp"

using namespace tak;
using tak::testing::Rng;

namespace {

const FreeWord a = word_a();
const FreeWord b = word_b();
const FreeWord A = word_a(-1);
const FreeWord B = word_b(-1);

GroupRingElement G(const FreeWord& w) { return GroupRingElement(w); }

}  // namespace

TEST_CASE("free reduction") {
    CHECK((a * A).is_identity());
    CHECK(FreeWord{{Generator::A, 1}, {Generator::B, 1}, {Generator::B, -1}, {Generator::A, 1}} == word_a(2));
    const int n = 1;
    const FreeWord w = (a * b).pow(n) * (A * B).pow(n) * (a * b).pow(n);
    CHECK(to_string(w) == "a b a^-1 b^-1 a b");
    CHECK(w.length() == 6);

    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        const auto u = testing::random_word(rng, 12), v = testing::random_word(rng, 12), x = testing::random_word(rng, 12);
        CHECK((u * v) * x == u * (v * x));
        CHECK((u * u.inverse()).is_identity());
        for (std::size_t k = 1; k < u.letters().size(); ++k) CHECK(u.letters()[k].gen != u.letters()[k - 1].gen);
    }
}

TEST_CASE("exponent sums") {
    CHECK(exponent_sum(FreeWord{}) == 0);
    for (int n = 1; n <= 6; ++n) {
        CHECK(exponent_sum((a * b).pow(n) * (A * B).pow(n) * (a * b).pow(n)) == 2 * n);
        CHECK(exponent_sum((b * A).pow(n) * b * (a * B).pow(n)) == 1);
    }
}

TEST_CASE("fox derivative axioms") {
    CHECK(fox_derivative(a, Generator::A) == GroupRingElement::one());
    CHECK(fox_derivative(b, Generator::A).is_zero());
    CHECK(fox_derivative(A, Generator::A) == -G(A));
    CHECK(fox_derivative(word_a(3), Generator::A) == geometric_sum(a, 3));
    CHECK(fox_derivative(word_a(-2), Generator::A) == -(G(A) + G(word_a(-2))));
}

TEST_CASE("fox derivative product rule and inverse") {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto u = testing::random_word(rng, 30);
        const auto v = testing::random_word(rng, 30);
        for (Generator g : {Generator::A, Generator::B}) {
            CHECK(fox_derivative(u * v, g) == fox_derivative(u, g) + G(u) * fox_derivative(v, g));
            CHECK(fox_derivative(u * u.inverse(), g).is_zero());
        }
    }
}

TEST_CASE("fundamental formula of free calculus") {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const auto w = testing::random_word(rng, 30);
        // exact in Z[F2]
        const auto lhs = fox_derivative(w, Generator::A) * (G(a) - GroupRingElement::one()) +
                         fox_derivative(w, Generator::B) * (G(b) - GroupRingElement::one());
        CHECK(lhs == G(w) - GroupRingElement::one());

        // and under Phi with arbitrary SL2 images
        const SL2Matrix ma(testing::random_sl2(rng)), mb(testing::random_sl2(rng));
        const auto r = relator_of(w);
        const auto img = phi(fox_derivative(r, Generator::A), ma, mb) *
                             (phi(G(a), ma, mb) - MatrixLaurentPoly::identity()) +
                         phi(fox_derivative(r, Generator::B), ma, mb) *
                             (phi(G(b), ma, mb) - MatrixLaurentPoly::identity());
        const auto want = phi(G(r), ma, mb) - MatrixLaurentPoly::identity();
        const Complex t{0.7, 0.3};
        const Mat2 diff = img(t) - want(t);
        CHECK(max_abs(diff) <= 1e-9 * std::max(1.0, max_abs(want(t))));
    }
}

TEST_CASE("closed forms of dw/da") {
    for (int n = 1; n <= 6; ++n) {
        const FreeWord ab = a * b, AB = A * B, bA = b * A, aB = a * B;
        const FreeWord w3 = two_bridge_word(TwoBridgeKnot::b3(n));
        const auto b3 = (GroupRingElement::one() + G(ab.pow(n) * AB.pow(n))) * geometric_sum(ab, n) -
                        G(ab.pow(n)) * geometric_sum(AB, n) * G(A);
        CHECK(fox_derivative(w3, Generator::A) == b3);

        const FreeWord we = twist_knot_word(TwistKnot::from_index(TwistParity::Even, n));
        const auto even = -(geometric_sum(bA, n) * G(bA)) + G(bA.pow(n) * b) * geometric_sum(aB, n);
        CHECK(fox_derivative(we, Generator::A) == even);

        const FreeWord wo = twist_knot_word(TwistKnot::from_index(TwistParity::Odd, n));
        const auto odd = geometric_sum(aB, n) - G(aB.pow(n) * b) * geometric_sum(bA, n) * G(bA);
        CHECK(fox_derivative(wo, Generator::A) == odd);
    }
}

TEST_CASE("relator derivative") {
    CHECK(relator_derivative(FreeWord{}, Generator::A) == GroupRingElement::one());
    CHECK(relator_derivative(b, Generator::A) == G(b));

    const FreeWord w = two_bridge_word(TwoBridgeKnot::make(7, 3));
    const auto d = relator_derivative(w, Generator::A);
    CHECK(d.terms().size() == 7);

    Rng rng(17);
    std::vector<FreeWord> words = {w, twist_knot_word(TwistKnot::make(4)), twist_knot_word(TwistKnot::make(5))};
    for (int i = 0; i < 20; ++i) words.push_back(testing::random_word(rng, 20));
    for (const auto& u : words) {
        const auto factored = G(u) * (GroupRingElement::one() +
                                      (GroupRingElement::one() - G(a)) * G(u.inverse()) * fox_derivative(u, Generator::A));
        CHECK(relator_derivative(u, Generator::A) == factored);
    }
}
