#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace tak {

enum class Generator : std::uint8_t { A, B };

inline Generator other(Generator g) { return g == Generator::A ? Generator::B : Generator::A; }

/// A power g^exponent of one generator.
struct Letter {
    Generator gen;
    int exponent;

    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word in the free group on a, b. Adjacent letters always carry
/// distinct generators and nonzero exponents, so equality is free-group equality.
class FreeWord {
public:
    FreeWord() = default;
    FreeWord(std::initializer_list<Letter> letters);
    static FreeWord generator(Generator g, int exponent = 1);

    /// Free reduction of an arbitrary letter sequence.
    static FreeWord reduce(std::span<const Letter> raw);

    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }
    /// Number of syllables (letters after merging equal neighbours).
    std::size_t syllables() const { return letters_.size(); }
    /// Length counted with multiplicity, sum |exponent|.
    std::size_t length() const;

    FreeWord inverse() const;
    FreeWord pow(int k) const;

    /// Unit-exponent spelling, e.g. a^2 b^-1 -> {a, a, b^-1}.
    std::vector<Letter> spelled() const;

    friend FreeWord operator*(const FreeWord& l, const FreeWord& r);
    auto operator<=>(const FreeWord&) const = default;

private:
    std::vector<Letter> letters_;
};

/// Shorthands used throughout the tests and knot constructions.
inline FreeWord word_a(int e = 1) { return FreeWord::generator(Generator::A, e); }
inline FreeWord word_b(int e = 1) { return FreeWord::generator(Generator::B, e); }

int exponent_sum(const FreeWord& w);

/// Human-readable form, "a b^-1 a^2"; "1" for the identity.
std::string to_string(const FreeWord& w);

/// Integer linear combinations of free-group words, the group ring Z[F2].
class GroupRingElement {
public:
    using Terms = std::map<FreeWord, long long>;

    GroupRingElement() = default;
    GroupRingElement(const FreeWord& w, long long coeff = 1);
    static GroupRingElement one() { return GroupRingElement(FreeWord{}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long coefficient(const FreeWord& w) const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    friend GroupRingElement operator+(GroupRingElement l, const GroupRingElement& r) { return l += r; }
    friend GroupRingElement operator-(GroupRingElement l, const GroupRingElement& r) { return l -= r; }
    friend GroupRingElement operator-(const GroupRingElement& e);
    friend GroupRingElement operator*(const GroupRingElement& l, const GroupRingElement& r);
    friend GroupRingElement operator*(long long c, const GroupRingElement& e);
    bool operator==(const GroupRingElement&) const = default;

private:
    void add(const FreeWord& w, long long c);

    Terms terms_;
};

/// 1 + u + u^2 + ... + u^(count-1); zero when count == 0.
GroupRingElement geometric_sum(const FreeWord& u, int count);

/// Fox free derivative d w / d g, expanded letter by letter with the product rule.
GroupRingElement fox_derivative(const FreeWord& w, Generator g);

/// The relator r = w a w^-1 b^-1 of the presentation <a, b | wa = bw>.
FreeWord relator_of(const FreeWord& w);

/// Fox derivative of relator_of(w) with respect to g.
GroupRingElement relator_derivative(const FreeWord& w, Generator g);

}  // namespace tak
