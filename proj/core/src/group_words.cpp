#include "tak/group_words.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

namespace tak {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
    if (l.exponent == 0) return;
    if (!out.empty() && out.back().gen == l.gen) {
        out.back().exponent += l.exponent;
        if (out.back().exponent == 0) out.pop_back();
        return;
    }
    out.push_back(l);
}

}  // namespace

FreeWord::FreeWord(std::initializer_list<Letter> letters)
    : FreeWord(reduce(std::span<const Letter>(letters.begin(), letters.size()))) {}

FreeWord FreeWord::generator(Generator g, int exponent) {
    FreeWord w;
    push_reduced(w.letters_, {g, exponent});
    return w;
}

FreeWord FreeWord::reduce(std::span<const Letter> raw) {
    FreeWord w;
    for (const auto& l : raw) push_reduced(w.letters_, l);
    return w;
}

std::size_t FreeWord::length() const {
    return std::accumulate(letters_.begin(), letters_.end(), std::size_t{0},
                           [](std::size_t s, const Letter& l) { return s + std::abs(l.exponent); });
}

FreeWord FreeWord::inverse() const {
    FreeWord w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->gen, -it->exponent});
    return w;
}

FreeWord FreeWord::pow(int k) const {
    const FreeWord base = k >= 0 ? *this : inverse();
    FreeWord out;
    for (int i = 0; i < std::abs(k); ++i) out = out * base;
    return out;
}

std::vector<Letter> FreeWord::spelled() const {
    std::vector<Letter> out;
    out.reserve(length());
    for (const auto& l : letters_) {
        const int unit = l.exponent > 0 ? 1 : -1;
        for (int i = 0; i < std::abs(l.exponent); ++i) out.push_back({l.gen, unit});
    }
    return out;
}

FreeWord operator*(const FreeWord& l, const FreeWord& r) {
    FreeWord w = l;
    for (const auto& letter : r.letters_) push_reduced(w.letters_, letter);
    return w;
}

int exponent_sum(const FreeWord& w) {
    int s = 0;
    for (const auto& l : w.letters()) s += l.exponent;
    return s;
}

std::string to_string(const FreeWord& w) {
    if (w.is_identity()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w.letters()) {
        if (!first) os << ' ';
        first = false;
        os << (l.gen == Generator::A ? 'a' : 'b');
        if (l.exponent != 1) os << '^' << l.exponent;
    }
    return os.str();
}

GroupRingElement::GroupRingElement(const FreeWord& w, long long coeff) { add(w, coeff); }

long long GroupRingElement::coefficient(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void GroupRingElement::add(const FreeWord& w, long long c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

GroupRingElement operator-(const GroupRingElement& e) { return -1 * e; }

GroupRingElement operator*(const GroupRingElement& l, const GroupRingElement& r) {
    GroupRingElement out;
    for (const auto& [wl, cl] : l.terms_)
        for (const auto& [wr, cr] : r.terms_) out.add(wl * wr, cl * cr);
    return out;
}

GroupRingElement operator*(long long c, const GroupRingElement& e) {
    GroupRingElement out;
    for (const auto& [w, k] : e.terms_) out.add(w, c * k);
    return out;
}

GroupRingElement geometric_sum(const FreeWord& u, int count) {
    GroupRingElement out;
    FreeWord power;
    for (int i = 0; i < count; ++i) {
        out += GroupRingElement(power);
        power = power * u;
    }
    return out;
}

GroupRingElement fox_derivative(const FreeWord& w, Generator g) {
    // d(uv) = du + u dv, one unit letter at a time; prefix holds u.
    GroupRingElement out;
    FreeWord prefix;
    for (const auto& l : w.spelled()) {
        const FreeWord letter = FreeWord::generator(l.gen, l.exponent);
        if (l.gen == g) {
            if (l.exponent > 0)
                out += GroupRingElement(prefix);
            else
                out -= GroupRingElement(prefix * letter);
        }
        prefix = prefix * letter;
    }
    return out;
}

FreeWord relator_of(const FreeWord& w) { return w * word_a() * w.inverse() * word_b(-1); }

GroupRingElement relator_derivative(const FreeWord& w, Generator g) {
    return fox_derivative(relator_of(w), g);
}

}  // namespace tak
