#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace homtrees {

// Unsigned arbitrary-precision integer used for exact homomorphism counts.
// Little-endian 64-bit limbs, no trailing zero limbs; zero is the empty vector.
class BigNat {
public:
    BigNat() = default;
    BigNat(std::uint64_t v) {
        if (v != 0) limbs_.push_back(v);
    }

    static BigNat from_decimal(std::string_view text);

    bool is_zero() const { return limbs_.empty(); }

    BigNat& operator+=(const BigNat& rhs);
    BigNat& operator*=(const BigNat& rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend BigNat operator+(BigNat lhs, const BigNat& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BigNat operator*(const BigNat& lhs, const BigNat& rhs);

    BigNat pow(unsigned exponent) const;

    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.limbs_.size() != b.limbs_.size())
            return a.limbs_.size() <=> b.limbs_.size();
        for (std::size_t i = a.limbs_.size(); i-- > 0;)
            if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] <=> b.limbs_[i];
        return std::strong_ordering::equal;
    }
    friend bool operator==(const BigNat& a, const BigNat& b) {
        return a.limbs_ == b.limbs_;
    }

    std::string to_string() const;
    double to_double() const;

private:
    std::vector<std::uint64_t> limbs_;

    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    }
};

// Nonnegative rational. Kept unreduced: every distribution in this library
// shares one common denominator (the total homomorphism count), so sums and
// comparisons stay exact without a gcd.
struct Rational {
    BigNat num;
    BigNat den{1};

    double to_double() const;
};

// Exact comparison by cross-multiplication.
std::strong_ordering compare(const Rational& a, const Rational& b);

} // namespace homtrees
