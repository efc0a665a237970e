#include "homtrees/bignat.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace homtrees {

namespace {
using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDecChunkBase = 10'000'000'000'000'000'000ull; // 10^19
constexpr int kDecChunkDigits = 19;
} // namespace

BigNat& BigNat::operator+=(const BigNat& rhs) {
    if (this == &rhs) {
        BigNat copy = rhs;
        return *this += copy;
    }
    const auto& b = rhs.limbs_;
    if (limbs_.size() < b.size()) limbs_.resize(b.size(), 0);
    u64 carry = 0;
    std::size_t i = 0;
    for (; i < b.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) + b[i] + carry;
        limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    for (; carry != 0 && i < limbs_.size(); ++i) {
        u128 s = static_cast<u128>(limbs_[i]) + carry;
        limbs_[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    if (carry != 0) limbs_.push_back(carry);
    return *this;
}

BigNat operator*(const BigNat& lhs, const BigNat& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return BigNat{};
    const auto& a = lhs.limbs_;
    const auto& b = rhs.limbs_;
    std::vector<u64> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        const u128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + b.size();
        while (carry != 0) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    BigNat out;
    out.limbs_ = std::move(r);
    out.trim();
    return out;
}

BigNat BigNat::pow(unsigned exponent) const {
    BigNat result{1};
    BigNat base = *this;
    while (exponent != 0) {
        if (exponent & 1u) result *= base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

BigNat BigNat::from_decimal(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("BigNat: empty decimal string");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("BigNat: invalid decimal digit");
    BigNat out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t take = text.size() - pos;
        if (take > kDecChunkDigits) take = kDecChunkDigits;
        u64 chunk = 0;
        for (std::size_t i = 0; i < take; ++i)
            chunk = chunk * 10 + static_cast<u64>(text[pos + i] - '0');
        u64 scale = 1;
        for (std::size_t i = 0; i < take; ++i) scale *= 10;
        out = out * BigNat{scale} + BigNat{chunk};
        pos += take;
    }
    return out;
}

std::string BigNat::to_string() const {
    if (is_zero()) return "0";
    std::vector<u64> work = limbs_;
    std::vector<u64> chunks; // little-endian base 10^19
    while (!work.empty()) {
        u128 rem = 0;
        for (std::size_t i = work.size(); i-- > 0;) {
            u128 cur = (rem << 64) | work[i];
            work[i] = static_cast<u64>(cur / kDecChunkBase);
            rem = cur % kDecChunkBase;
        }
        while (!work.empty() && work.back() == 0) work.pop_back();
        chunks.push_back(static_cast<u64>(rem));
    }
    std::string out = std::to_string(chunks.back());
    char buf[24];
    for (std::size_t i = chunks.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%019llu",
                      static_cast<unsigned long long>(chunks[i]));
        out += buf;
    }
    return out;
}

double BigNat::to_double() const {
    double r = 0.0;
    for (std::size_t i = limbs_.size(); i-- > 0;)
        r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    return r;
}

double Rational::to_double() const {
    if (num.is_zero()) return 0.0;
    return num.to_double() / den.to_double();
}

std::strong_ordering compare(const Rational& a, const Rational& b) {
    return (a.num * b.den) <=> (b.num * a.den);
}

} // namespace homtrees
