#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace wceg {

// Minimal unsigned big integer: enough for the closed-form path count, whose
// factorial growth leaves 64 bits near n = 20.
class BigUint {
public:
    BigUint() : limbs_{0} {}
    BigUint(std::uint64_t v) : limbs_{v} {}  // NOLINT: implicit by design

    BigUint& operator+=(const BigUint& o) {
        limbs_.resize(std::max(limbs_.size(), o.limbs_.size()), 0);
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            unsigned __int128 s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
            limbs_[i] = static_cast<std::uint64_t>(s);
            carry = s >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
        return *this;
    }

    BigUint& operator*=(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (std::uint64_t& limb : limbs_) {
            unsigned __int128 p = static_cast<unsigned __int128>(limb) * m + carry;
            limb = static_cast<std::uint64_t>(p);
            carry = p >> 64;
        }
        while (carry) {
            limbs_.push_back(static_cast<std::uint64_t>(carry));
            carry >>= 64;
        }
        trim();
        return *this;
    }

    friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }
    friend BigUint operator*(BigUint a, std::uint64_t b) { return a *= b; }

    bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }

    // componentwise from most significant limb
    std::strong_ordering operator<=>(const BigUint& o) const {
        if (limbs_.size() != o.limbs_.size()) return limbs_.size() <=> o.limbs_.size();
        for (std::size_t i = limbs_.size(); i-- > 0;)
            if (limbs_[i] != o.limbs_[i]) return limbs_[i] <=> o.limbs_[i];
        return std::strong_ordering::equal;
    }

    bool fits_u64() const { return limbs_.size() == 1; }
    std::uint64_t as_u64() const { return limbs_[0]; }

    std::string to_string() const {
        std::vector<std::uint64_t> work(limbs_);
        std::string digits;
        while (!(work.size() == 1 && work[0] == 0)) {
            unsigned __int128 rem = 0;
            for (std::size_t i = work.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | work[i];
                work[i] = static_cast<std::uint64_t>(cur / 10);
                rem = cur % 10;
            }
            digits.push_back(static_cast<char>('0' + static_cast<int>(rem)));
            while (work.size() > 1 && work.back() == 0) work.pop_back();
        }
        if (digits.empty()) digits = "0";
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

private:
    void trim() {
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    std::vector<std::uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace wceg
