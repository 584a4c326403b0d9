#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

#include "wceg/fixed_decimal.hpp"

namespace wceg {

// Outcome of the componentwise partial order on weight vectors.
enum class Dominance { Less, Greater, Equal, Incomparable };

// k-tuple of non-negative fixed-point weights, one component per colour.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::size_t k) : units_(k, 0) {}
    WeightVector(std::initializer_list<std::int64_t> units) : units_(units) {}
    explicit WeightVector(std::vector<std::int64_t> units) : units_(std::move(units)) {}

    std::size_t size() const { return units_.size(); }
    std::int64_t operator[](std::size_t i) const { return units_[i]; }
    std::int64_t& operator[](std::size_t i) { return units_[i]; }
    std::span<const std::int64_t> components() const { return units_; }

    std::int64_t component_sum() const {
        std::int64_t s = 0;
        for (std::int64_t u : units_) s = checked_add(s, u);
        return s;
    }

    bool operator==(const WeightVector& o) const = default;

private:
    std::vector<std::int64_t> units_;
};

inline Dominance compare(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight vectors of different length are not comparable");
    bool a_below = false;  // some a_i < b_i
    bool b_below = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) a_below = true;
        else if (b[i] < a[i]) b_below = true;
        if (a_below && b_below) return Dominance::Incomparable;
    }
    if (a_below) return Dominance::Less;
    if (b_below) return Dominance::Greater;
    return Dominance::Equal;
}

inline Dominance compare(const WeightVector& a, const WeightVector& b) {
    return compare(a.components(), b.components());
}

inline WeightVector add(const WeightVector& a, const WeightVector& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("weight vectors of different length cannot be added");
    WeightVector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return out;
}

// True iff a <= b componentwise (a Less b or a Equal b).
inline bool leq(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool lex_less(std::span<const std::int64_t> a, std::span<const std::int64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

}  // namespace wceg
