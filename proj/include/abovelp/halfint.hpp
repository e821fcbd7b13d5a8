#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace abovelp {

#define ABOVELP_CHECK(cond, msg)                                        \
  do {                                                                  \
    if (!(cond)) throw std::logic_error(std::string("invariant: ") + (msg)); \
  } while (0)

// Exact half-integer arithmetic. The stored value is twice the real one,
// so every quantity that is a multiple of 1/2 stays an integer.
struct HalfInt {
    int64_t doubled = 0;

    constexpr HalfInt() = default;
    static constexpr HalfInt from_int(int64_t v) { return HalfInt{2 * v}; }
    static constexpr HalfInt from_doubled(int64_t d) { return HalfInt{d}; }
    static constexpr HalfInt half() { return HalfInt{1}; }

    constexpr bool is_integral() const { return (doubled & 1) == 0; }
    constexpr bool is_zero() const { return doubled == 0; }
    constexpr bool is_negative() const { return doubled < 0; }

    // largest integer <= value (works for negatives too)
    constexpr int64_t floor_int() const {
        return doubled >= 0 ? doubled / 2 : (doubled - 1) / 2;
    }
    constexpr int64_t ceil_int() const {
        return doubled >= 0 ? (doubled + 1) / 2 : doubled / 2;
    }
    int64_t as_int() const {
        ABOVELP_CHECK(is_integral(), "half-integer is not integral");
        return doubled / 2;
    }
    // exact division by two; valid only when the value is integral
    HalfInt halve() const {
        ABOVELP_CHECK(is_integral(), "halving a non-integral value");
        return HalfInt{doubled / 2};
    }

    constexpr HalfInt operator+(HalfInt o) const { return HalfInt{doubled + o.doubled}; }
    constexpr HalfInt operator-(HalfInt o) const { return HalfInt{doubled - o.doubled}; }
    constexpr HalfInt operator-() const { return HalfInt{-doubled}; }
    HalfInt& operator+=(HalfInt o) { doubled += o.doubled; return *this; }
    HalfInt& operator-=(HalfInt o) { doubled -= o.doubled; return *this; }
    constexpr HalfInt operator*(int64_t k) const { return HalfInt{doubled * k}; }

    constexpr bool operator==(const HalfInt&) const = default;
    constexpr auto operator<=>(const HalfInt&) const = default;

    // "3", "-3", "7/2"
    std::string str() const {
        if (is_integral()) return std::to_string(doubled / 2);
        return std::to_string(doubled) + "/2";
    }

private:
    explicit constexpr HalfInt(int64_t d) : doubled(d) {}
};

inline HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace abovelp
