#pragma once

#include <compare>
#include <concepts>
#include <ostream>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fjoin {

/// Raised when an exact index computation leaves the 128-bit range.
class OverflowError : public std::overflow_error {
public:
    explicit OverflowError(const std::string& operation)
        : std::overflow_error("arithmetic overflow in " + operation), operation_(operation) {}

    const std::string& operation() const noexcept { return operation_; }

private:
    std::string operation_;
};

/// Exact signed integer backed by __int128. Every arithmetic operator
/// checks for overflow and throws OverflowError instead of wrapping.
class Integer {
public:
    __extension__ typedef __int128 Raw;

    constexpr Integer() = default;

    template <std::integral T>
    constexpr Integer(T value) : value_(static_cast<Raw>(value)) {}  // NOLINT: implicit by intent

    static constexpr Integer from_raw(Raw value) {
        Integer out;
        out.value_ = value;
        return out;
    }

    constexpr Raw raw() const { return value_; }

    bool fits_int64() const;
    /// Throws OverflowError if the value does not fit.
    std::int64_t to_int64() const;
    std::string to_string() const;

    friend Integer operator+(Integer a, Integer b) {
        Raw out;
        if (__builtin_add_overflow(a.value_, b.value_, &out)) throw OverflowError("addition");
        return from_raw(out);
    }
    friend Integer operator-(Integer a, Integer b) {
        Raw out;
        if (__builtin_sub_overflow(a.value_, b.value_, &out)) throw OverflowError("subtraction");
        return from_raw(out);
    }
    friend Integer operator*(Integer a, Integer b) {
        Raw out;
        if (__builtin_mul_overflow(a.value_, b.value_, &out)) throw OverflowError("multiplication");
        return from_raw(out);
    }
    /// Truncating division; division by zero throws std::domain_error.
    friend Integer operator/(Integer a, Integer b) {
        if (b.value_ == 0) throw std::domain_error("division by zero");
        if (b.value_ == -1) return -a;
        return from_raw(a.value_ / b.value_);
    }
    Integer operator-() const { return Integer{0} - *this; }

    Integer& operator+=(Integer other) { return *this = *this + other; }
    Integer& operator-=(Integer other) { return *this = *this - other; }
    Integer& operator*=(Integer other) { return *this = *this * other; }

    friend constexpr bool operator==(Integer a, Integer b) = default;
    friend constexpr std::strong_ordering operator<=>(Integer a, Integer b) {
        return a.value_ <=> b.value_;
    }

private:
    Raw value_ = 0;
};

Integer pow(Integer base, unsigned exponent);

inline std::string to_string(Integer value) { return value.to_string(); }
inline std::ostream& operator<<(std::ostream& os, Integer value) { return os << value.to_string(); }

}  // namespace fjoin
