#include "fjoin/integer.hpp"

#include <algorithm>
#include <limits>

namespace fjoin {

bool Integer::fits_int64() const {
    return value_ >= std::numeric_limits<std::int64_t>::min() &&
           value_ <= std::numeric_limits<std::int64_t>::max();
}

std::int64_t Integer::to_int64() const {
    if (!fits_int64()) throw OverflowError("conversion to 64-bit integer");
    return static_cast<std::int64_t>(value_);
}

std::string Integer::to_string() const {
    if (value_ == 0) return "0";
    std::string digits;
    // Work on the negative side so the minimum value needs no special case.
    Raw v = value_ < 0 ? value_ : -value_;
    while (v != 0) {
        digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
        v /= 10;
    }
    if (value_ < 0) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Integer pow(Integer base, unsigned exponent) {
    Integer result{1};
    while (exponent-- > 0) result *= base;
    return result;
}

}  // namespace fjoin
