#include <gtest/gtest.h>

#include <limits>

#include "fjoin/integer.hpp"

namespace fjoin {
namespace {

TEST(IntegerTest, ToStringCoversSignAndWidth) {
    EXPECT_EQ(Integer{0}.to_string(), "0");
    EXPECT_EQ(Integer{-42}.to_string(), "-42");
    EXPECT_EQ(pow(Integer{10}, 20).to_string(), "100000000000000000000");
    const Integer min = Integer::from_raw(static_cast<Integer::Raw>(1) << 127);
    EXPECT_EQ(min.to_string(), "-170141183460469231731687303715884105728");
}

TEST(IntegerTest, ArithmeticOverflowThrows) {
    const Integer big = pow(Integer{2}, 100);
    EXPECT_THROW(big * big, OverflowError);
    EXPECT_THROW(pow(Integer{10}, 40), OverflowError);
    const Integer max = Integer::from_raw(~(static_cast<Integer::Raw>(1) << 127));
    EXPECT_THROW(max + 1, OverflowError);
    EXPECT_THROW(-max - 2, OverflowError);
}

TEST(IntegerTest, Int64Conversion) {
    EXPECT_EQ(Integer{std::numeric_limits<std::int64_t>::max()}.to_int64(),
              std::numeric_limits<std::int64_t>::max());
    EXPECT_FALSE((Integer{std::numeric_limits<std::int64_t>::max()} + 1).fits_int64());
    EXPECT_THROW((Integer{std::numeric_limits<std::int64_t>::max()} + 1).to_int64(), OverflowError);
}

TEST(IntegerTest, Division) {
    EXPECT_EQ(Integer{7} / 2, Integer{3});
    EXPECT_EQ(Integer{-8} / -1, Integer{8});
    EXPECT_THROW(Integer{1} / 0, std::domain_error);
}

}  // namespace
}  // namespace fjoin
