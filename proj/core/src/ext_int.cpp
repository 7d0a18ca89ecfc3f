#include "sdual/ext_int.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sdual {

std::int32_t ExtInt::value() const
{
    if (inf_)
        throw std::domain_error("ExtInt::value() called on INF");
    return value_;
}

ExtInt ext_add(ExtInt a, ExtInt b)
{
    if (a.is_inf() || b.is_inf())
        return kInf;
    std::int32_t sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum))
        throw std::overflow_error("ExtInt addition overflow");
    return sum;
}

ExtInt ext_mul(std::int32_t a, ExtInt b)
{
    if (a == 0)
        return 0;
    if (b.is_inf())
        return kInf;
    std::int32_t product = 0;
    if (__builtin_mul_overflow(a, b.value(), &product))
        throw std::overflow_error("ExtInt multiplication overflow");
    return product;
}

bool all_nonzero(std::span<const ExtInt> y)
{
    return std::all_of(y.begin(), y.end(), [](ExtInt v) { return v.is_nonzero(); });
}

std::string to_string(ExtInt v)
{
    return v.is_inf() ? std::string(".") : std::to_string(v.value());
}

std::ostream& operator<<(std::ostream& os, ExtInt v)
{
    return os << to_string(v);
}

}  // namespace sdual
