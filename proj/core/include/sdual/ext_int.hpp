#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

namespace sdual {

/// An integer extended by one extra token, INF, that stands for an empty
/// (undefined) cell. INF is not "infinitely large": it absorbs addition,
/// is annihilated by a zero coefficient, and compares unequal to everything.
///
///   INF + x = x + INF = INF + INF = INF
///   0 * INF = 0,  a * INF = INF for a != 0
///   INF == x is false for every x, including INF itself
///
/// Because of the last rule `operator==` is not reflexive on INF (like NaN).
/// Use `identical()` when a structural comparison is needed.
class ExtInt {
public:
    constexpr ExtInt() = default;
    constexpr ExtInt(std::int32_t value) : value_(value) {}  // NOLINT(implicit)

    static constexpr ExtInt inf()
    {
        ExtInt r;
        r.inf_ = true;
        return r;
    }

    constexpr bool is_inf() const { return inf_; }
    constexpr bool is_finite() const { return !inf_; }
    constexpr bool is_nonzero() const { return inf_ || value_ != 0; }

    /// Finite value; throws std::domain_error on INF.
    std::int32_t value() const;

    friend constexpr bool identical(ExtInt a, ExtInt b)
    {
        return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
    }

    friend constexpr bool operator==(ExtInt a, ExtInt b)
    {
        return !a.inf_ && !b.inf_ && a.value_ == b.value_;
    }

private:
    std::int32_t value_ = 0;
    bool inf_ = false;
};

inline constexpr ExtInt kInf = ExtInt::inf();

/// Extended addition. Throws std::overflow_error if the finite sum overflows.
ExtInt ext_add(ExtInt a, ExtInt b);

/// Coefficient times extended value; a zero coefficient wins over INF.
ExtInt ext_mul(std::int32_t a, ExtInt b);

inline ExtInt operator+(ExtInt a, ExtInt b) { return ext_add(a, b); }
inline ExtInt operator*(std::int32_t a, ExtInt b) { return ext_mul(a, b); }

/// True iff every component is nonzero (INF counts as nonzero). Vacuously
/// true on an empty vector.
bool all_nonzero(std::span<const ExtInt> y);

/// "." for INF, decimal otherwise.
std::string to_string(ExtInt v);
std::ostream& operator<<(std::ostream& os, ExtInt v);

}  // namespace sdual
