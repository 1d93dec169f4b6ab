#pragma once

/**
 * @file checked.hpp
 * @brief Overflow-checked signed integers.
 *
 * Every arithmetic operation goes through the compiler's overflow builtins
 * and throws asg::overflow_error instead of wrapping. Two widths are used in
 * practice: Checked<std::int64_t> (narrow) and Checked<__int128> (wide, the
 * default for all computations).
 */

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace asg {

class overflow_error : public std::overflow_error {
public:
    explicit overflow_error(std::string const& what)
        : std::overflow_error("integer overflow: " + what) {}
};

template <typename Rep>
concept checked_rep = std::is_same_v<Rep, std::int64_t> || std::is_same_v<Rep, __int128>;

template <checked_rep Rep>
class Checked {
public:
    using rep_type = Rep;
    static constexpr int bits = sizeof(Rep) * 8;

    constexpr Checked() noexcept = default;

    template <std::integral T>
    constexpr Checked(T v) : v_(convert(v)) {}  // NOLINT: implicit from builtin integers

    constexpr Checked(__int128 v) requires(!std::is_same_v<Rep, __int128>) : v_(convert(v)) {}

    template <checked_rep Other>
    static constexpr Checked from(Checked<Other> other) {
        return Checked(other.raw());
    }

    [[nodiscard]] constexpr Rep raw() const noexcept { return v_; }

    static constexpr Checked max() noexcept { return from_raw(std::numeric_limits<Rep>::max()); }
    static constexpr Checked min() noexcept { return from_raw(std::numeric_limits<Rep>::min()); }

    friend constexpr Checked operator+(Checked x, Checked y) {
        Rep r;
        if (__builtin_add_overflow(x.v_, y.v_, &r)) throw overflow_error(describe(x, '+', y));
        return from_raw(r);
    }
    friend constexpr Checked operator-(Checked x, Checked y) {
        Rep r;
        if (__builtin_sub_overflow(x.v_, y.v_, &r)) throw overflow_error(describe(x, '-', y));
        return from_raw(r);
    }
    friend constexpr Checked operator*(Checked x, Checked y) {
        Rep r;
        if (__builtin_mul_overflow(x.v_, y.v_, &r)) throw overflow_error(describe(x, '*', y));
        return from_raw(r);
    }
    friend constexpr Checked operator/(Checked x, Checked y) {
        if (y.v_ == 0) throw std::domain_error("division by zero");
        if (y.v_ == -1 && x.v_ == std::numeric_limits<Rep>::min())
            throw overflow_error(describe(x, '/', y));
        return from_raw(x.v_ / y.v_);
    }
    friend constexpr Checked operator%(Checked x, Checked y) {
        if (y.v_ == 0) throw std::domain_error("division by zero");
        if (y.v_ == -1) return Checked{};
        return from_raw(x.v_ % y.v_);
    }
    constexpr Checked operator-() const { return Checked{} - *this; }

    constexpr Checked& operator+=(Checked o) { return *this = *this + o; }
    constexpr Checked& operator-=(Checked o) { return *this = *this - o; }
    constexpr Checked& operator*=(Checked o) { return *this = *this * o; }
    constexpr Checked& operator/=(Checked o) { return *this = *this / o; }
    constexpr Checked& operator%=(Checked o) { return *this = *this % o; }
    constexpr Checked& operator++() { return *this += 1; }
    constexpr Checked& operator--() { return *this -= 1; }

    friend constexpr bool operator==(Checked, Checked) = default;
    friend constexpr std::strong_ordering operator<=>(Checked x, Checked y) { return x.v_ <=> y.v_; }

    /// Narrowing conversion to a builtin integer; throws if the value does not fit.
    template <std::integral T>
    [[nodiscard]] constexpr T as() const {
        if constexpr (std::is_signed_v<T>) {
            if (v_ < static_cast<Rep>(std::numeric_limits<T>::min()) ||
                v_ > static_cast<Rep>(std::numeric_limits<T>::max()))
                throw overflow_error(to_string() + " does not fit the requested type");
        } else {
            if (v_ < 0 || static_cast<unsigned __int128>(v_) > std::numeric_limits<T>::max())
                throw overflow_error(to_string() + " does not fit the requested type");
        }
        return static_cast<T>(v_);
    }

    template <std::integral T>
    [[nodiscard]] constexpr bool fits() const noexcept {
        if constexpr (std::is_signed_v<T>) {
            return v_ >= static_cast<Rep>(std::numeric_limits<T>::min()) &&
                   v_ <= static_cast<Rep>(std::numeric_limits<T>::max());
        } else {
            return v_ >= 0 && static_cast<unsigned __int128>(v_) <= std::numeric_limits<T>::max();
        }
    }

    [[nodiscard]] std::string to_string() const {
        unsigned __int128 mag = v_ < 0 ? -static_cast<unsigned __int128>(v_)
                                       : static_cast<unsigned __int128>(v_);
        std::string digits;
        do {
            digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(mag % 10)));
            mag /= 10;
        } while (mag != 0);
        if (v_ < 0) digits.insert(digits.begin(), '-');
        return digits;
    }

    /// Parses an optionally signed decimal literal. Throws std::invalid_argument on
    /// malformed text and overflow_error when the value does not fit.
    static Checked parse(std::string_view text) {
        if (text.empty()) throw std::invalid_argument("empty integer literal");
        bool negative = false;
        std::size_t i = 0;
        if (text[0] == '-' || text[0] == '+') {
            negative = text[0] == '-';
            i = 1;
        }
        if (i == text.size()) throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
        Checked value{};
        for (; i < text.size(); ++i) {
            char ch = text[i];
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("malformed integer literal '" + std::string(text) + "'");
            try {
                value = value * 10 + (negative ? -(ch - '0') : (ch - '0'));
            } catch (overflow_error const&) {
                throw overflow_error("literal '" + std::string(text) + "' exceeds " +
                                     std::to_string(bits) + "-bit range");
            }
        }
        return value;
    }

    friend std::ostream& operator<<(std::ostream& os, Checked x) { return os << x.to_string(); }

private:
    static constexpr Checked from_raw(Rep r) noexcept {
        Checked c;
        c.v_ = r;
        return c;
    }

    template <typename T>
    static constexpr Rep convert(T v) {
        if constexpr (std::is_same_v<T, Rep>) {
            return v;
        } else if constexpr (std::is_signed_v<T> || std::is_same_v<T, __int128>) {
            if constexpr (sizeof(T) > sizeof(Rep)) {
                if (v < static_cast<T>(std::numeric_limits<Rep>::min()) ||
                    v > static_cast<T>(std::numeric_limits<Rep>::max()))
                    throw overflow_error("value exceeds " + std::to_string(bits) + "-bit range");
            }
            return static_cast<Rep>(v);
        } else {
            if (static_cast<unsigned __int128>(v) >
                static_cast<unsigned __int128>(std::numeric_limits<Rep>::max()))
                throw overflow_error("value exceeds " + std::to_string(bits) + "-bit range");
            return static_cast<Rep>(v);
        }
    }

    static std::string describe(Checked x, char op, Checked y) {
        return x.to_string() + ' ' + op + ' ' + y.to_string() + " exceeds " + std::to_string(bits) +
               "-bit range";
    }

    Rep v_ = 0;
};

using Narrow = Checked<std::int64_t>;
using Wide = Checked<__int128>;

template <typename T>
inline constexpr bool is_checked_v = false;
template <checked_rep Rep>
inline constexpr bool is_checked_v<Checked<Rep>> = true;

template <typename T>
concept checked_integer = is_checked_v<T>;

}  // namespace asg
