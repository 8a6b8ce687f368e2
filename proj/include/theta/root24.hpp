#pragma once

#include "theta/arith.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <ostream>
#include <string>

namespace theta {

/// Exact 24th root of unity exp(2 pi i k / 24), 0 <= k < 24.
class Root24 {
public:
    constexpr Root24() = default;

    template <class Int>
    static Root24 from_exponent(const Int& k)
    {
        return Root24(static_cast<int>(floor_mod(k, Int(24))));
    }

    static constexpr Root24 one() { return Root24(0); }

    constexpr int exponent() const { return k_; }

    friend constexpr Root24 operator*(Root24 x, Root24 y) { return Root24((x.k_ + y.k_) % 24); }
    Root24& operator*=(Root24 y) { return *this = *this * y; }

    constexpr Root24 inverse() const { return Root24((24 - k_) % 24); }

    Root24 pow(long long n) const { return from_exponent((static_cast<long long>(k_) * (n % 24))); }

    constexpr bool is_one() const { return k_ == 0; }

    friend constexpr bool operator==(Root24, Root24) = default;
    friend constexpr auto operator<=>(Root24, Root24) = default;

    template <class R = double>
    std::complex<R> value() const
    {
        const R angle = 2 * std::numbers::pi_v<R> * k_ / 24;
        return std::polar(R(1), angle);
    }

    /// "k/24"
    std::string fraction() const { return std::to_string(k_) + "/24"; }

    /// "exp(2*pi*i*k/24)"
    std::string exp_form() const { return "exp(2*pi*i*" + std::to_string(k_) + "/24)"; }

    /// "1", "i", "-1", "-i" where applicable, exp_form otherwise.
    std::string pretty() const
    {
        switch (k_) {
        case 0: return "1";
        case 6: return "i";
        case 12: return "-1";
        case 18: return "-i";
        default: return exp_form();
        }
    }

    friend std::ostream& operator<<(std::ostream& os, Root24 r) { return os << r.exp_form(); }

private:
    constexpr explicit Root24(int k) : k_(k) {}

    int k_ = 0;
};

} // namespace theta
