#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "apexhom/errors.hpp"

namespace apexhom {

// Arbitrary-precision natural number. All counts, powers and inequality
// verdicts in this library run through this type; it is never allowed to
// go negative. Backed by boost::multiprecision::cpp_int.
class BigNat {
public:
    using backend_type = boost::multiprecision::cpp_int;

    BigNat() : value_(0) {}
    BigNat(unsigned int v) : value_(v) {}
    BigNat(unsigned long v) : value_(v) {}
    BigNat(unsigned long long v) : value_(v) {}
    BigNat(int v) : value_(check_nonnegative(v)) {}
    BigNat(long long v) : value_(check_nonnegative(v)) {}

    static BigNat from_decimal(std::string_view text) {
        if (text.empty())
            throw parse_error("empty decimal literal", 0);
        for (std::size_t i = 0; i < text.size(); ++i)
            if (text[i] < '0' || text[i] > '9')
                throw parse_error("invalid decimal digit", i);
        BigNat out;
        out.value_ = backend_type(std::string(text));
        return out;
    }

    bool is_zero() const { return value_.is_zero(); }

    BigNat& operator+=(const BigNat& rhs) {
        value_ += rhs.value_;
        return *this;
    }
    BigNat& operator*=(const BigNat& rhs) {
        value_ *= rhs.value_;
        return *this;
    }
    friend BigNat operator+(BigNat lhs, const BigNat& rhs) { return lhs += rhs; }
    friend BigNat operator*(BigNat lhs, const BigNat& rhs) { return lhs *= rhs; }

    friend bool operator==(const BigNat& a, const BigNat& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigNat& a, const BigNat& b) {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (a.value_ > b.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    std::string to_string() const { return value_.str(); }

    double approx() const { return value_.convert_to<double>(); }

    const backend_type& backend() const { return value_; }

    friend std::ostream& operator<<(std::ostream& os, const BigNat& v) {
        return os << v.value_;
    }

    friend BigNat gcd(const BigNat& a, const BigNat& b) {
        BigNat out;
        out.value_ = boost::multiprecision::gcd(a.value_, b.value_);
        return out;
    }

    // Exact quotient, used only where divisibility is known (gcd reduction).
    friend BigNat div_exact(const BigNat& a, const BigNat& b) {
        if (b.is_zero())
            throw invalid_argument_error("division by zero");
        BigNat out;
        out.value_ = a.value_ / b.value_;
        return out;
    }

private:
    template <class T>
    static T check_nonnegative(T v) {
        if (v < 0)
            throw invalid_argument_error("BigNat cannot hold a negative value");
        return v;
    }

    backend_type value_;
};

// base^exp by repeated squaring; big_pow(x, 0) == 1 for every x.
inline BigNat big_pow(const BigNat& base, unsigned int exp) {
    BigNat result{1u};
    BigNat b = base;
    while (exp != 0) {
        if (exp & 1u)
            result *= b;
        b *= b;
        exp >>= 1u;
    }
    return result;
}

inline BigNat from_u128(unsigned __int128 v) {
    BigNat hi{static_cast<unsigned long long>(v >> 64)};
    BigNat lo{static_cast<unsigned long long>(v)};
    return hi * big_pow(BigNat{2u}, 64) + lo;
}

} // namespace apexhom
