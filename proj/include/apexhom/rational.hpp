#pragma once

#include <string>
#include <utility>

#include "apexhom/bignat.hpp"
#include "apexhom/errors.hpp"

namespace apexhom {

enum class Ordering { less, equal, greater };

// Non-negative exact rational. Representatives are not kept reduced;
// every comparison cross-multiplies in BigNat, so a/b and (ka)/(kb)
// behave identically. reduced() exists for canonical display only.
class ExactRational {
public:
    ExactRational() : num_(0), den_(1u) {}

    ExactRational(BigNat num, BigNat den)
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero())
            throw invalid_argument_error("rational with zero denominator");
    }

    ExactRational(unsigned long long num, unsigned long long den = 1)
        : ExactRational(BigNat{num}, BigNat{den}) {}

    const BigNat& num() const { return num_; }
    const BigNat& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    ExactRational& operator*=(const ExactRational& rhs) {
        num_ *= rhs.num_;
        den_ *= rhs.den_;
        return *this;
    }
    friend ExactRational operator*(ExactRational lhs, const ExactRational& rhs) {
        return lhs *= rhs;
    }

    ExactRational pow(unsigned int exp) const {
        return ExactRational{big_pow(num_, exp), big_pow(den_, exp)};
    }

    ExactRational reduced() const {
        BigNat g = gcd(num_, den_);
        if (g.is_zero() || g == BigNat{1u})
            return num_.is_zero() ? ExactRational{BigNat{0u}, BigNat{1u}} : *this;
        return ExactRational{div_exact(num_, g), div_exact(den_, g)};
    }

    // Canonical "num/den" in lowest terms.
    std::string to_string() const {
        ExactRational r = reduced();
        return r.num_.to_string() + "/" + r.den_.to_string();
    }

    double approx() const { return num_.approx() / den_.approx(); }

private:
    BigNat num_;
    BigNat den_;
};

inline Ordering rational_cmp(const ExactRational& a, const ExactRational& b) {
    BigNat lhs = a.num() * b.den();
    BigNat rhs = b.num() * a.den();
    if (lhs < rhs) return Ordering::less;
    if (lhs == rhs) return Ordering::equal;
    return Ordering::greater;
}

inline bool operator==(const ExactRational& a, const ExactRational& b) {
    return rational_cmp(a, b) == Ordering::equal;
}
inline bool operator<(const ExactRational& a, const ExactRational& b) {
    return rational_cmp(a, b) == Ordering::less;
}
inline bool operator<=(const ExactRational& a, const ExactRational& b) {
    return rational_cmp(a, b) != Ordering::greater;
}
inline bool operator>(const ExactRational& a, const ExactRational& b) {
    return rational_cmp(a, b) == Ordering::greater;
}
inline bool operator>=(const ExactRational& a, const ExactRational& b) {
    return rational_cmp(a, b) != Ordering::less;
}

// value of n against a rational threshold, without leaving integers
inline Ordering compare_nat_rational(const BigNat& n, const ExactRational& q) {
    BigNat lhs = n * q.den();
    if (lhs < q.num()) return Ordering::less;
    if (lhs == q.num()) return Ordering::equal;
    return Ordering::greater;
}

} // namespace apexhom
