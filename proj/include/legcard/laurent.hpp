#pragma once

#include <map>
#include <string>

#include "legcard/qsqrt.hpp"

namespace legcard {

/// Integer Laurent polynomial in one variable z. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long coeff, int exponent);

    void add_term(long long coeff, int exponent);
    long long coefficient(int exponent) const;
    const std::map<int, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    LaurentPoly& operator+=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly x, const LaurentPoly& y) { return x += y; }
    friend LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y);
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Value at z = q^(1/2) - q^(-1/2), exact in Q(sqrt q). Requires q >= 2.
    QSqrt eval_ruling_variable(long q) const;
    /// Value at an arbitrary nonzero element of Q(sqrt q).
    QSqrt eval(const QSqrt& z) const;

    /// "c*z^k" terms in increasing exponent order, e.g. "2*z^-1 + z", "z^-1", "0".
    std::string to_string() const;

private:
    std::map<int, long long> terms_;
};

}  // namespace legcard
