#pragma once

#include <gmpxx.h>

#include <string>

namespace legcard {

/// Exact element a + b*sqrt(q) of Q(sqrt(q)), with a, b rational.
///
/// The base q is fixed per value and must agree between operands. When q is
/// a perfect square the value is folded into `a` so that equality stays a
/// plain field comparison.
class QSqrt {
public:
    QSqrt() = default;
    explicit QSqrt(long q, mpq_class a = 0, mpq_class b = 0);

    static QSqrt rational(long q, const mpq_class& a) { return QSqrt(q, a, 0); }
    /// (sqrt q)^n for any integer n.
    static QSqrt sqrt_power(long q, long n);
    /// q^(1/2) - q^(-1/2).
    static QSqrt ruling_variable(long q);

    long base() const { return q_; }
    const mpq_class& rational_part() const { return a_; }
    const mpq_class& sqrt_part() const { return b_; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QSqrt operator-() const { return QSqrt(q_, -a_, -b_); }
    QSqrt& operator+=(const QSqrt& o);
    QSqrt& operator-=(const QSqrt& o);
    QSqrt& operator*=(const QSqrt& o);
    QSqrt& operator*=(const mpq_class& r);
    QSqrt inverse() const;
    QSqrt pow(long n) const;

    friend QSqrt operator+(QSqrt x, const QSqrt& y) { return x += y; }
    friend QSqrt operator-(QSqrt x, const QSqrt& y) { return x -= y; }
    friend QSqrt operator*(QSqrt x, const QSqrt& y) { return x *= y; }
    friend QSqrt operator*(QSqrt x, const mpq_class& r) { return x *= r; }
    friend QSqrt operator/(const QSqrt& x, const QSqrt& y) { return x * y.inverse(); }
    friend bool operator==(const QSqrt& x, const QSqrt& y) {
        return x.q_ == y.q_ && x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const QSqrt& x, const QSqrt& y) { return !(x == y); }

    /// "a + b*sqrt(q)" with reduced fractions; zero parts are omitted,
    /// e.g. "4*sqrt(2)", "5/2*sqrt(2)", "1/4", "0".
    std::string to_string() const;

private:
    void normalize();
    void check_base(const QSqrt& o) const;

    long q_ = 1;
    mpq_class a_ = 0;
    mpq_class b_ = 0;
    long root_ = 1;  // integer sqrt of q if q is a perfect square, else 0
};

std::string rational_to_string(const mpq_class& r);

}  // namespace legcard
