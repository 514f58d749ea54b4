#include "legcard/qsqrt.hpp"

#include "legcard/error.hpp"

namespace legcard {

namespace {

long integer_sqrt(long q) {
    long r = 0;
    while ((r + 1) * (r + 1) <= q) ++r;
    return r * r == q ? r : 0;
}

}  // namespace

std::string rational_to_string(const mpq_class& r) {
    mpq_class c = r;
    c.canonicalize();
    return c.get_str();
}

QSqrt::QSqrt(long q, mpq_class a, mpq_class b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
    if (q < 1) fail(ErrorKind::invalid_argument, "QSqrt base must be positive");
    root_ = integer_sqrt(q);
    normalize();
}

void QSqrt::normalize() {
    a_.canonicalize();
    b_.canonicalize();
    if (root_ != 0 && b_ != 0) {
        a_ += b_ * root_;
        b_ = 0;
    }
}

void QSqrt::check_base(const QSqrt& o) const {
    if (q_ != o.q_)
        fail(ErrorKind::invalid_argument,
             "QSqrt base mismatch: " + std::to_string(q_) + " vs " + std::to_string(o.q_));
}

QSqrt QSqrt::sqrt_power(long q, long n) {
    // (sqrt q)^n = q^floor(n/2) * sqrt(q)^(n mod 2)
    long half = n >= 0 ? n / 2 : -((-n + 1) / 2);
    long odd = n - 2 * half;  // 0 or 1
    mpq_class scale = 1;
    mpz_class qz = q;
    mpz_class pw;
    mpz_pow_ui(pw.get_mpz_t(), qz.get_mpz_t(), static_cast<unsigned long>(half >= 0 ? half : -half));
    if (half >= 0)
        scale = mpq_class(pw);
    else
        scale = mpq_class(1) / mpq_class(pw);
    return odd ? QSqrt(q, 0, scale) : QSqrt(q, scale, 0);
}

QSqrt QSqrt::ruling_variable(long q) {
    // sqrt(q) - 1/sqrt(q) = (q - 1)/q * sqrt(q)
    return QSqrt(q, 0, mpq_class(q - 1, q));
}

QSqrt& QSqrt::operator+=(const QSqrt& o) {
    check_base(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QSqrt& QSqrt::operator-=(const QSqrt& o) {
    check_base(o);
    a_ -= o.a_;
    b_ -= o.b_;
    normalize();
    return *this;
}

QSqrt& QSqrt::operator*=(const QSqrt& o) {
    check_base(o);
    mpq_class a = a_ * o.a_ + b_ * o.b_ * q_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    normalize();
    return *this;
}

QSqrt& QSqrt::operator*=(const mpq_class& r) {
    a_ *= r;
    b_ *= r;
    normalize();
    return *this;
}

QSqrt QSqrt::inverse() const {
    // b == 0 whenever q is a perfect square, so the norm vanishes only at zero
    mpq_class norm = a_ * a_ - b_ * b_ * q_;
    if (norm == 0) fail(ErrorKind::invalid_argument, "inverse of zero in Q(sqrt q)");
    return QSqrt(q_, a_ / norm, -b_ / norm);
}

QSqrt QSqrt::pow(long n) const {
    QSqrt base = n >= 0 ? *this : inverse();
    unsigned long e = static_cast<unsigned long>(n >= 0 ? n : -n);
    QSqrt result(q_, 1, 0);
    while (e > 0) {
        if (e & 1) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

std::string QSqrt::to_string() const {
    const std::string root = "sqrt(" + std::to_string(q_) + ")";
    auto sqrt_term = [&](const mpq_class& c) -> std::string {
        if (c == 1) return root;
        return rational_to_string(c) + "*" + root;
    };
    if (b_ == 0) return rational_to_string(a_);
    if (a_ == 0) {
        if (b_ == -1) return "-" + root;
        return sqrt_term(b_);
    }
    if (b_ < 0) return rational_to_string(a_) + " - " + sqrt_term(-b_);
    return rational_to_string(a_) + " + " + sqrt_term(b_);
}

}  // namespace legcard
