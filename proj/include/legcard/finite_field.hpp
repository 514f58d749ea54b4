#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace legcard {

/// An element of a small finite field, stored as the base-p integer encoding
/// of its coefficient vector (index = sum c_i p^i). Arithmetic goes through
/// the owning FiniteField.
struct FqElem {
    std::uint8_t index = 0;

    friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// F_q with q = p^k <= bound. Extension fields use a fixed table of Conway
/// polynomials, so the element encoding is reproducible across runs.
class FiniteField {
public:
    static constexpr int default_bound = 32;

    /// Throws Error(invalid_argument) if p is not prime or p^k exceeds `bound`.
    static std::shared_ptr<const FiniteField> make(int p, int k, int bound = default_bound);
    /// Same, from the order q (which must be a prime power).
    static std::shared_ptr<const FiniteField> of_order(int q, int bound = default_bound);

    int characteristic() const { return p_; }
    int degree() const { return k_; }
    int order() const { return q_; }
    /// Monic modulus, coefficients from the constant term up. Degree 1 for prime fields.
    const std::vector<int>& modulus() const { return modulus_; }

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    /// Image of an integer under Z -> F_p -> F_q.
    FqElem from_int(long long n) const;
    FqElem element(int index) const;
    std::vector<int> coefficients(FqElem x) const;

    FqElem add(FqElem a, FqElem b) const { return {add_[a.index * q_ + b.index]}; }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg(b)); }
    FqElem mul(FqElem a, FqElem b) const { return {mul_[a.index * q_ + b.index]}; }
    FqElem neg(FqElem a) const { return {neg_[a.index]}; }
    /// Throws Error(invalid_argument) on zero.
    FqElem inv(FqElem a) const;
    FqElem pow(FqElem a, long long e) const;
    bool is_zero(FqElem a) const { return a.index == 0; }

    std::vector<FqElem> elements() const;
    std::vector<FqElem> units() const;

    std::string to_string(FqElem x) const;

private:
    FiniteField(int p, int k, std::vector<int> modulus);

    int p_;
    int k_;
    int q_;
    std::vector<int> modulus_;
    std::vector<std::uint8_t> add_;
    std::vector<std::uint8_t> mul_;
    std::vector<std::uint8_t> neg_;
    std::vector<std::uint8_t> inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

bool is_prime(long long n);

/// If q = p^k with p prime, returns {p, k}; otherwise {0, 0}.
std::pair<int, int> prime_power(long long q);

}  // namespace legcard
