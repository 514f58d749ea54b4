#include "legcard/finite_field.hpp"

#include <map>
#include <sstream>

#include "legcard/error.hpp"

namespace legcard {

namespace {

// Conway polynomials, constant term first.
const std::map<std::pair<int, int>, std::vector<int>>& conway_table() {
    static const std::map<std::pair<int, int>, std::vector<int>> table = {
        {{2, 2}, {1, 1, 1}},
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{2, 5}, {1, 0, 1, 0, 0, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{5, 2}, {2, 4, 1}},
    };
    return table;
}

std::vector<int> digits(int index, int p, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

int undigits(const std::vector<int>& c, int p) {
    int index = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) index = index * p + *it;
    return index;
}

}  // namespace

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(long long q) {
    if (q < 2) return {0, 0};
    long long p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    long long r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) return {0, 0};
    return {static_cast<int>(p), k};
}

std::shared_ptr<const FiniteField> FiniteField::make(int p, int k, int bound) {
    if (!is_prime(p)) fail(ErrorKind::invalid_argument, "characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) fail(ErrorKind::invalid_argument, "extension degree must be positive");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > bound) fail(ErrorKind::invalid_argument, "field order exceeds bound " + std::to_string(bound));
    }
    if (q > 255) fail(ErrorKind::invalid_argument, "field order exceeds 255");
    std::vector<int> modulus;
    if (k == 1) {
        modulus = {0, 1};
    } else {
        auto it = conway_table().find({p, k});
        if (it == conway_table().end())
            fail(ErrorKind::invalid_argument,
                 "no irreducible polynomial tabulated for F_" + std::to_string(p) + "^" + std::to_string(k));
        modulus = it->second;
    }
    return std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(modulus)));
}

std::shared_ptr<const FiniteField> FiniteField::of_order(int q, int bound) {
    auto [p, k] = prime_power(q);
    if (p == 0) fail(ErrorKind::invalid_argument, std::to_string(q) + " is not a prime power");
    return make(p, k, bound);
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
    for (int i = 0; i < k_; ++i) q_ *= p_;
    add_.resize(q_ * q_);
    mul_.resize(q_ * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (int a = 0; a < q_; ++a) {
        auto ca = digits(a, p_, k_);
        std::vector<int> cn(k_);
        for (int i = 0; i < k_; ++i) cn[i] = (p_ - ca[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(undigits(cn, p_));
        for (int b = 0; b < q_; ++b) {
            auto cb = digits(b, p_, k_);
            std::vector<int> cs(k_);
            for (int i = 0; i < k_; ++i) cs[i] = (ca[i] + cb[i]) % p_;
            add_[a * q_ + b] = static_cast<std::uint8_t>(undigits(cs, p_));

            // schoolbook product, then reduce by the monic modulus from the top
            std::vector<int> prod(2 * k_ - 1, 0);
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
            for (int d = 2 * k_ - 2; d >= k_; --d) {
                int lead = prod[d];
                if (lead == 0) continue;
                for (int i = 0; i <= k_; ++i)
                    prod[d - k_ + i] = ((prod[d - k_ + i] - lead * modulus_[i]) % p_ + p_) % p_;
            }
            prod.resize(k_);
            mul_[a * q_ + b] = static_cast<std::uint8_t>(undigits(prod, p_));
        }
    }
    for (int a = 1; a < q_; ++a) {
        for (int b = 1; b < q_; ++b) {
            if (mul_[a * q_ + b] == 1) {
                inv_[a] = static_cast<std::uint8_t>(b);
                break;
            }
        }
        if (inv_[a] == 0) fail(ErrorKind::internal, "modulus is reducible: zero divisor found");
    }
}

FqElem FiniteField::from_int(long long n) const {
    long long r = ((n % p_) + p_) % p_;
    return {static_cast<std::uint8_t>(r)};
}

FqElem FiniteField::element(int index) const {
    if (index < 0 || index >= q_) fail(ErrorKind::invalid_argument, "field element index out of range");
    return {static_cast<std::uint8_t>(index)};
}

std::vector<int> FiniteField::coefficients(FqElem x) const { return digits(x.index, p_, k_); }

FqElem FiniteField::inv(FqElem a) const {
    if (a.index == 0) fail(ErrorKind::invalid_argument, "inverse of zero");
    return {inv_[a.index]};
}

FqElem FiniteField::pow(FqElem a, long long e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    FqElem result = one();
    while (e > 0) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::vector<FqElem> FiniteField::elements() const {
    std::vector<FqElem> out;
    for (int i = 0; i < q_; ++i) out.push_back({static_cast<std::uint8_t>(i)});
    return out;
}

std::vector<FqElem> FiniteField::units() const {
    std::vector<FqElem> out;
    for (int i = 1; i < q_; ++i) out.push_back({static_cast<std::uint8_t>(i)});
    return out;
}

std::string FiniteField::to_string(FqElem x) const {
    if (k_ == 1) return std::to_string(x.index);
    // polynomial in the generator g, highest power first
    auto c = coefficients(x);
    std::ostringstream os;
    bool first = true;
    for (int i = k_ - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c[i];
        } else {
            if (c[i] != 1) os << c[i] << "*";
            os << "g";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace legcard
