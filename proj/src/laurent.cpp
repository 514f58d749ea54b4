#include "legcard/laurent.hpp"

#include <sstream>

#include "legcard/error.hpp"

namespace legcard {

LaurentPoly LaurentPoly::monomial(long long coeff, int exponent) {
    LaurentPoly p;
    p.add_term(coeff, exponent);
    return p;
}

void LaurentPoly::add_term(long long coeff, int exponent) {
    if (coeff == 0) return;
    auto& c = terms_[exponent];
    c += coeff;
    if (c == 0) terms_.erase(exponent);
}

long long LaurentPoly::coefficient(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? 0 : it->second;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto [e, c] : o.terms_) add_term(c, e);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& x, const LaurentPoly& y) {
    LaurentPoly out;
    for (auto [ex, cx] : x.terms_)
        for (auto [ey, cy] : y.terms_) out.add_term(cx * cy, ex + ey);
    return out;
}

QSqrt LaurentPoly::eval_ruling_variable(long q) const {
    if (q < 2) fail(ErrorKind::invalid_argument, "ruling variable needs q >= 2");
    return eval(QSqrt::ruling_variable(q));
}

QSqrt LaurentPoly::eval(const QSqrt& z) const {
    QSqrt sum(z.base());
    for (auto [e, c] : terms_) sum += z.pow(e) * mpq_class(static_cast<long>(c));
    return sum;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [e, c] : terms_) {
        long long mag = c < 0 ? -c : c;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "z";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

}  // namespace legcard
