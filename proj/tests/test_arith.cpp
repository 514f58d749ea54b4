#include <doctest.h>

#include <random>

#include "legcard/error.hpp"
#include "legcard/finite_field.hpp"
#include "legcard/laurent.hpp"
#include "legcard/qsqrt.hpp"
#include "oracles.hpp"

using namespace legcard;

namespace {

const std::vector<int> kOrders = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

mpq_class random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
    mpq_class r(num(rng), den(rng));
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("small fields from the table") {
    auto f2 = FiniteField::make(2, 1);
    CHECK(f2->order() == 2);
    CHECK(f2->add(f2->one(), f2->one()) == f2->zero());

    auto f4 = FiniteField::make(2, 2);
    CHECK(f4->modulus() == std::vector<int>{1, 1, 1});
    FqElem x = f4->element(2);  // the generator
    CHECK(f4->mul(x, f4->add(x, f4->one())) == f4->one());

    auto f5 = FiniteField::make(5, 1);
    CHECK(f5->inv(f5->from_int(2)) == f5->from_int(3));
    CHECK(f5->from_int(-1) == f5->from_int(4));
}

TEST_CASE("field construction errors") {
    CHECK_THROWS_AS(FiniteField::make(4, 1), Error);
    CHECK_THROWS_AS(FiniteField::make(2, 6), Error);  // 64 > default bound
    CHECK_THROWS_AS(FiniteField::of_order(6), Error);
    CHECK_THROWS_AS(FiniteField::of_order(1), Error);
    auto f3 = FiniteField::of_order(3);
    CHECK_THROWS_AS(f3->inv(f3->zero()), Error);
}

TEST_CASE("field axioms and Frobenius for every order up to 32") {
    for (int q : kOrders) {
        CAPTURE(q);
        auto f = FiniteField::of_order(q);
        auto els = f->elements();
        REQUIRE(static_cast<int>(els.size()) == q);
        REQUIRE(static_cast<int>(f->units().size()) == q - 1);
        const int p = f->characteristic();
        std::set<FqElem> images;
        for (auto a : els) {
            CHECK(f->add(a, f->neg(a)) == f->zero());
            CHECK(f->mul(a, f->one()) == a);
            if (!f->is_zero(a)) CHECK(f->mul(a, f->inv(a)) == f->one());
            images.insert(f->pow(a, p));
            for (auto b : els) {
                CHECK(f->add(a, b) == f->add(b, a));
                CHECK(f->mul(a, b) == f->mul(b, a));
                CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
                CHECK(f->pow(f->mul(a, b), p) == f->mul(f->pow(a, p), f->pow(b, p)));
            }
        }
        CHECK(static_cast<int>(images.size()) == q);  // Frobenius is bijective
        // associativity and distributivity on a sample of triples
        for (std::size_t i = 0; i < els.size(); i += 3)
            for (std::size_t j = 0; j < els.size(); j += 2)
                for (auto c : els) {
                    auto a = els[i], b = els[j];
                    CHECK(f->mul(a, f->mul(b, c)) == f->mul(f->mul(a, b), c));
                    CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
                }
    }
}

TEST_CASE("field element formatting") {
    auto f4 = FiniteField::of_order(4);
    CHECK(f4->to_string(f4->element(0)) == "0");
    CHECK(f4->to_string(f4->element(2)) == "g");
    CHECK(f4->to_string(f4->element(3)) == "g+1");
    CHECK(FiniteField::of_order(5)->to_string(FiniteField::of_order(5)->from_int(3)) == "3");
}

TEST_CASE("QSqrt ring laws on random values") {
    std::mt19937_64 rng(7);
    for (long q : {2L, 3L, 5L, 7L, 4L, 9L}) {
        for (int trial = 0; trial < 200; ++trial) {
            mpq_class a = random_rational(rng), b = random_rational(rng);
            QSqrt x(q, a, b), conj(q, a, -b);
            CHECK(x * conj == QSqrt::rational(q, a * a - b * b * q));
            QSqrt y(q, random_rational(rng), random_rational(rng));
            QSqrt z(q, random_rational(rng), random_rational(rng));
            CHECK((x * y) * z == x * (y * z));
            CHECK(x * (y + z) == x * y + x * z);
            CHECK(x + y == y + x);
            if (!x.is_zero()) CHECK(x * x.inverse() == QSqrt::rational(q, 1));
        }
    }
}

TEST_CASE("QSqrt perfect squares fold into the rational part") {
    QSqrt x(4, 1, 1);
    CHECK(x.sqrt_part() == 0);
    CHECK(x.rational_part() == 3);
    CHECK(QSqrt::sqrt_power(9, 3) == QSqrt::rational(9, 27));
}

TEST_CASE("QSqrt formatting") {
    CHECK(QSqrt(2, 0, 4).to_string() == "4*sqrt(2)");
    CHECK(QSqrt(2, 0, mpq_class(5, 2)).to_string() == "5/2*sqrt(2)");
    CHECK(QSqrt(2, mpq_class(1, 4), 0).to_string() == "1/4");
    CHECK(QSqrt(2).to_string() == "0");
    CHECK(QSqrt(3, 1, -2).to_string() == "1 - 2*sqrt(3)");
    CHECK(QSqrt(3, 0, 1).to_string() == "sqrt(3)");
    CHECK(QSqrt::sqrt_power(2, -1).to_string() == "1/2*sqrt(2)");
}

TEST_CASE("QSqrt base mismatch is rejected") { CHECK_THROWS_AS(QSqrt(2, 1, 1) + QSqrt(3, 1, 1), Error); }

TEST_CASE("Laurent evaluation at the ruling variable") {
    CHECK(LaurentPoly::monomial(1, -1).eval_ruling_variable(2) == QSqrt(2, 0, 1));
    CHECK(LaurentPoly::monomial(1, 1).eval_ruling_variable(2) == QSqrt(2, 0, mpq_class(1, 2)));

    LaurentPoly p = LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(2, -1);
    auto [rat, root] = oracle::ruling_value(p, 3);
    CHECK(p.eval_ruling_variable(3) == QSqrt(3, rat, root));
    CHECK(p.eval_ruling_variable(3).to_string() == "5/3*sqrt(3)");
}

TEST_CASE("Laurent evaluation matches the oracle and is multiplicative") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coeff(-5, 5), expo(-4, 4), len(0, 4);
    for (int trial = 0; trial < 300; ++trial) {
        LaurentPoly p, r;
        for (int i = len(rng); i > 0; --i) p.add_term(coeff(rng), expo(rng));
        for (int i = len(rng); i > 0; --i) r.add_term(coeff(rng), expo(rng));
        for (long q : {2L, 3L, 4L, 5L}) {
            auto [rat, root] = oracle::ruling_value(p, q);
            CHECK(p.eval_ruling_variable(q) == QSqrt(q, rat, root));
            CHECK((p * r).eval_ruling_variable(q) == p.eval_ruling_variable(q) * r.eval_ruling_variable(q));
            CHECK((p + r).eval_ruling_variable(q) == p.eval_ruling_variable(q) + r.eval_ruling_variable(q));
        }
    }
}

TEST_CASE("Laurent polynomials keep no zero terms and print in increasing order") {
    LaurentPoly p;
    p.add_term(2, -1);
    p.add_term(1, 1);
    p.add_term(3, 0);
    p.add_term(-3, 0);
    CHECK(p.terms().size() == 2);
    CHECK(p.to_string() == "2*z^-1 + z");
    CHECK(LaurentPoly().to_string() == "0");
    CHECK(LaurentPoly::monomial(-1, 2).to_string() == "-z^2");
}
