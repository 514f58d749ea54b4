#include <doctest.h>

#include <random>

#include "legcard/augcat.hpp"
#include "legcard/error.hpp"
#include "legcard/verify.hpp"
#include "oracles.hpp"

using namespace legcard;

namespace {

Dga dga_of(const std::string& name) { return build_dga(Front(builtin_front(name))); }

// e1(a) - e'(a) as K applied to the differential, expanded word by word.
FqElem homotopy_on(const Dga& d, const FiniteField& f, const Augmentation& e1, const Augmentation& e2,
                   const std::vector<FqElem>& k, int g) {
    FqElem total = f.zero();
    for (const auto& [w, c] : d.differential[g].terms())
        for (std::size_t l = 0; l < w.size(); ++l) {
            if (!w[l].is_chord()) continue;
            Word left(w.begin(), w.begin() + l), right(w.begin() + l + 1, w.end());
            FqElem v = f.mul(oracle::word_value(f, e1, left), k[w[l].index]);
            v = f.mul(v, oracle::word_value(f, e2, right));
            total = f.add(total, f.mul(f.from_int(c), v));
        }
    return total;
}

}  // namespace

TEST_CASE("unknot self-Hom") {
    Dga d = dga_of("unknot");
    for (int q : {2, 3, 5}) {
        auto f = FiniteField::of_order(q);
        auto augs = enumerate_augmentations(d, *f, 0);
        HomComplex h = build_hom(d, *f, 0, augs[0], augs[0]);
        auto dims = cohomology(*f, h);
        for (auto [i, n] : dims.cohomology) CHECK(n == (i == 0 ? 1 : 0));
        CHECK(aut_count(d, *f, 0, augs[0]) == q - 1);
    }
}

TEST_CASE("minus the sum of y is closed") {
    for (const auto& name : builtin_front_names()) {
        Dga d = dga_of(name);
        auto f = FiniteField::of_order(3);
        for (int m : {0, 1, 2}) {
            auto augs = enumerate_augmentations(d, *f, m);
            for (std::size_t i = 0; i < augs.size() && i < 6; ++i) {
                HomComplex h = build_hom(d, *f, m, augs[i], augs[i]);
                std::vector<FqElem> v(h.dim(), f->zero());
                for (int b = 0; b < h.dim(); ++b)
                    if (h.basis[b].kind == HomGenerator::y) v[b] = f->neg(f->one());
                for (auto x : h.m1.apply(*f, v)) CHECK(f->is_zero(x));
            }
        }
    }
}

TEST_CASE("Hom dimensions follow the chord degrees") {
    Dga d = dga_of("m945");
    auto f = FiniteField::of_order(2);
    auto augs = enumerate_augmentations(d, *f, 0);
    std::map<int, int> expect;
    for (const auto& g : d.generators) expect[g.degree + 1]++;
    expect[0] += d.components;
    expect[1] += d.components;
    for (const auto& e1 : augs)
        for (const auto& e2 : augs) {
            auto dims = cohomology(*f, build_hom(d, *f, 0, e1, e2));
            for (auto [i, n] : expect) CHECK(dims.chain(i) == n);
            for (auto [i, n] : dims.hom) {
                // rank-nullity: Z^i + B^{i+1} = Hom^i, H^i = Z^i - B^i
                CHECK(dims.cocycles[i] + dims.b(i + 1) == n);
                CHECK(dims.h(i) == dims.cocycles[i] - dims.b(i));
            }
        }
}

TEST_CASE("m1 squares to zero, respects the filtration and raises degree") {
    for (const auto& name : builtin_front_names()) {
        Dga d = dga_of(name);
        for (int q : {2, 3})
            for (int m : {0, 1, 2}) {
                auto f = FiniteField::of_order(q);
                auto augs = enumerate_augmentations(d, *f, m);
                for (std::size_t i = 0; i < augs.size() && i < 5; ++i)
                    for (std::size_t j = 0; j < augs.size() && j < 5; ++j) {
                        HomComplex h = build_hom(d, *f, m, augs[i], augs[j]);
                        CAPTURE(name);
                        CHECK(m1_squared_violations(d, *f, h).empty());
                        CHECK(filtration_violations(d, *f, h).empty());
                        CHECK(degree_violations(*f, h).empty());
                    }
            }
    }
}

TEST_CASE("identity transport and the homotopy relation") {
    std::mt19937_64 rng(41);
    for (const auto& name : builtin_front_names()) {
        Dga d = dga_of(name);
        for (int q : {2, 3, 4})
            for (int m : {0, 1}) {
                auto f = FiniteField::of_order(q);
                auto augs = enumerate_augmentations(d, *f, m);
                auto chords = degree_minus_one_chords(d, m);
                for (const auto& e1 : augs) {
                    std::vector<FqElem> ones(d.components, f->one());
                    std::vector<FqElem> none(chords.size(), f->zero());
                    CHECK(transport(d, *f, m, e1, ones, none).target == e1);

                    std::vector<FqElem> shifts;
                    for (std::size_t j = 0; j < chords.size(); ++j) shifts.push_back(f->element(rng() % q));
                    Transport t = transport(d, *f, m, e1, ones, shifts);
                    CHECK(oracle::kills_differential(d, *f, t.target));
                    CHECK(std::binary_search(augs.begin(), augs.end(), t.target));
                    for (int g = 0; g < d.size(); ++g)
                        CHECK(f->sub(e1.chord_values[g], t.target.chord_values[g]) ==
                              homotopy_on(d, *f, e1, t.target, t.homotopy, g));

                    std::vector<FqElem> scales;
                    for (int c = 0; c < d.components; ++c) scales.push_back(f->units()[rng() % (q - 1)]);
                    CHECK_NOTHROW(transport(d, *f, m, e1, scales, shifts, true));
                }
            }
    }
}

TEST_CASE("isomorphism classes") {
    auto f2 = FiniteField::of_order(2);
    Dga m821 = dga_of("m821");
    auto a821 = enumerate_augmentations(m821, *f2, 0);
    CHECK(iso_classes(m821, *f2, 0, a821).size() == 10);

    Dga m945 = dga_of("m945");
    auto a945 = enumerate_augmentations(m945, *f2, 0);
    auto cls = iso_classes(m945, *f2, 0, a945);
    CHECK(cls.size() == a945.size());
    for (const auto& c : cls) CHECK(c.members.size() == 1);
}

TEST_CASE("isomorphic augmentations have a closed unit between them") {
    for (const std::string name : {"trefoil", "m821", "hopf"}) {
        Dga d = dga_of(name);
        auto f = FiniteField::of_order(3);
        auto augs = enumerate_augmentations(d, *f, 0);
        auto cls = iso_classes(d, *f, 0, augs);
        std::vector<int> class_of(augs.size());
        for (std::size_t c = 0; c < cls.size(); ++c)
            for (int i : cls[c].members) class_of[i] = static_cast<int>(c);
        for (std::size_t i = 0; i < augs.size(); ++i)
            for (std::size_t j = 0; j < augs.size(); ++j) {
                HomComplex h = build_hom(d, *f, 0, augs[i], augs[j]);
                CAPTURE(name);
                CHECK((closed_unit_count(*f, h) > 0) == (class_of[i] == class_of[j]));
            }
    }
}

TEST_CASE("closed unit count by inclusion-exclusion matches brute force") {
    for (const std::string name : {"unknot", "trefoil", "hopf", "unlink"}) {
        Dga d = dga_of(name);
        for (int q : {2, 3, 4})
            for (int m : {0, 1}) {
                auto f = FiniteField::of_order(q);
                auto augs = enumerate_augmentations(d, *f, m);
                for (const auto& e1 : augs)
                    for (const auto& e2 : augs) {
                        HomComplex h = build_hom(d, *f, m, e1, e2);
                        CHECK(closed_unit_count(*f, h) == closed_unit_count_brute(*f, h));
                    }
            }
    }
}

TEST_CASE("units live in degree zero") {
    Dga d = dga_of("m821");
    auto f = FiniteField::of_order(2);
    auto augs = enumerate_augmentations(d, *f, 1);
    HomComplex h = build_hom(d, *f, 1, augs[0], augs[0]);
    for (const auto& b : h.basis)
        if (b.kind == HomGenerator::y) CHECK(b.degree == 0);
}

TEST_CASE("sum of closed units over all targets") {
    for (const std::string name : {"trefoil", "hopf", "m821"}) {
        Dga d = dga_of(name);
        for (int q : {2, 3})
            for (int m : {0, 1}) {
                auto f = FiniteField::of_order(q);
                auto augs = enumerate_augmentations(d, *f, m);
                for (int s = 0; s < static_cast<int>(augs.size()) && s < 4; ++s) {
                    auto c = count1(d, *f, m, augs, s);
                    CHECK(c.total == c.predicted);
                    if (d.size() <= 5) CHECK(count1(d, *f, m, augs, s, true).total == c.predicted);
                }
            }
    }
}

TEST_CASE("published cardinalities") {
    auto r = cardinality_report(dga_of("m821"), 2, 0);
    CHECK(r.augmentations == 16);
    CHECK(r.classes.size() == 10);
    CHECK(r.groupoid == 8);
    CHECK(homotopy_cardinality(r) == QSqrt::rational(2, 8));

    auto s = cardinality_report(dga_of("m945"), 2, 0);
    CHECK(s.classes.size() == 5);
    CHECK(s.groupoid == 4);
    CHECK(homotopy_cardinality(s) == QSqrt::rational(2, 5));
    CHECK(s.normalized_by_tb == QSqrt::rational(2, 5));
    CHECK(normalized_count(dga_of("m945"), 2, 0, s.augmentations).to_string() == "5/2*sqrt(2)");
    for (const auto& c : s.classes) CHECK(c.size_matches_formula);
}

TEST_CASE("conjecture harness and a corrupted differential") {
    for (const auto& name : builtin_front_names())
        for (const auto& row : conjecture_harness(dga_of(name), 2, 0))
            if (row.z_graded) CHECK(row.pass());

    Dga d = dga_of("unknot");
    auto f = FiniteField::of_order(2);
    auto augs = enumerate_augmentations(d, *f, 0);
    HomComplex h = build_hom(d, *f, 0, augs[0], augs[0]);
    int chi = euler_data(d, 0).chi;
    CHECK(conjecture_row(*f, h, d.components, chi).pass());
    h.m1 = FqMatrix(h.dim(), h.dim());
    CHECK_FALSE(conjecture_row(*f, h, d.components, chi).pass());
}

TEST_CASE("duality on Z-graded self-Homs") {
    for (const auto& name : builtin_front_names()) {
        Dga d = dga_of(name);
        auto f = FiniteField::of_order(3);
        for (const auto& e : enumerate_augmentations(d, *f, 0)) {
            CHECK(is_z_graded(d, *f, e));
            CAPTURE(name);
            CHECK(duality_violations(d, *f, build_hom(d, *f, 0, e, e)).empty());
        }
    }
}

TEST_CASE("m-dependent entry points") {
    Dga d = dga_of("unknot");
    CHECK_THROWS_AS(homotopy_cardinality(cardinality_report(d, 2, 1)), Error);
    CHECK_THROWS_AS(candidate_cardinality_2m(d, 2, 0), Error);
    auto forms = candidate_cardinality_2m(d, 2, 1);
    CHECK(forms.hom_boundary == QSqrt::rational(2, 1));
    CHECK(forms.cohomology == QSqrt::rational(2, 1));
}

TEST_CASE("build_hom rejects non-augmentations") {
    Dga d = dga_of("unknot");
    auto f = FiniteField::of_order(3);
    Augmentation bad{{f->one()}, {f->zero()}};
    auto good = enumerate_augmentations(d, *f, 0)[0];
    CHECK_THROWS_AS(build_hom(d, *f, 0, bad, good), Error);
}
