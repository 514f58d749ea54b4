#include <doctest.h>

#include <random>

#include "legcard/aug.hpp"
#include "legcard/error.hpp"
#include "legcard/ruling.hpp"
#include "legcard/verify.hpp"
#include "oracles.hpp"

using namespace legcard;

namespace {

std::set<std::vector<bool>> switch_sets(const std::vector<NormalRuling>& rs) {
    std::set<std::vector<bool>> out;
    for (const auto& r : rs) out.insert(r.switches);
    return out;
}

// All fixed-point-free involutions of {0..n-1}.
void involutions(std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    int first = -1;
    for (int i = 0; i < static_cast<int>(cur.size()); ++i)
        if (cur[i] < 0) {
            first = i;
            break;
        }
    if (first < 0) {
        out.push_back(cur);
        return;
    }
    for (int j = first + 1; j < static_cast<int>(cur.size()); ++j)
        if (cur[j] < 0) {
            cur[first] = j;
            cur[j] = first;
            involutions(cur, out);
            cur[first] = cur[j] = -1;
        }
}

}  // namespace

TEST_CASE("unknot has one ruling") {
    Front f(builtin_front("unknot"));
    for (int m : {0, 1, 2}) {
        auto rs = enumerate_rulings(f, m);
        REQUIRE(rs.size() == 1);
        CHECK(rs[0].switch_count == 0);
        CHECK(rs[0].chi == 1);
        CHECK(ruling_polynomial(rs).to_string() == "z^-1");
        auto cc = classify_crossings(f, rs[0], m);
        CHECK(cc.roles.empty());
        CHECK(cc.total_returns == 0);
    }
}

TEST_CASE("m821 has a ruling with chi = -1") {
    Front f(builtin_front("m821"));
    bool found = false;
    for (const auto& r : enumerate_rulings(f, 0)) found |= r.chi == -1;
    CHECK(found);
    CHECK(ruling_polynomial(f, 0).eval_ruling_variable(2).to_string() == "4*sqrt(2)");
    CHECK(ruling_polynomial(Front(builtin_front("m945")), 0).eval_ruling_variable(2).to_string() ==
          "5/2*sqrt(2)");
}

TEST_CASE("sweep agrees with the switch-subset oracle") {
    for (const auto& name : builtin_front_names()) {
        Front f(builtin_front(name));
        if (f.crossing_count() > 10) continue;
        for (int m : {0, 1, 2, 3}) {
            CAPTURE(name);
            CAPTURE(m);
            CHECK(switch_sets(enumerate_rulings(f, m)) == oracle::rulings(f, m));
        }
    }
    std::mt19937_64 rng(17);
    for (int i = 0; i < 150; ++i) {
        Front f(random_graded_front(rng, 1 + i % 3, i % 11));
        for (int m : {0, 1, 2}) {
            CAPTURE(serialize_front(f.diagram()));
            CHECK(switch_sets(enumerate_rulings(f, m)) == oracle::rulings(f, m));
        }
    }
}

TEST_CASE("non-switch crossings are normal on exactly one side") {
    for (int strands = 4; strands <= 8; strands += 2) {
        std::vector<int> cur(strands, -1);
        std::vector<std::vector<int>> pairings;
        involutions(cur, pairings);
        for (const auto& pr : pairings)
            for (int p = 0; p + 1 < strands; ++p) {
                if (pr[p] == p + 1) continue;  // partners cannot cross
                auto sw = [&](int x) { return x == p ? p + 1 : x == p + 1 ? p : x; };
                std::vector<int> after(strands);
                for (int x = 0; x < strands; ++x) after[sw(x)] = sw(pr[x]);
                bool before_ok = disjoint_or_nested(p, pr[p], p + 1, pr[p + 1]);
                bool after_ok = disjoint_or_nested(p, after[p], p + 1, after[p + 1]);
                CHECK(before_ok != after_ok);
                CHECK(before_ok == oracle::not_interlaced(p, pr[p], p + 1, pr[p + 1]));
            }
    }
}

TEST_CASE("weighted ruling count equals the augmentation count") {
    std::vector<PlatFront> fronts;
    for (const auto& name : builtin_front_names()) fronts.push_back(builtin_front(name));
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) fronts.push_back(random_graded_front(rng, 1 + i % 3, i % 9));
    for (const auto& pf : fronts) {
        Front f(pf);
        Dga d = build_dga(f);
        for (int q : {2, 3, 4, 5})
            for (int m : {0, 1, 2, 3}) {
                CAPTURE(serialize_front(pf));
                CAPTURE(q);
                CAPTURE(m);
                auto field = FiniteField::of_order(q);
                mpz_class augs = static_cast<unsigned long>(enumerate_augmentations(d, *field, m).size());
                CHECK(hr_weighted_count(f, q, m) == augs);
            }
    }
}

TEST_CASE("return formula and index function") {
    std::vector<PlatFront> fronts;
    for (const auto& name : builtin_front_names()) fronts.push_back(builtin_front(name));
    std::mt19937_64 rng(29);
    for (int i = 0; i < 150; ++i) fronts.push_back(random_graded_front(rng, 1 + i % 3, i % 10));
    for (const auto& pf : fronts) {
        Front f(pf);
        CAPTURE(serialize_front(pf));
        for (int m : {0, 1, 2, 3}) CHECK(verify_return_formula(f, m).empty());
        for (int m : {1, 2, 3})
            for (const auto& r : enumerate_rulings(f, m)) {
                CHECK(verify_index_function(f, r, m).empty());
                CHECK(index_function(f, r, m, 0).total() == 0);
                CHECK(index_function(f, r, m, f.crossing_count()).total() == 0);
            }
    }
}

TEST_CASE("index function on the unknot and m = 0 rejection") {
    Front f(builtin_front("unknot"));
    auto rs = enumerate_rulings(f, 1);
    CHECK(index_function(f, rs[0], 1, 0).total() == 0);
    CHECK_THROWS_AS(index_function(f, rs[0], 0, 0), Error);
}

TEST_CASE("m821 rulings with chi = -1 have one return") {
    Front f(builtin_front("m821"));
    for (const auto& r : enumerate_rulings(f, 0))
        if (r.chi == -1) CHECK(classify_crossings(f, r, 0).total_returns == 1);
}
