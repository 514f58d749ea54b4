#include "legcard/verify.hpp"

#include "legcard/aug.hpp"
#include "legcard/augcat.hpp"
#include "legcard/error.hpp"
#include "legcard/ruling.hpp"

namespace legcard {

namespace {

IdentityResult compare(std::string name, const std::string& lhs, const std::string& rhs, std::string note = {}) {
    return {std::move(name), lhs, rhs, lhs == rhs, std::move(note), false};
}

IdentityResult violations(std::string name, const std::vector<std::string>& issues, std::string note = {}) {
    IdentityResult r{std::move(name), std::to_string(issues.size()) + " violations", "0 violations",
                     issues.empty(), std::move(note), false};
    if (!issues.empty()) r.note = issues.front() + (r.note.empty() ? "" : "; " + r.note);
    return r;
}

IdentityResult skipped(std::string name, std::string why) { return {std::move(name), "", "", true, std::move(why), true}; }

}  // namespace

std::vector<IdentityResult> verify_identities(const Dga& d, const Front* front, long q, int m,
                                              const VerifyOptions& options) {
    auto field = FiniteField::of_order(static_cast<int>(q));
    std::vector<IdentityResult> out;
    out.push_back(violations("dga_well_formed", check_dga(d)));

    CardReport rep = cardinality_report(d, q, m);
    const auto& augs = rep.augs;

    {
        std::vector<std::string> issues;
        for (const auto& a : augs)
            for (const auto& b : augs) {
                HomComplex h = build_hom(d, *field, m, a, b);
                for (auto& s : m1_squared_violations(d, *field, h)) issues.push_back("m1^2: " + s);
                for (auto& s : filtration_violations(d, *field, h)) issues.push_back("filtration: " + s);
                for (auto& s : degree_violations(*field, h)) issues.push_back("degree: " + s);
            }
        out.push_back(violations("m1_squared_all_pairs", issues));
    }

    const QSqrt normalized = normalized_count(d, q, m, rep.augmentations);
    LaurentPoly ruling;
    if (front) {
        ruling = ruling_polynomial(*front, m);
        out.push_back(compare("normalized_count_vs_ruling", normalized.to_string(),
                              ruling.eval_ruling_variable(q).to_string()));
        out.push_back(compare("weighted_ruling_count_vs_augmentations", hr_weighted_count(*front, q, m).get_str(),
                              std::to_string(rep.augmentations)));
        out.push_back(compare("front_tb_vs_chords", std::to_string(front->classical_invariants().tb),
                              std::to_string(rep.tb)));
    } else {
        out.push_back(skipped("normalized_count_vs_ruling", "no front"));
        out.push_back(skipped("weighted_ruling_count_vs_augmentations", "no front"));
        out.push_back(skipped("front_tb_vs_chords", "no front"));
    }
    const QSqrt ruling_side = front ? QSqrt::sqrt_power(q, rep.tb) * ruling.eval_ruling_variable(q) : QSqrt(q);

    if (m == 0) {
        out.push_back(compare("homotopy_vs_count", rep.homotopy.to_string(), rep.normalized_by_tb.to_string()));
        if (front)
            out.push_back(compare("homotopy_vs_ruling", rep.homotopy.to_string(), ruling_side.to_string()));
        else
            out.push_back(skipped("homotopy_vs_ruling", "no front"));
    } else {
        out.push_back(compare("hom_boundary_form_vs_count", rep.hom_boundary_form.to_string(),
                              rep.normalized_by_tb.to_string()));
        if (front)
            out.push_back(compare("hom_boundary_form_vs_ruling", rep.hom_boundary_form.to_string(),
                                  ruling_side.to_string()));
        else
            out.push_back(skipped("hom_boundary_form_vs_ruling", "no front"));
        out.push_back(compare("cohomology_form_vs_count", rep.cohomology_form.to_string(),
                              rep.normalized_by_tb.to_string(),
                              "uses m1(x+); equality is conditional on the dimension identity"));
        if (m == 1) {
            auto forms = candidate_cardinality_2m(rep);
            out.push_back(compare("even_form_vs_count", forms.even.to_string(), rep.normalized_by_tb.to_string(),
                                  "uses m1(x+)"));
            out.push_back({"tb_vs_h1_minus_h0", forms.tb_cross_check ? "holds" : "fails", "holds",
                           forms.tb_cross_check, "uses m1(x+)", false});
        }
    }

    {
        std::vector<std::string> issues;
        for (std::size_t s = 0; s < augs.size(); ++s) {
            Count1 c = count1(d, *field, m, augs, static_cast<int>(s));
            if (c.total != c.predicted)
                issues.push_back("source #" + std::to_string(s + 1) + ": " + c.total.get_str() + " != " +
                                 c.predicted.get_str());
        }
        // Spot-check inclusion-exclusion against enumeration on small complexes.
        for (std::size_t s = 0; s < augs.size() && s < 4; ++s) {
            HomComplex h = build_hom(d, *field, m, augs[s], augs[s]);
            if (static_cast<int>(h.indices_of_degree(0).size()) > options.brute_force_dim) continue;
            if (closed_unit_count(*field, h) != closed_unit_count_brute(*field, h))
                issues.push_back("closed-unit count disagrees with enumeration at #" + std::to_string(s + 1));
        }
        out.push_back(violations("closed_units_sum", issues));
    }
    {
        std::vector<std::string> issues;
        long long total = 0;
        for (const auto& c : rep.classes) {
            total += c.size;
            if (!c.size_matches_formula)
                issues.push_back("class of #" + std::to_string(c.representative + 1) + ": size " +
                                 std::to_string(c.size) + ", |Aut| " + c.aut.get_str());
        }
        if (total != rep.augmentations) issues.push_back("class sizes sum to " + std::to_string(total));
        out.push_back(violations("class_size_formula", issues));
    }
    {
        std::vector<std::string> issues;
        for (const auto& c : rep.classes) {
            const auto& e = augs[c.representative];
            mpz_class self = closed_unit_count(*field, build_hom(d, *field, m, e, e));
            for (int k : c.members) {
                mpz_class other = closed_unit_count(*field, build_hom(d, *field, m, e, augs[k]));
                if (other != self)
                    issues.push_back("#" + std::to_string(c.representative + 1) + " -> #" + std::to_string(k + 1));
            }
        }
        out.push_back(violations("isomorphic_unit_counts", issues));
    }

    if (front) {
        out.push_back(violations("return_formula", verify_return_formula(*front, m)));
        if (m >= 1) {
            std::vector<std::string> issues;
            for (const auto& r : enumerate_rulings(*front, m))
                for (auto& s : verify_index_function(*front, r, m)) issues.push_back(s);
            out.push_back(violations("index_function_steps", issues));
        }
    } else {
        out.push_back(skipped("return_formula", "no front"));
    }

    {
        std::vector<std::string> dual, euler;
        for (std::size_t s = 0; s < augs.size(); ++s) {
            HomComplex h = build_hom(d, *field, m, augs[s], augs[s]);
            if (m == 0)
                for (auto& v : duality_violations(d, *field, h)) dual.push_back("#" + std::to_string(s + 1) + ": " + v);
            auto dims = cohomology(*field, h);
            int chi = 0;
            for (auto [deg, dim] : dims.hom) chi += (((deg % 2) + 2) % 2 == 0 ? 1 : -1) * dim;
            if (chi != -rep.tb)
                euler.push_back("#" + std::to_string(s + 1) + ": sum = " + std::to_string(chi));
        }
        if (m == 0)
            out.push_back(violations("duality", dual, "uses m1(x+)"));
        out.push_back(violations("tb_vs_hom_euler_characteristic", euler));
    }
    {
        std::vector<std::string> issues;
        for (const auto& row : conjecture_harness(d, q, m))
            if (row.z_graded && !row.pass())
                issues.push_back("#" + std::to_string(row.index + 1) + ": " + std::to_string(row.lhs) +
                                 " != " + std::to_string(row.rhs));
        out.push_back(violations("dimension_identity_z_graded", issues, "uses m1(x+)"));
    }
    return out;
}

PlatFront random_graded_front(std::mt19937_64& rng, int left_cusps, int crossings) {
    if (left_cusps < 1 || crossings < 0) fail(ErrorKind::invalid_argument, "random front needs left_cusps >= 1");
    std::uniform_int_distribution<int> pos(1, 2 * left_cusps - 1);
    for (int attempt = 0; attempt < 100000; ++attempt) {
        PlatFront pf;
        pf.name = "random";
        pf.left_cusps = left_cusps;
        // Grading fixes the parity of the crossing count per component.
        const int n = crossings + attempt % 2;
        for (int i = 0; i < n; ++i) pf.crossings.push_back(pos(rng));
        if (Front(pf).graded()) return pf;
    }
    fail(ErrorKind::invalid_argument, "no graded front found with these sizes");
}

}  // namespace legcard
