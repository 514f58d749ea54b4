#include "legcard/augcat.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "legcard/error.hpp"

namespace legcard {

namespace {

mpz_class ipow(long base, long exp) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
    return r;
}

// Odometer over a product of finite ranges; returns false after the last tuple.
bool advance(std::vector<int>& digits, const std::vector<int>& radix) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < radix[i]) return true;
        digits[i] = 0;
    }
    return false;
}

std::string basis_name(const Dga& d, const HomGenerator& g) {
    switch (g.kind) {
        case HomGenerator::y:
            return "y" + std::to_string(g.index + 1);
        case HomGenerator::x:
            return "x" + std::to_string(g.index + 1);
        case HomGenerator::chord:
            return d.generators[g.index].name + "+";
    }
    return "?";
}

}  // namespace

int reduce_degree(int degree, int m) {
    if (m == 0) return degree;
    int p = 2 * m;
    return ((degree % p) + p) % p;
}

int HomComplex::next_degree(int d) const { return reduce_degree(d + 1, m); }

std::vector<int> HomComplex::indices_of_degree(int d) const {
    std::vector<int> out;
    for (int i = 0; i < dim(); ++i)
        if (basis[i].degree == d) out.push_back(i);
    return out;
}

std::vector<int> HomComplex::degrees() const {
    std::set<int> ds;
    if (m > 0) {
        for (int i = 0; i < 2 * m; ++i) ds.insert(i);
    } else {
        for (const auto& g : basis) {
            ds.insert(g.degree);
            ds.insert(g.degree + 1);
            ds.insert(g.degree - 1);
        }
    }
    return {ds.begin(), ds.end()};
}

HomComplex build_hom(const Dga& d, const FiniteField& field, int m, const Augmentation& e1,
                     const Augmentation& e2, bool x_rule) {
    if (augmentation_violation(d, field, m, e1).size() || augmentation_violation(d, field, m, e2).size())
        fail(ErrorKind::invalid_argument, "build_hom needs two augmentations for the same (q, m)");
    HomComplex h;
    h.m = m;
    h.x_rule = x_rule;
    const int ell = d.components;
    for (int i = 0; i < ell; ++i) h.basis.push_back({HomGenerator::y, i, 0});
    for (int i = 0; i < ell; ++i) h.basis.push_back({HomGenerator::x, i, reduce_degree(1, m)});
    std::vector<int> pos_of(d.size());
    for (int g : d.height_order()) {
        pos_of[g] = h.dim();
        h.basis.push_back({HomGenerator::chord, g, reduce_degree(d.generators[g].degree + 1, m)});
    }
    h.m1 = FqMatrix(h.dim(), h.dim());
    auto add = [&](int row, int col, FqElem v) { h.m1.at(row, col) = field.add(h.m1.at(row, col), v); };

    for (int i = 0; i < ell; ++i) {
        FqElem tx = field.sub(field.mul(field.inv(e1.t_values[i]), e2.t_values[i]), field.one());
        add(ell + i, i, tx);
        for (int j = 0; j < d.size(); ++j) {
            const auto& gen = d.generators[j];
            if (gen.r == i) add(pos_of[j], i, e2.chord_values[j]);
            if (gen.c == i) {
                FqElem v = e1.chord_values[j];
                if (gen.degree % 2 == 0) v = field.neg(v);
                add(pos_of[j], i, v);
            }
        }
    }
    for (int k = 0; k < d.size(); ++k) {
        for (const auto& [w, coeff] : d.differential[k].terms()) {
            FqElem c = field.from_int(coeff);
            if (field.is_zero(c)) continue;
            for (std::size_t l = 0; l < w.size(); ++l) {
                FqElem pre = eval_word(field, e1, w, 0, l);
                if (field.is_zero(pre)) break;
                FqElem post = eval_word(field, e2, w, l + 1);
                if (field.is_zero(post)) continue;
                FqElem v = field.mul(c, field.mul(pre, post));
                const auto& letter = w[l];
                if (letter.is_chord()) {
                    add(pos_of[k], pos_of[letter.index], v);
                } else if (x_rule) {
                    FqElem factor = letter.kind == Letter::t ? e1.t_values[letter.index]
                                                             : field.neg(field.inv(e2.t_values[letter.index]));
                    add(pos_of[k], ell + letter.index, field.mul(v, factor));
                }
            }
        }
    }
    return h;
}

int CohomologyDims::h(int i) const {
    auto it = cohomology.find(i);
    return it == cohomology.end() ? 0 : it->second;
}
int CohomologyDims::b(int i) const {
    auto it = coboundaries.find(i);
    return it == coboundaries.end() ? 0 : it->second;
}
int CohomologyDims::chain(int i) const {
    auto it = hom.find(i);
    return it == hom.end() ? 0 : it->second;
}

CohomologyDims cohomology(const FiniteField& field, const HomComplex& h) {
    CohomologyDims out;
    auto ds = h.degrees();
    for (int dd : ds) {
        out.hom[dd] = static_cast<int>(h.indices_of_degree(dd).size());
        out.coboundaries[dd] = 0;
    }
    for (int dd : ds) {
        auto cols = h.indices_of_degree(dd);
        auto rows = h.indices_of_degree(h.next_degree(dd));
        int r = (cols.empty() || rows.empty()) ? 0 : rank(field, h.m1.select(rows, cols));
        out.cocycles[dd] = static_cast<int>(cols.size()) - r;
        out.coboundaries[h.next_degree(dd)] = r;
    }
    for (int dd : ds) out.cohomology[dd] = out.cocycles[dd] - out.coboundaries[dd];
    return out;
}

std::vector<std::string> m1_squared_violations(const Dga& d, const FiniteField& field, const HomComplex& h) {
    std::vector<std::string> out;
    const int n = h.dim();
    for (int r = 0; r < n; ++r) {
        std::vector<FqElem> row(n, field.zero());
        for (int k = 0; k < n; ++k) {
            FqElem a = h.m1.at(r, k);
            if (field.is_zero(a)) continue;
            for (int c = 0; c < n; ++c) row[c] = field.add(row[c], field.mul(a, h.m1.at(k, c)));
        }
        for (int c = 0; c < n; ++c)
            if (!field.is_zero(row[c])) out.push_back(basis_name(d, h.basis[r]) + " <- " + basis_name(d, h.basis[c]));
    }
    return out;
}

std::vector<std::string> filtration_violations(const Dga& d, const FiniteField& field, const HomComplex& h) {
    std::vector<int> level(h.dim());
    int height_rank = 0;
    for (int i = 0; i < h.dim(); ++i) {
        switch (h.basis[i].kind) {
            case HomGenerator::y:
                level[i] = -1;
                break;
            case HomGenerator::x:
                level[i] = 0;
                break;
            case HomGenerator::chord:
                level[i] = ++height_rank;
                break;
        }
    }
    std::vector<std::string> out;
    for (int r = 0; r < h.dim(); ++r)
        for (int c = 0; c < h.dim(); ++c)
            if (!field.is_zero(h.m1.at(r, c)) && level[r] < level[c] + 1)
                out.push_back(basis_name(d, h.basis[r]) + " <- " + basis_name(d, h.basis[c]));
    return out;
}

std::vector<std::string> degree_violations(const FiniteField& field, const HomComplex& h) {
    std::vector<std::string> out;
    for (int r = 0; r < h.dim(); ++r)
        for (int c = 0; c < h.dim(); ++c)
            if (!field.is_zero(h.m1.at(r, c)) && h.basis[r].degree != h.next_degree(h.basis[c].degree))
                out.push_back("entry (" + std::to_string(r) + ", " + std::to_string(c) + ")");
    return out;
}

std::vector<int> degree_minus_one_chords(const Dga& d, int m) {
    std::vector<int> out;
    for (int g : d.height_order())
        if (reduce_degree(d.generators[g].degree + 1, m) == 0) out.push_back(g);
    return out;
}

Transport transport(const Dga& d, const FiniteField& field, int m, const Augmentation& e1,
                    const std::vector<FqElem>& scales, const std::vector<FqElem>& shifts, bool verify) {
    const auto chords = degree_minus_one_chords(d, m);
    if (static_cast<int>(scales.size()) != d.components || shifts.size() != chords.size())
        fail(ErrorKind::invalid_argument, "transport parameter sizes do not match the DGA");
    for (auto s : scales)
        if (field.is_zero(s)) fail(ErrorKind::invalid_argument, "transport scales must be nonzero");

    Transport out;
    out.homotopy.assign(d.size(), field.zero());
    for (std::size_t j = 0; j < chords.size(); ++j) {
        int g = chords[j];
        out.homotopy[g] = field.mul(shifts[j], field.inv(scales[d.generators[g].c]));
    }
    // e' by height induction: e'(a) = e1(a) - K(d a), K an (e1, e')-derivation.
    Augmentation mid = e1;
    for (int g : d.height_order()) {
        FqElem k_of_d = field.zero();
        for (const auto& [w, coeff] : d.differential[g].terms()) {
            FqElem c = field.from_int(coeff);
            for (std::size_t l = 0; l < w.size(); ++l) {
                if (!w[l].is_chord() || field.is_zero(out.homotopy[w[l].index])) continue;
                FqElem v = field.mul(eval_word(field, e1, w, 0, l), out.homotopy[w[l].index]);
                v = field.mul(v, eval_word(field, mid, w, l + 1));
                k_of_d = field.add(k_of_d, field.mul(c, v));
            }
        }
        mid.chord_values[g] = field.sub(e1.chord_values[g], k_of_d);
    }
    out.target = mid;
    for (int g = 0; g < d.size(); ++g) {
        const auto& gen = d.generators[g];
        out.target.chord_values[g] =
            field.mul(field.mul(scales[gen.c], field.inv(scales[gen.r])), mid.chord_values[g]);
    }

    out.alpha.assign(2 * d.components + d.size(), field.zero());
    for (int i = 0; i < d.components; ++i) out.alpha[i] = scales[i];
    {
        std::vector<int> pos_of(d.size());
        int p = 2 * d.components;
        for (int g : d.height_order()) pos_of[g] = p++;
        for (std::size_t j = 0; j < chords.size(); ++j) out.alpha[pos_of[chords[j]]] = shifts[j];
    }
    if (verify) {
        auto bad = augmentation_violation(d, field, m, out.target);
        if (!bad.empty()) fail(ErrorKind::internal, "transport produced a non-augmentation: " + bad);
        HomComplex h = build_hom(d, field, m, e1, out.target);
        auto image = h.m1.apply(field, out.alpha);
        for (auto v : image)
            if (!field.is_zero(v)) fail(ErrorKind::internal, "transported morphism is not closed");
    }
    return out;
}

mpz_class closed_unit_count(const FiniteField& field, const HomComplex& h) {
    auto cols = h.indices_of_degree(0);
    auto rows = h.indices_of_degree(h.next_degree(0));
    std::vector<std::vector<FqElem>> kernel;
    if (rows.empty()) {
        for (std::size_t i = 0; i < cols.size(); ++i) {
            std::vector<FqElem> v(cols.size(), field.zero());
            v[i] = field.one();
            kernel.push_back(v);
        }
    } else {
        kernel = kernel_basis(field, h.m1.select(rows, cols));
    }
    std::vector<int> ys;  // positions of y generators within cols
    for (std::size_t i = 0; i < cols.size(); ++i)
        if (h.basis[cols[i]].kind == HomGenerator::y) ys.push_back(static_cast<int>(i));
    const int ell = static_cast<int>(ys.size());
    const int zdim = static_cast<int>(kernel.size());
    const long q = field.order();
    mpz_class total = 0;
    for (unsigned mask = 0; mask < (1u << ell); ++mask) {
        std::vector<int> chosen;
        for (int i = 0; i < ell; ++i)
            if (mask & (1u << i)) chosen.push_back(ys[i]);
        int r = 0;
        if (!chosen.empty() && zdim > 0) {
            FqMatrix constraint(static_cast<int>(chosen.size()), zdim);
            for (std::size_t a = 0; a < chosen.size(); ++a)
                for (int b = 0; b < zdim; ++b) constraint.at(static_cast<int>(a), b) = kernel[b][chosen[a]];
            r = rank(field, constraint);
        }
        mpz_class term = ipow(q, zdim - r);
        if (chosen.size() % 2) total -= term;
        else total += term;
    }
    return total;
}

mpz_class closed_unit_count_brute(const FiniteField& field, const HomComplex& h) {
    auto cols = h.indices_of_degree(0);
    auto rows = h.indices_of_degree(h.next_degree(0));
    FqMatrix block = h.m1.select(rows, cols);
    std::vector<int> digits(cols.size(), 0), radix(cols.size(), field.order());
    mpz_class count = 0;
    do {
        bool unit = true;
        std::vector<FqElem> v(cols.size());
        for (std::size_t i = 0; i < cols.size(); ++i) {
            v[i] = field.element(digits[i]);
            if (h.basis[cols[i]].kind == HomGenerator::y && field.is_zero(v[i])) unit = false;
        }
        if (!unit) continue;
        bool closed = true;
        for (auto x : block.apply(field, v))
            if (!field.is_zero(x)) closed = false;
        if (closed) ++count;
    } while (advance(digits, radix));
    return count;
}

mpz_class aut_count(const Dga& d, const FiniteField& field, int m, const Augmentation& e) {
    HomComplex h = build_hom(d, field, m, e, e);
    auto dims = cohomology(field, h);
    mpz_class units = closed_unit_count(field, h);
    mpz_class b0 = ipow(field.order(), dims.b(0));
    if (units % b0 != 0) fail(ErrorKind::internal, "closed units are not a union of coboundary cosets");
    return units / b0;
}

std::vector<IsoClass> iso_classes(const Dga& d, const FiniteField& field, int m,
                                  const std::vector<Augmentation>& augs) {
    std::map<Augmentation, int> index;
    for (std::size_t i = 0; i < augs.size(); ++i) index[augs[i]] = static_cast<int>(i);
    const auto chords = degree_minus_one_chords(d, m);
    const auto units = field.units();
    const std::vector<FqElem> unit_scales(d.components, field.one());
    std::vector<int> shift_radix(chords.size(), field.order());
    std::vector<int> scale_radix(d.components, static_cast<int>(units.size()));

    std::vector<int> owner(augs.size(), -1);
    std::vector<IsoClass> classes;
    for (std::size_t i = 0; i < augs.size(); ++i) {
        if (owner[i] >= 0) continue;
        // The orbit is {rescale_d(e') : e' an unscaled transport}, since k/d_c
        // runs over all values as k does.
        std::set<Augmentation> unscaled;
        std::vector<int> digits(chords.size(), 0);
        do {
            std::vector<FqElem> shifts(chords.size());
            for (std::size_t j = 0; j < chords.size(); ++j) shifts[j] = field.element(digits[j]);
            unscaled.insert(transport(d, field, m, augs[i], unit_scales, shifts, false).target);
        } while (advance(digits, shift_radix));

        std::set<int> members;
        for (const auto& mid : unscaled) {
            std::vector<int> sd(d.components, 0);
            do {
                Augmentation e = mid;
                for (int g = 0; g < d.size(); ++g) {
                    const auto& gen = d.generators[g];
                    e.chord_values[g] =
                        field.mul(field.mul(units[sd[gen.c]], field.inv(units[sd[gen.r]])), mid.chord_values[g]);
                }
                auto it = index.find(e);
                if (it == index.end()) fail(ErrorKind::internal, "transport left the augmentation list");
                members.insert(it->second);
            } while (advance(sd, scale_radix));
        }
        for (int k : members) {
            if (owner[k] >= 0) fail(ErrorKind::internal, "transport orbits overlap");
            owner[k] = static_cast<int>(classes.size());
        }
        IsoClass cls;
        cls.representative = static_cast<int>(i);
        cls.members.assign(members.begin(), members.end());
        classes.push_back(std::move(cls));
    }
    return classes;
}

int dga_tb(const Dga& d) {
    int tb = 0;
    for (const auto& g : d.generators) tb += g.degree % 2 == 0 ? 1 : -1;
    return tb;
}

CardReport cardinality_report(const Dga& d, long q, int m) {
    auto field = FiniteField::of_order(static_cast<int>(q));
    CardReport r;
    r.q = q;
    r.m = m;
    r.components = d.components;
    r.tb = dga_tb(d);
    r.chi_star = euler_data(d, m).chi;
    r.augs = enumerate_augmentations(d, *field, m);
    r.augmentations = static_cast<long long>(r.augs.size());
    const int ell = d.components;
    r.groupoid = 0;
    r.homotopy = QSqrt(q);
    r.hom_boundary_form = QSqrt(q);
    r.cohomology_form = QSqrt(q);
    r.even_form = QSqrt(q);
    for (const auto& cls : iso_classes(d, *field, m, r.augs)) {
        ClassReport cr;
        cr.representative = cls.representative;
        cr.size = static_cast<int>(cls.members.size());
        cr.members = cls.members;
        const auto& e = r.augs[cls.representative];
        HomComplex h = build_hom(d, *field, m, e, e);
        cr.dims = cohomology(*field, h);
        mpz_class units = closed_unit_count(*field, h);
        mpz_class b0 = ipow(q, cr.dims.b(0));
        if (units % b0 != 0) fail(ErrorKind::internal, "closed units are not a union of coboundary cosets");
        cr.aut = units / b0;
        cr.hom0_minus_b0 = cr.dims.chain(0) - cr.dims.b(0);
        cr.size_matches_formula =
            cr.aut * cr.size == ipow(q - 1, ell) * ipow(q, cr.hom0_minus_b0 - ell);
        mpq_class inv_aut(mpz_class(1), cr.aut);
        inv_aut.canonicalize();
        r.groupoid += inv_aut;

        if (m == 0) {
            long e_neg = 0;
            for (auto [deg, dim] : cr.dims.cohomology)
                if (deg < 0) e_neg += ((-deg) % 2 == 1 ? 1 : -1) * dim;
            r.homotopy += QSqrt::sqrt_power(q, 2 * e_neg) * inv_aut;
        }
        r.hom_boundary_form +=
            QSqrt::sqrt_power(q, 2L * (cr.hom0_minus_b0 - ell) - r.chi_star + r.tb) * inv_aut;
        r.cohomology_form +=
            QSqrt::sqrt_power(q, 2L * cr.dims.h(0) - cr.dims.h(1) + r.tb - ell) * inv_aut;
        if (m == 1) r.even_form += QSqrt::sqrt_power(q, cr.dims.h(0) - ell) * inv_aut;
        r.classes.push_back(std::move(cr));
    }
    r.groupoid.canonicalize();
    r.normalized_by_tb = QSqrt::sqrt_power(q, r.tb - r.chi_star) *
                         mpq_class(mpz_class(static_cast<long>(r.augmentations)), ipow(q - 1, ell));
    return r;
}

QSqrt homotopy_cardinality(const CardReport& r) {
    if (r.m != 0) fail(ErrorKind::invalid_argument, "homotopy cardinality is defined here for m = 0 only");
    return r.homotopy;
}

CandidateForms candidate_cardinality_2m(const Dga& d, long q, int m) {
    if (m < 1) fail(ErrorKind::invalid_argument, "candidate cardinalities need m >= 1");
    return candidate_cardinality_2m(cardinality_report(d, q, m));
}

CandidateForms candidate_cardinality_2m(const CardReport& r) {
    if (r.m < 1) fail(ErrorKind::invalid_argument, "candidate cardinalities need m >= 1");
    CandidateForms f;
    f.hom_boundary = r.hom_boundary_form;
    f.cohomology = r.cohomology_form;
    if (r.m == 1) {
        f.has_even_form = true;
        f.even = r.even_form;
        for (const auto& c : r.classes)
            if (r.tb != c.dims.h(1) - c.dims.h(0)) f.tb_cross_check = false;
    }
    return f;
}

ConjectureRow conjecture_row(const FiniteField& field, const HomComplex& h, int components, int chi_star) {
    auto dims = cohomology(field, h);
    ConjectureRow row;
    row.lhs = 2 * dims.chain(0) - 2 * dims.b(0) - components - chi_star;
    row.rhs = 2 * dims.h(0) - dims.h(1);
    return row;
}

std::vector<ConjectureRow> conjecture_harness(const Dga& d, long q, int m) {
    auto field = FiniteField::of_order(static_cast<int>(q));
    const int chi = euler_data(d, m).chi;
    std::vector<ConjectureRow> rows;
    auto augs = enumerate_augmentations(d, *field, m);
    for (std::size_t i = 0; i < augs.size(); ++i) {
        HomComplex h = build_hom(d, *field, m, augs[i], augs[i]);
        ConjectureRow row = conjecture_row(*field, h, d.components, chi);
        row.index = static_cast<int>(i);
        row.z_graded = is_z_graded(d, *field, augs[i]);
        rows.push_back(row);
    }
    return rows;
}

Count1 count1(const Dga& d, const FiniteField& field, int m, const std::vector<Augmentation>& augs, int source,
              bool brute) {
    Count1 c;
    c.total = 0;
    for (const auto& target : augs) {
        HomComplex h = build_hom(d, field, m, augs[source], target);
        c.total += brute ? closed_unit_count_brute(field, h) : closed_unit_count(field, h);
    }
    c.predicted = ipow(field.order() - 1, d.components) *
                  ipow(field.order(), static_cast<long>(degree_minus_one_chords(d, m).size()));
    return c;
}

std::vector<std::string> duality_violations(const Dga& d, const FiniteField& field, const HomComplex& h) {
    std::vector<std::string> out;
    if (h.m != 0) {
        out.push_back("duality is checked on Z-graded complexes only");
        return out;
    }
    auto dims = cohomology(field, h);
    std::set<int> ds;
    for (auto [deg, dim] : dims.cohomology) {
        (void)dim;
        ds.insert(deg);
        ds.insert(2 - deg);
    }
    for (int i : ds) {
        if (i == 0 || i == 2) continue;
        if (dims.h(i) != dims.h(2 - i))
            out.push_back("dim H^" + std::to_string(i) + " = " + std::to_string(dims.h(i)) + " but dim H^" +
                          std::to_string(2 - i) + " = " + std::to_string(dims.h(2 - i)));
    }
    if (dims.h(0) != dims.h(2) + d.components)
        out.push_back("dim H^0 = " + std::to_string(dims.h(0)) + " but dim H^2 + l = " +
                      std::to_string(dims.h(2) + d.components));
    int euler = 0;
    for (auto [deg, dim] : dims.hom) euler += (deg % 2 == 0 ? 1 : -1) * dim;
    if (euler != -dga_tb(d))
        out.push_back("sum (-1)^i dim Hom^i = " + std::to_string(euler) + " but -tb = " + std::to_string(-dga_tb(d)));
    return out;
}

bool is_z_graded(const Dga& d, const FiniteField& field, const Augmentation& e) {
    for (int g = 0; g < d.size(); ++g)
        if (d.generators[g].degree != 0 && !field.is_zero(e.chord_values[g])) return false;
    return true;
}

}  // namespace legcard
