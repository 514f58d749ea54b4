#include "legcard/aug.hpp"

#include <algorithm>
#include <sstream>

#include "legcard/error.hpp"

namespace legcard {

bool graded_zero(int degree, int m) {
    if (m == 0) return degree == 0;
    int period = 2 * m;
    return ((degree % period) + period) % period == 0;
}

FqElem eval_word(const FiniteField& field, const Augmentation& e, const Word& w, std::size_t begin,
                 std::size_t end) {
    end = std::min(end, w.size());
    FqElem v = field.one();
    for (std::size_t i = begin; i < end && !field.is_zero(v); ++i) {
        const auto& l = w[i];
        switch (l.kind) {
            case Letter::chord:
                v = field.mul(v, e.chord_values[l.index]);
                break;
            case Letter::t:
                v = field.mul(v, e.t_values[l.index]);
                break;
            case Letter::t_inv:
                v = field.mul(v, field.inv(e.t_values[l.index]));
                break;
        }
    }
    return v;
}

FqElem eval_poly(const FiniteField& field, const Augmentation& e, const NcPoly& p) {
    FqElem sum = field.zero();
    for (const auto& [w, c] : p.terms())
        sum = field.add(sum, field.mul(field.from_int(c), eval_word(field, e, w)));
    return sum;
}

CompiledPoly::CompiledPoly(const NcPoly& p, const FiniteField& field) {
    for (const auto& [w, c] : p.terms()) {
        FqElem k = field.from_int(c);
        if (!field.is_zero(k)) terms_.push_back({k, w});
    }
}

FqElem CompiledPoly::eval(const FiniteField& field, const Augmentation& e) const {
    FqElem sum = field.zero();
    for (const auto& t : terms_) sum = field.add(sum, field.mul(t.coeff, eval_word(field, e, t.word)));
    return sum;
}

std::vector<Augmentation> enumerate_augmentations(const Dga& d, const FiniteField& field, int m) {
    if (m < 0) fail(ErrorKind::invalid_argument, "m must be >= 0");
    const int n = d.size();
    const int ell = d.components;

    // Variables: t_1..t_l, then chords by height. A constraint d(a_j) is
    // checked at the step that assigns the last of its letters.
    std::vector<int> order = d.height_order();
    std::vector<int> step_of_chord(n);
    for (int s = 0; s < n; ++s) step_of_chord[order[s]] = ell + s;
    const int steps = ell + n;
    std::vector<std::vector<CompiledPoly>> checks(steps + 1);
    for (int g = 0; g < n; ++g) {
        CompiledPoly cp(d.differential[g], field);
        int last = -1;
        for (const auto& t : cp.terms())
            for (const auto& l : t.word)
                last = std::max(last, l.is_chord() ? step_of_chord[l.index] : l.index);
        // A constraint with no letters at all is a constant: check before anything.
        checks[last + 1].push_back(std::move(cp));
    }

    std::vector<std::vector<FqElem>> domain(steps);
    for (int i = 0; i < ell; ++i) domain[i] = field.units();
    for (int s = 0; s < n; ++s)
        domain[ell + s] = graded_zero(d.generators[order[s]].degree, m) ? field.elements()
                                                                       : std::vector<FqElem>{field.zero()};

    Augmentation cur;
    cur.t_values.assign(ell, field.one());
    cur.chord_values.assign(n, field.zero());
    std::vector<Augmentation> out;

    auto ok_at = [&](int level) {
        for (const auto& c : checks[level])
            if (!field.is_zero(c.eval(field, cur))) return false;
        return true;
    };
    if (!ok_at(0)) return out;

    auto assign = [&](int step, FqElem v) {
        if (step < ell)
            cur.t_values[step] = v;
        else
            cur.chord_values[order[step - ell]] = v;
    };
    auto rec = [&](auto&& self, int step) -> void {
        if (step == steps) {
            out.push_back(cur);
            return;
        }
        for (FqElem v : domain[step]) {
            assign(step, v);
            if (ok_at(step + 1)) self(self, step + 1);
        }
        assign(step, step < ell ? field.one() : field.zero());
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::string augmentation_violation(const Dga& d, const FiniteField& field, int m,
                                   const Augmentation& e) {
    if (static_cast<int>(e.t_values.size()) != d.components ||
        static_cast<int>(e.chord_values.size()) != d.size())
        return "wrong number of values";
    for (int i = 0; i < d.components; ++i)
        if (field.is_zero(e.t_values[i])) return "t" + std::to_string(i + 1) + " is not invertible";
    for (int g = 0; g < d.size(); ++g)
        if (!field.is_zero(e.chord_values[g]) && !graded_zero(d.generators[g].degree, m))
            return d.generators[g].name + " has nonzero value outside the graded degrees";
    for (int g = 0; g < d.size(); ++g)
        if (!field.is_zero(eval_poly(field, e, d.differential[g])))
            return "e(d " + d.generators[g].name + ") != 0";
    return {};
}

EulerData euler_data(const Dga& d, int m) {
    if (m < 0) fail(ErrorKind::invalid_argument, "m must be >= 0");
    EulerData ed;
    for (const auto& g : d.generators) ed.chords_by_degree[g.degree] += 1;
    if (m == 0) {
        for (auto [i, r] : ed.chords_by_degree) {
            int sign = (i >= 0 ? i : i + 1) % 2 == 0 ? 1 : -1;
            ed.chi += sign * r;
        }
        return ed;
    }
    const int period = 2 * m;
    for (auto [i, r] : ed.chords_by_degree) {
        int k = i >= 0 ? i / period : -((-i + period - 1) / period);
        int offset = i - k * period;
        ed.blocks[k] += (offset % 2 == 0 ? 1 : -1) * r;
    }
    for (auto [k, s] : ed.blocks) ed.chi += (2 * k + 1) * s;
    return ed;
}

QSqrt normalized_count(const Dga& d, long q, int m, long long count) {
    int chi = euler_data(d, m).chi;
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(q - 1),
                  static_cast<unsigned long>(d.components));
    return QSqrt::sqrt_power(q, -chi) * mpq_class(mpz_class(static_cast<long>(count)), denom);
}

std::string augmentation_to_string(const Dga& d, const FiniteField& field, const Augmentation& e) {
    std::ostringstream os;
    for (int i = 0; i < d.components; ++i)
        os << (i ? " " : "") << "t" << i + 1 << "=" << field.to_string(e.t_values[i]);
    for (int g = 0; g < d.size(); ++g) os << " " << d.generators[g].name << "=" << field.to_string(e.chord_values[g]);
    return os.str();
}

}  // namespace legcard
