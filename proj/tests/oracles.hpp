// Brute-force reference implementations used as test oracles. They share
// no search logic with the library: everything is enumerated exhaustively.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <vector>

#include "legcard/aug.hpp"
#include "legcard/dga.hpp"
#include "legcard/finite_field.hpp"
#include "legcard/front.hpp"
#include "legcard/laurent.hpp"

namespace oracle {

using namespace legcard;

inline FqElem word_value(const FiniteField& f, const Augmentation& e, const Word& w) {
    FqElem v = f.one();
    for (const auto& l : w) {
        FqElem x;
        if (l.kind == Letter::chord) x = e.chord_values[l.index];
        else if (l.kind == Letter::t) x = e.t_values[l.index];
        else x = f.inv(e.t_values[l.index]);
        v = f.mul(v, x);
    }
    return v;
}

inline bool kills_differential(const Dga& d, const FiniteField& f, const Augmentation& e) {
    for (const auto& p : d.differential) {
        FqElem s = f.zero();
        for (const auto& [w, c] : p.terms()) s = f.add(s, f.mul(f.from_int(c), word_value(f, e, w)));
        if (!f.is_zero(s)) return false;
    }
    return true;
}

inline bool degree_allowed(int degree, int m) {
    if (m == 0) return degree == 0;
    return ((degree % (2 * m)) + 2 * m) % (2 * m) == 0;
}

/// Every assignment of units to t's and field elements to all chords,
/// filtered by the grading and by e(d a) = 0.
inline std::vector<Augmentation> augmentations(const Dga& d, const FiniteField& f, int m) {
    const int q = f.order();
    const int n = d.size();
    const auto units = f.units();
    std::vector<Augmentation> out;
    std::vector<int> digits(d.components + n, 0);
    for (;;) {
        Augmentation e;
        for (int i = 0; i < d.components; ++i) e.t_values.push_back(units[digits[i]]);
        bool graded = true;
        for (int g = 0; g < n; ++g) {
            FqElem v = f.element(digits[d.components + g]);
            if (!f.is_zero(v) && !degree_allowed(d.generators[g].degree, m)) graded = false;
            e.chord_values.push_back(v);
        }
        if (graded && kills_differential(d, f, e)) out.push_back(e);
        std::size_t i = 0;
        for (; i < digits.size(); ++i) {
            int radix = i < static_cast<std::size_t>(d.components) ? static_cast<int>(units.size()) : q;
            if (++digits[i] < radix) break;
            digits[i] = 0;
        }
        if (i == digits.size()) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// True iff the chords of two disks, given as position pairs, are not interlaced.
inline bool not_interlaced(int a, int b, int c, int d) {
    int lo1 = std::min(a, b), hi1 = std::max(a, b), lo2 = std::min(c, d), hi2 = std::max(c, d);
    bool interlaced = (lo1 < lo2 && lo2 < hi1 && hi1 < hi2) || (lo2 < lo1 && lo1 < hi2 && hi2 < hi1);
    return !interlaced;
}

/// Switch sets (as bool vectors) of all normal rulings, by trying every subset.
inline std::set<std::vector<bool>> rulings(const Front& front, int m) {
    const int n = front.crossing_count();
    const int s = front.strand_count();
    std::set<std::vector<bool>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> partner(s);
        for (int k = 0; k < s; ++k) partner[k] = k ^ 1;
        bool ok = true;
        std::vector<bool> sw(n);
        for (int i = 0; i < n && ok; ++i) {
            int p = front.crossing(i).position;
            sw[i] = (mask >> i) & 1;
            if (partner[p] == p + 1) {
                ok = false;
                break;
            }
            if (sw[i]) {
                if (!degree_allowed(front.crossing_degree(i), m)) ok = false;
                if (!not_interlaced(p, partner[p], p + 1, partner[p + 1])) ok = false;
            } else {
                std::vector<int> next(s);
                auto swap_pos = [&](int x) { return x == p ? p + 1 : x == p + 1 ? p : x; };
                for (int x = 0; x < s; ++x) next[swap_pos(x)] = swap_pos(partner[x]);
                partner = next;
            }
        }
        if (!ok) continue;
        for (int k = 0; k < s; ++k)
            if (partner[k] != (k ^ 1)) ok = false;
        if (ok) out.insert(sw);
    }
    return out;
}

/// P(q^{1/2} - q^{-1/2}) as (rational part, coefficient of sqrt q), using
/// z = (q-1)/sqrt(q): a term c z^k is c (q-1)^k q^{-k/2}.
inline std::pair<mpq_class, mpq_class> ruling_value(const LaurentPoly& p, long q) {
    mpq_class rat = 0, root = 0;
    for (auto [k, c] : p.terms()) {
        mpq_class term(static_cast<long>(c));
        const mpq_class base(q - 1);
        for (int i = 0; i < std::abs(k); ++i) {
            if (k > 0) term *= base;
            else term /= base;
        }
        // q^{-k/2}: for even k a rational power; for odd k, q^{-(k+1)/2} * sqrt q.
        int half = (k % 2 == 0) ? -k / 2 : -(k + 1) / 2;
        for (int i = 0; i < std::abs(half); ++i) {
            if (half > 0) term *= q;
            else term /= q;
        }
        if (k % 2 == 0) rat += term;
        else root += term;
    }
    rat.canonicalize();
    root.canonicalize();
    return {rat, root};
}

}  // namespace oracle
