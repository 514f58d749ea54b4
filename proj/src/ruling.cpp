#include "legcard/ruling.hpp"

#include <algorithm>

#include "legcard/aug.hpp"
#include "legcard/error.hpp"

namespace legcard {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

int chi_star(const Front& front, int m) {
    // Chord degrees straight from the front: crossings plus one degree-1 chord per right cusp.
    std::map<int, int> degrees;
    for (int i = 0; i < front.crossing_count(); ++i) degrees[front.crossing_degree(i)] += 1;
    degrees[1] += front.right_cusp_count();
    Dga tally;
    for (auto [deg, count] : degrees)
        for (int k = 0; k < count; ++k) tally.generators.push_back({"", deg, 0, 0, 0});
    return euler_data(tally, m).chi;
}

}  // namespace

bool disjoint_or_nested(int a1, int b1, int a2, int b2) {
    if (a1 > b1) std::swap(a1, b1);
    if (a2 > b2) std::swap(a2, b2);
    if (b1 < a2 || b2 < a1) return true;
    if (a1 < a2 && b2 < b1) return true;
    if (a2 < a1 && b1 < b2) return true;
    return false;
}

std::vector<NormalRuling> enumerate_rulings(const Front& front, int m) {
    if (m < 0) fail(ErrorKind::invalid_argument, "m must be >= 0");
    const int n = front.crossing_count();
    const int strands = front.strand_count();
    std::vector<int> start(strands);
    for (int p = 0; p < strands; ++p) start[p] = p ^ 1;

    std::vector<NormalRuling> out;
    NormalRuling cur;
    cur.switches.assign(n, false);
    cur.pairing.push_back(start);

    auto rec = [&](auto&& self, int i) -> void {
        const std::vector<int> pair = cur.pairing.back();
        if (i == n) {
            for (int p = 0; p < strands; ++p)
                if (pair[p] != (p ^ 1)) return;
            NormalRuling r = cur;
            r.switch_count = static_cast<int>(std::count(r.switches.begin(), r.switches.end(), true));
            r.chi = front.right_cusp_count() - r.switch_count;
            out.push_back(std::move(r));
            return;
        }
        const int p = front.crossing(i).position;
        const int a = pair[p];
        const int b = pair[p + 1];
        if (a == p + 1) return;  // partners may not cross
        {
            std::vector<int> next = pair;
            next[p + 1] = a;
            next[a] = p + 1;
            next[p] = b;
            next[b] = p;
            cur.pairing.push_back(std::move(next));
            self(self, i + 1);
            cur.pairing.pop_back();
        }
        if (graded_zero(front.crossing_degree(i), m) && disjoint_or_nested(p, a, p + 1, b)) {
            cur.switches[i] = true;
            cur.pairing.push_back(pair);
            self(self, i + 1);
            cur.pairing.pop_back();
            cur.switches[i] = false;
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(),
              [](const NormalRuling& x, const NormalRuling& y) { return x.switches < y.switches; });
    return out;
}

LaurentPoly ruling_polynomial(const std::vector<NormalRuling>& rulings) {
    LaurentPoly p;
    for (const auto& r : rulings) p.add_term(1, -r.chi);
    return p;
}

LaurentPoly ruling_polynomial(const Front& front, int m) { return ruling_polynomial(enumerate_rulings(front, m)); }

CrossingClassification classify_crossings(const Front& front, const NormalRuling& r, int m) {
    CrossingClassification cc;
    for (int i = 0; i < front.crossing_count(); ++i) {
        const int deg = front.crossing_degree(i);
        if (!graded_zero(deg, m)) {
            cc.roles.push_back(CrossingRole::ungraded);
            continue;
        }
        if (r.switches[i]) {
            cc.roles.push_back(CrossingRole::switch_);
            cc.switches[deg] += 1;
            continue;
        }
        const int p = front.crossing(i).position;
        const auto& before = r.pairing[i];
        const auto& after = r.pairing[i + 1];
        bool normal_before = disjoint_or_nested(p, before[p], p + 1, before[p + 1]);
        bool normal_after = disjoint_or_nested(p, after[p], p + 1, after[p + 1]);
        if (normal_before == normal_after)
            fail(ErrorKind::internal, "crossing " + std::to_string(i + 1) +
                                          " is normal on both or neither side");
        if (normal_before) {
            cc.roles.push_back(CrossingRole::departure);
            cc.departures[deg] += 1;
        } else {
            cc.roles.push_back(CrossingRole::return_);
            cc.returns[deg] += 1;
            cc.total_returns += 1;
        }
    }
    return cc;
}

mpz_class hr_weighted_count(const Front& front, long q, int m) {
    if (q < 2) fail(ErrorKind::invalid_argument, "q must be >= 2");
    mpq_class total = 0;
    const int ell = front.component_count();
    for (const auto& r : enumerate_rulings(front, m)) {
        auto cc = classify_crossings(front, r, m);
        int e = -r.chi + ell;
        mpz_class pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q - 1), static_cast<unsigned long>(std::abs(e)));
        mpq_class term = e >= 0 ? mpq_class(pw) : mpq_class(1) / mpq_class(pw);
        mpz_class qr;
        mpz_ui_pow_ui(qr.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(cc.total_returns));
        total += term * qr;
    }
    total.canonicalize();
    if (total.get_den() != 1) fail(ErrorKind::internal, "weighted ruling count is not an integer");
    return total.get_num();
}

std::vector<std::string> verify_return_formula(const Front& front, int m) {
    std::vector<std::string> issues;
    const int cs = chi_star(front, m);
    auto rulings = enumerate_rulings(front, m);
    for (std::size_t k = 0; k < rulings.size(); ++k) {
        auto cc = classify_crossings(front, rulings[k], m);
        if (2 * cc.total_returns != cs + rulings[k].chi)
            issues.push_back("ruling " + std::to_string(k + 1) + ": returns " +
                             std::to_string(cc.total_returns) + " vs (" + std::to_string(cs) + " + " +
                             std::to_string(rulings[k].chi) + ")/2");
    }
    return issues;
}

IndexTerms index_function(const Front& front, const NormalRuling& r, int m, int slice) {
    if (m < 1) fail(ErrorKind::invalid_argument, "index function needs m >= 1");
    const long period = 2L * m;
    const auto& mu = front.maslov();
    const auto& pair = r.pairing[slice];
    auto pot = [&](int pos) { return static_cast<long>(mu[front.strand_at(slice, pos)]); };
    struct Span {
        int lo, hi;
    };
    std::vector<Span> disks;
    for (int p = 0; p < front.strand_count(); ++p)
        if (pair[p] > p) disks.push_back({p, pair[p]});

    IndexTerms it;
    for (const auto& d : disks) it.disks += floor_div(pot(d.hi) - pot(d.lo), period);
    for (const auto& x : disks)
        for (const auto& y : disks) {
            if (x.lo < y.lo && y.lo < x.hi && x.hi < y.hi) {
                // interlaced, y the upper disk
                long v = pot(y.lo) - pot(x.hi);
                long sign = (v % 2 == 0) ? 1 : -1;
                it.interlaced += sign * (2 * floor_div(v, period) + 1);
            } else if (x.lo < y.lo && y.hi < x.hi) {
                // y nested inside x
                long sign = ((pot(y.hi) - pot(x.hi)) % 2 == 0) ? 1 : -1;
                it.nested += 2 * sign * floor_div(pot(y.hi) - pot(y.lo), period);
            }
        }
    return it;
}

long index_step_expected(int degree, CrossingRole role, int m) {
    const long period = 2L * m;
    switch (role) {
        case CrossingRole::departure:
            return degree / m + 1;
        case CrossingRole::return_:
            return degree / m - 1;
        case CrossingRole::switch_:
            return degree / m;
        case CrossingRole::ungraded:
            return (degree % 2 == 0 ? 1 : -1) * (2 * floor_div(degree, period) + 1);
    }
    return 0;
}

std::vector<std::string> verify_index_function(const Front& front, const NormalRuling& r, int m) {
    std::vector<std::string> issues;
    const int n = front.crossing_count();
    auto cc = classify_crossings(front, r, m);
    std::vector<long> values;
    for (int s = 0; s <= n; ++s) values.push_back(index_function(front, r, m, s).total());
    if (values.front() != 0) issues.push_back("I = " + std::to_string(values.front()) + " at the left end");
    if (values.back() != 0) issues.push_back("I = " + std::to_string(values.back()) + " at the right end");
    for (int i = 0; i < n; ++i) {
        long step = values[i + 1] - values[i];
        long expected = index_step_expected(front.crossing_degree(i), cc.roles[i], m);
        if (step != expected)
            issues.push_back("crossing " + std::to_string(i + 1) + " (" + role_name(cc.roles[i]) +
                             ", degree " + std::to_string(front.crossing_degree(i)) + "): step " +
                             std::to_string(step) + ", expected " + std::to_string(expected));
    }
    return issues;
}

std::string role_name(CrossingRole role) {
    switch (role) {
        case CrossingRole::ungraded:
            return "ungraded";
        case CrossingRole::switch_:
            return "switch";
        case CrossingRole::departure:
            return "departure";
        case CrossingRole::return_:
            return "return";
    }
    return "?";
}

}  // namespace legcard
