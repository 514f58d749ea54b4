#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "legcard/front.hpp"
#include "legcard/laurent.hpp"

namespace legcard {

/// A 2m-graded normal ruling of a plat front, with the pairing of positions
/// (a fixed-point-free involution) in every slice between crossings.
struct NormalRuling {
    std::vector<bool> switches;             // per crossing
    std::vector<std::vector<int>> pairing;  // per slice 0..n: partner of each position
    int switch_count = 0;
    int chi = 0;  // right cusps - switches
};

enum class CrossingRole { ungraded, switch_, departure, return_ };

struct CrossingClassification {
    std::vector<CrossingRole> roles;  // per crossing
    std::map<int, int> departures;    // by crossing degree
    std::map<int, int> returns;
    std::map<int, int> switches;
    int total_returns = 0;
};

/// True iff position intervals [a1,b1] and [a2,b2] are disjoint or nested.
bool disjoint_or_nested(int a1, int b1, int a2, int b2);

/// All 2m-graded normal rulings by a left-to-right sweep, ordered by switch set.
std::vector<NormalRuling> enumerate_rulings(const Front& front, int m);

/// The sum over rulings of z^{-chi}.
LaurentPoly ruling_polynomial(const std::vector<NormalRuling>& rulings);
LaurentPoly ruling_polynomial(const Front& front, int m);

CrossingClassification classify_crossings(const Front& front, const NormalRuling& r, int m);

/// Sum over rulings of (q-1)^{-chi+l} q^{returns}; exact.
mpz_class hr_weighted_count(const Front& front, long q, int m);

/// Checks returns = (chi_* + chi(R))/2 for every ruling; one line per violation.
std::vector<std::string> verify_return_formula(const Front& front, int m);

/// Index function I = I1 + I2 + I3 on a slice (m >= 1).
struct IndexTerms {
    long interlaced = 0;
    long nested = 0;
    long disks = 0;
    long total() const { return interlaced + nested + disks; }
};
IndexTerms index_function(const Front& front, const NormalRuling& r, int m, int slice);

/// Expected I(right) - I(left) across crossing i for the given role.
long index_step_expected(int degree, CrossingRole role, int m);

/// Checks the step rule at every crossing and I = 0 at both ends; one line per violation.
std::vector<std::string> verify_index_function(const Front& front, const NormalRuling& r, int m);

std::string role_name(CrossingRole role);

}  // namespace legcard
