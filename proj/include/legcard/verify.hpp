#pragma once

#include <random>
#include <string>
#include <vector>

#include "legcard/dga.hpp"
#include "legcard/front.hpp"

namespace legcard {

/// One identity checked for one (input, q, m).
struct IdentityResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::string note;  // e.g. "uses m1(x+)", first violation, "skipped: ..."
    bool skipped = false;
};

struct VerifyOptions {
    /// Compare |Hom^0(e,e')^x| closed units against the inclusion-exclusion
    /// count by brute force when dim Hom^0 is at most this.
    int brute_force_dim = 8;
};

/// Every identity that applies to the input at (q, m). `front` may be null
/// for DGA-only inputs; ruling-side identities are then reported as skipped.
std::vector<IdentityResult> verify_identities(const Dga& d, const Front* front, long q, int m,
                                              const VerifyOptions& options = {});

/// A random plat front with `left_cusps` cusps and `crossings` or
/// `crossings + 1` crossings whose components all have rotation 0
/// (resampled until graded; parity decides which count is possible).
PlatFront random_graded_front(std::mt19937_64& rng, int left_cusps, int crossings);

}  // namespace legcard
