#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace legcard {

/// A front diagram in plat position: `left_cusps` left cusps at the far left
/// (joining positions 2k-1, 2k), a left-to-right list of crossings, and right
/// cusps at the far right closing (1,2), (3,4), ...  Positions are 1-based,
/// counted from the bottom; crossing p exchanges the strands at p and p+1.
struct PlatFront {
    std::string name;
    int left_cusps = 0;
    std::vector<int> crossings;
    /// Per-component Maslov shift (component numbers are 1-based); default 0.
    std::map<int, int> maslov_shift;
    /// Per-component base-point right cusp (1-based); default: the
    /// component's lowest-index right cusp.
    std::map<int, int> basepoint_cusp;

    friend bool operator==(const PlatFront&, const PlatFront&) = default;
};

struct CrossingInfo {
    int position = 0;      // 0-based lower position p (strands at p, p+1 swap)
    int over_strand = 0;   // strand arriving at p+1: runs from upper left to lower right
    int under_strand = 0;  // strand arriving at p: runs from lower left to upper right
};

struct ClassicalInvariants {
    int tb = 0;
    std::vector<int> rotation;  // per component
    int components = 0;
};

/// A validated plat front with its strands traced. Strands are numbered
/// 0..2N-1 by their starting (left) position; each runs from a left cusp to
/// a right cusp without turning, so the Maslov potential is constant on it.
class Front {
public:
    /// Traces components and rotation numbers. Throws Error(validation) on
    /// out-of-range crossings or bad base-point / shift entries; nonzero
    /// rotation is recorded, not rejected.
    explicit Front(PlatFront diagram);

    const PlatFront& diagram() const { return diagram_; }
    const std::string& name() const { return diagram_.name; }
    int strand_count() const { return 2 * diagram_.left_cusps; }
    int right_cusp_count() const { return diagram_.left_cusps; }
    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    int component_count() const { return components_; }

    /// 0-based component of a strand.
    int component_of(int strand) const { return strand_component_[strand]; }
    /// Strand occupying `position` (0-based) in slice `slice` (0 = left of
    /// every crossing, i = just right of crossing i).
    int strand_at(int slice, int position) const { return slices_[slice][position]; }
    const std::vector<int>& slice(int slice) const { return slices_[slice]; }
    const CrossingInfo& crossing(int i) const { return crossings_[i]; }
    /// Right cusp j (0-based) joins final positions 2j, 2j+1.
    int right_cusp_lower(int j) const { return slices_.back()[2 * j]; }
    int right_cusp_upper(int j) const { return slices_.back()[2 * j + 1]; }
    int right_cusp_component(int j) const { return strand_component_[right_cusp_lower(j)]; }
    /// 0-based base-point right cusp of a 0-based component.
    int basepoint_cusp(int component) const { return basepoint_[component]; }
    int maslov_shift(int component) const;

    const std::vector<int>& rotation() const { return rotation_; }
    bool graded() const;

    /// Maslov potential per strand. Throws Error(validation) if some
    /// component has nonzero rotation.
    const std::vector<int>& maslov() const;
    /// maslov(over) - maslov(under); requires graded().
    int crossing_degree(int i) const;

    /// Orientation per strand: +1 rightward, -1 leftward; chosen compatible with the
    /// parity of the Maslov potential (rightward iff odd) when graded.
    const std::vector<int>& orientation() const { return orientation_; }
    int writhe() const;
    ClassicalInvariants classical_invariants() const;

private:
    PlatFront diagram_;
    int components_ = 0;
    std::vector<int> strand_component_;
    std::vector<std::vector<int>> slices_;
    std::vector<CrossingInfo> crossings_;
    std::vector<int> basepoint_;
    std::vector<int> rotation_;
    std::vector<int> orientation_;
    std::optional<std::vector<int>> maslov_;
    std::string maslov_error_;
};

/// Parses the JSON front format
/// {"name": str, "left_cusps": int, "events": [int...],
///  "maslov_shift": {"<component>": int}?, "basepoint_cusp": {"<component>": int}?}.
/// Throws Error(parse) on malformed input, Error(validation) on invariant
/// violations, including nonzero rotation on some component.
PlatFront parse_front(const std::string& text);
std::string serialize_front(const PlatFront& front);

/// Names of the built-in fronts, in a fixed order.
const std::vector<std::string>& builtin_front_names();
/// Built-in front by name (aliases such as "trefoil" accepted). Throws
/// Error(unknown_example).
PlatFront builtin_front(const std::string& name);
/// The frozen JSON text of a built-in front.
const std::string& builtin_front_text(const std::string& name);

}  // namespace legcard
