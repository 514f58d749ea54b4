#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "legcard/front.hpp"

namespace legcard {

/// A letter of a word in the DGA: a chord (by generator index) or t_i^{+-1}.
struct Letter {
    enum Kind : unsigned char { chord = 0, t = 1, t_inv = 2 };
    Kind kind = chord;
    int index = 0;  // generator index, or 0-based component for t letters

    static Letter chord_of(int g) { return {chord, g}; }
    static Letter t_of(int component, bool inverse = false) { return {inverse ? t_inv : t, component}; }
    bool is_chord() const { return kind == chord; }

    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Z-linear combination of words, like terms merged and zeros dropped.
class NcPoly {
public:
    NcPoly() = default;
    static NcPoly word(Word w, long long coeff = 1);

    void add_term(const Word& w, long long coeff);
    NcPoly& operator+=(const NcPoly& o);
    friend NcPoly operator+(NcPoly x, const NcPoly& y) { return x += y; }
    friend NcPoly operator*(const NcPoly& x, const NcPoly& y);
    NcPoly scaled(long long c) const;

    const std::map<Word, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

private:
    std::map<Word, long long> terms_;
};

struct Generator {
    std::string name;
    int degree = 0;
    int r = 0;  // 0-based component of the upper endpoint
    int c = 0;  // 0-based component of the lower endpoint
    int height = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// One rigid disk counted in a differential.
struct Disk {
    int sign = 1;
    Word word;

    friend bool operator==(const Disk&, const Disk&) = default;
};

/// Semi-free DGA over Z[t_1^{+-1}, ..., t_l^{+-1}] on Reeb chord generators.
struct Dga {
    int components = 0;
    std::vector<Generator> generators;
    std::vector<NcPoly> differential;
    /// Per generator, the disks behind its differential. Empty for loaded DGAs.
    std::vector<std::vector<Disk>> disks;
    /// Maslov shifts used for the grading, per component (informational).
    std::vector<int> maslov_shifts;

    int size() const { return static_cast<int>(generators.size()); }
    /// Generator index by name, or -1.
    int find(const std::string& name) const;
    /// Generator indices sorted by increasing height.
    std::vector<int> height_order() const;
    int word_degree(const Word& w) const;

    std::string letter_name(const Letter& l) const;
    /// e.g. "a3*a2*a1", "t1", "1" for the empty word.
    std::string word_to_string(const Word& w) const;
    /// Canonical text, e.g. "t1 + a1 + a3 - a3*a2*a1"; "0" for zero.
    std::string poly_to_string(const NcPoly& p) const;

    /// Compares algebraic content (ignores retained disks).
    bool same_algebra(const Dga& o) const;
};

enum class SignConvention {
    bottom,  // even-degree crossings: negative corners in the lower quadrant carry -1
    top,     // ... in the upper quadrant
};

/// Chekanov-Eliashberg DGA of the resolved plat front. Crossing chords are
/// named a1..an left to right, right-cusp chords c1..cN bottom to top;
/// heights follow the same order. Throws Error(validation) if the front has
/// nonzero rotation.
Dga build_dga(const Front& front, SignConvention signs = SignConvention::bottom);

/// d(d(g)) over Z with the graded Leibniz rule.
NcPoly differential_of(const Dga& d, const NcPoly& p);

/// Lists invariant violations: d^2 = 0, degree, height filtration, link
/// grading, and the disk-count sum when disks are retained. Empty = pass.
std::vector<std::string> check_dga(const Dga& d);

/// Interchange format; see README. load_dga throws Error(parse) on syntax
/// and Error(validation) if check_dga reports violations.
Dga load_dga(const std::string& text);
std::string save_dga(const Dga& d);

}  // namespace legcard
