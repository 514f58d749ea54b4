#pragma once

#include <compare>
#include <map>
#include <vector>

#include "legcard/dga.hpp"
#include "legcard/finite_field.hpp"
#include "legcard/qsqrt.hpp"

namespace legcard {

/// True iff a chord of this degree may take a nonzero value in a
/// 2m-graded augmentation (m = 0: degree 0 exactly).
bool graded_zero(int degree, int m);

/// Values of a unital DGA map A -> F_q.
struct Augmentation {
    std::vector<FqElem> t_values;      // per component, nonzero
    std::vector<FqElem> chord_values;  // per generator index

    friend auto operator<=>(const Augmentation&, const Augmentation&) = default;
};

/// A polynomial with coefficients pushed into F_q, ready for repeated evaluation.
class CompiledPoly {
public:
    CompiledPoly(const NcPoly& p, const FiniteField& field);
    struct Term {
        FqElem coeff;
        Word word;
    };
    const std::vector<Term>& terms() const { return terms_; }
    FqElem eval(const FiniteField& field, const Augmentation& e) const;

private:
    std::vector<Term> terms_;
};

/// Value of a word under an augmentation (t^{-1} letters take inverses).
FqElem eval_word(const FiniteField& field, const Augmentation& e, const Word& w,
                 std::size_t begin = 0, std::size_t end = static_cast<std::size_t>(-1));
FqElem eval_poly(const FiniteField& field, const Augmentation& e, const NcPoly& p);

/// Complete, duplicate-free list of 2m-graded augmentations, sorted
/// lexicographically (t values first, then chord values by generator index).
std::vector<Augmentation> enumerate_augmentations(const Dga& d, const FiniteField& field, int m);

/// Checks all augmentation invariants; returns a description of the first
/// violation or an empty string.
std::string augmentation_violation(const Dga& d, const FiniteField& field, int m,
                                   const Augmentation& e);

struct EulerData {
    std::map<int, int> chords_by_degree;  // r_i
    std::map<int, int> blocks;            // s_k (m >= 1 only)
    int chi = 0;                          // shifted Euler characteristic
};

EulerData euler_data(const Dga& d, int m);

/// q^{-chi/2} (q-1)^{-l} * count, exactly.
QSqrt normalized_count(const Dga& d, long q, int m, long long count);

std::string augmentation_to_string(const Dga& d, const FiniteField& field, const Augmentation& e);

}  // namespace legcard
