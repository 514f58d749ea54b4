#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "legcard/aug.hpp"
#include "legcard/dga.hpp"
#include "legcard/linalg.hpp"
#include "legcard/qsqrt.hpp"

namespace legcard {

struct HomGenerator {
    enum Kind { y, x, chord };
    Kind kind = y;
    int index = 0;   // component for y/x, generator index for chords
    int degree = 0;  // reduced into [0, 2m) when m >= 1
};

/// Hom(e1, e2) with its differential m1. Basis order: y_1..y_l, x_1..x_l,
/// then a_j^+ by increasing height.
struct HomComplex {
    int m = 0;
    bool x_rule = true;  // whether m1(x_i^+) was filled in
    std::vector<HomGenerator> basis;
    FqMatrix m1;  // m1.at(target, source)

    int dim() const { return static_cast<int>(basis.size()); }
    /// Successor degree (d + 1, reduced mod 2m when m >= 1).
    int next_degree(int d) const;
    std::vector<int> indices_of_degree(int d) const;
    /// Degrees present in the basis, plus their successors, in increasing order.
    std::vector<int> degrees() const;
};

int reduce_degree(int degree, int m);

/// Builds Hom(e1, e2). With x_rule false, m1(x_i^+) is left zero.
HomComplex build_hom(const Dga& d, const FiniteField& field, int m, const Augmentation& e1,
                     const Augmentation& e2, bool x_rule = true);

struct CohomologyDims {
    std::map<int, int> hom;  // dim Hom^i
    std::map<int, int> cocycles;
    std::map<int, int> coboundaries;
    std::map<int, int> cohomology;

    int h(int i) const;
    int b(int i) const;
    int chain(int i) const;
};

CohomologyDims cohomology(const FiniteField& field, const HomComplex& h);

/// Nonzero entries of m1 o m1, as "target <- source" strings; empty = ok.
std::vector<std::string> m1_squared_violations(const Dga& d, const FiniteField& field, const HomComplex& h);

/// Entries of m1 leaving the height filtration (m1(F^i) must lie in F^{i+1}).
std::vector<std::string> filtration_violations(const Dga& d, const FiniteField& field, const HomComplex& h);

/// Entries of m1 that do not raise degree by one.
std::vector<std::string> degree_violations(const FiniteField& field, const HomComplex& h);

/// Outcome of transporting e1 along (d, k).
struct Transport {
    Augmentation target;
    std::vector<FqElem> homotopy;  // K on each generator (zero off the degree -1 mod 2m chords)
    std::vector<FqElem> alpha;     // coordinates of sum d_i y_i^+ + sum k_j a_j^+ in the Hom basis
};

/// Chords whose a^+ sits in Hom^0, i.e. degree -1 (mod 2m), by increasing height.
std::vector<int> degree_minus_one_chords(const Dga& d, int m);

/// Constructs the unique e2 making alpha closed in Hom(e1, e2). `scales` are
/// the y-coefficients (nonzero), `shifts` the values k_j on
/// degree_minus_one_chords(d, m) in that order. Throws Error(internal) if the
/// result is not an augmentation or alpha is not closed.
Transport transport(const Dga& d, const FiniteField& field, int m, const Augmentation& e1,
                    const std::vector<FqElem>& scales, const std::vector<FqElem>& shifts,
                    bool verify = true);

/// Number of closed degree-0 elements of h with all y-coefficients nonzero
/// (inclusion-exclusion over coordinate subspaces of Z^0).
mpz_class closed_unit_count(const FiniteField& field, const HomComplex& h);
/// Same, by listing every element of Hom^0. Only for small complexes.
mpz_class closed_unit_count_brute(const FiniteField& field, const HomComplex& h);

/// |Aut(e)| = closed units of Hom^0(e,e) / q^{dim B^0}.
mpz_class aut_count(const Dga& d, const FiniteField& field, int m, const Augmentation& e);

struct IsoClass {
    int representative = 0;     // index into the augmentation list
    std::vector<int> members;   // sorted indices
};

/// Partition into isomorphism classes by transport orbits, in order of
/// first member.
std::vector<IsoClass> iso_classes(const Dga& d, const FiniteField& field, int m,
                                  const std::vector<Augmentation>& augs);

/// Thurston-Bennequin number read off the DGA: sum over chords of (-1)^degree.
int dga_tb(const Dga& d);

struct ClassReport {
    int representative = 0;
    int size = 0;
    std::vector<int> members;
    mpz_class aut;
    CohomologyDims dims;        // of the self-Hom of the representative
    int hom0_minus_b0 = 0;      // dim Hom^0 - dim B^0
    bool size_matches_formula = false;
};

struct CardReport {
    long q = 0;
    int m = 0;
    int components = 0;
    int tb = 0;
    int chi_star = 0;
    long long augmentations = 0;
    std::vector<Augmentation> augs;
    std::vector<ClassReport> classes;
    mpq_class groupoid;
    /// m = 0: sum over classes of q^{sum_{k>=1} (-1)^{k+1} dim H^{-k}} / |Aut|.
    QSqrt homotopy;
    /// Sum over classes of q^{dim Hom^0 - dim B^0 - l - (chi_* - tb)/2} / |Aut|.
    QSqrt hom_boundary_form;
    /// Sum over classes of |H^0| |H^1|^{-1/2} q^{(tb - l)/2} / |Aut|.
    QSqrt cohomology_form;
    /// m = 1 only: sum over classes of |H^0|^{1/2} q^{-l/2} / |Aut|.
    QSqrt even_form;
    /// q^{(tb - chi_*)/2} (q-1)^{-l} #augs.
    QSqrt normalized_by_tb;
};

CardReport cardinality_report(const Dga& d, long q, int m);

/// Homotopy cardinality (m = 0 only); throws for m != 0.
QSqrt homotopy_cardinality(const CardReport& r);

struct CandidateForms {
    QSqrt hom_boundary;  // always present
    QSqrt cohomology;    // uses m1(x^+)
    bool has_even_form = false;
    QSqrt even;          // m = 1
    bool tb_cross_check = true;  // m = 1: tb = dim H^1 - dim H^0 on every class
};

/// The m >= 1 candidate cardinalities; throws Error(invalid_argument) for m = 0.
CandidateForms candidate_cardinality_2m(const Dga& d, long q, int m);
/// Same, read off an existing report.
CandidateForms candidate_cardinality_2m(const CardReport& r);

struct ConjectureRow {
    int index = 0;        // augmentation index
    bool z_graded = false;
    int lhs = 0;          // 2 dim Hom^0 - 2 dim B^0 - l - chi_*
    int rhs = 0;          // 2 dim H^0 - dim H^1
    bool pass() const { return lhs == rhs; }
};

std::vector<ConjectureRow> conjecture_harness(const Dga& d, long q, int m);
/// Same harness over an explicit list of Hom complexes (used for negative controls).
ConjectureRow conjecture_row(const FiniteField& field, const HomComplex& h, int components, int chi_star);

/// For a fixed source: the sum over all targets of closed unit-y degree-0
/// morphisms, and the predicted (q-1)^l q^{r'}.
struct Count1 {
    mpz_class total;
    mpz_class predicted;
};
Count1 count1(const Dga& d, const FiniteField& field, int m, const std::vector<Augmentation>& augs,
              int source, bool brute = false);

/// Duality and the -tb identity on a Z-graded self-Hom; one line per violation.
std::vector<std::string> duality_violations(const Dga& d, const FiniteField& field, const HomComplex& h);

/// True iff the augmentation vanishes on all chords of nonzero degree.
bool is_z_graded(const Dga& d, const FiniteField& field, const Augmentation& e);

}  // namespace legcard
