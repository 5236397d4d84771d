#pragma once

#include "hopf.hpp"
#include "linalg.hpp"

namespace qpb {

struct DegreeOverflow : std::logic_error {
    DegreeOverflow() : std::logic_error("form degree exceeds the calculus truncation") {}
};
struct NotInKernel : std::logic_error {
    NotInKernel() : std::logic_error("element is not in the kernel of the multiplication") {}
};
struct NotInAugmentationIdeal : std::logic_error {
    NotInAugmentationIdeal() : std::logic_error("element has nonzero counit") {}
};
struct IdealNotInKernel : std::logic_error {
    IdealNotInKernel() : std::logic_error("ideal generator has nonzero counit") {}
};

class Calculus;
using CalculusPtr = std::shared_ptr<const Calculus>;

// A (graded) differential calculus presented by a single extended
// presentation: the algebra letters of `base` (same ids, same order) followed
// by form letters, with the bimodule and wedge relations as rewrite rules.
// The degree-1 slice is the first-order calculus; `max_degree` is the
// truncation the catalog example is proved to vanish above.
class Calculus {
public:
    static CalculusPtr make(PresentationPtr base, PresentationPtr omega,
                            std::map<std::string, NcPoly> d_images, int max_degree);

    const PresentationPtr& base() const { return base_; }
    const PresentationPtr& omega() const { return omega_; }
    int max_degree() const { return maxdeg_; }

    // Base polynomials embed with unchanged letter ids.
    NcPoly lift(const NcPoly& a) const;
    // Degree-0 omega polynomials project back to the base algebra.
    NcPoly project0(const NcPoly& x) const;

    NcPoly d_word(const Word& w) const;  // graded Leibniz
    NcPoly d(const NcPoly& x) const;
    NcPoly wedge(const NcPoly& x, const NcPoly& y) const;

private:
    PresentationPtr base_, omega_;
    std::vector<NcPoly> d_;  // per omega letter
    int maxdeg_ = 1;

    Calculus() = default;
};

struct CalcReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Bimodule/differential well-definedness over the base relations, the
// Leibniz rule on word pairs, and surjectivity: every form generator lies in
// span{a d(b)} over the bounded basis.
CalcReport check_fodc(const CalculusPtr& calc, int max_len);

// d_u(a) = 1 (x) a - a (x) 1 in A (x) A.
TensorElement universal_d(const NcPoly& a, const PresentationPtr& A);

// pi(sum a^i (x) b^i) = sum a^i d(b^i); input must lie in ker mu.
NcPoly universal_quotient(const TensorElement& x, const CalculusPtr& calc);

// Quantum Maurer-Cartan form varpi(h) = S(h_1) d(h_2) for h in ker eps.
NcPoly maurer_cartan(const NcPoly& h, const CalculusPtr& calc, const StructureMapsPtr& maps);

// Enumerates the first-order relations sum a^i d(b^i) = 0 at the word bound
// and verifies each image sum d(a^i) /\ d(b^i) vanishes in the graded
// calculus (the S-wedge generators die in any quotient of the maximal
// prolongation).
CalcReport maximal_prolongation_check(const CalculusPtr& calc, int max_len);

struct WoronowiczResult {
    CalculusPtr calc;       // first-order calculus H (x) (H+/I)
    int rank = 0;           // dim of the bounded quotient H+/I
    bool bicovariant = false;  // ad_R(I) subset I (x) H at the bound
};

// Thm. (Woronowicz correspondence): build the first-order calculus from a
// right ideal I subset ker eps, with Gamma = H (x) H+/I, bimodule rule
// (h (x) [g]) h' = h h'_1 (x) [g h'_2], and d h = (id (x) pi)(Delta h - h (x) 1).
WoronowiczResult woronowicz_from_ideal(const PresentationPtr& H, const StructureMapsPtr& maps,
                                       const std::vector<NcPoly>& ideal_gens, int max_len);

}  // namespace qpb
