#pragma once

#include "calculus.hpp"
#include "comodule.hpp"

namespace qpb {

struct BundleReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

class BundleCalculus;
using BundleCalculusPtr = std::shared_ptr<const BundleCalculus>;

// The completeness structure of a quantum principal bundle: the coaction of
// H on A extended multiplicatively to Delta^w : Omega(A) -> Omega(A) (x)
// Omega(H), determined by the images of the invariant form generators. The
// component with Omega(H)-degree l on a degree-(k+l) form is ver^{k,l}; the
// degree-0 component is the form coaction Delta_{Omega(A)}.
class BundleCalculus {
public:
    static BundleCalculusPtr make(CoactionPtr coact, CalculusPtr calcA, CalculusPtr calcH,
                                  std::map<std::string, TensorElement> form_images);

    const CoactionPtr& coaction() const { return coact_; }
    const CalculusPtr& calcA() const { return cA_; }
    const CalculusPtr& calcH() const { return cH_; }
    std::vector<PresentationPtr> pair() const { return {cA_->omega(), cH_->omega()}; }

    TensorElement apply_word(const Word& w) const;  // multiplicative extension
    TensorElement apply(const NcPoly& x) const;
    // terms of Delta^w(x) whose Omega(H) leg has form degree h_deg
    TensorElement ver(const NcPoly& x, int h_deg) const;
    bool is_horizontal(const NcPoly& x) const;

private:
    CoactionPtr coact_;
    CalculusPtr cA_, cH_;
    std::vector<TensorElement> images_;  // per omega(A) letter
    mutable std::mutex mu_;
    mutable std::map<Word, TensorElement> memo_;

    BundleCalculus() = default;
};

// Well-definedness along every relation of Omega(A), counitality,
// multiplicativity on bounded word pairs, and the differentiability square
// Delta^w o d = (d (x) id + (-1)^deg id (x) d) o Delta^w.
BundleReport check_completeness(const BundleCalculusPtr& dc, int max_len);

// Normalization target H (x) Lambda for a U(1)-type structure Hopf algebra:
// the single invariant 1-form varpi = t^-1 dt with t varpi-commutation
// inherited from Omega(H), and varpi /\ varpi = 0.
struct VerticalAlgebra {
    PresentationPtr V;   // t, t^-1, varpi
    CalculusPtr calcH;
    int varpi = -1;
    NcPoly substitute(const NcPoly& eta) const;  // Omega(H) -> V, dt -> t varpi
    NcPoly invariant(const NcPoly& eta) const;   // P: counit on the algebra prefix
};
VerticalAlgebra make_vertical(const CalculusPtr& calcH);

// pi_ver = (id (x) P) o ver^{0,k} : Omega^k(A) -> A (x) Lambda^k.
TensorElement pi_ver(const BundleCalculusPtr& dc, const VerticalAlgebra& vert, const NcPoly& x);

// Basis of the degree-k forms with Delta^w(x) = x (x) 1 at the word bound.
std::vector<NcPoly> base_forms(const BundleCalculusPtr& dc, int degree, int max_len);

// 0 -> hor^1 -> Omega^1(A) -> A (x) Lambda^1 -> 0 at the bound: ker pi_ver
// coincides with the horizontal forms and pi_ver is surjective; in degree 2
// the horizontal forms still lie in ker pi_ver.
BundleReport check_exact_sequence(const BundleCalculusPtr& dc, const VerticalAlgebra& vert,
                                  int max_len);

// Right adjoint hook theta -> a = S(a_1) theta a_2 on Omega(H).
NcPoly hook(const NcPoly& theta, const Word& a, const CalculusPtr& calcH,
            const StructureMapsPtr& maps);

// Product and differential of the verticalized complex A (x) Omega(H):
// (a (x) theta)(b (x) eta) = a b_0 (x) (theta -> b_1) /\ eta,
// d_ver(a (x) theta) = a (x) d theta + a_0 (x) varpi(pi_eps(a_1)) /\ theta.
TensorElement wedge_ver(const TensorElement& x, const TensorElement& y, const CoactionPtr& coact,
                        const CalculusPtr& calcH);
TensorElement d_ver(const TensorElement& x, const CoactionPtr& coact, const CalculusPtr& calcH);

// Beggs-Majid vertical map on a universal pair: a d_u(b) -> a b_0 (x)
// S(b_1) d(b_2), with values in A (x) Omega^1(H).
TensorElement ver_bm_pair(const Word& a, const Word& b, const CoactionPtr& coact,
                          const CalculusPtr& calcH);

// ver_BM transported to Omega^1(A) through a coframe decomposition
// theta = sum a^i d(b^i) (one A (x) A tensor per form letter).
TensorElement ver_bm(const NcPoly& omega1, const std::map<int, TensorElement>& coframe,
                     const CoactionPtr& coact, const CalculusPtr& calcA,
                     const CalculusPtr& calcH);

// The comparison: the coframe reproduces the form generators, the universal
// formula on pairs agrees with the coframe-transported map (so ver_BM is well
// defined on Omega^1), and ker ver_BM = A d(B) A at the bound.
BundleReport check_bm_bundle(const BundleCalculusPtr& dc,
                             const std::map<int, TensorElement>& coframe, int max_len);

}  // namespace qpb
