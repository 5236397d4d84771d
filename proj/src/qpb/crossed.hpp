#pragma once

#include "calculus.hpp"
#include "comodule.hpp"

namespace qpb {

// Coactions of a bicovariant calculus whose form letters are differentials of
// algebra generators: the left coaction h -> h_1 (x) h_2, dh -> h_1 (x) d(h_2)
// into H (x) Omega(H), the right analogue dh -> d(h_1) (x) h_2 into
// Omega(H) (x) H, and the graded coproduct dh -> d(h_1) (x) h_2 + h_1 (x)
// d(h_2) into Omega(H) (x) Omega(H), all extended multiplicatively.
TensorElement omega_left_coaction(const CalculusPtr& calc, const StructureMapsPtr& maps,
                                  const Word& w);
TensorElement omega_right_coaction(const CalculusPtr& calc, const StructureMapsPtr& maps,
                                   const Word& w);
TensorElement omega_coproduct(const CalculusPtr& calc, const StructureMapsPtr& maps,
                              const Word& w);

// A sigma-twisted H-module differential calculus on B together with a
// bicovariant calculus on H: the ingredients of the crossed-product calculus
// Omega(B # H) = Omega(B) (x) Omega(H). The measure is extended to forms by
// `form_act`, which must restrict to `data.measure` in degree zero.
struct CrossedCalculus {
    CrossedData data;
    CalculusPtr calcB, calcH;
    std::function<NcPoly(const Word&, const Word&)> form_act;  // (H, Omega(B)) -> Omega(B)

    std::vector<PresentationPtr> pair() const { return {calcB->omega(), calcH->omega()}; }
    NcPoly act_form(const NcPoly& h, const NcPoly& w) const;  // bilinear extension
};

// Unit 1 (x) 1 of the crossed-product calculus.
TensorElement crossed_one(const CrossedCalculus& c);

// (w (x) e) /\ (w' (x) e') = (-1)^{jk} (w /\ (e_{-2} . w') sigma(e_{-1} (x)
// e'_{-1})) (x) (e_0 /\ e'_0) with j = deg e, k = deg w'.
TensorElement wedge_sharp(const CrossedCalculus& c, const TensorElement& x,
                          const TensorElement& y);

// d(w (x) e) = d_B w (x) e + (-1)^{deg w} w (x) d_H e.
TensorElement d_sharp(const CrossedCalculus& c, const TensorElement& x);

// The right Omega(H)-coaction of the crossed-product calculus: w (x) e goes
// to w (x) e_[1] (x) e_[2] through the graded coproduct of Omega(H).
TensorElement coact_sharp(const CrossedCalculus& c, const TensorElement& x);

// Basis of the degree-k forms with coact_sharp(x) = x (x) 1 at the word
// bound, as elements of Omega(B) (x) Omega(H).
std::vector<TensorElement> base_forms_sharp(const CrossedCalculus& c, int degree, int max_len);

// The sigma-twisted module-calculus laws: h.(b d b') = (h_1.b)(h_2.d b'),
// d_B(h.b) = h.d_B b, d_B o sigma = 0, and agreement of form_act with the
// measure in degree zero.
CrossedReport check_twisted_calculus(const CrossedCalculus& c, int h_len, int b_len);

// Unitality, associativity on bounded triples, the graded Leibniz rule,
// d^2 = 0, and differentiability of the coaction.
CrossedReport check_crossed_calculus(const CrossedCalculus& c, int max_len);

// Base forms in degrees 0..max_deg coincide with Omega(B) (x) 1 at the bound.
CrossedReport check_base_forms_sharp(const CrossedCalculus& c, int max_deg, int max_len);

}  // namespace qpb
