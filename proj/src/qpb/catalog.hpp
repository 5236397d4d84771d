#pragma once

#include <optional>

#include "bundle.hpp"
#include "calculus.hpp"
#include "comodule.hpp"
#include "crossed.hpp"
#include "hopf.hpp"

namespace qpb::catalog {

struct HopfAlgebra {
    PresentationPtr P;
    StructureMapsPtr maps;
};

// O(U(1)) = C[t, t^-1], group-like t.
HopfAlgebra ou1();
// C[Z] = C[g, g^-1], group-like g.
HopfAlgebra cz();
// SL_q(2): alpha beta = q beta alpha convention.
HopfAlgebra slq2();
// O_q(SU(2)): alpha beta = q^-1 beta alpha convention; generators carry the
// weights of the O(U(1)) coaction (|alpha|=|gamma|=1, |beta|=|delta|=-1).
HopfAlgebra qsu2();

// A comodule algebra over a catalog Hopf algebra, with a cleaving map when
// the extension is cleft.
struct Bundle {
    PresentationPtr A;
    HopfAlgebra H;
    CoactionPtr coact;
    std::optional<LinearMap> j, j_inv;
};

// Noncommutative 2-torus O_theta(T^2) under O(U(1)): u -> u(x)t, v -> v(x)t^-1,
// cleaving t^k -> u^k, t^-k -> v^k.
Bundle torus_bundle();
// O_q(SU(2)) under O(U(1)) by the weight grading (not cleft).
Bundle qsu2_bundle();
// Any Hopf algebra as a bundle over the scalars: the coaction is Delta,
// j = id, j^-1 = S.
Bundle self_bundle(const HopfAlgebra& h);

// Omega(O_theta(T^2)) on the given torus presentation: du u = u du,
// du v = l v du, dv u = l^-1 u dv, dv v = v dv, dv /\ du = -l^-1 du /\ dv,
// truncated at degree 2.
CalculusPtr torus_calculus(const PresentationPtr& A);

// The q-calculus on a Laurent Hopf algebra C[t, t^-1]: dt t = q^-alpha t dt,
// with Omega^2 = 0 (kept as a degree-2 truncation so wedges can be formed).
CalculusPtr u1_calculus(const HopfAlgebra& h, int alpha);

// The q-calculus on C[Z]: dg g = q g dg (alpha = -1 above).
CalculusPtr group_z_calculus(const HopfAlgebra& h);

// Woronowicz's 3D left-covariant calculus on O_q(SU(2)) with invariant
// coframe e+, e-, e0, truncated at degree 3.
CalculusPtr qsu2_calculus(const PresentationPtr& A);

// A quantum principal bundle together with its total and structure calculi,
// the completeness data, the vertical normalization, and the coframe
// decompositions theta = sum a_i (x) b_i used by the Beggs-Majid comparison.
struct QpbExample {
    Bundle b;
    CalculusPtr calcA, calcH;
    BundleCalculusPtr dc;
    VerticalAlgebra vert;
    std::map<int, TensorElement> coframe;  // Omega(A) form letter -> A (x) A
};

// The group algebra C[Z] as a bundle over the scalars, with the q-calculus
// on both legs and the graded coproduct as the completeness data.
QpbExample group_z_qpb();
// The noncommutative torus over O(U(1)) with the standard calculi.
QpbExample torus_qpb();
// The q-Hopf fibration: O_q(SU(2)) over O(U(1)) with the 3D calculus and the
// structure calculus dt t = q^2 t dt forced by the e0 commutation relations.
QpbExample qsu2_qpb();

// B = C[x] with the trivial O(U(1)) action and trivial cocycle: the smash
// product calculus on C[x] # O(U(1)).
CrossedCalculus smash_demo();
// B = C[w, w^-1] with the lambda-twisted O(U(1)) action induced by the torus
// cleaving (the Doi-Takeuchi measure transported along (uv)^k -> w^k) and
// trivial cocycle.
CrossedCalculus crossed_demo();

struct UnknownExample : std::runtime_error {
    explicit UnknownExample(const std::string& n) : std::runtime_error("unknown example: " + n) {}
};

// A uniformly loadable catalog entry: the presentation the CLI parses
// expressions over (the form calculus when one exists), and the bundle or
// crossed-product data behind the verification suite.
struct Example {
    std::string name;
    PresentationPtr algebra;
    CalculusPtr calc;  // null only if the example carries no calculus
    std::optional<QpbExample> qpb;
    std::optional<CrossedCalculus> crossed;
    int default_len = 4;  // word-length bound the example is validated at
    int default_deg = 2;
};

// name in {group_z, torus, qsu2_hopf, smash_demo, crossed_demo}.
Example load_example(const std::string& name);

}  // namespace qpb::catalog
