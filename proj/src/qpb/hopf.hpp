#pragma once

#include <mutex>

#include "tensor.hpp"

namespace qpb {

struct SignatureMismatch : std::logic_error {
    SignatureMismatch() : std::logic_error("linear maps have incompatible source/target") {}
};

class StructureMaps;
using StructureMapsPtr = std::shared_ptr<const StructureMaps>;

// Coproduct / counit / antipode of a Hopf algebra, stored on generators and
// extended on demand: the coproduct and counit multiplicatively, the antipode
// as an anti-algebra map (reverse the word, multiply the letter images).
// Word-level evaluations are memoized; the caches are mutex-guarded so the
// maps can be shared across verification threads.
class StructureMaps {
public:
    static StructureMapsPtr make(PresentationPtr H,
                                 std::map<std::string, TensorElement> coproducts,
                                 std::map<std::string, ParamScalar> counits,
                                 std::map<std::string, NcPoly> antipodes);

    const PresentationPtr& algebra() const { return H_; }
    std::vector<PresentationPtr> pair() const { return {H_, H_}; }

    TensorElement coproduct_word(const Word& w) const;
    TensorElement coproduct(const NcPoly& h) const;
    ParamScalar counit_word(const Word& w) const;
    ParamScalar counit(const NcPoly& h) const;
    NcPoly antipode_word(const Word& w) const;
    NcPoly antipode(const NcPoly& h) const;

    // Iterated coproduct (Delta (x) id) o Delta, arity 3.
    TensorElement coproduct3(const Word& w) const;

private:
    PresentationPtr H_;
    std::vector<TensorElement> co_;    // per letter
    std::vector<ParamScalar> eps_;     // per letter
    std::vector<NcPoly> s_;            // per letter
    mutable std::mutex mu_;
    mutable std::map<Word, TensorElement> co_memo_;
    mutable std::map<Word, NcPoly> s_memo_;

    StructureMaps() = default;
};

// ad_R(h) = h2 (x) S(h1) h3.
TensorElement adjoint_coaction(const NcPoly& h, const StructureMaps& maps);

// Linear map between presented algebras, evaluated on words. The factory
// helpers build the standard extension modes from generator images; a raw
// word table gives a plain-linear map.
struct LinearMap {
    PresentationPtr source;
    PresentationPtr target;
    std::function<NcPoly(const Word&)> on_word;

    NcPoly operator()(const NcPoly& p) const;

    static LinearMap algebra_map(PresentationPtr src, PresentationPtr tgt,
                                 std::map<int, NcPoly> gen_images);
    static LinearMap anti_algebra_map(PresentationPtr src, PresentationPtr tgt,
                                      std::map<int, NcPoly> gen_images);
    static LinearMap from_table(PresentationPtr src, PresentationPtr tgt,
                                std::map<Word, NcPoly> images);
    // eta o epsilon: the unit of the convolution algebra Hom(H, target).
    static LinearMap unit_counit(StructureMapsPtr maps, PresentationPtr tgt);
};

// (f * g)(x) = mu o (f (x) g) o Delta(x), evaluated lazily.
LinearMap convolution(LinearMap f, LinearMap g, StructureMapsPtr maps);

// True iff f*g = eta o epsilon = g*f on every basis word of length <= max_len.
bool convolution_inverse_check(const LinearMap& f, const LinearMap& g, const StructureMaps& maps,
                               int max_len);

struct AxiomReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Coassociativity, counitality, the antipode axiom, well-definedness of all
// three maps over the presentation relations, and the derived antipode
// properties (anti-multiplicativity, S(1)=1, (S(x)S)oDelta = flip o Delta o S,
// eps o S = eps), each on basis words of length <= max_len.
AxiomReport check_hopf_axioms(const PresentationPtr& H, const StructureMapsPtr& maps, int max_len);

}  // namespace qpb
