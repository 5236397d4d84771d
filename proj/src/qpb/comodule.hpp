#pragma once

#include "hopf.hpp"
#include "linalg.hpp"

namespace qpb {

class Coaction;
using CoactionPtr = std::shared_ptr<const Coaction>;

// Right H-coaction on a comodule algebra A, stored on generators and extended
// multiplicatively. Coassociativity, counitality and well-definedness over
// the relations of A are verified at construction.
class Coaction {
public:
    static CoactionPtr make(PresentationPtr A, StructureMapsPtr hmaps,
                            std::map<std::string, TensorElement> images);

    const PresentationPtr& total() const { return A_; }
    const PresentationPtr& hopf() const { return hmaps_->algebra(); }
    const StructureMapsPtr& maps() const { return hmaps_; }
    std::vector<PresentationPtr> pair() const { return {A_, hopf()}; }

    TensorElement apply_word(const Word& w) const;
    TensorElement apply(const NcPoly& a) const;
    bool is_coinvariant(const NcPoly& a) const;

private:
    PresentationPtr A_;
    StructureMapsPtr hmaps_;
    std::vector<TensorElement> images_;  // per letter of A
    mutable std::mutex mu_;
    mutable std::map<Word, TensorElement> memo_;

    Coaction() = default;
};

// Basis of {x in span(basis words <= max_len) : Delta_A(x) = x (x) 1},
// computed by exact kernel extraction over the coefficient ring.
std::vector<NcPoly> coinvariants(const CoactionPtr& coact, int max_len);

struct CleftReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Colinearity of j, convolution invertibility, the coaction on j^-1, the
// projection a -> a_0 j^-1(a_1) landing in the coinvariants, and unitality.
CleftReport check_cleaving(const LinearMap& j, const LinearMap& j_inv, const CoactionPtr& coact,
                           int max_len);

// chi': A (x) A -> A (x) H, a (x) a' -> a a'_0 (x) a'_1.
TensorElement galois_chi(const TensorElement& x, const CoactionPtr& coact);

// chi^-1 for a cleft extension: a (x) h -> a j^-1(h_1) (x) j(h_2), as an
// A (x) A representative of the balanced tensor.
TensorElement galois_chi_inverse_cleft(const TensorElement& y, const LinearMap& j,
                                       const LinearMap& j_inv, const CoactionPtr& coact);

// kappa(h) = chi^-1(1 (x) h).
TensorElement translation_map(const NcPoly& h, const LinearMap& j, const LinearMap& j_inv,
                              const CoactionPtr& coact);

// The five properties of the translation map, with balanced-tensor equalities
// decided by mapping both sides through chi.
CleftReport check_translation_map(const LinearMap& j, const LinearMap& j_inv,
                                  const CoactionPtr& coact, int max_len);

// Measure + 2-cocycle data for a crossed product B # H. The maps are given
// on (word, word) pairs and extended linearly; values live in B.
struct CrossedData {
    PresentationPtr B;
    StructureMapsPtr hmaps;
    std::function<NcPoly(const Word&, const Word&)> measure;  // (H-word, B-word) -> B
    std::function<NcPoly(const Word&, const Word&)> sigma;    // (H-word, H-word) -> B
    std::function<NcPoly(const Word&, const Word&)> sigma_inv;

    NcPoly act(const NcPoly& h, const NcPoly& b) const;
    NcPoly sigma_poly(const NcPoly& h, const NcPoly& g) const;
    NcPoly sigma_inv_poly(const NcPoly& h, const NcPoly& g) const;
};

// (b # h)(b' # h') = b (h_1 . b') sigma(h_2 (x) h'_1) # h_3 h'_2 on
// TensorElements over {B, H}.
TensorElement crossed_mul(const CrossedData& d, const TensorElement& x, const TensorElement& y);

struct CrossedReport {
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Measure laws, sigma unitality and convolution invertibility, the twisted
// module law, the 2-cocycle law, and associativity of the crossed product.
CrossedReport check_crossed_data(const CrossedData& d, int h_len, int b_len);

// Thm. Doi-Takeuchi: the measure h.b = j(h_1) b j^-1(h_2) and cocycle
// sigma(h,h') = j(h_1) j(h'_1) j^-1(h_2 h'_2) induced by a cleaving map.
// Values are coinvariant elements of A (= B inside A).
CrossedData doi_takeuchi_from_cleft(const LinearMap& j, const LinearMap& j_inv,
                                    const CoactionPtr& coact);

// theta(a) = a_0 j^-1(a_1) (x) a_2 is an algebra map and right H-comodule
// map from A to the induced crossed product.
bool check_doi_takeuchi_iso(const CrossedData& d, const LinearMap& j_inv,
                            const CoactionPtr& coact, int max_len);

}  // namespace qpb
