#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poly.hpp"

namespace qpb {

struct NonTerminating : std::runtime_error {
    NonTerminating() : std::runtime_error("normal_form: reduction step budget exceeded") {}
};

struct Rule {
    Word lhs;
    NcPoly rhs;
};

struct Overlap {
    std::string description;  // human-readable witness
    Word superposition;
    NcPoly left_reduction;
    NcPoly right_reduction;
};

struct OverlapReport {
    std::vector<Overlap> unresolved;
    bool confluent() const { return unresolved.empty(); }
};

// A finitely presented algebra: alphabet + oriented rewrite rules. The letter
// declaration order induces the deg-lex word order; every rule must be
// strictly decreasing in that order (termination), which is validated at
// construction, as is presence of the cancellation rules for invertible
// letters (added automatically by `make`).
class Presentation {
public:
    static std::shared_ptr<Presentation> make(AlphabetPtr alph, std::vector<Rule> rules,
                                              long long step_budget = 4'000'000);

    const AlphabetPtr& alphabet() const { return alph_; }
    const std::vector<Rule>& rules() const { return rules_; }

    NcPoly normal_form(const NcPoly& p) const;
    bool word_irreducible(const Word& w) const;

    // Diamond-lemma local-confluence diagnostics: resolve every overlap
    // ambiguity among rule lhs's whose superposition is at most max_len long.
    OverlapReport check_local_confluence(int max_len) const;

    // All irreducible words of length <= max_len, deg-lex sorted.
    std::vector<Word> basis_words(int max_len) const;

    NcPoly zero() const { return NcPoly::zero(alph_); }
    NcPoly one() const { return NcPoly::one(alph_); }
    NcPoly gen(int letter) const { return NcPoly::gen(alph_, letter); }
    NcPoly gen(const std::string& name) const { return gen(alph_->at(name)); }
    NcPoly word(const Word& w) const { return NcPoly::term(alph_, w); }

private:
    AlphabetPtr alph_;
    std::vector<Rule> rules_;
    long long step_budget_;
    size_t max_lhs_len_ = 0;

    Presentation(AlphabetPtr alph, std::vector<Rule> rules, long long budget);

    // First (leftmost position, then declaration order) rule match in w.
    std::optional<std::pair<size_t, size_t>> find_redex(const Word& w) const;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

}  // namespace qpb
