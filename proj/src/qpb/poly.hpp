#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace qpb {

struct AlphabetMismatch : std::logic_error {
    AlphabetMismatch() : std::logic_error("operands live over different alphabets") {}
};

enum class Kind { Algebra, Form };

struct Generator {
    std::string name;
    bool invertible = false;
    int weight = 0;  // right-coaction degree where applicable
    Kind kind = Kind::Algebra;
};

// Letters are small integer ids into the alphabet. The declaration order of
// letters is the letter order inducing the deg-lex word order used by the
// rewriting layer; an invertible generator's inverse letter is inserted
// immediately after it so that e.g. u < u^-1 < v < v^-1.
class Alphabet {
public:
    int add(const std::string& name, bool invertible = false, int weight = 0,
            Kind kind = Kind::Algebra) {
        if (index_.count(name)) throw std::logic_error("duplicate generator name: " + name);
        int id = static_cast<int>(letters_.size());
        letters_.push_back({name, invertible, weight, kind});
        index_[name] = id;
        inverse_.push_back(-1);
        if (invertible) {
            std::string iname = name + "^-1";
            if (index_.count(iname)) throw std::logic_error("duplicate generator name: " + iname);
            letters_.push_back({iname, true, -weight, kind});
            index_[iname] = id + 1;
            inverse_.push_back(id);
            inverse_[id] = id + 1;
        }
        return id;
    }

    int size() const { return static_cast<int>(letters_.size()); }
    const Generator& letter(int id) const { return letters_.at(id); }
    int inverse_of(int id) const { return inverse_.at(id); }
    int find(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }
    int at(const std::string& name) const {
        int id = find(name);
        if (id < 0) throw std::logic_error("unknown generator: " + name);
        return id;
    }

private:
    std::vector<Generator> letters_;
    std::map<std::string, int> index_;
    std::vector<int> inverse_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;
using Word = std::vector<int32_t>;

inline int word_degree(const Alphabet& alph, const Word& w) {
    int d = 0;
    for (int32_t l : w)
        if (alph.letter(l).kind == Kind::Form) ++d;
    return d;
}

inline int word_weight(const Alphabet& alph, const Word& w) {
    int k = 0;
    for (int32_t l : w) k += alph.letter(l).weight;
    return k;
}

// deg-lex: shorter first, then lexicographic by letter id.
inline bool deglex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

// `u*v^-1*du`; the empty word renders as `1`. Runs of equal letters are
// collapsed with `^`, and an inverse letter `x^-1` repeated k times prints
// as `x^-k`.
std::string word_str(const Alphabet& alph, const Word& w);

// Noncommutative polynomial: finite ParamScalar-combination of words.
class NcPoly {
public:
    using Terms = std::map<Word, ParamScalar>;

    NcPoly() = default;
    explicit NcPoly(AlphabetPtr alph) : alph_(std::move(alph)) {}

    static NcPoly zero(AlphabetPtr alph) { return NcPoly(std::move(alph)); }
    static NcPoly term(AlphabetPtr alph, const Word& w, const ParamScalar& c = ParamScalar::one()) {
        NcPoly p(std::move(alph));
        p.add(w, c);
        return p;
    }
    static NcPoly one(AlphabetPtr alph) { return term(std::move(alph), {}); }
    static NcPoly gen(AlphabetPtr alph, int letter) { return term(std::move(alph), {letter}); }

    const AlphabetPtr& alphabet() const { return alph_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend NcPoly operator+(const NcPoly& a, const NcPoly& b) {
        check(a, b);
        NcPoly out = a;
        if (!out.alph_) out.alph_ = b.alph_;
        for (const auto& [w, c] : b.terms_) out.add(w, c);
        return out;
    }
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + (-b); }
    NcPoly operator-() const {
        NcPoly r(alph_);
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
        check(a, b);
        NcPoly r(a.alph_ ? a.alph_ : b.alph_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add(w, ca * cb);
            }
        return r;
    }
    friend NcPoly operator*(const ParamScalar& c, const NcPoly& p) {
        NcPoly r(p.alph_);
        for (const auto& [w, pc] : p.terms_) r.add(w, c * pc);
        return r;
    }
    NcPoly& operator+=(const NcPoly& b) { return *this = *this + b; }
    NcPoly& operator-=(const NcPoly& b) { return *this = *this - b; }
    NcPoly& operator*=(const NcPoly& b) { return *this = *this * b; }

    friend bool operator==(const NcPoly& a, const NcPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }
    friend bool operator<(const NcPoly& a, const NcPoly& b) { return a.terms_ < b.terms_; }

    // Homogeneous degree if all words agree, else -1; zero has degree 0.
    int degree() const {
        int d = -2;
        for (const auto& [w, c] : terms_) {
            int wd = word_degree(*alph_, w);
            if (d == -2)
                d = wd;
            else if (d != wd)
                return -1;
        }
        return d == -2 ? 0 : d;
    }

    std::string str() const;

private:
    AlphabetPtr alph_;
    Terms terms_;

    static void check(const NcPoly& a, const NcPoly& b) {
        if (a.alph_ && b.alph_ && a.alph_ != b.alph_) throw AlphabetMismatch();
    }
};

inline NcPoly poly_mul(const NcPoly& a, const NcPoly& b) { return a * b; }

}  // namespace qpb
