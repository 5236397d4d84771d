#pragma once

#include <functional>

#include "presentation.hpp"

namespace qpb {

struct ArityMismatch : std::logic_error {
    ArityMismatch() : std::logic_error("tensor operands have incompatible arity/components") {}
};

// Linear combination of tuples of words across tagged component spaces
// (A(x)A, A(x)H, Omega(x)Omega, ...). Each component is tagged with the
// presentation it normal-forms under; products apply the graded (Koszul)
// sign and reduce every leg.
class TensorElement {
public:
    using Tuple = std::vector<Word>;
    using Terms = std::map<Tuple, ParamScalar>;

    TensorElement() = default;
    explicit TensorElement(std::vector<PresentationPtr> comps) : comps_(std::move(comps)) {}

    static TensorElement zero(std::vector<PresentationPtr> comps) {
        return TensorElement(std::move(comps));
    }
    static TensorElement one(std::vector<PresentationPtr> comps) {
        TensorElement t(std::move(comps));
        t.add(Tuple(t.comps_.size()), ParamScalar::one());
        return t;
    }
    // Outer product of single-component polynomials.
    static TensorElement outer(std::vector<PresentationPtr> comps,
                               const std::vector<NcPoly>& legs) {
        TensorElement t(std::move(comps));
        if (legs.size() != t.comps_.size()) throw ArityMismatch();
        Terms acc{{Tuple{}, ParamScalar::one()}};
        for (const NcPoly& p : legs) {
            Terms next;
            for (const auto& [tup, c] : acc)
                for (const auto& [w, pc] : p.terms()) {
                    Tuple nt = tup;
                    nt.push_back(w);
                    auto it = next.find(nt);
                    if (it == next.end())
                        next[nt] = c * pc;
                    else {
                        it->second += c * pc;
                        if (it->second.is_zero()) next.erase(it);
                    }
                }
            acc = std::move(next);
        }
        t.terms_ = std::move(acc);
        return t;
    }

    size_t arity() const { return comps_.size(); }
    const std::vector<PresentationPtr>& components() const { return comps_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Tuple& tup, const ParamScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(tup);
        if (it == terms_.end()) {
            terms_[tup] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b) {
        check(a, b);
        TensorElement out(a.comps_.empty() ? b.comps_ : a.comps_);
        out.terms_ = a.terms_;
        for (const auto& [t, c] : b.terms_) out.add(t, c);
        return out;
    }
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b) {
        return a + (-b);
    }
    TensorElement operator-() const {
        TensorElement r(comps_);
        for (const auto& [t, c] : terms_) r.terms_[t] = -c;
        return r;
    }
    friend TensorElement operator*(const ParamScalar& c, const TensorElement& t) {
        TensorElement r(t.comps_);
        for (const auto& [tt, tc] : t.terms_) r.add(tt, c * tc);
        return r;
    }
    TensorElement& operator+=(const TensorElement& b) { return *this = *this + b; }
    TensorElement& operator-=(const TensorElement& b) { return *this = *this - b; }

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElement& a, const TensorElement& b) { return !(a == b); }

    // Componentwise product with the Koszul sign of the graded tensor
    // product, every leg normal-formed afterwards.
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b) {
        check(a, b);
        if (!a.comps_.empty() && !b.comps_.empty() && a.comps_.size() != b.comps_.size())
            throw ArityMismatch();
        TensorElement r(a.comps_.empty() ? b.comps_ : a.comps_);
        for (const auto& [ta, ca] : a.terms_)
            for (const auto& [tb, cb] : b.terms_) {
                int sign_exp = 0;
                Tuple nt(r.comps_.size());
                for (size_t i = 0; i < r.comps_.size(); ++i) {
                    const Alphabet& al = *r.comps_[i]->alphabet();
                    for (size_t j = i + 1; j < r.comps_.size(); ++j)
                        sign_exp += word_degree(*r.comps_[j]->alphabet(), ta[j]) *
                                    word_degree(al, tb[i]);
                    nt[i] = ta[i];
                    nt[i].insert(nt[i].end(), tb[i].begin(), tb[i].end());
                }
                ParamScalar c = ca * cb;
                if (sign_exp % 2) c = -c;
                r.add(nt, c);
            }
        return r.nf();
    }
    TensorElement& operator*=(const TensorElement& b) { return *this = *this * b; }

    // Normal-form every leg under its component presentation.
    TensorElement nf() const {
        TensorElement r(comps_);
        for (const auto& [tup, c] : terms_) {
            Terms acc{{Tuple{}, c}};
            for (size_t i = 0; i < comps_.size(); ++i) {
                NcPoly reduced = comps_[i]->normal_form(NcPoly::term(comps_[i]->alphabet(), tup[i]));
                Terms next;
                for (const auto& [pt, pc] : acc)
                    for (const auto& [w, wc] : reduced.terms()) {
                        Tuple nt = pt;
                        nt.push_back(w);
                        auto it = next.find(nt);
                        if (it == next.end())
                            next[nt] = pc * wc;
                        else {
                            it->second += pc * wc;
                            if (it->second.is_zero()) next.erase(it);
                        }
                    }
                acc = std::move(next);
            }
            for (const auto& [t, tc] : acc) r.add(t, tc);
        }
        return r;
    }

    // Swap components i and i+1, with the Koszul sign when both are graded.
    TensorElement flip(size_t i) const {
        if (comps_.size() < 2 || i + 1 >= comps_.size()) throw ArityMismatch();
        std::vector<PresentationPtr> nc = comps_;
        std::swap(nc[i], nc[i + 1]);
        TensorElement r(std::move(nc));
        for (const auto& [tup, c] : terms_) {
            Tuple nt = tup;
            std::swap(nt[i], nt[i + 1]);
            int s = word_degree(*comps_[i]->alphabet(), tup[i]) *
                    word_degree(*comps_[i + 1]->alphabet(), tup[i + 1]);
            r.add(nt, s % 2 ? -c : c);
        }
        return r;
    }

    // Apply a linear map to one leg; the map may change that leg's space.
    TensorElement map_leg(size_t i, PresentationPtr target,
                          const std::function<NcPoly(const Word&)>& f) const {
        std::vector<PresentationPtr> nc = comps_;
        nc[i] = std::move(target);
        TensorElement r(nc);
        for (const auto& [tup, c] : terms_) {
            NcPoly img = nc[i]->normal_form(f(tup[i]));
            for (const auto& [w, wc] : img.terms()) {
                Tuple nt = tup;
                nt[i] = w;
                r.add(nt, c * wc);
            }
        }
        return r;
    }

    // Replace leg i by an arity-k tensor image (Sweedler splitting).
    TensorElement expand_leg(size_t i, const std::vector<PresentationPtr>& targets,
                             const std::function<TensorElement(const Word&)>& f) const {
        std::vector<PresentationPtr> nc;
        for (size_t k = 0; k < comps_.size(); ++k) {
            if (k == i)
                nc.insert(nc.end(), targets.begin(), targets.end());
            else
                nc.push_back(comps_[k]);
        }
        TensorElement r(nc);
        for (const auto& [tup, c] : terms_) {
            TensorElement img = f(tup[i]);
            for (const auto& [itup, ic] : img.terms()) {
                Tuple nt;
                for (size_t k = 0; k < comps_.size(); ++k) {
                    if (k == i)
                        nt.insert(nt.end(), itup.begin(), itup.end());
                    else
                        nt.push_back(tup[k]);
                }
                r.add(nt, c * ic);
            }
        }
        return r;
    }

    // Multiply the legs together into a single polynomial (no Koszul sign:
    // used for convolution-style contractions on ungraded legs).
    NcPoly contract() const {
        AlphabetPtr al = comps_.front()->alphabet();
        NcPoly out(al);
        for (const auto& [tup, c] : terms_) {
            Word w;
            for (const Word& leg : tup) w.insert(w.end(), leg.begin(), leg.end());
            out.add(w, c);
        }
        return comps_.front()->normal_form(out);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [tup, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string body = "(";
            for (size_t i = 0; i < tup.size(); ++i) {
                if (i) body += " | ";
                body += word_str(*comps_[i]->alphabet(), tup[i]);
            }
            body += ")";
            if (c.is_one())
                out += body;
            else
                out += (c.is_monomial() ? c.str() : "(" + c.str() + ")") + "*" + body;
        }
        return out;
    }

private:
    std::vector<PresentationPtr> comps_;
    Terms terms_;

    static void check(const TensorElement& a, const TensorElement& b) {
        if (!a.comps_.empty() && !b.comps_.empty() && a.comps_.size() != b.comps_.size())
            throw ArityMismatch();
    }
};

inline TensorElement tensor_mul(const TensorElement& a, const TensorElement& b) { return a * b; }

}  // namespace qpb
