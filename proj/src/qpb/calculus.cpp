#include "calculus.hpp"

#include <algorithm>

namespace qpb {

namespace {

int max_word_degree(const NcPoly& p) {
    int d = 0;
    for (const auto& [w, c] : p.terms()) d = std::max(d, word_degree(*p.alphabet(), w));
    return d;
}

// Insert vectors into the echelon, deferring any whose residue momentarily
// lacks a monomial pivot until another row unlocks it.
void insert_with_retry(Echelon& e, std::vector<SparseVec> vecs) {
    while (!vecs.empty()) {
        bool progress = false;
        std::vector<SparseVec> next;
        for (auto& v : vecs) {
            try {
                e.insert(v);
                progress = true;
            } catch (const NonMonomialPivot&) {
                next.push_back(std::move(v));
            }
        }
        if (!progress) throw NonMonomialPivot();
        vecs = std::move(next);
    }
}

}  // namespace

CalculusPtr Calculus::make(PresentationPtr base, PresentationPtr omega,
                           std::map<std::string, NcPoly> d_images, int max_degree) {
    if (max_degree < 1) throw std::logic_error("calculus truncation must be at least 1");
    const Alphabet& bal = *base->alphabet();
    const Alphabet& oal = *omega->alphabet();
    if (oal.size() < bal.size())
        throw std::logic_error("omega alphabet does not extend the base alphabet");
    for (int i = 0; i < oal.size(); ++i) {
        const Generator& g = oal.letter(i);
        if (i < bal.size()) {
            const Generator& b = bal.letter(i);
            if (g.name != b.name || g.invertible != b.invertible || g.weight != b.weight ||
                b.kind != Kind::Algebra || g.kind != Kind::Algebra)
                throw std::logic_error("omega alphabet does not extend the base alphabet");
        } else if (g.kind != Kind::Form) {
            throw std::logic_error("extra omega letters must be form generators");
        }
    }
    auto c = std::shared_ptr<Calculus>(new Calculus());
    c->base_ = std::move(base);
    c->omega_ = std::move(omega);
    c->maxdeg_ = max_degree;
    c->d_.resize(oal.size());
    for (int i = 0; i < oal.size(); ++i) {
        auto it = d_images.find(oal.letter(i).name);
        if (it == d_images.end())
            throw std::logic_error("missing differential image for " + oal.letter(i).name);
        NcPoly img = c->omega_->normal_form(it->second);
        int want = (oal.letter(i).kind == Kind::Form ? 2 : 1);
        if (!img.is_zero() && img.degree() != want)
            throw std::logic_error("differential image of " + oal.letter(i).name +
                                   " has the wrong form degree");
        c->d_[i] = std::move(img);
    }
    return c;
}

NcPoly Calculus::lift(const NcPoly& a) const {
    if (a.alphabet() != base_->alphabet()) throw AlphabetMismatch();
    NcPoly r = omega_->zero();
    for (const auto& [w, c] : a.terms()) r.add(w, c);
    return omega_->normal_form(r);
}

NcPoly Calculus::project0(const NcPoly& x) const {
    if (x.alphabet() != omega_->alphabet()) throw AlphabetMismatch();
    NcPoly r = base_->zero();
    int nbase = base_->alphabet()->size();
    for (const auto& [w, c] : x.terms()) {
        for (int32_t l : w)
            if (l >= nbase) throw std::logic_error("project0 applied to a positive-degree form");
        r.add(w, c);
    }
    return base_->normal_form(r);
}

NcPoly Calculus::d_word(const Word& w) const {
    const Alphabet& al = *omega_->alphabet();
    if (word_degree(al, w) >= maxdeg_) throw DegreeOverflow();
    NcPoly r = omega_->zero();
    int sign = 1;
    for (size_t i = 0; i < w.size(); ++i) {
        const NcPoly& di = d_[w[i]];
        if (!di.is_zero()) {
            Word pre(w.begin(), w.begin() + i), post(w.begin() + i + 1, w.end());
            NcPoly term = NcPoly::term(omega_->alphabet(), pre) * di *
                          NcPoly::term(omega_->alphabet(), post);
            r += sign > 0 ? term : -term;
        }
        if (al.letter(w[i]).kind == Kind::Form) sign = -sign;
    }
    return omega_->normal_form(r);
}

NcPoly Calculus::d(const NcPoly& x) const {
    if (x.alphabet() != omega_->alphabet()) throw AlphabetMismatch();
    NcPoly r = omega_->zero();
    for (const auto& [w, c] : x.terms()) r += c * d_word(w);
    return omega_->normal_form(r);
}

NcPoly Calculus::wedge(const NcPoly& x, const NcPoly& y) const {
    if (x.alphabet() != omega_->alphabet() || y.alphabet() != omega_->alphabet())
        throw AlphabetMismatch();
    if (max_word_degree(x) + max_word_degree(y) > maxdeg_) throw DegreeOverflow();
    return omega_->normal_form(x * y);
}

CalcReport check_fodc(const CalculusPtr& calc, int max_len) {
    CalcReport rep;
    auto base = calc->base();
    auto omega = calc->omega();
    const Alphabet& oal = *omega->alphabet();
    int nbase = base->alphabet()->size();

    // The bimodule structure is well defined exactly when the extended
    // rewriting system is locally confluent.
    for (const Overlap& o : omega->check_local_confluence(max_len).unresolved)
        rep.failures.push_back("bimodule relations not confluent: " + o.description);

    // d respects the relations: differentiate both sides as free words.
    for (const Rule& r : base->rules()) {
        NcPoly lhs = NcPoly::term(omega->alphabet(), r.lhs);
        NcPoly rhs = omega->zero();
        for (const auto& [w, c] : r.rhs.terms()) rhs.add(w, c);
        if (calc->d(lhs) != calc->d(rhs))
            rep.failures.push_back("d ill-defined over relation " + word_str(oal, r.lhs));
    }

    // d squares to zero on every generator (needs room for 2-forms).
    if (calc->max_degree() >= 2)
        for (int i = 0; i < oal.size(); ++i) {
            NcPoly di = calc->d(omega->gen(i));
            if (calc->d(di) != omega->zero())
                rep.failures.push_back("d^2 != 0 on " + oal.letter(i).name);
        }

    // Leibniz rule on pairs of degree-0 basis words.
    auto basis = base->basis_words(max_len);
    for (const Word& a : basis)
        for (const Word& b : basis) {
            if (static_cast<int>(a.size() + b.size()) > max_len) continue;
            NcPoly pa = calc->lift(base->word(a)), pb = calc->lift(base->word(b));
            NcPoly prod = omega->normal_form(pa * pb);
            if (calc->d(prod) != omega->normal_form(calc->d(pa) * pb + pa * calc->d(pb))) {
                Word ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                rep.failures.push_back("Leibniz fails on " + word_str(oal, ab));
            }
        }

    // Surjectivity: every form generator lies in span{a d(b)} at the bound.
    {
        std::map<Word, int> col;
        auto vec = [&](const NcPoly& p) {
            SparseVec v;
            for (const auto& [w, c] : p.terms()) {
                auto [it, fresh] = col.emplace(w, static_cast<int>(col.size()));
                v[it->second] = c;
            }
            return v;
        };
        Echelon span;
        std::vector<SparseVec> vecs;
        for (const Word& a : basis) {
            if (static_cast<int>(a.size()) + 1 > max_len) continue;
            for (int x = 0; x < nbase; ++x) {
                NcPoly img = omega->normal_form(calc->lift(base->word(a)) * calc->d_word({x}));
                if (!img.is_zero()) vecs.push_back(vec(img));
            }
        }
        insert_with_retry(span, std::move(vecs));
        auto exhibited = [&](int f) { return span.contains(vec(omega->gen(f))); };
        bool missing = false;
        for (int f = nbase; f < oal.size() && !missing; ++f)
            if (!exhibited(f)) missing = true;
        if (missing) {
            // widen the span with longer differentiated words, skipping any
            // vector without an exact unit pivot
            for (const Word& a : basis)
                for (const Word& b : basis) {
                    if (b.size() < 2 || static_cast<int>(a.size() + b.size()) > max_len)
                        continue;
                    NcPoly img =
                        omega->normal_form(calc->lift(base->word(a)) * calc->d_word(b));
                    if (img.is_zero()) continue;
                    try {
                        span.insert(vec(img));
                    } catch (const NonMonomialPivot&) {
                    }
                }
        }
        for (int f = nbase; f < oal.size(); ++f)
            if (!exhibited(f))
                rep.failures.push_back("form generator " + oal.letter(f).name +
                                       " not exhibited as a combination of a d(b)");
    }
    return rep;
}

TensorElement universal_d(const NcPoly& a, const PresentationPtr& A) {
    TensorElement r({A, A});
    for (const auto& [w, c] : a.terms()) {
        r.add({{}, w}, c);
        r.add({w, {}}, -c);
    }
    return r.nf();
}

NcPoly universal_quotient(const TensorElement& x, const CalculusPtr& calc) {
    if (x.arity() != 2 || x.components()[0] != calc->base() ||
        x.components()[1] != calc->base())
        throw SignatureMismatch();
    if (!x.contract().is_zero()) throw NotInKernel();
    auto omega = calc->omega();
    NcPoly r = omega->zero();
    for (const auto& [tup, c] : x.terms())
        r += c * (NcPoly::term(omega->alphabet(), tup[0]) * calc->d_word(tup[1]));
    return omega->normal_form(r);
}

NcPoly maurer_cartan(const NcPoly& h, const CalculusPtr& calc, const StructureMapsPtr& maps) {
    if (maps->algebra() != calc->base()) throw SignatureMismatch();
    if (!maps->counit(h).is_zero()) throw NotInAugmentationIdeal();
    auto omega = calc->omega();
    NcPoly r = omega->zero();
    for (const auto& [w, c] : h.terms()) {
        TensorElement dw = maps->coproduct_word(w);
        for (const auto& [tup, tc] : dw.terms())
            r += (c * tc) * (calc->lift(maps->antipode_word(tup[0])) * calc->d_word(tup[1]));
    }
    return omega->normal_form(r);
}

CalcReport maximal_prolongation_check(const CalculusPtr& calc, int max_len) {
    CalcReport rep;
    if (calc->max_degree() < 2) {
        rep.failures.push_back("calculus truncated below degree 2");
        return rep;
    }
    auto base = calc->base();
    auto omega = calc->omega();
    const Alphabet& oal = *omega->alphabet();

    // Enumerate the pairs (a, b) and the images a d(b) in degree 1.
    auto basis = base->basis_words(max_len);
    std::vector<std::pair<Word, Word>> pairs;
    std::vector<NcPoly> image, dd_image;  // a d(b) and d(a) /\ d(b)
    for (const Word& a : basis)
        for (const Word& b : basis) {
            if (b.empty() || static_cast<int>(a.size() + b.size()) > max_len) continue;
            NcPoly pa = NcPoly::term(omega->alphabet(), a);
            pairs.emplace_back(a, b);
            image.push_back(omega->normal_form(pa * calc->d_word(b)));
            dd_image.push_back(calc->wedge(calc->d_word(a), calc->d_word(b)));
        }

    // Kernel of (c_k) -> sum c_k a_k d(b_k).
    std::map<Word, SparseVec> rows_by_word;
    for (size_t k = 0; k < pairs.size(); ++k)
        for (const auto& [w, c] : image[k].terms()) rows_by_word[w][static_cast<int>(k)] = c;
    std::vector<SparseVec> rows;
    rows.reserve(rows_by_word.size());
    for (auto& [w, r] : rows_by_word) rows.push_back(std::move(r));
    auto kern = kernel_basis(rows, static_cast<int>(pairs.size()));

    // Each first-order relation must die under d in degree 2.
    for (const auto& v : kern) {
        NcPoly s = omega->zero();
        for (size_t k = 0; k < pairs.size(); ++k)
            if (!v[k].is_zero()) s += v[k] * dd_image[k];
        if (omega->normal_form(s) != omega->zero()) {
            std::string witness;
            for (size_t k = 0; k < pairs.size(); ++k)
                if (!v[k].is_zero())
                    witness += (witness.empty() ? "" : " + ") + v[k].str() + "*" +
                               word_str(oal, pairs[k].first) + " d(" +
                               word_str(oal, pairs[k].second) + ")";
            rep.failures.push_back("relation not closed under d: " + witness);
        }
    }
    return rep;
}

namespace {

// Coordinates of p in the basis {pi_eps(w) : w a nonempty irreducible word}
// of ker eps (the coefficient of the empty word is determined by eps(p) = 0).
SparseVec augmentation_coords(const NcPoly& p, const std::map<Word, int>& col) {
    SparseVec v;
    for (const auto& [w, c] : p.terms()) {
        if (w.empty()) continue;
        auto it = col.find(w);
        if (it == col.end())
            throw std::logic_error("woronowicz quotient: word bound exceeded; raise max_len");
        v[it->second] = c;
    }
    return v;
}

}  // namespace

WoronowiczResult woronowicz_from_ideal(const PresentationPtr& H, const StructureMapsPtr& maps,
                                       const std::vector<NcPoly>& ideal_gens, int max_len) {
    size_t glen = 0;
    for (const NcPoly& g : ideal_gens) {
        if (!maps->counit(g).is_zero()) throw IdealNotInKernel();
        for (const auto& [w, c] : g.terms()) glen = std::max(glen, w.size());
    }

    // Columns are the nonempty irreducible words up to the product bound,
    // indexed so that longer (deg-lex larger) words are eliminated first and
    // the quotient classes keep the shortest representatives.
    int bound = max_len + static_cast<int>(glen);
    auto all_words = H->basis_words(bound);
    std::vector<Word> col_word;
    for (const Word& w : all_words)
        if (!w.empty()) col_word.push_back(w);
    std::map<Word, int> col;
    int ncols = static_cast<int>(col_word.size());
    for (int i = 0; i < ncols; ++i) col[col_word[i]] = ncols - 1 - i;

    // Span of the right ideal I = ideal_gens * H at the bound.
    Echelon ideal;
    std::vector<NcPoly> spanning;
    std::vector<SparseVec> ideal_vecs;
    for (const NcPoly& g : ideal_gens)
        for (const Word& h : H->basis_words(max_len)) {
            NcPoly p = H->normal_form(g * H->word(h));
            if (p.is_zero()) continue;
            spanning.push_back(p);
            ideal_vecs.push_back(augmentation_coords(p, col));
        }
    insert_with_retry(ideal, std::move(ideal_vecs));

    // Quotient classes: free columns with representatives short enough to be
    // unaffected by the truncation.
    std::vector<int> class_col;      // column id per class
    std::map<int, int> class_of;     // column id -> class index
    for (int i = 0; i < ncols; ++i) {
        int c = ncols - 1 - i;
        if (ideal.pivots().count(c)) continue;
        if (static_cast<int>(col_word[i].size()) > max_len) continue;
        class_of[c] = static_cast<int>(class_col.size());
        class_col.push_back(c);
    }

    // Extended alphabet: the letters of H followed by one form letter per class.
    auto oal = std::make_shared<Alphabet>();
    const Alphabet& hal = *H->alphabet();
    for (int i = 0; i < hal.size(); ++i) {
        const Generator& g = hal.letter(i);
        if (g.invertible && hal.inverse_of(i) < i) continue;  // added with its base letter
        oal->add(g.name, g.invertible, g.weight);
    }
    std::vector<int> form_letter(class_col.size());
    for (size_t k = 0; k < class_col.size(); ++k)
        form_letter[k] = oal->add("lam" + std::to_string(k + 1), false,
                                  word_weight(hal, col_word[ncols - 1 - class_col[k]]),
                                  Kind::Form);
    AlphabetPtr oalc = oal;

    // [p] expressed in the class letters, as a right module element of
    // H (x) H+/I (coefficients act from the left).
    auto classify = [&](const NcPoly& p) {
        SparseVec r = ideal.reduce(augmentation_coords(p, col));
        NcPoly out(oalc);
        for (const auto& [cidx, c] : r) {
            auto it = class_of.find(cidx);
            if (it == class_of.end())
                throw std::logic_error(
                    "woronowicz quotient: class representative beyond the bound; raise max_len");
            out.add({form_letter[it->second]}, c);
        }
        return out;
    };

    // pi_eps of a single word as an H-polynomial.
    auto pi_eps = [&](const Word& w) {
        NcPoly p = H->word(w);
        p.add({}, -maps->counit_word(w));
        return p;
    };

    // Bimodule rules: lam_k * x -> sum x_1 [pi_eps(g_k) x_2].
    std::vector<Rule> rules;
    for (const Rule& r : H->rules()) {
        // cancellation rules are re-added by Presentation::make
        if (r.lhs.size() == 2 && hal.inverse_of(r.lhs[0]) == r.lhs[1] &&
            r.rhs == NcPoly::one(H->alphabet()))
            continue;
        NcPoly p(oalc);
        for (const auto& [w, c] : r.rhs.terms()) p.add(w, c);
        rules.push_back({r.lhs, std::move(p)});
    }
    for (size_t k = 0; k < class_col.size(); ++k) {
        NcPoly rep = pi_eps(col_word[ncols - 1 - class_col[k]]);
        for (int x = 0; x < hal.size(); ++x) {
            NcPoly rhs(oalc);
            TensorElement dx = maps->coproduct_word({x});
            for (const auto& [tup, c] : dx.terms()) {
                NcPoly cls = classify(H->normal_form(rep * H->word(tup[1])));
                rhs += c * (NcPoly::term(oalc, tup[0]) * cls);
            }
            rules.push_back({Word{form_letter[k], x}, std::move(rhs)});
        }
    }
    auto omega = Presentation::make(oalc, std::move(rules));

    // d h = (id (x) pi)(Delta h - h (x) 1) on generators.
    std::map<std::string, NcPoly> d_images;
    for (int x = 0; x < hal.size(); ++x) {
        NcPoly img(oalc);
        TensorElement dx = maps->coproduct_word({x});
        for (const auto& [tup, c] : dx.terms())
            img += c * (NcPoly::term(oalc, tup[0]) * classify(pi_eps(tup[1])));
        d_images[hal.letter(x).name] = omega->normal_form(img);
    }
    for (size_t k = 0; k < class_col.size(); ++k)
        d_images[oalc->letter(form_letter[k]).name] = NcPoly::zero(oalc);

    WoronowiczResult res;
    res.rank = static_cast<int>(class_col.size());
    res.calc = Calculus::make(H, omega, std::move(d_images), 1);

    // ad_R(I) subset I (x) H on the bounded spanning set.
    res.bicovariant = true;
    for (const NcPoly& p : spanning) {
        TensorElement ad = adjoint_coaction(p, *maps);
        std::map<Word, NcPoly> by_second;
        for (const auto& [tup, c] : ad.terms()) {
            auto [it, fresh] = by_second.emplace(tup[1], H->zero());
            it->second.add(tup[0], c);
        }
        for (const auto& [w2, f] : by_second) {
            if (!maps->counit(f).is_zero() || !ideal.contains(augmentation_coords(f, col))) {
                res.bicovariant = false;
                break;
            }
        }
        if (!res.bicovariant) break;
    }
    return res;
}

}  // namespace qpb
