#include "bundle.hpp"

#include <set>

namespace qpb {

namespace {

TensorElement retag(const TensorElement& t, std::vector<PresentationPtr> comps) {
    TensorElement r(std::move(comps));
    for (const auto& [tup, c] : t.terms()) r.add(tup, c);
    return r.nf();
}

void add_coord(SparseVec& v, int col, const ParamScalar& c) {
    auto it = v.find(col);
    if (it == v.end()) {
        if (!c.is_zero()) v[col] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

// Echelon insertion that defers rows whose residue momentarily lacks a unit
// pivot; rows that stay locked are dropped (the span only gets smaller).
void insert_span(Echelon& ech, std::vector<SparseVec> pending) {
    bool progress = true;
    while (progress && !pending.empty()) {
        progress = false;
        std::vector<SparseVec> next;
        for (auto& v : pending) {
            try {
                ech.insert(v);
                progress = true;
            } catch (const NonMonomialPivot&) {
                next.push_back(std::move(v));
            }
        }
        pending = std::move(next);
    }
}

SparseVec dense_to_sparse(const std::vector<ParamScalar>& v) {
    SparseVec s;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) s[static_cast<int>(i)] = v[i];
    return s;
}

NcPoly combo_poly(const AlphabetPtr& al, const std::vector<Word>& words,
                  const std::vector<ParamScalar>& coeffs) {
    NcPoly p(al);
    for (size_t i = 0; i < words.size(); ++i) p.add(words[i], coeffs[i]);
    return p;
}

}  // namespace

BundleCalculusPtr BundleCalculus::make(CoactionPtr coact, CalculusPtr calcA, CalculusPtr calcH,
                                       std::map<std::string, TensorElement> form_images) {
    auto dc = std::shared_ptr<BundleCalculus>(new BundleCalculus());
    dc->coact_ = std::move(coact);
    dc->cA_ = std::move(calcA);
    dc->cH_ = std::move(calcH);
    if (dc->coact_->total() != dc->cA_->base())
        throw std::logic_error("bundle calculus: coaction and calculus base differ");
    const Alphabet& oal = *dc->cA_->omega()->alphabet();
    const Alphabet& hal = *dc->cH_->omega()->alphabet();
    std::vector<PresentationPtr> pr = {dc->cA_->omega(), dc->cH_->omega()};
    int nbase = dc->cA_->base()->alphabet()->size();
    dc->images_.resize(oal.size(), TensorElement(pr));
    for (int i = 0; i < oal.size(); ++i) {
        const Generator& g = oal.letter(i);
        if (i < nbase) {
            dc->images_[i] = retag(dc->coact_->apply_word(Word{i}), pr);
        } else {
            auto it = form_images.find(g.name);
            if (it == form_images.end())
                throw std::logic_error("bundle calculus: no image for form generator " + g.name);
            TensorElement img = it->second;
            if (img.arity() != 2) throw ArityMismatch();
            for (const auto& [tup, c] : img.terms()) {
                int deg = word_degree(oal, tup[0]) + word_degree(hal, tup[1]);
                if (deg != 1)
                    throw std::logic_error("bundle calculus: image of " + g.name +
                                           " is not homogeneous of degree 1");
            }
            dc->images_[i] = retag(img, pr);
            form_images.erase(it);
        }
    }
    if (!form_images.empty())
        throw std::logic_error("bundle calculus: unknown form generator " +
                               form_images.begin()->first);
    return dc;
}

TensorElement BundleCalculus::apply_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(w);
        if (it != memo_.end()) return it->second;
    }
    TensorElement out;
    if (w.empty()) {
        out = TensorElement::one(pair());
    } else {
        Word head(w.begin(), w.end() - 1);
        out = apply_word(head) * images_[w.back()];
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_[w] = out;
    return out;
}

TensorElement BundleCalculus::apply(const NcPoly& x) const {
    TensorElement out(pair());
    for (const auto& [w, c] : x.terms()) out += c * apply_word(w);
    return out;
}

TensorElement BundleCalculus::ver(const NcPoly& x, int h_deg) const {
    TensorElement t = apply(x);
    const Alphabet& hal = *cH_->omega()->alphabet();
    TensorElement out(pair());
    for (const auto& [tup, c] : t.terms())
        if (word_degree(hal, tup[1]) == h_deg) out.add(tup, c);
    return out;
}

bool BundleCalculus::is_horizontal(const NcPoly& x) const {
    TensorElement t = apply(x);
    const Alphabet& hal = *cH_->omega()->alphabet();
    for (const auto& [tup, c] : t.terms())
        if (word_degree(hal, tup[1]) > 0) return false;
    return true;
}

namespace {

// d (x) id + (-1)^deg id (x) d on Omega(A) (x) Omega(H).
TensorElement d_tensor(const TensorElement& t, const CalculusPtr& cA, const CalculusPtr& cH) {
    std::vector<PresentationPtr> pr = {cA->omega(), cH->omega()};
    const Alphabet& oal = *cA->omega()->alphabet();
    TensorElement out(pr);
    for (const auto& [tup, c] : t.terms()) {
        NcPoly da = cA->d_word(tup[0]);
        for (const auto& [w, wc] : da.terms()) out.add({w, tup[1]}, c * wc);
        NcPoly dh = cH->d_word(tup[1]);
        ParamScalar s = word_degree(oal, tup[0]) % 2 ? -c : c;
        for (const auto& [w, wc] : dh.terms()) out.add({tup[0], w}, s * wc);
    }
    return out.nf();
}

}  // namespace

BundleReport check_completeness(const BundleCalculusPtr& dc, int max_len) {
    BundleReport rep;
    const PresentationPtr& omA = dc->calcA()->omega();
    const Alphabet& oal = *omA->alphabet();
    const StructureMapsPtr& hmaps = dc->coaction()->maps();

    // well-definedness along every relation of Omega(A)
    for (const Rule& r : omA->rules()) {
        TensorElement lhs = dc->apply_word(r.lhs);
        TensorElement rhs = dc->apply(r.rhs);
        if (lhs != rhs)
            rep.failures.push_back("coaction extension breaks on relation " +
                                   word_str(oal, r.lhs) + " -> " + r.rhs.str());
    }

    std::vector<Word> basis = omA->basis_words(max_len);

    // counitality: (id (x) eps) of the degree-0 component is the identity
    for (const Word& w : basis) {
        TensorElement t = dc->apply_word(w);
        const Alphabet& hal = *dc->calcH()->omega()->alphabet();
        NcPoly back(omA->alphabet());
        for (const auto& [tup, c] : t.terms()) {
            if (word_degree(hal, tup[1]) != 0) continue;
            back.add(tup[0], c * hmaps->counit_word(tup[1]));
        }
        if (back != omA->word(w))
            rep.failures.push_back("counitality fails on " + word_str(oal, w));
    }

    // multiplicativity across reductions
    for (const Word& a : basis) {
        if (a.empty()) continue;
        for (const Word& b : basis) {
            if (b.empty() || a.size() + b.size() > static_cast<size_t>(max_len)) continue;
            NcPoly ab = omA->normal_form(omA->word(a) * omA->word(b));
            if (dc->apply(ab) != dc->apply_word(a) * dc->apply_word(b)) {
                rep.failures.push_back("multiplicativity fails on " + word_str(oal, a) + " * " +
                                       word_str(oal, b));
            }
        }
    }

    // the differentiability square Delta^w o d = d_tensor o Delta^w
    for (const Word& w : basis) {
        if (word_degree(oal, w) >= dc->calcA()->max_degree()) continue;
        TensorElement lhs = dc->apply(dc->calcA()->d_word(w));
        TensorElement rhs = d_tensor(dc->apply_word(w), dc->calcA(), dc->calcH());
        if (lhs != rhs)
            rep.failures.push_back("differentiability square fails on " + word_str(oal, w));
    }
    return rep;
}

VerticalAlgebra make_vertical(const CalculusPtr& calcH) {
    const Alphabet& hal = *calcH->omega()->alphabet();
    int nbase = calcH->base()->alphabet()->size();
    if (nbase != 2 || !hal.letter(0).invertible || hal.inverse_of(0) != 1 ||
        hal.size() != nbase + 1 || hal.letter(nbase).kind != Kind::Form)
        throw std::logic_error("make_vertical: structure calculus is not of U(1) type");
    int dt = nbase;
    // commutation constant from dt t = c t dt
    NcPoly p = calcH->omega()->normal_form(calcH->omega()->word(Word{dt, 0}));
    if (p.terms().size() != 1 || p.terms().begin()->first != Word{0, dt})
        throw std::logic_error("make_vertical: unexpected bimodule rule on dt");
    ParamScalar c = p.terms().begin()->second;

    auto val = std::make_shared<Alphabet>();
    val->add(hal.letter(0).name, true, hal.letter(0).weight);
    int vp = val->add("varpi", false, 0, Kind::Form);
    AlphabetPtr valc = val;
    std::vector<Rule> rules;
    rules.push_back({Word{vp, 0}, NcPoly::term(valc, Word{0, vp}, c)});
    rules.push_back({Word{vp, 1}, NcPoly::term(valc, Word{1, vp}, c.inverse())});
    rules.push_back({Word{vp, vp}, NcPoly::zero(valc)});
    VerticalAlgebra vert;
    vert.V = Presentation::make(valc, std::move(rules));
    vert.calcH = calcH;
    vert.varpi = vp;
    return vert;
}

NcPoly VerticalAlgebra::substitute(const NcPoly& eta) const {
    const Alphabet& hal = *calcH->omega()->alphabet();
    int dt = calcH->base()->alphabet()->size();
    NcPoly out(V->alphabet());
    for (const auto& [w, c] : eta.terms()) {
        NcPoly acc = NcPoly::term(V->alphabet(), {}, c);
        for (int32_t l : w) {
            if (l == dt)
                acc = acc * NcPoly::term(V->alphabet(), Word{0, varpi});
            else if (l < dt)
                acc = acc * NcPoly::gen(V->alphabet(), l);
            else
                throw std::logic_error("substitute: unknown letter " + hal.letter(l).name);
        }
        out += acc;
    }
    return V->normal_form(out);
}

NcPoly VerticalAlgebra::invariant(const NcPoly& eta) const {
    NcPoly nf = V->normal_form(eta);
    const Alphabet& al = *V->alphabet();
    NcPoly out(V->alphabet());
    for (const auto& [w, c] : nf.terms()) {
        Word forms;
        for (int32_t l : w)
            if (al.letter(l).kind == Kind::Form) forms.push_back(l);
        out.add(forms, c);
    }
    return out;
}

TensorElement pi_ver(const BundleCalculusPtr& dc, const VerticalAlgebra& vert, const NcPoly& x) {
    const Alphabet& oal = *dc->calcA()->omega()->alphabet();
    std::vector<PresentationPtr> pr = {dc->coaction()->total(), vert.V};
    TensorElement t = dc->apply(x);
    TensorElement out(pr);
    for (const auto& [tup, c] : t.terms()) {
        if (word_degree(oal, tup[0]) != 0) continue;
        NcPoly leg = vert.invariant(
            vert.substitute(NcPoly::term(dc->calcH()->omega()->alphabet(), tup[1])));
        for (const auto& [w, wc] : leg.terms()) out.add({tup[0], w}, c * wc);
    }
    return out;
}

std::vector<NcPoly> base_forms(const BundleCalculusPtr& dc, int degree, int max_len) {
    const PresentationPtr& omA = dc->calcA()->omega();
    const Alphabet& oal = *omA->alphabet();
    std::vector<Word> cand;
    for (const Word& w : omA->basis_words(max_len))
        if (word_degree(oal, w) == degree) cand.push_back(w);
    std::map<TensorElement::Tuple, SparseVec> rows;
    for (size_t j = 0; j < cand.size(); ++j) {
        TensorElement t = dc->apply_word(cand[j]);
        t.add({cand[j], {}}, -ParamScalar::one());
        for (const auto& [tup, c] : t.terms()) add_coord(rows[tup], static_cast<int>(j), c);
    }
    std::vector<SparseVec> eqs;
    for (auto& [tup, v] : rows)
        if (!v.empty()) eqs.push_back(std::move(v));
    std::vector<NcPoly> out;
    for (const auto& v : kernel_basis(eqs, static_cast<int>(cand.size())))
        out.push_back(combo_poly(omA->alphabet(), cand, v));
    return out;
}

BundleReport check_exact_sequence(const BundleCalculusPtr& dc, const VerticalAlgebra& vert,
                                  int max_len) {
    BundleReport rep;
    const PresentationPtr& omA = dc->calcA()->omega();
    const Alphabet& oal = *omA->alphabet();
    const Alphabet& hal = *dc->calcH()->omega()->alphabet();

    auto degree_words = [&](int deg) {
        std::vector<Word> cand;
        for (const Word& w : omA->basis_words(max_len))
            if (word_degree(oal, w) == deg) cand.push_back(w);
        return cand;
    };
    auto kernel_of = [&](const std::vector<Word>& cand, auto&& coords) {
        std::map<TensorElement::Tuple, SparseVec> rows;
        for (size_t j = 0; j < cand.size(); ++j) coords(cand[j], static_cast<int>(j), rows);
        std::vector<SparseVec> eqs;
        for (auto& [tup, v] : rows)
            if (!v.empty()) eqs.push_back(std::move(v));
        return kernel_basis(eqs, static_cast<int>(cand.size()));
    };
    auto hor_coords = [&](const Word& w, int j, std::map<TensorElement::Tuple, SparseVec>& rows) {
        TensorElement t = dc->apply_word(w);
        for (const auto& [tup, c] : t.terms())
            if (word_degree(hal, tup[1]) > 0) add_coord(rows[tup], j, c);
    };
    auto pi_coords = [&](const Word& w, int j, std::map<TensorElement::Tuple, SparseVec>& rows) {
        TensorElement t = pi_ver(dc, vert, NcPoly::term(omA->alphabet(), w));
        for (const auto& [tup, c] : t.terms()) add_coord(rows[tup], j, c);
    };

    // degree 1: ker pi_ver = horizontal forms
    std::vector<Word> cand = degree_words(1);
    auto hker = kernel_of(cand, hor_coords);
    auto pker = kernel_of(cand, pi_coords);
    Echelon h_ech, p_ech;
    for (const auto& v : hker) h_ech.insert(dense_to_sparse(v));
    for (const auto& v : pker) p_ech.insert(dense_to_sparse(v));
    for (const auto& v : pker)
        if (!h_ech.contains(dense_to_sparse(v)))
            rep.failures.push_back("ker pi_ver exceeds hor^1: " +
                                   combo_poly(omA->alphabet(), cand, v).str());
    for (const auto& v : hker)
        if (!p_ech.contains(dense_to_sparse(v)))
            rep.failures.push_back("hor^1 exceeds ker pi_ver: " +
                                   combo_poly(omA->alphabet(), cand, v).str());

    // degree 1 surjectivity onto A (x) varpi at the bound
    const PresentationPtr& A = dc->coaction()->total();
    std::map<Word, int> col;
    auto col_of = [&](const Word& w) {
        auto it = col.find(w);
        if (it != col.end()) return it->second;
        int id = static_cast<int>(col.size());
        col[w] = id;
        return id;
    };
    std::vector<SparseVec> images;
    for (const Word& w : cand) {
        TensorElement t = pi_ver(dc, vert, NcPoly::term(omA->alphabet(), w));
        SparseVec v;
        for (const auto& [tup, c] : t.terms()) {
            if (tup[1] != Word{vert.varpi})
                throw std::logic_error("pi_ver of a 1-form is not A (x) varpi");
            add_coord(v, col_of(tup[0]), c);
        }
        if (!v.empty()) images.push_back(std::move(v));
    }
    Echelon surj;
    insert_span(surj, std::move(images));
    for (const Word& b : A->basis_words(max_len - 2)) {
        SparseVec v{{col_of(b), ParamScalar::one()}};
        if (!surj.contains(v))
            rep.failures.push_back("pi_ver misses " + word_str(*A->alphabet(), b) + " (x) varpi");
    }

    // degree 2: horizontal forms still map to zero
    std::vector<Word> cand2 = degree_words(2);
    for (const auto& v : kernel_of(cand2, hor_coords)) {
        NcPoly h = combo_poly(omA->alphabet(), cand2, v);
        if (!pi_ver(dc, vert, h).is_zero())
            rep.failures.push_back("hor^2 escapes ker pi_ver: " + h.str());
    }
    return rep;
}

NcPoly hook(const NcPoly& theta, const Word& a, const CalculusPtr& calcH,
            const StructureMapsPtr& maps) {
    const PresentationPtr& omH = calcH->omega();
    TensorElement ca = maps->coproduct_word(a);
    NcPoly out(omH->alphabet());
    for (const auto& [tup, c] : ca.terms()) {
        NcPoly s = calcH->lift(maps->antipode_word(tup[0]));
        NcPoly r = calcH->lift(NcPoly::term(maps->algebra()->alphabet(), tup[1]));
        out += c * omH->normal_form(s * theta * r);
    }
    return omH->normal_form(out);
}

TensorElement wedge_ver(const TensorElement& x, const TensorElement& y, const CoactionPtr& coact,
                        const CalculusPtr& calcH) {
    std::vector<PresentationPtr> pr = {coact->total(), calcH->omega()};
    TensorElement out(pr);
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms()) {
            NcPoly theta = NcPoly::term(calcH->omega()->alphabet(), tx[1]);
            TensorElement cb = coact->apply_word(ty[0]);
            for (const auto& [tb, c0] : cb.terms()) {
                NcPoly hooked = hook(theta, tb[1], calcH, coact->maps());
                NcPoly leg = calcH->wedge(hooked, NcPoly::term(calcH->omega()->alphabet(), ty[1]));
                NcPoly aleg = coact->total()->normal_form(
                    NcPoly::term(coact->total()->alphabet(), tx[0]) *
                    NcPoly::term(coact->total()->alphabet(), tb[0]));
                out += (cx * cy * c0) * TensorElement::outer(pr, {aleg, leg});
            }
        }
    return out;
}

TensorElement d_ver(const TensorElement& x, const CoactionPtr& coact, const CalculusPtr& calcH) {
    std::vector<PresentationPtr> pr = {coact->total(), calcH->omega()};
    const StructureMapsPtr& maps = coact->maps();
    TensorElement out(pr);
    for (const auto& [tup, c] : x.terms()) {
        NcPoly theta = NcPoly::term(calcH->omega()->alphabet(), tup[1]);
        NcPoly aleg = NcPoly::term(coact->total()->alphabet(), tup[0]);
        out += c * TensorElement::outer(pr, {aleg, calcH->d_word(tup[1])});
        TensorElement ca = coact->apply_word(tup[0]);
        for (const auto& [ta, c0] : ca.terms()) {
            NcPoly h = NcPoly::term(maps->algebra()->alphabet(), ta[1]);
            NcPoly pe = h - NcPoly::term(maps->algebra()->alphabet(), {},
                                         maps->counit_word(ta[1]));
            if (pe.is_zero()) continue;
            NcPoly leg = calcH->wedge(maurer_cartan(pe, calcH, maps), theta);
            out += (c * c0) *
                   TensorElement::outer(pr, {NcPoly::term(coact->total()->alphabet(), ta[0]), leg});
        }
    }
    return out;
}

TensorElement ver_bm_pair(const Word& a, const Word& b, const CoactionPtr& coact,
                          const CalculusPtr& calcH) {
    std::vector<PresentationPtr> pr = {coact->total(), calcH->omega()};
    const StructureMapsPtr& maps = coact->maps();
    TensorElement cb = coact->apply_word(b);
    TensorElement cb3 = cb.expand_leg(1, maps->pair(),
                                      [&](const Word& w) { return maps->coproduct_word(w); });
    TensorElement out(pr);
    for (const auto& [tup, c] : cb3.terms()) {
        Word ab = a;
        ab.insert(ab.end(), tup[0].begin(), tup[0].end());
        NcPoly aleg = coact->total()->normal_form(NcPoly::term(coact->total()->alphabet(), ab));
        NcPoly leg = calcH->omega()->normal_form(calcH->lift(maps->antipode_word(tup[1])) *
                                                 calcH->d_word(tup[2]));
        out += c * TensorElement::outer(pr, {aleg, leg});
    }
    return out;
}

TensorElement ver_bm(const NcPoly& omega1, const std::map<int, TensorElement>& coframe,
                     const CoactionPtr& coact, const CalculusPtr& calcA,
                     const CalculusPtr& calcH) {
    const PresentationPtr& omA = calcA->omega();
    const Alphabet& oal = *omA->alphabet();
    std::vector<PresentationPtr> pr = {coact->total(), calcH->omega()};
    TensorElement out(pr);
    NcPoly x = omA->normal_form(omega1);
    for (const auto& [w, c] : x.terms()) {
        if (w.empty() || oal.letter(w.back()).kind != Kind::Form)
            throw std::logic_error("ver_bm: normal word does not end in a form generator");
        Word prefix(w.begin(), w.end() - 1);
        for (int32_t l : prefix)
            if (oal.letter(l).kind == Kind::Form)
                throw std::logic_error("ver_bm: input is not a 1-form");
        auto it = coframe.find(w.back());
        if (it == coframe.end())
            throw std::logic_error("ver_bm: no coframe decomposition for " +
                                   oal.letter(w.back()).name);
        for (const auto& [tup, fc] : it->second.terms()) {
            Word aw = prefix;
            aw.insert(aw.end(), tup[0].begin(), tup[0].end());
            out += (c * fc) * ver_bm_pair(aw, tup[1], coact, calcH);
        }
    }
    return out;
}

BundleReport check_bm_bundle(const BundleCalculusPtr& dc,
                             const std::map<int, TensorElement>& coframe, int max_len) {
    BundleReport rep;
    const CoactionPtr& coact = dc->coaction();
    const CalculusPtr& calcA = dc->calcA();
    const CalculusPtr& calcH = dc->calcH();
    const PresentationPtr& omA = calcA->omega();
    const PresentationPtr& A = coact->total();
    const Alphabet& oal = *omA->alphabet();

    // the coframe decompositions reproduce the form generators
    for (const auto& [letter, te] : coframe) {
        NcPoly rebuilt(omA->alphabet());
        for (const auto& [tup, c] : te.terms()) {
            Word lifted = tup[0];  // A letters keep their ids in Omega(A)
            rebuilt += c * omA->normal_form(NcPoly::term(omA->alphabet(), lifted) *
                                            calcA->d_word(tup[1]));
        }
        if (rebuilt != omA->gen(letter))
            rep.failures.push_back("coframe does not reproduce " + oal.letter(letter).name);
    }

    // well-definedness: the universal formula on a (x) b agrees with the
    // coframe-transported map on the reduced 1-form nf(a d(b)); by linearity
    // ver_BM then kills every relation sum a^i d(b^i) = 0 at the bound
    std::vector<Word> awords = A->basis_words(max_len);
    for (const Word& a : awords)
        for (const Word& b : awords) {
            if (b.empty() || a.size() + b.size() > static_cast<size_t>(max_len)) continue;
            NcPoly adb = omA->normal_form(NcPoly::term(omA->alphabet(), a) * calcA->d_word(b));
            if (ver_bm_pair(a, b, coact, calcH) != ver_bm(adb, coframe, coact, calcA, calcH))
                rep.failures.push_back("ver_BM not well defined on " +
                                       word_str(*A->alphabet(), a) + " d(" +
                                       word_str(*A->alphabet(), b) + ")");
        }

    // ker ver_BM = A d(B) A at the bound
    std::vector<Word> cand;
    for (const Word& w : omA->basis_words(max_len))
        if (word_degree(oal, w) == 1) cand.push_back(w);
    std::map<Word, int> candidx;
    for (size_t j = 0; j < cand.size(); ++j) candidx[cand[j]] = static_cast<int>(j);
    std::map<TensorElement::Tuple, SparseVec> vrows;
    for (size_t j = 0; j < cand.size(); ++j) {
        TensorElement t = ver_bm(NcPoly::term(omA->alphabet(), cand[j]), coframe, coact, calcA,
                                 calcH);
        for (const auto& [tup, c] : t.terms()) add_coord(vrows[tup], static_cast<int>(j), c);
    }
    std::vector<SparseVec> veqs;
    for (auto& [tup, v] : vrows) veqs.push_back(std::move(v));
    auto kker = kernel_basis(veqs, static_cast<int>(cand.size()));

    // the A d(B) A span, in coordinates over every normal word encountered
    // (candidate words first so kernel vectors stay indexable)
    auto col_of = [&](const Word& w) {
        auto it = candidx.find(w);
        if (it != candidx.end()) return it->second;
        int id = static_cast<int>(candidx.size());
        candidx[w] = id;
        return id;
    };
    Echelon span;
    std::vector<SparseVec> pending;
    std::set<NcPoly> seen;
    std::vector<NcPoly> dbs;
    for (const NcPoly& b : coinvariants(coact, max_len)) {
        NcPoly db = calcA->d(calcA->lift(b));
        if (!db.is_zero()) dbs.push_back(std::move(db));
    }
    for (const NcPoly& db : dbs) {
        for (const Word& w2 : awords) {
            // ver_BM is left A-linear, so d(b) w2 in the kernel settles
            // w1 d(b) w2 for every left factor
            NcPoly e = omA->normal_form(db * NcPoly::term(omA->alphabet(), w2));
            if (!e.is_zero() && !ver_bm(e, coframe, coact, calcA, calcH).is_zero())
                rep.failures.push_back("A d(B) A element escapes ker ver_BM: " + e.str());
        }
    }
    for (const Word& w1 : omA->basis_words(max_len + 1)) {
        if (word_degree(oal, w1) != 0) continue;
        for (const NcPoly& db : dbs) {
            NcPoly left = omA->normal_form(NcPoly::term(omA->alphabet(), w1) * db);
            if (left.is_zero()) continue;
            for (const Word& w2 : awords) {
                NcPoly e = omA->normal_form(left * NcPoly::term(omA->alphabet(), w2));
                if (e.is_zero() || !seen.insert(e).second) continue;
                SparseVec vec;
                for (const auto& [w, c] : e.terms()) vec[col_of(w)] = c;
                pending.push_back(std::move(vec));
            }
        }
    }
    insert_span(span, std::move(pending));
    for (const auto& v : kker)
        if (!span.contains(dense_to_sparse(v)))
            rep.failures.push_back("ker ver_BM exceeds A d(B) A: " +
                                   combo_poly(omA->alphabet(), cand, v).str());
    return rep;
}

}  // namespace qpb
