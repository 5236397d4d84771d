#include "hopf.hpp"

namespace qpb {

StructureMapsPtr StructureMaps::make(PresentationPtr H,
                                     std::map<std::string, TensorElement> coproducts,
                                     std::map<std::string, ParamScalar> counits,
                                     std::map<std::string, NcPoly> antipodes) {
    auto sm = std::shared_ptr<StructureMaps>(new StructureMaps());
    sm->H_ = H;
    const Alphabet& al = *H->alphabet();
    sm->co_.resize(al.size());
    sm->eps_.resize(al.size());
    sm->s_.resize(al.size());
    for (int i = 0; i < al.size(); ++i) {
        const std::string& n = al.letter(i).name;
        auto c = coproducts.find(n);
        auto e = counits.find(n);
        auto s = antipodes.find(n);
        if (c == coproducts.end() || e == counits.end() || s == antipodes.end())
            throw std::logic_error("structure maps missing for generator " + n);
        sm->co_[i] = c->second.nf();
        sm->eps_[i] = e->second;
        sm->s_[i] = H->normal_form(s->second);
    }
    return sm;
}

TensorElement StructureMaps::coproduct_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = co_memo_.find(w);
        if (it != co_memo_.end()) return it->second;
    }
    TensorElement r = TensorElement::one(pair());
    for (int32_t l : w) r = r * co_[l];
    std::lock_guard<std::mutex> lk(mu_);
    co_memo_.emplace(w, r);
    return r;
}

TensorElement StructureMaps::coproduct(const NcPoly& h) const {
    TensorElement r(pair());
    for (const auto& [w, c] : h.terms()) r += c * coproduct_word(w);
    return r;
}

ParamScalar StructureMaps::counit_word(const Word& w) const {
    ParamScalar r = ParamScalar::one();
    for (int32_t l : w) r = r * eps_[l];
    return r;
}

ParamScalar StructureMaps::counit(const NcPoly& h) const {
    ParamScalar r;
    for (const auto& [w, c] : h.terms()) r += c * counit_word(w);
    return r;
}

NcPoly StructureMaps::antipode_word(const Word& w) const {
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = s_memo_.find(w);
        if (it != s_memo_.end()) return it->second;
    }
    NcPoly r = H_->one();
    for (auto it = w.rbegin(); it != w.rend(); ++it) r = r * s_[*it];
    r = H_->normal_form(r);
    std::lock_guard<std::mutex> lk(mu_);
    s_memo_.emplace(w, r);
    return r;
}

NcPoly StructureMaps::antipode(const NcPoly& h) const {
    NcPoly r = H_->zero();
    for (const auto& [w, c] : h.terms()) r += c * antipode_word(w);
    return H_->normal_form(r);
}

TensorElement StructureMaps::coproduct3(const Word& w) const {
    return coproduct_word(w).expand_leg(0, pair(),
                                        [this](const Word& x) { return coproduct_word(x); });
}

TensorElement adjoint_coaction(const NcPoly& h, const StructureMaps& maps) {
    auto H = maps.algebra();
    TensorElement r(maps.pair());
    for (const auto& [w, c] : h.terms()) {
        TensorElement d3 = maps.coproduct3(w);
        for (const auto& [tup, tc] : d3.terms()) {
            NcPoly p = H->normal_form(maps.antipode_word(tup[0]) * H->word(tup[2]));
            for (const auto& [pw, pc] : p.terms()) r.add({tup[1], pw}, c * tc * pc);
        }
    }
    return r;
}

NcPoly LinearMap::operator()(const NcPoly& p) const {
    NcPoly r = target->zero();
    for (const auto& [w, c] : p.terms()) r += c * on_word(w);
    return target->normal_form(r);
}

namespace {

// Shared memo for the multiplicative extension closures.
struct WordMemo {
    std::mutex mu;
    std::map<Word, NcPoly> cache;
};

LinearMap extension(PresentationPtr src, PresentationPtr tgt, std::map<int, NcPoly> gen_images,
                    bool reverse) {
    auto memo = std::make_shared<WordMemo>();
    auto images = std::make_shared<std::map<int, NcPoly>>(std::move(gen_images));
    LinearMap f;
    f.source = src;
    f.target = tgt;
    f.on_word = [src, tgt, images, memo, reverse](const Word& w) {
        {
            std::lock_guard<std::mutex> lk(memo->mu);
            auto it = memo->cache.find(w);
            if (it != memo->cache.end()) return it->second;
        }
        // The letter images define the map on irreducible words only, so
        // reduce first and extend linearly over the normal form.
        NcPoly n = src->normal_form(NcPoly::term(src->alphabet(), w));
        NcPoly r = tgt->zero();
        for (const auto& [nw, c] : n.terms()) {
            NcPoly p = tgt->one();
            auto apply = [&](int32_t l) {
                auto it = images->find(l);
                if (it == images->end())
                    throw std::logic_error("linear map has no image for letter id " +
                                           std::to_string(l));
                p = p * it->second;
            };
            if (reverse)
                for (auto it = nw.rbegin(); it != nw.rend(); ++it) apply(*it);
            else
                for (int32_t l : nw) apply(l);
            r += c * p;
        }
        r = tgt->normal_form(r);
        std::lock_guard<std::mutex> lk(memo->mu);
        memo->cache.emplace(w, r);
        return r;
    };
    return f;
}

}  // namespace

LinearMap LinearMap::algebra_map(PresentationPtr src, PresentationPtr tgt,
                                 std::map<int, NcPoly> gen_images) {
    return extension(std::move(src), std::move(tgt), std::move(gen_images), false);
}

LinearMap LinearMap::anti_algebra_map(PresentationPtr src, PresentationPtr tgt,
                                      std::map<int, NcPoly> gen_images) {
    return extension(std::move(src), std::move(tgt), std::move(gen_images), true);
}

LinearMap LinearMap::from_table(PresentationPtr src, PresentationPtr tgt,
                                std::map<Word, NcPoly> images) {
    auto table = std::make_shared<std::map<Word, NcPoly>>(std::move(images));
    LinearMap f;
    f.source = src;
    f.target = tgt;
    f.on_word = [table](const Word& w) {
        auto it = table->find(w);
        if (it == table->end()) throw std::logic_error("linear map undefined on a word");
        return it->second;
    };
    return f;
}

LinearMap LinearMap::unit_counit(StructureMapsPtr maps, PresentationPtr tgt) {
    LinearMap f;
    f.source = maps->algebra();
    f.target = tgt;
    f.on_word = [maps, tgt](const Word& w) { return maps->counit_word(w) * tgt->one(); };
    return f;
}

LinearMap convolution(LinearMap f, LinearMap g, StructureMapsPtr maps) {
    if (f.source != maps->algebra() || g.source != maps->algebra() || f.target != g.target)
        throw SignatureMismatch();
    LinearMap r;
    r.source = f.source;
    r.target = f.target;
    auto tgt = f.target;
    r.on_word = [f, g, tgt, maps](const Word& w) {
        NcPoly out = tgt->zero();
        TensorElement d = maps->coproduct_word(w);
        for (const auto& [tup, c] : d.terms())
            out += c * (f.on_word(tup[0]) * g.on_word(tup[1]));
        return tgt->normal_form(out);
    };
    return r;
}

bool convolution_inverse_check(const LinearMap& f, const LinearMap& g, const StructureMaps& maps,
                               int max_len) {
    auto H = maps.algebra();
    if (f.source != H || g.source != H || f.target != g.target) throw SignatureMismatch();
    auto tgt = f.target;
    for (const Word& w : H->basis_words(max_len)) {
        NcPoly want = tgt->normal_form(maps.counit_word(w) * tgt->one());
        NcPoly fg = tgt->zero(), gf = tgt->zero();
        TensorElement d = maps.coproduct_word(w);
        for (const auto& [tup, c] : d.terms()) {
            fg += c * (f.on_word(tup[0]) * g.on_word(tup[1]));
            gf += c * (g.on_word(tup[0]) * f.on_word(tup[1]));
        }
        if (tgt->normal_form(fg) != want || tgt->normal_form(gf) != want) return false;
    }
    return true;
}

namespace {

// (eps (x) id) / (id (x) eps) contraction of an arity-2 tensor.
NcPoly counit_leg(const TensorElement& t, const StructureMaps& maps, size_t leg) {
    auto H = maps.algebra();
    NcPoly r = H->zero();
    for (const auto& [tup, c] : t.terms())
        r += (c * maps.counit_word(tup[leg])) * H->word(tup[1 - leg]);
    return H->normal_form(r);
}

// mu o (S (x) id) or mu o (id (x) S) applied to Delta(w).
NcPoly antipode_side(const TensorElement& d, const StructureMaps& maps, bool s_on_left) {
    auto H = maps.algebra();
    NcPoly r = H->zero();
    for (const auto& [tup, c] : d.terms()) {
        NcPoly p = s_on_left ? maps.antipode_word(tup[0]) * H->word(tup[1])
                             : H->word(tup[0]) * maps.antipode_word(tup[1]);
        r += c * p;
    }
    return H->normal_form(r);
}

TensorElement antipode_both_legs(const TensorElement& t, const StructureMaps& maps) {
    auto f = [&maps](const Word& w) { return maps.antipode_word(w); };
    return t.map_leg(0, maps.algebra(), f).map_leg(1, maps.algebra(), f);
}

}  // namespace

AxiomReport check_hopf_axioms(const PresentationPtr& H, const StructureMapsPtr& maps,
                              int max_len) {
    AxiomReport rep;
    const Alphabet& al = *H->alphabet();
    auto fail = [&](const std::string& what, const Word& w) {
        rep.failures.push_back(what + " on " + word_str(al, w));
    };

    auto basis = H->basis_words(max_len);
    for (const Word& w : basis) {
        TensorElement d = maps->coproduct_word(w);
        // coassociativity
        auto co = [&maps](const Word& x) { return maps->coproduct_word(x); };
        if (d.expand_leg(0, maps->pair(), co) != d.expand_leg(1, maps->pair(), co))
            fail("coassociativity", w);
        // counit axiom
        NcPoly id = H->normal_form(H->word(w));
        if (counit_leg(d, *maps, 0) != id || counit_leg(d, *maps, 1) != id) fail("counit", w);
        // antipode axiom
        NcPoly unit = maps->counit_word(w) * H->one();
        if (antipode_side(d, *maps, true) != unit || antipode_side(d, *maps, false) != unit)
            fail("antipode", w);
        // S is an anti-coalgebra map; eps o S = eps
        NcPoly sw = maps->antipode_word(w);
        if (antipode_both_legs(d, *maps) != maps->coproduct(sw).flip(0)) fail("(SxS)Delta", w);
        if (maps->counit(sw) != maps->counit_word(w)) fail("eps o S", w);
    }

    // S(1) = 1 and anti-multiplicativity on word pairs.
    if (maps->antipode_word({}) != H->one()) rep.failures.push_back("S(1) != 1");
    for (const Word& a : basis)
        for (const Word& b : basis) {
            if (static_cast<int>(a.size() + b.size()) > max_len) continue;
            NcPoly prod = H->normal_form(H->word(a) * H->word(b));
            if (maps->antipode(prod) !=
                H->normal_form(maps->antipode_word(b) * maps->antipode_word(a))) {
                Word ab = a;
                ab.insert(ab.end(), b.begin(), b.end());
                fail("S anti-multiplicative", ab);
            }
        }

    // well-definedness across the presentation relations
    for (const Rule& r : H->rules()) {
        NcPoly lhs = NcPoly::term(H->alphabet(), r.lhs);
        if (maps->coproduct(lhs) != maps->coproduct(r.rhs)) fail("Delta over relation", r.lhs);
        if (maps->counit(lhs) != maps->counit(r.rhs)) fail("eps over relation", r.lhs);
        if (maps->antipode(lhs) != maps->antipode(r.rhs)) fail("S over relation", r.lhs);
    }
    return rep;
}

}  // namespace qpb
