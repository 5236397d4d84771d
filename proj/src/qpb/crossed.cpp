#include "qpb/crossed.hpp"

#include <sstream>

namespace qpb {

namespace {

// Re-component a tensor whose words are valid in the target presentations
// (letter ids shared between an algebra and its calculus extension).
TensorElement retag(const TensorElement& x, std::vector<PresentationPtr> comps) {
    TensorElement r(std::move(comps));
    for (const auto& [tup, c] : x.terms()) r.add(tup, c);
    return r;
}

// Form letter -> the algebra generator it differentiates (d(g) = one letter).
std::map<int, int> form_bases(const Calculus& calc) {
    std::map<int, int> out;
    const Alphabet& al = *calc.omega()->alphabet();
    for (int g = 0; g < al.size(); ++g) {
        if (al.letter(g).kind != Kind::Algebra) continue;
        NcPoly dg = calc.d_word({g});
        if (dg.terms().size() != 1) continue;
        const auto& [w, c] = *dg.terms().begin();
        if (w.size() == 1 && c.is_one() && al.letter(w[0]).kind == Kind::Form) out[w[0]] = g;
    }
    return out;
}

enum class Side { Left, Right, Graded };

TensorElement omega_coaction(const CalculusPtr& calc, const StructureMapsPtr& maps, const Word& w,
                             Side side) {
    const PresentationPtr& om = calc->omega();
    const PresentationPtr& H = maps->algebra();
    std::vector<PresentationPtr> comps;
    switch (side) {
        case Side::Left: comps = {H, om}; break;
        case Side::Right: comps = {om, H}; break;
        case Side::Graded: comps = {om, om}; break;
    }
    const Alphabet& al = *om->alphabet();
    std::map<int, int> bases = form_bases(*calc);
    auto dmap = [&calc](const Word& v) { return calc->d_word(v); };
    TensorElement acc = TensorElement::one(comps);
    for (int32_t l : w) {
        TensorElement img(comps);
        if (al.letter(l).kind == Kind::Algebra) {
            img = retag(maps->coproduct_word({l}), comps);
        } else {
            auto it = bases.find(l);
            if (it == bases.end())
                throw std::logic_error("form letter is not the differential of a generator: " +
                                       al.letter(l).name);
            TensorElement co = maps->coproduct_word({it->second});
            switch (side) {
                case Side::Left: img = retag(co, {H, H}).map_leg(1, om, dmap); break;
                case Side::Right: img = retag(co.map_leg(0, om, dmap), comps); break;
                case Side::Graded:
                    img = retag(co.map_leg(0, om, dmap), comps) +
                          retag(co.map_leg(1, om, dmap), comps);
                    break;
            }
        }
        acc = acc * img;
    }
    return acc;
}

}  // namespace

TensorElement omega_left_coaction(const CalculusPtr& calc, const StructureMapsPtr& maps,
                                  const Word& w) {
    return omega_coaction(calc, maps, w, Side::Left);
}
TensorElement omega_right_coaction(const CalculusPtr& calc, const StructureMapsPtr& maps,
                                   const Word& w) {
    return omega_coaction(calc, maps, w, Side::Right);
}
TensorElement omega_coproduct(const CalculusPtr& calc, const StructureMapsPtr& maps,
                              const Word& w) {
    return omega_coaction(calc, maps, w, Side::Graded);
}

NcPoly CrossedCalculus::act_form(const NcPoly& h, const NcPoly& w) const {
    NcPoly out = calcB->omega()->zero();
    for (const auto& [hw, hc] : h.terms())
        for (const auto& [ww, wc] : w.terms()) out += (hc * wc) * form_act(hw, ww);
    return calcB->omega()->normal_form(out);
}

TensorElement crossed_one(const CrossedCalculus& c) { return TensorElement::one(c.pair()); }

TensorElement wedge_sharp(const CrossedCalculus& c, const TensorElement& x,
                          const TensorElement& y) {
    const PresentationPtr& omB = c.calcB->omega();
    const PresentationPtr& omH = c.calcH->omega();
    const PresentationPtr& H = c.data.hmaps->algebra();
    const Alphabet& bal = *omB->alphabet();
    const Alphabet& hal = *omH->alphabet();
    TensorElement out(c.pair());
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms()) {
            ParamScalar base = cx * cy;
            if ((word_degree(hal, tx[1]) * word_degree(bal, ty[0])) % 2) base = -base;
            // eta_{-2} (x) eta_{-1} (x) eta_0 and eta'_{-1} (x) eta'_0
            TensorElement L =
                omega_left_coaction(c.calcH, c.data.hmaps, tx[1])
                    .expand_leg(0, {H, H},
                                [&](const Word& h) { return c.data.hmaps->coproduct_word(h); });
            TensorElement R = omega_left_coaction(c.calcH, c.data.hmaps, ty[1]);
            for (const auto& [lt, lc] : L.terms())
                for (const auto& [rt, rc] : R.terms()) {
                    NcPoly bleg = omB->word(tx[0]) * c.form_act(lt[0], ty[0]) *
                                  c.calcB->lift(c.data.sigma(lt[1], rt[0]));
                    bleg = omB->normal_form(bleg);
                    if (bleg.is_zero()) continue;
                    NcPoly hleg = omH->normal_form(omH->word(lt[2]) * omH->word(rt[1]));
                    ParamScalar cc = base * lc * rc;
                    for (const auto& [bw, bc] : bleg.terms())
                        for (const auto& [hw, hc] : hleg.terms()) out.add({bw, hw}, cc * bc * hc);
                }
        }
    return out;
}

TensorElement d_sharp(const CrossedCalculus& c, const TensorElement& x) {
    const Alphabet& bal = *c.calcB->omega()->alphabet();
    TensorElement out(c.pair());
    for (const auto& [tup, cc] : x.terms()) {
        NcPoly dw = c.calcB->d_word(tup[0]);
        for (const auto& [w, wc] : dw.terms()) out.add({w, tup[1]}, cc * wc);
        NcPoly de = c.calcH->d_word(tup[1]);
        ParamScalar s = (word_degree(bal, tup[0]) % 2) ? -cc : cc;
        for (const auto& [e, ec] : de.terms()) out.add({tup[0], e}, s * ec);
    }
    return out;
}

TensorElement coact_sharp(const CrossedCalculus& c, const TensorElement& x) {
    const PresentationPtr& omH = c.calcH->omega();
    return x.expand_leg(1, {omH, omH}, [&](const Word& e) {
        return omega_coproduct(c.calcH, c.data.hmaps, e);
    });
}

std::vector<TensorElement> base_forms_sharp(const CrossedCalculus& c, int degree, int max_len) {
    const PresentationPtr& omB = c.calcB->omega();
    const PresentationPtr& omH = c.calcH->omega();
    const Alphabet& bal = *omB->alphabet();
    const Alphabet& hal = *omH->alphabet();
    std::vector<TensorElement::Tuple> cand;
    for (const Word& bw : omB->basis_words(max_len)) {
        int i = word_degree(bal, bw);
        if (i > degree) continue;
        for (const Word& ew : omH->basis_words(max_len))
            if (word_degree(hal, ew) == degree - i) cand.push_back({bw, ew});
    }
    std::map<TensorElement::Tuple, int> eq;
    std::vector<SparseVec> rows;
    auto row_of = [&](const TensorElement::Tuple& t) {
        auto it = eq.find(t);
        if (it == eq.end()) {
            it = eq.emplace(t, static_cast<int>(rows.size())).first;
            rows.emplace_back();
        }
        return it->second;
    };
    for (size_t i = 0; i < cand.size(); ++i) {
        TensorElement e(c.pair());
        e.add(cand[i], ParamScalar::one());
        TensorElement diff = coact_sharp(c, e);
        TensorElement::Tuple trivial = cand[i];
        trivial.push_back({});
        diff.add(trivial, -ParamScalar::one());
        for (const auto& [tup, cc] : diff.terms()) rows[row_of(tup)][static_cast<int>(i)] = cc;
    }
    std::vector<TensorElement> out;
    for (const auto& vec : kernel_basis(rows, static_cast<int>(cand.size()))) {
        TensorElement e(c.pair());
        for (size_t i = 0; i < cand.size(); ++i)
            if (!vec[i].is_zero()) e.add(cand[i], vec[i]);
        out.push_back(std::move(e));
    }
    return out;
}

CrossedReport check_twisted_calculus(const CrossedCalculus& c, int h_len, int b_len) {
    CrossedReport rep;
    const PresentationPtr& H = c.data.hmaps->algebra();
    const PresentationPtr& B = c.data.B;
    const PresentationPtr& omB = c.calcB->omega();
    auto fail = [&](const std::string& what, const Word& h, const std::string& rest) {
        rep.failures.push_back(what + " at h=" + word_str(*H->alphabet(), h) + rest);
    };
    std::vector<Word> hws = H->basis_words(h_len);
    std::vector<Word> bws = B->basis_words(b_len);
    for (const Word& h : hws) {
        NcPoly hp = H->word(h);
        for (const Word& b : bws) {
            NcPoly bw = B->word(b);
            // form_act restricts to the measure in degree zero
            if (c.form_act(h, b) != c.calcB->lift(c.data.measure(h, b)))
                fail("form action disagrees with the measure", h,
                     ", b=" + word_str(*B->alphabet(), b));
            // d_B(h.b) = h.d_B(b)
            NcPoly lhs = c.calcB->d(c.calcB->lift(c.data.measure(h, b)));
            NcPoly rhs = c.act_form(hp, c.calcB->d(c.calcB->lift(bw)));
            if (lhs != rhs)
                fail("d_B(h.b) != h.d_B(b)", h, ", b=" + word_str(*B->alphabet(), b));
            // h.(b d b') = (h_1.b)(h_2.d b')
            for (const Word& bp : bws) {
                NcPoly db = c.calcB->d(c.calcB->lift(B->word(bp)));
                NcPoly l = c.act_form(hp, omB->normal_form(c.calcB->lift(bw) * db));
                NcPoly r = omB->zero();
                TensorElement coh = c.data.hmaps->coproduct_word(h);
                for (const auto& [tup, cc] : coh.terms())
                    r += cc * (c.calcB->lift(c.data.measure(tup[0], b)) *
                               c.act_form(H->word(tup[1]), db));
                if (l != omB->normal_form(r))
                    fail("twisted module law fails", h,
                         ", b=" + word_str(*B->alphabet(), b) +
                             ", b'=" + word_str(*B->alphabet(), bp));
            }
        }
        // d_B o sigma = 0
        for (const Word& g : hws)
            if (!c.calcB->d(c.calcB->lift(c.data.sigma(h, g))).is_zero())
                fail("d_B(sigma) != 0", h, ", h'=" + word_str(*H->alphabet(), g));
    }
    return rep;
}

CrossedReport check_crossed_calculus(const CrossedCalculus& c, int max_len) {
    CrossedReport rep;
    const PresentationPtr& omB = c.calcB->omega();
    const PresentationPtr& omH = c.calcH->omega();
    const Alphabet& bal = *omB->alphabet();
    const Alphabet& hal = *omH->alphabet();
    auto name = [&](const TensorElement::Tuple& t) {
        return "(" + word_str(bal, t[0]) + " | " + word_str(hal, t[1]) + ")";
    };
    std::vector<TensorElement::Tuple> elems;
    std::vector<int> degs;
    for (const Word& bw : omB->basis_words(max_len))
        for (const Word& ew : omH->basis_words(max_len)) {
            int d = word_degree(bal, bw) + word_degree(hal, ew);
            if (d > 2) continue;
            elems.push_back({bw, ew});
            degs.push_back(d);
        }
    auto as_tensor = [&](const TensorElement::Tuple& t) {
        TensorElement e(c.pair());
        e.add(t, ParamScalar::one());
        return e;
    };
    TensorElement unit = crossed_one(c);
    for (size_t i = 0; i < elems.size(); ++i) {
        TensorElement x = as_tensor(elems[i]);
        // unitality
        if (wedge_sharp(c, unit, x) != x || wedge_sharp(c, x, unit) != x)
            rep.failures.push_back("unit fails on " + name(elems[i]));
        if (degs[i] > 1) continue;
        // d^2 = 0
        if (!d_sharp(c, d_sharp(c, x)).is_zero())
            rep.failures.push_back("d^2 != 0 on " + name(elems[i]));
        // differentiability of the coaction: Delta^w o d = d_tensor o Delta^w
        TensorElement lhs = coact_sharp(c, d_sharp(c, x));
        TensorElement rhs(std::vector<PresentationPtr>{omB, omH, omH});
        TensorElement cox = coact_sharp(c, x);
        for (const auto& [tup, cc] : cox.terms()) {
            NcPoly dw = c.calcB->d_word(tup[0]);
            for (const auto& [w, wc] : dw.terms()) rhs.add({w, tup[1], tup[2]}, cc * wc);
            ParamScalar s1 = (word_degree(bal, tup[0]) % 2) ? -cc : cc;
            NcPoly de1 = c.calcH->d_word(tup[1]);
            for (const auto& [e, ec] : de1.terms()) rhs.add({tup[0], e, tup[2]}, s1 * ec);
            ParamScalar s2 =
                ((word_degree(bal, tup[0]) + word_degree(hal, tup[1])) % 2) ? -cc : cc;
            NcPoly de2 = c.calcH->d_word(tup[2]);
            for (const auto& [e, ec] : de2.terms()) rhs.add({tup[0], tup[1], e}, s2 * ec);
        }
        if (lhs != rhs) rep.failures.push_back("coaction not differentiable on " + name(elems[i]));
    }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            if (degs[i] + degs[j] > 1) continue;
            TensorElement x = as_tensor(elems[i]), y = as_tensor(elems[j]);
            // graded Leibniz
            TensorElement lhs = d_sharp(c, wedge_sharp(c, x, y));
            TensorElement rhs = wedge_sharp(c, d_sharp(c, x), y);
            TensorElement t = wedge_sharp(c, x, d_sharp(c, y));
            rhs += (degs[i] % 2) ? -t : t;
            if (lhs != rhs)
                rep.failures.push_back("Leibniz fails on " + name(elems[i]) + ", " +
                                       name(elems[j]));
            // associativity on bounded triples
            for (size_t k = 0; k < elems.size(); ++k) {
                if (degs[i] + degs[j] + degs[k] > 2) continue;
                TensorElement z = as_tensor(elems[k]);
                if (wedge_sharp(c, wedge_sharp(c, x, y), z) !=
                    wedge_sharp(c, x, wedge_sharp(c, y, z)))
                    rep.failures.push_back("associativity fails on " + name(elems[i]) + ", " +
                                           name(elems[j]) + ", " + name(elems[k]));
            }
        }
    // degree-0 wedge is the crossed product
    std::vector<PresentationPtr> bh{c.data.B, c.data.hmaps->algebra()};
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = 0; j < elems.size(); ++j) {
            if (degs[i] || degs[j]) continue;
            TensorElement x(bh), y(bh);
            x.add(elems[i], ParamScalar::one());
            y.add(elems[j], ParamScalar::one());
            if (retag(crossed_mul(c.data, x, y), c.pair()) !=
                wedge_sharp(c, as_tensor(elems[i]), as_tensor(elems[j])))
                rep.failures.push_back("degree-0 wedge differs from the crossed product on " +
                                       name(elems[i]) + ", " + name(elems[j]));
        }
    return rep;
}

CrossedReport check_base_forms_sharp(const CrossedCalculus& c, int max_deg, int max_len) {
    CrossedReport rep;
    const PresentationPtr& omB = c.calcB->omega();
    const Alphabet& bal = *omB->alphabet();
    for (int deg = 0; deg <= max_deg; ++deg) {
        std::vector<TensorElement> base = base_forms_sharp(c, deg, max_len);
        std::vector<TensorElement::Tuple> expected;
        for (const Word& bw : omB->basis_words(max_len))
            if (word_degree(bal, bw) == deg) expected.push_back({bw, {}});
        std::map<TensorElement::Tuple, int> coord;
        auto vec_of = [&](const TensorElement& e) {
            SparseVec v;
            for (const auto& [tup, cc] : e.terms()) {
                auto it = coord.find(tup);
                if (it == coord.end())
                    it = coord.emplace(tup, static_cast<int>(coord.size())).first;
                v[it->second] = cc;
            }
            return v;
        };
        Echelon span_exp;
        std::vector<SparseVec> expv;
        for (const auto& t : expected) {
            TensorElement e(c.pair());
            e.add(t, ParamScalar::one());
            expv.push_back(vec_of(e));
            span_exp.insert(expv.back());
        }
        Echelon span_base;
        for (const auto& e : base) {
            SparseVec v = vec_of(e);
            span_base.insert(v);
            if (!span_exp.contains(v))
                rep.failures.push_back("degree-" + std::to_string(deg) +
                                       " base form outside Omega(B) (x) 1: " + e.str());
        }
        for (size_t i = 0; i < expected.size(); ++i)
            if (!span_base.contains(expv[i]))
                rep.failures.push_back("degree-" + std::to_string(deg) + " form " +
                                       word_str(bal, expected[i][0]) +
                                       " (x) 1 is not coinvariant at the bound");
    }
    return rep;
}

}  // namespace qpb
