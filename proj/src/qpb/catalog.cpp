#include "catalog.hpp"

namespace qpb::catalog {

namespace {

// Laurent Hopf algebra on a single group-like invertible generator.
HopfAlgebra group_like(const std::string& g) {
    auto alph = std::make_shared<Alphabet>();
    alph->add(g, true, 1);
    auto P = Presentation::make(alph, {});
    std::string gi = g + "^-1";
    auto diag = [&](const std::string& n) {
        return TensorElement::outer({P, P}, {P->gen(n), P->gen(n)});
    };
    auto maps = StructureMaps::make(
        P, {{g, diag(g)}, {gi, diag(gi)}},
        {{g, ParamScalar::one()}, {gi, ParamScalar::one()}},
        {{g, P->gen(gi)}, {gi, P->gen(g)}});
    return {P, maps};
}

// The 2x2 quantum-matrix Hopf algebras. `e` is the commutation exponent:
// alpha beta = q^e beta alpha, with determinant relation alpha delta = 1 +
// q^e beta gamma. e=+1 gives SL_q(2), e=-1 gives O_q(SU(2)). Letters are
// declared beta < gamma < alpha < delta so that all relations rewrite
// deg-lex decreasingly (alpha delta and delta alpha both reduce to shorter
// words).
HopfAlgebra matrix_hopf(int e, int wa) {
    auto alph = std::make_shared<Alphabet>();
    int b = alph->add("beta", false, -wa);
    int c = alph->add("gamma", false, wa);
    int a = alph->add("alpha", false, wa);
    int d = alph->add("delta", false, -wa);
    auto q = [&](int k) { return ParamScalar::q(k); };
    auto W = [](std::initializer_list<int32_t> w) { return Word(w); };
    std::vector<Rule> rules{
        {W({a, b}), NcPoly::term(alph, {b, a}, q(e))},
        {W({a, c}), NcPoly::term(alph, {c, a}, q(e))},
        {W({d, b}), NcPoly::term(alph, {b, d}, q(-e))},
        {W({d, c}), NcPoly::term(alph, {c, d}, q(-e))},
        {W({c, b}), NcPoly::term(alph, {b, c})},
        {W({a, d}), NcPoly::one(alph) + NcPoly::term(alph, {b, c}, q(e))},
        {W({d, a}), NcPoly::one(alph) + NcPoly::term(alph, {b, c}, q(-e))},
    };
    auto P = Presentation::make(alph, std::move(rules));
    auto pr = [&](const std::string& x, const std::string& y) {
        return TensorElement::outer({P, P}, {P->gen(x), P->gen(y)});
    };
    std::map<std::string, TensorElement> co{
        {"alpha", pr("alpha", "alpha") + pr("beta", "gamma")},
        {"beta", pr("alpha", "beta") + pr("beta", "delta")},
        {"gamma", pr("gamma", "alpha") + pr("delta", "gamma")},
        {"delta", pr("gamma", "beta") + pr("delta", "delta")},
    };
    std::map<std::string, ParamScalar> eps{{"alpha", ParamScalar::one()},
                                           {"beta", ParamScalar()},
                                           {"gamma", ParamScalar()},
                                           {"delta", ParamScalar::one()}};
    std::map<std::string, NcPoly> S{{"alpha", P->gen("delta")},
                                    {"beta", -(q(-e) * P->gen("beta"))},
                                    {"gamma", -(q(e) * P->gen("gamma"))},
                                    {"delta", P->gen("alpha")}};
    return {P, StructureMaps::make(P, std::move(co), std::move(eps), std::move(S))};
}

}  // namespace

HopfAlgebra ou1() { return group_like("t"); }
HopfAlgebra cz() { return group_like("g"); }
HopfAlgebra slq2() { return matrix_hopf(1, 0); }
HopfAlgebra qsu2() { return matrix_hopf(-1, 1); }

namespace {

// Coaction image a (x) t^k determined by the weight of the generator.
TensorElement weight_image(const PresentationPtr& A, const PresentationPtr& H,
                           const std::string& gen, const std::string& t) {
    int w = A->alphabet()->letter(A->alphabet()->at(gen)).weight;
    NcPoly h = H->one();
    std::string letter = w >= 0 ? t : t + "^-1";
    for (int i = 0; i < std::abs(w); ++i) h = h * H->gen(letter);
    return TensorElement::outer({A, H}, {A->gen(gen), H->normal_form(h)});
}

}  // namespace

Bundle torus_bundle() {
    auto alph = std::make_shared<Alphabet>();
    int u = alph->add("u", true, 1);
    int v = alph->add("v", true, -1);
    int ui = alph->inverse_of(u), vi = alph->inverse_of(v);
    auto rule = [&](int a, int b, int le) {
        return Rule{{a, b}, NcPoly::term(alph, {b, a}, ParamScalar::l(le))};
    };
    auto A = Presentation::make(
        alph, {rule(v, u, -1), rule(v, ui, 1), rule(vi, u, 1), rule(vi, ui, -1)});
    Bundle b;
    b.A = A;
    b.H = ou1();
    auto H = b.H.P;
    std::map<std::string, TensorElement> imgs;
    for (auto g : {"u", "u^-1", "v", "v^-1"}) imgs.emplace(g, weight_image(A, H, g, "t"));
    b.coact = Coaction::make(A, b.H.maps, std::move(imgs));
    int t = H->alphabet()->at("t"), ti = H->alphabet()->at("t^-1");
    b.j = LinearMap::algebra_map(H, A, {{t, A->gen("u")}, {ti, A->gen("v")}});
    b.j_inv = LinearMap::algebra_map(H, A, {{t, A->gen("u^-1")}, {ti, A->gen("v^-1")}});
    return b;
}

Bundle qsu2_bundle() {
    Bundle b;
    b.H = ou1();
    auto su2 = qsu2();
    b.A = su2.P;
    auto H = b.H.P;
    std::map<std::string, TensorElement> imgs;
    for (auto g : {"alpha", "beta", "gamma", "delta"})
        imgs.emplace(g, weight_image(b.A, H, g, "t"));
    b.coact = Coaction::make(b.A, b.H.maps, std::move(imgs));
    return b;
}

Bundle self_bundle(const HopfAlgebra& h) {
    Bundle b;
    b.A = h.P;
    b.H = h;
    std::map<std::string, TensorElement> imgs;
    const Alphabet& al = *h.P->alphabet();
    for (int i = 0; i < al.size(); ++i)
        imgs.emplace(al.letter(i).name, h.maps->coproduct_word({i}));
    b.coact = Coaction::make(h.P, h.maps, std::move(imgs));
    std::map<int, NcPoly> id_imgs, s_imgs;
    for (int i = 0; i < al.size(); ++i) {
        id_imgs[i] = h.P->gen(i);
        s_imgs[i] = h.maps->antipode_word({i});
    }
    b.j = LinearMap::algebra_map(h.P, h.P, id_imgs);
    b.j_inv = LinearMap::anti_algebra_map(h.P, h.P, s_imgs);
    return b;
}

namespace {

// Rule x y -> c y x for single letters.
Rule swap_rule(const AlphabetPtr& al, int x, int y, const ParamScalar& c) {
    return {{x, y}, NcPoly::term(al, {y, x}, c)};
}

Rule kill_rule(const AlphabetPtr& al, int x, int y) { return {{x, y}, NcPoly::zero(al)}; }

}  // namespace

CalculusPtr torus_calculus(const PresentationPtr& A) {
    auto oal = std::make_shared<Alphabet>();
    int u = oal->add("u", true, 1);
    int v = oal->add("v", true, -1);
    int ui = oal->inverse_of(u), vi = oal->inverse_of(v);
    int du = oal->add("du", false, 1, Kind::Form);
    int dv = oal->add("dv", false, -1, Kind::Form);
    AlphabetPtr al = oal;
    auto l = [](int k) { return ParamScalar::l(k); };
    std::vector<Rule> rules{
        // the torus relations
        swap_rule(al, v, u, l(-1)),
        swap_rule(al, v, ui, l(1)),
        swap_rule(al, vi, u, l(1)),
        swap_rule(al, vi, ui, l(-1)),
        // bimodule structure of Omega^1
        swap_rule(al, du, u, l(0)),
        swap_rule(al, du, ui, l(0)),
        swap_rule(al, du, v, l(1)),
        swap_rule(al, du, vi, l(-1)),
        swap_rule(al, dv, u, l(-1)),
        swap_rule(al, dv, ui, l(1)),
        swap_rule(al, dv, v, l(0)),
        swap_rule(al, dv, vi, l(0)),
        // wedge relations
        kill_rule(al, du, du),
        kill_rule(al, dv, dv),
        {{dv, du}, NcPoly::term(al, {du, dv}, -l(-1))},
    };
    auto omega = Presentation::make(al, std::move(rules));
    std::map<std::string, NcPoly> d{
        {"u", NcPoly::gen(al, du)},
        {"v", NcPoly::gen(al, dv)},
        {"u^-1", -NcPoly::term(al, {ui, ui, du})},
        {"v^-1", -NcPoly::term(al, {vi, vi, dv})},
        {"du", NcPoly::zero(al)},
        {"dv", NcPoly::zero(al)},
    };
    return Calculus::make(A, omega, std::move(d), 2);
}

CalculusPtr u1_calculus(const HopfAlgebra& h, int alpha) {
    const Alphabet& hal = *h.P->alphabet();
    const Generator& g = hal.letter(0);
    auto oal = std::make_shared<Alphabet>();
    int t = oal->add(g.name, true, g.weight);
    int ti = oal->inverse_of(t);
    int dt = oal->add("d" + g.name, false, g.weight, Kind::Form);
    AlphabetPtr al = oal;
    std::vector<Rule> rules{
        swap_rule(al, dt, t, ParamScalar::q(-alpha)),
        swap_rule(al, dt, ti, ParamScalar::q(alpha)),
        kill_rule(al, dt, dt),
    };
    auto omega = Presentation::make(al, std::move(rules));
    std::map<std::string, NcPoly> d{
        {g.name, NcPoly::gen(al, dt)},
        {g.name + "^-1", NcPoly::term(al, {ti, ti, dt}, -ParamScalar::q(alpha))},
        {"d" + g.name, NcPoly::zero(al)},
    };
    return Calculus::make(h.P, omega, std::move(d), 2);
}

CalculusPtr group_z_calculus(const HopfAlgebra& h) { return u1_calculus(h, -1); }

CalculusPtr qsu2_calculus(const PresentationPtr& A) {
    const AlphabetPtr& bal = A->alphabet();
    auto oal = std::make_shared<Alphabet>();
    for (int i = 0; i < bal->size(); ++i) {
        const Generator& g = bal->letter(i);
        oal->add(g.name, g.invertible, g.weight);
    }
    int ep = oal->add("ep", false, 2, Kind::Form);
    int em = oal->add("em", false, -2, Kind::Form);
    int e0 = oal->add("e0", false, 0, Kind::Form);
    AlphabetPtr al = oal;
    auto q = [](int k) { return ParamScalar::q(k); };
    std::vector<Rule> rules;
    for (const Rule& r : A->rules()) {
        NcPoly rhs(al);
        for (const auto& [w, c] : r.rhs.terms()) rhs.add(w, c);
        rules.push_back({r.lhs, std::move(rhs)});
    }
    for (int x = 0; x < bal->size(); ++x) {
        int w = bal->letter(x).weight;
        rules.push_back(swap_rule(al, ep, x, q(w)));
        rules.push_back(swap_rule(al, em, x, q(w)));
        rules.push_back(swap_rule(al, e0, x, q(2 * w)));
    }
    rules.push_back(kill_rule(al, ep, ep));
    rules.push_back(kill_rule(al, em, em));
    rules.push_back(kill_rule(al, e0, e0));
    rules.push_back({{em, ep}, NcPoly::term(al, {ep, em}, -q(2))});
    rules.push_back({{e0, ep}, NcPoly::term(al, {ep, e0}, -q(4))});
    rules.push_back({{e0, em}, NcPoly::term(al, {em, e0}, -q(-4))});
    auto omega = Presentation::make(al, std::move(rules));
    int b = al->at("beta"), c = al->at("gamma"), a = al->at("alpha"), dl = al->at("delta");
    std::map<std::string, NcPoly> d{
        {"alpha", NcPoly::term(al, {a, e0}) + NcPoly::term(al, {b, ep}, q(1))},
        {"beta", NcPoly::term(al, {a, em}) - NcPoly::term(al, {b, e0}, q(-2))},
        {"gamma", NcPoly::term(al, {c, e0}) + NcPoly::term(al, {dl, ep}, q(1))},
        {"delta", NcPoly::term(al, {c, em}) - NcPoly::term(al, {dl, e0}, q(-2))},
        {"ep", -((q(2) + q(0)) * NcPoly::term(al, {ep, e0}))},
        {"em", (q(-2) + q(-4)) * NcPoly::term(al, {em, e0})},
        {"e0", NcPoly::term(al, {ep, em}, q(3))},
    };
    return Calculus::make(A, omega, std::move(d), 3);
}

QpbExample group_z_qpb() {
    QpbExample e;
    HopfAlgebra h = cz();
    e.b = self_bundle(h);
    e.calcA = group_z_calculus(h);
    e.calcH = e.calcA;
    const PresentationPtr& om = e.calcA->omega();
    std::vector<PresentationPtr> pr = {om, om};
    std::map<std::string, TensorElement> imgs;
    // the graded coproduct: dg -> dg (x) g + g (x) dg
    imgs.emplace("dg", TensorElement::outer(pr, {om->gen("dg"), om->gen("g")}) +
                           TensorElement::outer(pr, {om->gen("g"), om->gen("dg")}));
    e.dc = BundleCalculus::make(e.b.coact, e.calcA, e.calcH, std::move(imgs));
    e.vert = make_vertical(e.calcH);
    std::vector<PresentationPtr> AA = {e.b.A, e.b.A};
    e.coframe[om->alphabet()->at("dg")] =
        TensorElement::outer(AA, {e.b.A->one(), e.b.A->gen("g")});
    return e;
}

QpbExample torus_qpb() {
    QpbExample e;
    e.b = torus_bundle();
    e.calcA = torus_calculus(e.b.A);
    e.calcH = u1_calculus(e.b.H, 0);
    const PresentationPtr& omA = e.calcA->omega();
    const PresentationPtr& omH = e.calcH->omega();
    std::vector<PresentationPtr> pr = {omA, omH};
    // Delta^w(d a) is the differential of the coaction image a (x) t^k.
    std::map<std::string, TensorElement> imgs;
    imgs.emplace("du", TensorElement::outer(pr, {omA->gen("du"), omH->gen("t")}) +
                           TensorElement::outer(pr, {omA->gen("u"), omH->gen("dt")}));
    imgs.emplace("dv", TensorElement::outer(pr, {omA->gen("dv"), omH->gen("t^-1")}) +
                           TensorElement::outer(
                               pr, {omA->gen("v"), e.calcH->d(e.calcH->lift(e.b.H.P->gen("t^-1")))}));
    e.dc = BundleCalculus::make(e.b.coact, e.calcA, e.calcH, std::move(imgs));
    e.vert = make_vertical(e.calcH);
    std::vector<PresentationPtr> AA = {e.b.A, e.b.A};
    e.coframe[omA->alphabet()->at("du")] =
        TensorElement::outer(AA, {e.b.A->one(), e.b.A->gen("u")});
    e.coframe[omA->alphabet()->at("dv")] =
        TensorElement::outer(AA, {e.b.A->one(), e.b.A->gen("v")});
    return e;
}

QpbExample qsu2_qpb() {
    QpbExample e;
    e.b = qsu2_bundle();
    e.calcA = qsu2_calculus(e.b.A);
    e.calcH = u1_calculus(e.b.H, -2);
    const PresentationPtr& omA = e.calcA->omega();
    const PresentationPtr& omH = e.calcH->omega();
    std::vector<PresentationPtr> pr = {omA, omH};
    auto hpow = [&](const std::string& g, int k) {
        NcPoly h = omH->one();
        for (int i = 0; i < k; ++i) h = h * omH->gen(g);
        return h;
    };
    std::map<std::string, TensorElement> imgs;
    imgs.emplace("ep", TensorElement::outer(pr, {omA->gen("ep"), hpow("t", 2)}));
    imgs.emplace("em", TensorElement::outer(pr, {omA->gen("em"), hpow("t^-1", 2)}));
    imgs.emplace("e0", TensorElement::outer(pr, {omA->gen("e0"), omH->one()}) +
                           TensorElement::outer(pr, {omA->one(), omH->gen("t^-1") * omH->gen("dt")}));
    e.dc = BundleCalculus::make(e.b.coact, e.calcA, e.calcH, std::move(imgs));
    e.vert = make_vertical(e.calcH);
    std::vector<PresentationPtr> AA = {e.b.A, e.b.A};
    auto q = [](int k) { return ParamScalar::q(k); };
    auto pr2 = [&](const std::string& x, const std::string& y) {
        return TensorElement::outer(AA, {e.b.A->gen(x), e.b.A->gen(y)});
    };
    // e+ = q^-1 alpha d(gamma) - q^-2 gamma d(alpha), e- = delta d(beta) -
    // q beta d(delta), e0 = delta d(alpha) - q beta d(gamma).
    e.coframe[omA->alphabet()->at("ep")] =
        q(-1) * pr2("alpha", "gamma") - q(-2) * pr2("gamma", "alpha");
    e.coframe[omA->alphabet()->at("em")] = pr2("delta", "beta") - q(1) * pr2("beta", "delta");
    e.coframe[omA->alphabet()->at("e0")] = pr2("delta", "alpha") - q(1) * pr2("beta", "gamma");
    return e;
}

namespace {

// Trivial cocycle sigma = eps(h h') 1_B shared by both crossed demos.
std::function<NcPoly(const Word&, const Word&)> trivial_sigma(const PresentationPtr& B,
                                                              const StructureMapsPtr& hm) {
    return [B, hm](const Word& h, const Word& g) {
        return NcPoly::term(B->alphabet(), {}, hm->counit_word(h) * hm->counit_word(g));
    };
}

}  // namespace

CrossedCalculus smash_demo() {
    CrossedCalculus c;
    auto balph = std::make_shared<Alphabet>();
    balph->add("x");
    c.data.B = Presentation::make(balph, {});
    HopfAlgebra h = ou1();
    c.data.hmaps = h.maps;

    auto oal = std::make_shared<Alphabet>();
    int x = oal->add("x");
    int dx = oal->add("dx", false, 0, Kind::Form);
    AlphabetPtr al = oal;
    auto omega = Presentation::make(
        al, {swap_rule(al, dx, x, ParamScalar::one()), kill_rule(al, dx, dx)});
    std::map<std::string, NcPoly> d{{"x", NcPoly::gen(al, dx)}, {"dx", NcPoly::zero(al)}};
    c.calcB = Calculus::make(c.data.B, omega, std::move(d), 2);
    c.calcH = u1_calculus(h, -1);

    PresentationPtr B = c.data.B;
    StructureMapsPtr hm = h.maps;
    c.data.measure = [B, hm](const Word& hw, const Word& bw) {
        return NcPoly::term(B->alphabet(), bw, hm->counit_word(hw));
    };
    c.data.sigma = trivial_sigma(B, hm);
    c.data.sigma_inv = c.data.sigma;
    PresentationPtr omB = c.calcB->omega();
    c.form_act = [omB, hm](const Word& hw, const Word& ww) {
        return NcPoly::term(omB->alphabet(), ww, hm->counit_word(hw));
    };
    return c;
}

CrossedCalculus crossed_demo() {
    CrossedCalculus c;
    auto balph = std::make_shared<Alphabet>();
    balph->add("w", true, 1);
    c.data.B = Presentation::make(balph, {});
    HopfAlgebra h = ou1();
    c.data.hmaps = h.maps;

    auto oal = std::make_shared<Alphabet>();
    int w = oal->add("w", true, 1);
    int wi = oal->inverse_of(w);
    int dw = oal->add("dw", false, 1, Kind::Form);
    AlphabetPtr al = oal;
    auto omega = Presentation::make(al, {
                                            swap_rule(al, dw, w, ParamScalar::one()),
                                            swap_rule(al, dw, wi, ParamScalar::one()),
                                            kill_rule(al, dw, dw),
                                        });
    std::map<std::string, NcPoly> d{
        {"w", NcPoly::gen(al, dw)},
        {"w^-1", NcPoly::term(al, {wi, wi, dw}, -ParamScalar::one())},
        {"dw", NcPoly::zero(al)},
    };
    c.calcB = Calculus::make(c.data.B, omega, std::move(d), 2);
    c.calcH = u1_calculus(h, 0);

    PresentationPtr B = c.data.B;
    PresentationPtr H = h.P;
    c.data.measure = [B, H](const Word& hw, const Word& bw) {
        int k = word_weight(*H->alphabet(), hw) * word_weight(*B->alphabet(), bw);
        return NcPoly::term(B->alphabet(), bw, ParamScalar::l(k));
    };
    c.data.sigma = trivial_sigma(B, h.maps);
    c.data.sigma_inv = c.data.sigma;
    PresentationPtr omB = c.calcB->omega();
    c.form_act = [omB, H](const Word& hw, const Word& ww) {
        int k = word_weight(*H->alphabet(), hw) * word_weight(*omB->alphabet(), ww);
        return NcPoly::term(omB->alphabet(), ww, ParamScalar::l(k));
    };
    return c;
}

Example load_example(const std::string& name) {
    Example ex;
    ex.name = name;
    if (name == "group_z") {
        ex.qpb = group_z_qpb();
        ex.default_deg = 1;
    } else if (name == "torus") {
        ex.qpb = torus_qpb();
    } else if (name == "qsu2_hopf") {
        ex.qpb = qsu2_qpb();
        ex.default_len = 3;  // the 3D calculus suite is exact but large at 4
        ex.default_deg = 3;
    } else if (name == "smash_demo") {
        ex.crossed = smash_demo();
        ex.default_len = 3;
    } else if (name == "crossed_demo") {
        ex.crossed = crossed_demo();
        ex.default_len = 3;
    } else {
        throw UnknownExample(name);
    }
    if (ex.qpb) {
        ex.calc = ex.qpb->calcA;
        ex.algebra = ex.calc->omega();
    } else {
        ex.calc = ex.crossed->calcB;
        ex.algebra = ex.calc->omega();
    }
    return ex;
}

}  // namespace qpb::catalog
