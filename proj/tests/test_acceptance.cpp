// The acceptance gate: every identity is checked exactly over the rational
// Laurent coefficients at desk-scale truncation bounds.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <qpb/parse.hpp>
#include <qpb/report.hpp>

using namespace qpb;

namespace {

Word W(const PresentationPtr& P, std::initializer_list<const char*> names) {
    Word w;
    for (const char* n : names) w.push_back(P->alphabet()->at(n));
    return w;
}

NcPoly T(const PresentationPtr& P, std::initializer_list<const char*> names,
         const ParamScalar& c = ParamScalar::one()) {
    return NcPoly::term(P->alphabet(), W(P, names), c);
}

TensorElement TE(const std::vector<PresentationPtr>& pr, const NcPoly& a, const NcPoly& h) {
    return TensorElement::outer(pr, {a, h});
}

NcPoly random_poly(const PresentationPtr& P, std::mt19937& rng) {
    const Alphabet& al = *P->alphabet();
    std::uniform_int_distribution<int> nterms(1, 4), wlen(0, 3), letter(0, al.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9), ex(-3, 3), coin(0, 4);
    NcPoly acc = P->zero();
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Word w;
        int k = wlen(rng);
        for (int i = 0; i < k; ++i) w.push_back(letter(rng));
        long long nn = num(rng);
        if (nn == 0) nn = 1;
        ParamScalar c = ParamScalar::monomial(Rational(nn, den(rng)), ex(rng), ex(rng));
        if (coin(rng) == 0) c += ParamScalar::monomial(Rational(num(rng)), ex(rng), ex(rng));
        acc += NcPoly::term(P->alphabet(), w, c);
    }
    return P->normal_form(acc);
}

// Mutual span containment of two finite families over word coordinates.
bool same_span(const std::vector<NcPoly>& a, const std::vector<NcPoly>& b) {
    std::map<Word, int> col;
    auto coords = [&](const NcPoly& p) {
        SparseVec v;
        for (const auto& [w, c] : p.terms()) {
            auto it = col.find(w);
            if (it == col.end()) it = col.emplace(w, static_cast<int>(col.size())).first;
            v[it->second] = c;
        }
        return v;
    };
    Echelon ea, eb;
    for (const NcPoly& p : a) ea.insert(coords(p));
    for (const NcPoly& p : b) eb.insert(coords(p));
    for (const NcPoly& p : a)
        if (!eb.contains(coords(p))) return false;
    for (const NcPoly& p : b)
        if (!ea.contains(coords(p))) return false;
    return true;
}

}  // namespace

TEST_CASE("1. Hopf axiom suite on the four catalog Hopf algebras at length 4") {
    for (auto ex : {catalog::ou1(), catalog::cz(), catalog::slq2(), catalog::qsu2()}) {
        auto rep = check_hopf_axioms(ex.P, ex.maps, 4);
        for (const auto& f : rep.failures) MESSAGE(f);
        CHECK(rep.ok());
    }
}

TEST_CASE("2. convolution algebra on C[Z]: associativity and unit at length 4") {
    auto h = catalog::cz();
    std::vector<Word> words = h.P->basis_words(4);
    std::mt19937 rng(414213);

    auto random_map = [&]() {
        std::map<Word, NcPoly> table;
        for (const Word& w : words) table[w] = random_poly(h.P, rng);
        return LinearMap::from_table(h.P, h.P, std::move(table));
    };

    for (int trial = 0; trial < 5; ++trial) {
        LinearMap f = random_map(), g = random_map(), k = random_map();
        LinearMap fg_k = convolution(convolution(f, g, h.maps), k, h.maps);
        LinearMap f_gk = convolution(f, convolution(g, k, h.maps), h.maps);
        LinearMap e = LinearMap::unit_counit(h.maps, h.P);
        LinearMap fe = convolution(f, e, h.maps), ef = convolution(e, f, h.maps);
        for (const Word& w : words) {
            CHECK(fg_k.on_word(w) == f_gk.on_word(w));
            CHECK(fe.on_word(w) == f.on_word(w));
            CHECK(ef.on_word(w) == f.on_word(w));
        }
    }
}

TEST_CASE("3. cleft/Galois suite on the noncommutative torus at length 3") {
    auto b = catalog::torus_bundle();
    REQUIRE(b.j);
    REQUIRE(b.j_inv);

    // j sends t^k to u^k and t^-k to v^k
    CHECK(b.j->on_word(W(b.H.P, {"t", "t"})) == b.A->normal_form(T(b.A, {"u", "u"})));
    CHECK(b.j->on_word(W(b.H.P, {"t^-1", "t^-1"})) == b.A->normal_form(T(b.A, {"v", "v"})));

    auto rep = check_cleaving(*b.j, *b.j_inv, b.coact, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    // chi o chi^-1 = id on A (x) H over all basis-word pairs of length <= 3
    std::vector<PresentationPtr> ah = {b.A, b.H.P};
    for (const Word& a : b.A->basis_words(3))
        for (const Word& hw : b.H.P->basis_words(3)) {
            TensorElement y = TensorElement::outer(ah, {b.A->word(a), b.H.P->word(hw)});
            TensorElement back = galois_chi(
                galois_chi_inverse_cleft(y, *b.j, *b.j_inv, b.coact), b.coact);
            CHECK(back == y);
        }

    auto trep = check_translation_map(*b.j, *b.j_inv, b.coact, 3);
    for (const auto& f : trep.failures) MESSAGE(f);
    CHECK(trep.ok());
}

TEST_CASE("4. Doi-Takeuchi data from the torus cleaving at word triples of length 2") {
    auto b = catalog::torus_bundle();
    CrossedData d = doi_takeuchi_from_cleft(*b.j, *b.j_inv, b.coact);
    auto rep = check_crossed_data(d, 2, 2);  // cocycle, twisted module, associativity
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());
    CHECK(check_doi_takeuchi_iso(d, *b.j_inv, b.coact, 2));
}

TEST_CASE("5. Woronowicz quotient triangle pi o d_u = d at length 4") {
    auto b = catalog::torus_bundle();
    auto calc = catalog::torus_calculus(b.A);
    for (const Word& w : b.A->basis_words(4)) {
        NcPoly a = b.A->word(w);
        CHECK(universal_quotient(universal_d(a, b.A), calc) == calc->d(calc->lift(a)));
    }
    auto h = catalog::cz();
    auto gcalc = catalog::group_z_calculus(h);
    for (const Word& w : h.P->basis_words(4)) {
        NcPoly a = h.P->word(w);
        CHECK(universal_quotient(universal_d(a, h.P), gcalc) == gcalc->d(gcalc->lift(a)));
    }
}

TEST_CASE("6. Maurer-Cartan equation on C[Z] at length 4") {
    auto h = catalog::cz();
    auto calc = catalog::group_z_calculus(h);
    auto om = calc->omega();
    auto pi_eps = [&](const Word& w) {
        NcPoly a = h.P->word(w);
        return a - h.maps->counit(a) * h.P->one();
    };
    auto varpi = [&](const NcPoly& p) { return maurer_cartan(p, calc, h.maps); };

    for (const Word& w : h.P->basis_words(4)) {
        NcPoly lhs = calc->d(varpi(pi_eps(w)));
        TensorElement co = h.maps->coproduct_word(w);
        NcPoly rhs = om->zero();
        for (const auto& [tup, c] : co.terms())
            rhs += -(c * om->normal_form(varpi(pi_eps(tup[0])) * varpi(pi_eps(tup[1]))));
        CHECK(lhs == om->normal_form(rhs));
    }
}

TEST_CASE("7. C[Z] maximal prolongation has no nonzero k-forms for k > 1") {
    auto h = catalog::cz();
    auto calc = catalog::group_z_calculus(h);
    auto om = calc->omega();

    // the S-wedge generator: d(g^-1) + q^-1 g^-2 dg = 0 forces dg /\ dg = 0
    CHECK(calc->d(calc->lift(h.P->gen("g^-1"))) ==
          -(ParamScalar::q(-1) * T(om, {"g^-1", "g^-1", "dg"})));
    CHECK(om->normal_form(T(om, {"dg", "dg"})).is_zero());

    auto rep = maximal_prolongation_check(calc, 4);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    // every irreducible word carries at most one form letter
    for (const Word& w : om->basis_words(4)) CHECK(word_degree(*om->alphabet(), w) <= 1);
}

TEST_CASE("8. torus completeness including ver^{1,1}(du /\\ dv)") {
    auto e = catalog::torus_qpb();
    auto omA = e.calcA->omega();
    auto omH = e.calcH->omega();
    std::vector<PresentationPtr> pr = {omA, omH};

    auto rep = check_completeness(e.dc, 4);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    CHECK(e.dc->ver(T(omA, {"du"}), 0) == TE(pr, T(omA, {"du"}), T(omH, {"t"})));
    CHECK(e.dc->ver(T(omA, {"du"}), 1) == TE(pr, T(omA, {"u"}), T(omH, {"dt"})));
    CHECK(e.dc->ver(T(omA, {"dv"}), 1) ==
          TE(pr, T(omA, {"v"}), -T(omH, {"t^-1", "t^-1", "dt"})));

    // ver^{1,1}(du /\ dv) = -d(uv) (x) t^-1 dt
    NcPoly duv = e.calcA->d(e.calcA->lift(e.b.A->gen("u") * e.b.A->gen("v")));
    CHECK(e.dc->ver(T(omA, {"du", "dv"}), 1) == TE(pr, -duv, T(omH, {"t^-1", "dt"})));

    // and the cancellation: dv /\ du = -l^-1 du /\ dv, so du dv + l dv du = 0
    CHECK(omA->normal_form(T(omA, {"dv", "du"})) ==
          -(ParamScalar::l(-1) * T(omA, {"du", "dv"})));
    NcPoly cancel = omA->normal_form(T(omA, {"du", "dv"}) +
                                     ParamScalar::l(1) * T(omA, {"dv", "du"}));
    CHECK(cancel.is_zero());
    CHECK(e.dc->ver(cancel, 1).is_zero());

    NcPoly hor1 = T(omA, {"u^-1", "du"}) + T(omA, {"v^-1", "dv"});
    CHECK(e.dc->is_horizontal(hor1));
    CHECK_FALSE(e.dc->is_horizontal(T(omA, {"du"})));
}

TEST_CASE("9. torus base calculus: degree-1 base forms are span{(uv)^k d(uv)}") {
    auto e = catalog::torus_qpb();
    auto omA = e.calcA->omega();
    auto A = e.b.A;

    std::vector<NcPoly> basis = base_forms(e.dc, 1, 4);
    CHECK(basis.size() == 4);

    NcPoly uv = A->normal_form(A->gen("u") * A->gen("v"));
    NcPoly uvi = A->normal_form(A->gen("v^-1") * A->gen("u^-1"));
    NcPoly duv = e.calcA->d(e.calcA->lift(uv));
    std::vector<NcPoly> expected;
    for (int k = -2; k <= 1; ++k) {
        NcPoly p = A->one();
        for (int i = 0; i < std::abs(k); ++i) p = A->normal_form(p * (k > 0 ? uv : uvi));
        expected.push_back(omA->normal_form(e.calcA->lift(p) * duv));
    }
    CHECK(same_span(basis, expected));
}

TEST_CASE("10. Hopf fibration completeness table") {
    auto e = catalog::qsu2_qpb();
    auto omA = e.calcA->omega();
    auto omH = e.calcH->omega();
    std::vector<PresentationPtr> pr = {omA, omH};
    auto q = [](int k) { return ParamScalar::q(k); };

    auto rep = check_completeness(e.dc, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    // ver(e+-) = 0, ver(e0) = 1 (x) t^-1 dt
    CHECK(e.dc->ver(T(omA, {"ep"}), 1).is_zero());
    CHECK(e.dc->ver(T(omA, {"em"}), 1).is_zero());
    CHECK(e.dc->ver(T(omA, {"e0"}), 1) == TE(pr, omA->one(), T(omH, {"t^-1", "dt"})));

    // ver^{1,1}(e+- /\ e0) = e+- (x) t^(+-2-1) dt
    CHECK(e.dc->ver(T(omA, {"ep", "e0"}), 1) == TE(pr, T(omA, {"ep"}), T(omH, {"t", "dt"})));
    CHECK(e.dc->ver(T(omA, {"em", "e0"}), 1) ==
          TE(pr, T(omA, {"em"}), T(omH, {"t^-1", "t^-1", "t^-1", "dt"})));

    // ver^{1,1} o d on the coframe
    CHECK(e.dc->ver(e.calcA->d(T(omA, {"e0"})), 1).is_zero());
    CHECK(e.dc->ver(e.calcA->d(T(omA, {"ep"})), 1) ==
          -(q(2) + q(0)) * TE(pr, T(omA, {"ep"}), T(omH, {"t", "dt"})));
    CHECK(e.dc->ver(e.calcA->d(T(omA, {"em"})), 1) ==
          (q(-2) + q(-4)) * TE(pr, T(omA, {"em"}), T(omH, {"t^-1", "t^-1", "t^-1", "dt"})));

    // degree 3: ver^{2,1}(e+ /\ e- /\ e0) = e+ e- (x) t^-1 dt, and d(e+ e-) dies
    CHECK(e.dc->ver(T(omA, {"ep", "em", "e0"}), 1) ==
          TE(pr, T(omA, {"ep", "em"}), T(omH, {"t^-1", "dt"})));
    CHECK(e.dc->ver(e.calcA->d(T(omA, {"ep", "em"})), 1).is_zero());
}

TEST_CASE("11. degree-1 exact sequence for both bundles, hor^2 inclusion at degree 2") {
    auto tor = catalog::torus_qpb();
    auto rep = check_exact_sequence(tor.dc, tor.vert, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    auto fib = catalog::qsu2_qpb();
    auto rep2 = check_exact_sequence(fib.dc, fib.vert, 3);
    for (const auto& f : rep2.failures) MESSAGE(f);
    CHECK(rep2.ok());
}

TEST_CASE("12. Brzezinski-Majid comparison for both bundles") {
    auto tor = catalog::torus_qpb();
    auto rep = check_bm_bundle(tor.dc, tor.coframe, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());

    auto fib = catalog::qsu2_qpb();
    auto rep2 = check_bm_bundle(fib.dc, fib.coframe, 3);
    for (const auto& f : rep2.failures) MESSAGE(f);
    CHECK(rep2.ok());
}

TEST_CASE("13. Podles relations in the SU(2) engine") {
    auto su2 = catalog::qsu2();
    auto calc = catalog::qsu2_calculus(su2.P);
    auto om = calc->omega();
    auto G = [&](const char* n) { return calc->lift(su2.P->gen(n)); };
    auto q = [](int k) { return ParamScalar::q(k); };
    auto nf = [&](const NcPoly& p) { return om->normal_form(p); };

    NcPoly x = -(q(-1) * nf(G("beta") * G("gamma")));
    NcPoly z = nf(G("gamma") * G("delta"));
    NcPoly zbar = -(q(1) * nf(G("alpha") * G("beta")));
    NcPoly dx = calc->d(x), dz = calc->d(z), dzbar = calc->d(zbar);

    CHECK(nf(G("delta") * om->gen("ep")) == nf(G("alpha") * dz + q(-1) * (G("gamma") * dx)));
    CHECK(nf(G("beta") * om->gen("ep")) ==
          nf(q(-2) * (G("gamma") * dzbar) - q(1) * (G("alpha") * dx)));
    CHECK(nf(G("alpha") * om->gen("em")) ==
          nf(q(2) * (G("beta") * dx) - q(-1) * (G("delta") * dzbar)));
    CHECK(nf(G("gamma") * om->gen("em")) == nf(-(G("delta") * dx) - q(1) * (G("beta") * dz)));
}

TEST_CASE("14. smash-product base forms equal Omega(B) (x) 1 in degrees 0-2") {
    CrossedCalculus c = catalog::smash_demo();
    auto rep = check_base_forms_sharp(c, 2, 3);
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.ok());
}

TEST_CASE("15. parser round-trip and report determinism") {
    std::mt19937 rng(161803);
    for (const char* name : {"group_z", "torus", "qsu2_hopf", "smash_demo", "crossed_demo"}) {
        catalog::Example ex = catalog::load_example(name);
        for (int i = 0; i < 100; ++i) {
            NcPoly p = random_poly(ex.algebra, rng);
            CHECK(parse_expression(p.str(), ex.algebra, ex.calc) == p);
        }
    }

    catalog::Example tor = catalog::load_example("torus");
    Report a = run_suite(tor, tor.default_len, tor.default_deg);
    Report b = run_suite(tor, tor.default_len, tor.default_deg);
    CHECK(a.ok());
    CHECK(a.json() == b.json());

    catalog::Example cd = catalog::load_example("crossed_demo");
    Report c = run_suite(cd, cd.default_len, cd.default_deg);
    Report d = run_suite(cd, cd.default_len, cd.default_deg);
    CHECK(c.ok());
    CHECK(c.json() == d.json());
}
