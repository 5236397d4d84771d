#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpb/tensor.hpp>

using namespace qpb;

namespace {

PresentationPtr free_pres(std::vector<std::string> names, Kind kind = Kind::Algebra) {
    auto alph = std::make_shared<Alphabet>();
    for (auto& n : names) alph->add(n, false, 0, kind);
    return Presentation::make(alph, {});
}

}  // namespace

TEST_CASE("poly concatenation product") {
    auto P = free_pres({"u", "v"});
    auto u = P->gen("u"), v = P->gen("v");
    CHECK((u * v).str() == "u*v");
    CHECK((u + v) * u == u * u + v * u);
    CHECK(P->one() * (u + v) == u + v);
    CHECK((u * v) * v == u * (v * v));  // associativity
}

TEST_CASE("alphabet inverse letters") {
    auto alph = std::make_shared<Alphabet>();
    alph->add("u", true, 1);
    alph->add("v", true, -1);
    CHECK(alph->size() == 4);
    CHECK(alph->letter(alph->at("u^-1")).weight == -1);
    CHECK(alph->inverse_of(alph->at("u")) == alph->at("u^-1"));
    // inverse letters sort immediately after their base letter
    CHECK(alph->at("u") < alph->at("u^-1"));
    CHECK(alph->at("u^-1") < alph->at("v"));
}

TEST_CASE("tensor componentwise product and unit") {
    auto A = free_pres({"u", "v"});
    auto H = free_pres({"t"});
    std::vector<PresentationPtr> comps{A, H};
    auto ut = TensorElement::outer(comps, {A->gen("u"), H->gen("t")});
    auto v1 = TensorElement::outer(comps, {A->gen("v"), H->one()});
    CHECK((ut * v1).str() == "(u*v | t)");
    CHECK(ut * TensorElement::one(comps) == ut);
    // associativity
    auto x = TensorElement::outer(comps, {A->gen("u") + A->gen("v"), H->gen("t")});
    CHECK((ut * v1) * x == ut * (v1 * x));
}

TEST_CASE("koszul signs in graded tensor products") {
    auto OA = free_pres({"du"}, Kind::Form);
    auto OH = free_pres({"dt"}, Kind::Form);
    std::vector<PresentationPtr> comps{OA, OH};
    auto du_1 = TensorElement::outer(comps, {OA->gen("du"), OH->one()});
    auto one_dt = TensorElement::outer(comps, {OA->one(), OH->gen("dt")});
    // (du (x) 1)(1 (x) dt) = du (x) dt, but (1 (x) dt)(du (x) 1) = -du (x) dt
    CHECK((du_1 * one_dt).str() == "(du | dt)");
    CHECK(one_dt * du_1 == -(du_1 * one_dt));
}

TEST_CASE("flip") {
    auto A = free_pres({"a", "b"});
    std::vector<PresentationPtr> comps{A, A};
    auto ab = TensorElement::outer(comps, {A->gen("a"), A->gen("b")});
    CHECK(ab.flip(0).str() == "(b | a)");
    CHECK(ab.flip(0).flip(0) == ab);
    auto sym = TensorElement::one(comps);
    CHECK(sym.flip(0) == sym);
}

TEST_CASE("word rendering") {
    auto alph = std::make_shared<Alphabet>();
    alph->add("u", true);
    alph->add("du", false, 0, Kind::Form);
    auto P = Presentation::make(alph, {});
    Word w{alph->at("u"), alph->at("u"), alph->at("u^-1"), alph->at("du")};
    CHECK(word_str(*alph, w) == "u^2*u^-1*du");
    Word w2{alph->at("u^-1"), alph->at("u^-1")};
    CHECK(word_str(*alph, w2) == "u^-2");
    CHECK(word_str(*alph, {}) == "1");
}
