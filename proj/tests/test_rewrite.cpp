#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <qpb/linalg.hpp>
#include <qpb/presentation.hpp>

using namespace qpb;

namespace {

// Noncommutative torus O_theta(T^2): vu -> l^-1 uv plus the inverse-letter
// variants, letters ordered u < u^-1 < v < v^-1.
PresentationPtr torus() {
    auto alph = std::make_shared<Alphabet>();
    int u = alph->add("u", true, 1);
    int v = alph->add("v", true, -1);
    int ui = alph->inverse_of(u), vi = alph->inverse_of(v);
    auto P = [&](int a, int b, int le) {
        NcPoly rhs = NcPoly::term(alph, {b, a}, ParamScalar::l(le));
        return Rule{{a, b}, rhs};
    };
    return Presentation::make(alph, {
                                        P(v, u, -1),   // v u -> l^-1 u v
                                        P(v, ui, 1),   // v u^-1 -> l u^-1 v
                                        P(vi, u, 1),   // v^-1 u -> l u v^-1
                                        P(vi, ui, -1)  // v^-1 u^-1 -> l^-1 u^-1 v^-1
                                    });
}

}  // namespace

TEST_CASE("torus normal forms") {
    auto T = torus();
    auto u = T->gen("u"), v = T->gen("v");
    CHECK(T->normal_form(v * u) == ParamScalar::l(-1) * (u * v));
    CHECK(T->normal_form(u * T->gen("u^-1")) == T->one());
    // (uv)^2 = l^-1 u^2 v^2
    auto uv = u * v;
    CHECK(T->normal_form(uv * uv) == ParamScalar::l(-1) * T->normal_form(u * u * v * v));
    // idempotent
    auto p = T->normal_form(v * v * u * u);
    CHECK(T->normal_form(p) == p);
    CHECK(T->normal_form(T->zero()).is_zero());
}

TEST_CASE("torus confluence and basis") {
    auto T = torus();
    CHECK(T->check_local_confluence(6).confluent());
    auto b1 = T->basis_words(1);
    CHECK(b1.size() == 5);  // 1, u, u^-1, v, v^-1
    // normal_form is an algebra map modulo the ideal
    auto u = T->gen("u"), v = T->gen("v");
    auto p = v * u + u;
    auto r = T->gen("v^-1") * v * u;
    CHECK(T->normal_form(p * r) == T->normal_form(T->normal_form(p) * T->normal_form(r)));
}

TEST_CASE("O(U(1)) basis enumeration") {
    auto alph = std::make_shared<Alphabet>();
    alph->add("t", true);
    auto H = Presentation::make(alph, {});
    auto b = H->basis_words(2);
    CHECK(b.size() == 5);  // 1, t, t^-1, t^2, t^-2
    CHECK(H->check_local_confluence(6).confluent());
}

TEST_CASE("non-confluent presentation is reported") {
    // {ab -> 1, ba -> a} has the unresolved overlap aba
    auto alph = std::make_shared<Alphabet>();
    int a = alph->add("a");
    int b = alph->add("b");
    auto P = Presentation::make(
        alph, {Rule{{a, b}, NcPoly::one(alph)}, Rule{{b, a}, NcPoly::gen(alph, a)}});
    auto rep = P->check_local_confluence(6);
    CHECK(!rep.confluent());
}

TEST_CASE("termination orientation is validated") {
    auto alph = std::make_shared<Alphabet>();
    int a = alph->add("a");
    int b = alph->add("b");
    // a b -> b a is increasing (b a > a b in deg-lex): must be rejected
    CHECK_THROWS_AS(Presentation::make(alph, {Rule{{a, b}, NcPoly::term(alph, {b, a})}}),
                    std::logic_error);
}

TEST_CASE("free algebra basis") {
    auto alph = std::make_shared<Alphabet>();
    alph->add("x");
    auto F = Presentation::make(alph, {});
    CHECK(F->basis_words(2).size() == 3);  // 1, x, xx
}

TEST_CASE("step budget triggers NonTerminating") {
    // a b -> b a would not terminate textually; emulate a looping system with
    // a legal orientation but a tiny budget to exercise the guard.
    auto T = torus();
    auto small = Presentation::make(T->alphabet(), T->rules(), 1);
    auto v = small->gen("v"), u = small->gen("u");
    CHECK_THROWS_AS(small->normal_form(v * u * v * u), NonTerminating);
}

TEST_CASE("exact kernel computation") {
    // x0 + q x1 = 0, x1 - x2 = 0  ->  kernel span{(-q,1,1)}
    std::vector<SparseVec> rows(2);
    rows[0][0] = ParamScalar::one();
    rows[0][1] = ParamScalar::q(1);
    rows[1][1] = ParamScalar::one();
    rows[1][2] = -ParamScalar::one();
    auto K = kernel_basis(rows, 3);
    REQUIRE(K.size() == 1);
    // verify the relations directly
    CHECK(K[0][0] + ParamScalar::q(1) * K[0][1] == ParamScalar());
    CHECK(K[0][1] == K[0][2]);

    // a row whose only entries are non-monomial must be rejected
    std::vector<SparseVec> bad(1);
    bad[0][0] = ParamScalar::one() + ParamScalar::q(1);
    CHECK_THROWS_AS(kernel_basis(bad, 1), NonMonomialPivot);
}
