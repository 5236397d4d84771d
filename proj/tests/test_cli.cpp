#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <random>
#include <qpb/parse.hpp>
#include <qpb/report.hpp>

using namespace qpb;

namespace {

// A random normal-formed polynomial over P: up to four terms of word length
// up to three with rational q,l-monomial coefficients, occasionally a
// two-monomial coefficient to exercise the parenthesized rendering.
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
        if (coin(rng) == 0)
            c += ParamScalar::monomial(Rational(num(rng)), ex(rng), ex(rng));
        acc += NcPoly::term(P->alphabet(), w, c);
    }
    return P->normal_form(acc);
}

BundleFile bundle_file_of(const catalog::QpbExample& e) {
    BundleFile f;
    f.A = e.b.A;
    f.calcA = e.calcA;
    f.H = e.b.H.P;
    f.hmaps = e.b.H.maps;
    f.calcH = e.calcH;
    f.coact = e.b.coact;
    if (e.b.j && e.b.j_inv) {
        const Alphabet& hal = *f.H->alphabet();
        for (int i = 0; i < hal.size(); ++i) {
            f.cleave[hal.letter(i).name] = e.b.j->on_word({i});
            f.cleave_inv[hal.letter(i).name] = e.b.j_inv->on_word({i});
        }
    }
    return f;
}

#ifdef QPB_BIN
// Run the CLI binary, capturing stdout and the exit code.
std::pair<int, std::string> run_cli(const std::string& args) {
    std::string cmd = std::string(QPB_BIN) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

size_t count_lines(const std::string& s, const std::string& needle) {
    size_t n = 0, at = 0;
    while ((at = s.find(needle, at)) != std::string::npos) {
        ++n;
        at += needle.size();
    }
    return n;
}
#endif

}  // namespace

TEST_CASE("round-trip: render then parse is the identity on random expressions") {
    std::mt19937 rng(20260823);
    for (const char* name : {"group_z", "torus", "qsu2_hopf", "smash_demo", "crossed_demo"}) {
        catalog::Example ex = catalog::load_example(name);
        const PresentationPtr& P = ex.algebra;
        for (int i = 0; i < 100; ++i) {
            NcPoly p = random_poly(P, rng);
            NcPoly back = parse_expression(p.str(), P, ex.calc);
            CHECK(back == p);
        }
    }
}

TEST_CASE("expression grammar: precedence, d(...), wedge, and errors") {
    catalog::Example tor = catalog::load_example("torus");
    const PresentationPtr& om = tor.algebra;
    NcPoly u = om->gen("u"), v = om->gen("v");
    CHECK(parse_expression("v*u", om) == om->normal_form(v * u));
    CHECK(parse_expression("v u", om) == om->normal_form(v * u));
    CHECK(parse_expression("u^2 + 3/2*q^-1*v", om) ==
          om->normal_form(u * u + NcPoly::term(om->alphabet(), {},
                                               ParamScalar::monomial(Rational(3, 2), -1, 0)) *
                                      v));
    CHECK(parse_expression("d(u*v)", om, tor.calc) == tor.calc->d(om->normal_form(u * v)));
    CHECK(parse_expression("d(u) /\\ d(u)", om, tor.calc) == om->zero());
    CHECK(parse_expression("(u*v)^-1", om) == om->normal_form(parse_expression("v^-1*u^-1", om)));

    CHECK_THROWS_AS(parse_expression("u + ", om), SyntaxError);
    CHECK_THROWS_AS(parse_expression("u * w", om), UnknownGenerator);
    CHECK_THROWS_AS(parse_expression("d(u)", om), SyntaxError);  // no calculus supplied
    try {
        parse_expression("u * w", om);
    } catch (const UnknownGenerator& e) {
        CHECK(e.pos == 4);
    }

    // a tensor with a d(...) leg
    catalog::Example cd = catalog::load_example("crossed_demo");
    const CrossedCalculus& c = *cd.crossed;
    std::vector<PresentationPtr> pr{c.calcB->omega(), c.calcH->omega()};
    TensorElement x = parse_tensor("(d(w)|t) + q*(w|dt)", pr, {c.calcB, c.calcH});
    TensorElement y = TensorElement::outer(pr, {c.calcB->d(pr[0]->gen("w")), pr[1]->gen("t")}) +
                      ParamScalar::q(1) * TensorElement::outer(
                                              pr, {pr[0]->gen("w"), c.calcH->d(pr[1]->gen("t"))});
    CHECK(x == y.nf());
}

TEST_CASE("presentation files: write, read back, write again byte-identically") {
    for (const char* name : {"torus", "group_z", "qsu2_hopf"}) {
        catalog::Example ex = catalog::load_example(name);
        REQUIRE(ex.qpb.has_value());
        BundleFile f = bundle_file_of(*ex.qpb);
        std::string text = write_bundle_file(f);
        BundleFile g = read_bundle_file(text);
        CHECK(write_bundle_file(g) == text);

        // the read-back bundle satisfies the structural checks
        Report rep = run_presentation_checks(g.A, g.calcA, g.H, g.hmaps, g.calcH, g.coact, 3);
        for (const CheckResult& r : rep.results()) {
            INFO(name << ": " << r.id << " " << r.witness);
            CHECK(r.ok);
        }
    }
}

TEST_CASE("reports are byte-deterministic and complete") {
    catalog::Example tor = catalog::load_example("torus");
    Report a = run_suite(tor, tor.default_len, tor.default_deg);
    Report b = run_suite(tor, tor.default_len, tor.default_deg);
    CHECK(a.json() == b.json());
    CHECK(a.text() == b.text());
    CHECK(a.ok());
    CHECK(a.results().size() >= 30);
    // the JSON schema fields appear once per check
    std::string j = a.json();
    for (const char* key : {"check-id", "paper-anchor", "status", "witness"})
        CHECK(j.find(key) != std::string::npos);
}

#ifdef QPB_BIN

TEST_CASE("cli: check torus exits 0 with at least 30 passed identities") {
    auto [code, out] = run_cli("check torus");
    CHECK(code == 0);
    CHECK(count_lines(out, "[PASS]") >= 30);
    CHECK(count_lines(out, "[FAIL]") == 0);
}

TEST_CASE("cli: check qsu2_hopf --max-deg 3 exits 0") {
    auto [code, out] = run_cli("check qsu2_hopf --max-deg 3");
    CHECK(code == 0);
    CHECK(count_lines(out, "[FAIL]") == 0);
}

TEST_CASE("cli: a corrupted rule file fails naming the relation") {
    auto [ecode, text] = run_cli("export torus");
    REQUIRE(ecode == 0);
    std::string bad = text;
    std::string from = "rule v*u -> 1*l^-1*u*v;";
    size_t at = bad.find(from);
    REQUIRE(at != std::string::npos);
    bad.replace(at, from.size(), "rule v*u -> 1*l^1*u*v;");
    std::string path = "corrupted_torus.qpb";
    std::ofstream(path) << bad;
    auto [code, out] = run_cli("check " + path);
    CHECK(code == 1);
    size_t fail = out.find("[FAIL]");
    REQUIRE(fail != std::string::npos);
    // the first failure names the offending relation
    CHECK(out.substr(fail, out.find('\n', fail) - fail).find("v*u") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("cli: expression verbs print single results") {
    CHECK(run_cli("nf torus \"v*u\"") == std::pair<int, std::string>{0, "1*l^-1*u*v\n"});
    CHECK(run_cli("d torus \"u*v\"") ==
          std::pair<int, std::string>{0, "u*dv + 1*l^1*v*du\n"});
    CHECK(run_cli("wedge group_z \"q^-1*g*d(g)\" \"d(g)\"") ==
          std::pair<int, std::string>{0, "0\n"});
    CHECK(run_cli("coact torus \"d(u)\"") ==
          std::pair<int, std::string>{0, "(u | dt) + (du | t)\n"});
    CHECK(run_cli("piver torus \"d(u)\"") == std::pair<int, std::string>{0, "(u | varpi)\n"});
    auto [code, out] = run_cli("base torus --degree 1 --max-len 4");
    CHECK(code == 0);
    CHECK(count_lines(out, "\n") == 4);

    auto bad = run_cli("nf torus \"u * w\"");
    CHECK(bad.first == 2);
    auto unknown = run_cli("check no_such_example_or_file");
    CHECK(unknown.first == 2);
}

TEST_CASE("cli: json reports are byte-identical across runs") {
    auto a = run_cli("report torus");
    auto b = run_cli("report torus");
    CHECK(a.first == 0);
    CHECK(a.second == b.second);
    CHECK(a.second.find("\"status\": \"pass\"") != std::string::npos);
}

#endif
