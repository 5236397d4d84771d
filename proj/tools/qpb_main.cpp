// qpb: exact symbolic verification of quantum-principal-bundle structure on
// the catalog examples, plus a small expression/presentation-file toolbox.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qpb/parse.hpp"
#include "qpb/report.hpp"

namespace {

using namespace qpb;

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& s, const std::string& output) {
    if (output.empty()) {
        std::cout << s;
        return;
    }
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + output);
    out << s;
}

// A target is either a catalog example name or a presentation-file path.
struct Target {
    std::optional<catalog::Example> ex;
    std::optional<BundleFile> file;
};

Target load_target(const std::string& name) {
    Target t;
    try {
        t.ex = catalog::load_example(name);
        return t;
    } catch (const catalog::UnknownExample&) {
    }
    t.file = read_bundle_file(slurp(name));
    return t;
}

// The presentation expressions are parsed over, and the calculus (if any)
// giving `d` and `/\` meaning.
std::pair<PresentationPtr, CalculusPtr> expression_scope(const Target& t) {
    if (t.ex) return {t.ex->algebra, t.ex->calc};
    const BundleFile& f = *t.file;
    if (f.calcA) return {f.calcA->omega(), f.calcA};
    return {f.A, nullptr};
}

struct Bounds {
    int max_len = 0, max_deg = 0;  // 0 = use the target's default
    int len(const Target& t) const {
        if (max_len > 0) return max_len;
        int env = env_int("QPB_MAX_LEN", 0);
        if (env > 0) return env;
        return t.ex ? t.ex->default_len : 3;
    }
    int deg(const Target& t) const {
        if (max_deg > 0) return max_deg;
        int env = env_int("QPB_MAX_DEG", 0);
        if (env > 0) return env;
        return t.ex ? t.ex->default_deg : 2;
    }
};

int run_check(const std::string& target, const Bounds& b, const std::string& format,
              const std::string& output) {
    Target t = load_target(target);
    Report rep;
    if (t.ex) {
        rep = run_suite(*t.ex, b.len(t), b.deg(t));
    } else {
        const BundleFile& f = *t.file;
        rep = run_presentation_checks(f.A, f.calcA, f.H, f.hmaps, f.calcH, f.coact, b.len(t));
    }
    emit(format == "json" ? rep.json() : rep.text(), output);
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of quantum principal bundles on finitely presented algebras"};
    app.require_subcommand(1);

    std::string target, expr, expr2, output;
    std::string format = "text";
    Bounds bounds;
    int degree = 1;

    auto add_common = [&](CLI::App* c, bool wants_expr) {
        c->add_option("target", target, "catalog example name or presentation file path")
            ->required();
        if (wants_expr) c->add_option("expr", expr, "expression to evaluate")->required();
        c->add_option("--max-len", bounds.max_len, "word-length truncation bound");
        c->add_option("--max-deg", bounds.max_deg, "form-degree truncation bound");
        c->add_option("--format", format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--output", output, "write the result to this path instead of stdout");
    };

    CLI::App* check = app.add_subcommand("check", "run the full verification suite");
    add_common(check, false);
    CLI::App* report = app.add_subcommand("report", "run the suite and emit the JSON report");
    add_common(report, false);
    CLI::App* nf = app.add_subcommand("nf", "normal form of an expression");
    add_common(nf, true);
    CLI::App* dcmd = app.add_subcommand("d", "differential of an expression");
    add_common(dcmd, true);
    CLI::App* wedge = app.add_subcommand("wedge", "wedge product of two expressions");
    add_common(wedge, true);
    wedge->add_option("expr2", expr2, "second factor")->required();
    CLI::App* coact = app.add_subcommand("coact", "coaction of an expression");
    add_common(coact, true);
    CLI::App* piver = app.add_subcommand("piver", "vertical projection of a form");
    add_common(piver, true);
    CLI::App* base = app.add_subcommand("base", "basis of base forms at the bounds");
    add_common(base, false);
    base->add_option("--degree", degree, "form degree of the requested basis");
    CLI::App* exp = app.add_subcommand("export", "write a catalog bundle as a presentation file");
    add_common(exp, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(target, bounds, format, output);
        if (report->parsed())
            return run_check(target, bounds, format == "text" ? "json" : format, output);

        Target t = load_target(target);
        auto [P, calc] = expression_scope(t);

        if (nf->parsed()) {
            emit(parse_expression(expr, P, calc).str() + "\n", output);
            return 0;
        }
        if (dcmd->parsed()) {
            if (!calc) throw std::runtime_error("target carries no calculus");
            emit(calc->d(parse_expression(expr, P, calc)).str() + "\n", output);
            return 0;
        }
        if (wedge->parsed()) {
            if (!calc) throw std::runtime_error("target carries no calculus");
            NcPoly a = parse_expression(expr, P, calc);
            NcPoly b = parse_expression(expr2, P, calc);
            emit(calc->wedge(a, b).str() + "\n", output);
            return 0;
        }
        if (coact->parsed()) {
            if (t.ex && t.ex->qpb) {
                NcPoly x = parse_expression(expr, P, calc);
                emit(t.ex->qpb->dc->apply(x).str() + "\n", output);
                return 0;
            }
            if (t.ex && t.ex->crossed) {
                const CrossedCalculus& c = *t.ex->crossed;
                TensorElement x = parse_tensor(expr, {c.calcB->omega(), c.calcH->omega()},
                                               {c.calcB, c.calcH});
                emit(coact_sharp(c, x).str() + "\n", output);
                return 0;
            }
            if (t.file && t.file->coact) {
                NcPoly x = parse_expression(expr, t.file->A);
                emit(t.file->coact->apply(x).str() + "\n", output);
                return 0;
            }
            throw std::runtime_error("target carries no coaction");
        }
        if (piver->parsed()) {
            if (!t.ex || !t.ex->qpb)
                throw std::runtime_error("piver needs a catalog bundle example");
            NcPoly x = parse_expression(expr, P, calc);
            emit(pi_ver(t.ex->qpb->dc, t.ex->qpb->vert, x).str() + "\n", output);
            return 0;
        }
        if (exp->parsed()) {
            if (!t.ex || !t.ex->qpb)
                throw std::runtime_error("export needs a catalog bundle example");
            const catalog::QpbExample& e = *t.ex->qpb;
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
            emit(write_bundle_file(f), output);
            return 0;
        }
        if (base->parsed()) {
            std::string out;
            if (t.ex && t.ex->qpb) {
                for (const NcPoly& p : base_forms(t.ex->qpb->dc, degree, bounds.len(t)))
                    out += p.str() + "\n";
            } else if (t.ex && t.ex->crossed) {
                for (const TensorElement& p :
                     base_forms_sharp(*t.ex->crossed, degree, bounds.len(t)))
                    out += p.str() + "\n";
            } else {
                throw std::runtime_error("base needs a catalog example");
            }
            emit(out, output);
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
