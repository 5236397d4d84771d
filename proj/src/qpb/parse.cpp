#include "qpb/parse.hpp"

#include <sstream>

namespace qpb {

namespace {

enum class Tok {
    End,
    Ident,
    Num,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Bar,
    Wedge,
    Slash,
    Arrow,
    Semi,
};

struct Token {
    Tok k;
    std::string text;
    long long num = 0;
    size_t pos = 0;
};

std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t pos = i;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, src.substr(i, j - i), 0, pos});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            long long v = 0;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
                v = v * 10 + (src[j] - '0');
                ++j;
            }
            out.push_back({Tok::Num, src.substr(i, j - i), v, pos});
            i = j;
            continue;
        }
        switch (c) {
            case '+': out.push_back({Tok::Plus, "+", 0, pos}); break;
            case '*': out.push_back({Tok::Star, "*", 0, pos}); break;
            case '^': out.push_back({Tok::Caret, "^", 0, pos}); break;
            case '(': out.push_back({Tok::LParen, "(", 0, pos}); break;
            case ')': out.push_back({Tok::RParen, ")", 0, pos}); break;
            case '|': out.push_back({Tok::Bar, "|", 0, pos}); break;
            case ';': out.push_back({Tok::Semi, ";", 0, pos}); break;
            case '-':
                if (i + 1 < src.size() && src[i + 1] == '>') {
                    out.push_back({Tok::Arrow, "->", 0, pos});
                    ++i;
                } else {
                    out.push_back({Tok::Minus, "-", 0, pos});
                }
                break;
            case '/':
                if (i + 1 < src.size() && src[i + 1] == '\\') {
                    out.push_back({Tok::Wedge, "/\\", 0, pos});
                    ++i;
                } else {
                    out.push_back({Tok::Slash, "/", 0, pos});
                }
                break;
            default: throw SyntaxError(std::string("unexpected character '") + c + "'", pos);
        }
        ++i;
    }
    out.push_back({Tok::End, "", 0, src.size()});
    return out;
}

// Recursive-descent parser over a token stream; expressions are parsed
// against a supplied presentation, tensor atoms against one per leg.
class Parser {
public:
    Parser(std::vector<Token> toks, CalculusPtr calc) : toks_(std::move(toks)) {
        if (calc) calcs_.push_back(std::move(calc));
    }
    Parser(std::vector<Token> toks, std::vector<CalculusPtr> calcs)
        : toks_(std::move(toks)), calcs_(std::move(calcs)) {}

    NcPoly parse_poly(const PresentationPtr& P) {
        NcPoly e = expr(P);
        expect(Tok::End, "end of input");
        return P->normal_form(e);
    }

    TensorElement parse_tensor_element(const std::vector<PresentationPtr>& comps) {
        TensorElement e = texpr(comps);
        expect(Tok::End, "end of input");
        return e.nf();
    }

private:
    std::vector<Token> toks_;
    size_t at_ = 0;
    std::vector<CalculusPtr> calcs_;

    // the calculus whose form presentation expressions are being parsed over
    CalculusPtr calc_for(const PresentationPtr& P) const {
        for (const CalculusPtr& c : calcs_)
            if (c && c->omega() == P) return c;
        return nullptr;
    }

    const Token& peek(size_t k = 0) const { return toks_[std::min(at_ + k, toks_.size() - 1)]; }
    Token next() { return toks_[at_ == toks_.size() - 1 ? at_ : at_++]; }
    bool eat(Tok k) {
        if (peek().k != k) return false;
        next();
        return true;
    }
    void expect(Tok k, const std::string& what) {
        if (!eat(k)) throw SyntaxError("expected " + what, peek().pos);
    }

    static bool starts_factor(Tok k) {
        return k == Tok::Ident || k == Tok::Num || k == Tok::LParen;
    }

    NcPoly expr(const PresentationPtr& P) {
        NcPoly acc = term(P);
        while (true) {
            if (eat(Tok::Plus))
                acc += term(P);
            else if (peek().k == Tok::Minus) {
                // binary minus: term() consumes the sign itself
                acc += term(P);
            } else
                break;
        }
        return acc;
    }

    NcPoly term(const PresentationPtr& P) {
        bool neg = eat(Tok::Minus);
        NcPoly acc = factor(P);
        while (true) {
            if (eat(Tok::Star) || eat(Tok::Wedge)) {
                acc = acc * factor(P);
            } else if (starts_factor(peek().k)) {
                acc = acc * factor(P);  // juxtaposition
            } else
                break;
        }
        return neg ? -acc : acc;
    }

    NcPoly factor(const PresentationPtr& P) {
        NcPoly a = atom(P);
        if (eat(Tok::Caret)) a = power(P, a, exponent());
        return a;
    }

    int exponent() {
        bool neg = eat(Tok::Minus);
        if (peek().k != Tok::Num) throw SyntaxError("expected integer exponent", peek().pos);
        long long v = next().num;
        return static_cast<int>(neg ? -v : v);
    }

    NcPoly power(const PresentationPtr& P, const NcPoly& a, int k) {
        if (k >= 0) {
            NcPoly r = P->one();
            for (int i = 0; i < k; ++i) r = r * a;
            return r;
        }
        if (a.terms().size() != 1)
            throw SyntaxError("negative power of a non-monomial", peek().pos);
        const auto& [w, c] = *a.terms().begin();
        Word inv;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            int j = P->alphabet()->inverse_of(*it);
            if (j < 0)
                throw SyntaxError("negative power of a non-invertible generator", peek().pos);
            inv.push_back(j);
        }
        NcPoly b = NcPoly::term(P->alphabet(), inv, c.inverse());
        return power(P, b, -k);
    }

    NcPoly atom(const PresentationPtr& P) {
        const Token& t = peek();
        if (t.k == Tok::Num) {
            long long n = next().num;
            Rational r(n);
            if (eat(Tok::Slash)) {
                if (peek().k != Tok::Num) throw SyntaxError("expected denominator", peek().pos);
                r = r / Rational(next().num);
            }
            return NcPoly::term(P->alphabet(), {}, ParamScalar(r));
        }
        if (t.k == Tok::Ident) {
            const std::string& name = t.text;
            int id = P->alphabet()->find(name);
            if (id < 0) {
                if (name == "q") {
                    next();
                    return NcPoly::term(P->alphabet(), {}, ParamScalar::q(1));
                }
                if (name == "l") {
                    next();
                    return NcPoly::term(P->alphabet(), {}, ParamScalar::l(1));
                }
                if (name == "d" && peek(1).k == Tok::LParen) {
                    CalculusPtr calc = calc_for(P);
                    if (!calc)
                        throw SyntaxError("d(...) is only available with a calculus", t.pos);
                    next();
                    expect(Tok::LParen, "'('");
                    NcPoly inner = expr(P);
                    expect(Tok::RParen, "')'");
                    return calc->d(P->normal_form(inner));
                }
                throw UnknownGenerator(name, t.pos);
            }
            next();
            return P->gen(id);
        }
        if (t.k == Tok::LParen) {
            next();
            NcPoly e = expr(P);
            expect(Tok::RParen, "')'");
            return e;
        }
        throw SyntaxError("expected expression", t.pos);
    }

    // Is the parenthesis opening at the current token a tensor atom, i.e.
    // does it contain a '|' at depth one?
    bool paren_is_tensor() const {
        int depth = 0;
        for (size_t k = at_; k < toks_.size(); ++k) {
            Tok tk = toks_[k].k;
            if (tk == Tok::LParen) ++depth;
            if (tk == Tok::RParen && --depth == 0) return false;
            if (tk == Tok::Bar && depth == 1) return true;
            if (tk == Tok::End) break;
        }
        return false;
    }

    TensorElement texpr(const std::vector<PresentationPtr>& comps) {
        TensorElement acc = tterm(comps);
        while (true) {
            if (eat(Tok::Plus))
                acc += tterm(comps);
            else if (peek().k == Tok::Minus)
                acc += tterm(comps);
            else
                break;
        }
        return acc;
    }

    TensorElement tterm(const std::vector<PresentationPtr>& comps) {
        bool neg = eat(Tok::Minus);
        TensorElement acc = tfactor(comps);
        while (true) {
            if (eat(Tok::Star) || starts_factor(peek().k))
                acc = acc * tfactor(comps);
            else
                break;
        }
        return neg ? -acc : acc;
    }

    TensorElement tfactor(const std::vector<PresentationPtr>& comps) {
        if (peek().k == Tok::LParen && paren_is_tensor()) {
            size_t pos = peek().pos;
            next();
            std::vector<NcPoly> legs;
            for (size_t i = 0; i < comps.size(); ++i) {
                legs.push_back(expr(comps[i]));
                if (i + 1 < comps.size()) expect(Tok::Bar, "'|'");
            }
            if (peek().k == Tok::Bar) throw SyntaxError("too many tensor legs", pos);
            expect(Tok::RParen, "')'");
            return TensorElement::outer(comps, legs);
        }
        // a scalar factor: an expression over the first component whose
        // words are all empty
        NcPoly s = factor(comps.front());
        ParamScalar c;
        for (const auto& [w, wc] : s.terms()) {
            if (!w.empty())
                throw SyntaxError("non-scalar factor outside a tensor atom", peek().pos);
            c += wc;
        }
        return c * TensorElement::one(comps);
    }
};

}  // namespace

NcPoly parse_expression(const std::string& src, const PresentationPtr& P,
                        const CalculusPtr& calc) {
    return Parser(lex(src), calc).parse_poly(P);
}

TensorElement parse_tensor(const std::string& src, const std::vector<PresentationPtr>& comps,
                           const std::vector<CalculusPtr>& calcs) {
    return Parser(lex(src), calcs).parse_tensor_element(comps);
}

namespace {

struct Statement {
    std::string keyword;
    std::vector<Token> toks;  // tokens after the keyword, without the ';'
    size_t pos = 0;
};

std::vector<Statement> split_statements(const std::string& text) {
    std::vector<Token> toks = lex(text);
    std::vector<Statement> out;
    size_t i = 0;
    while (toks[i].k != Tok::End) {
        if (toks[i].k != Tok::Ident)
            throw SyntaxError("expected a declaration keyword", toks[i].pos);
        Statement s;
        s.keyword = toks[i].text;
        s.pos = toks[i].pos;
        ++i;
        while (toks[i].k != Tok::Semi && toks[i].k != Tok::End) s.toks.push_back(toks[i++]);
        if (toks[i].k != Tok::Semi) throw SyntaxError("missing ';'", toks[i].pos);
        ++i;
        s.toks.push_back({Tok::End, "", 0, toks[i].pos});
        out.push_back(std::move(s));
    }
    return out;
}

// Split `lhs -> rhs` statement bodies.
std::pair<std::vector<Token>, std::vector<Token>> split_arrow(const Statement& s) {
    std::vector<Token> lhs, rhs;
    bool seen = false;
    for (const Token& t : s.toks) {
        if (t.k == Tok::Arrow) {
            if (seen) throw SyntaxError("duplicate '->'", t.pos);
            seen = true;
            continue;
        }
        (seen ? rhs : lhs).push_back(t);
    }
    if (!seen) throw SyntaxError("missing '->' in " + s.keyword, s.pos);
    lhs.push_back({Tok::End, "", 0, s.pos});
    rhs.push_back({Tok::End, "", 0, s.pos});
    return {std::move(lhs), std::move(rhs)};
}

Word word_of(const NcPoly& p, size_t pos) {
    if (p.terms().size() != 1 || !p.terms().begin()->second.is_one())
        throw SyntaxError("expected a plain word", pos);
    return p.terms().begin()->first;
}

ParamScalar scalar_of(const NcPoly& p, size_t pos) {
    ParamScalar c;
    for (const auto& [w, wc] : p.terms()) {
        if (!w.empty()) throw SyntaxError("expected a scalar", pos);
        c += wc;
    }
    return c;
}

// One algebra/hopf section while reading.
struct SectionData {
    std::shared_ptr<Alphabet> base = std::make_shared<Alphabet>();
    std::shared_ptr<Alphabet> omega = std::make_shared<Alphabet>();
    bool has_forms = false;
    std::vector<Statement> rules, rmuls, wedges, dmaps, coproducts, counits, antipodes;
    int maxdeg = 1;

    PresentationPtr free_omega;  // for parsing rule bodies structurally

    void declare(const Statement& s) {
        size_t i = 0;
        auto want_ident = [&]() -> std::string {
            if (i >= s.toks.size() || s.toks[i].k != Tok::Ident)
                throw SyntaxError("expected a name in " + s.keyword, s.pos);
            return s.toks[i++].text;
        };
        std::string name = want_ident();
        bool inv = false;
        int weight = 0;
        while (i < s.toks.size() && s.toks[i].k != Tok::End) {
            std::string opt = want_ident();
            if (opt == "inv") {
                inv = true;
            } else if (opt == "weight") {
                bool neg = i < s.toks.size() && s.toks[i].k == Tok::Minus;
                if (neg) ++i;
                if (i >= s.toks.size() || s.toks[i].k != Tok::Num)
                    throw SyntaxError("expected a weight", s.pos);
                weight = static_cast<int>(s.toks[i++].num);
                if (neg) weight = -weight;
            } else {
                throw SyntaxError("unknown option '" + opt + "'", s.pos);
            }
        }
        if (s.keyword == "gen") {
            base->add(name, inv, weight);
            omega->add(name, inv, weight);
        } else {
            omega->add(name, inv, weight, Kind::Form);
            has_forms = true;
        }
    }
};

}  // namespace

BundleFile read_bundle_file(const std::string& text) {
    std::vector<Statement> stmts = split_statements(text);
    SectionData alg, hop;
    std::vector<Statement> coacts, cleaves, cleave_invs;
    SectionData* cur = &alg;
    bool has_hopf = false;
    for (Statement& s : stmts) {
        if (s.keyword == "algebra") {
            cur = &alg;
        } else if (s.keyword == "hopf") {
            cur = &hop;
            has_hopf = true;
        } else if (s.keyword == "gen" || s.keyword == "form") {
            cur->declare(s);
        } else if (s.keyword == "rule") {
            cur->rules.push_back(std::move(s));
        } else if (s.keyword == "rmul") {
            cur->rmuls.push_back(std::move(s));
        } else if (s.keyword == "wedge") {
            cur->wedges.push_back(std::move(s));
        } else if (s.keyword == "dmap") {
            cur->dmaps.push_back(std::move(s));
        } else if (s.keyword == "maxdeg") {
            if (s.toks.empty() || s.toks[0].k != Tok::Num)
                throw SyntaxError("expected a degree", s.pos);
            cur->maxdeg = static_cast<int>(s.toks[0].num);
        } else if (s.keyword == "coproduct") {
            hop.coproducts.push_back(std::move(s));
        } else if (s.keyword == "counit") {
            hop.counits.push_back(std::move(s));
        } else if (s.keyword == "antipode") {
            hop.antipodes.push_back(std::move(s));
        } else if (s.keyword == "coact") {
            coacts.push_back(std::move(s));
        } else if (s.keyword == "cleave") {
            cleaves.push_back(std::move(s));
        } else if (s.keyword == "cleave_inv") {
            cleave_invs.push_back(std::move(s));
        } else {
            throw SyntaxError("unknown declaration '" + s.keyword + "'", s.pos);
        }
    }

    auto build_section = [](SectionData& sec)
        -> std::pair<PresentationPtr, CalculusPtr> {
        AlphabetPtr oal = sec.omega;
        sec.free_omega = Presentation::make(oal, {});
        auto parse_rule = [&](const Statement& s) {
            auto [lt, rt] = split_arrow(s);
            Word lhs = word_of(Parser(lt, CalculusPtr()).parse_poly(sec.free_omega), s.pos);
            NcPoly rhs = Parser(rt, CalculusPtr()).parse_poly(sec.free_omega);
            return Rule{lhs, rhs};
        };
        std::vector<Rule> base_rules, omega_rules;
        const Alphabet& oa = *oal;
        for (const Statement& s : sec.rules) {
            Rule r = parse_rule(s);
            for (int32_t x : r.lhs)
                if (oa.letter(x).kind == Kind::Form)
                    throw SyntaxError("form letter in a base rule", s.pos);
            omega_rules.push_back(r);
            NcPoly rhs(std::static_pointer_cast<const Alphabet>(sec.base));
            for (const auto& [w, c] : r.rhs.terms()) {
                for (int32_t x : w)
                    if (oa.letter(x).kind == Kind::Form)
                        throw SyntaxError("form letter in a base rule", s.pos);
                rhs.add(w, c);
            }
            base_rules.push_back({r.lhs, rhs});
        }
        for (const Statement& s : sec.rmuls) omega_rules.push_back(parse_rule(s));
        for (const Statement& s : sec.wedges) omega_rules.push_back(parse_rule(s));
        PresentationPtr base = Presentation::make(sec.base, std::move(base_rules));
        CalculusPtr calc;
        if (sec.has_forms) {
            PresentationPtr omega = Presentation::make(oal, std::move(omega_rules));
            std::map<std::string, NcPoly> d;
            for (const Statement& s : sec.dmaps) {
                auto [lt, rt] = split_arrow(s);
                Word g = word_of(Parser(lt, CalculusPtr()).parse_poly(sec.free_omega), s.pos);
                if (g.size() != 1) throw SyntaxError("dmap source must be one generator", s.pos);
                d[oa.letter(g[0]).name] = omega->normal_form(Parser(rt, CalculusPtr()).parse_poly(sec.free_omega));
            }
            calc = Calculus::make(base, omega, std::move(d), sec.maxdeg);
        }
        return {base, calc};
    };

    BundleFile f;
    auto [A, calcA] = build_section(alg);
    f.A = A;
    f.calcA = calcA;
    if (has_hopf) {
        auto [H, calcH] = build_section(hop);
        f.H = H;
        f.calcH = calcH;
        std::map<std::string, TensorElement> co;
        std::map<std::string, ParamScalar> eps;
        std::map<std::string, NcPoly> s_;
        const Alphabet& ha = *H->alphabet();
        auto src_name = [&](const std::vector<Token>& lt, size_t pos) {
            Word g = word_of(Parser(lt, CalculusPtr()).parse_poly(hop.free_omega), pos);
            if (g.size() != 1) throw SyntaxError("source must be one generator", pos);
            return ha.letter(g[0]).name;
        };
        for (const Statement& s : hop.coproducts) {
            auto [lt, rt] = split_arrow(s);
            co[src_name(lt, s.pos)] = Parser(rt, CalculusPtr()).parse_tensor_element({H, H});
        }
        for (const Statement& s : hop.counits) {
            auto [lt, rt] = split_arrow(s);
            eps[src_name(lt, s.pos)] = scalar_of(Parser(rt, CalculusPtr()).parse_poly(H), s.pos);
        }
        for (const Statement& s : hop.antipodes) {
            auto [lt, rt] = split_arrow(s);
            s_[src_name(lt, s.pos)] = Parser(rt, CalculusPtr()).parse_poly(H);
        }
        f.hmaps = StructureMaps::make(H, std::move(co), std::move(eps), std::move(s_));
        if (!coacts.empty()) {
            std::map<std::string, TensorElement> imgs;
            const Alphabet& aa = *A->alphabet();
            for (const Statement& s : coacts) {
                auto [lt, rt] = split_arrow(s);
                Word g = word_of(Parser(lt, CalculusPtr()).parse_poly(alg.free_omega), s.pos);
                if (g.size() != 1) throw SyntaxError("coact source must be one generator", s.pos);
                imgs[aa.letter(g[0]).name] = Parser(rt, CalculusPtr()).parse_tensor_element({A, H});
            }
            f.coact = Coaction::make(A, f.hmaps, std::move(imgs));
        }
        for (const Statement& s : cleaves) {
            auto [lt, rt] = split_arrow(s);
            f.cleave[src_name(lt, s.pos)] = Parser(rt, CalculusPtr()).parse_poly(A);
        }
        for (const Statement& s : cleave_invs) {
            auto [lt, rt] = split_arrow(s);
            f.cleave_inv[src_name(lt, s.pos)] = Parser(rt, CalculusPtr()).parse_poly(A);
        }
    }
    return f;
}

namespace {

bool is_cancellation(const Alphabet& al, const Rule& r) {
    return r.lhs.size() == 2 && al.inverse_of(r.lhs[0]) == r.lhs[1] &&
           r.rhs.terms().size() == 1 && r.rhs.terms().begin()->first.empty() &&
           r.rhs.terms().begin()->second.is_one();
}

void write_letters(std::ostringstream& out, const Alphabet& al) {
    for (int i = 0; i < al.size(); ++i) {
        const Generator& g = al.letter(i);
        if (al.inverse_of(i) >= 0 && al.inverse_of(i) < i) continue;  // auto inverse letter
        out << (g.kind == Kind::Form ? "form " : "gen ") << g.name;
        if (g.invertible) out << " inv";
        if (g.weight != 0) out << " weight " << g.weight;
        out << ";\n";
    }
}

void write_rules(std::ostringstream& out, const PresentationPtr& P, bool forms_only) {
    const Alphabet& al = *P->alphabet();
    for (const Rule& r : P->rules()) {
        if (is_cancellation(al, r)) continue;
        int fdeg = word_degree(al, r.lhs);
        if (forms_only != (fdeg > 0)) continue;
        const char* kw = fdeg == 0 ? "rule" : fdeg == 1 ? "rmul" : "wedge";
        out << kw << " " << word_str(al, r.lhs) << " -> " << r.rhs.str() << ";\n";
    }
}

void write_calculus(std::ostringstream& out, const CalculusPtr& calc) {
    const Alphabet& al = *calc->omega()->alphabet();
    for (int i = 0; i < al.size(); ++i) {
        const Generator& g = al.letter(i);
        if (g.kind != Kind::Form) continue;
        out << "form " << g.name;
        if (g.weight != 0) out << " weight " << g.weight;
        out << ";\n";
    }
    write_rules(out, calc->omega(), true);
    for (int i = 0; i < al.size(); ++i)
        out << "dmap " << al.letter(i).name << " -> " << calc->d_word({i}).str() << ";\n";
    out << "maxdeg " << calc->max_degree() << ";\n";
}

}  // namespace

std::string write_bundle_file(const BundleFile& f) {
    std::ostringstream out;
    out << "algebra;\n";
    write_letters(out, *f.A->alphabet());
    write_rules(out, f.calcA ? f.calcA->omega() : f.A, false);
    if (f.calcA) write_calculus(out, f.calcA);
    if (f.H) {
        out << "hopf;\n";
        write_letters(out, *f.H->alphabet());
        write_rules(out, f.calcH ? f.calcH->omega() : f.H, false);
        const Alphabet& ha = *f.H->alphabet();
        for (int i = 0; i < ha.size(); ++i) {
            const std::string& n = ha.letter(i).name;
            out << "coproduct " << n << " -> " << f.hmaps->coproduct_word({i}).str() << ";\n";
            out << "counit " << n << " -> " << f.hmaps->counit_word({i}).str() << ";\n";
            out << "antipode " << n << " -> " << f.hmaps->antipode_word({i}).str() << ";\n";
        }
        if (f.calcH) write_calculus(out, f.calcH);
        if (f.coact) {
            const Alphabet& aa = *f.A->alphabet();
            for (int i = 0; i < aa.size(); ++i)
                out << "coact " << aa.letter(i).name << " -> "
                    << f.coact->apply_word({i}).str() << ";\n";
        }
        for (const auto& [n, p] : f.cleave) out << "cleave " << n << " -> " << p.str() << ";\n";
        for (const auto& [n, p] : f.cleave_inv)
            out << "cleave_inv " << n << " -> " << p.str() << ";\n";
    }
    return out.str();
}

}  // namespace qpb
