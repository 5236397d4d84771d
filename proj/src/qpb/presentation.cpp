#include "presentation.hpp"

#include <algorithm>
#include <deque>

namespace qpb {

Presentation::Presentation(AlphabetPtr alph, std::vector<Rule> rules, long long budget)
    : alph_(std::move(alph)), rules_(std::move(rules)), step_budget_(budget) {
    for (const auto& r : rules_) {
        if (r.lhs.empty()) throw std::logic_error("rule with empty lhs");
        max_lhs_len_ = std::max(max_lhs_len_, r.lhs.size());
        for (const auto& [w, c] : r.rhs.terms()) {
            if (!deglex_less(w, r.lhs))
                throw std::logic_error("rule not decreasing in deg-lex order: lhs " +
                                       word_str(*alph_, r.lhs) + " vs rhs word " +
                                       word_str(*alph_, w));
        }
    }
}

std::shared_ptr<Presentation> Presentation::make(AlphabetPtr alph, std::vector<Rule> rules,
                                                 long long step_budget) {
    // Cancellation rules for invertible letters, x*x^-1 -> 1 and x^-1*x -> 1.
    for (int id = 0; id < alph->size(); ++id) {
        int inv = alph->inverse_of(id);
        if (inv < 0 || inv < id) continue;
        NcPoly one = NcPoly::one(alph);
        rules.push_back({{id, inv}, one});
        rules.push_back({{inv, id}, one});
    }
    return std::shared_ptr<Presentation>(
        new Presentation(std::move(alph), std::move(rules), step_budget));
}

std::optional<std::pair<size_t, size_t>> Presentation::find_redex(const Word& w) const {
    for (size_t pos = 0; pos < w.size(); ++pos) {
        for (size_t ri = 0; ri < rules_.size(); ++ri) {
            const Word& lhs = rules_[ri].lhs;
            if (pos + lhs.size() > w.size()) continue;
            if (std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return {{pos, ri}};
        }
    }
    return std::nullopt;
}

bool Presentation::word_irreducible(const Word& w) const { return !find_redex(w); }

NcPoly Presentation::normal_form(const NcPoly& p) const {
    NcPoly out(alph_);
    std::deque<std::pair<Word, ParamScalar>> work(p.terms().begin(), p.terms().end());
    long long steps = 0;
    while (!work.empty()) {
        auto [w, c] = work.front();
        work.pop_front();
        if (c.is_zero()) continue;
        auto redex = find_redex(w);
        if (!redex) {
            out.add(w, c);
            continue;
        }
        if (++steps > step_budget_) throw NonTerminating();
        auto [pos, ri] = *redex;
        const Rule& r = rules_[ri];
        Word prefix(w.begin(), w.begin() + pos);
        Word suffix(w.begin() + pos + r.lhs.size(), w.end());
        for (const auto& [rw, rc] : r.rhs.terms()) {
            Word nw = prefix;
            nw.insert(nw.end(), rw.begin(), rw.end());
            nw.insert(nw.end(), suffix.begin(), suffix.end());
            work.emplace_back(std::move(nw), c * rc);
        }
    }
    return out;
}

OverlapReport Presentation::check_local_confluence(int max_len) const {
    OverlapReport report;
    auto resolve = [&](const Word& w, size_t pos1, size_t r1, size_t pos2, size_t r2) {
        auto apply = [&](size_t pos, size_t ri) {
            const Rule& r = rules_[ri];
            NcPoly out(alph_);
            Word prefix(w.begin(), w.begin() + pos);
            Word suffix(w.begin() + pos + r.lhs.size(), w.end());
            for (const auto& [rw, rc] : r.rhs.terms()) {
                Word nw = prefix;
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                out.add(nw, rc);
            }
            return normal_form(out);
        };
        NcPoly a = apply(pos1, r1);
        NcPoly b = apply(pos2, r2);
        if (a != b) {
            report.unresolved.push_back({"overlap " + word_str(*alph_, w) + " between rule " +
                                             std::to_string(r1) + " and rule " + std::to_string(r2),
                                         w, a, b});
        }
    };

    for (size_t i = 0; i < rules_.size(); ++i) {
        for (size_t j = 0; j < rules_.size(); ++j) {
            const Word& li = rules_[i].lhs;
            const Word& lj = rules_[j].lhs;
            // suffix of li == prefix of lj, proper overlap
            for (size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
                if (!std::equal(li.end() - k, li.end(), lj.begin())) continue;
                Word w = li;
                w.insert(w.end(), lj.begin() + k, lj.end());
                if (static_cast<int>(w.size()) > max_len) continue;
                resolve(w, 0, i, li.size() - k, j);
            }
            // lj contained strictly inside li
            if (i != j && lj.size() < li.size()) {
                for (size_t pos = 0; pos + lj.size() <= li.size(); ++pos) {
                    if (!std::equal(lj.begin(), lj.end(), li.begin() + pos)) continue;
                    if (static_cast<int>(li.size()) > max_len) continue;
                    resolve(li, 0, i, pos, j);
                }
            }
        }
    }
    return report;
}

std::vector<Word> Presentation::basis_words(int max_len) const {
    std::vector<Word> out{{}};
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (int l = 0; l < alph_->size(); ++l) {
                Word nw = w;
                nw.push_back(l);
                // prefix is irreducible, so only suffix matches can appear
                bool red = false;
                for (const auto& r : rules_) {
                    if (r.lhs.size() > nw.size()) continue;
                    if (std::equal(r.lhs.begin(), r.lhs.end(), nw.end() - r.lhs.size())) {
                        red = true;
                        break;
                    }
                }
                if (!red) next.push_back(std::move(nw));
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), deglex_less);
    return out;
}

}  // namespace qpb
