#include "poly.hpp"

namespace qpb {

std::string word_str(const Alphabet& alph, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int run = static_cast<int>(j - i);
        const Generator& g = alph.letter(w[i]);
        std::string base = g.name;
        int exp = run;
        // x^-1 repeated k times prints as x^-k
        if (base.size() > 3 && base.compare(base.size() - 3, 3, "^-1") == 0) {
            base = base.substr(0, base.size() - 3);
            exp = -run;
        }
        if (!out.empty()) out += "*";
        out += base;
        if (exp != 1) out += "^" + std::to_string(exp);
        i = j;
    }
    return out;
}

std::string NcPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) out += " + ";
        first = false;
        std::string cs = c.str();
        bool plain_one = c.is_one();
        std::string ws = word_str(*alph_, w);
        if (plain_one && !w.empty()) {
            out += ws;
        } else if (w.empty()) {
            out += c.is_monomial() ? cs : "(" + cs + ")";
        } else {
            out += (c.is_monomial() ? cs : "(" + cs + ")") + "*" + ws;
        }
    }
    return out;
}

}  // namespace qpb
