#pragma once

#include <map>
#include <string>
#include <utility>

#include "rational.hpp"

namespace qpb {

struct NotAUnit : std::domain_error {
    NotAUnit() : std::domain_error("ParamScalar: not a unit (only nonzero monomials are invertible)") {}
};

// Exact Laurent polynomial in the formal parameters q and l (= e^{i*theta}),
// with rational coefficients. Canonical form: no zero terms stored, so
// equality is structural. This is the coefficient ring of the whole engine.
class ParamScalar {
public:
    // (q exponent, l exponent) -> coefficient
    using Exps = std::pair<int, int>;
    using Terms = std::map<Exps, Rational>;

    ParamScalar() = default;
    ParamScalar(long long n) {
        if (n != 0) terms_[{0, 0}] = Rational(n);
    }
    ParamScalar(const Rational& r) {
        if (!r.is_zero()) terms_[{0, 0}] = r;
    }

    static ParamScalar monomial(const Rational& coeff, int qexp, int lexp) {
        ParamScalar s;
        if (!coeff.is_zero()) s.terms_[{qexp, lexp}] = coeff;
        return s;
    }
    static ParamScalar q(int e = 1) { return monomial(Rational(1), e, 0); }
    static ParamScalar l(int e = 1) { return monomial(Rational(1), 0, e); }
    static ParamScalar one() { return ParamScalar(1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == Exps{0, 0} &&
               terms_.begin()->second.is_one();
    }
    bool is_monomial() const { return terms_.size() == 1; }

    friend ParamScalar operator+(const ParamScalar& a, const ParamScalar& b) {
        ParamScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend ParamScalar operator-(const ParamScalar& a, const ParamScalar& b) {
        ParamScalar r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    ParamScalar operator-() const {
        ParamScalar r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
        ParamScalar r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return r;
    }
    ParamScalar& operator+=(const ParamScalar& b) { return *this = *this + b; }
    ParamScalar& operator-=(const ParamScalar& b) { return *this = *this - b; }
    ParamScalar& operator*=(const ParamScalar& b) { return *this = *this * b; }

    friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamScalar& a, const ParamScalar& b) { return !(a == b); }
    friend bool operator<(const ParamScalar& a, const ParamScalar& b) {
        return a.terms_ < b.terms_;
    }

    // Only monomials are units in the Laurent ring.
    ParamScalar inverse() const {
        if (terms_.size() != 1) throw NotAUnit();
        const auto& [e, c] = *terms_.begin();
        return monomial(Rational(1) / c, -e.first, -e.second);
    }
    ParamScalar div_monomial(const ParamScalar& m) const { return *this * m.inverse(); }

    // Rendering: `3/2*q^-2*l^1`, terms joined by ` + `.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += c.str();
            if (e.first != 0) out += "*q^" + std::to_string(e.first);
            if (e.second != 0) out += "*l^" + std::to_string(e.second);
        }
        return out;
    }

private:
    Terms terms_;

    void add_term(const Exps& e, const Rational& c) {
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
};

inline ParamScalar scalar_add(const ParamScalar& a, const ParamScalar& b) { return a + b; }
inline ParamScalar scalar_mul(const ParamScalar& a, const ParamScalar& b) { return a * b; }
inline ParamScalar scalar_inverse(const ParamScalar& a) { return a.inverse(); }

// Gauss q-number [n]_x evaluated at x = q^e: 1 + q^e + ... + q^{e(n-1)}.
inline ParamScalar q_number(int n, int e) {
    ParamScalar s;
    for (int i = 0; i < n; ++i) s += ParamScalar::q(e * i);
    return s;
}

}  // namespace qpb
