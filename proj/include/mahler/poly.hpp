#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mahler/field.hpp"

namespace mahler {

// Dense univariate polynomial over a number field, coefficients ascending.
// Canonical form: no trailing zero coefficients; the zero polynomial has an
// empty coefficient vector.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}

    Poly(FieldPtr field, std::vector<FieldElement> coeffs)
        : field_(std::move(field)), c_(std::move(coeffs)) {
        trim();
    }

    static Poly zero(const FieldPtr& f) { return Poly(f); }
    static Poly constant(const FieldPtr& f, FieldElement v) {
        return Poly(f, std::vector<FieldElement>{std::move(v)});
    }
    static Poly constant(const FieldPtr& f, const Rat& v) { return constant(f, FieldElement(f, v)); }
    static Poly one(const FieldPtr& f) { return constant(f, Rat(1)); }
    static Poly variable(const FieldPtr& f) {
        return Poly(f, {FieldElement(f, Rat(0)), FieldElement(f, Rat(1))});
    }
    // c * z^k
    static Poly monomial(const FieldPtr& f, FieldElement c, std::size_t k) {
        std::vector<FieldElement> v(k + 1, FieldElement(f, Rat(0)));
        v[k] = std::move(c);
        return Poly(f, std::move(v));
    }

    const FieldPtr& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }

    FieldElement coeff(std::size_t k) const {
        if (k < c_.size()) return c_[k];
        return FieldElement(field_, Rat(0));
    }

    const FieldElement& leading() const {
        if (c_.empty()) throw DomainError("Poly: leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == FieldElement(field_, Rat(1)); }

    // Order of vanishing at 0.
    std::size_t valuation() const {
        if (is_zero()) throw DomainError("Poly: valuation of zero polynomial");
        std::size_t v = 0;
        while (c_[v].is_zero()) ++v;
        return v;
    }

    bool operator==(const Poly& o) const { return c_ == o.c_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    Poly operator+(const Poly& o) const {
        std::vector<FieldElement> out(std::max(c_.size(), o.c_.size()), FieldElement(field_, Rat(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
        return Poly(field_, std::move(out));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero(field_);
        std::vector<FieldElement> out(c_.size() + o.c_.size() - 1, FieldElement(field_, Rat(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < o.c_.size(); ++j) {
                if (o.c_[j].is_zero()) continue;
                out[i + j] += c_[i] * o.c_[j];
            }
        }
        return Poly(field_, std::move(out));
    }

    Poly operator*(const FieldElement& s) const {
        Poly r(*this);
        for (auto& x : r.c_) x *= s;
        r.trim();
        return r;
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    // Quotient and remainder, deg(rem) < deg(divisor).
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DomainError("Poly: division by zero polynomial");
        Poly rem(*this);
        if (rem.degree() < d.degree()) return {zero(field_), rem};
        FieldElement lead_inv = d.leading().inverse();
        std::vector<FieldElement> q(static_cast<std::size_t>(rem.degree() - d.degree()) + 1,
                                    FieldElement(field_, Rat(0)));
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(rem.degree() - d.degree());
            FieldElement f = rem.leading() * lead_inv;
            q[shift] = f;
            for (std::size_t i = 0; i < d.c_.size(); ++i) rem.c_[i + shift] -= f * d.c_[i];
            rem.trim();
        }
        return {Poly(field_, std::move(q)), rem};
    }

    Poly operator/(const Poly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw DomainError("Poly: inexact division");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return *this * leading().inverse();
    }

    FieldElement eval(const FieldElement& x) const {
        FieldElement acc(field_, Rat(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Box eval_box(const Box& x, long slim_bits) const {
        Box acc = Box::point(Rat(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = (acc * x + it->embed(slim_bits)).slim(slim_bits);
        return acc;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return zero(field_);
        std::vector<FieldElement> out;
        out.reserve(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            out.push_back(c_[i] * FieldElement(field_, Rat(static_cast<long>(i))));
        return Poly(field_, std::move(out));
    }

    // p(z) -> p(z^q)
    Poly substitute_power(long q) const {
        if (q < 2) throw DomainError("substitute_power: q must be >= 2");
        if (is_zero()) return *this;
        std::vector<FieldElement> out(static_cast<std::size_t>(degree()) * static_cast<std::size_t>(q) + 1,
                                      FieldElement(field_, Rat(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i * static_cast<std::size_t>(q)] = c_[i];
        return Poly(field_, std::move(out));
    }

    // z^k * p
    Poly shifted(std::size_t k) const {
        if (is_zero()) return *this;
        std::vector<FieldElement> out(c_.size() + k, FieldElement(field_, Rat(0)));
        for (std::size_t i = 0; i < c_.size(); ++i) out[i + k] = c_[i];
        return Poly(field_, std::move(out));
    }

    // Exact order of vanishing at beta, by repeated division by (z - beta).
    std::size_t ord_at(const FieldElement& beta) const {
        if (is_zero()) throw DomainError("ord_at: order of the zero polynomial is undefined");
        Poly lin(field_, {-beta, FieldElement(field_, Rat(1))});
        Poly p(*this);
        std::size_t ord = 0;
        while (true) {
            auto [q, r] = p.divmod(lin);
            if (!r.is_zero()) return ord;
            ++ord;
            p = std::move(q);
            if (p.is_zero()) throw InconsistencyError("ord_at: exhausted a nonzero polynomial");
        }
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            std::string coef;
            bool negative = false;
            if (c_[i].is_rational()) {
                Rat v = c_[i].rational_value();
                negative = v < 0;
                Rat a = abs(v);
                if (a != 1 || i == 0) coef = rat_to_string(a);
            } else {
                coef = "(" + c_[i].to_string() + ")";
            }
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            out += coef;
            if (i > 0) {
                if (!coef.empty()) out += "*";
                out += "z";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    FieldPtr field_;
    std::vector<FieldElement> c_;
};

inline Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

inline Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
    Poly g = gcd(a, b);
    return ((a / g) * b).monic();
}

}  // namespace mahler
