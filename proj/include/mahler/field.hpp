#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <utility>
#include <vector>

#include "mahler/interval.hpp"
#include "mahler/rational.hpp"

namespace mahler {

namespace detail {

// Minimal dense polynomial helpers over Q, ascending coefficients,
// used only for minimal-polynomial bookkeeping inside the field layer.
using RatPoly = std::vector<Rat>;

inline void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

inline Rat rp_eval(const RatPoly& p, const Rat& x) {
    Rat acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

inline Interval rp_eval(const RatPoly& p, const Interval& x, long slim_bits) {
    Interval acc{Rat(0)};
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = (acc * x + Interval(*it)).slim(slim_bits);
    return acc;
}

inline RatPoly rp_derivative(const RatPoly& p) {
    RatPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * p[i]);
    rp_trim(d);
    return d;
}

inline RatPoly rp_scale(RatPoly p, const Rat& c) {
    for (auto& x : p) x *= c;
    return p;
}

// Remainder of a by b, b nonzero.
inline RatPoly rp_rem(RatPoly a, const RatPoly& b) {
    rp_trim(a);
    while (rp_deg(a) >= rp_deg(b) && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        rp_trim(a);
    }
    return a;
}

inline RatPoly rp_monic(RatPoly p) {
    rp_trim(p);
    if (p.empty()) return p;
    Rat lead = p.back();
    for (auto& c : p) c /= lead;
    return p;
}

inline RatPoly rp_gcd(RatPoly a, RatPoly b) {
    rp_trim(a);
    rp_trim(b);
    while (!b.empty()) {
        RatPoly r = rp_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return rp_monic(a);
}

inline std::string rp_to_string(const RatPoly& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (int i = rp_deg(p); i >= 0; --i) {
        const Rat& c = p[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rat a = abs(c);
        if (out.empty())
            out += (c < 0) ? "-" : "";
        else
            out += (c < 0) ? " - " : " + ";
        bool unit = (a == 1) && i > 0;
        if (!unit) out += rat_to_string(a);
        if (i > 0) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

inline int rat_sign(const Rat& x) { return sgn(x); }

// Sturm chain of a squarefree polynomial.
inline std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain;
    chain.push_back(p);
    chain.push_back(rp_derivative(p));
    while (!chain.back().empty()) {
        RatPoly r = rp_rem(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        rp_trim(r);
        if (r.empty()) break;
        chain.push_back(std::move(r));
    }
    return chain;
}

inline int sturm_variations(const std::vector<RatPoly>& chain, const Rat& x) {
    int vars = 0, prev = 0;
    for (const auto& f : chain) {
        int s = rat_sign(rp_eval(f, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++vars;
        prev = s;
    }
    return vars;
}

// Number of distinct real roots in (a, b].
inline int sturm_count(const std::vector<RatPoly>& chain, const Rat& a, const Rat& b) {
    return sturm_variations(chain, a) - sturm_variations(chain, b);
}

// ---- irreducibility over Q ----------------------------------------------

// p monic with rational coefficients -> monic integer polynomial with the
// same factorization pattern, via x -> y / m.
inline std::vector<Int> rp_to_monic_int(const RatPoly& p) {
    Int m = 1;
    for (const auto& c : p) {
        Int d = c.get_den();
        Int g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
        m = m / g * d;
    }
    int d = rp_deg(p);
    std::vector<Int> out(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
        Rat c = p[static_cast<std::size_t>(i)] * Rat(int_pow(m, static_cast<unsigned long>(d - i)));
        if (c.get_den() != 1) throw InconsistencyError("rp_to_monic_int: scaling failed");
        out[static_cast<std::size_t>(i)] = c.get_num();
    }
    return out;
}

inline std::vector<Int> divisors_of(const Int& n0, bool& complete) {
    complete = true;
    Int n = abs(n0);
    std::vector<std::pair<Int, int>> fact;
    for (Int p = 2; p * p <= n; ++p) {
        if (p > 1000000) {
            complete = false;
            break;
        }
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            fact.emplace_back(p, e);
        }
    }
    if (n > 1) fact.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : fact) {
        std::size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

// Rational roots of a monic integer polynomial are integer divisors of the
// constant term. Returns a root if one exists; `complete` reports whether
// the divisor enumeration was exhaustive.
inline std::optional<Int> integer_root(const std::vector<Int>& p, bool& complete) {
    complete = true;
    if (p.front() == 0) return Int(0);
    auto divs = divisors_of(p.front(), complete);
    auto eval = [&](const Int& x) {
        Int acc = 0;
        for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
        return acc;
    };
    for (const auto& d : divs) {
        if (eval(d) == 0) return d;
        if (eval(-d) == 0) return -d;
    }
    return std::nullopt;
}

// Quadratic-times-quadratic factorization of a monic integer quartic
// y^4 + e3 y^3 + e2 y^2 + e1 y + e0 into (y^2+a y+b)(y^2+c y+d) over Z.
inline std::optional<std::pair<std::vector<Int>, std::vector<Int>>> quartic_split(
    const std::vector<Int>& p) {
    const Int &e0 = p[0], &e1 = p[1], &e2 = p[2], &e3 = p[3];
    bool complete = true;
    auto divs = divisors_of(e0 == 0 ? Int(1) : e0, complete);
    std::vector<Int> signed_divs;
    for (const auto& d : divs) {
        signed_divs.push_back(d);
        signed_divs.push_back(-d);
    }
    for (const auto& b : signed_divs) {
        if (b == 0) continue;
        if (e0 % b != 0) continue;
        Int d = e0 / b;
        // a + c = e3, ac = e2 - b - d, ad + bc = e1
        if (d != b) {
            Int num = e1 - e3 * b;
            Int den = d - b;
            if (num % den != 0) continue;
            Int a = num / den;
            Int c = e3 - a;
            if (a * c != e2 - b - d) continue;
            return std::make_pair(std::vector<Int>{b, a, Int(1)}, std::vector<Int>{d, c, Int(1)});
        }
        // d == b: need a c = e2 - 2b with a + c = e3 and e1 = b e3
        if (e1 != b * e3) continue;
        Int disc = e3 * e3 - 4 * (e2 - 2 * b);
        if (disc < 0) continue;
        Int s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        if (s * s != disc) continue;
        if ((e3 + s) % 2 != 0) continue;
        Int a = (e3 + s) / 2;
        Int c = e3 - a;
        return std::make_pair(std::vector<Int>{b, a, Int(1)}, std::vector<Int>{b, c, Int(1)});
    }
    return std::nullopt;
}

// ---- F_p certificate for degree >= 5 -------------------------------------

using ModPoly = std::vector<long>;

inline ModPoly mod_reduce(const std::vector<Int>& p, long m) {
    ModPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        Int r = p[i] % m;
        if (r < 0) r += m;
        out[i] = r.get_si();
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

inline ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& f, long m) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = static_cast<long>(
                (static_cast<__int128>(prod[i + j]) + static_cast<__int128>(a[i]) * b[j]) % m);
    // reduce mod f (monic)
    for (std::size_t k = prod.size(); k-- > f.size() - 1;) {
        if (k < f.size() - 1) break;
        long coef = prod[k];
        if (coef == 0) continue;
        std::size_t shift = k - (f.size() - 1);
        for (std::size_t i = 0; i + 1 < f.size(); ++i) {
            __int128 v = static_cast<__int128>(prod[i + shift]) -
                         static_cast<__int128>(coef) * f[i];
            long r = static_cast<long>(v % m);
            if (r < 0) r += m;
            prod[i + shift] = r;
        }
        prod[k] = 0;
    }
    prod.resize(f.size() - 1);
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    return prod;
}

inline ModPoly mod_pow_p(ModPoly base, long p, const ModPoly& f, long m) {
    // base^p mod f, exponent = the prime m itself typically
    ModPoly result{1};
    long e = p;
    while (e > 0) {
        if (e & 1) result = mod_mul(result, base, f, m);
        base = mod_mul(base, base, f, m);
        e >>= 1;
    }
    return result;
}

inline ModPoly mod_gcd(ModPoly a, ModPoly b, long m) {
    auto inv = [&](long x) {
        long r = 1, e = m - 2, base = x;
        while (e > 0) {
            if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * base) % m);
            base = static_cast<long>((static_cast<__int128>(base) * base) % m);
            e >>= 1;
        }
        return r;
    };
    while (!b.empty()) {
        // a mod b
        long lead_inv = inv(b.back());
        while (a.size() >= b.size() && !a.empty()) {
            long f = static_cast<long>((static_cast<__int128>(a.back()) * lead_inv) % m);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) {
                __int128 v = static_cast<__int128>(a[i + shift]) - static_cast<__int128>(f) * b[i];
                long r = static_cast<long>(v % m);
                if (r < 0) r += m;
                a[i + shift] = r;
            }
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    return a;
}

// True if p (monic, integer, degree d >= 2) is certified irreducible over
// F_m for the prime m, hence irreducible over Q.
inline bool irreducible_mod_p(const std::vector<Int>& p, long m) {
    ModPoly f = mod_reduce(p, m);
    if (f.size() != p.size()) return false;  // leading coefficient vanished
    std::size_t d = f.size() - 1;
    // squarefree mod m
    ModPoly df;
    for (std::size_t i = 1; i < f.size(); ++i) {
        long c = static_cast<long>((static_cast<__int128>(f[i]) * static_cast<long>(i % m)) % m);
        df.push_back(c);
    }
    while (!df.empty() && df.back() == 0) df.pop_back();
    if (df.empty()) return false;
    if (mod_gcd(f, df, m).size() > 1) return false;
    // x^(m^k) mod f via k-fold Frobenius
    auto frob_power = [&](std::size_t k) {
        ModPoly h{0, 1};
        for (std::size_t i = 0; i < k; ++i) h = mod_pow_p(h, m, f, m);
        return h;
    };
    ModPoly x{0, 1};
    ModPoly top = frob_power(d);
    // x^(m^d) == x mod f
    ModPoly diff = top;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] - 1 + m) % m;
    while (!diff.empty() && diff.back() == 0) diff.pop_back();
    if (!diff.empty()) return false;
    for (std::size_t t = 2; t <= d; ++t) {
        if (d % t != 0) continue;
        bool t_prime = true;
        for (std::size_t u = 2; u * u <= t; ++u)
            if (t % u == 0) t_prime = false;
        if (!t_prime) continue;
        ModPoly h = frob_power(d / t);
        ModPoly g = h;
        if (g.size() < 2) g.resize(2, 0);
        g[1] = (g[1] - 1 + m) % m;
        while (!g.empty() && g.back() == 0) g.pop_back();
        if (g.empty()) return false;
        if (mod_gcd(f, g, m).size() > 1) return false;
    }
    return true;
}

}  // namespace detail

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

// A simple number field Q(theta) given by a monic irreducible minimal
// polynomial together with a real isolating interval selecting one root.
// The degree-1 case is Q itself.
class NumberField : public std::enable_shared_from_this<NumberField> {
public:
    // make_field: rejects reducible input (reporting a factor) and hints
    // that contain no root or more than one root.
    static FieldPtr make(const detail::RatPoly& minpoly, const Interval& root_hint) {
        return FieldPtr(new NumberField(minpoly, root_hint));
    }

    // The rational field, presented with minimal polynomial x.
    static FieldPtr rationals() {
        static FieldPtr q = FieldPtr(new NumberField(detail::RatPoly{Rat(0), Rat(1)}, Interval(Rat(0))));
        return q;
    }

    int degree() const { return detail::rp_deg(minpoly_); }
    const detail::RatPoly& minpoly() const { return minpoly_; }
    bool irreducibility_certified() const { return certified_; }
    const std::string& certification_note() const { return note_; }
    const Interval& initial_hint() const { return hint_; }

    // Current isolating interval, refined to width <= target.
    Interval refined_root(const Rat& target_width) const {
        std::lock_guard<std::mutex> lock(mu_);
        if (degree() == 1) return root_;
        while (root_.width() > target_width) {
            Rat mid = root_.mid();
            int s = detail::rat_sign(detail::rp_eval(minpoly_, mid));
            if (s == 0) throw InconsistencyError("number field: rational root of irreducible minpoly");
            if (s == sign_lo_)
                root_ = Interval(mid, root_.hi());
            else
                root_ = Interval(root_.lo(), mid);
        }
        return root_;
    }

    std::string describe() const {
        std::string s = detail::rp_to_string(minpoly_, "x");
        if (degree() > 1)
            s += " @ [" + rat_to_string(hint_.lo()) + ", " + rat_to_string(hint_.hi()) + "]";
        return s;
    }

    // Reduction table: x^(degree+k) mod minpoly, k = 0 .. degree-2.
    const std::vector<std::vector<Rat>>& reduction_rows() const { return reduction_; }

private:
    NumberField(detail::RatPoly minpoly, Interval root_hint)
        : minpoly_(std::move(minpoly)), hint_(root_hint), root_(root_hint) {
        detail::rp_trim(minpoly_);
        if (detail::rp_deg(minpoly_) < 1) throw DomainError("make_field: minimal polynomial must have degree >= 1");
        if (minpoly_.back() != 1) throw DomainError("make_field: minimal polynomial must be monic");
        check_irreducible();
        if (degree() == 1) {
            Rat root = -minpoly_[0];
            if (!hint_.contains(root) && !(hint_.is_point() && hint_.lo() == 0))
                throw DomainError("make_field: root hint does not contain the rational root " + rat_to_string(root));
            root_ = Interval(root);
            hint_ = root_;
            sign_lo_ = 0;
        } else {
            isolate_root();
        }
        build_reduction();
    }

    void check_irreducible() {
        using namespace detail;
        int d = rp_deg(minpoly_);
        certified_ = true;
        if (d == 1) return;
        RatPoly sq = rp_gcd(minpoly_, rp_derivative(minpoly_));
        if (rp_deg(sq) >= 1)
            throw DomainError("make_field: minimal polynomial is not squarefree; repeated factor " +
                              rp_to_string(sq, "x"));
        std::vector<Int> zp = rp_to_monic_int(minpoly_);
        bool complete = true;
        // the integer model is y^d + ...; a root y0 corresponds to x0 = y0/m
        if (auto r = integer_root(zp, complete)) {
            // report the factor in terms of x
            Rat m = 0;
            {
                // recover scale from leading relation: zp came from x -> y/m
                // minpoly_ monic => m is the denominator lcm used there
                Int mm = 1;
                for (const auto& c : minpoly_) {
                    Int den = c.get_den();
                    Int g;
                    mpz_gcd(g.get_mpz_t(), mm.get_mpz_t(), den.get_mpz_t());
                    mm = mm / g * den;
                }
                m = Rat(mm);
            }
            Rat root = Rat(*r) / m;
            throw DomainError("make_field: minimal polynomial is reducible; factor x - (" +
                              rat_to_string(root) + ")");
        }
        if (!complete) {
            certified_ = false;
            note_ = "irreducibility not certified: constant term too large for exhaustive root search";
            return;
        }
        if (d <= 3) return;
        if (d == 4) {
            if (auto split = quartic_split(zp))
                throw DomainError("make_field: minimal polynomial is reducible; quadratic factor y^2 + " +
                                  Rat(split->first[1]).get_str() + "*y + " + Rat(split->first[0]).get_str() +
                                  " in the integer model");
            return;
        }
        // degree >= 5: try to certify irreducibility modulo small primes
        static const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
        for (long p : primes) {
            if (irreducible_mod_p(zp, p)) return;
        }
        certified_ = false;
        note_ = "irreducibility not certified for degree " + std::to_string(d) +
                "; no rational root and no small-prime certificate found";
    }

    void isolate_root() {
        using namespace detail;
        auto chain = sturm_chain(minpoly_);
        if (rat_sign(rp_eval(minpoly_, root_.lo())) == 0 || rat_sign(rp_eval(minpoly_, root_.hi())) == 0)
            throw InconsistencyError("make_field: hint endpoint is a root of an irreducible polynomial");
        int count = sturm_count(chain, root_.lo(), root_.hi());
        if (count == 0) throw DomainError("make_field: root hint contains no root of the minimal polynomial");
        if (count > 1)
            throw DomainError("make_field: root hint contains " + std::to_string(count) +
                              " roots; it must isolate exactly one");
        sign_lo_ = rat_sign(rp_eval(minpoly_, root_.lo()));
        if (sign_lo_ == rat_sign(rp_eval(minpoly_, root_.hi())))
            throw InconsistencyError("make_field: isolated simple root without a sign change");
    }

    void build_reduction() {
        int d = degree();
        if (d == 1) {
            return;
        }
        // x^d = -(minpoly minus leading term)
        std::vector<Rat> cur(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -minpoly_[static_cast<std::size_t>(i)];
        reduction_.push_back(cur);
        for (int k = 1; k <= d - 2; ++k) {
            std::vector<Rat> next(static_cast<std::size_t>(d), Rat(0));
            // multiply cur by x, reduce the overflow term
            Rat top = cur[static_cast<std::size_t>(d - 1)];
            for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
            next[0] = 0;
            if (top != 0)
                for (int i = 0; i < d; ++i)
                    next[static_cast<std::size_t>(i)] += top * reduction_[0][static_cast<std::size_t>(i)];
            reduction_.push_back(next);
            cur = std::move(next);
        }
    }

    detail::RatPoly minpoly_;
    Interval hint_;
    mutable Interval root_;
    mutable std::mutex mu_;
    int sign_lo_ = 0;
    bool certified_ = true;
    std::string note_;
    std::vector<std::vector<Rat>> reduction_;
};

// An element of Q(theta), held as exact rational coordinates in the power
// basis 1, theta, ..., theta^(d-1). Arithmetic is exact; equality decidable.
class FieldElement {
public:
    FieldElement() : field_(NumberField::rationals()), c_(1, Rat(0)) {}

    explicit FieldElement(FieldPtr field)
        : field_(std::move(field)), c_(static_cast<std::size_t>(field_->degree()), Rat(0)) {}

    FieldElement(FieldPtr field, Rat rational_value) : FieldElement(std::move(field)) {
        c_[0] = std::move(rational_value);
    }

    FieldElement(FieldPtr field, std::vector<Rat> coords) : field_(std::move(field)), c_(std::move(coords)) {
        if (c_.size() != static_cast<std::size_t>(field_->degree()))
            throw DomainError("FieldElement: coordinate vector length must equal the field degree");
    }

    static FieldElement theta(const FieldPtr& field) {
        FieldElement e(field);
        if (field->degree() == 1) {
            e.c_[0] = -field->minpoly()[0];
        } else {
            e.c_[1] = 1;
        }
        return e;
    }

    const FieldPtr& field() const { return field_; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return false;
        return true;
    }

    const Rat& rational_value() const {
        if (!is_rational()) throw DomainError("FieldElement: not a rational value");
        return c_[0];
    }

    bool operator==(const FieldElement& o) const { return c_ == o.c_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    FieldElement operator-() const {
        FieldElement r(*this);
        for (auto& x : r.c_) x = -x;
        return r;
    }

    FieldElement operator+(const FieldElement& o) const {
        check_same_field(o);
        FieldElement r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
        return r;
    }

    FieldElement operator-(const FieldElement& o) const {
        check_same_field(o);
        FieldElement r(*this);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
        return r;
    }

    FieldElement operator*(const FieldElement& o) const {
        check_same_field(o);
        std::size_t d = c_.size();
        if (d == 1) return FieldElement(field_, c_[0] * o.c_[0]);
        std::vector<Rat> prod(2 * d - 1, Rat(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (c_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (o.c_[j] == 0) continue;
                prod[i + j] += c_[i] * o.c_[j];
            }
        }
        const auto& red = field_->reduction_rows();
        std::vector<Rat> out(prod.begin(), prod.begin() + static_cast<long>(d));
        for (std::size_t k = d; k < prod.size(); ++k) {
            if (prod[k] == 0) continue;
            const auto& row = red[k - d];
            for (std::size_t i = 0; i < d; ++i) out[i] += prod[k] * row[i];
        }
        return FieldElement(field_, std::move(out));
    }

    FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
    FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
    FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

    FieldElement operator*(const Rat& s) const {
        FieldElement r(*this);
        for (auto& x : r.c_) x *= s;
        return r;
    }

    // Inverse via the extended Euclidean algorithm against the minimal
    // polynomial. If the gcd is nontrivial the minimal polynomial was in
    // fact reducible, which the uncertified high-degree path can expose.
    FieldElement inverse() const {
        if (is_zero()) throw DomainError("FieldElement: inverse of zero");
        if (is_rational()) return FieldElement(field_, Rat(1) / c_[0]);
        using detail::RatPoly;
        RatPoly a = field_->minpoly();
        RatPoly b(c_.begin(), c_.end());
        detail::rp_trim(b);
        RatPoly s0{Rat(0)}, s1{Rat(1)};  // coefficients of b in the Bezout identity
        while (true) {
            // a = q*b + r
            RatPoly r = a;
            RatPoly q;
            detail::rp_trim(r);
            while (detail::rp_deg(r) >= detail::rp_deg(b) && !r.empty()) {
                Rat f = r.back() / b.back();
                std::size_t shift = r.size() - b.size();
                if (q.size() < shift + 1) q.resize(shift + 1, Rat(0));
                q[shift] += f;
                for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= f * b[i];
                detail::rp_trim(r);
            }
            if (r.empty()) break;
            // s_new = s0 - q*s1
            RatPoly qs(q.size() + s1.size(), Rat(0));
            for (std::size_t i = 0; i < q.size(); ++i)
                for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] += q[i] * s1[j];
            RatPoly s_new = s0;
            if (s_new.size() < qs.size()) s_new.resize(qs.size(), Rat(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s_new[i] -= qs[i];
            detail::rp_trim(s_new);
            a = std::move(b);
            b = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s_new);
        }
        if (detail::rp_deg(b) != 0)
            throw InconsistencyError("FieldElement: gcd with minimal polynomial is nontrivial (" +
                                     detail::rp_to_string(b, "x") + "); the field is invalid");
        Rat g = b[0];
        std::vector<Rat> out(c_.size(), Rat(0));
        for (std::size_t i = 0; i < s1.size() && i < out.size(); ++i) out[i] = s1[i] / g;
        return FieldElement(field_, std::move(out));
    }

    FieldElement operator/(const FieldElement& o) const { return *this * o.inverse(); }

    FieldElement pow(const Int& e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement base = *this;
        FieldElement acc(field_, Rat(1));
        Int k = e;
        while (k > 0) {
            if (mpz_odd_p(k.get_mpz_t())) acc *= base;
            base *= base;
            k >>= 1;
        }
        return acc;
    }

    // Certified complex enclosure of the selected embedding, of width at
    // most 2^(1-precision_bits). Exact for rational values.
    Box embed(long precision_bits) const {
        if (precision_bits < 8) precision_bits = 8;
        if (is_rational()) return Box::point(c_[0]);
        Rat target = pow2(1 - precision_bits);
        Rat root_width = field_->refined_root(target).width();
        for (int attempts = 0; attempts < 100000; ++attempts) {
            Interval th = field_->refined_root(root_width);
            detail::RatPoly p(c_.begin(), c_.end());
            Interval v = detail::rp_eval(p, th, precision_bits + 32);
            if (v.width() <= target) return Box(v);
            root_width /= 16;
        }
        throw InconsistencyError("FieldElement: embedding refinement did not converge");
    }

    Rat abs_upper(long precision_bits = 64) const {
        if (is_rational()) return abs(c_[0]);
        return embed(precision_bits).abs_upper(precision_bits);
    }

    Rat abs_lower(long precision_bits = 64) const {
        if (is_rational()) return abs(c_[0]);
        return embed(precision_bits).abs_lower(precision_bits);
    }

    // Decides |e| < 1 exactly. For a real embedding, |e| = 1 can only happen
    // at e = +-1, which is decidable coordinate-wise; otherwise interval
    // refinement separates |e| from 1 after finitely many steps.
    bool modulus_less_than_one() const {
        if (is_zero()) return true;
        if (is_rational()) return abs(c_[0]) < 1;
        FieldElement one(field_, Rat(1));
        if (*this == one || *this == -one) return false;
        for (long bits = 16;; bits *= 2) {
            Box b = embed(bits);
            if (b.abs_upper(bits) < 1) return true;
            if (b.abs_lower(bits) > 1) return false;
            if (bits > (1L << 22))
                throw InconsistencyError("modulus_less_than_one: refinement failed to separate from 1");
        }
    }

    std::string to_string() const {
        if (is_rational()) return rat_to_string(c_[0]);
        return detail::rp_to_string(detail::RatPoly(c_.begin(), c_.end()), "theta");
    }

private:
    void check_same_field(const FieldElement& o) const {
        if (field_ == o.field_) return;
        if (field_->minpoly() == o.field_->minpoly() && field_->initial_hint() == o.field_->initial_hint())
            return;
        throw DomainError("FieldElement: operands belong to different fields");
    }

    FieldPtr field_;
    std::vector<Rat> c_;
};

inline FieldElement operator*(const Rat& s, const FieldElement& e) { return e * s; }

// Spec-level entry points.
inline FieldPtr make_field(const std::vector<Rat>& minpoly, const Interval& root_hint) {
    return NumberField::make(minpoly, root_hint);
}

inline Box embed(const FieldElement& e, long precision_bits) { return e.embed(precision_bits); }

inline bool modulus_less_than_one(const FieldElement& e) { return e.modulus_less_than_one(); }

}  // namespace mahler
