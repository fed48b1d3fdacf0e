#include "zopoly/modpoly.hpp"

#include <algorithm>

#include "zopoly/errors.hpp"

namespace zopoly {

ModPoly::ModPoly(std::uint64_t prime, std::vector<std::uint64_t> coeffs)
    : p(prime), c(std::move(coeffs)) {
    for (auto& v : c)
        v %= p;
    trim();
}

void ModPoly::trim() {
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

bool ModPoly::operator<(const ModPoly& o) const {
    if (degree() != o.degree())
        return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (c[i] != o.c[i])
            return c[i] < o.c[i];
    return false;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // p prime: a^(p-2)
    if (a == 0)
        throw DomainError("inverse of 0 mod p");
    std::uint64_t r = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

ModPoly mp_reduce(const IntPoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> c(f.degree() + 1);
    Int pp = p;
    for (int i = 0; i <= f.degree(); ++i) {
        Int r = f.coeff(i) % pp;
        if (r < 0)
            r += pp;
        c[i] = static_cast<std::uint64_t>(r);
    }
    ModPoly out;
    out.p = p;
    out.c = std::move(c);
    out.trim();
    return out;
}

IntPoly mp_lift(const ModPoly& f) {
    std::vector<Int> c(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        c[i] = f.c[i];
    return IntPoly(std::move(c));
}

ModPoly mp_add(const ModPoly& a, const ModPoly& b) {
    ModPoly r = a;
    if (r.c.size() < b.c.size())
        r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[i] = (r.c[i] + b.c[i]) % r.p;
    r.trim();
    return r;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b) {
    ModPoly r = a;
    if (r.c.size() < b.c.size())
        r.c.resize(b.c.size(), 0);
    for (std::size_t i = 0; i < b.c.size(); ++i)
        r.c[i] = (r.c[i] + r.p - b.c[i]) % r.p;
    r.trim();
    return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b) {
    ModPoly r;
    r.p = a.p;
    if (a.is_zero() || b.is_zero())
        return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    const std::uint64_t p = a.p;
    const std::uint64_t p2 = p * p;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0)
            continue;
        std::uint64_t ai = a.c[i];
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            std::uint64_t t = r.c[i + j] + ai * b.c[j];  // < p^2 + p^2 fits for p < 2^31
            r.c[i + j] = t >= p2 ? t - p2 : t;
        }
    }
    for (auto& v : r.c)
        v %= p;
    r.trim();
    return r;
}

ModPoly mp_scale(const ModPoly& a, std::uint64_t s) {
    ModPoly r = a;
    s %= r.p;
    for (auto& v : r.c)
        v = v * s % r.p;
    r.trim();
    return r;
}

ModPoly mp_make_monic(const ModPoly& a) {
    if (a.is_zero() || a.is_monic())
        return a;
    return mp_scale(a, mod_inverse(a.leading(), a.p));
}

std::pair<ModPoly, ModPoly> mp_divmod(const ModPoly& a, const ModPoly& b) {
    if (b.is_zero())
        throw DomainError("mod-p division by zero");
    ModPoly q, r = a;
    q.p = a.p;
    if (a.degree() < b.degree())
        return {q, r};
    const std::uint64_t p = a.p;
    std::uint64_t inv = mod_inverse(b.leading(), p);
    q.c.assign(a.degree() - b.degree() + 1, 0);
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (static_cast<int>(r.c.size()) <= i || r.c[i] == 0)
            continue;
        std::uint64_t t = r.c[i] * inv % p;
        int shift = i - b.degree();
        q.c[shift] = t;
        for (int j = 0; j <= b.degree(); ++j) {
            std::uint64_t sub = t * b.c[j] % p;
            r.c[j + shift] = (r.c[j + shift] + p - sub) % p;
        }
    }
    q.trim();
    r.trim();
    return {q, r};
}

ModPoly mp_mod(const ModPoly& a, const ModPoly& b) { return mp_divmod(a, b).second; }

ModPoly mp_gcd(const ModPoly& a, const ModPoly& b) {
    ModPoly x = a, y = b;
    while (!y.is_zero()) {
        ModPoly r = mp_mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return mp_make_monic(x);
}

ModPoly mp_derivative(const ModPoly& a) {
    ModPoly r;
    r.p = a.p;
    if (a.degree() < 1)
        return r;
    r.c.resize(a.degree());
    for (int i = 1; i <= a.degree(); ++i)
        r.c[i - 1] = a.c[i] * (static_cast<std::uint64_t>(i) % a.p) % a.p;
    r.trim();
    return r;
}

ModPoly mp_pow_mod(const ModPoly& base, const Int& e, const ModPoly& mod) {
    ModPoly r;
    r.p = base.p;
    r.c = {1};
    ModPoly b = mp_mod(base, mod);
    Int exp = e;
    while (exp > 0) {
        if (boost::multiprecision::bit_test(exp, 0))
            r = mp_mod(mp_mul(r, b), mod);
        exp >>= 1;
        if (exp > 0)
            b = mp_mod(mp_mul(b, b), mod);
    }
    return r;
}

ModPoly mp_inverse_mod(const ModPoly& a, const ModPoly& m) {
    // extended Euclid: s*a + t*m = g
    ModPoly r0 = m, r1 = mp_mod(a, m);
    ModPoly s0, s1;
    s0.p = s1.p = a.p;
    s1.c = {1};  // s0 = 0, s1 = 1 track coefficients of a
    while (!r1.is_zero()) {
        auto [q, r2] = mp_divmod(r0, r1);
        ModPoly s2 = mp_sub(s0, mp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.degree() != 0)
        throw DomainError("mp_inverse_mod: not coprime");
    return mp_mod(mp_scale(s0, mod_inverse(r0.c[0], a.p)), m);
}

namespace {

// f monic.  Standard char-p squarefree decomposition, including the
// f = g(x^p) = g(x)^p case.
void squarefree_modp(const ModPoly& f, int outer_mult,
                     std::vector<std::pair<ModPoly, int>>& out) {
    if (f.degree() < 1)
        return;
    const std::uint64_t p = f.p;
    ModPoly d = mp_derivative(f);
    if (d.is_zero()) {
        // f(x) = g(x^p) and over F_p that equals g(x)^p
        ModPoly g;
        g.p = p;
        g.c.resize(f.degree() / static_cast<int>(p) + 1);
        for (std::size_t i = 0; i < g.c.size(); ++i)
            g.c[i] = f.c[i * p];
        g.trim();
        squarefree_modp(g, outer_mult * static_cast<int>(p), out);
        return;
    }
    ModPoly a = mp_gcd(f, d);
    ModPoly b = mp_divmod(f, a).first;  // squarefree product of all distinct factors with p∤mult
    int i = 1;
    while (b.degree() >= 1) {
        ModPoly c = mp_gcd(a, b);
        ModPoly piece = mp_divmod(b, c).first;  // factors of exact multiplicity i
        if (piece.degree() >= 1)
            out.emplace_back(mp_make_monic(piece), outer_mult * i);
        a = mp_divmod(a, c).first;
        b = std::move(c);
        ++i;
    }
    if (a.degree() >= 1)  // remaining part has all multiplicities divisible by p
        squarefree_modp(a, outer_mult, out);
}

// f monic squarefree: list of (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> ddf(const ModPoly& f) {
    std::vector<std::pair<ModPoly, int>> out;
    ModPoly rem = f;
    ModPoly x;
    x.p = f.p;
    x.c = {0, 1};
    ModPoly h = x;  // x^(p^d) mod rem, maintained incrementally
    int d = 0;
    while (rem.degree() > 0) {
        ++d;
        if (rem.degree() < 2 * d) {
            out.emplace_back(rem, rem.degree());
            break;
        }
        h = mp_pow_mod(h, Int(f.p), rem);
        ModPoly g = mp_gcd(rem, mp_sub(h, x));
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            rem = mp_divmod(rem, g).first;
            h = mp_mod(h, rem);
        }
    }
    return out;
}

// deterministic enumeration of candidate splitting polynomials of degree < n
ModPoly candidate_poly(std::uint64_t p, int n, std::uint64_t counter) {
    ModPoly r;
    r.p = p;
    std::uint64_t v = counter;
    while (v > 0 && static_cast<int>(r.c.size()) < n) {
        r.c.push_back(v % p);
        v /= p;
    }
    r.trim();
    return r;
}

// f monic, product of distinct irreducibles all of degree d: split completely.
void edf(const ModPoly& f, int d, std::vector<ModPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    const std::uint64_t p = f.p;
    ModPoly one;
    one.p = p;
    one.c = {1};
    for (std::uint64_t counter = p;; ++counter) {
        ModPoly r = candidate_poly(p, f.degree(), counter);
        if (r.degree() < 1)
            continue;
        ModPoly g = mp_gcd(f, r);
        if (g.degree() == 0) {
            if (p == 2) {
                // trace map: r + r^2 + r^4 + ... + r^(2^(d-1)) mod f
                ModPoly t = r, term = r;
                for (int i = 1; i < d; ++i) {
                    term = mp_mod(mp_mul(term, term), f);
                    t = mp_add(t, term);
                }
                g = mp_gcd(f, t);
            } else {
                Int e = (boost::multiprecision::pow(Int(p), static_cast<unsigned>(d)) - 1) / 2;
                ModPoly w = mp_pow_mod(r, e, f);
                g = mp_gcd(f, mp_sub(w, one));
            }
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out);
            edf(mp_divmod(f, g).first, d, out);
            return;
        }
    }
}

} // namespace

std::vector<int> modp_factor_degrees(const ModPoly& f) {
    std::vector<int> degs;
    ModPoly g = mp_make_monic(f);
    // strip x factors
    std::size_t xe = 0;
    while (xe < g.c.size() && g.c[xe] == 0)
        ++xe;
    if (xe > 0) {
        g.c.erase(g.c.begin(), g.c.begin() + xe);
        for (std::size_t i = 0; i < xe; ++i)
            degs.push_back(1);
    }
    if (g.degree() < 1)
        return degs;
    for (auto& [prod, d] : ddf(g)) {
        int count = prod.degree() / d;
        for (int i = 0; i < count; ++i)
            degs.push_back(d);
    }
    std::sort(degs.begin(), degs.end());
    return degs;
}

ModFactorization factor_mod_p(const IntPoly& f, std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31))
        throw BadPrimeError("prime out of range");
    if (f.is_zero())
        throw DomainError("factor_mod_p of zero polynomial");
    if (f.leading() % Int(p) == 0)
        throw BadPrimeError("p divides the leading coefficient");
    ModFactorization out;
    out.p = p;
    ModPoly g = mp_reduce(f, p);
    out.lc = g.leading();
    g = mp_make_monic(g);
    // x^e factor
    std::size_t xe = 0;
    while (xe < g.c.size() && g.c[xe] == 0)
        ++xe;
    if (xe > 0) {
        g.c.erase(g.c.begin(), g.c.begin() + xe);
        ModPoly x;
        x.p = p;
        x.c = {0, 1};
        out.factors.emplace_back(x, static_cast<int>(xe));
    }
    std::vector<std::pair<ModPoly, int>> sqfree;
    squarefree_modp(g, 1, sqfree);
    for (auto& [piece, mult] : sqfree) {
        for (auto& [prod, d] : ddf(piece)) {
            std::vector<ModPoly> irr;
            edf(prod, d, irr);
            for (auto& w : irr)
                out.factors.emplace_back(std::move(w), mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) {
                  if (!(a.first == b.first))
                      return a.first < b.first;
                  return a.second < b.second;
              });
    return out;
}

} // namespace zopoly
