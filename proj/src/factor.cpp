#include "zopoly/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "zopoly/cyclotomic.hpp"
#include "zopoly/errors.hpp"
#include "zopoly/modpoly.hpp"

namespace zopoly {

namespace {

const std::uint64_t kSievePrimes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                      37, 41, 43, 47, 53, 59, 61, 67, 71, 73};
constexpr int kSievePrimeCount = 5;

// ceil(sqrt(v)) for v >= 0
Int ceil_sqrt(const Int& v) {
    Int r = boost::multiprecision::sqrt(v);
    if (r * r < v)
        ++r;
    return r;
}

// Mignotte-style bound: any factor h of g (over Z) has
// ||h||_inf <= 2^(deg g) * ||g||_2 / |lc g| * |lc h|, so the lc-adjusted
// candidates in recombination are bounded by 2^(deg g) * ||g||_2.
Int coefficient_bound(const IntPoly& g) {
    Int norm2 = 0;
    for (const Int& v : g.coeffs())
        norm2 += v * v;
    return (Int(1) << g.degree()) * ceil_sqrt(norm2);
}

struct UsablePrime {
    std::uint64_t p;
    ModPoly reduced;        // monic
    std::vector<int> degs;  // factor degrees from DDF
};

// first `count` odd primes where g stays squarefree and keeps its degree
std::vector<UsablePrime> usable_primes(const IntPoly& g, int count) {
    std::vector<UsablePrime> out;
    for (std::uint64_t p : kSievePrimes) {
        if (static_cast<int>(out.size()) >= count)
            break;
        if (g.leading() % Int(p) == 0)
            continue;
        ModPoly gp = mp_make_monic(mp_reduce(g, p));
        ModPoly d = mp_derivative(gp);
        if (d.is_zero())
            continue;
        if (mp_gcd(gp, d).degree() != 0)
            continue;
        UsablePrime up;
        up.p = p;
        up.degs = modp_factor_degrees(gp);
        up.reduced = std::move(gp);
        out.push_back(std::move(up));
    }
    return out;
}

// subset sums of factor degrees as a bitset
std::vector<std::uint64_t> achievable_degrees(const std::vector<int>& degs, int maxdeg) {
    std::vector<std::uint64_t> dp((maxdeg + 64) / 64, 0);
    dp[0] = 1;
    for (int d : degs) {
        // dp |= dp << d
        std::vector<std::uint64_t> shifted(dp.size(), 0);
        int w = d / 64, b = d % 64;
        for (int i = static_cast<int>(dp.size()) - 1; i >= 0; --i) {
            std::uint64_t v = 0;
            if (i - w >= 0) {
                v = dp[i - w] << b;
                if (b && i - w - 1 >= 0)
                    v |= dp[i - w - 1] >> (64 - b);
            }
            shifted[i] = v;
        }
        for (std::size_t i = 0; i < dp.size(); ++i)
            dp[i] |= shifted[i];
    }
    return dp;
}

// true when the sieve proves only trivial factor degrees are possible
bool sieve_proves_irreducible(const IntPoly& g, const std::vector<UsablePrime>& primes) {
    if (primes.empty())
        return false;
    int d = g.degree();
    std::vector<std::uint64_t> inter;
    bool first = true;
    for (const auto& up : primes) {
        if (up.degs.size() == 1)
            return true;  // irreducible mod p
        auto dp = achievable_degrees(up.degs, d);
        if (first) {
            inter = std::move(dp);
            first = false;
        } else {
            for (std::size_t i = 0; i < inter.size(); ++i)
                inter[i] &= dp[i];
        }
    }
    for (int i = 1; i < d; ++i)
        if (inter[i / 64] >> (i % 64) & 1)
            return false;
    return true;
}

// cpp_int value of u_i coefficients mod p^a, kept in [0, m)
Int mod_m(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0)
        r += m;
    return r;
}

Int center(const Int& v, const Int& m) {
    Int r = mod_m(v, m);
    if (2 * r > m)
        r -= m;
    return r;
}

using BigVec = std::vector<Int>;  // poly coefficients mod p^a

BigVec bigvec_of(const ModPoly& f) {
    BigVec out(f.c.size());
    for (std::size_t i = 0; i < f.c.size(); ++i)
        out[i] = f.c[i];
    return out;
}

BigVec bigvec_mul(const BigVec& a, const BigVec& b, const Int& m) {
    if (a.empty() || b.empty())
        return {};
    BigVec r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (b[j] != 0)
                r[i + j] += a[i] * b[j];
    }
    for (Int& v : r)
        v = mod_m(v, m);
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

// Linear multifactor Hensel lifting: maintains g == lc * prod(u_i) mod p^j,
// u_i monic, lifting until p^j > target.  Returns the lifted u_i (mod p^a)
// together with p^a.
struct LiftedFactors {
    std::vector<BigVec> u;
    Int modulus;
};

LiftedFactors hensel_lift(const IntPoly& g, const std::vector<ModPoly>& modular,
                          std::uint64_t p, const Int& target) {
    const std::size_t r = modular.size();
    // Bezout basis over F_p: beta_i = (lc * prod_{l != i} u_l)^{-1} mod u_i
    ModPoly lc_p;
    lc_p.p = p;
    Int lcg = mod_m(g.leading(), Int(p));
    if (lcg != 0)
        lc_p.c = {static_cast<std::uint64_t>(lcg)};
    std::vector<ModPoly> beta(r);
    for (std::size_t i = 0; i < r; ++i) {
        ModPoly prod = lc_p;
        for (std::size_t l = 0; l < r; ++l)
            if (l != i)
                prod = mp_mod(mp_mul(prod, modular[l]), modular[i]);
        beta[i] = mp_inverse_mod(prod, modular[i]);
    }

    LiftedFactors out;
    out.u.reserve(r);
    for (const auto& m : modular)
        out.u.push_back(bigvec_of(m));
    Int pj = p;  // current modulus p^j
    const Int pbig = p;
    while (pj <= target) {
        Int pj1 = pj * pbig;
        // e = (g - lc * prod u_i) / p^j mod p
        BigVec prod = {Int(1)};
        for (const auto& ui : out.u)
            prod = bigvec_mul(prod, ui, pj1);
        BigVec diff(std::max<std::size_t>(g.degree() + 1, prod.size()), Int(0));
        for (int i = 0; i <= g.degree(); ++i)
            diff[i] = g.coeff(i);
        for (std::size_t i = 0; i < prod.size(); ++i)
            diff[i] -= g.leading() * prod[i];
        ModPoly e;
        e.p = p;
        e.c.resize(diff.size());
        for (std::size_t i = 0; i < diff.size(); ++i) {
            Int q = mod_m(diff[i], pj1) / pj;  // exact: diff == 0 mod p^j
            e.c[i] = static_cast<std::uint64_t>(mod_m(q, pbig));
        }
        e.trim();
        if (!e.is_zero()) {
            for (std::size_t i = 0; i < r; ++i) {
                ModPoly delta = mp_mod(mp_mul(beta[i], e), modular[i]);
                for (std::size_t j = 0; j < delta.c.size(); ++j) {
                    Int& coef = out.u[i][j];
                    coef = mod_m(coef + pj * delta.c[j], pj1);
                }
            }
        }
        pj = pj1;
    }
    out.modulus = pj;
    return out;
}

// candidate product lc * prod_{i in S} u_i, centered mod p^a
IntPoly candidate_product(const Int& lc, const std::vector<BigVec>& u,
                          const std::vector<int>& subset, const Int& m) {
    BigVec prod = {mod_m(lc, m)};
    for (int idx : subset)
        prod = bigvec_mul(prod, u[idx], m);
    std::vector<Int> c(prod.size());
    for (std::size_t i = 0; i < prod.size(); ++i)
        c[i] = center(prod[i], m);
    return IntPoly(std::move(c));
}

// g primitive squarefree, positive lc, degree >= 1
std::vector<IntPoly> zassenhaus_squarefree(const IntPoly& g) {
    if (g.degree() == 1)
        return {g};
    auto primes = usable_primes(g, kSievePrimeCount);
    if (sieve_proves_irreducible(g, primes))
        return {g};
    if (primes.empty())
        throw NumericError("no usable prime for factorization");
    const UsablePrime* best = &primes[0];
    for (const auto& up : primes)
        if (up.degs.size() < best->degs.size())
            best = &up;
    std::uint64_t p = best->p;

    ModFactorization mf = factor_mod_p(g, p);
    std::vector<ModPoly> modular;
    for (auto& [w, mult] : mf.factors)
        for (int i = 0; i < mult; ++i)
            modular.push_back(w);
    if (modular.size() == 1)
        return {g};

    Int target = 2 * coefficient_bound(g);
    LiftedFactors lifted = hensel_lift(g, modular, p, target);

    std::vector<IntPoly> out;
    std::vector<int> active(modular.size());
    std::iota(active.begin(), active.end(), 0);
    IntPoly rem = g;

    // constant-term screen values
    auto const_term = [&](const std::vector<int>& subset) {
        Int v = mod_m(rem.leading(), lifted.modulus);
        for (int idx : subset)
            v = mod_m(v * lifted.u[idx][0], lifted.modulus);
        return center(v, lifted.modulus);
    };

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t card = 1; card * 2 <= active.size() && !progress; ++card) {
            std::vector<std::size_t> pick(card);
            std::iota(pick.begin(), pick.end(), 0);
            for (;;) {
                std::vector<int> subset(card);
                for (std::size_t i = 0; i < card; ++i)
                    subset[i] = active[pick[i]];
                Int ct = const_term(subset);
                if (ct != 0 && (rem.leading() * rem.coeff(0)) % ct == 0) {
                    IntPoly cand = candidate_product(rem.leading(), lifted.u, subset,
                                                     lifted.modulus);
                    IntPoly h = primitive_part(cand);
                    if (h.leading() < 0)
                        h = -h;
                    IntPoly q;
                    if (h.degree() >= 1 && try_exact_divide(rem, h, q)) {
                        out.push_back(h);
                        rem = q;
                        std::vector<int> next;
                        for (int idx : active)
                            if (std::find(subset.begin(), subset.end(), idx) == subset.end())
                                next.push_back(idx);
                        active = std::move(next);
                        progress = true;
                        break;
                    }
                }
                // next cardinality-card combination
                int i = static_cast<int>(card) - 1;
                while (i >= 0 && pick[i] == active.size() - card + i)
                    --i;
                if (i < 0)
                    break;
                ++pick[i];
                for (std::size_t j = i + 1; j < card; ++j)
                    pick[j] = pick[j - 1] + 1;
            }
        }
    }
    if (rem.degree() >= 1)
        out.push_back(rem);
    return out;
}

FactorEntry classify(IntPoly w, int mult) {
    FactorEntry e;
    e.multiplicity = mult;
    if (is_reciprocal(w)) {
        if (w.is_monic()) {
            if (auto m = cyclotomic_index(w)) {
                e.cls = FactorClass::ReciprocalCyclotomic;
                e.cyclotomic_m = *m;
            } else {
                e.cls = FactorClass::ReciprocalNonCyclotomic;
            }
        } else {
            e.cls = FactorClass::ReciprocalNonCyclotomic;
        }
    } else {
        e.cls = FactorClass::NonReciprocal;
    }
    e.poly = std::move(w);
    return e;
}

} // namespace

IntPoly FactorizationReport::reassemble() const {
    IntPoly r = IntPoly::constant(unit * content);
    for (const auto& e : factors)
        r *= pow(e.poly, static_cast<unsigned>(e.multiplicity));
    return r;
}

long long FactorizationReport::count_class(FactorClass c) const {
    long long n = 0;
    for (const auto& e : factors)
        if (e.cls == c)
            n += e.multiplicity;
    return n;
}

std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& f) {
    if (f.is_zero())
        throw DomainError("squarefree decomposition of zero polynomial");
    std::vector<std::pair<IntPoly, int>> out;
    if (f.degree() < 1)
        return out;
    IntPoly d = derivative(f);
    IntPoly a = gcd(f, d);
    IntPoly b = exact_divide(f, a);
    IntPoly c = exact_divide(d, a);
    int i = 1;
    while (b.degree() >= 1) {
        IntPoly d2 = c - derivative(b);
        IntPoly ai = gcd(b, d2);
        if (ai.degree() >= 1)
            out.emplace_back(ai, i);
        b = exact_divide(b, ai);
        c = exact_divide(d2, ai);
        ++i;
    }
    return out;
}

FactorizationReport factor_over_integers(const IntPoly& f) {
    if (f.is_zero())
        throw DomainError("factorization of zero polynomial");
    FactorizationReport report;
    report.unit = f.leading() > 0 ? 1 : -1;
    Int cont = content(f);
    report.content = cont;
    IntPoly g = primitive_part(f);
    if (report.unit < 0)
        g = -g;
    if (g.degree() < 1)
        return report;

    // x^e factor
    int xe = 0;
    while (g.coeff(xe) == 0)
        ++xe;
    if (xe > 0) {
        std::vector<Int> shifted(g.coeffs().begin() + xe, g.coeffs().end());
        g = IntPoly(std::move(shifted));
        report.factors.push_back(classify(IntPoly::monomial(1, 1), xe));
    }

    for (auto& [part, mult] : squarefree_decomposition(g)) {
        for (auto& w : zassenhaus_squarefree(part))
            report.factors.push_back(classify(std::move(w), mult));
    }
    std::sort(report.factors.begin(), report.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) {
                  if (a.poly != b.poly)
                      return poly_less(a.poly, b.poly);
                  return a.multiplicity < b.multiplicity;
              });
    return report;
}

bool is_irreducible(const IntPoly& f) {
    if (f.degree() < 1)
        throw DomainError("irreducibility is about non-constant polynomials");
    if (f.degree() == 1)
        return true;
    if (f.coeff(0) == 0)
        return false;  // x divides, degree >= 2
    IntPoly g = primitive_part(f);
    if (g.leading() < 0)
        g = -g;
    auto primes = usable_primes(g, kSievePrimeCount);
    if (sieve_proves_irreducible(g, primes))
        return true;
    FactorizationReport rep = factor_over_integers(g);
    return rep.factors.size() == 1 && rep.factors[0].multiplicity == 1;
}

IntPoly nonreciprocal_part(const IntPoly& f) {
    if (f.is_zero())
        throw DomainError("nonreciprocal_part of zero polynomial");
    FactorizationReport rep = factor_over_integers(f);
    IntPoly r = IntPoly::constant(rep.unit);
    for (const auto& e : rep.factors)
        if (e.cls == FactorClass::NonReciprocal)
            r *= pow(e.poly, static_cast<unsigned>(e.multiplicity));
    return r;
}

IntPoly construct_conjugate_product(const IntPoly& f) {
    SupportSet supp = support_of(f);  // validates 0,1 with f(0) = 1
    (void)supp;
    FactorizationReport rep = factor_over_integers(f);
    long long nonrecip = rep.count_class(FactorClass::NonReciprocal);
    if (nonrecip < 2)
        throw NotTwoNonReciprocalError(nonrecip,
                                       rep.count_class(FactorClass::ReciprocalCyclotomic),
                                       rep.count_class(FactorClass::ReciprocalNonCyclotomic));

    // pair up w with reciprocal(w) when both divide f
    std::map<std::vector<Int>, std::size_t> index;
    for (std::size_t i = 0; i < rep.factors.size(); ++i)
        index.emplace(rep.factors[i].poly.coeffs(), i);
    IntPoly w1 = IntPoly::constant(1);
    bool have_pair = false;
    std::vector<bool> used(rep.factors.size(), false);
    for (std::size_t i = 0; i < rep.factors.size(); ++i) {
        const auto& e = rep.factors[i];
        if (e.cls != FactorClass::NonReciprocal || used[i])
            continue;
        IntPoly conj = reciprocal(e.poly);
        if (conj.leading() < 0)
            conj = -conj;
        auto it = index.find(conj.coeffs());
        if (it == index.end())
            continue;
        // designate the smaller of the pair; take its full multiplicity
        used[i] = used[it->second] = true;
        const FactorEntry& chosen =
            poly_less(e.poly, conj) ? e : rep.factors[it->second];
        w1 *= pow(chosen.poly, static_cast<unsigned>(chosen.multiplicity));
        have_pair = true;
    }
    if (!have_pair) {
        // no paired factors: any single lone non-reciprocal irreducible
        for (const auto& e : rep.factors) {
            if (e.cls == FactorClass::NonReciprocal) {
                w1 = e.poly;
                break;
            }
        }
    }
    IntPoly w2 = exact_divide(f, w1);
    IntPoly g = w1 * reciprocal(w2);

    // the lemma's conclusions, re-checked
    if (g == f || g == reciprocal(f))
        throw ConsistencyError("conjugate product degenerated to f or its reciprocal");
    if (g.term_count() != f.term_count())
        throw ConsistencyError("conjugate product changed the term count");
    if (g * reciprocal(g) != f * reciprocal(f))
        throw ConsistencyError("conjugate product broke the autocorrelation identity");
    return g;
}

} // namespace zopoly
