#include "zopoly/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "zopoly/errors.hpp"

namespace zopoly {

namespace {

// phi sieve, grown on demand; guarded by its own mutex.
std::vector<long long> g_phi{0, 1};
std::shared_mutex g_phi_mutex;

void grow_phi(long long upto) {
    std::unique_lock lock(g_phi_mutex);
    if (static_cast<long long>(g_phi.size()) > upto)
        return;
    std::size_t n = static_cast<std::size_t>(upto) + 1;
    std::vector<long long> phi(n);
    for (std::size_t i = 0; i < n; ++i)
        phi[i] = static_cast<long long>(i);
    for (std::size_t p = 2; p < n; ++p) {
        if (phi[p] == static_cast<long long>(p)) {  // p prime
            for (std::size_t j = p; j < n; j += p)
                phi[j] -= phi[j] / static_cast<long long>(p);
        }
    }
    g_phi = std::move(phi);
}

std::map<long long, IntPoly> g_cyclo_memo;
std::shared_mutex g_cyclo_mutex;

std::map<long long, Int> g_value2_memo;
std::shared_mutex g_value2_mutex;

} // namespace

long long euler_phi(long long m) {
    if (m < 1)
        throw DomainError("euler_phi requires m >= 1");
    {
        std::shared_lock lock(g_phi_mutex);
        if (m < static_cast<long long>(g_phi.size()))
            return g_phi[m];
    }
    long long r = m, v = m;
    for (long long p = 2; p * p <= v; ++p) {
        if (v % p == 0) {
            r -= r / p;
            while (v % p == 0)
                v /= p;
        }
    }
    if (v > 1)
        r -= r / v;
    return r;
}

int moebius(long long m) {
    if (m < 1)
        throw DomainError("moebius requires m >= 1");
    int r = 1;
    for (long long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0)
                return 0;
            r = -r;
        }
    }
    if (m > 1)
        r = -r;
    return r;
}

std::vector<long long> divisors(long long m) {
    std::vector<long long> small, large;
    for (long long d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            small.push_back(d);
            if (d != m / d)
                large.push_back(m / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

IntPoly cyclotomic_poly(long long m) {
    if (m < 1)
        throw DomainError("cyclotomic_poly requires m >= 1");
    {
        std::shared_lock lock(g_cyclo_mutex);
        auto it = g_cyclo_memo.find(m);
        if (it != g_cyclo_memo.end())
            return it->second;
    }
    // x^m - 1 divided by Phi_d for all proper divisors d
    std::vector<Int> c(static_cast<std::size_t>(m) + 1, Int(0));
    c[0] = -1;
    c.back() = 1;
    IntPoly p{std::move(c)};
    for (long long d : divisors(m))
        if (d != m)
            p = exact_divide(p, cyclotomic_poly(d));
    {
        std::unique_lock lock(g_cyclo_mutex);
        g_cyclo_memo.emplace(m, p);
    }
    return p;
}

Int cyclotomic_value(long long m, const Int& v) {
    Int num = 1, den = 1;
    for (long long d : divisors(m)) {
        int mu = moebius(m / d);
        if (mu == 0)
            continue;
        Int t = boost::multiprecision::pow(v, static_cast<unsigned>(d)) - 1;
        if (mu > 0)
            num *= t;
        else
            den *= t;
    }
    if (den == 0)  // v is a root of some x^d - 1; fall back to the polynomial
        return cyclotomic_poly(m)(v);
    return num / den;
}

namespace {
Int cyclotomic_value_at2(long long m) {
    {
        std::shared_lock lock(g_value2_mutex);
        auto it = g_value2_memo.find(m);
        if (it != g_value2_memo.end())
            return it->second;
    }
    Int v = cyclotomic_value(m, Int(2));
    std::unique_lock lock(g_value2_mutex);
    g_value2_memo.emplace(m, v);
    return v;
}
} // namespace

IntPoly CyclotomicFactorization::reassemble() const {
    IntPoly r = part;
    for (auto& [m, mult] : factors)
        r *= pow(cyclotomic_poly(m), static_cast<unsigned>(mult));
    return r;
}

bool divides_cyclotomic(const SupportSet& s, long long m) {
    if (m < 1)
        throw DomainError("divides_cyclotomic requires m >= 1");
    // x^m == 1 mod Phi_m, so reduce each exponent mod m first.
    std::vector<Int> reduced(static_cast<std::size_t>(m), Int(0));
    for (long long e : s.exponents())
        reduced[static_cast<std::size_t>(e % m)] += 1;
    IntPoly r{std::move(reduced)};
    if (r.is_zero())
        return true;
    IntPoly phi = cyclotomic_poly(m);
    if (r.degree() < phi.degree())
        return false;
    // remainder of r by monic phi
    std::vector<Int> rem(r.coeffs());
    const auto& pc = phi.coeffs();
    for (int i = r.degree(); i >= phi.degree(); --i) {
        Int t = rem[i];
        if (t == 0)
            continue;
        int shift = i - phi.degree();
        for (int j = 0; j <= phi.degree(); ++j)
            rem[j + shift] -= t * pc[j];
    }
    for (const Int& v : rem)
        if (v != 0)
            return false;
    return true;
}

CyclotomicFactorization remove_cyclotomic_part(const IntPoly& f) {
    if (f.is_zero())
        throw DomainError("remove_cyclotomic_part of zero polynomial");
    CyclotomicFactorization out;
    out.part = f;
    if (f.degree() == 0)
        return out;
    long long deg = f.degree();
    long long cap = 2 * deg * deg + 1;  // phi(m) >= sqrt(m/2)
    grow_phi(cap);
    Int at2 = out.part(Int(2));
    for (long long m = 1; m <= cap; ++m) {
        long long ph;
        {
            std::shared_lock lock(g_phi_mutex);
            ph = g_phi[m];
        }
        if (ph > out.part.degree())
            continue;
        // necessary condition Phi_m(2) | part(2) screens nearly everything
        if (at2 != 0 && at2 % cyclotomic_value_at2(m) != 0)
            continue;
        IntPoly phi = cyclotomic_poly(m);
        IntPoly q;
        int mult = 0;
        while (try_exact_divide(out.part, phi, q)) {
            out.part = q;
            ++mult;
        }
        if (mult > 0) {
            out.factors.emplace_back(m, mult);
            at2 = out.part(Int(2));
        }
        if (out.part.degree() == 0)
            break;
    }
    return out;
}

std::optional<long long> cyclotomic_index(const IntPoly& w) {
    if (w.is_zero() || !w.is_monic())
        throw DomainError("cyclotomic_index requires a monic polynomial");
    long long d = w.degree();
    if (d < 1)
        return std::nullopt;
    long long cap = 2 * d * d + 1;
    grow_phi(cap);
    Int at2 = w(Int(2));
    for (long long m = 1; m <= cap; ++m) {
        long long ph;
        {
            std::shared_lock lock(g_phi_mutex);
            ph = g_phi[m];
        }
        if (ph != d)
            continue;
        if (cyclotomic_value_at2(m) != at2)
            continue;
        if (w == cyclotomic_poly(m))
            return m;
    }
    return std::nullopt;
}

} // namespace zopoly
