#include "zopoly/diophant.hpp"

#include <algorithm>
#include <cmath>

#include "zopoly/errors.hpp"

namespace zopoly {

namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

Int rat_floor(const Rat& x) {
    Int n = numerator(x), d = denominator(x);
    Int q = n / d;
    if (n < 0 && q * d != n)
        --q;
    return q;
}

Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1)
            r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Rat rat_pow(const Rat& base, unsigned e) {
    return Rat(int_pow(numerator(base), e), int_pow(denominator(base), e));
}

// ||x|| for rational x: distance to the nearest integer
Rat nearest_distance(const Rat& x) {
    Int fl = rat_floor(x);
    Rat frac = x - Rat(fl);
    Rat other = Rat(1) - frac;
    return frac < other ? frac : other;
}

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

} // namespace

Int iroot(const Int& n, int r) {
    if (n < 0 || r < 1)
        throw DomainError("iroot requires n >= 0, r >= 1");
    if (n == 0 || r == 1)
        return n;
    Int x = Int(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / r + 1);
    for (;;) {
        // Newton step for x^r = n
        Int xr1 = int_pow(x, static_cast<unsigned>(r - 1));
        Int nx = ((r - 1) * x * xr1 + n) / (r * xr1);
        if (nx >= x)
            break;
        x = nx;
    }
    while (int_pow(x, static_cast<unsigned>(r)) > n)
        --x;
    while (int_pow(x + 1, static_cast<unsigned>(r)) <= n)
        ++x;
    return x;
}

BoxParameters make_box_parameters(int k, const Rat& epsilon) {
    if (k < 1)
        throw DomainError("box parameters require k >= 1");
    if (!(epsilon > 0) || epsilon > Rat(1, 2))
        throw DomainError("epsilon must lie in (0, 1/2]");
    BoxParameters p;
    p.k = k;
    p.epsilon = epsilon;
    p.kappa = to_ll(rat_floor(Rat(1) / epsilon) + 1);
    Rat kap = p.kappa;
    Rat v1 = rat_pow(kap, static_cast<unsigned>(2 * k - 2)) / 2 /
             (epsilon - Rat(1, p.kappa));
    Rat v2 = rat_pow(kap, static_cast<unsigned>(k - 1)) + epsilon;
    p.V = std::max(v1, v2);
    return p;
}

BoxParameters parameter_schedule(int k, long long N) {
    if (k < 2)
        throw ScheduleError("schedule requires k >= 2");
    if (N < 1)
        throw ScheduleError("schedule requires N >= 1");
    int q = 2 * k + 1;
    Int root = iroot(Int(N), q);
    if (root < 4)
        throw ScheduleError("N too small: floor(N^(1/(2k+1))) < 4");
    Rat epsilon(Int(1), root - 1);
    BoxParameters p = make_box_parameters(k, epsilon);
    if (Int(p.kappa) != root)
        throw ScheduleError("kappa identity failed");  // unreachable by construction
    // V < N^(2k/(2k+1)) exactly: V^(2k+1) < N^(2k)
    Int vn = numerator(p.V), vd = denominator(p.V);
    if (!(int_pow(vn, static_cast<unsigned>(q)) <
          int_pow(Int(N), static_cast<unsigned>(2 * k)) * int_pow(vd, static_cast<unsigned>(q))))
        throw ScheduleError("V(k) >= N^(2k/(2k+1))");
    return p;
}

long long pigeonhole_t(const SupportSet& n, long long kappa) {
    if (kappa < 2)
        throw DomainError("pigeonhole requires kappa >= 2");
    int k = n.k();
    if (k < 1)
        throw DomainError("pigeonhole requires at least one positive exponent");
    long long nk = n.max_exponent();
    Int bound = int_pow(Int(kappa), static_cast<unsigned>(k - 1));
    Rat inv_kappa(1, kappa);
    for (long long t = 1;; ++t) {
        bool ok = true;
        for (int j = 1; j <= k - 1 && ok; ++j) {
            Rat x(Int(t) * n[j], Int(nk));
            if (!(nearest_distance(x) < inv_kappa))
                ok = false;
        }
        if (ok)
            return t;
        if (Int(t) >= bound)
            throw NumericError("pigeonhole scan exceeded kappa^(k-1)");  // impossible
    }
}

Decomposition decompose(const SupportSet& n, long long d) {
    if (d < 1)
        throw DomainError("decompose requires d >= 1");
    Decomposition out;
    int k = n.k();
    out.m.reserve(k);
    out.t.reserve(k);
    for (int j = 1; j <= k; ++j) {
        long long nj = n[j];
        long long m = (2 * nj + d) / (2 * d);  // nearest, exact halves round up
        long long t = nj - m * d;
        out.m.push_back(m);
        out.t.push_back(t);
        out.mprime = std::max(out.mprime, m);
        out.tprime = std::max(out.tprime, t);
        out.tdoubleprime = std::max(out.tdoubleprime, -t);
    }
    out.tprime = std::max(out.tprime, 0ll);
    out.tdoubleprime = std::max(out.tdoubleprime, 0ll);
    return out;
}

bool validate_certificate(const SupportSet& n, const BoxParameters& params,
                          const BoxCertificate& cert) {
    int k = n.k();
    if (k < 1 || static_cast<int>(cert.per_index.size()) != k || cert.d < 1)
        return false;
    long long nk = n.max_exponent();
    const Rat& eps = params.epsilon;
    Rat d(cert.d);
    Rat epsd = eps * d;
    // d in the open interval of the lemma statement
    Rat lo = Rat(nk) / (rat_pow(Rat(params.kappa), static_cast<unsigned>(k - 1)) + eps);
    Rat hi = Rat(nk) / (Rat(1) - eps);
    if (!(lo < d && d < hi))
        return false;
    long long mprime = 0, tprime = 0, tdp = 0;
    for (int j = 1; j <= k; ++j) {
        const IndexDecomp& id = cert.per_index[j - 1];
        if (id.m * cert.d + id.t != n[j])
            return false;
        // |t_j| < eps*d, equivalent to the residue landing in
        // [0, eps d) U ((1-eps) d, d)
        if (!(Rat(id.t < 0 ? -id.t : id.t) < epsd))
            return false;
        long long res = n[j] % cert.d;
        bool in_low = Rat(res) < epsd;
        bool in_high = Rat(res) > (Rat(1) - eps) * d;
        if (!(in_low || in_high))
            return false;
        mprime = std::max(mprime, id.m);
        tprime = std::max(tprime, id.t);
        tdp = std::max(tdp, -id.t);
    }
    tprime = std::max(tprime, 0ll);
    tdp = std::max(tdp, 0ll);
    if (cert.mprime != mprime || cert.tprime != tprime || cert.tdoubleprime != tdp)
        return false;
    if (cert.mprime != cert.per_index.back().m)
        return false;
    // t within both pigeonhole bounds
    if (cert.t < 1)
        return false;
    if (Int(cert.t) > int_pow(Int(params.kappa), static_cast<unsigned>(k - 1)))
        return false;
    // t <= sqrt(2 n_k) (eps - 1/kappa)^(1/2): t^2 <= 2 n_k (eps - 1/kappa)
    Rat gap = eps - Rat(1, params.kappa);
    if (!(Rat(Int(cert.t) * cert.t) <= Rat(2 * nk) * gap))
        return false;
    return true;
}

BoxCertificate find_modulus(const SupportSet& n, const BoxParameters& params) {
    int k = n.k();
    if (k < 1)
        throw DomainError("find_modulus requires at least one positive exponent");
    long long nk = n.max_exponent();
    auto fail = [&]() -> HypothesisError {
        return HypothesisError("no valid modulus found; hypothesis n_k >= V(k) not met (n_k = " +
                               std::to_string(nk) + ")");
    };
    long long t = pigeonhole_t(n, params.kappa);
    const Rat& eps = params.epsilon;
    Rat tr(t);
    Rat inv_kappa(1, params.kappa);
    // d/n_k in ((t + 1/kappa)/(t(t+eps)), (t - 1/kappa)/(t(t-eps)))
    Rat lo = Rat(nk) * (tr + inv_kappa) / (tr * (tr + eps));
    Rat hi = Rat(nk) * (tr - inv_kappa) / (tr * (tr - eps));
    Int d_int = rat_floor(lo) + 1;
    if (!(Rat(d_int) < hi))
        throw fail();
    BoxCertificate cert;
    cert.d = to_ll(d_int);
    cert.t = t;
    Decomposition dec = decompose(n, cert.d);
    for (int j = 1; j <= k; ++j) {
        IndexDecomp id;
        id.m = dec.m[j - 1];
        id.t = dec.t[j - 1];
        Rat w = Rat(Int(t) * n[j] * 2 + nk, Int(nk) * 2);  // t*x_j + 1/2
        id.w = to_ll(rat_floor(w));
        cert.per_index.push_back(id);
    }
    cert.mprime = dec.mprime;
    cert.tprime = dec.tprime;
    cert.tdoubleprime = dec.tdoubleprime;
    if (!validate_certificate(n, params, cert))
        throw fail();
    return cert;
}

bool BoundsReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const BoundCheck& c) { return c.pass; });
}

BoundsReport verify_bounds(const BoxCertificate& cert, int k, long long N) {
    if (k < 1 || static_cast<int>(cert.per_index.size()) != k)
        throw DomainError("certificate size does not match k");
    BoundsReport rep;
    int q = 2 * k + 1;
    long long nk = cert.mprime * cert.d + cert.per_index.back().t;
    double Nd = static_cast<double>(N);
    double nq = std::pow(Nd, 1.0 / q);

    // d > n_k / N^((k-1)/(2k+1)):  d^q N^(k-1) > n_k^q
    {
        bool pass = int_pow(Int(cert.d), static_cast<unsigned>(q)) *
                        int_pow(Int(N), static_cast<unsigned>(k - 1)) >
                    int_pow(Int(nk), static_cast<unsigned>(q));
        double bound = nk / std::pow(Nd, static_cast<double>(k - 1) / q);
        rep.checks.push_back({"d_lower", pass, static_cast<double>(cert.d) - bound});
    }
    // d < 1.01 n_k:  100 d < 101 n_k
    {
        bool pass = 100 * cert.d < 101 * nk;
        rep.checks.push_back({"d_upper", pass, 1.01 * nk - cert.d});
    }
    // m' < n_k/d + 1:  m' d < n_k + d
    {
        bool pass = cert.mprime * cert.d < nk + cert.d;
        rep.checks.push_back(
            {"mprime", pass, static_cast<double>(nk) / cert.d + 1 - cert.mprime});
    }
    // max{t', t''} < 1.01 d / N^(1/(2k+1)):  (100 M)^q N < (101 d)^q
    {
        long long M = std::max(cert.tprime, cert.tdoubleprime);
        bool pass = M == 0 ||
                    int_pow(Int(100 * M), static_cast<unsigned>(q)) * N <
                        int_pow(Int(101 * cert.d), static_cast<unsigned>(q));
        rep.checks.push_back({"residue_size", pass, 1.01 * cert.d / nq - M});
    }
    // headline: 2 (t' + t'') m' < 9 N^(2k/(2k+1)):  (2(t'+t'')m')^q < 9^q N^(2k)
    {
        Int lhs = Int(2) * (cert.tprime + cert.tdoubleprime) * cert.mprime;
        bool pass = lhs == 0 ||
                    int_pow(lhs, static_cast<unsigned>(q)) <
                        int_pow(Int(9), static_cast<unsigned>(q)) *
                            int_pow(Int(N), static_cast<unsigned>(2 * k));
        rep.headline_pass = pass;
        double bound = 9 * std::pow(Nd, 2.0 * k / q);
        rep.checks.push_back({"degree_product", pass,
                              bound - 2.0 * (cert.tprime + cert.tdoubleprime) * cert.mprime});
    }
    return rep;
}

double gap_bound(int k, double N) {
    if (k < 3)
        throw DomainError("gap bound requires k >= 3");
    if (N <= 0)
        throw DomainError("gap bound requires N > 0");
    return 36.0 * std::log(static_cast<double>(k)) / std::log(2.0) *
           std::pow(N, 2.0 * k / (2 * k + 1));
}

bool root_gap_check(const SupportSet& n, const std::vector<std::complex<double>>& roots,
                    double tol) {
    int k = n.k();
    if (k < 1)
        return true;
    long long gap = n.max_exponent() - n[k - 1];
    double logk = std::log(static_cast<double>(k));
    for (const auto& z : roots) {
        double mod = std::abs(z);
        if (mod <= 1.0)
            continue;
        double lower = std::max(mod - tol, 1.0);
        // slack covers the tol-wide uncertainty of the modulus
        double slack = gap * (std::log(mod + tol) - std::log(lower)) + 1e-12;
        if (gap * std::log(mod) > logk + slack)
            return false;
    }
    return true;
}

} // namespace zopoly
