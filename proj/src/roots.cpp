#include "zopoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "zopoly/cyclotomic.hpp"
#include "zopoly/errors.hpp"

namespace zopoly {

namespace {

using Cplx = std::complex<double>;

Cplx eval(const std::vector<double>& c, Cplx z) {
    Cplx r = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * z + c[i];
    return r;
}

Cplx eval_deriv(const std::vector<double>& c, Cplx z) {
    Cplx r = 0;
    for (std::size_t i = c.size(); i-- > 1;)
        r = r * z + c[i] * static_cast<double>(i);
    return r;
}

std::vector<double> to_doubles(const IntPoly& f) {
    std::vector<double> c(f.degree() + 1);
    for (int i = 0; i <= f.degree(); ++i)
        c[i] = f.coeff(i).convert_to<double>();
    return c;
}

// roots of a squarefree polynomial given as double coefficients
std::vector<Cplx> aberth(const std::vector<double>& c) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<Cplx> z(n);
    double maxr = 0;
    for (int i = 0; i < n; ++i)
        maxr = std::max(maxr, std::abs(c[i] / c[n]));
    double radius = 1.0 + maxr;
    // staggered start angles avoid symmetric stalls
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * M_PI * (i + 0.35) / n + 0.4;
        double r = radius * (0.6 + 0.3 * ((i * 7) % 11) / 11.0);
        z[i] = Cplx(r * std::cos(ang), r * std::sin(ang));
    }
    const int max_iter = 400;
    for (int iter = 0; iter < max_iter; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            Cplx fz = eval(c, z[i]);
            Cplx dz = eval_deriv(c, z[i]);
            Cplx ratio = (dz != Cplx(0)) ? fz / dz : Cplx(1e-3, 1e-3);
            Cplx sum = 0;
            for (int j = 0; j < n; ++j)
                if (j != i)
                    sum += 1.0 / (z[i] - z[j]);
            Cplx denom = 1.0 - ratio * sum;
            Cplx step = (denom != Cplx(0)) ? ratio / denom : ratio;
            z[i] -= step;
            worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
        }
        if (worst < 1e-15)
            break;
    }
    return z;
}

std::vector<double> weierstrass_radii(const std::vector<double>& c, const std::vector<Cplx>& z) {
    int n = static_cast<int>(c.size()) - 1;
    std::vector<double> radii(n);
    for (int i = 0; i < n; ++i) {
        Cplx denom = c[n];
        for (int j = 0; j < n; ++j)
            if (j != i)
                denom *= (z[i] - z[j]);
        double w = (denom != Cplx(0)) ? std::abs(eval(c, z[i]) / denom)
                                      : std::numeric_limits<double>::infinity();
        radii[i] = n * w;
    }
    return radii;
}

IntPoly squarefree_part(const IntPoly& f) {
    IntPoly g = gcd(f, derivative(f));
    if (g.degree() < 1)
        return f;
    // g is primitive and divides f over Q, hence over Z (Gauss)
    return exact_divide(f, g);
}

} // namespace

CertifiedRoots certified_roots(const IntPoly& f) {
    if (f.is_zero() || f.degree() < 1)
        throw DomainError("certified_roots requires degree >= 1");
    IntPoly fs = squarefree_part(f);
    auto c = to_doubles(fs);
    for (double v : c)
        if (!std::isfinite(v))
            throw NumericError("coefficients overflow double precision");
    CertifiedRoots out;
    out.roots = aberth(c);
    out.radii = weierstrass_radii(c, out.roots);
    return out;
}

std::vector<std::complex<double>> poly_roots(const IntPoly& f) {
    return certified_roots(f).roots;
}

double house(const IntPoly& f, double tol) {
    if (f.is_zero() || f.degree() < 1)
        throw DomainError("house requires degree >= 1");
    if (tol <= 0)
        throw DomainError("house requires tol > 0");
    CertifiedRoots cr = certified_roots(f);
    int n = static_cast<int>(cr.roots.size());
    int top = 0;
    for (int i = 1; i < n; ++i)
        if (std::abs(cr.roots[i]) > std::abs(cr.roots[top]))
            top = i;
    double worst = *std::max_element(cr.radii.begin(), cr.radii.end());
    if (!(worst <= tol / 2))
        throw NumericError("root enclosures wider than tolerance");
    // the top disk must own exactly one root
    for (int i = 0; i < n; ++i) {
        if (i == top)
            continue;
        double dist = std::abs(cr.roots[i] - cr.roots[top]);
        if (dist <= cr.radii[i] + cr.radii[top])
            throw NumericError("maximal root disk not isolated");
    }
    return std::abs(cr.roots[top]);
}

bool dimitrov_check(const IntPoly& w, double tol) {
    if (w.is_zero() || w.degree() < 1)
        throw DomainError("dimitrov_check requires degree >= 1");
    if (!w.is_monic())
        throw DomainError("dimitrov_check requires a monic polynomial");
    if (w.degree() == 1 && w.coeff(0) == 0)
        throw DomainError("dimitrov_check does not apply to x");
    if (cyclotomic_index(w).has_value())
        throw DomainError("dimitrov_check does not apply to cyclotomic polynomials");
    double h = house(w, tol);
    double bound = std::pow(2.0, 1.0 / (4.0 * w.degree()));
    return h >= bound - tol;
}

} // namespace zopoly
