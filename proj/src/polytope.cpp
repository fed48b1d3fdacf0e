#include "zopoly/polytope.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "zopoly/errors.hpp"

namespace zopoly {

namespace {

long long cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

long long cross_vec(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }

// 0 for directions with (y > 0) or (y == 0 && x > 0), else 1; CCW cycles
// from the lowest vertex list their edges with half 0 first.
int angle_half(const Point2& v) {
    if (v.y > 0 || (v.y == 0 && v.x > 0))
        return 0;
    return 1;
}

bool angle_less(const Point2& u, const Point2& v) {
    int hu = angle_half(u), hv = angle_half(v);
    if (hu != hv)
        return hu < hv;
    return cross_vec(u, v) > 0;
}

void rotate_to_canonical_start(std::vector<Point2>& vs) {
    auto it = std::min_element(vs.begin(), vs.end(), [](const Point2& a, const Point2& b) {
        return a.y != b.y ? a.y < b.y : a.x < b.x;
    });
    std::rotate(vs.begin(), it, vs.end());
}

} // namespace

BivariateSupport BivariateSupport::from_terms(std::vector<BiTerm> raw) {
    std::map<std::pair<long long, long long>, Int> acc;
    for (auto& t : raw)
        acc[{t.e1, t.e2}] += t.coeff;
    BivariateSupport out;
    for (auto& [e, c] : acc)
        if (c != 0)
            out.terms.push_back({c, e.first, e.second});
    return out;
}

long long BivariateSupport::deg1() const {
    long long d = 0;
    for (const auto& t : terms)
        d = std::max(d, t.e1);
    return d;
}

long long BivariateSupport::deg2() const {
    long long d = 0;
    for (const auto& t : terms)
        d = std::max(d, t.e2);
    return d;
}

BivariateSupport bivar_mul(const BivariateSupport& a, const BivariateSupport& b) {
    std::vector<BiTerm> raw;
    raw.reserve(a.terms.size() * b.terms.size());
    for (const auto& ta : a.terms)
        for (const auto& tb : b.terms)
            raw.push_back({ta.coeff * tb.coeff, ta.e1 + tb.e1, ta.e2 + tb.e2});
    return BivariateSupport::from_terms(std::move(raw));
}

Polytope2 convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polytope2 out;
    if (pts.empty())
        throw DomainError("convex hull of an empty point set");
    if (pts.size() == 1) {
        out.vertices = pts;
        return out;
    }
    std::vector<Point2> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower chain
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0)
            --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {  // upper chain
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    if (h.size() == 1 && pts.size() >= 2) {
        // collinear input: keep the two extreme points as a segment
        h = {pts.front(), pts.back()};
    }
    rotate_to_canonical_start(h);
    out.vertices = std::move(h);
    return out;
}

Polytope2 newton_polytope(const BivariateSupport& p) {
    if (p.is_zero())
        throw DomainError("Newton polytope of the zero polynomial");
    std::vector<Point2> pts;
    pts.reserve(p.terms.size());
    for (const auto& t : p.terms)
        pts.push_back({t.e1, t.e2});
    return convex_hull(std::move(pts));
}

std::vector<std::pair<Point2, EdgeKind>> edge_vectors(const Polytope2& p) {
    std::vector<std::pair<Point2, EdgeKind>> out;
    const auto& v = p.vertices;
    auto classify = [](const Point2& e) {
        if (e.x > 0)
            return EdgeKind::Lower;
        if (e.x < 0)
            return EdgeKind::Upper;
        return e.y > 0 ? EdgeKind::RightVertical : EdgeKind::LeftVertical;
    };
    if (v.size() <= 1)
        return out;
    if (v.size() == 2) {
        Point2 fwd{v[1].x - v[0].x, v[1].y - v[0].y};
        Point2 back{-fwd.x, -fwd.y};
        out.emplace_back(fwd, classify(fwd));
        out.emplace_back(back, classify(back));
        return out;
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % v.size()];
        Point2 e{b.x - a.x, b.y - a.y};
        out.emplace_back(e, classify(e));
    }
    return out;
}

Polytope2 minkowski_sum(const Polytope2& P, const Polytope2& Q) {
    if (P.vertices.empty() || Q.vertices.empty())
        throw DomainError("Minkowski sum of an empty polytope");
    auto ep = edge_vectors(P);
    auto eq = edge_vectors(Q);
    // angle-sorted merge with parallel same-direction edges fused
    std::vector<Point2> merged;
    std::size_t i = 0, j = 0;
    while (i < ep.size() || j < eq.size()) {
        Point2 take;
        if (j >= eq.size() || (i < ep.size() && angle_less(ep[i].first, eq[j].first))) {
            take = ep[i++].first;
        } else if (i >= ep.size() || angle_less(eq[j].first, ep[i].first)) {
            take = eq[j].first;
            ++j;
        } else {
            take = {ep[i].first.x + eq[j].first.x, ep[i].first.y + eq[j].first.y};
            ++i;
            ++j;
        }
        if (!merged.empty()) {
            Point2& last = merged.back();
            if (cross_vec(last, take) == 0 && angle_half(last) == angle_half(take)) {
                last.x += take.x;
                last.y += take.y;
                continue;
            }
        }
        merged.push_back(take);
    }
    Point2 start{P.vertices[0].x + Q.vertices[0].x, P.vertices[0].y + Q.vertices[0].y};
    Polytope2 out;
    if (merged.empty()) {
        out.vertices = {start};
        return out;
    }
    if (merged.size() == 2) {
        out.vertices = {start, {start.x + merged[0].x, start.y + merged[0].y}};
        rotate_to_canonical_start(out.vertices);
        return out;
    }
    Point2 cur = start;
    for (std::size_t e = 0; e + 1 < merged.size(); ++e) {
        cur = {cur.x + merged[e].x, cur.y + merged[e].y};
        out.vertices.push_back(cur);
    }
    out.vertices.push_back(start);
    rotate_to_canonical_start(out.vertices);
    return out;
}

bool verify_ostrowski(const BivariateSupport& p, const BivariateSupport& q) {
    if (p.is_zero() || q.is_zero())
        throw DomainError("Ostrowski check needs non-zero polynomials");
    BivariateSupport prod = bivar_mul(p, q);
    if (prod.is_zero())
        return false;  // cannot happen over an integral domain
    return newton_polytope(prod) == minkowski_sum(newton_polytope(p), newton_polytope(q));
}

GHPair build_GH(const SupportSet& n, const BoxCertificate& cert) {
    int k = n.k();
    if (static_cast<int>(cert.per_index.size()) != k)
        throw ConsistencyError("certificate does not match the support size");
    Decomposition dec = decompose(n, cert.d);
    for (int j = 0; j < k; ++j)
        if (dec.m[j] != cert.per_index[j].m || dec.t[j] != cert.per_index[j].t)
            throw ConsistencyError("certificate decomposition does not match the support");
    long long tp = cert.tprime, tdp = cert.tdoubleprime, mp = cert.mprime;
    std::vector<BiTerm> gterms, hterms;
    gterms.push_back({Int(1), tdp, 0});
    hterms.push_back({Int(1), tp, mp});
    for (int j = 0; j < k; ++j) {
        gterms.push_back({Int(1), cert.per_index[j].t + tdp, cert.per_index[j].m});
        hterms.push_back({Int(1), tp - cert.per_index[j].t, mp - cert.per_index[j].m});
    }
    GHPair out;
    out.G = BivariateSupport::from_terms(std::move(gterms));
    out.H = BivariateSupport::from_terms(std::move(hterms));
    out.a = tp - cert.per_index[k - 1].t;
    return out;
}

std::vector<std::array<int, 4>> parallel_pair_scan(const SupportSet& n,
                                                   const std::vector<long long>& m) {
    int k = n.k();
    if (static_cast<int>(m.size()) != k + 1)
        throw DomainError("index sequences must have equal length");
    if (!m.empty() && m[0] != 0)
        throw DomainError("m_0 must be 0");
    std::vector<std::array<int, 4>> out;
    for (int i = 0; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j)
            for (int u = i; u <= k; ++u)
                for (int v = u + 1; v <= k; ++v) {
                    if (std::make_pair(u, v) <= std::make_pair(i, j))
                        continue;
                    if (u == i || u == j || v == i || v == j)
                        continue;
                    Int det = Int(n[i] - n[j]) * (m[u] - m[v]) -
                              Int(n[u] - n[v]) * (m[i] - m[j]);
                    if (det == 0)
                        out.push_back({i, j, u, v});
                }
    return out;
}

IntPoly sylvester_resultant_z(const BivariateSupport& G, const BivariateSupport& H,
                              int dim_cap) {
    // coefficients of z^i as polynomials in y
    auto z_coeffs = [](const BivariateSupport& p) {
        long long dz = p.deg2();
        std::vector<IntPoly> out(static_cast<std::size_t>(dz) + 1);
        for (long long i = 0; i <= dz; ++i) {
            std::vector<Int> c;
            for (const auto& t : p.terms)
                if (t.e2 == i) {
                    if (static_cast<long long>(c.size()) <= t.e1)
                        c.resize(t.e1 + 1, Int(0));
                    c[t.e1] = t.coeff;
                }
            out[i] = IntPoly(std::move(c));
        }
        return out;
    };
    if (G.is_zero() || H.is_zero())
        throw DomainError("resultant of the zero polynomial");
    long long dg = G.deg2(), dh = H.deg2();
    if (dg < 1 || dh < 1)
        throw DomainError("resultant requires positive z-degree");
    long long dim = dg + dh;
    if (dim > dim_cap)
        throw ResourceError("Sylvester dimension exceeds the cap");
    auto gc = z_coeffs(G), hc = z_coeffs(H);
    // Sylvester matrix: dh rows of G coefficients, dg rows of H coefficients
    std::vector<std::vector<IntPoly>> mat(dim, std::vector<IntPoly>(dim));
    for (long long r = 0; r < dh; ++r)
        for (long long i = 0; i <= dg; ++i)
            mat[r][r + (dg - i)] = gc[i];
    for (long long r = 0; r < dg; ++r)
        for (long long i = 0; i <= dh; ++i)
            mat[dh + r][r + (dh - i)] = hc[i];

    // fraction-free Bareiss
    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (long long c = 0; c < dim - 1; ++c) {
        if (mat[c][c].is_zero()) {
            long long swap_row = -1;
            for (long long r = c + 1; r < dim; ++r)
                if (!mat[r][c].is_zero()) {
                    swap_row = r;
                    break;
                }
            if (swap_row < 0)
                return IntPoly();  // singular: resultant is zero
            std::swap(mat[c], mat[swap_row]);
            sign = -sign;
        }
        for (long long r = c + 1; r < dim; ++r) {
            for (long long col = c + 1; col < dim; ++col) {
                IntPoly num = mat[c][c] * mat[r][col] - mat[r][c] * mat[c][col];
                mat[r][col] = num.is_zero() ? IntPoly() : exact_divide(num, prev);
            }
            mat[r][c] = IntPoly();
        }
        prev = mat[c][c];
    }
    IntPoly det = mat[dim - 1][dim - 1];
    return sign < 0 ? -det : det;
}

namespace {

struct BiParser {
    const std::string& s;
    std::size_t pos = 0;
    char var1 = 0, var2 = 0;

    explicit BiParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == '*'))
            ++pos;
    }

    long long parse_uint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected integer in bivariate polynomial: " + s);
        return std::stoll(s.substr(start, pos - start));
    }

    int var_slot(char v) {
        if (var1 == 0 || var1 == v) {
            var1 = v;
            return 0;
        }
        if (var2 == 0 || var2 == v) {
            var2 = v;
            return 1;
        }
        throw ParseError("more than two variables in: " + s);
    }

    BiTerm parse_term(int sign) {
        BiTerm t;
        t.coeff = sign;
        skip_ws();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            t.coeff *= Int(parse_uint());
        for (;;) {
            skip_ws();
            if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
                break;
            char v = s[pos++];
            long long e = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = parse_uint();
            }
            if (var_slot(v) == 0)
                t.e1 += e;
            else
                t.e2 += e;
        }
        return t;
    }

    BivariateSupport parse() {
        std::vector<BiTerm> terms;
        skip_ws();
        int sign = 1;
        if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        }
        terms.push_back(parse_term(sign));
        for (;;) {
            skip_ws();
            if (pos >= s.size())
                break;
            if (s[pos] != '+' && s[pos] != '-')
                throw ParseError("expected '+' or '-' in: " + s);
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
            terms.push_back(parse_term(sign));
        }
        return BivariateSupport::from_terms(std::move(terms));
    }
};

} // namespace

BivariateSupport parse_bivariate(const std::string& text) { return BiParser(text).parse(); }

std::string to_string(const BivariateSupport& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& t : p.terms) {
        Int a = t.coeff;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        bool need_coeff = (a != 1) || (t.e1 == 0 && t.e2 == 0);
        if (need_coeff)
            out += a.str();
        if (t.e1 > 0) {
            out += "y";
            if (t.e1 > 1)
                out += "^" + std::to_string(t.e1);
        }
        if (t.e2 > 0) {
            out += "z";
            if (t.e2 > 1)
                out += "^" + std::to_string(t.e2);
        }
    }
    return out;
}

} // namespace zopoly
