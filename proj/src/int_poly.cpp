#include "zopoly/int_poly.hpp"

#include <algorithm>
#include <cctype>

#include "zopoly/errors.hpp"

namespace zopoly {

namespace {
const Int kZero = 0;

Int int_gcd(Int a, Int b) {
    if (a < 0)
        a = -a;
    if (b < 0)
        b = -b;
    return boost::multiprecision::gcd(a, b);
}
} // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

IntPoly IntPoly::constant(Int v) {
    IntPoly p;
    if (v != 0)
        p.c_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(Int coeff, std::size_t deg) {
    IntPoly p;
    if (coeff != 0) {
        p.c_.assign(deg + 1, kZero);
        p.c_.back() = std::move(coeff);
    }
    return p;
}

std::size_t IntPoly::term_count() const {
    std::size_t n = 0;
    for (const Int& v : c_)
        if (v != 0)
            ++n;
    return n;
}

const Int& IntPoly::coeff(std::size_t i) const {
    return i < c_.size() ? c_[i] : kZero;
}

const Int& IntPoly::leading() const {
    if (c_.empty())
        throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

Int IntPoly::operator()(const Int& x) const {
    Int r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * x + c_[i];
    return r;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (Int& v : r.c_)
        v = -v;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] += o.c_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
    if (c_.size() < o.c_.size())
        c_.resize(o.c_.size(), kZero);
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        c_[i] -= o.c_[i];
    trim();
    return *this;
}

IntPoly operator+(IntPoly a, const IntPoly& b) {
    a += b;
    return a;
}

IntPoly operator-(IntPoly a, const IntPoly& b) {
    a -= b;
    return a;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero())
        return IntPoly();
    const auto& ac = a.coeffs();
    const auto& bc = b.coeffs();
    std::vector<Int> r(ac.size() + bc.size() - 1, Int(0));
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0)
            continue;
        for (std::size_t j = 0; j < bc.size(); ++j)
            if (bc[j] != 0)
                r[i + j] += ac[i] * bc[j];
    }
    return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly derivative(const IntPoly& f) {
    if (f.degree() <= 0)
        return IntPoly();
    std::vector<Int> r(f.degree());
    for (int i = 1; i <= f.degree(); ++i)
        r[i - 1] = f.coeff(i) * i;
    return IntPoly(std::move(r));
}

IntPoly pow(const IntPoly& f, unsigned e) {
    IntPoly r = IntPoly::constant(1);
    IntPoly base = f;
    while (e) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return r;
}

Int content(const IntPoly& f) {
    Int g = 0;
    for (const Int& v : f.coeffs()) {
        g = int_gcd(g, v);
        if (g == 1)
            break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& f) {
    if (f.is_zero())
        return f;
    Int c = content(f);
    std::vector<Int> r(f.coeffs());
    for (Int& v : r)
        v /= c;
    return IntPoly(std::move(r));
}

IntPoly reciprocal(const IntPoly& f) {
    if (f.is_zero())
        throw DomainError("reciprocal of the zero polynomial");
    std::vector<Int> r(f.coeffs());
    std::reverse(r.begin(), r.end());
    return IntPoly(std::move(r));
}

bool is_reciprocal(const IntPoly& f) {
    IntPoly r = reciprocal(f);
    return f == r || f == -r;
}

bool try_exact_divide(const IntPoly& f, const IntPoly& g, IntPoly& q) {
    if (g.is_zero())
        throw DomainError("division by zero polynomial");
    if (f.is_zero()) {
        q = IntPoly();
        return true;
    }
    if (f.degree() < g.degree())
        return false;
    std::vector<Int> rem(f.coeffs());
    std::vector<Int> quot(f.degree() - g.degree() + 1, Int(0));
    const auto& gc = g.coeffs();
    int rd = f.degree();
    while (rd >= g.degree()) {
        while (rd >= 0 && rem[rd] == 0)
            --rd;
        if (rd < g.degree())
            break;
        Int t = rem[rd] / gc.back();
        if (t * gc.back() != rem[rd])
            return false;
        int shift = rd - g.degree();
        quot[shift] = t;
        for (int i = 0; i <= g.degree(); ++i)
            rem[i + shift] -= t * gc[i];
        --rd;
    }
    for (int i = 0; i <= rd; ++i)
        if (rem[i] != 0)
            return false;
    q = IntPoly(std::move(quot));
    return true;
}

IntPoly exact_divide(const IntPoly& f, const IntPoly& g) {
    IntPoly q;
    if (!try_exact_divide(f, g, q))
        throw DivisibilityError("polynomial does not divide exactly");
    return q;
}

namespace {
// lc(g)^{deg f - deg g + 1} * f mod g, computed without fractions.
IntPoly pseudo_rem(const IntPoly& f, const IntPoly& g) {
    std::vector<Int> r(f.coeffs());
    const auto& gc = g.coeffs();
    const Int& glc = gc.back();
    int dg = g.degree();
    int rd = static_cast<int>(r.size()) - 1;
    int steps = f.degree() - dg + 1;
    while (rd >= 0 && r[rd] == 0)
        --rd;
    while (rd >= dg) {
        Int t = r[rd];
        int shift = rd - dg;
        for (int i = 0; i <= rd; ++i)
            r[i] *= glc;
        for (int i = 0; i < dg; ++i)
            r[i + shift] -= t * gc[i];
        r[rd] = 0;
        --steps;
        while (rd >= 0 && r[rd] == 0)
            --rd;
    }
    r.resize(rd + 1);
    IntPoly rem{std::move(r)};
    // pad remaining lc powers so the subresultant divisions stay exact
    while (steps-- > 0)
        rem *= IntPoly::constant(glc);
    return rem;
}

IntPoly divide_by_const(const IntPoly& f, const Int& c) {
    std::vector<Int> r(f.coeffs());
    for (Int& v : r)
        v /= c;
    return IntPoly(std::move(r));
}
} // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
    auto normalize = [](const IntPoly& f) {
        if (f.is_zero())
            return f;
        IntPoly p = primitive_part(f);
        return p.leading() > 0 ? p : -p;
    };
    if (a.is_zero())
        return normalize(b);
    if (b.is_zero())
        return normalize(a);
    IntPoly A = primitive_part(a);
    IntPoly B = primitive_part(b);
    if (A.degree() < B.degree())
        std::swap(A, B);
    if (B.degree() == 0)
        return IntPoly::constant(1);
    // subresultant PRS
    Int g = 1, h = 1;
    for (;;) {
        int delta = A.degree() - B.degree();
        IntPoly R = pseudo_rem(A, B);
        if (R.is_zero())
            return normalize(B);
        if (R.degree() == 0)
            return IntPoly::constant(1);
        A = B;
        Int divisor = g;
        for (int i = 0; i < delta; ++i)
            divisor *= h;
        B = divide_by_const(R, divisor);
        g = A.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            Int gp = g;
            for (int i = 1; i < delta; ++i)
                gp *= g;
            Int hp = 1;
            for (int i = 0; i < delta - 1; ++i)
                hp *= h;
            h = gp / hp;
        }
    }
}

IntPoly poly_from_support(const SupportSet& s) {
    std::vector<Int> c(static_cast<std::size_t>(s.max_exponent()) + 1, Int(0));
    for (long long e : s.exponents())
        c[static_cast<std::size_t>(e)] = 1;
    return IntPoly(std::move(c));
}

SupportSet support_of(const IntPoly& f) {
    if (f.is_zero() || f.coeff(0) != 1)
        throw DomainError("not a 0,1-polynomial with constant term 1");
    std::vector<long long> exps;
    for (int i = 0; i <= f.degree(); ++i) {
        const Int& v = f.coeff(i);
        if (v == 1)
            exps.push_back(i);
        else if (v != 0)
            throw DomainError("not a 0,1-polynomial with constant term 1");
    }
    return SupportSet(std::move(exps));
}

bool poly_less(const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i))
            return a.coeff(i) < b.coeff(i);
    return false;
}

namespace {
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
            ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return s[pos];
    }

    Int parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected integer at position " + std::to_string(pos) + " in: " + s);
        return Int(s.substr(start, pos - start));
    }

    // [integer]['*']['x'['^'exponent]]
    void parse_term(int sign, std::vector<std::pair<Int, long long>>& terms) {
        skip_ws();
        Int coeff = 1;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coeff = parse_integer();
            have_coeff = true;
        }
        skip_ws();
        if (pos < s.size() && s[pos] == '*') {
            ++pos;
            skip_ws();
        }
        long long exp = 0;
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
            ++pos;
            exp = 1;
            skip_ws();
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                Int e = parse_integer();
                exp = static_cast<long long>(e);
            }
        } else if (!have_coeff) {
            throw ParseError("expected term at position " + std::to_string(pos) + " in: " + s);
        }
        terms.emplace_back(sign < 0 ? -coeff : coeff, exp);
    }

    IntPoly parse() {
        std::vector<std::pair<Int, long long>> terms;
        int sign = 1;
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            sign = (peek() == '-') ? -1 : 1;
            ++pos;
        }
        parse_term(sign, terms);
        while (!eof()) {
            char op = peek();
            if (op != '+' && op != '-')
                throw ParseError("expected '+' or '-' at position " + std::to_string(pos) + " in: " + s);
            ++pos;
            parse_term(op == '-' ? -1 : 1, terms);
        }
        long long maxe = 0;
        for (auto& [c, e] : terms)
            maxe = std::max(maxe, e);
        std::vector<Int> coeffs(static_cast<std::size_t>(maxe) + 1, Int(0));
        for (auto& [c, e] : terms)
            coeffs[static_cast<std::size_t>(e)] += c;
        return IntPoly(std::move(coeffs));
    }
};
} // namespace

IntPoly parse_poly(const std::string& text) { return Parser(text).parse(); }

IntPoly parse_poly_or_support(const std::string& text) {
    if (text.find('x') != std::string::npos || text.find('X') != std::string::npos)
        return parse_poly(text);
    if (text.find(',') != std::string::npos || text.find('{') != std::string::npos)
        return poly_from_support(parse_support(text));
    // single token: an integer constant is a polynomial
    return parse_poly(text);
}

std::string to_string(const IntPoly& f) {
    if (f.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        const Int& v = f.coeff(i);
        if (v == 0)
            continue;
        Int a = v;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
            first = false;
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        if (i == 0) {
            out += a.str();
        } else {
            if (a != 1)
                out += a.str();
            out += "x";
            if (i != 1)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

} // namespace zopoly
