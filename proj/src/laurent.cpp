#include "tangles/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace tangles {

Laurent Laurent::term(const Int& coeff, std::int64_t exp) {
    Laurent p;
    if (coeff != 0) p.c_[exp] = coeff;
    return p;
}

bool Laurent::is_one() const {
    return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

bool Laurent::is_unit() const {
    if (c_.size() != 1) return false;
    const Int& c = c_.begin()->second;
    return c == 1 || c == -1;
}

Int Laurent::coeff(std::int64_t k) const {
    auto it = c_.find(k);
    return it == c_.end() ? Int(0) : it->second;
}

std::int64_t Laurent::lowest_exp() const {
    if (is_zero()) throw MathError("lowest_exp of zero");
    return c_.begin()->first;
}

std::int64_t Laurent::highest_exp() const {
    if (is_zero()) throw MathError("highest_exp of zero");
    return c_.rbegin()->first;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [k, c] : c_) r.c_[k] = -c;
    return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [k, c] : o.c_) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = c;
        } else {
            it->second += c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [k, c] : o.c_) {
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_[k] = -c;
        } else {
            it->second -= c;
            if (it->second == 0) c_.erase(it);
        }
    }
    return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (const auto& [ka, ca] : a.c_)
        for (const auto& [kb, cb] : b.c_) {
            std::int64_t k = ka + kb;
            auto it = r.c_.find(k);
            if (it == r.c_.end()) {
                Int v = ca * cb;
                if (v != 0) r.c_[k] = std::move(v);
            } else {
                it->second += ca * cb;
                if (it->second == 0) r.c_.erase(it);
            }
        }
    return r;
}

Laurent Laurent::involute() const {
    Laurent r;
    for (const auto& [k, c] : c_) r.c_[-k] = c;
    return r;
}

Laurent Laurent::shifted(std::int64_t k) const {
    Laurent r;
    for (const auto& [e, c] : c_) r.c_[e + k] = c;
    return r;
}

Int Laurent::eval_at_one() const {
    Int s = 0;
    for (const auto& [k, c] : c_) { (void)k; s += c; }
    return s;
}

Laurent canonical_unit(const Laurent& p) {
    if (p.is_zero()) throw MathError("canonical_unit of zero");
    std::int64_t lo = p.lowest_exp();
    return Laurent::term(p.coeff(lo) > 0 ? 1 : -1, -lo);
}

Laurent canonical_form(const Laurent& p) {
    if (p.is_zero()) return p;
    return p * canonical_unit(p);
}

bool unit_equal(const Laurent& a, const Laurent& b) {
    return canonical_form(a) == canonical_form(b);
}

std::pair<Int, Laurent> content_primitive(const Laurent& p) {
    if (p.is_zero()) throw MathError("content_primitive of zero");
    Int g = 0;
    for (const auto& [k, c] : p.coeffs()) { (void)k; g = boost::multiprecision::gcd(g, c); }
    if (g < 0) g = -g;
    Laurent prim;
    for (const auto& [k, c] : p.coeffs()) prim += Laurent::term(c / g, k);
    return {g, prim};
}

/* Dense integer polynomials, index = degree, no trailing zeros. */
namespace {

using ZP = std::vector<Int>;

void zp_trim(ZP& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int zp_deg(const ZP& p) { return static_cast<int>(p.size()) - 1; }

ZP zp_from(const Laurent& p) {
    // Shift so the lowest exponent becomes degree 0.
    ZP r(static_cast<size_t>(p.highest_exp() - p.lowest_exp()) + 1);
    std::int64_t lo = p.lowest_exp();
    for (const auto& [k, c] : p.coeffs()) r[static_cast<size_t>(k - lo)] = c;
    return r;
}

Laurent zp_to_laurent(const ZP& p) {
    Laurent r;
    for (size_t i = 0; i < p.size(); ++i) r += Laurent::term(p[i], static_cast<std::int64_t>(i));
    return r;
}

Int zp_content(const ZP& p) {
    Int g = 0;
    for (const Int& c : p) g = boost::multiprecision::gcd(g, c);
    if (g < 0) g = -g;
    return g;
}

ZP zp_divide_scalar(const ZP& p, const Int& d) {
    ZP r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] / d;
    return r;
}

/* Pseudo-remainder: lc(B)^(deg A - deg B + 1) * A mod B. Requires deg A >= deg B >= 0. */
ZP zp_prem(ZP A, const ZP& B) {
    const Int& lcB = B.back();
    int e = zp_deg(A) - zp_deg(B) + 1;
    while (!A.empty() && zp_deg(A) >= zp_deg(B)) {
        int shift = zp_deg(A) - zp_deg(B);
        Int lcA = A.back();
        for (Int& c : A) c *= lcB;
        for (size_t i = 0; i < B.size(); ++i)
            A[static_cast<size_t>(shift) + i] -= lcA * B[i];
        zp_trim(A);
        --e;
    }
    // Account for the scalings not performed because the degree dropped fast.
    for (; e > 0; --e)
        for (Int& c : A) c *= lcB;
    return A;
}

Int int_pow(const Int& b, int e) {
    Int r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

/* gcd of primitive polynomials via the subresultant remainder sequence;
   the result is primitive with positive leading coefficient. */
ZP zp_gcd_primitive(ZP A, ZP B) {
    if (zp_deg(A) < zp_deg(B)) std::swap(A, B);
    if (B.empty()) return A;
    Int g = 1, h = 1;
    while (true) {
        int d = zp_deg(A) - zp_deg(B);
        ZP R = zp_prem(A, B);
        if (R.empty()) break;
        if (zp_deg(R) == 0) { B = {Int(1)}; break; }
        Int divisor = g * int_pow(h, d);
        A = std::move(B);
        B = zp_divide_scalar(R, divisor);
        g = A.back();
        if (d > 0) h = int_pow(g, d) / int_pow(h, d - 1);
    }
    Int c = zp_content(B);
    ZP r = zp_divide_scalar(B, c);
    if (r.back() < 0)
        for (Int& x : r) x = -x;
    return r;
}

} // namespace

Laurent gcd(const Laurent& a, const Laurent& b) {
    if (a.is_zero()) return canonical_form(b);
    if (b.is_zero()) return canonical_form(a);
    ZP pa = zp_from(a), pb = zp_from(b);
    Int ca = zp_content(pa), cb = zp_content(pb);
    Int gc = boost::multiprecision::gcd(ca, cb);
    ZP gp = zp_gcd_primitive(zp_divide_scalar(pa, ca), zp_divide_scalar(pb, cb));
    return canonical_form(Laurent(gc) * zp_to_laurent(gp));
}

Laurent lcm(const Laurent& a, const Laurent& b) {
    if (a.is_zero() || b.is_zero()) return Laurent();
    return canonical_form(a * exact_div(b, gcd(a, b)));
}

Laurent exact_div(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw DivisionError("division by zero");
    if (a.is_zero()) return Laurent();
    std::int64_t shift = a.lowest_exp() - b.lowest_exp();
    ZP A = zp_from(a), B = zp_from(b);
    int m = zp_deg(A), n = zp_deg(B);
    if (m < n) throw DivisionError("not divisible");
    ZP Q(static_cast<size_t>(m - n) + 1);
    for (int k = m - n; k >= 0; --k) {
        Int lead = A.size() > static_cast<size_t>(n + k) ? A[static_cast<size_t>(n + k)] : Int(0);
        if (lead == 0) { Q[static_cast<size_t>(k)] = 0; continue; }
        if (lead % B.back() != 0) throw DivisionError("not divisible");
        Int q = lead / B.back();
        Q[static_cast<size_t>(k)] = q;
        for (size_t i = 0; i < B.size(); ++i)
            A[static_cast<size_t>(k) + i] -= q * B[i];
        zp_trim(A);
    }
    if (!A.empty()) throw DivisionError("not divisible");
    return zp_to_laurent(Q).shifted(shift);
}

std::string to_string(const Int& n) {
    return n.str();
}

std::string to_string(const Laurent& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        const auto& [k, c] = *it;
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (k == 0) {
            out += a.str();
        } else {
            if (a != 1) out += a.str();
            out += "t";
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

Laurent parse_laurent(std::string_view text) {
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto read_digits = [&]() -> std::string {
        std::string d;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) d += text[i++];
        return d;
    };

    Laurent result;
    skip_ws();
    if (i == text.size()) throw ParseError("empty polynomial");
    bool first = true;
    while (i < text.size()) {
        int sign = 1;
        skip_ws();
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms");
        }
        std::string digits = read_digits();
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        bool has_t = false;
        std::int64_t exp = 0;
        if (i < text.size() && text[i] == '*') ++i;
        if (i < text.size() && text[i] == 't') {
            has_t = true;
            exp = 1;
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int esign = 1;
                if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
                    esign = text[i] == '-' ? -1 : 1;
                    ++i;
                }
                std::string ed = read_digits();
                if (ed.empty()) throw ParseError("missing exponent after '^'");
                exp = esign * std::stoll(ed);
            }
        }
        if (digits.empty() && !has_t) throw ParseError("expected term");
        result += Laurent::term(sign * coeff, has_t ? exp : 0);
        first = false;
        skip_ws();
    }
    return result;
}

RatFunc::RatFunc(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionError("division by zero");
    reduce();
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Laurent(1);
        return;
    }
    Laurent g = gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    Laurent u = canonical_unit(den_);
    num_ = num_ * u;
    den_ = den_ * u;
}

const Laurent& RatFunc::as_laurent() const {
    if (!is_laurent()) throw MathError("rational function is not integral: " + to_string(*this));
    return num_;
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionError("division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RatFunc& f) {
    if (f.is_laurent()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace tangles
