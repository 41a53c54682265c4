#include "macd/xpoly.hpp"

#include <algorithm>
#include <numeric>

namespace macd {

// ---------------------------------------------------------------------------
// Point
// ---------------------------------------------------------------------------

Point Point::from_monomials(const std::vector<std::pair<int, Mono3>>& cs) {
    std::vector<Coord> coords;
    coords.reserve(cs.size());
    for (const auto& [sign, m] : cs) coords.push_back(Coord{true, sign < 0 ? -1 : +1, m, {}});
    return Point(std::move(coords));
}

Point Point::from_field_elems(const std::vector<FieldElem>& cs) {
    std::vector<Coord> coords;
    coords.reserve(cs.size());
    for (const auto& c : cs) {
        if (c.is_zero()) throw DimensionMismatch("point coordinate must be nonzero");
        if (auto m = c.as_signed_monomial()) {
            coords.push_back(Coord{true, m->first, m->second, {}});
        } else {
            coords.push_back(Coord{false, +1, {}, c});
        }
    }
    return Point(std::move(coords));
}

bool Point::all_monomial() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Coord& c) { return c.monomial; });
}

std::vector<FieldElem> Point::values() const {
    std::vector<FieldElem> v;
    v.reserve(coords_.size());
    for (const auto& c : coords_) v.push_back(c.value());
    return v;
}

Point Point::scaled_by_a(int k) const { return scaled_by(+1, Mono3{0, 0, k}); }

Point Point::scaled_by(int sign, const Mono3& m) const {
    Point r = *this;
    for (auto& c : r.coords_) {
        if (c.monomial) {
            c.mono = c.mono + m;
            c.sign *= sign < 0 ? -1 : +1;
        } else {
            c.general = c.general * FieldElem::monomial(sign, m);
        }
    }
    return r;
}

Point Point::inverted() const {
    Point r = *this;
    for (auto& c : r.coords_) {
        if (c.monomial) {
            c.mono = -c.mono;
        } else {
            c.general = c.general.inverse();
        }
    }
    return r;
}

Point Point::permuted(const std::vector<int>& one_line) const {
    std::vector<Coord> out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        out[static_cast<std::size_t>(one_line[i] - 1)] = coords_[i];
    }
    return Point(std::move(out));
}

Point Point::natural_raise() const {
    std::vector<Coord> out;
    out.reserve(coords_.size());
    for (std::size_t i = 1; i < coords_.size(); ++i) out.push_back(coords_[i]);
    Coord first = coords_.front();
    if (first.monomial) {
        first.mono.q += 1;
    } else {
        first.general = first.general * FieldElem::q();
    }
    out.push_back(first);
    return Point(std::move(out));
}

Point Point::swapped(int i) const {
    Point r = *this;
    std::swap(r.coords_[static_cast<std::size_t>(i - 1)], r.coords_[static_cast<std::size_t>(i)]);
    return r;
}

bool Point::operator==(const Point& o) const {
    if (coords_.size() != o.coords_.size()) return false;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (!(coord_value(static_cast<int>(i)) == o.coord_value(static_cast<int>(i)))) return false;
    }
    return true;
}

std::string Point::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].value().to_string();
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// XPolynomial
// ---------------------------------------------------------------------------

XPolynomial XPolynomial::constant(int n, const FieldElem& c, bool laurent) {
    XPolynomial p(n, laurent);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<std::size_t>(n), 0), c);
    return p;
}

XPolynomial XPolynomial::monomial(int n, const ExpVec& e, const FieldElem& c) {
    XPolynomial p(n, std::any_of(e.begin(), e.end(), [](int x) { return x < 0; }));
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

XPolynomial XPolynomial::variable(int n, int i) {
    ExpVec e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(n, e, FieldElem::one());
}

int XPolynomial::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

FieldElem XPolynomial::coefficient(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? FieldElem::zero() : it->second;
}

void XPolynomial::add_term(const ExpVec& e, const FieldElem& c) {
    if (c.is_zero()) return;
    if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) laurent_ = true;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void XPolynomial::check_compatible(const XPolynomial& o) const {
    if (n_ != o.n_) throw DimensionMismatch("mixed variable counts");
}

XPolynomial XPolynomial::operator+(const XPolynomial& o) const {
    check_compatible(o);
    XPolynomial r = *this;
    r.laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPolynomial XPolynomial::operator-(const XPolynomial& o) const {
    check_compatible(o);
    XPolynomial r = *this;
    r.laurent_ = laurent_ || o.laurent_;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XPolynomial XPolynomial::operator-() const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

XPolynomial XPolynomial::operator*(const XPolynomial& o) const {
    check_compatible(o);
    XPolynomial r(n_, laurent_ || o.laurent_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (std::size_t k = 0; k < e.size(); ++k) e[k] += e2[k];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

bool XPolynomial::operator==(const XPolynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

XPolynomial XPolynomial::scaled(const FieldElem& c) const {
    XPolynomial r(n_, laurent_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

XPolynomial XPolynomial::x_shifted(const ExpVec& s) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        for (std::size_t k = 0; k < e2.size(); ++k) e2[k] += s[k];
        r.add_term(e2, c);
    }
    return r;
}

FieldElem XPolynomial::substitute(const Point& pt) const {
    if (pt.n() != n_) throw DimensionMismatch("point arity != variable count");
    if (pt.all_monomial()) {
        // Fast path: each x-exponent vector maps straight to one signed
        // parameter monomial, so a term costs a single multiply-add.
        FieldElem r = FieldElem::zero();
        for (const auto& [e, c] : terms_) {
            Mono3 m{};
            int sign = +1;
            for (int i = 0; i < n_; ++i) {
                const auto& co = pt.coord(i);
                const int k = e[static_cast<std::size_t>(i)];
                m.q += co.mono.q * k;
                m.t += co.mono.t * k;
                m.a += co.mono.a * k;
                if (co.sign < 0 && (k & 1)) sign = -sign;
            }
            r += c * FieldElem::monomial(sign, m);
        }
        return r;
    }
    FieldElem r = FieldElem::zero();
    for (const auto& [e, c] : terms_) {
        FieldElem v = c;
        for (int i = 0; i < n_; ++i) v *= pt.coord_value(i).pow(e[static_cast<std::size_t>(i)]);
        r += v;
    }
    return r;
}

XPolynomial XPolynomial::vars_scaled(const FieldElem& c) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, k] : terms_) {
        const long d = std::accumulate(e.begin(), e.end(), 0L);
        r.add_term(e, k * c.pow(d));
    }
    return r;
}

XPolynomial XPolynomial::vars_inverted() const {
    XPolynomial r(n_, true);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        for (auto& x : e2) x = -x;
        r.terms_.emplace(std::move(e2), c);
    }
    return r;
}

XPolynomial XPolynomial::vars_permuted(const std::vector<int>& one_line) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            e2[static_cast<std::size_t>(one_line[i] - 1)] = e[i];
        }
        r.add_term(e2, c);
    }
    return r;
}

XPolynomial XPolynomial::vars_swapped(int i) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) {
        ExpVec e2 = e;
        std::swap(e2[static_cast<std::size_t>(i - 1)], e2[static_cast<std::size_t>(i)]);
        r.add_term(e2, c);
    }
    return r;
}

XPolynomial XPolynomial::coeffs_inverted_params() const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.inverted_params());
    return r;
}

XPolynomial XPolynomial::homogeneous_component(int d) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), 0) == d) r.terms_.emplace(e, c);
    }
    return r;
}

std::optional<XPolynomial> XPolynomial::divided_by_var(int j) const {
    XPolynomial r(n_, laurent_);
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(j - 1)] < 1 && !laurent_) return std::nullopt;
        ExpVec e2 = e;
        e2[static_cast<std::size_t>(j - 1)] -= 1;
        r.add_term(e2, c);
    }
    return r;
}

bool XPolynomial::is_symmetric() const {
    for (int i = 1; i < n_; ++i) {
        if (!(vars_swapped(i) == *this)) return false;
    }
    return true;
}

XPolynomial divided_difference(const XPolynomial& p, int i) {
    if (i < 1 || i >= p.n()) throw DimensionMismatch("divided difference index out of range");
    XPolynomial r(p.n(), p.laurent());
    const auto ia = static_cast<std::size_t>(i - 1);
    const auto ib = static_cast<std::size_t>(i);
    for (const auto& [e, c] : p.terms()) {
        const int a = e[ia];
        const int b = e[ib];
        if (a == b) continue;
        // (x^a y^b - x^b y^a)/(x - y), exact in the Laurent ring
        ExpVec base = e;
        if (a > b) {
            for (int k = 0; k < a - b; ++k) {
                base[ia] = a - 1 - k;
                base[ib] = b + k;
                r.add_term(base, c);
            }
        } else {
            for (int k = 0; k < b - a; ++k) {
                base[ia] = a + k;
                base[ib] = b - 1 - k;
                r.add_term(base, -c);
            }
        }
    }
    return r;
}

std::string XPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            const int k = e[static_cast<std::size_t>(i)];
            if (k == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (k != 1) mono += "^" + std::to_string(k);
        }
        std::string cs = c.to_string();
        const bool needs_paren =
            !mono.empty() && (c.num().num_terms() > 1 || !c.den().is_one());
        if (needs_paren && cs.front() != '(') cs = "(" + cs + ")";
        std::string term;
        if (mono.empty()) {
            term = cs;
        } else if (c.is_one()) {
            term = mono;
        } else if ((-c).is_one()) {
            term = "-" + mono;
        } else {
            term = cs + " * " + mono;
        }
        if (!first) s += " + ";
        first = false;
        s += term;
    }
    return s;
}

// ---------------------------------------------------------------------------
// RationalX
// ---------------------------------------------------------------------------

RationalX::RationalX(XPolynomial num, XPolynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.n() != den_.n()) throw DimensionMismatch("rational expression arity");
}

bool RationalX::den_is_one() const {
    return den_.num_terms() == 1 && den_.terms().begin()->second.is_one() &&
           std::all_of(den_.terms().begin()->first.begin(), den_.terms().begin()->first.end(),
                       [](int e) { return e == 0; });
}

RationalX RationalX::operator+(const RationalX& o) const {
    if (den_ == o.den_) return RationalX(num_ + o.num_, den_);
    return RationalX(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalX RationalX::operator-(const RationalX& o) const {
    if (den_ == o.den_) return RationalX(num_ - o.num_, den_);
    return RationalX(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalX RationalX::operator*(const RationalX& o) const {
    return RationalX(num_ * o.num_, den_ * o.den_);
}

RationalX RationalX::operator-() const { return RationalX(-num_, den_); }

RationalX RationalX::scaled(const FieldElem& c) const { return RationalX(num_.scaled(c), den_); }

RationalX RationalX::mul_poly(const XPolynomial& p) const { return RationalX(num_ * p, den_); }

RationalX RationalX::div_var(int j) const {
    return RationalX(num_, den_ * XPolynomial::variable(n(), j));
}

RationalX RationalX::vars_scaled(const FieldElem& c) const {
    return RationalX(num_.vars_scaled(c), den_.vars_scaled(c));
}

RationalX RationalX::vars_permuted(const std::vector<int>& one_line) const {
    return RationalX(num_.vars_permuted(one_line), den_.vars_permuted(one_line));
}

RationalX RationalX::vars_swapped(int i) const {
    return RationalX(num_.vars_swapped(i), den_.vars_swapped(i));
}

RationalX RationalX::coeffs_inverted_params() const {
    return RationalX(num_.coeffs_inverted_params(), den_.coeffs_inverted_params());
}

bool RationalX::equals(const RationalX& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

FieldElem RationalX::evaluate(const Point& pt) const {
    const FieldElem d = den_.substitute(pt);
    if (d.is_zero()) throw DivisionByZero();
    return num_.substitute(pt) / d;
}

std::string RationalX::to_string() const {
    if (den_is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace macd
