#include "macd/exactalg.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <sstream>

namespace macd {

const ParamPoly& ParamPoly::zero() {
    static const ParamPoly z;
    return z;
}

const ParamPoly& ParamPoly::one() {
    static const ParamPoly o{BigRat(1)};
    return o;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.is_unit() && terms_.begin()->second == 1;
}

const std::pair<const Mono3, BigRat>& ParamPoly::leading_term() const {
    if (terms_.empty()) throw ArithmeticCorruption("leading_term of zero polynomial");
    return *terms_.rbegin();
}

Mono3 ParamPoly::min_exponents() const {
    if (terms_.empty()) return {};
    Mono3 m = terms_.begin()->first;
    for (const auto& [e, c] : terms_) {
        m.q = std::min(m.q, e.q);
        m.t = std::min(m.t, e.t);
        m.a = std::min(m.a, e.a);
    }
    return m;
}

int ParamPoly::degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const int x = var == 0 ? e.q : var == 1 ? e.t : e.a;
        d = first ? x : std::max(d, x);
        first = false;
    }
    return d;
}

std::pair<Mono3, ParamPoly> ParamPoly::factor_unit() const {
    const Mono3 u = min_exponents();
    return {u, shifted(-u)};
}

void ParamPoly::add_term(const Mono3& m, const BigRat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const {
    ParamPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_single_term()) {
        const auto& [m, c] = *o.terms_.begin();
        return shifted(m).scaled(c);
    }
    if (is_single_term()) return o * *this;
    ParamPoly r;
    for (const auto& [m1, c1] : terms_)
        for (const auto& [m2, c2] : o.terms_) r.add_term(m1 + m2, c1 * c2);
    return r;
}

ParamPoly ParamPoly::scaled(const BigRat& c) const {
    if (c == 0) return {};
    ParamPoly r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

ParamPoly ParamPoly::shifted(const Mono3& m) const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c);
    return r;
}

ParamPoly ParamPoly::inverted_params() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

bool ParamPoly::has_integer_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

BigInt ParamPoly::integer_content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
        g = ::gcd(g, BigInt(c.get_num()));
        if (g == 1) break;
    }
    return g;
}

std::optional<ParamPoly> ParamPoly::divided_exact(const ParamPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    if (is_zero()) return ParamPoly::zero();
    if (d.is_single_term()) {
        const auto& [dm, dc] = *d.terms_.begin();
        ParamPoly r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m - dm, c / dc);
        return r;
    }
    // Unit monomials are invertible, so split them off; what remains is a
    // division of true polynomials whose exact quotient, if it exists, is
    // again a true polynomial. Leading-term reduction then terminates and
    // any step needing a negative quotient exponent disproves exactness.
    const auto [pu, pres] = factor_unit();
    const auto [du, dres] = d.factor_unit();
    const auto& [dm, dc] = dres.leading_term();
    ParamPoly rem = pres;
    ParamPoly quot;
    while (!rem.is_zero()) {
        const auto& [rm, rc] = rem.leading_term();
        const Mono3 qe = rm - dm;
        if (qe.q < 0 || qe.t < 0 || qe.a < 0) return std::nullopt;
        const BigRat qc = rc / dc;
        quot.add_term(qe, qc);
        rem -= dres.shifted(qe).scaled(qc);
    }
    return quot.shifted(pu - du);
}

// ---------------------------------------------------------------------------
// Multivariate gcd: integer-content split + primitive PRS, with a modular
// univariate specialization used as a fast certificate of coprimality.
// ---------------------------------------------------------------------------

namespace {

int exp_of(const Mono3& m, int var) { return var == 0 ? m.q : var == 1 ? m.t : m.a; }

ParamPoly coeff_of_var_power(const ParamPoly& p, int var, int k) {
    ParamPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (exp_of(e, var) != k) continue;
        Mono3 m = e;
        (var == 0 ? m.q : var == 1 ? m.t : m.a) = 0;
        r.add_term(m, c);
    }
    return r;
}

ParamPoly shift_var(const ParamPoly& p, int var, int k) {
    Mono3 s{};
    (var == 0 ? s.q : var == 1 ? s.t : s.a) = k;
    return p.shifted(s);
}

constexpr std::uint64_t kModulus = 998244353;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    b %= kModulus;
    while (e) {
        if (e & 1) r = r * b % kModulus;
        b = b * b % kModulus;
        e >>= 1;
    }
    return r;
}

std::uint64_t coeff_mod(const BigRat& c) {
    // coefficients are integers here
    return mpz_fdiv_ui(c.get_num().get_mpz_t(), kModulus);
}

// Specialize all variables except `var` at the given points (mod p) and
// return dense univariate coefficients, constant term first.
std::vector<std::uint64_t> specialize_mod(const ParamPoly& p, int var, std::uint64_t x0,
                                          std::uint64_t x1) {
    std::vector<std::uint64_t> out(static_cast<std::size_t>(p.degree_in(var)) + 1, 0);
    for (const auto& [e, c] : p.terms()) {
        std::array<int, 3> es{e.q, e.t, e.a};
        std::uint64_t v = coeff_mod(c);
        int oi = 0;
        for (int w = 0; w < 3; ++w) {
            if (w == var) continue;
            v = v * pow_mod(oi == 0 ? x0 : x1, static_cast<std::uint64_t>(es[w])) % kModulus;
            ++oi;
        }
        auto& slot = out[static_cast<std::size_t>(es[var])];
        slot = (slot + v) % kModulus;
    }
    return out;
}

int univariate_gcd_degree_mod(std::vector<std::uint64_t> f, std::vector<std::uint64_t> g) {
    auto trim = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(f);
    trim(g);
    while (!g.empty()) {
        // f mod g
        const std::uint64_t inv = pow_mod(g.back(), kModulus - 2);
        while (f.size() >= g.size()) {
            const std::uint64_t q = f.back() * inv % kModulus;
            const std::size_t off = f.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) {
                f[off + i] = (f[off + i] + kModulus - q * g[i] % kModulus) % kModulus;
            }
            trim(f);
            if (f.empty()) break;
        }
        std::swap(f, g);
    }
    return static_cast<int>(f.size()) - 1;
}

// True when a modular specialization certifies that gcd(A,B) has degree 0
// in `var`. Conservative: false means "unknown".
bool certify_coprime_in_var(const ParamPoly& A, const ParamPoly& B, int var) {
    static constexpr std::uint64_t kPoints[][2] = {{3, 5}, {7, 11}, {13, 17}, {19, 23}};
    const int da = A.degree_in(var);
    const int db = B.degree_in(var);
    for (const auto& pt : kPoints) {
        auto fa = specialize_mod(A, var, pt[0], pt[1]);
        auto fb = specialize_mod(B, var, pt[0], pt[1]);
        // The certificate needs the leading v-coefficients to survive the
        // specialization, otherwise the gcd degree can drop.
        if (static_cast<int>(fa.size()) - 1 != da || fa.back() == 0) continue;
        if (static_cast<int>(fb.size()) - 1 != db || fb.back() == 0) continue;
        return univariate_gcd_degree_mod(fa, fb) == 0;
    }
    return false;
}

ParamPoly content_in_var(const ParamPoly& p, int var);

BigInt content_gcd(const ParamPoly& A, const ParamPoly& B) {
    return gcd(A.integer_content(), B.integer_content());
}

// gcd of two polynomials, both with integer coefficients, no Laurent part.
ParamPoly gcd_rec(ParamPoly A, ParamPoly B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;
    if (A == B) return A;

    // Fast certificate: when a modular specialization shows the gcd has
    // degree zero in every variable occurring in both operands, the gcd is
    // the integer content gcd and the PRS machinery is skipped entirely.
    {
        bool trivial = true;
        for (int w = 0; w < 3 && trivial; ++w) {
            if (A.degree_in(w) > 0 && B.degree_in(w) > 0) {
                trivial = certify_coprime_in_var(A, B, w);
            }
        }
        if (trivial) return ParamPoly(BigRat(content_gcd(A, B)));
    }

    int var = -1;
    for (int w = 2; w >= 0; --w) {
        if (A.degree_in(w) > 0 && B.degree_in(w) > 0) {
            var = w;
            break;
        }
    }
    if (var < 0) {
        // no shared variable, but the certificate could not rule out a
        // constant factor beyond the contents; the content gcd is exact here
        return ParamPoly(BigRat(content_gcd(A, B)));
    }

    const ParamPoly ca = content_in_var(A, var);
    const ParamPoly cb = content_in_var(B, var);
    const ParamPoly c = gcd_rec(ca, cb);
    auto da = A.divided_exact(ca);
    auto db = B.divided_exact(cb);
    if (!da || !db) throw ArithmeticCorruption("content division failed");
    A = *da;
    B = *db;
    if (A.degree_in(var) < B.degree_in(var)) std::swap(A, B);

    // primitive pseudo-remainder sequence
    while (true) {
        const int na = A.degree_in(var);
        const int nb = B.degree_in(var);
        const ParamPoly lcB = coeff_of_var_power(B, var, nb);
        ParamPoly R = A;
        int e = na - nb + 1;
        while (!R.is_zero() && R.degree_in(var) >= nb) {
            const int nr = R.degree_in(var);
            const ParamPoly lcR = coeff_of_var_power(R, var, nr);
            R = R * lcB - shift_var(B * lcR, var, nr - nb);
            --e;
        }
        (void)e;  // primitive PRS renormalizes below, the extra lcB powers are irrelevant
        if (R.is_zero()) {
            auto pb = B.divided_exact(content_in_var(B, var));
            if (!pb) throw ArithmeticCorruption("primitive part division failed");
            return c * *pb;
        }
        if (R.degree_in(var) == 0) return c;
        auto pr = R.divided_exact(content_in_var(R, var));
        if (!pr) throw ArithmeticCorruption("primitive part division failed");
        A = std::move(B);
        B = std::move(*pr);
    }
}

ParamPoly content_in_var(const ParamPoly& p, int var) {
    ParamPoly g;
    for (int k = 0; k <= p.degree_in(var); ++k) {
        const ParamPoly c = coeff_of_var_power(p, var, k);
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_one()) break;
    }
    return g;
}

}  // namespace

ParamPoly ParamPoly::gcd(const ParamPoly& x, const ParamPoly& y) {
    if (x.is_zero() && y.is_zero()) return zero();
    const Mono3 mx = x.min_exponents();
    const Mono3 my = y.min_exponents();
    if (mx.q < 0 || mx.t < 0 || mx.a < 0 || my.q < 0 || my.t < 0 || my.a < 0) {
        throw ArithmeticCorruption("gcd requires Laurent-free operands");
    }
    ParamPoly g = gcd_rec(x, y);
    // sign convention: the lowest monomial's coefficient is positive
    if (!g.is_zero() && g.terms().begin()->second < 0) g = -g;
    return g;
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

void append_var(std::string& s, const char* name, int e, bool& first) {
    if (e == 0) return;
    if (!first) s += "*";
    first = false;
    s += name;
    if (e != 1) {
        s += "^";
        s += std::to_string(e);
    }
}

}  // namespace

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first_term = true;
    for (const auto& [m, c] : terms_) {
        BigRat coeff = c;
        if (first_term) {
            if (coeff < 0) {
                s += "-";
                coeff = -coeff;
            }
        } else {
            s += coeff < 0 ? " - " : " + ";
            if (coeff < 0) coeff = -coeff;
        }
        first_term = false;
        std::string mono;
        bool first_var = true;
        append_var(mono, "q", m.q, first_var);
        append_var(mono, "t", m.t, first_var);
        append_var(mono, "a", m.a, first_var);
        if (mono.empty()) {
            s += coeff.get_str();
        } else {
            if (coeff != 1) {
                s += coeff.get_str();
                s += "*";
            }
            s += mono;
        }
    }
    return s;
}

}  // namespace macd
