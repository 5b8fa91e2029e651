#include "domcert/numbers.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace domcert {

namespace {

using Poly = std::vector<Rational>;  // coefficient of x^i at index i

int pdeg(const Poly &p) {
    for (int i = (int)p.size() - 1; i >= 0; i--)
        if (p[i] != 0) return i;
    return -1;
}

void ptrim(Poly &p) { p.resize(std::max(0, pdeg(p) + 1)); }

Rational peval(const Poly &p, const Rational &x) {
    Rational acc = 0;
    for (int i = (int)p.size() - 1; i >= 0; i--) acc = acc * x + p[i];
    return acc;
}

Poly pderiv(const Poly &p) {
    Poly d;
    for (size_t i = 1; i < p.size(); i++) d.push_back(Rational((long)i) * p[i]);
    return d;
}

// remainder of a by b (b nonzero)
Poly prem(Poly a, const Poly &b) {
    int db = pdeg(b);
    Rational lead = b[db];
    while (pdeg(a) >= db) {
        int da = pdeg(a);
        Rational f = a[da] / lead;
        for (int i = 0; i <= db; i++) a[da - db + i] -= f * b[i];
        a[da] = 0;  // kill rounding-free residue exactly
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

int sgn_q(const Rational &r) { return sgn(r); }

}  // namespace

Rational parse_rational(const std::string &s) {
    std::string t;
    for (char c : s)
        if (!std::isspace((unsigned char)c)) t += c;
    if (t.empty()) throw InputError("empty rational literal");
    auto dot = t.find('.');
    if (dot != std::string::npos) {
        if (t.find('/') != std::string::npos) throw InputError("bad rational: " + s);
        std::string intpart = t.substr(0, dot), frac = t.substr(dot + 1);
        bool neg = false;
        if (!intpart.empty() && (intpart[0] == '-' || intpart[0] == '+')) {
            neg = intpart[0] == '-';
            intpart = intpart.substr(1);
        }
        if (intpart.empty()) intpart = "0";
        for (char c : intpart + frac)
            if (!std::isdigit((unsigned char)c)) throw InputError("bad rational: " + s);
        mpz_class num(intpart + frac);
        mpz_class den = 1;
        for (size_t i = 0; i < frac.size(); i++) den *= 10;
        Rational r(num, den);
        r.canonicalize();
        return neg ? Rational(-r) : r;
    }
    try {
        Rational r(t);
        r.canonicalize();
        if (r.get_den() == 0) throw InputError("zero denominator: " + s);
        return r;
    } catch (const std::invalid_argument &) {
        throw InputError("bad rational: " + s);
    }
}

std::string rational_str(const Rational &r) { return r.get_str(); }

// ---------------------------------------------------------------- field ----

std::shared_ptr<const AlgebraicField> AlgebraicField::make(const std::vector<Rational> &coeffs,
                                                           const Rational &lo_in,
                                                           const Rational &hi_in) {
    Poly p(coeffs);
    ptrim(p);
    if (pdeg(p) < 1) throw InputError("invalid modulus: polynomial is constant");
    if (lo_in > hi_in) throw InputError("invalid interval: lo > hi");

    auto f = std::shared_ptr<AlgebraicField>(new AlgebraicField());
    f->deg_ = pdeg(p);

    // primitive integer form, positive leading coefficient
    mpz_class den = 1;
    for (auto &c : p) den = lcm(den, c.get_den());
    std::vector<mpz_class> ip(f->deg_ + 1);
    for (int i = 0; i <= f->deg_; i++) ip[i] = mpz_class(p[i] * den);
    mpz_class g = 0;
    for (auto &c : ip) g = gcd(g, c);
    if (sgn(ip[f->deg_]) < 0) g = -g;
    for (auto &c : ip) c /= g;
    f->poly_int_ = ip;

    f->monic_.assign(f->deg_ + 1, Rational(0));
    for (int i = 0; i <= f->deg_; i++) f->monic_[i] = Rational(ip[i]) / Rational(ip[f->deg_]);

    // reduction rows: x^(d+k) mod P for k = 0..d-2
    if (f->deg_ >= 2) {
        f->red_.assign(f->deg_ - 1, Poly());
        // x^d mod P = -(c_0 + ... + c_{d-1} x^{d-1}), then shift by x repeatedly
        Poly row(f->deg_);
        for (int i = 0; i < f->deg_; i++) row[i] = -f->monic_[i];
        for (int k = 0; k <= f->deg_ - 2; k++) {
            f->red_[k] = row;
            Poly nxt(f->deg_, Rational(0));
            Rational top = row[f->deg_ - 1];
            for (int i = f->deg_ - 1; i >= 1; i--) nxt[i] = row[i - 1];
            if (top != 0)
                for (int i = 0; i < f->deg_; i++) nxt[i] += top * -f->monic_[i];
            row = nxt;
        }
    } else {
        f->red_.clear();
    }

    // Sturm sequence of the squarefree part is not needed: we only count
    // distinct roots, and the standard sequence of P handles that as long as
    // gcd(P,P') is constant; otherwise fall back to the squarefree part.
    {
        Poly a = f->monic_, b = pderiv(f->monic_);
        ptrim(a);
        ptrim(b);
        // squarefree part if needed
        Poly g0 = a, g1 = b;
        while (pdeg(g1) >= 0) {
            Poly r = prem(g0, g1);
            g0 = g1;
            g1 = r;
        }
        if (pdeg(g0) > 0) {
            // divide a by g0 (exact)
            Poly q(pdeg(a) - pdeg(g0) + 1, Rational(0));
            Poly rem = a;
            int dg = pdeg(g0);
            while (pdeg(rem) >= dg) {
                int dr = pdeg(rem);
                Rational fq = rem[dr] / g0[dg];
                q[dr - dg] = fq;
                for (int i = 0; i <= dg; i++) rem[dr - dg + i] -= fq * g0[i];
                rem[dr] = 0;
                ptrim(rem);
            }
            a = q;
            b = pderiv(a);
        }
        f->sturm_.push_back(a);
        if (pdeg(b) >= 0) f->sturm_.push_back(b);
        while (f->sturm_.size() >= 2) {
            Poly r = prem(f->sturm_[f->sturm_.size() - 2], f->sturm_.back());
            if (pdeg(r) < 0) break;
            for (auto &c : r) c = -c;
            f->sturm_.push_back(r);
        }
    }

    f->lo_ = lo_in;
    f->hi_ = hi_in;
    int slo = f->sign_at(f->lo_), shi = f->sign_at(f->hi_);
    if (slo == 0) {
        f->hi_ = f->lo_;
    } else if (shi == 0) {
        f->lo_ = f->hi_;
    } else if (slo == shi) {
        throw InputError("invalid interval: no sign change across [" + rational_str(lo_in) +
                         ", " + rational_str(hi_in) + "]");
    } else {
        // shrink until the interval isolates a single root
        while (f->sturm_count(f->lo_, f->hi_) > 1) {
            Rational mid = (f->lo_ + f->hi_) / 2;
            int sm = f->sign_at(mid);
            if (sm == 0) {
                f->lo_ = f->hi_ = mid;
                break;
            }
            if (sm != slo)
                f->hi_ = mid;
            else
                f->lo_ = mid;
        }
    }
    if (f->lo_ == f->hi_ && f->deg_ > 1) {
        // exact rational root of a higher-degree modulus: still usable, sign
        // evaluation just becomes exact evaluation at the root.
    }
    if (f->deg_ == 1) {
        f->rational_root_ = -f->monic_[0];
        f->lo_ = f->hi_ = f->rational_root_;
    }
    f->orig_lo_ = f->lo_;
    f->orig_hi_ = f->hi_;
    return f;
}

std::shared_ptr<const AlgebraicField> AlgebraicField::nth_root(const Rational &r, int n) {
    if (n < 1) throw InputError("nthroot: index must be >= 1");
    if (r <= 0) throw InputError("nthroot: radicand must be positive");
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[0] = -r;
    coeffs[n] = 1;
    Rational hi = r < 1 ? Rational(1) : Rational(r);
    return make(coeffs, Rational(0), hi + 1);
}

int AlgebraicField::sign_at(const Rational &x) const {
    Rational acc = 0;
    for (int i = deg_; i >= 0; i--) acc = acc * x + Rational(poly_int_[i]);
    return sgn_q(acc);
}

int AlgebraicField::sturm_count(const Rational &lo, const Rational &hi) const {
    auto variations = [&](const Rational &x) {
        int v = 0, prev = 0;
        for (const auto &p : sturm_) {
            int s = sgn_q(peval(p, x));
            if (s != 0) {
                if (prev != 0 && s != prev) v++;
                prev = s;
            }
        }
        return v;
    };
    return variations(lo) - variations(hi);
}

void AlgebraicField::interval(Rational &lo, Rational &hi) const {
    std::lock_guard<std::mutex> lk(mu_);
    lo = lo_;
    hi = hi_;
}

void AlgebraicField::refine_locked() const {
    if (lo_ == hi_) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = sign_at(mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        return;
    }
    if (sm == sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

void AlgebraicField::refine() const {
    std::lock_guard<std::mutex> lk(mu_);
    refine_locked();
}

void AlgebraicField::refine_to(const Rational &eps) const {
    std::lock_guard<std::mutex> lk(mu_);
    while (hi_ - lo_ > eps) refine_locked();
}

std::string AlgebraicField::header() const {
    std::ostringstream os;
    os << "minpoly: [";
    for (int i = 0; i <= deg_; i++) {
        if (i) os << ",";
        os << poly_int_[i].get_str();
    }
    // the as-constructed interval keeps headers independent of later refinement
    os << "]; interval: " << rational_str(orig_lo_) << " " << rational_str(orig_hi_);
    return os.str();
}

bool AlgebraicField::same_field(const AlgebraicField &o) const {
    if (this == &o) return true;
    if (deg_ != o.deg_ || poly_int_ != o.poly_int_) return false;
    // same minimal polynomial: intervals must select the same root
    Rational alo, ahi, blo, bhi;
    interval(alo, ahi);
    o.interval(blo, bhi);
    if (ahi < blo || bhi < alo) {
        // disjoint intervals can still hold the same root only if... they can't.
        return false;
    }
    // overlapping isolating intervals of the same squarefree-part polynomial
    // contain the same root
    return true;
}

// --------------------------------------------------------------- number ----

AlgebraicNumber::AlgebraicNumber(FieldPtr f, std::vector<Rational> coeffs)
    : field_(std::move(f)), c_(std::move(coeffs)) {
    if (!field_) throw InputError("algebraic number without field");
    if ((int)c_.size() > field_->degree()) {
        // reduce any stray high-degree coefficients
        std::vector<Rational> r(field_->degree(), Rational(0));
        for (int i = 0; i < (int)c_.size(); i++) {
            if (c_[i] == 0) continue;
            if (i < field_->degree()) {
                r[i] += c_[i];
            } else {
                const auto &row = field_->reduction_row(i - field_->degree());
                for (int j = 0; j < field_->degree(); j++)
                    if (row[j] != 0) r[j] += c_[i] * row[j];
            }
        }
        c_ = std::move(r);
    }
    c_.resize(field_->degree(), Rational(0));
}

AlgebraicNumber AlgebraicNumber::from_rational(const FieldPtr &f, const Rational &r) {
    std::vector<Rational> c(f->degree(), Rational(0));
    c[0] = r;
    return AlgebraicNumber(f, std::move(c));
}

AlgebraicNumber AlgebraicNumber::generator(const FieldPtr &f) {
    if (f->degree() == 1) return from_rational(f, f->rational_root());
    std::vector<Rational> c(f->degree(), Rational(0));
    c[1] = 1;
    return AlgebraicNumber(f, std::move(c));
}

bool AlgebraicNumber::is_zero() const {
    for (const auto &x : c_)
        if (x != 0) return false;
    return true;
}

bool AlgebraicNumber::is_rational_value() const {
    for (size_t i = 1; i < c_.size(); i++)
        if (c_[i] != 0) return false;
    return true;
}

const Rational &AlgebraicNumber::rational_value() const { return c_[0]; }

void AlgebraicNumber::check_same_field(const AlgebraicNumber &o) const {
    if (!field_->same_field(*o.field_)) throw InputError("mixed-field arithmetic");
}

AlgebraicNumber AlgebraicNumber::operator+(const AlgebraicNumber &o) const {
    check_same_field(o);
    std::vector<Rational> r(c_);
    for (size_t i = 0; i < r.size(); i++) r[i] += o.c_[i];
    return AlgebraicNumber(field_, std::move(r));
}

AlgebraicNumber AlgebraicNumber::operator-(const AlgebraicNumber &o) const {
    check_same_field(o);
    std::vector<Rational> r(c_);
    for (size_t i = 0; i < r.size(); i++) r[i] -= o.c_[i];
    return AlgebraicNumber(field_, std::move(r));
}

AlgebraicNumber AlgebraicNumber::operator-() const {
    std::vector<Rational> r(c_);
    for (auto &x : r) x = -x;
    return AlgebraicNumber(field_, std::move(r));
}

AlgebraicNumber AlgebraicNumber::scaled(const Rational &q) const {
    std::vector<Rational> r(c_);
    for (auto &x : r) x *= q;
    return AlgebraicNumber(field_, std::move(r));
}

AlgebraicNumber AlgebraicNumber::operator*(const AlgebraicNumber &o) const {
    check_same_field(o);
    int d = field_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; i++) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; j++) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    std::vector<Rational> r(prod.begin(), prod.begin() + d);
    for (int k = d; k < 2 * d - 1; k++) {
        if (prod[k] == 0) continue;
        const auto &row = field_->reduction_row(k - d);
        for (int j = 0; j < d; j++)
            if (row[j] != 0) r[j] += prod[k] * row[j];
    }
    return AlgebraicNumber(field_, std::move(r));
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw InputError("division by zero");
    int d = field_->degree();
    if (is_rational_value())
        return from_rational(field_, Rational(1) / c_[0]);
    // fast path: monomial q*a^k with binomial modulus x^d - c
    {
        int nz = -1, cnt = 0;
        for (int i = 0; i < d; i++)
            if (c_[i] != 0) {
                nz = i;
                cnt++;
            }
        bool binom = true;
        const auto &mp = field_->minpoly();
        for (int i = 1; i < d; i++)
            if (mp[i] != 0) binom = false;
        if (cnt == 1 && nz > 0 && binom) {
            Rational c0 = -Rational(mp[0]) / Rational(mp[d]);  // a^d = c0
            std::vector<Rational> r(d, Rational(0));
            r[d - nz] = Rational(1) / (c_[nz] * c0);  // a^nz * a^(d-nz) = c0
            return AlgebraicNumber(field_, std::move(r));
        }
    }
    // extended Euclid on (this, P) over Q[x]
    Poly a(c_);
    ptrim(a);
    Poly b(field_->degree() + 1);
    for (int i = 0; i <= d; i++) b[i] = Rational(field_->minpoly()[i]);
    // invariants: r0 = s0*a mod P-multiples, r1 = s1*a ...
    Poly r0 = b, r1 = a;
    Poly s0 = {Rational(0)}, s1 = {Rational(1)};
    while (pdeg(r1) > 0) {
        // quotient of r0 by r1
        Poly q(std::max(0, pdeg(r0) - pdeg(r1) + 1), Rational(0));
        Poly rem = r0;
        int d1 = pdeg(r1);
        while (pdeg(rem) >= d1) {
            int dr = pdeg(rem);
            Rational f = rem[dr] / r1[d1];
            q[dr - d1] += f;
            for (int i = 0; i <= d1; i++) rem[dr - d1 + i] -= f * r1[i];
            rem[dr] = 0;
            ptrim(rem);
        }
        // s2 = s0 - q*s1
        Poly qs(q.size() + s1.size(), Rational(0));
        for (size_t i = 0; i < q.size(); i++) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); j++) qs[i + j] += q[i] * s1[j];
        }
        Poly s2(std::max(s0.size(), qs.size()), Rational(0));
        for (size_t i = 0; i < s0.size(); i++) s2[i] += s0[i];
        for (size_t i = 0; i < qs.size(); i++) s2[i] -= qs[i];
        ptrim(s2);
        r0 = r1;
        r1 = rem;
        s0 = s1;
        s1 = s2;
    }
    if (pdeg(r1) != 0) throw InputError("reducible modulus: gcd with minimal polynomial is non-constant");
    Rational inv = Rational(1) / r1[0];
    for (auto &x : s1) x *= inv;
    return AlgebraicNumber(field_, std::move(s1));
}

AlgebraicNumber AlgebraicNumber::operator/(const AlgebraicNumber &o) const {
    return *this * o.inverse();
}

AlgebraicNumber AlgebraicNumber::pow(unsigned long e) const {
    AlgebraicNumber base = *this;
    AlgebraicNumber acc = from_rational(field_, 1);
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

void AlgebraicNumber::enclosure(Rational &out_lo, Rational &out_hi) const {
    Rational lo, hi;
    field_->interval(lo, hi);
    // interval Horner
    Rational alo = 0, ahi = 0;
    for (int i = (int)c_.size() - 1; i >= 0; i--) {
        // [alo,ahi] * [lo,hi]
        Rational p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rational nlo = std::min(std::min(p1, p2), std::min(p3, p4));
        Rational nhi = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = nlo + c_[i];
        ahi = nhi + c_[i];
    }
    out_lo = alo;
    out_hi = ahi;
}

int AlgebraicNumber::sign() const {
    if (is_rational_value()) return sgn_q(c_[0]);
    if (field_->is_rational()) return sgn_q(peval(Poly(c_.begin(), c_.end()), field_->rational_root()));
    for (int iter = 0;; iter++) {
        Rational lo, hi;
        field_->interval(lo, hi);
        if (lo == hi) return sgn_q(peval(Poly(c_.begin(), c_.end()), lo));
        Rational elo, ehi;
        enclosure(elo, ehi);
        if (elo > 0) return 1;
        if (ehi < 0) return -1;
        if (elo == 0 && ehi == 0) return 0;
        // ambiguous: either genuinely zero (a multiple of the minimal
        // polynomial of the root within the modulus) or the interval is too
        // wide.  Since coefficients < deg and the distinguished root has the
        // modulus as (assumed) minimal polynomial, a nonzero vector is
        // nonzero as a number; refine until the sign resolves, with a safety
        // valve that detects an exact zero via gcd if progress stalls.
        field_->refine();
        if (iter == 256) {
            // exact zero test: gcd(this, P) non-constant and vanishing at root
            try {
                (void)inverse();
            } catch (const InputError &) {
                // this divides zero in the quotient ring; decide by exact
                // evaluation at an ever-better rational: fall through and keep
                // refining -- but an actual zero would refine forever.  The
                // gcd being non-constant with an irreducible modulus is
                // impossible, so report the modulus problem instead.
                throw InputError("reducible modulus: sign query hit a zero divisor");
            }
        }
    }
}

int AlgebraicNumber::compare(const AlgebraicNumber &o) const {
    check_same_field(o);
    return (*this - o).sign();
}

double AlgebraicNumber::to_double() const {
    field_->refine_to(Rational(1, 1000000000));
    Rational lo, hi;
    enclosure(lo, hi);
    return (lo.get_d() + hi.get_d()) / 2;
}

std::string AlgebraicNumber::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = (int)c_.size() - 1; i >= 0; i--) {
        if (c_[i] == 0) continue;
        Rational v = c_[i];
        if (first) {
            if (v < 0) {
                os << "-";
                v = -v;
            }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (i == 0) {
            os << rational_str(v);
        } else {
            if (v != 1) os << rational_str(v) << "*";
            os << "a";
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

AlgebraicNumber AlgebraicNumber::parse(const FieldPtr &f, const std::string &text) {
    // terms: [+|-] [coef '*'] ['a' ['^' k]]
    std::vector<Rational> c(f->degree(), Rational(0));
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    if (s.empty()) throw InputError("empty algebraic number");
    size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            i++;
        } else if (s[i] == '-') {
            sign = -1;
            i++;
        }
        // coefficient (optional)
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/' || s[j] == '.'))
            j++;
        Rational coef = 1;
        bool had_coef = j > i;
        if (had_coef) coef = parse_rational(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') i++;
        int power = 0;
        if (i < s.size() && s[i] == 'a') {
            i++;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                size_t k = i;
                while (k < s.size() && std::isdigit((unsigned char)s[k])) k++;
                if (k == i) throw InputError("bad exponent in: " + text);
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!had_coef) {
            throw InputError("bad term in: " + text);
        }
        if (power >= f->degree())
            throw InputError("coefficient degree too high in: " + text);
        c[power] += sign * coef;
    }
    return AlgebraicNumber(f, std::move(c));
}

// ---------------------------------------------------------- alpha parse ----

namespace {

std::string strip(const std::string &s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// "x^3-x^2-1" -> coefficient vector
std::vector<Rational> parse_poly_in_x(const std::string &text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace((unsigned char)ch)) s += ch;
    std::vector<Rational> c;
    auto bump = [&](int k, const Rational &v) {
        if ((int)c.size() <= k) c.resize(k + 1, Rational(0));
        c[k] += v;
    };
    size_t i = 0;
    if (s.empty()) throw InputError("empty polynomial");
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+') {
            i++;
        } else if (s[i] == '-') {
            sign = -1;
            i++;
        }
        size_t j = i;
        while (j < s.size() && (std::isdigit((unsigned char)s[j]) || s[j] == '/' || s[j] == '.'))
            j++;
        Rational coef = 1;
        bool had = j > i;
        if (had) coef = parse_rational(s.substr(i, j - i));
        i = j;
        if (i < s.size() && s[i] == '*') i++;
        int power = 0;
        if (i < s.size() && s[i] == 'x') {
            i++;
            power = 1;
            if (i < s.size() && s[i] == '^') {
                i++;
                size_t k = i;
                while (k < s.size() && std::isdigit((unsigned char)s[k])) k++;
                if (k == i) throw InputError("bad exponent in polynomial: " + text);
                power = std::stoi(s.substr(i, k - i));
                i = k;
            }
        } else if (!had) {
            throw InputError("bad term in polynomial: " + text);
        }
        bump(power, sign * coef);
    }
    return c;
}

}  // namespace

FieldPtr parse_alpha(const std::string &text_in, AlgebraicNumber *out) {
    std::string text = strip(text_in);
    FieldPtr f;
    if (text.rfind("nthroot(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(8, text.size() - 9);
        auto comma = inner.rfind(',');
        if (comma == std::string::npos) throw InputError("nthroot wants (r, n)");
        Rational r = parse_rational(strip(inner.substr(0, comma)));
        int n = std::stoi(strip(inner.substr(comma + 1)));
        f = AlgebraicField::nth_root(r, n);
    } else if (text.rfind("root(", 0) == 0 && text.back() == ')') {
        std::string inner = text.substr(5, text.size() - 6);
        auto comma = inner.find(',');
        if (comma == std::string::npos) throw InputError("root wants (n, r) or (k, poly ... in [lo,hi])");
        std::string first = strip(inner.substr(0, comma));
        std::string rest = strip(inner.substr(comma + 1));
        if (rest.rfind("poly", 0) == 0) {
            auto inpos = rest.rfind(" in ");
            if (inpos == std::string::npos) throw InputError("poly spec needs ' in [lo,hi]'");
            std::string ptext = strip(rest.substr(4, inpos - 4));
            std::string itext = strip(rest.substr(inpos + 4));
            if (itext.size() < 2 || itext.front() != '[' || itext.back() != ']')
                throw InputError("poly spec interval must be [lo,hi]");
            itext = itext.substr(1, itext.size() - 2);
            auto c2 = itext.find(',');
            if (c2 == std::string::npos) throw InputError("poly spec interval must be [lo,hi]");
            Rational lo = parse_rational(strip(itext.substr(0, c2)));
            Rational hi = parse_rational(strip(itext.substr(c2 + 1)));
            f = AlgebraicField::make(parse_poly_in_x(ptext), lo, hi);
        } else {
            int n = std::stoi(first);
            Rational r = parse_rational(rest);
            f = AlgebraicField::nth_root(r, n);
        }
    } else {
        Rational r = parse_rational(text);
        f = AlgebraicField::make({-r, Rational(1)}, r, r);
    }
    if (out) *out = AlgebraicNumber::generator(f);
    return f;
}

}  // namespace domcert
