#include "verlinde/certified.hpp"

#include <algorithm>
#include <cassert>

namespace verlinde {

CertifiedReal::CertifiedReal(long prec_bits) : prec_(prec_bits) {
    if (prec_bits < 2) throw std::invalid_argument("CertifiedReal: precision < 2 bits");
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& other) : prec_(other.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, other.lo_, MPFR_RNDD);
    mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

CertifiedReal::CertifiedReal(CertifiedReal&& other) noexcept : prec_(other.prec_) {
    mpfr_init2(lo_, 2);
    mpfr_init2(hi_, 2);
    mpfr_swap(lo_, other.lo_);
    mpfr_swap(hi_, other.hi_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& other) {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_set_prec(lo_, prec_);
        mpfr_set_prec(hi_, prec_);
        mpfr_set(lo_, other.lo_, MPFR_RNDD);
        mpfr_set(hi_, other.hi_, MPFR_RNDU);
    }
    return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& other) noexcept {
    if (this != &other) {
        prec_ = other.prec_;
        mpfr_swap(lo_, other.lo_);
        mpfr_swap(hi_, other.hi_);
    }
    return *this;
}

CertifiedReal::~CertifiedReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

CertifiedReal CertifiedReal::from_int(long v, long prec_bits) {
    CertifiedReal r(prec_bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_mpz(const mpz_class& v, long prec_bits) {
    CertifiedReal r(prec_bits);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::from_mpq(const mpq_class& v, long prec_bits) {
    CertifiedReal r(prec_bits);
    mpfr_set_q(r.lo_, v.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, v.get_mpq_t(), MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::sin_pi(long num, long den, long prec_bits) {
    if (den < 1) throw std::invalid_argument("sin_pi: den < 1");
    // Reduce to sin(t*pi/den) with 0 <= t < den using periodicity and
    // sin(x + pi) = -sin(x).
    long period = 2 * den;
    long t = num % period;
    if (t < 0) t += period;
    int sign = 1;
    if (t >= den) {
        t -= den;
        sign = -1;
    }
    CertifiedReal r(prec_bits);
    if (t == 0) return r;  // exact zero
    if (2 * t == den) {
        mpfr_set_si(r.lo_, sign, MPFR_RNDD);
        mpfr_set_si(r.hi_, sign, MPFR_RNDU);
        return r;
    }

    mpfr_t pi_lo, pi_hi, x_lo, x_hi, s, tmp;
    mpfr_inits2(prec_bits, pi_lo, pi_hi, x_lo, x_hi, s, tmp, (mpfr_ptr) nullptr);
    mpfr_const_pi(pi_lo, MPFR_RNDD);
    mpfr_const_pi(pi_hi, MPFR_RNDU);
    // x in [x_lo, x_hi], exact value t*pi/den in (0, pi)
    mpfr_mul_si(x_lo, pi_lo, t, MPFR_RNDD);
    mpfr_div_si(x_lo, x_lo, den, MPFR_RNDD);
    mpfr_mul_si(x_hi, pi_hi, t, MPFR_RNDU);
    mpfr_div_si(x_hi, x_hi, den, MPFR_RNDU);

    // sin is concave on [0, pi]: minimum at an endpoint; maximum at an
    // endpoint unless the interval straddles pi/2, where it is 1.
    mpfr_sin(s, x_lo, MPFR_RNDD);
    mpfr_sin(tmp, x_hi, MPFR_RNDD);
    if (mpfr_cmp(tmp, s) < 0) mpfr_swap(s, tmp);
    mpfr_set(r.lo_, s, MPFR_RNDD);

    bool straddles_half_pi;
    {
        mpfr_t ph_lo, ph_hi;
        mpfr_inits2(prec_bits, ph_lo, ph_hi, (mpfr_ptr) nullptr);
        mpfr_div_si(ph_lo, pi_lo, 2, MPFR_RNDD);
        mpfr_div_si(ph_hi, pi_hi, 2, MPFR_RNDU);
        straddles_half_pi = mpfr_cmp(x_lo, ph_hi) <= 0 && mpfr_cmp(x_hi, ph_lo) >= 0;
        mpfr_clears(ph_lo, ph_hi, (mpfr_ptr) nullptr);
    }
    if (straddles_half_pi) {
        mpfr_set_si(r.hi_, 1, MPFR_RNDU);
    } else {
        mpfr_sin(s, x_lo, MPFR_RNDU);
        mpfr_sin(tmp, x_hi, MPFR_RNDU);
        if (mpfr_cmp(tmp, s) > 0) mpfr_swap(s, tmp);
        mpfr_set(r.hi_, s, MPFR_RNDU);
    }
    mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, s, tmp, (mpfr_ptr) nullptr);
    if (sign < 0) return -r;
    return r;
}

CertifiedReal CertifiedReal::cos_pi(long num, long den, long prec_bits) {
    // cos(n*pi/d) = sin((d - 2n)*pi/(2d))
    return sin_pi(den - 2 * num, 2 * den, prec_bits);
}

CertifiedReal CertifiedReal::operator+(const CertifiedReal& rhs) const {
    CertifiedReal r(std::max(prec_, rhs.prec_));
    mpfr_add(r.lo_, lo_, rhs.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, rhs.hi_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::operator-(const CertifiedReal& rhs) const {
    CertifiedReal r(std::max(prec_, rhs.prec_));
    mpfr_sub(r.lo_, lo_, rhs.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, rhs.lo_, MPFR_RNDU);
    return r;
}

CertifiedReal CertifiedReal::operator*(const CertifiedReal& rhs) const {
    CertifiedReal r(std::max(prec_, rhs.prec_));
    mpfr_t p, best;
    mpfr_inits2(r.prec_, p, best, (mpfr_ptr) nullptr);

    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(p, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(p, best) < 0) mpfr_set(best, p, MPFR_RNDD);
            first = false;
        }
    mpfr_set(r.lo_, best, MPFR_RNDD);
    first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_mul(p, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(p, best) > 0) mpfr_set(best, p, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.hi_, best, MPFR_RNDU);
    mpfr_clears(p, best, (mpfr_ptr) nullptr);
    return r;
}

CertifiedReal CertifiedReal::operator/(const CertifiedReal& rhs) const {
    if (rhs.contains_zero())
        throw std::domain_error("CertifiedReal: division by interval containing zero");
    CertifiedReal r(std::max(prec_, rhs.prec_));
    mpfr_t p, best;
    mpfr_inits2(r.prec_, p, best, (mpfr_ptr) nullptr);
    const mpfr_srcptr a[2] = {lo_, hi_};
    const mpfr_srcptr b[2] = {rhs.lo_, rhs.hi_};
    bool first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(p, a[i], b[j], MPFR_RNDD);
            if (first || mpfr_cmp(p, best) < 0) mpfr_set(best, p, MPFR_RNDD);
            first = false;
        }
    mpfr_set(r.lo_, best, MPFR_RNDD);
    first = true;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            mpfr_div(p, a[i], b[j], MPFR_RNDU);
            if (first || mpfr_cmp(p, best) > 0) mpfr_set(best, p, MPFR_RNDU);
            first = false;
        }
    mpfr_set(r.hi_, best, MPFR_RNDU);
    mpfr_clears(p, best, (mpfr_ptr) nullptr);
    return r;
}

CertifiedReal CertifiedReal::operator-() const {
    CertifiedReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& rhs) {
    *this = *this + rhs;
    return *this;
}

CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& rhs) {
    *this = *this * rhs;
    return *this;
}

CertifiedReal CertifiedReal::pow(long e) const {
    if (e < 0 && contains_zero())
        throw std::domain_error("CertifiedReal: negative power of interval containing zero");
    CertifiedReal base = *this;
    CertifiedReal acc = from_int(1, prec_);
    long n = e < 0 ? -e : e;
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (e < 0) return from_int(1, prec_) / acc;
    return acc;
}

bool CertifiedReal::contains_zero() const {
    return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0;
}

bool CertifiedReal::is_positive() const { return mpfr_sgn(lo_) > 0; }

bool CertifiedReal::overlaps(const CertifiedReal& other) const {
    return mpfr_cmp(lo_, other.hi_) <= 0 && mpfr_cmp(other.lo_, hi_) <= 0;
}

bool CertifiedReal::contains_mpq(const mpq_class& v) const {
    mpfr_t q;
    mpfr_init2(q, prec_ + 64);
    bool inside = true;
    mpfr_set_q(q, v.get_mpq_t(), MPFR_RNDD);
    if (mpfr_cmp(q, hi_) > 0) inside = false;
    mpfr_set_q(q, v.get_mpq_t(), MPFR_RNDU);
    if (mpfr_cmp(q, lo_) < 0) inside = false;
    mpfr_clear(q);
    return inside;
}

double CertifiedReal::midpoint() const {
    mpfr_t m;
    mpfr_init2(m, prec_);
    mpfr_add(m, lo_, hi_, MPFR_RNDN);
    mpfr_div_si(m, m, 2, MPFR_RNDN);
    double v = mpfr_get_d(m, MPFR_RNDN);
    mpfr_clear(m);
    return v;
}

double CertifiedReal::radius() const {
    mpfr_t w;
    mpfr_init2(w, prec_);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div_si(w, w, 2, MPFR_RNDU);
    double v = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return v;
}

std::string CertifiedReal::to_string() const {
    char* s = nullptr;
    mpfr_asprintf(&s, "[%.20Rg, %.20Rg]", lo_, hi_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::optional<mpz_class> CertifiedReal::round_to_integer(double gap) const {
    mpz_class lo_ceil, hi_floor;
    mpfr_get_z(lo_ceil.get_mpz_t(), lo_, MPFR_RNDU);
    mpfr_get_z(hi_floor.get_mpz_t(), hi_, MPFR_RNDD);
    if (lo_ceil > hi_floor)
        throw NonIntegral("enclosure " + to_string() + " contains no integer");
    if (lo_ceil < hi_floor) return std::nullopt;  // more than one candidate
    if (radius() >= gap) return std::nullopt;
    return lo_ceil;
}

std::optional<mpz_class> certified_round(const CertifiedReal& x, const PrecisionPolicy& policy) {
    policy.validate();
    return x.round_to_integer(policy.integrality_gap);
}

mpz_class eval_integer(const PrecisionPolicy& policy,
                       const std::function<CertifiedReal(long)>& f) {
    policy.validate();
    for (long prec = policy.initial_bits;; prec *= 2) {
        if (prec > policy.max_bits)
            throw PrecisionExhausted("no integer isolated at max precision " +
                                     std::to_string(policy.max_bits) + " bits");
        auto r = f(prec).round_to_integer(policy.integrality_gap);
        if (r) return *r;
    }
}

}  // namespace verlinde
