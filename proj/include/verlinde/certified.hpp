#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

namespace verlinde {

/// Raised when precision escalation hits the configured ceiling before the
/// enclosure isolates a single integer.
struct PrecisionExhausted : std::runtime_error {
    explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a certified enclosure provably contains no integer although an
/// integer result was expected.  Always indicates a formula or implementation
/// bug upstream, never an input error.
struct NonIntegral : std::runtime_error {
    explicit NonIntegral(const std::string& what) : std::runtime_error(what) {}
};

struct PrecisionPolicy {
    long initial_bits = 128;
    long max_bits = 8192;
    double integrality_gap = 0.25;

    void validate() const {
        if (initial_bits < 2 || initial_bits > max_bits)
            throw std::invalid_argument("PrecisionPolicy: need 2 <= initial_bits <= max_bits");
        if (!(integrality_gap > 0.0 && integrality_gap < 0.5))
            throw std::invalid_argument("PrecisionPolicy: need 0 < integrality_gap < 0.5");
    }
};

/// A real number carried as a certified enclosure [lo, hi] at a fixed working
/// precision.  Every operation rounds outward, so the exact mathematical value
/// of an expression always lies inside the result interval.
class CertifiedReal {
public:
    explicit CertifiedReal(long prec_bits);
    CertifiedReal(const CertifiedReal& other);
    CertifiedReal(CertifiedReal&& other) noexcept;
    CertifiedReal& operator=(const CertifiedReal& other);
    CertifiedReal& operator=(CertifiedReal&& other) noexcept;
    ~CertifiedReal();

    static CertifiedReal from_int(long v, long prec_bits);
    static CertifiedReal from_mpz(const mpz_class& v, long prec_bits);
    static CertifiedReal from_mpq(const mpq_class& v, long prec_bits);

    /// Enclosure of sin(num*pi/den), any integer num, den >= 1.
    static CertifiedReal sin_pi(long num, long den, long prec_bits);
    /// Enclosure of cos(num*pi/den).
    static CertifiedReal cos_pi(long num, long den, long prec_bits);

    long precision() const { return prec_; }

    CertifiedReal operator+(const CertifiedReal& rhs) const;
    CertifiedReal operator-(const CertifiedReal& rhs) const;
    CertifiedReal operator*(const CertifiedReal& rhs) const;
    CertifiedReal operator/(const CertifiedReal& rhs) const;  // rhs must exclude 0
    CertifiedReal operator-() const;
    CertifiedReal& operator+=(const CertifiedReal& rhs);
    CertifiedReal& operator*=(const CertifiedReal& rhs);

    /// Integer power; negative exponents require a sign-definite interval.
    CertifiedReal pow(long e) const;

    bool contains_zero() const;
    bool is_positive() const;       // lo > 0
    bool overlaps(const CertifiedReal& other) const;
    bool contains_mpq(const mpq_class& v) const;

    double midpoint() const;
    double radius() const;
    std::string to_string() const;

    /// Unique integer in the enclosure, if the enclosure isolates one and the
    /// radius is below `gap`.  nullopt requests recomputation at higher
    /// precision; NonIntegral means no integer lies in the enclosure at all.
    std::optional<mpz_class> round_to_integer(double gap) const;

private:
    long prec_;
    mpfr_t lo_;
    mpfr_t hi_;

    friend CertifiedReal mul_impl(const CertifiedReal&, const CertifiedReal&);
};

/// certified_round per the escalation contract: isolates the unique integer
/// or asks the caller to recompute at higher precision (nullopt).
std::optional<mpz_class> certified_round(const CertifiedReal& x, const PrecisionPolicy& policy);

/// Drives whole-expression recomputation: evaluates `f` at doubling precision
/// until certified_round succeeds.
mpz_class eval_integer(const PrecisionPolicy& policy,
                       const std::function<CertifiedReal(long)>& f);

}  // namespace verlinde
