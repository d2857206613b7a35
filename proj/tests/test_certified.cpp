#include "doctest.h"

#include "verlinde/certified.hpp"

#include <random>

using namespace verlinde;

namespace {
mpq_class rand_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 999983);
    mpq_class q(num(rng), den(rng));
    q.canonicalize();
    return q;
}
}  // namespace

TEST_CASE("construction and exact containment") {
    auto x = CertifiedReal::from_int(7, 128);
    CHECK(x.contains_mpq(mpq_class(7)));
    CHECK(x.is_positive());
    CHECK_FALSE(x.contains_zero());

    auto q = CertifiedReal::from_mpq(mpq_class(1, 3), 128);
    CHECK(q.contains_mpq(mpq_class(1, 3)));
    CHECK_FALSE(q.contains_mpq(mpq_class(1, 2)));
    CHECK(q.radius() < 1e-30);

    mpz_class big("123456789012345678901234567890");
    CHECK(CertifiedReal::from_mpz(big, 256).contains_mpq(mpq_class(big)));
}

TEST_CASE("sin_pi special values") {
    // 2 (sin pi/4)^2 = 1
    auto s14 = CertifiedReal::sin_pi(1, 4, 128);
    CHECK((s14 * s14 + s14 * s14).contains_mpq(mpq_class(1)));
    CHECK(CertifiedReal::sin_pi(1, 2, 128).contains_mpq(mpq_class(1)));
    CHECK(CertifiedReal::sin_pi(0, 7, 128).contains_mpq(mpq_class(0)));
    CHECK(CertifiedReal::sin_pi(7, 7, 128).contains_mpq(mpq_class(0)));
    CHECK(CertifiedReal::sin_pi(1, 6, 128).contains_mpq(mpq_class(1, 2)));
    CHECK(CertifiedReal::sin_pi(5, 6, 128).contains_mpq(mpq_class(1, 2)));
    // periodicity and oddness
    auto a = CertifiedReal::sin_pi(3, 11, 128);
    CHECK(a.overlaps(CertifiedReal::sin_pi(3 + 22, 11, 128)));
    CHECK((-a).overlaps(CertifiedReal::sin_pi(-3, 11, 128)));
    CHECK(a.overlaps(CertifiedReal::sin_pi(8, 11, 128)));  // sin(pi - x)
    // cos via the complement
    CHECK(CertifiedReal::cos_pi(1, 3, 128).contains_mpq(mpq_class(1, 2)));
    CHECK(CertifiedReal::cos_pi(2, 3, 128).contains_mpq(mpq_class(-1, 2)));
    CHECK(CertifiedReal::cos_pi(1, 2, 128).contains_mpq(mpq_class(0)));
}

TEST_CASE("arithmetic encloses the exact rational result") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 400; ++i) {
        mpq_class a = rand_rational(rng), b = rand_rational(rng);
        auto x = CertifiedReal::from_mpq(a, 64);
        auto y = CertifiedReal::from_mpq(b, 64);
        CHECK((x + y).contains_mpq(a + b));
        CHECK((x - y).contains_mpq(a - b));
        CHECK((x * y).contains_mpq(a * b));
        if (b != 0 && !y.contains_zero()) CHECK((x / y).contains_mpq(a / b));
        CHECK(x.pow(3).contains_mpq(mpq_class(a * a * a)));
        if (a != 0 && !x.contains_zero()) {
            mpq_class inv2 = 1 / (a * a);
            CHECK(x.pow(-2).contains_mpq(inv2));
        }
    }
}

TEST_CASE("64-bit results contain the 256-bit evaluation") {
    std::mt19937 rng(7);
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<long> num(1, 1000);
        long n = num(rng), m = n + num(rng);
        auto coarse = CertifiedReal::sin_pi(n, m, 64) * CertifiedReal::sin_pi(n + 1, m + 1, 64);
        auto fine = CertifiedReal::sin_pi(n, m, 256) * CertifiedReal::sin_pi(n + 1, m + 1, 256);
        CHECK(coarse.overlaps(fine));
        CHECK(coarse.radius() >= fine.radius());
    }
}

TEST_CASE("round_to_integer outcomes") {
    PrecisionPolicy policy;

    auto ten = CertifiedReal::from_int(10, 128);
    auto r = certified_round(ten, policy);
    REQUIRE(r.has_value());
    CHECK(*r == 10);

    // tight enclosure of a provably non-integer value
    CHECK_THROWS_AS(CertifiedReal::from_mpq(mpq_class(103, 10), 128).round_to_integer(0.25),
                    NonIntegral);

    // very low precision -> wide enclosure -> escalation request (nullopt)
    auto wide = CertifiedReal::from_mpq(mpq_class(mpz_class("100000000000000000003"), 7), 8);
    CHECK_FALSE(wide.round_to_integer(0.25).has_value());

    CHECK_THROWS(PrecisionPolicy{0, 8192, 0.25}.validate());
    CHECK_THROWS(PrecisionPolicy{128, 8192, 0.7}.validate());
}

TEST_CASE("eval_integer escalates until the integer is isolated") {
    PrecisionPolicy policy;
    mpz_class big("12345678901234567890123456789012345678901234567890");
    mpz_class got = eval_integer(policy, [&](long prec) {
        return CertifiedReal::from_mpz(big, prec) + CertifiedReal::from_mpq(mpq_class(0), prec);
    });
    CHECK(got == big);

    // a function that ignores the precision request can never converge
    PrecisionPolicy tiny{16, 64, 0.25};
    CHECK_THROWS_AS(eval_integer(tiny,
                                 [&](long) {
                                     return CertifiedReal::from_mpz(big, 8);
                                 }),
                    PrecisionExhausted);

    CHECK_THROWS_AS(eval_integer(policy,
                                 [](long prec) {
                                     return CertifiedReal::from_mpq(mpq_class(1, 3), prec);
                                 }),
                    NonIntegral);
}

TEST_CASE("randomized near-integer roundings never mis-round") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> base(-1000000, 1000000);
    std::uniform_int_distribution<long> offs(-2400, 2400);  // |offset| <= 0.24
    PrecisionPolicy policy;
    for (int i = 0; i < 2000; ++i) {
        long n = base(rng);
        long o = offs(rng);
        mpq_class v = mpq_class(n) + mpq_class(o, 10000);
        auto x = CertifiedReal::from_mpq(v, 128);
        if (o == 0) {
            auto r = certified_round(x, policy);
            REQUIRE(r.has_value());
            CHECK(*r == n);
        } else {
            // exact value is not an integer: the only acceptable answers are
            // "escalate" or a certified refusal, never a rounded integer
            CHECK_THROWS_AS((void)x.round_to_integer(policy.integrality_gap), NonIntegral);
        }
    }
}
