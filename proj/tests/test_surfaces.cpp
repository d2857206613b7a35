#include "doctest.h"

#include "verlinde/surfaces.hpp"

#include <random>

using namespace verlinde;

namespace {
HomologyClass cls(int d, std::vector<std::pair<int, int>> coords) {
    return HomologyClass{d, std::move(coords)};
}

QuadraticForm form(int d, std::vector<std::pair<int, int>> vals) {
    QuadraticForm q{d, std::move(vals)};
    q.validate();
    return q;
}

HomologyClass add(const HomologyClass& x, const HomologyClass& y) {
    HomologyClass z = x;
    for (int i = 0; i < x.genus(); ++i) {
        z.coords[i].first = (x.coords[i].first + y.coords[i].first) % x.modulus;
        z.coords[i].second = (x.coords[i].second + y.coords[i].second) % x.modulus;
    }
    return z;
}

// q(x+y) = q(x) + q(y) + (d/2) x.y mod d
bool quadratic_identity(const QuadraticForm& q, const HomologyClass& x, const HomologyClass& y) {
    int d = q.modulus;
    int lhs = evaluate(q, add(x, y));
    int rhs = (evaluate(q, x) + evaluate(q, y) + (d / 2) * x.intersect(y)) % d;
    return lhs == ((rhs % d) + d) % d;
}

std::vector<HomologyClass> all_classes(int g, int d) {
    std::vector<HomologyClass> out;
    std::vector<int> digits(2 * g, 0);
    while (true) {
        HomologyClass z{d, {}};
        for (int i = 0; i < g; ++i) z.coords.emplace_back(digits[2 * i], digits[2 * i + 1]);
        out.push_back(z);
        int i = 0;
        while (i < 2 * g && ++digits[i] == d) digits[i++] = 0;
        if (i == 2 * g) break;
    }
    return out;
}
}  // namespace

TEST_CASE("intersection form is the standard symplectic pairing") {
    auto a = cls(2, {{1, 0}});
    auto b = cls(2, {{0, 1}});
    CHECK(a.intersect(b) == 1);
    CHECK(b.intersect(a) == 1);  // -1 = 1 mod 2
    CHECK(a.intersect(a) == 0);
    auto x = cls(6, {{2, 1}, {0, 3}});
    auto y = cls(6, {{1, 4}, {5, 2}});
    // sum of x_nu y'_nu - y_nu x'_nu = (2*4 - 1*1) + (0*2 - 3*5) = 7 - 15 = -8 = 4
    CHECK(x.intersect(y) == 4);
    CHECK((x.intersect(y) + y.intersect(x)) % 6 == 0);
}

TEST_CASE("evaluate basics") {
    auto q = form(2, {{1, 1}});
    CHECK(evaluate(q, cls(2, {{0, 0}})) == 0);
    CHECK(evaluate(q, cls(2, {{1, 0}})) == 1);  // alpha_1
    CHECK(evaluate(q, cls(2, {{0, 1}})) == 1);  // beta_1
    CHECK(evaluate(q, cls(2, {{1, 1}})) == 1);  // 1 + 1 + 1 mod 2

    auto q6 = form(6, {{2, 5}, {0, 1}});
    CHECK(evaluate(q6, cls(6, {{1, 0}, {0, 0}})) == 2);
    CHECK_THROWS(evaluate(q6, cls(4, {{0, 0}, {0, 0}})));  // modulus mismatch
    CHECK_THROWS(form(3, {{0, 0}}));                        // odd modulus
}

TEST_CASE("the quadratic identity holds exhaustively at genus 1") {
    for (int d : {2, 4, 6}) {
        auto zs = all_classes(1, d);
        for (const auto& q : enumerate_structures(1, d))
            for (const auto& x : zs)
                for (const auto& y : zs) CHECK(quadratic_identity(q, x, y));
    }
}

TEST_CASE("the quadratic identity holds at genus 2") {
    // modulus 2: fully exhaustive
    auto zs2 = all_classes(2, 2);
    for (const auto& q : enumerate_structures(2, 2))
        for (const auto& x : zs2)
            for (const auto& y : zs2) CHECK(quadratic_identity(q, x, y));

    // moduli 4 and 6: every form against randomized class pairs
    std::mt19937 rng(4242);
    for (int d : {4, 6}) {
        std::uniform_int_distribution<int> coord(0, d - 1);
        auto rand_cls = [&] {
            return cls(d, {{coord(rng), coord(rng)}, {coord(rng), coord(rng)}});
        };
        for (const auto& q : enumerate_structures(2, d))
            for (int trial = 0; trial < 40; ++trial)
                CHECK(quadratic_identity(q, rand_cls(), rand_cls()));
    }
}

TEST_CASE("enumerate_structures counts d^{2g}") {
    CHECK(enumerate_structures(1, 2).size() == 4);
    CHECK(enumerate_structures(2, 4).size() == 256);
    CHECK(enumerate_structures(1, 6).size() == 36);
    CHECK_THROWS(enumerate_structures(1, 3));
}

TEST_CASE("Arf invariant and the count of even forms") {
    CHECK(arf(form(2, {{0, 0}})) == 0);
    CHECK(arf(form(2, {{1, 1}})) == 1);
    CHECK(arf(form(2, {{1, 1}, {1, 1}})) == 0);
    CHECK_THROWS(arf(form(4, {{0, 0}})));

    for (int g = 1; g <= 3; ++g) {
        long zeros = 0;
        for (const auto& q : enumerate_structures(g, 2))
            if (arf(q) == 0) ++zeros;
        CHECK(zeros == (1L << (g - 1)) * ((1L << g) + 1));
    }
}
