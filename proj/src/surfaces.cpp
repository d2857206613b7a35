#include "verlinde/surfaces.hpp"

namespace verlinde {

namespace {
int floor_mod(long a, int m) {
    long r = a % m;
    return static_cast<int>(r < 0 ? r + m : r);
}
}  // namespace

int HomologyClass::intersect(const HomologyClass& other) const {
    if (modulus != other.modulus || genus() != other.genus())
        throw std::invalid_argument("intersect: modulus or genus mismatch");
    long acc = 0;
    for (int nu = 0; nu < genus(); ++nu) {
        auto [x, y] = coords[nu];
        auto [xp, yp] = other.coords[nu];
        acc += static_cast<long>(x) * yp - static_cast<long>(y) * xp;
    }
    return floor_mod(acc, modulus);
}

void QuadraticForm::validate() const {
    if (modulus < 2 || modulus % 2 != 0)
        throw std::invalid_argument("QuadraticForm: modulus must be even and >= 2");
    if (basis_values.empty()) throw std::invalid_argument("QuadraticForm: genus must be >= 1");
}

int evaluate(const QuadraticForm& q, const HomologyClass& z) {
    q.validate();
    if (q.modulus != z.modulus || q.genus() != z.genus())
        throw std::invalid_argument("evaluate: modulus or genus mismatch");
    // Expanding z = sum x_nu alpha_nu + y_nu beta_nu and applying the defining
    // relation pairwise: all cross intersections vanish except alpha_nu.beta_nu = 1.
    long acc = 0;
    int half = q.modulus / 2;
    for (int nu = 0; nu < q.genus(); ++nu) {
        auto [x, y] = z.coords[nu];
        auto [a, b] = q.basis_values[nu];
        acc += static_cast<long>(x) * a + static_cast<long>(y) * b +
               static_cast<long>(half) * x * y;
    }
    return floor_mod(acc, q.modulus);
}

std::vector<QuadraticForm> enumerate_structures(int g, int d) {
    if (g < 1) throw std::invalid_argument("enumerate_structures: g < 1");
    if (d < 2 || d % 2 != 0)
        throw std::invalid_argument("enumerate_structures: modulus must be even");
    std::vector<QuadraticForm> out;
    std::vector<int> digits(2 * g, 0);
    while (true) {
        QuadraticForm q;
        q.modulus = d;
        for (int nu = 0; nu < g; ++nu)
            q.basis_values.emplace_back(digits[2 * nu], digits[2 * nu + 1]);
        out.push_back(std::move(q));
        int pos = 0;
        while (pos < 2 * g && ++digits[pos] == d) digits[pos++] = 0;
        if (pos == 2 * g) break;
    }
    return out;
}

int arf(const QuadraticForm& q) {
    q.validate();
    if (q.modulus != 2) throw std::invalid_argument("arf: only defined for modulus 2");
    int acc = 0;
    for (auto [a, b] : q.basis_values) acc += a * b;
    return acc % 2;
}

}  // namespace verlinde
