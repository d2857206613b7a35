#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace verlinde {

/// Element of H_1 of a genus-g surface with Z/d coefficients, written in the
/// standard symplectic basis (x_1, y_1, ..., x_g, y_g).
struct HomologyClass {
    int modulus = 2;
    std::vector<std::pair<int, int>> coords;  // (x_nu, y_nu)

    int genus() const { return static_cast<int>(coords.size()); }
    /// Intersection number with another class, mod d.
    int intersect(const HomologyClass& other) const;
};

/// Quadratic refinement of the intersection form:
///   q(x + y) = q(x) + q(y) + (d/2) x.y,
/// determined by its basis values (a_nu, b_nu) = (q(alpha_nu), q(beta_nu)).
struct QuadraticForm {
    int modulus = 2;  // even
    std::vector<std::pair<int, int>> basis_values;

    int genus() const { return static_cast<int>(basis_values.size()); }
    void validate() const;
};

/// q(z), by expanding z in the basis.
int evaluate(const QuadraticForm& q, const HomologyClass& z);

/// All d^{2g} quadratic forms for genus g, modulus d (even).
std::vector<QuadraticForm> enumerate_structures(int g, int d);

/// Arf invariant sum a_nu b_nu mod 2; only defined for modulus 2.
int arf(const QuadraticForm& q);

}  // namespace verlinde
