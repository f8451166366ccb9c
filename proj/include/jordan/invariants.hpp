#ifndef JORDAN_INVARIANTS_HPP
#define JORDAN_INVARIANTS_HPP

#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Dimensions of the associative-style powers J^k and of the lower central
/// series J<k>, for k = 1 .. max(4, dim + 1).
struct PowerProfile {
  std::vector<std::size_t> assoc_powers;
  std::vector<std::size_t> lcs;
  std::optional<std::size_t> nilindex;

  std::size_t dim_square() const { return assoc_powers.size() > 1 ? assoc_powers[1] : 0; }
  friend auto operator<=>(const PowerProfile&, const PowerProfile&) = default;
};

class NotNilpotentError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class RadicalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// J<1> = J, J<k> = J<k-1> * J, up to and including J<count>.
std::vector<Subspace> lower_central_series(const Algebra& a, std::size_t count);
/// J^1 = J, J^k = sum_{i=1}^{k-1} J^{k-i} * J^i, up to and including J^count.
std::vector<Subspace> associative_powers(const Algebra& a, std::size_t count);

PowerProfile power_profile(const Algebra& a);
bool is_nilpotent(const Algebra& a);
/// n_i = dim(J<i> / J<i+1>) for i = 1 .. nilindex - 1.
std::vector<std::size_t> nilpotency_type(const Algebra& a);

Subspace annihilator(const Algebra& a);
bool is_ideal(const Algebra& a, const Subspace& s);

/// Gram matrix of the trace form T(x, y) = tr L_{x*y} on the basis.
Matrix trace_form(const Algebra& a);
std::size_t trace_rank(const Algebra& a);

/// Radical of a Jordan algebra, computed as the kernel of the trace form and
/// then checked: it must be an ideal, nilpotent as an algebra, and leave a
/// unital quotient whose own trace form is nondegenerate. A failed check
/// raises RadicalError.
Subspace radical(const Algebra& a);

/// Structure on the complement of the ideal spanned by its non-pivot basis vectors.
Algebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// Let N = Rad(J) and M the ideal generated by N^2. The identity of J/N acts
/// on N/M; returns the dimensions of its eigenspaces for 1, 1/2 and 0.
std::array<std::size_t, 3> radical_module_type(const Algebra& a);

/// Generic rank of the pairing J/J^2 x J/J^2 -> J^2/(J*J^2) composed with a
/// linear functional on the target.
std::size_t square_rank(const Algebra& a);

/// Derivations D with D(xy) = D(x)y + xD(y), as vectors of length dim^2 (row-major D).
Subspace derivations(const Algebra& a);
std::size_t derivation_dim(const Algebra& a);

}  // namespace jordan

#endif
