#ifndef JORDAN_PEIRCE_HPP
#define JORDAN_PEIRCE_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

class PeirceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

bool is_idempotent(const Algebra& a, const Element& e);

/// J = J_1 + J_{1/2} + J_0 relative to one idempotent, J_t = {x : e*x = t x}.
struct SinglePeirce {
  Element idempotent;
  Subspace one;
  Subspace half;
  Subspace zero;
};

/// Eigenspace decomposition of L_e, checked for completeness and for the
/// six multiplication rules; throws PeirceError on any failure.
SinglePeirce peirce_single(const Algebra& a, const Element& e);
/// Rule violations of a single-idempotent decomposition, one message each.
std::vector<std::string> single_rule_violations(const Algebra& a, const SinglePeirce& d);

/// J = sum_{i<=j} J_ij relative to orthogonal idempotents summing to 1.
struct MultiPeirce {
  std::vector<Element> idempotents;
  std::map<std::pair<std::size_t, std::size_t>, Subspace> blocks;  // keys with i <= j

  const Subspace& block(std::size_t i, std::size_t j) const {
    return blocks.at(i <= j ? std::make_pair(i, j) : std::make_pair(j, i));
  }
  /// Block holding v, if v lies in a single block.
  std::optional<std::pair<std::size_t, std::size_t>> locate(const Vector& v) const;
};

MultiPeirce peirce_multi(const Algebra& a, const std::vector<Element>& idempotents);
std::vector<std::string> multi_rule_violations(const Algebra& a, const MultiPeirce& d);

/// The orthogonal family read off a multiplication table: every basis vector
/// with b*b = b, plus the complement 1 - sum when it is nonzero. When the
/// algebra has no identity the family lives in its unitalization.
struct IdempotentFrame {
  Algebra algebra;
  bool unitalized = false;
  std::vector<Element> idempotents;
  std::vector<std::string> names;         // basis label, or "e0" for the complement
  std::optional<std::size_t> complement;  // index into idempotents

  /// Coordinates of an element of the original algebra inside `algebra`.
  Element embed(const Element& x) const;
};

IdempotentFrame table_idempotent_frame(const Algebra& a);

}  // namespace jordan

#endif
