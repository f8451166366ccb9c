#ifndef JORDAN_FINGERPRINT_HPP
#define JORDAN_FINGERPRINT_HPP

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "jordan/embed.hpp"
#include "jordan/invariants.hpp"

namespace jordan {

struct QuotientRecord {
  std::size_t dim = 0;
  std::size_t dim_der = 0;
  bool associative = true;
  friend auto operator<=>(const QuotientRecord&, const QuotientRecord&) = default;
};

/// Invariants that are cheap to compute: linear algebra only.
struct CoreFingerprint {
  std::size_t dim = 0;
  PowerProfile power;
  std::size_t dim_ann = 0;
  bool unital = false;
  bool associative = false;
  std::size_t dim_der = 0;
  std::size_t dim_rad = 0;
  std::vector<std::size_t> rad_type;
  std::size_t trace_rank = 0;
  QuotientRecord ss_quotient;
  friend auto operator<=>(const CoreFingerprint&, const CoreFingerprint&) = default;
};

/// Lexicographic on: core, radical core, radical module type, square rank,
/// B2 embedding, dim H^2.
struct Fingerprint {
  CoreFingerprint core;
  std::optional<CoreFingerprint> radical;
  std::array<std::size_t, 3> rad_module{};
  std::size_t square_rank = 0;
  std::optional<bool> b2_embeds;
  std::optional<std::size_t> dim_h2;
  friend auto operator<=>(const Fingerprint&, const Fingerprint&) = default;
};

struct FingerprintOptions {
  bool radical = true;
  bool h2 = true;
  bool b2 = false;
  GroebnerOptions groebner;
};

CoreFingerprint core_fingerprint(const Algebra& a);
Fingerprint fingerprint(const Algebra& a, const FingerprintOptions& opts = {});
Fingerprint fingerprint(const Algebra& a, bool with_b2);

std::string to_string(const CoreFingerprint& f);
/// One-line canonical rendering; absent deep fields print as "-".
std::string to_string(const Fingerprint& f);

struct Difference {
  std::string field;
  std::string left;
  std::string right;
  std::string text() const { return field + ": " + left + " vs " + right; }
};

/// First differing field in the fixed order.
std::optional<Difference> first_difference(const CoreFingerprint& a, const CoreFingerprint& b);

/// Compares core fields and escalates through the radical's core, the
/// radical module type, the square rank, B2 embedding and dim H^2 while everything ties. Absent means every
/// implemented invariant agrees.
std::optional<Difference> distinguish(const Algebra& a, const Algebra& b, const GroebnerOptions& opts = {});

}  // namespace jordan

#endif
