#ifndef JORDAN_CATALOG_HPP
#define JORDAN_CATALOG_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/groebner.hpp"

namespace jordan {

class CatalogError : public std::runtime_error {
public:
  CatalogError(const std::string& source, std::size_t line, const std::string& msg);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

struct ProductLine {
  std::string left;
  std::string right;
  std::vector<std::pair<Rational, std::string>> terms;
  std::size_t line = 0;
};

/// "expect peirce n1 12": n1 lies in N_12 of the table idempotent frame
/// (digit d names basis label e<d>, 0 the complement); "0", "1/2" or "1"
/// instead name the eigenspace of the single idempotent e1.
struct PeirceExpectation {
  std::string label;
  std::string component;
  std::size_t line = 0;
};

struct ExpectedRow {
  std::optional<std::size_t> aut;
  std::optional<std::size_t> ann;
  std::optional<std::size_t> sq;
  std::optional<std::size_t> rad;
  std::set<std::string> flags;
  std::optional<std::vector<std::size_t>> niltype;
  std::optional<std::vector<std::size_t>> radtype;
  std::vector<PeirceExpectation> peirce;

  bool has_table_row() const { return aut && ann && sq; }
};

struct CatalogEntry {
  std::string name;
  std::string source;
  std::size_t line = 0;
  std::vector<std::string> summands;  // nonempty for direct-sum entries
  std::size_t dim = 0;
  std::vector<std::string> basis;     // inline basis, or relabelling of a sum
  std::vector<ProductLine> products;
  ExpectedRow expected;

  bool is_sum() const { return !summands.empty(); }
};

std::vector<CatalogEntry> parse_catalog(const std::string& text, const std::string& source = "<input>");

using Environment = std::map<std::string, Algebra>;

Algebra resolve(const CatalogEntry& entry, const Environment& env);

/// Inline catalog text for an algebra; parse + resolve gives it back exactly.
std::string serialize(const std::string& name, const Algebra& a);

class Catalog {
public:
  Catalog() = default;
  explicit Catalog(std::vector<CatalogEntry> entries);

  /// Every *.alg file in the directory, in file-name order.
  static Catalog load_directory(const std::filesystem::path& dir);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const Algebra& algebra(const std::string& name) const;
  const CatalogEntry& entry(const std::string& name) const;
  bool contains(const std::string& name) const { return algebras_.count(name) > 0; }
  std::size_t size() const { return entries_.size(); }

private:
  std::vector<CatalogEntry> entries_;
  Environment algebras_;
  std::map<std::string, std::size_t> index_;
};

struct Computed {
  std::size_t dim = 0;
  std::size_t der = 0;
  std::size_t ann = 0;
  std::size_t sq = 0;
  std::size_t rad = 0;
  bool unital = false;
  bool associative = false;
  bool nilpotent = false;
  std::vector<std::size_t> niltype;
  std::vector<std::size_t> radtype;
};

struct EntryReport {
  std::string name;
  bool jordan = false;
  std::string violation;
  bool radical_checked = false;
  Computed computed;
  std::vector<std::string> mismatches;
  std::vector<std::string> notes;
  bool table_row = false;
  bool table_match = false;
  std::size_t peirce_checked = 0;
};

struct VerifyOptions {
  bool deep = false;
  GroebnerOptions groebner;
};

struct VerifyReport {
  std::vector<EntryReport> entries;
  std::vector<std::string> deep_lines;
  std::vector<std::string> deep_errata;

  std::size_t jordan_pass() const;
  bool fatal() const { return jordan_pass() != entries.size(); }
  std::string text() const;
  /// One line per entry: name, PASS/FAIL, computed tuple.
  std::string summary() const;
};

EntryReport verify_entry(const CatalogEntry& entry, const Algebra& a);
VerifyReport verify_catalog(const Catalog& catalog, const VerifyOptions& opts = {});

/// Parses "[+-][c] label [+- [c] label ...]" into an element of a.
Element parse_element(const Algebra& a, const std::string& text);

}  // namespace jordan

#endif
