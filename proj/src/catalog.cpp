#include "jordan/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "jordan/cohomology.hpp"
#include "jordan/embed.hpp"
#include "jordan/fingerprint.hpp"
#include "jordan/invariants.hpp"
#include "jordan/parallel.hpp"
#include "jordan/peirce.hpp"

namespace jordan {

CatalogError::CatalogError(const std::string& source, std::size_t line, const std::string& msg)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + msg), line_(line) {}

namespace {

const std::set<std::string> kFlags = {"unitary", "associative", "nonassociative", "nilpotent", "semisimple"};

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

bool label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

// [+-][c] label [+- [c] label ...], or a lone "0".
std::vector<std::pair<Rational, std::string>> parse_terms(const std::string& text) {
  std::vector<std::pair<Rational, std::string>> out;
  std::string s = trim(text);
  if (s == "0") return out;
  if (s.empty()) throw std::invalid_argument("empty expression");
  std::size_t i = 0;
  bool first = true;
  while (true) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i == s.size()) break;
    int sign = 1;
    bool saw_sign = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '-') sign = -sign;
      if (s[i] != ' ' && s[i] != '\t') saw_sign = true;
      ++i;
    }
    if (!first && !saw_sign) throw std::invalid_argument("expected '+' or '-' before term");
    first = false;
    Rational c(1);
    if (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/' || s[i] == '.')) {
      std::size_t j = i;
      while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) && s[j] != '*' && s[j] != '+' &&
             s[j] != '-' && !std::isalpha(static_cast<unsigned char>(s[j])))
        ++j;
      std::string lit = s.substr(i, j - i);
      try {
        c = Rational::parse(lit);
      } catch (const std::exception&) {
        throw std::invalid_argument("coefficient is not a rational literal: '" + lit + "'");
      }
      i = j;
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*')) ++i;
    }
    if (i == s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("expected a basis label in '" + s + "'");
    std::size_t j = i;
    while (j < s.size() && label_char(s[j])) ++j;
    out.emplace_back(sign < 0 ? -c : c, s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::size_t> parse_tuple(const std::string& text) {
  std::string s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw std::invalid_argument("expected (a,b,...)");
  std::vector<std::size_t> out;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  for (std::string part; std::getline(is, part, ',');) {
    part = trim(part);
    if (part.empty() || !std::all_of(part.begin(), part.end(), ::isdigit))
      throw std::invalid_argument("expected a nonnegative integer, got '" + part + "'");
    out.push_back(std::stoul(part));
  }
  if (out.empty()) throw std::invalid_argument("empty tuple");
  return out;
}

std::size_t parse_count(const std::string& w) {
  if (w.empty() || !std::all_of(w.begin(), w.end(), ::isdigit))
    throw std::invalid_argument("expected a nonnegative integer, got '" + w + "'");
  return std::stoul(w);
}

std::string tuple_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

class Parser {
public:
  Parser(const std::string& text, std::string source) : source_(std::move(source)) {
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) lines_.push_back(l);
  }

  std::vector<CatalogEntry> run() {
    std::vector<CatalogEntry> out;
    std::set<std::string> seen;
    while (pos_ < lines_.size()) {
      std::string l = current();
      if (l.empty()) {
        ++pos_;
        continue;
      }
      auto w = words(l);
      if (w[0] != "algebra") fail("expected 'algebra', got '" + w[0] + "'");
      CatalogEntry e = entry();
      if (!seen.insert(e.name).second) throw CatalogError(source_, e.line, "duplicate algebra name '" + e.name + "'");
      out.push_back(std::move(e));
    }
    return out;
  }

private:
  std::string current() const {
    std::string l = lines_[pos_];
    auto hash = l.find('#');
    if (hash != std::string::npos) l = l.substr(0, hash);
    return trim(l);
  }

  [[noreturn]] void fail(const std::string& msg) const { throw CatalogError(source_, pos_ + 1, msg); }

  CatalogEntry entry() {
    CatalogEntry e;
    e.source = source_;
    e.line = pos_ + 1;
    std::string head = trim(current().substr(std::string("algebra").size()));
    auto eq = head.find('=');
    if (eq == std::string::npos) {
      e.name = trim(head);
    } else {
      e.name = trim(head.substr(0, eq));
      std::string rhs = head.substr(eq + 1);
      std::istringstream is(rhs);
      for (std::string part; std::getline(is, part, '+');) {
        part = trim(part);
        if (part.empty() || part.find(' ') != std::string::npos) fail("malformed direct sum '" + trim(rhs) + "'");
        e.summands.push_back(part);
      }
    }
    if (e.name.empty() || e.name.find(' ') != std::string::npos) fail("malformed algebra name");
    ++pos_;

    bool have_dim = false;
    while (true) {
      if (pos_ >= lines_.size()) {
        if (e.is_sum()) break;
        fail("missing 'end' for algebra " + e.name);
      }
      std::string l = current();
      if (l.empty()) {
        ++pos_;
        continue;
      }
      auto w = words(l);
      if (w[0] == "algebra") {
        if (e.is_sum()) break;
        fail("missing 'end' for algebra " + e.name);
      }
      if (w[0] == "end") {
        if (w.size() != 1) fail("unexpected text after 'end'");
        ++pos_;
        break;
      }
      try {
        if (w[0] == "dim") {
          if (e.is_sum()) fail("'dim' not allowed in a direct-sum entry");
          if (w.size() != 2) fail("expected 'dim <n>'");
          e.dim = parse_count(w[1]);
          have_dim = true;
        } else if (w[0] == "basis") {
          e.basis.assign(w.begin() + 1, w.end());
          std::set<std::string> uniq(e.basis.begin(), e.basis.end());
          if (uniq.size() != e.basis.size()) fail("duplicate basis label");
          for (const auto& b : e.basis)
            if (b.empty() || !std::isalpha(static_cast<unsigned char>(b[0])) ||
                !std::all_of(b.begin(), b.end(), label_char))
              fail("malformed basis label '" + b + "'");
        } else if (w[0] == "expect") {
          expect(e, l, w);
        } else if (l.find('=') != std::string::npos && l.find('*') != std::string::npos) {
          if (e.is_sum()) fail("product lines not allowed in a direct-sum entry");
          product(e, l);
        } else {
          fail("unrecognised line '" + l + "'");
        }
      } catch (const std::invalid_argument& ex) {
        fail(ex.what());
      }
      ++pos_;
    }
    if (!e.is_sum()) {
      if (!have_dim) throw CatalogError(source_, e.line, "algebra " + e.name + " has no 'dim' line");
      if (e.basis.empty()) {
        for (std::size_t i = 0; i < e.dim; ++i) e.basis.push_back("b" + std::to_string(i + 1));
      } else if (e.basis.size() != e.dim) {
        throw CatalogError(source_, e.line, "algebra " + e.name + ": basis has " + std::to_string(e.basis.size()) +
                                                " labels but dim is " + std::to_string(e.dim));
      }
      for (const auto& p : e.products) check_product(e, p);
    }
    return e;
  }

  void product(CatalogEntry& e, const std::string& l) {
    auto eq = l.find('=');
    std::string lhs = trim(l.substr(0, eq));
    auto star = lhs.find('*');
    if (star == std::string::npos) fail("expected 'a*b = ...'");
    ProductLine p;
    p.left = trim(lhs.substr(0, star));
    p.right = trim(lhs.substr(star + 1));
    p.line = pos_ + 1;
    p.terms = parse_terms(l.substr(eq + 1));
    e.products.push_back(std::move(p));
  }

  void check_product(const CatalogEntry& e, const ProductLine& p) {
    auto idx = [&](const std::string& s) -> std::size_t {
      auto it = std::find(e.basis.begin(), e.basis.end(), s);
      if (it == e.basis.end()) throw CatalogError(source_, p.line, "unknown basis label '" + s + "'");
      return static_cast<std::size_t>(it - e.basis.begin());
    };
    std::size_t i = idx(p.left), j = idx(p.right);
    if (i > j)
      throw CatalogError(source_, p.line,
                         "product " + p.left + "*" + p.right + " must be written in basis order as " + p.right +
                             "*" + p.left);
    for (const auto& t : p.terms) idx(t.second);
    for (const auto& q : e.products)
      if (&q != &p && q.line < p.line && q.left == p.left && q.right == p.right)
        throw CatalogError(source_, p.line, "product " + p.left + "*" + p.right + " defined twice");
  }

  void expect(CatalogEntry& e, const std::string& l, const std::vector<std::string>& w) {
    if (w.size() < 3) fail("incomplete 'expect' line");
    const std::string& key = w[1];
    ExpectedRow& x = e.expected;
    auto rest = [&] {
      auto at = l.find(key, l.find("expect") + 6);
      return trim(l.substr(at + key.size()));
    };
    if (key == "aut" || key == "ann" || key == "sq" || key == "rad") {
      if (w.size() != 3) fail("expected 'expect " + key + " <k>'");
      std::size_t v = parse_count(w[2]);
      (key == "aut" ? x.aut : key == "ann" ? x.ann : key == "sq" ? x.sq : x.rad) = v;
    } else if (key == "flags") {
      for (std::size_t i = 2; i < w.size(); ++i) {
        if (!kFlags.count(w[i])) fail("unknown flag '" + w[i] + "'");
        x.flags.insert(w[i]);
      }
    } else if (key == "niltype") {
      x.niltype = parse_tuple(rest());
    } else if (key == "radtype") {
      x.radtype = parse_tuple(rest());
    } else if (key == "peirce") {
      if (w.size() != 4) fail("expected 'expect peirce <label> <component>'");
      x.peirce.push_back({w[2], w[3], pos_ + 1});
    } else {
      fail("unknown expectation '" + key + "'");
    }
  }

  std::string source_;
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

void check_bounds(const CatalogEntry& e, std::size_t dim) {
  auto bad = [&](const char* what, std::size_t v, std::size_t limit) {
    if (v > limit)
      throw CatalogError(e.source, e.line,
                         "algebra " + e.name + ": expected " + what + " " + std::to_string(v) + " exceeds " +
                             std::to_string(limit));
  };
  const ExpectedRow& x = e.expected;
  if (x.aut) bad("aut", *x.aut, dim * dim);
  if (x.ann) bad("ann", *x.ann, dim);
  if (x.sq) bad("sq", *x.sq, dim);
  if (x.rad) bad("rad", *x.rad, dim);
}

}  // namespace

std::vector<CatalogEntry> parse_catalog(const std::string& text, const std::string& source) {
  return Parser(text, source).run();
}

Algebra resolve(const CatalogEntry& e, const Environment& env) {
  if (e.is_sum()) {
    Algebra a = Algebra::zero(0);
    for (const auto& s : e.summands) {
      auto it = env.find(s);
      if (it == env.end()) throw CatalogError(e.source, e.line, "unknown algebra '" + s + "' in direct sum");
      a = direct_sum(a, it->second);
    }
    if (!e.basis.empty()) {
      if (e.basis.size() != a.dim())
        throw CatalogError(e.source, e.line,
                           "algebra " + e.name + ": basis has " + std::to_string(e.basis.size()) +
                               " labels but the sum has dimension " + std::to_string(a.dim()));
      a.relabel(e.basis);
    }
    check_bounds(e, a.dim());
    return a;
  }
  Algebra a(e.basis);
  for (const auto& p : e.products) {
    std::size_t i = *a.index_of(p.left), j = *a.index_of(p.right);
    Element v(a.dim());
    for (const auto& [c, l] : p.terms) v[*a.index_of(l)] += c;
    a.set_product(i, j, v, true);
  }
  check_bounds(e, a.dim());
  return a;
}

std::string serialize(const std::string& name, const Algebra& a) {
  std::ostringstream os;
  os << "algebra " << name << "\n";
  os << "dim " << a.dim() << "\n";
  os << "basis";
  for (const auto& l : a.labels()) os << " " << l;
  os << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      if (a.basis_product_is_zero(i, j)) continue;
      Element v = a.basis_product(i, j);
      if (is_zero(v)) continue;
      os << a.label(i) << "*" << a.label(j) << " =";
      bool first = true;
      for (std::size_t k = 0; k < a.dim(); ++k) {
        Rational c = v[k];
        if (c.is_zero()) continue;
        if (c.sign() < 0) {
          os << " -";
          c = -c;
        } else if (!first) {
          os << " +";
        }
        os << " ";
        if (!c.is_one()) os << c << " ";
        os << a.label(k);
        first = false;
      }
      os << "\n";
    }
  os << "end\n";
  return os.str();
}

Catalog::Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (index_.count(e.name)) throw CatalogError(e.source, e.line, "duplicate algebra name '" + e.name + "'");
    algebras_.emplace(e.name, resolve(e, algebras_));
    index_[e.name] = i;
  }
}

Catalog Catalog::load_directory(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw std::runtime_error("catalog directory not found: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& f : fs::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".alg") files.push_back(f.path());
  if (files.empty()) throw std::runtime_error("no .alg files in " + dir.string());
  std::sort(files.begin(), files.end());
  std::vector<CatalogEntry> all;
  for (const auto& f : files) {
    std::ifstream in(f);
    if (!in) throw std::runtime_error("cannot read " + f.string());
    std::stringstream buf;
    buf << in.rdbuf();
    auto part = parse_catalog(buf.str(), f.filename().string());
    for (auto& e : part) all.push_back(std::move(e));
  }
  return Catalog(std::move(all));
}

const Algebra& Catalog::algebra(const std::string& name) const {
  auto it = algebras_.find(name);
  if (it == algebras_.end()) throw std::out_of_range("unknown algebra '" + name + "'");
  return it->second;
}

const CatalogEntry& Catalog::entry(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown algebra '" + name + "'");
  return entries_[it->second];
}

Element parse_element(const Algebra& a, const std::string& text) {
  Element v(a.dim());
  for (const auto& [c, l] : parse_terms(text)) {
    auto i = a.index_of(l);
    if (!i) throw std::invalid_argument("unknown label '" + l + "'");
    v[*i] += c;
  }
  return v;
}

namespace {

void check_peirce(EntryReport& r, const CatalogEntry& e, const Algebra& a) {
  if (e.expected.peirce.empty()) return;
  std::optional<IdempotentFrame> frame;
  std::optional<MultiPeirce> multi;
  std::optional<SinglePeirce> single;
  for (const auto& p : e.expected.peirce) {
    auto idx = a.index_of(p.label);
    if (!idx) {
      r.mismatches.push_back("peirce " + p.label + ": unknown label");
      continue;
    }
    Element x = a.basis(*idx);
    try {
      if (p.component == "0" || p.component == "1/2" || p.component == "1") {
        if (!single) {
          auto e1 = a.index_of("e1");
          if (!e1) throw PeirceError("no idempotent e1");
          single = peirce_single(a, a.basis(*e1));
        }
        std::string got = single->one.contains(x)    ? "1"
                          : single->half.contains(x) ? "1/2"
                          : single->zero.contains(x) ? "0"
                                                     : "mixed";
        if (got != p.component)
          r.mismatches.push_back("peirce " + p.label + ": table J_" + p.component + ", computed J_" + got);
      } else {
        if (p.component.size() != 2 || !std::isdigit(static_cast<unsigned char>(p.component[0])) ||
            !std::isdigit(static_cast<unsigned char>(p.component[1])))
          throw PeirceError("malformed component '" + p.component + "'");
        if (!frame) {
          frame = table_idempotent_frame(a);
          multi = peirce_multi(frame->algebra, frame->idempotents);
        }
        auto which = [&](char d) -> std::size_t {
          std::string name = d == '0' ? "e0" : std::string("e") + d;
          auto it = std::find(frame->names.begin(), frame->names.end(), name);
          if (it == frame->names.end()) throw PeirceError("no idempotent " + name + " in the table frame");
          return static_cast<std::size_t>(it - frame->names.begin());
        };
        std::size_t i = which(p.component[0]), j = which(p.component[1]);
        auto loc = multi->locate(frame->embed(x));
        auto name_of = [&](std::size_t k) {
          return frame->names[k] == "e0" ? std::string("0") : frame->names[k].substr(1);
        };
        if (!loc || std::minmax(loc->first, loc->second) != std::minmax(i, j)) {
          std::string got = loc ? name_of(loc->first) + name_of(loc->second) : "mixed";
          r.mismatches.push_back("peirce " + p.label + ": table N_" + p.component + ", computed N_" + got);
        }
      }
      ++r.peirce_checked;
    } catch (const std::exception& ex) {
      r.mismatches.push_back("peirce " + p.label + ": " + ex.what());
    }
  }
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& e, const Algebra& a) {
  EntryReport r;
  r.name = e.name;
  if (auto v = find_jordan_violation(a)) {
    r.violation = v->describe(a);
    return r;
  }
  r.jordan = true;
  Computed& c = r.computed;
  c.dim = a.dim();
  c.der = derivation_dim(a);
  c.ann = annihilator(a).dim();
  c.sq = power_profile(a).dim_square();
  c.unital = find_identity(a).has_value();
  c.associative = is_associative(a);
  c.nilpotent = is_nilpotent(a);
  if (c.nilpotent) c.niltype = nilpotency_type(a);
  try {
    Subspace rad = radical(a);
    c.rad = rad.dim();
    c.radtype = nilpotency_type(induced_algebra(a, rad));
    r.radical_checked = true;
  } catch (const std::exception& ex) {
    r.mismatches.push_back(std::string("radical check failed: ") + ex.what());
  }

  const ExpectedRow& x = e.expected;
  auto cmp = [&](const char* what, const std::optional<std::size_t>& want, std::size_t got) {
    if (want && *want != got)
      r.mismatches.push_back(std::string(what) + ": table " + std::to_string(*want) + ", computed " +
                             std::to_string(got));
  };
  cmp("aut", x.aut, c.der);
  cmp("ann", x.ann, c.ann);
  cmp("sq", x.sq, c.sq);
  if (r.radical_checked) cmp("rad", x.rad, c.rad);
  r.table_row = x.has_table_row();
  r.table_match = r.table_row && *x.aut == c.der && *x.ann == c.ann && *x.sq == c.sq;

  auto flag = [&](const std::string& f) {
    if (f == "unitary") return c.unital;
    if (f == "associative") return c.associative;
    if (f == "nonassociative") return !c.associative;
    if (f == "nilpotent") return c.nilpotent;
    return r.radical_checked && c.rad == 0;
  };
  for (const auto& f : x.flags)
    if (!flag(f)) r.mismatches.push_back("flag " + f + ": annotated, not satisfied");
  if (c.unital && !x.flags.count("unitary") && !x.flags.empty()) r.notes.push_back("unital, not annotated unitary");
  if (c.associative && !x.flags.count("associative") && !x.flags.empty())
    r.notes.push_back("associative, not annotated associative");

  if (x.niltype) {
    if (!c.nilpotent)
      r.mismatches.push_back("niltype: table " + tuple_string(*x.niltype) + ", algebra is not nilpotent");
    else if (*x.niltype != c.niltype)
      r.mismatches.push_back("niltype: table " + tuple_string(*x.niltype) + ", computed " + tuple_string(c.niltype));
  }
  if (x.radtype && r.radical_checked && *x.radtype != c.radtype)
    r.mismatches.push_back("radtype: table " + tuple_string(*x.radtype) + ", computed " + tuple_string(c.radtype));
  check_peirce(r, e, a);
  return r;
}

std::size_t VerifyReport::jordan_pass() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const EntryReport& r) {
    return r.jordan;
  }));
}

std::string VerifyReport::text() const {
  std::ostringstream os;
  std::size_t rows = 0, matches = 0, peirce = 0;
  for (const auto& r : entries) {
    os << r.name << " ";
    if (!r.jordan) {
      os << "FAIL Jordan identity: " << r.violation << "\n";
      continue;
    }
    const Computed& c = r.computed;
    os << "PASS der=" << c.der << " ann=" << c.ann << " sq=" << c.sq << " rad=" << c.rad;
    if (!r.mismatches.empty()) os << " (" << r.mismatches.size() << " erratum" << (r.mismatches.size() > 1 ? "s" : "") << ")";
    os << "\n";
    if (r.table_row) {
      ++rows;
      if (r.table_match) ++matches;
    }
    peirce += r.peirce_checked;
  }
  os << "\nERRATA\n";
  bool any = false;
  for (const auto& r : entries)
    for (const auto& m : r.mismatches) {
      os << "  " << r.name << " " << m << "\n";
      any = true;
    }
  for (const auto& m : deep_errata) {
    os << "  " << m << "\n";
    any = true;
  }
  if (!any) os << "  none\n";
  bool notes = false;
  for (const auto& r : entries)
    for (const auto& n : r.notes) {
      if (!notes) os << "\nNOTES\n";
      notes = true;
      os << "  " << r.name << " " << n << "\n";
    }
  if (!deep_lines.empty()) {
    os << "\nDEEP\n";
    for (const auto& l : deep_lines) os << "  " << l << "\n";
  }
  os << "\n" << entries.size() << " algebras: " << jordan_pass() << " Jordan-identity PASS\n";
  os << "table rows: " << matches << "/" << rows << " match\n";
  os << "peirce placements checked: " << peirce << "\n";
  return os.str();
}

std::string VerifyReport::summary() const {
  std::ostringstream os;
  for (const auto& r : entries) {
    const Computed& c = r.computed;
    os << r.name << " " << (r.jordan ? "PASS" : "FAIL");
    if (r.jordan)
      os << " dim=" << c.dim << " der=" << c.der << " ann=" << c.ann << " sq=" << c.sq << " rad=" << c.rad
         << " unital=" << (c.unital ? 1 : 0) << " assoc=" << (c.associative ? 1 : 0)
         << " niltype=" << (c.nilpotent ? tuple_string(c.niltype) : "-") << " radtype=" << tuple_string(c.radtype)
         << " errata=" << r.mismatches.size();
    os << "\n";
  }
  return os.str();
}

VerifyReport verify_catalog(const Catalog& catalog, const VerifyOptions& opts) {
  VerifyReport rep;
  const auto& es = catalog.entries();
  rep.entries.resize(es.size());
  parallel_for(es.size(), [&](std::size_t i) { rep.entries[i] = verify_entry(es[i], catalog.algebra(es[i].name)); });
  if (!opts.deep) return rep;

  for (const char* n : {"J55", "J56", "J59"}) {
    if (!catalog.contains(n)) continue;
    const Algebra& a = catalog.algebra(n);
    std::size_t h2 = cocycle_space(a).h2_dim;
    rep.deep_lines.push_back(std::string("H2(") + n + ")=" + std::to_string(h2));
    std::string name(n);
    if (name == "J59" && h2 != 0) rep.deep_errata.push_back("H2(J59): expected 0, computed " + std::to_string(h2));
    if (name != "J59" && h2 == 0) rep.deep_errata.push_back("H2(" + name + "): expected nonzero, computed 0");
    EmbedResult b = embeds_b2(a, opts.groebner);
    std::string line = "B2 in " + name + ": " + to_string(b.answer) + " (" + b.method;
    if (b.witness) line += ", e=" + to_string(b.witness->e) + " y=" + to_string(b.witness->y);
    rep.deep_lines.push_back(line + ")");
    if (name == "J55" && b.answer != Solvability::No)
      rep.deep_errata.push_back(std::string("B2 in J55: expected no, computed ") + to_string(b.answer));
    if (name == "J56" && b.answer != Solvability::Yes)
      rep.deep_errata.push_back(std::string("B2 in J56: expected yes, computed ") + to_string(b.answer));
  }
  if (catalog.contains("J58") && catalog.contains("J60")) {
    auto ra = core_fingerprint(induced_algebra(catalog.algebra("J58"), radical(catalog.algebra("J58"))));
    auto rb = core_fingerprint(induced_algebra(catalog.algebra("J60"), radical(catalog.algebra("J60"))));
    auto d = first_difference(ra, rb);
    rep.deep_lines.push_back("Rad(J58) vs Rad(J60): " + (d ? d->text() : std::string("no difference")));
    if (!d) rep.deep_errata.push_back("Rad(J58) vs Rad(J60): radical fingerprints agree");
  }
  return rep;
}

}  // namespace jordan
