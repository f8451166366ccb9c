#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "jordan/catalog.hpp"
#include "jordan/cohomology.hpp"
#include "jordan/embed.hpp"
#include "jordan/fingerprint.hpp"
#include "jordan/invariants.hpp"
#include "jordan/parallel.hpp"
#include "jordan/peirce.hpp"

#ifndef JORDAN_CATALOG_DIR
#define JORDAN_CATALOG_DIR "data/catalog"
#endif

using namespace jordan;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string dir = JORDAN_CATALOG_DIR;
  bool deep = false;
  std::size_t budget = GroebnerOptions{}.max_pairs;
  std::string summary;
};

Catalog load(const Options& o) {
  try {
    return Catalog::load_directory(o.dir);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

GroebnerOptions groebner(const Options& o) {
  GroebnerOptions g;
  g.max_pairs = o.budget;
  return g;
}

// A catalog name, or a file whose last entry is taken (earlier catalog names may be referenced).
std::pair<std::string, Algebra> target(const Catalog& cat, const std::string& arg) {
  if (cat.contains(arg)) return {arg, cat.algebra(arg)};
  if (std::filesystem::is_regular_file(arg)) {
    std::ifstream in(arg);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      auto entries = parse_catalog(buf.str(), arg);
      if (entries.empty()) throw UsageError(arg + ": no algebra defined");
      Environment env;
      for (const auto& e : cat.entries()) env.emplace(e.name, cat.algebra(e.name));
      for (const auto& e : entries) env.insert_or_assign(e.name, resolve(e, env));
      return {entries.back().name, env.at(entries.back().name)};
    } catch (const CatalogError& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("unknown algebra '" + arg + "'");
}

std::string format_element(const Algebra& a, const Element& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational c = v[i];
    if (c.is_zero()) continue;
    if (s.empty()) {
      if (c.sign() < 0) s += "-";
    } else {
      s += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    if (!c.is_one()) s += c.to_string() + " ";
    s += a.label(i);
  }
  return s.empty() ? "0" : s;
}

std::string format_span(const Algebra& a, const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.basis().size(); ++i) out += (i ? ", " : "") + format_element(a, s.basis()[i]);
  return out + "}";
}

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

int cmd_verify(const Options& o) {
  Catalog cat = load(o);
  VerifyOptions vo;
  vo.deep = o.deep;
  vo.groebner = groebner(o);
  VerifyReport rep = verify_catalog(cat, vo);
  std::cout << rep.text();
  if (!o.summary.empty()) {
    std::ofstream out(o.summary);
    if (!out) throw UsageError("cannot write " + o.summary);
    out << rep.summary();
  }
  return rep.fatal() ? kFailure : kOk;
}

int cmd_invariants(const Options& o, const std::string& name) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  if (auto v = find_jordan_violation(a)) {
    std::cout << label << ": not a Jordan algebra: " << v->describe(a) << "\n";
    return kFailure;
  }
  PowerProfile p = power_profile(a);
  Subspace rad = radical(a);
  std::cout << label << "\n";
  std::cout << "dim=" << a.dim() << "\n";
  std::cout << "der=" << derivation_dim(a) << " ann=" << annihilator(a).dim() << " sq=" << p.dim_square() << "\n";
  std::cout << "powers=" << tuple(p.assoc_powers) << " lcs=" << tuple(p.lcs)
            << " nilindex=" << (p.nilindex ? std::to_string(*p.nilindex) : "-") << "\n";
  std::cout << "rad=" << rad.dim() << " radtype=" << tuple(nilpotency_type(induced_algebra(a, rad))) << "\n";
  std::cout << "unital=" << (find_identity(a) ? "yes" : "no") << " associative=" << (is_associative(a) ? "yes" : "no")
            << " nilpotent=" << (is_nilpotent(a) ? "yes" : "no") << "\n";
  std::cout << "trace_rank=" << trace_rank(a) << "\n";
  return kOk;
}

int cmd_fingerprint(const Options& o, const std::string& name) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  FingerprintOptions fo;
  fo.b2 = o.deep;
  fo.groebner = groebner(o);
  std::cout << label << " " << to_string(fingerprint(a, fo)) << "\n";
  return kOk;
}

int cmd_fingerprint_all(const Options& o) {
  Catalog cat = load(o);
  std::vector<std::string> names;
  for (const auto& e : cat.entries())
    if (cat.algebra(e.name).dim() == 4) names.push_back(e.name);
  std::vector<Fingerprint> fps(names.size());
  parallel_for(names.size(), [&](std::size_t i) { fps[i] = fingerprint(cat.algebra(names[i])); });

  std::map<Fingerprint, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < names.size(); ++i) groups[fps[i]].push_back(i);
  std::vector<std::size_t> tied;
  for (const auto& [fp, members] : groups)
    if (members.size() > 1) tied.insert(tied.end(), members.begin(), members.end());
  parallel_for(tied.size(), [&](std::size_t k) {
    FingerprintOptions fo;
    fo.b2 = true;
    fo.groebner = groebner(o);
    fps[tied[k]].b2_embeds = fingerprint(cat.algebra(names[tied[k]]), fo).b2_embeds;
  });

  for (std::size_t i = 0; i < names.size(); ++i) std::cout << names[i] << " " << to_string(fps[i]) << "\n";
  std::map<Fingerprint, std::vector<std::string>> final_groups;
  for (std::size_t i = 0; i < names.size(); ++i) final_groups[fps[i]].push_back(names[i]);
  std::cout << "\n" << names.size() << " algebras: " << final_groups.size() << " distinct fingerprints\n";
  if (!tied.empty()) std::cout << "B2 embedding computed for " << tied.size() << " algebras with tied fingerprints\n";
  bool ok = final_groups.size() == names.size();
  for (const auto& [fp, members] : final_groups)
    if (members.size() > 1) {
      std::cout << "TIE:";
      for (const auto& m : members) std::cout << " " << m;
      std::cout << "\n";
    }
  std::cout << (ok ? "PASS pairwise distinct\n" : "FAIL fingerprints collide\n");
  return ok ? kOk : kFailure;
}

int cmd_distinguish(const Options& o, const std::string& x, const std::string& y) {
  Catalog cat = load(o);
  auto [lx, a] = target(cat, x);
  auto [ly, b] = target(cat, y);
  auto d = distinguish(a, b, groebner(o));
  std::cout << (d ? d->text() : "INDISTINGUISHABLE by implemented invariants") << "\n";
  return kOk;
}

int cmd_peirce(const Options& o, const std::string& name, const std::string& expr) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  Element e;
  try {
    e = parse_element(a, expr);
  } catch (const std::invalid_argument& ex) {
    throw UsageError(ex.what());
  }
  Element square = a.multiply(e, e);
  if (square != e) {
    std::cout << "error: not an idempotent: e*e = " << format_element(a, square) << " but e = " << format_element(a, e)
              << "\n";
    return kFailure;
  }
  try {
    SinglePeirce d = peirce_single(a, e);
    std::cout << "idempotent " << format_element(a, e) << " in " << label << "\n";
    std::cout << "J_1 = " << format_span(a, d.one) << "\n";
    std::cout << "J_1/2 = " << format_span(a, d.half) << "\n";
    std::cout << "J_0 = " << format_span(a, d.zero) << "\n";
    std::cout << "dims " << d.one.dim() << " + " << d.half.dim() << " + " << d.zero.dim() << " = " << a.dim() << "\n";
    std::cout << "Peirce multiplication rules: all hold\n";
    return kOk;
  } catch (const PeirceError& ex) {
    std::cout << "error: " << ex.what() << "\n";
    return kFailure;
  }
}

int cmd_h2(const Options& o, const std::string& name) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  CocycleSpace cs = cocycle_space(a);
  std::cout << "H2(" << label << ")=" << cs.h2_dim << " (Z2=" << cs.z2_dim << " B2=" << cs.b2_dim << ")\n";
  return kOk;
}

int cmd_embed(const Options& o, const std::string& name) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  EmbedResult r = embeds_b2(a, groebner(o));
  std::cout << "B2 in " << label << ": " << to_string(r.answer) << " (" << r.method;
  if (r.method == "groebner") std::cout << ", " << r.branches.size() << " branches, " << r.pairs_reduced << " S-pairs";
  std::cout << ")\n";
  if (r.witness)
    std::cout << "witness e = " << format_element(a, r.witness->e) << ", y = " << format_element(a, r.witness->y)
              << "\n";
  return kOk;
}

int cmd_show(const Options& o, const std::string& name) {
  Catalog cat = load(o);
  auto [label, a] = target(cat, name);
  std::cout << serialize(label, a);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact structure-constant toolkit for finite-dimensional Jordan algebras", "jordan"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--dir", o.dir, "Catalog directory")->capture_default_str();
  app.add_option("--budget", o.budget, "S-pair budget for Groebner computations")->capture_default_str();
  app.add_flag("--deep", o.deep, "Run the expensive distinguishers");
  app.add_option("--summary", o.summary, "Write a one-line-per-entry summary file");

  std::string n1, n2, expr;
  std::function<int()> run;
  auto* verify = app.add_subcommand("verify", "Verify every catalog entry and report errata");
  verify->callback([&] { run = [&] { return cmd_verify(o); }; });
  auto* inv = app.add_subcommand("invariants", "Print the invariant record of one algebra");
  inv->add_option("algebra", n1, "Catalog name or .alg file")->required();
  inv->callback([&] { run = [&] { return cmd_invariants(o, n1); }; });
  auto* fp = app.add_subcommand("fingerprint", "Print the fingerprint of one algebra");
  fp->add_option("algebra", n1)->required();
  fp->callback([&] { run = [&] { return cmd_fingerprint(o, n1); }; });
  auto* fpa = app.add_subcommand("fingerprint-all", "Fingerprint every 4-dimensional entry and check distinctness");
  fpa->callback([&] { run = [&] { return cmd_fingerprint_all(o); }; });
  auto* dis = app.add_subcommand("distinguish", "Name the first invariant separating two algebras");
  dis->add_option("first", n1)->required();
  dis->add_option("second", n2)->required();
  dis->callback([&] { run = [&] { return cmd_distinguish(o, n1, n2); }; });
  auto* pe = app.add_subcommand("peirce", "Peirce decomposition relative to an idempotent");
  pe->add_option("algebra", n1)->required();
  pe->add_option("idempotent", expr, "e.g. \"e1 - n2 + n3\"")->required();
  pe->callback([&] { run = [&] { return cmd_peirce(o, n1, expr); }; });
  auto* h2 = app.add_subcommand("h2", "Dimensions of Z2, B2 and H2");
  h2->add_option("algebra", n1)->required();
  h2->callback([&] { run = [&] { return cmd_h2(o, n1); }; });
  auto* emb = app.add_subcommand("embed-b2", "Decide whether B2 is a subalgebra");
  emb->add_option("algebra", n1)->required();
  emb->callback([&] { run = [&] { return cmd_embed(o, n1); }; });
  auto* show = app.add_subcommand("show", "Print an algebra in catalog format");
  show->add_option("algebra", n1)->required();
  show->callback([&] { run = [&] { return cmd_show(o, n1); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsage;
  }
  try {
    return run();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
