#include "jordan/fingerprint.hpp"

#include <sstream>

#include "jordan/cohomology.hpp"

namespace jordan {

namespace {

std::string seq(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string opt(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

std::string quotient(const QuotientRecord& q) {
  return "(dim=" + std::to_string(q.dim) + ",der=" + std::to_string(q.dim_der) + ",assoc=" + yesno(q.associative) +
         ")";
}

std::optional<bool> b2_flag(const Algebra& a, const GroebnerOptions& opts) {
  EmbedResult r = embeds_b2(a, opts);
  if (r.answer == Solvability::Inconclusive) return std::nullopt;
  return r.answer == Solvability::Yes;
}

std::string triple(const std::array<std::size_t, 3>& t) { return seq({t.begin(), t.end()}); }

std::string b2_text(const std::optional<bool>& b) { return b ? yesno(*b) : "inconclusive"; }

}  // namespace

CoreFingerprint core_fingerprint(const Algebra& a) {
  CoreFingerprint f;
  f.dim = a.dim();
  f.power = power_profile(a);
  f.dim_ann = annihilator(a).dim();
  f.unital = find_identity(a).has_value();
  f.associative = is_associative(a);
  f.dim_der = derivation_dim(a);
  Subspace rad = radical(a);
  f.dim_rad = rad.dim();
  f.rad_type = nilpotency_type(induced_algebra(a, rad));
  f.trace_rank = trace_rank(a);
  Algebra q = quotient_algebra(a, rad);
  f.ss_quotient = {q.dim(), derivation_dim(q), is_associative(q)};
  return f;
}

Fingerprint fingerprint(const Algebra& a, const FingerprintOptions& opts) {
  Fingerprint f;
  f.core = core_fingerprint(a);
  if (opts.radical) f.radical = core_fingerprint(induced_algebra(a, radical(a)));
  f.rad_module = radical_module_type(a);
  f.square_rank = square_rank(a);
  if (opts.h2) f.dim_h2 = cocycle_space(a).h2_dim;
  if (opts.b2) f.b2_embeds = b2_flag(a, opts.groebner);
  return f;
}

Fingerprint fingerprint(const Algebra& a, bool with_b2) {
  FingerprintOptions o;
  o.b2 = with_b2;
  return fingerprint(a, o);
}

std::string to_string(const CoreFingerprint& f) {
  std::ostringstream os;
  os << "dim=" << f.dim << " powers=" << seq(f.power.assoc_powers) << " lcs=" << seq(f.power.lcs)
     << " nilindex=" << opt(f.power.nilindex) << " ann=" << f.dim_ann << " unital=" << yesno(f.unital)
     << " assoc=" << yesno(f.associative) << " der=" << f.dim_der << " rad=" << f.dim_rad
     << " radtype=" << seq(f.rad_type) << " trace_rank=" << f.trace_rank << " ss=" << quotient(f.ss_quotient);
  return os.str();
}

std::string to_string(const Fingerprint& f) {
  std::ostringstream os;
  os << to_string(f.core) << " radfp=[" << (f.radical ? to_string(*f.radical) : "-") << "]"
     << " radmod=" << triple(f.rad_module) << " sqrank=" << f.square_rank << " b2=" << (f.b2_embeds ? yesno(*f.b2_embeds) : "-") << " h2=" << opt(f.dim_h2);
  return os.str();
}

std::optional<Difference> first_difference(const CoreFingerprint& a, const CoreFingerprint& b) {
  auto num = [](std::size_t v) { return std::to_string(v); };
  if (a.dim != b.dim) return Difference{"dim", num(a.dim), num(b.dim)};
  if (a.power.assoc_powers != b.power.assoc_powers)
    return Difference{"assoc_powers", seq(a.power.assoc_powers), seq(b.power.assoc_powers)};
  if (a.power.lcs != b.power.lcs) return Difference{"lcs", seq(a.power.lcs), seq(b.power.lcs)};
  if (a.power.nilindex != b.power.nilindex)
    return Difference{"nilindex", opt(a.power.nilindex), opt(b.power.nilindex)};
  if (a.dim_ann != b.dim_ann) return Difference{"dim_ann", num(a.dim_ann), num(b.dim_ann)};
  if (a.unital != b.unital) return Difference{"unital", yesno(a.unital), yesno(b.unital)};
  if (a.associative != b.associative) return Difference{"associative", yesno(a.associative), yesno(b.associative)};
  if (a.dim_der != b.dim_der) return Difference{"dim_der", num(a.dim_der), num(b.dim_der)};
  if (a.dim_rad != b.dim_rad) return Difference{"dim_rad", num(a.dim_rad), num(b.dim_rad)};
  if (a.rad_type != b.rad_type) return Difference{"rad_nilpotency_type", seq(a.rad_type), seq(b.rad_type)};
  if (a.trace_rank != b.trace_rank) return Difference{"trace_rank", num(a.trace_rank), num(b.trace_rank)};
  if (a.ss_quotient != b.ss_quotient)
    return Difference{"ss_quotient", quotient(a.ss_quotient), quotient(b.ss_quotient)};
  return std::nullopt;
}

std::optional<Difference> distinguish(const Algebra& a, const Algebra& b, const GroebnerOptions& opts) {
  if (auto d = first_difference(core_fingerprint(a), core_fingerprint(b))) return d;
  CoreFingerprint ra = core_fingerprint(induced_algebra(a, radical(a)));
  CoreFingerprint rb = core_fingerprint(induced_algebra(b, radical(b)));
  if (auto d = first_difference(ra, rb)) {
    d->field = "rad_fingerprint." + d->field;
    return d;
  }
  auto ma = radical_module_type(a);
  auto mb = radical_module_type(b);
  if (ma != mb) return Difference{"rad_module", triple(ma), triple(mb)};
  std::size_t sa = square_rank(a);
  std::size_t sb = square_rank(b);
  if (sa != sb) return Difference{"square_rank", std::to_string(sa), std::to_string(sb)};
  auto ba = b2_flag(a, opts);
  auto bb = b2_flag(b, opts);
  if (ba && bb && *ba != *bb) return Difference{"b2_embeds", b2_text(ba), b2_text(bb)};
  std::size_t ha = cocycle_space(a).h2_dim;
  std::size_t hb = cocycle_space(b).h2_dim;
  if (ha != hb) return Difference{"dim_h2", std::to_string(ha), std::to_string(hb)};
  return std::nullopt;
}

}  // namespace jordan
