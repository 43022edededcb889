#include <CLI11.hpp>
#include <json.hpp>
#include <sstream>
#include <type_traits>

#include "galois/apps.hpp"
#include "galois/cli.hpp"
#include "galois/correspondence.hpp"
#include "galois/finitefield.hpp"

namespace galois {
namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string field = "Q";
  bool json = false;
  std::size_t max_degree = 24;
  std::string seed_order = "canonical";
};

struct Report {
  std::string text;
  Json json;
};

[[noreturn]] void usage(const std::string& what) { fail(ErrorKind::ParseError, what); }

/// 0 for Q, otherwise the prime p of F<p>.
std::uint64_t parse_field(const std::string& s) {
  if (s == "Q") return 0;
  const bool digits = s.size() >= 2 && s.size() <= 11 && s[0] == 'F' &&
                      std::all_of(s.begin() + 1, s.end(), [](char c) { return c >= '0' && c <= '9'; });
  if (!digits) throw SyntaxError(0, {"Q", "F<prime>"}, "'" + s + "'");
  const std::uint64_t p = std::stoull(s.substr(1));
  if (p >= (1ULL << 32)) usage("field characteristic must be below 2^32");
  if (!is_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  return p;
}

std::string field_name(std::uint64_t p) { return p == 0 ? "Q" : "F" + std::to_string(p); }

template <class K>
K field_zero(std::uint64_t p) {
  if constexpr (std::is_same_v<K, Rational>) {
    return Rational(0);
  } else {
    return FpScalar(0, p);
  }
}

template <class K>
Poly<K> read_poly(const std::string& src, std::uint64_t p) {
  if constexpr (std::is_same_v<K, Rational>) {
    return parse_poly_q(src);
  } else {
    return parse_poly_fp(src, p);
  }
}

/// Runs `body` with the scalar type of the chosen field.
template <class Body>
Report with_field(std::uint64_t p, const Body& body) {
  if (p == 0) return body(Rational(0));
  return body(FpScalar(0, p));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

template <class K>
std::string product_form(const Factorization<K>& fac) {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : " * ") + s; };
  if (!is_one(fac.unit) || fac.factors.empty()) add(to_string(fac.unit));
  for (const auto& [g, m] : fac.factors) add("(" + to_string(g) + ")" + (m > 1 ? "^" + std::to_string(m) : ""));
  return out;
}

template <class K>
Json factors_json(const Factorization<K>& fac) {
  Json out = Json::array();
  for (const auto& [g, m] : fac.factors) out.push_back({{"factor", to_string(g)}, {"multiplicity", m}});
  return out;
}

template <class K>
SplittingField<K> build_splitting(const Poly<K>& f, const Settings& s) {
  SplittingLimits limits;
  limits.max_degree = s.max_degree;
  if constexpr (std::is_same_v<K, Rational>) {
    return splitting_field_q(f, limits);
  } else {
    return splitting_field_fp(f, limits);
  }
}

template <class K>
Json tower_json(const TowerPtr<K>& tower) {
  Json out = Json::array();
  for (const auto& [label, m] : tower->describe()) out.push_back({{"generator", label}, {"min_poly", m}});
  return out;
}

template <class K>
std::string tower_text(const TowerPtr<K>& tower) {
  std::string out;
  for (const auto& [label, m] : tower->describe()) out += "  " + label + ": root of " + m + "\n";
  return out;
}

std::string type_or_unidentified(const std::function<std::string()>& name, std::size_t order) {
  try {
    return name();
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::OrderCap) throw;
    return "unidentified group of order " + std::to_string(order);
  }
}

template <class K>
std::vector<std::string> generator_cycles(const GaloisGroup<K>& g, const Subgroup& h) {
  std::vector<std::string> out;
  const FiniteGroup sub = g.group().restrict_to(h);
  for (int i : sub.generators()) out.push_back(cycle_notation(g.element(h.members[static_cast<std::size_t>(i)]).root_perm));
  if (out.empty()) out.push_back("()");
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : sep) + s;
  return out;
}

// --- subcommands ----------------------------------------------------------

Report cmd_factor(const Settings& s, const std::string& src) {
  return with_field(parse_field(s.field), [&](auto zero) {
    using K = decltype(zero);
    const std::uint64_t p = characteristic(zero);
    const Poly<K> f = read_poly<K>(src, p);
    Factorization<K> fac;
    if constexpr (std::is_same_v<K, Rational>) {
      fac = factor_q(f);
    } else {
      fac = factor_fp(f);
    }
    Report r;
    r.text = to_string(f) + " = " + product_form(fac) + "\n";
    r.json = {{"input", to_string(f)}, {"field", field_name(p)}, {"unit", to_string(fac.unit)},
              {"factors", factors_json(fac)}};
    return r;
  });
}

Report cmd_irreducible(const Settings& s, const std::string& src) {
  const std::uint64_t p = parse_field(s.field);
  Report r;
  if (p == 0) {
    const QPoly f = parse_poly_q(src);
    const auto cert = is_irreducible_q(f);
    const bool irr = cert.verdict == Verdict::Irreducible;
    Json witness = {{"kind", witness_kind(cert.witness)}};
    std::string why;
    if (const auto* w = std::get_if<LowDegreeRule>(&cert.witness)) {
      witness["degree"] = w->degree;
      why = "degree " + std::to_string(w->degree);
    } else if (const auto* w = std::get_if<RationalRootWitness>(&cert.witness)) {
      witness["root"] = to_string(w->root);
      why = irr ? "no rational root" : "rational root " + to_string(w->root);
    } else if (const auto* w = std::get_if<EisensteinWitness>(&cert.witness)) {
      witness["prime"] = w->prime;
      witness["shift"] = w->shift;
      why = "Eisenstein at p = " + std::to_string(w->prime);
      if (w->shift != 0) why += " after t -> t + " + std::to_string(w->shift);
    } else if (const auto* w = std::get_if<ModPWitness>(&cert.witness)) {
      witness["prime"] = w->prime;
      why = "irreducible mod " + std::to_string(w->prime);
    } else if (const auto* w = std::get_if<FullFactorizationWitness>(&cert.witness)) {
      witness["factors"] = factors_json(w->factorization);
      why = "factorization " + product_form(w->factorization);
    }
    r.text = to_string(f) + ": " + (irr ? "irreducible" : "reducible") + " over Q (" + why + ")\n";
    r.json = {{"input", to_string(f)}, {"field", "Q"}, {"irreducible", irr}, {"witness", witness}};
    return r;
  }
  const FpPoly f = parse_poly_fp(src, p);
  const bool irr = is_irreducible_fp(f);
  const auto fac = factor_fp(f);
  r.text = to_string(f) + ": " + (irr ? "irreducible" : "reducible") + " over " + field_name(p) + " (factorization " +
           product_form(fac) + ")\n";
  r.json = {{"input", to_string(f)},
            {"field", field_name(p)},
            {"irreducible", irr},
            {"witness", {{"kind", "factorization"}, {"factors", factors_json(fac)}}}};
  return r;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

Report cmd_minpoly(const Settings& s, const std::string& src, const std::vector<std::string>& adjoin) {
  return with_field(parse_field(s.field), [&](auto zero) {
    using K = decltype(zero);
    const bool rational = characteristic(zero) == 0;
    TowerPtr<K> tower = Tower<K>::base(zero);
    auto leaf_for = [&](bool allow_t) {
      return [&tower, allow_t](const Expr& x) -> Poly<TowerElem<K>> {
        if (x.op == Expr::Op::Number) return Poly<TowerElem<K>>::constant(tower->from_base(convert_scalar(x.value, tower->zero())));
        if (allow_t && x.name == "t") return Poly<TowerElem<K>>::identity(tower->one());
        const auto labels = tower->labels();
        for (std::size_t i = 0; i < labels.size(); ++i) {
          if (labels[i] == x.name) return Poly<TowerElem<K>>::constant(tower->generator(static_cast<int>(i) + 1));
        }
        std::vector<std::string> expected = labels;
        if (allow_t) expected.insert(expected.begin(), "t");
        throw SyntaxError(x.position, expected, "'" + x.name + "'");
      };
    };
    auto divide = [](const Poly<TowerElem<K>>& a, const Poly<TowerElem<K>>& b, const Expr& at) {
      if (b.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero at position " + std::to_string(at.position));
      if (b.deg() != 0) throw SyntaxError(at.position, {"constant divisor"}, "'/' by a polynomial");
      return a * Poly<TowerElem<K>>::constant(inverse(b[0]));
    };
    for (const auto& spec : adjoin) {
      const auto eq = spec.find('=');
      if (eq == std::string::npos) throw SyntaxError(spec.size(), {"="}, "end of input");
      const std::string name = spec.substr(0, eq);
      if (!is_identifier(name) || name == "t") throw SyntaxError(0, {"generator name other than t"}, "'" + name + "'");
      const auto labels = tower->labels();
      if (std::find(labels.begin(), labels.end(), name) != labels.end()) usage("generator " + name + " adjoined twice");
      const Expr e = parse_expr(std::string_view(spec).substr(eq + 1));
      check_input_size(e, "t", rational);
      const auto m = evaluate<Poly<TowerElem<K>>>(e, leaf_for(true), divide);
      tower = adjoin_root(tower, m, name).tower;
    }
    const Expr e = parse_expr(src);
    check_input_size(e, "", rational);
    const auto value = evaluate<Poly<TowerElem<K>>>(e, leaf_for(false), divide);
    const TowerElem<K> x = value.is_zero() ? tower->zero_element() : value[0];
    const Poly<K> m = min_poly(x);
    Report r;
    r.text = "minimal polynomial of " + src + " over " + tower->base_name() + ": " + to_string(m) + " (degree " +
             std::to_string(m.deg()) + ", field degree " + std::to_string(tower->degree()) + ")\n";
    r.json = {{"element", src},   {"field", tower->base_name()},    {"tower", tower_json(tower)},
              {"min_poly", to_string(m)}, {"degree", m.deg()}, {"field_degree", tower->degree()}};
    return r;
  });
}

Report cmd_splitting(const Settings& s, const std::string& src) {
  return with_field(parse_field(s.field), [&](auto zero) {
    using K = decltype(zero);
    const std::uint64_t p = characteristic(zero);
    const Poly<K> f = read_poly<K>(src, p);
    const SplittingField<K> sf = build_splitting(f, s);
    Json roots = Json::array();
    std::vector<std::string> listed;
    for (std::size_t i = 0; i < sf.roots.size(); ++i) {
      roots.push_back({{"root", to_string(sf.roots[i])}, {"multiplicity", sf.multiplicities[i]}});
      listed.push_back(to_string(sf.roots[i]) + (sf.multiplicities[i] > 1 ? " (x" + std::to_string(sf.multiplicities[i]) + ")" : ""));
    }
    Report r;
    r.text = "splitting field of " + to_string(f) + " over " + field_name(p) + ": degree " +
             std::to_string(sf.degree()) + "\n" + tower_text(sf.field) + "roots: " + join(listed) + "\n";
    r.json = {{"input", to_string(f)}, {"field", field_name(p)}, {"degree", sf.degree()},
              {"tower", tower_json(sf.field)}, {"roots", roots}, {"verified", verify_splits(sf)}};
    return r;
  });
}

Report cmd_galois(const Settings& s, const std::string& src) {
  return with_field(parse_field(s.field), [&](auto zero) {
    using K = decltype(zero);
    const std::uint64_t p = characteristic(zero);
    const Poly<K> f = read_poly<K>(src, p);
    const GaloisGroup<K> g = automorphisms(build_splitting(f, s));
    const std::string type = type_or_unidentified([&] { return isomorphism_type(g); }, g.order());
    const auto gens = generator_cycles(g, g.group().whole());
    Json roots = Json::array();
    std::vector<std::string> listed;
    for (std::size_t i = 0; i < g.roots().size(); ++i) {
      roots.push_back(to_string(g.roots()[i]));
      listed.push_back(std::to_string(i + 1) + ": " + to_string(g.roots()[i]));
    }
    Json elements = Json::array();
    for (const auto& perm : g.permutations()) elements.push_back(cycle_notation(perm));
    const bool transitive = is_transitive(g), abelian = g.group().is_abelian(), solvable = g.group().is_solvable();
    Report r;
    r.text = "Galois group of " + to_string(f) + " over " + field_name(p) + ": order " + std::to_string(g.order()) +
             ", type " + type + "\ngenerators: " + join(gens) + "\nroots: " + join(listed) +
             "\ntransitive: " + yes_no(transitive) + ", abelian: " + yes_no(abelian) + ", solvable: " + yes_no(solvable) +
             "\n";
    r.json = {{"input", to_string(f)}, {"field", field_name(p)},   {"order", g.order()},
              {"type", type},          {"generators", gens},        {"roots", roots},
              {"elements", elements},  {"transitive", transitive}, {"abelian", abelian},
              {"solvable", solvable},  {"field_degree", g.tower()->degree()}};
    return r;
  });
}

int prime_factor_count(std::size_t n) {
  int count = 0;
  for (std::size_t q = 2; n > 1; ++q) {
    while (n % q == 0) {
      n /= q;
      ++count;
    }
  }
  return count;
}

Report cmd_correspondence(const Settings& s, const std::string& src) {
  return with_field(parse_field(s.field), [&](auto zero) {
    using K = decltype(zero);
    const std::uint64_t p = characteristic(zero);
    const Poly<K> f = read_poly<K>(src, p);
    const GaloisGroup<K> g = automorphisms(build_splitting(f, s));
    const auto report = verify_correspondence(g);
    Report r;
    r.text = "Galois correspondence for " + to_string(f) + " over " + field_name(p) + ": group of order " +
             std::to_string(g.order()) + ", " + std::to_string(report.entries.size()) + " subgroups\n";
    Json lattice = Json::array();
    Json quotients = Json::array();
    std::string quotient_text;
    for (const auto& e : report.entries) {
      const std::string type = type_or_unidentified([&] { return subgroup_type(g, e.subgroup); }, e.subgroup.order());
      const auto gens = generator_cycles(g, e.subgroup);
      const std::string indent(static_cast<std::size_t>(2 + 2 * prime_factor_count(e.subgroup.order())), ' ');
      r.text += indent + "order " + std::to_string(e.subgroup.order()) + " " + type + (e.normal ? " [normal]" : "") +
                " <" + join(gens) + ">: fixed field of degree " + std::to_string(e.fixed.dim()) + ", generated by " +
                to_string(e.fixed.primitive) + " with minimal polynomial " + to_string(e.fixed.primitive_min_poly) +
                "\n";
      lattice.push_back({{"order", e.subgroup.order()},
                         {"type", type},
                         {"normal", e.normal},
                         {"generators", gens},
                         {"members", e.subgroup.members},
                         {"fixed_field_degree", e.fixed.dim()},
                         {"primitive", to_string(e.fixed.primitive)},
                         {"primitive_min_poly", to_string(e.fixed.primitive_min_poly)},
                         {"gal_over_matches", e.gal_over_matches},
                         {"fixed_field_matches", e.fixed_field_matches},
                         {"degree_matches", e.degree_matches}});
      if (e.normal) {
        const QuotientReport q = quotient_check(e.fixed, g);
        const std::string qt = q.quotient_type;
        quotient_text += "  G/H for H of order " + std::to_string(e.subgroup.order()) + ": " + qt + ", restrictions to the fixed field: " +
                         q.restriction_type + (q.consistent() ? "" : " (MISMATCH)") + "\n";
        quotients.push_back({{"normal_subgroup_order", e.subgroup.order()},
                             {"members", e.subgroup.members},
                             {"quotient_order", q.quotient_order},
                             {"quotient_type", q.quotient_type},
                             {"restriction_order", q.restriction_order},
                             {"restriction_type", q.restriction_type},
                             {"consistent", q.consistent()}});
      }
    }
    r.text += "quotients by normal subgroups:\n" + quotient_text;
    r.text += "order reversing: " + yes_no(report.order_reversing) + ", mutually inverse: " + yes_no(report.ok()) + "\n";
    r.json = {{"input", to_string(f)},     {"field", field_name(p)},
              {"order", g.order()},        {"lattice", lattice},
              {"quotients", quotients},    {"order_reversing", report.order_reversing},
              {"mutually_inverse", report.ok()}};
    return r;
  });
}

Report cmd_solvable(const Settings& s, const std::string& src) {
  if (parse_field(s.field) != 0) usage("solvable works over Q only");
  const QPoly f = parse_poly_q(src);
  SplittingLimits limits;
  limits.max_degree = s.max_degree;
  const SolvabilityVerdict v = solvable_by_radicals(f, limits);
  Json data;
  std::string because;
  switch (v.evidence) {
    case Evidence::SpCriterion:
      data = {{"prime", v.prime}, {"real_roots", v.real_roots}, {"group_type", v.group_type}};
      because = "irreducible of prime degree " + std::to_string(v.prime) + " with " + std::to_string(v.real_roots) +
                " real roots";
      break;
    case Evidence::DegreeBound:
      data = {{"degree", f.deg()}};
      because = "degree " + std::to_string(f.deg()) + " <= 4, so the group lies in S4";
      break;
    case Evidence::GroupComputed:
      data = {{"group_type", v.group_type}, {"group_order", v.group_order}, {"derived_series", v.derived_series}};
      because = "derived series orders " + join([&] {
                  std::vector<std::string> o;
                  for (auto d : v.derived_series) o.push_back(std::to_string(d));
                  return o;
                }(), " > ");
      break;
  }
  Json axioms = Json::array();
  if (v.solvable) axioms.push_back("a solvable Galois group implies solvability by radicals");
  Report r;
  const std::string group = v.group_type.empty() ? "" : " (Galois group " + v.group_type + ")";
  r.text = to_string(f) + ": " + (v.solvable ? "solvable by radicals" : "NOT solvable by radicals") + group +
           "\nevidence: " + evidence_name(v.evidence) + ", " + because + "\n";
  r.json = {{"input", to_string(f)},
            {"verdict", v.solvable ? "SolvableByRadicals" : "NotSolvableByRadicals"},
            {"evidence_kind", evidence_name(v.evidence)},
            {"evidence_data", data},
            {"axioms", axioms}};
  return r;
}

std::string verdict_name(Constructibility c) {
  return c == Constructibility::NotConstructible ? "NotConstructible" : "NecessaryConditionHolds";
}

Json verdict_json(const ConstructibilityVerdict& v) {
  return {{"target", v.target}, {"min_poly", to_string(v.min_poly)}, {"degree", v.degree}, {"verdict", verdict_name(v.verdict)}};
}

Report cmd_construct_degree(const Settings& s, const std::string& src) {
  if (parse_field(s.field) != 0) usage("construct works over Q only");
  const auto v = constructible_degree_check(parse_poly_q(src), src);
  Report r;
  r.text = src + ": degree " + std::to_string(v.degree) + ", " +
           (v.verdict == Constructibility::NotConstructible ? "not constructible (degree is not a power of 2)"
                                                            : "necessary condition holds (degree is a power of 2)") +
           "\n";
  r.json = verdict_json(v);
  return r;
}

Report cmd_construct_ngon(std::uint64_t n) {
  if (n < 3) usage("a polygon needs at least 3 sides");
  const bool ok = ngon_constructible(n);
  Report r;
  r.text = "regular " + std::to_string(n) + "-gon: " + (ok ? "constructible" : "not constructible") +
           " (odd part " + (ok ? "is" : "is not") + " a product of distinct Fermat primes)\n";
  r.json = {{"n", n}, {"constructible", ok}};
  return r;
}

Report cmd_construct_classic() {
  Report r;
  r.json = Json::array();
  for (const auto& c : classic_problems()) {
    Json item = {{"problem", c.name}, {"impossible", c.impossible}};
    item["degree_check"] = c.degree_check ? verdict_json(*c.degree_check) : Json(nullptr);
    item["axioms"] = c.axiom.empty() ? Json::array() : Json::array({c.axiom});
    r.json.push_back(item);
    r.text += c.name + ": " + (c.impossible ? "impossible" : "not ruled out");
    if (c.degree_check) {
      r.text += " (" + c.degree_check->target + " has degree " + std::to_string(c.degree_check->degree) +
                ", minimal polynomial " + to_string(c.degree_check->min_poly) + ")";
    }
    if (!c.axiom.empty()) r.text += " (assuming " + c.axiom + ")";
    r.text += "\n";
  }
  return r;
}

Report cmd_gf(std::uint64_t p, unsigned n, bool want_subfields, bool want_generator) {
  const GF field = gf(p, n);
  const unsigned frob = frobenius_order(field);
  Report r;
  r.text = "GF(" + std::to_string(p) + "^" + std::to_string(n) + ") = F" + std::to_string(p) + "[" +
           (n == 1 ? std::string("t") : field.tower->label()) + "]/(" + to_string(field.modulus) + "), " +
           field.size().get_str() + " elements\nfrobenius order: " + std::to_string(frob) + "\n";
  Json orders = nullptr, generator = nullptr;
  if (want_subfields) {
    orders = Json::array();
    std::vector<std::string> listed;
    for (const auto& sub : subfields(field)) {
      orders.push_back(sub.order().get_str());
      listed.push_back(sub.order().get_str());
    }
    r.text += "subfield orders: " + join(listed) + "\n";
  }
  if (want_generator) {
    const GFElem g = multiplicative_generator(field);
    generator = to_string(g);
    r.text += "multiplicative generator: " + to_string(g) + " (order " + multiplicative_order(g).get_str() + ")\n";
  }
  r.json = {{"p", p},
            {"n", n},
            {"modulus", to_string(field.modulus)},
            {"subfield_orders", orders},
            {"generator", generator},
            {"frobenius_order", frob}};
  return r;
}

void print_error(const Error& e, const Settings& s, std::ostream& out, std::ostream& err) {
  err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
  if (!s.json) return;
  Json j = {{"kind", std::string(error_kind_name(e.kind()))}, {"message", e.what()}, {"exit_code", exit_code(e.kind())}};
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    j["position"] = se->position();
    j["expected"] = se->expected();
  }
  out << Json{{"error", j}}.dump(2) << "\n";
}

}  // namespace

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
      return 2;
    case ErrorKind::DegreeCap:
    case ErrorKind::OrderCap:
    case ErrorKind::Budget:
    case ErrorKind::SearchExhausted:
      return 3;
    case ErrorKind::InternalInvariant:
      return 4;
    default:
      return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Exact Galois theory over Q and finite fields"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--field", s.field, "Q or F<p> for a prime p");
  app.add_flag("--json", s.json, "Print one JSON document");
  app.add_option("--max-degree", s.max_degree, "Cap on splitting field degree")->check(CLI::PositiveNumber);
  app.add_option("--seed-order", s.seed_order, "Root adjunction order")->check(CLI::IsMember({"canonical"}));

  std::string poly;
  std::vector<std::string> adjoin;
  std::uint64_t gf_p = 0, ngon = 0;
  unsigned gf_n = 0;
  bool want_subfields = false, want_generator = false;

  auto* factor = app.add_subcommand("factor", "Factor into monic irreducibles");
  auto* irreducible = app.add_subcommand("irreducible", "Irreducibility with a certificate");
  auto* minpoly = app.add_subcommand("minpoly", "Minimal polynomial of an element of a tower");
  auto* splitting = app.add_subcommand("splitting-field", "Splitting field as an explicit tower");
  auto* galois = app.add_subcommand("galois", "Galois group of the splitting field");
  auto* correspondence = app.add_subcommand("correspondence", "Subgroups, fixed fields and quotients");
  auto* solvable = app.add_subcommand("solvable", "Solvability by radicals");
  for (auto* sub : {factor, irreducible, minpoly, splitting, galois, correspondence, solvable}) {
    sub->add_option("poly", poly, "Polynomial in t")->required();
  }
  minpoly->add_option("--adjoin", adjoin, "name=poly, adjoined in order");
  auto* construct = app.add_subcommand("construct", "Ruler-and-compass verdicts");
  construct->require_subcommand(1);
  auto* classic = construct->add_subcommand("classic", "Trisection, duplication, circle squaring");
  auto* ngon_cmd = construct->add_subcommand("ngon", "Regular polygon by the Fermat prime rule");
  ngon_cmd->add_option("n", ngon, "Number of sides")->required();
  auto* degree_cmd = construct->add_subcommand("degree", "Degree test on a minimal polynomial");
  degree_cmd->add_option("poly", poly, "Minimal polynomial of the target")->required();
  auto* gf_cmd = app.add_subcommand("gf", "Finite field GF(p^n)");
  gf_cmd->add_option("p", gf_p, "Prime")->required();
  gf_cmd->add_option("n", gf_n, "Degree")->required()->check(CLI::PositiveNumber);
  gf_cmd->add_flag("--subfields", want_subfields, "List subfield orders");
  gf_cmd->add_flag("--generator", want_generator, "Find a multiplicative generator");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    if (s.json) {
      Json j = {{"kind", "ParseError"}, {"message", e.what()}, {"exit_code", 2}};
      out << Json{{"error", j}}.dump(2) << "\n";
    }
    return 2;
  }

  try {
    Report r;
    if (factor->parsed()) r = cmd_factor(s, poly);
    else if (irreducible->parsed()) r = cmd_irreducible(s, poly);
    else if (minpoly->parsed()) r = cmd_minpoly(s, poly, adjoin);
    else if (splitting->parsed()) r = cmd_splitting(s, poly);
    else if (galois->parsed()) r = cmd_galois(s, poly);
    else if (correspondence->parsed()) r = cmd_correspondence(s, poly);
    else if (solvable->parsed()) r = cmd_solvable(s, poly);
    else if (classic->parsed()) r = cmd_construct_classic();
    else if (ngon_cmd->parsed()) r = cmd_construct_ngon(ngon);
    else if (degree_cmd->parsed()) r = cmd_construct_degree(s, poly);
    else if (gf_cmd->parsed()) {
      if (!is_prime(gf_p)) fail(ErrorKind::NotPrime, std::to_string(gf_p) + " is not prime");
      if (gf_p >= (1ULL << 32)) usage("field characteristic must be below 2^32");
      r = cmd_gf(gf_p, gf_n, want_subfields, want_generator);
    }
    if (s.json) {
      out << r.json.dump(2) << "\n";
    } else {
      out << r.text;
    }
    return 0;
  } catch (const Error& e) {
    print_error(e, s, out, err);
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    const Error wrapped(ErrorKind::InternalInvariant, e.what());
    print_error(wrapped, s, out, err);
    return 4;
  }
}

}  // namespace galois
