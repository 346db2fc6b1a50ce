#include <CLI11.hpp>
#include <json.hpp>

#include <qorder/classify.hpp>
#include <qorder/freeness.hpp>
#include <qorder/json_util.hpp>
#include <qorder/quadratic.hpp>
#include <qorder/quaternion.hpp>
#include <qorder/unit_literal.hpp>
#include <qorder/units.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace qorder;
using nlohmann::ordered_json;

namespace {

// Catalog of group specs the classification theorem covers; default for table.
const std::vector<std::string> kDefaultGroups = {
    "C2", "C3", "C4", "C5", "C6", "C8", "A[2,2]", "A[2,4]", "A[6]", "K8"};

Basis parse_basis(const std::string& name) {
  if (name == "1") return Basis::One;
  if (name == "i") return Basis::I;
  if (name == "j") return Basis::J;
  if (name == "k") return Basis::K;
  throw std::invalid_argument("basis must be one of 1, i, j, k: got '" + name + "'");
}

int parse_norm(const std::string& text) {
  if (text == "+1" || text == "1") return 1;
  if (text == "-1") return -1;
  throw std::invalid_argument("norm must be +1 or -1: got '" + text + "'");
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string provenance_text(const UnitRecord& rec) {
  std::ostringstream out;
  if (const auto* p = std::get_if<TwoUnitProv>(&rec.provenance)) {
    out << "eps = " << p->eps.p.str() << " + " << p->eps.m.str()
        << " sqrt(d), N(eps) = " << p->eps.norm << ", xi = "
        << basis_name(p->xi) << ", psi = " << basis_name(p->psi);
  } else if (const auto* p = std::get_if<PellUnitProv>(&rec.provenance)) {
    out << "pell (x, y) = (" << p->sol.x.str() << ", " << p->sol.y.str()
        << "), " << (p->sign == PellSign::Upper ? "upper" : "lower") << " sign";
  } else if (const auto* p = std::get_if<PellThreeProv>(&rec.provenance)) {
    out << "(p, m) = (" << p->p.str() << ", " << p->m.str() << "), bases ("
        << basis_name(p->xi) << ", " << basis_name(p->psi) << ", "
        << basis_name(p->phi) << ")";
  } else if (const auto* p = std::get_if<GaussProv>(&rec.provenance)) {
    out << "m = " << p->m.str() << ", squares (" << p->squares.p.str() << ", "
        << p->squares.q.str() << ", " << p->squares.r.str() << ")";
  } else if (const auto* p = std::get_if<SGenProv>(&rec.provenance)) {
    out << "(m, p) = (" << p->m.str() << ", " << p->p.str() << ")";
  } else {
    out << "ad hoc";
  }
  return out.str();
}

void print_unit_record(const UnitRecord& rec, bool json) {
  if (json) {
    emit(unit_record_json(rec));
    return;
  }
  std::cout << format_unit(rec.unit) << "\n"
            << "family: " << family_name(rec.family) << "\n"
            << "norm: " << rec.norm << "\n"
            << "provenance: " << provenance_text(rec) << "\n";
}

std::string verdict_text(const HyperbolicVerdict& v) {
  std::ostringstream out;
  out << "d = " << v.d.str() << ", group " << v.group.str() << ": "
      << (v.hyperbolic ? "hyperbolic" : "not hyperbolic")
      << " (clause " << clause_name(v.clause);
  if (v.clause_exponent) out << ", exponent divides " << *v.clause_exponent;
  if (v.clause_d_condition) out << ", " << *v.clause_d_condition;
  if (v.stufe)
    out << ", stufe " << *v.stufe;
  else
    out << ", stufe inf";
  if (v.boundary) out << ", boundary " << *v.boundary;
  if (v.ends) out << ", ends " << *v.ends;
  out << ")";
  return out.str();
}

std::vector<UnitRecord> wrap_literals(const std::vector<std::string>& texts,
                                      const SquareFreeD& d) {
  std::vector<UnitRecord> recs;
  recs.reserve(texts.size());
  for (const std::string& t : texts) recs.push_back(wrap_adhoc_unit(parse_unit(t, d)));
  return recs;
}

// Shared tail of free-pair and free-family: search, cross-check, report.
int run_freeness(const std::vector<UnitRecord>& units, long long max_m,
                 int max_len, double tau, bool json) {
  std::optional<SchottkyCertificate> cert = schottky_certificate(units, max_m, tau);
  if (!cert) {
    if (json) {
      ordered_json doc;
      doc["d"] = json_int(units.front().unit.d().value());
      doc["found"] = false;
      doc["max_m"] = max_m;
      doc["tau"] = tau;
      doc["note"] = "no certificate up to max_m; not a refutation of freeness";
      emit(doc);
    } else {
      std::cout << "no certificate up to max_m = " << max_m
                << " (not a refutation of freeness)\n";
    }
    return 1;
  }
  std::optional<std::string> rel = relation_search(units, cert->m, max_len);
  CrossCheck cross{max_len, rel ? 1 : 0};
  if (json) {
    emit(certificate_json(*cert, cross));
  } else {
    std::cout << "certificate: m = " << cert->m << ", min_gap = " << cert->min_gap
              << ", tau = " << cert->tau << "\n";
    auto w = schottky_conjugation();
    std::cout << "circles (after conjugation by [[" << w[0][0] << ", " << w[0][1]
              << "], [" << w[1][0] << ", " << w[1][1] << "]]):\n";
    for (std::size_t t = 0; t < units.size(); ++t)
      for (int sign = 0; sign < 2; ++sign) {
        const IsometricCircle& c = cert->circles[2 * t + sign];
        std::cout << "  " << static_cast<char>('a' + t)
                  << (sign == 0 ? "^+m" : "^-m") << ": center ("
                  << c.center.real() << ", " << c.center.imag() << "), radius "
                  << c.radius << "\n";
      }
    if (rel)
      std::cout << "relation search: FOUND " << *rel << "\n";
    else
      std::cout << "relation search: none up to length " << max_len << "\n";
  }
  if (rel) {
    std::cerr << "error: certificate and exact relation disagree; this is a bug\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"units of quaternion orders over imaginary quadratic fields: "
               "constructions, hyperbolicity classification, freeness certificates"};
  app.require_subcommand(1);
  long long seed = 0;
  app.add_option("--seed", seed,
                 "accepted for script compatibility; every command is deterministic")
      ->expected(1);

  int rc = 0;

  // classify
  {
    auto* sub = app.add_subcommand("classify",
                                   "decide hyperbolicity of the unit group of RG");
    auto d = std::make_shared<long long>(0);
    auto group = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--group", *group, "group spec: 1, C<n>, A[d1,d2,...], K8, or a label")
        ->required();
    sub->add_flag("--json", *json, "emit the verdict document");
    sub->callback([=]() {
      HyperbolicVerdict v = classify(SquareFreeD(Int(*d)), GroupSpec::parse(*group));
      if (*json)
        emit(verdict_json(v));
      else
        std::cout << verdict_text(v) << "\n";
    });
  }

  // table
  {
    auto* sub = app.add_subcommand("table",
                                   "classification verdicts over a range of d");
    auto dmin = std::make_shared<long long>(0);
    auto dmax = std::make_shared<long long>(0);
    auto groups = std::make_shared<std::vector<std::string>>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d-min", *dmin, "lower end of the d range")->required();
    sub->add_option("--d-max", *dmax, "upper end of the d range")->required();
    sub->add_option("--group", *groups,
                    "group spec, repeatable; defaults to the classification catalog");
    sub->add_flag("--json", *json, "emit an array of verdict documents");
    sub->callback([=]() {
      std::vector<GroupSpec> specs;
      const std::vector<std::string>& names =
          groups->empty() ? kDefaultGroups : *groups;
      for (const std::string& g : names) specs.push_back(GroupSpec::parse(g));
      std::vector<HyperbolicVerdict> rows =
          verdict_table(Int(*dmin), Int(*dmax), specs);
      if (*json) {
        ordered_json doc = ordered_json::array();
        for (const HyperbolicVerdict& v : rows) doc.push_back(verdict_json(v));
        emit(doc);
      } else {
        for (const HyperbolicVerdict& v : rows) std::cout << verdict_text(v) << "\n";
      }
    });
  }

  // fundamental-unit
  {
    auto* sub = app.add_subcommand("fundamental-unit",
                                   "fundamental solution of x^2 - d y^2 = 1");
    auto d = std::make_shared<long long>(0);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "positive nonsquare")->required();
    sub->add_flag("--json", *json, "emit the solution document");
    sub->callback([=]() {
      PellSolution sol = fundamental_pell(Int(*d));
      std::optional<PellSolution> neg = negative_pell(Int(*d));
      if (*json) {
        ordered_json doc;
        doc["d"] = *d;
        doc["x"] = json_int(sol.x);
        doc["y"] = json_int(sol.y);
        doc["norm"] = sol.norm;
        if (neg)
          doc["negative"] = {{"x", json_int(neg->x)}, {"y", json_int(neg->y)}};
        else
          doc["negative"] = nullptr;
        emit(doc);
      } else {
        std::cout << "x^2 - " << *d << " y^2 = 1: (x, y) = (" << sol.x.str()
                  << ", " << sol.y.str() << ")\n";
        if (neg)
          std::cout << "x^2 - " << *d << " y^2 = -1: (x, y) = (" << neg->x.str()
                    << ", " << neg->y.str() << ")\n";
        else
          std::cout << "x^2 - " << *d << " y^2 = -1: no solution\n";
      }
    });
  }

  // pell-unit
  {
    auto* sub = app.add_subcommand(
        "pell-unit", "norm 1 unit from the fundamental Pell solution, d = 7 (mod 8)");
    auto d = std::make_shared<long long>(0);
    auto sign = std::make_shared<std::string>("upper");
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free, d = 7 (mod 8)")->required();
    sub->add_option("--sign", *sign, "upper or lower j/k placement")
        ->check(CLI::IsMember({"upper", "lower"}));
    sub->add_flag("--json", *json, "emit the unit record");
    sub->callback([=]() {
      UnitRecord rec = pell_unit(SquareFreeD(Int(*d)), fundamental_pell(Int(*d)),
                                 *sign == "upper" ? PellSign::Upper : PellSign::Lower);
      print_unit_record(rec, *json);
    });
  }

  // two-unit
  {
    auto* sub = app.add_subcommand(
        "two-unit", "two-coefficient unit from eps = p + m sqrt(d), p^2 - d m^2 = +-1");
    auto d = std::make_shared<long long>(0);
    auto p = std::make_shared<std::string>();
    auto m = std::make_shared<std::string>();
    auto xi = std::make_shared<std::string>("i");
    auto psi = std::make_shared<std::string>("1");
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free, d = 2 or 3 (mod 4)")->required();
    sub->add_option("--p", *p, "rational part of eps; default: fundamental solution");
    sub->add_option("--m", *m, "radical coefficient of eps; default: fundamental solution");
    sub->add_option("--xi", *xi, "basis carrying m sqrt(-d)")->check(CLI::IsMember({"1", "i", "j", "k"}));
    sub->add_option("--psi", *psi, "basis carrying p")->check(CLI::IsMember({"1", "i", "j", "k"}));
    sub->add_flag("--json", *json, "emit the unit record");
    sub->callback([=]() {
      BasisPair pair{parse_basis(*xi), parse_basis(*psi)};
      SquareFreeD sd{Int(*d)};
      if (p->empty() != m->empty())
        throw std::invalid_argument("--p and --m must be given together");
      UnitRecord rec = p->empty()
                           ? two_unit(sd, fundamental_pell(Int(*d)), pair)
                           : two_unit_signed(sd, Int(*p), Int(*m), pair);
      print_unit_record(rec, *json);
    });
  }

  // three-unit
  {
    auto* sub = app.add_subcommand(
        "three-unit", "three-coefficient unit from (2p - 1)^2 - 2d m^2 = 1");
    auto d = std::make_shared<long long>(0);
    auto p = std::make_shared<std::string>();
    auto m = std::make_shared<std::string>();
    auto xi = std::make_shared<std::string>("1");
    auto psi = std::make_shared<std::string>("i");
    auto phi = std::make_shared<std::string>("j");
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free, d = 3 (mod 4)")->required();
    sub->add_option("--p", *p, "solution p; default from the fundamental solution of X^2 - 2d Y^2 = 1");
    sub->add_option("--m", *m, "solution m; default as for --p");
    sub->add_option("--xi", *xi, "basis carrying m sqrt(-d)")->check(CLI::IsMember({"1", "i", "j", "k"}));
    sub->add_option("--psi", *psi, "basis carrying p")->check(CLI::IsMember({"1", "i", "j", "k"}));
    sub->add_option("--phi", *phi, "basis carrying 1 - p")->check(CLI::IsMember({"1", "i", "j", "k"}));
    sub->add_flag("--json", *json, "emit the unit record");
    sub->callback([=]() {
      SquareFreeD sd{Int(*d)};
      BasisTriple triple{parse_basis(*xi), parse_basis(*psi), parse_basis(*phi)};
      if (p->empty() != m->empty())
        throw std::invalid_argument("--p and --m must be given together");
      Int pv, mv;
      if (p->empty()) {
        PellSolution f = fundamental_pell(Int(2 * *d));
        pv = (f.x + 1) / 2;
        mv = f.y;
      } else {
        pv = Int(*p);
        mv = Int(*m);
      }
      print_unit_record(pell_three_unit(sd, pv, mv, triple), *json);
    });
  }

  // gauss-unit
  {
    auto* sub = app.add_subcommand(
        "gauss-unit", "unit m sqrt(-d) + p i + q j + r k via three squares");
    auto d = std::make_shared<long long>(0);
    auto m = std::make_shared<std::string>();
    auto norm = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free, d = 7 (mod 8)")->required();
    sub->add_option("--m", *m, "radical coefficient")->required();
    sub->add_option("--norm", *norm, "target norm, +1 or -1")->required();
    sub->add_flag("--json", *json, "emit the unit record");
    sub->callback([=]() {
      print_unit_record(gauss_unit(SquareFreeD(Int(*d)), Int(*m), parse_norm(*norm)),
                        *json);
    });
  }

  // s-units
  {
    auto* sub = app.add_subcommand(
        "s-units", "all s-generator units from m^2 + 2p^2 = 2 + d");
    auto d = std::make_shared<long long>(0);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free, d = 7 (mod 8)")->required();
    sub->add_flag("--json", *json, "emit an array of unit records");
    sub->callback([=]() {
      std::vector<UnitRecord> recs = s_generator_units(SquareFreeD(Int(*d)));
      if (*json) {
        ordered_json doc = ordered_json::array();
        for (const UnitRecord& rec : recs) doc.push_back(unit_record_json(rec));
        emit(doc);
      } else {
        for (const UnitRecord& rec : recs)
          std::cout << format_unit(rec.unit) << "  from " << provenance_text(rec)
                    << "\n";
      }
    });
  }

  // verify
  {
    auto* sub = app.add_subcommand("verify",
                                   "check a unit literal against the order H(R)");
    auto d = std::make_shared<long long>(0);
    auto text = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--unit", *text, "unit literal, e.g. \"6s+15i+5j+1k\"")->required();
    sub->add_flag("--json", *json, "emit the verification document");
    sub->callback([=]() {
      SquareFreeD sd{Int(*d)};
      Quaternion u = parse_unit(*text, sd);
      bool in_order = u.in_order();
      bool is_unit = in_order && u.is_unit_of_order();
      ordered_json doc;
      doc["d"] = *d;
      doc["unit"] = *text;
      doc["in_order"] = in_order;
      doc["is_unit"] = is_unit;
      if (!is_unit) {
        doc["eta"] = u.norm().str();
        if (*json)
          emit(doc);
        else if (!in_order)
          std::cout << "not in H(R): coefficients are not integral\n";
        else
          std::cout << "in H(R) but not a unit: eta = " << u.norm().str() << "\n";
        throw std::domain_error("'" + *text + "' is not a unit of H(R) for d = " +
                                std::to_string(*d));
      }
      int norm = u.norm().equals_int(Int(1)) ? 1 : -1;
      std::vector<Basis> sup = u.support();
      TorsionVerdict torsion = torsion_order(u);
      std::string order_text =
          torsion.kind == TorsionVerdict::Kind::Infinite  ? "infinite order"
          : torsion.kind == TorsionVerdict::Kind::Unknown ? "order unknown"
              : "finite order " + std::to_string(torsion.order);
      if (*json) {
        doc["norm"] = norm;
        doc["support"] = ordered_json::array();
        for (Basis b : sup) doc["support"].push_back(basis_name(b));
        doc["torsion"] = {{"kind", torsion.kind == TorsionVerdict::Kind::Infinite
                                       ? "infinite"
                                       : torsion.kind == TorsionVerdict::Kind::Unknown
                                             ? "unknown"
                                             : "finite"},
                          {"order", torsion.kind == TorsionVerdict::Kind::FiniteOrder
                                        ? ordered_json(torsion.order)
                                        : ordered_json(nullptr)},
                          {"justification", torsion.justification}};
        emit(doc);
      } else {
        std::cout << "unit of H(R), norm " << norm << ", support {";
        for (std::size_t t = 0; t < sup.size(); ++t)
          std::cout << (t ? "," : "") << basis_name(sup[t]);
        std::cout << "}, " << order_text << "\n";
      }
    });
  }

  // torsion
  {
    auto* sub = app.add_subcommand("torsion", "order of a unit of H(R)");
    auto d = std::make_shared<long long>(0);
    auto text = std::make_shared<std::string>();
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--unit", *text, "unit literal")->required();
    sub->add_flag("--json", *json, "emit the torsion document");
    sub->callback([=]() {
      SquareFreeD sd{Int(*d)};
      Quaternion u = parse_unit(*text, sd);
      TorsionVerdict v = torsion_order(u);
      if (*json) {
        ordered_json doc;
        doc["d"] = *d;
        doc["unit"] = format_unit(u);
        doc["kind"] = v.kind == TorsionVerdict::Kind::Infinite  ? "infinite"
                      : v.kind == TorsionVerdict::Kind::Unknown ? "unknown"
                                                                : "finite";
        doc["order"] = v.kind == TorsionVerdict::Kind::FiniteOrder
                           ? ordered_json(v.order)
                           : ordered_json(nullptr);
        doc["justification"] = v.justification;
        emit(doc);
      } else {
        if (v.kind == TorsionVerdict::Kind::FiniteOrder)
          std::cout << "finite order " << v.order;
        else if (v.kind == TorsionVerdict::Kind::Infinite)
          std::cout << "infinite order";
        else
          std::cout << "order unknown";
        std::cout << " (" << v.justification << ")\n";
      }
    });
  }

  // zero-divisor
  {
    auto* sub = app.add_subcommand(
        "zero-divisor", "search H(R) for a nonzero element of norm 0");
    auto d = std::make_shared<long long>(0);
    auto bound = std::make_shared<long long>(5);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--height-bound", *bound, "coordinate bound for the search");
    sub->add_flag("--json", *json, "emit the search document");
    sub->callback([=]() {
      SquareFreeD sd{Int(*d)};
      std::optional<Quaternion> z = find_zero_divisor(sd, static_cast<long>(*bound));
      bool division = is_division(sd);
      if (*json) {
        ordered_json doc;
        doc["d"] = *d;
        doc["height_bound"] = *bound;
        doc["found"] = z.has_value();
        doc["element"] = z ? ordered_json(format_unit(*z)) : ordered_json(nullptr);
        doc["division_ring"] = division;
        emit(doc);
      } else if (z) {
        std::cout << format_unit(*z) << "  (eta = 0)\n";
      } else if (division) {
        std::cout << "none: H(R) is a division ring (d = 7 mod 8)\n";
      } else {
        std::cout << "none up to height " << *bound << "\n";
      }
      if (!z)
        throw std::domain_error("no zero divisor found for d = " + std::to_string(*d) +
                                " up to height " + std::to_string(*bound));
    });
  }

  // free-pair
  {
    auto* sub = app.add_subcommand(
        "free-pair", "Schottky certificate that powers of two units generate a free group");
    auto d = std::make_shared<long long>(0);
    auto u = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto max_m = std::make_shared<long long>(64);
    auto max_len = std::make_shared<int>(8);
    auto tau = std::make_shared<double>(1e-6);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--u", *u, "first unit literal")->required();
    sub->add_option("--v", *v, "second unit literal")->required();
    sub->add_option("--max-m", *max_m, "largest power to try");
    sub->add_option("--max-len", *max_len, "relation search depth for the cross-check");
    sub->add_option("--tau", *tau, "minimal admissible circle gap");
    sub->add_flag("--json", *json, "emit the certificate document");
    sub->callback([=, &rc]() {
      SquareFreeD sd{Int(*d)};
      rc = run_freeness(wrap_literals({*u, *v}, sd), *max_m, *max_len, *tau, *json);
    });
  }

  // free-family
  {
    auto* sub = app.add_subcommand(
        "free-family", "Schottky certificate for a family of units");
    auto d = std::make_shared<long long>(0);
    auto units = std::make_shared<std::vector<std::string>>();
    auto max_m = std::make_shared<long long>(64);
    auto max_len = std::make_shared<int>(8);
    auto tau = std::make_shared<double>(1e-6);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--unit", *units, "unit literal, repeatable")->required();
    sub->add_option("--max-m", *max_m, "largest power to try");
    sub->add_option("--max-len", *max_len, "relation search depth for the cross-check");
    sub->add_option("--tau", *tau, "minimal admissible circle gap");
    sub->add_flag("--json", *json, "emit the certificate document");
    sub->callback([=, &rc]() {
      SquareFreeD sd{Int(*d)};
      rc = run_freeness(wrap_literals(*units, sd), *max_m, *max_len, *tau, *json);
    });
  }

  // relation-check
  {
    auto* sub = app.add_subcommand(
        "relation-check", "exhaustive exact search for relations among unit powers");
    auto d = std::make_shared<long long>(0);
    auto units = std::make_shared<std::vector<std::string>>();
    auto m = std::make_shared<long long>(1);
    auto max_len = std::make_shared<int>(8);
    auto json = std::make_shared<bool>(false);
    sub->add_option("--d", *d, "square-free field parameter")->required();
    sub->add_option("--unit", *units, "unit literal, repeatable")->required();
    sub->add_option("--m", *m, "power applied to every generator");
    sub->add_option("--max-len", *max_len, "largest word length to try");
    sub->add_flag("--json", *json, "emit the search document");
    sub->callback([=]() {
      SquareFreeD sd{Int(*d)};
      std::vector<UnitRecord> recs = wrap_literals(*units, sd);
      std::optional<std::string> rel = relation_search(recs, *m, *max_len);
      if (*json) {
        ordered_json doc;
        doc["d"] = *d;
        doc["m"] = *m;
        doc["max_len"] = *max_len;
        doc["letters"] = 2 * recs.size();
        doc["relation"] = rel ? ordered_json(*rel) : ordered_json(nullptr);
        doc["length"] = rel ? ordered_json(rel->size()) : ordered_json(nullptr);
        emit(doc);
      } else if (rel) {
        std::cout << "relation: " << *rel << " (length " << rel->size() << ")\n";
      } else {
        std::cout << "no relation of length <= " << *max_len << " at m = " << *m
                  << "\n";
      }
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
