#include <qorder/classify.hpp>

#include <qorder/json_util.hpp>
#include <qorder/quaternion.hpp>

#include <sstream>

namespace qorder {

GroupSpec::GroupSpec(GroupKind kind, std::vector<Int> factors, std::string label)
    : kind_(kind), factors_(std::move(factors)), label_(std::move(label)) {}

GroupSpec GroupSpec::trivial() { return GroupSpec(GroupKind::Trivial, {}, {}); }

GroupSpec GroupSpec::cyclic(const Int& n) {
  if (n < 2) throw std::invalid_argument("GroupSpec: cyclic order must be >= 2");
  return GroupSpec(GroupKind::Cyclic, {n}, {});
}

GroupSpec GroupSpec::abelian(const std::vector<Int>& fs) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i] < 2)
      throw std::invalid_argument("GroupSpec: invariant factors must be >= 2");
    if (i + 1 < fs.size() && fs[i + 1] % fs[i] != 0)
      throw std::invalid_argument(
          "GroupSpec: each invariant factor must divide the next");
  }
  return GroupSpec(GroupKind::Abelian, fs, {});
}

GroupSpec GroupSpec::k8() { return GroupSpec(GroupKind::K8, {}, {}); }

GroupSpec GroupSpec::other(const std::string& label) {
  if (label.empty())
    throw std::invalid_argument("GroupSpec: label must be nonempty");
  return GroupSpec(GroupKind::OtherNonAbelian, {}, label);
}

GroupSpec GroupSpec::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("GroupSpec: empty spec");
  if (text == "1") return trivial();
  if (text == "K8") return k8();
  auto all_digits = [](const std::string& s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  if (text.size() >= 2 && text[0] == 'C' && all_digits(text.substr(1)))
    return cyclic(Int(text.substr(1)));
  if (text.size() >= 3 && text.rfind("A[", 0) == 0 && text.back() == ']') {
    std::string body = text.substr(2, text.size() - 3);
    std::vector<Int> fs;
    if (!body.empty()) {
      std::istringstream in(body);
      std::string piece;
      while (std::getline(in, piece, ',')) {
        if (!all_digits(piece))
          throw std::invalid_argument("GroupSpec: bad invariant factor '" +
                                      piece + "'");
        fs.push_back(Int(piece));
      }
    }
    return abelian(fs);
  }
  // C or A shapes that failed above are malformed, not labels
  if (text[0] == 'C' || text.rfind("A[", 0) == 0)
    throw std::invalid_argument("GroupSpec: malformed spec '" + text + "'");
  return other(text);
}

bool GroupSpec::is_abelian() const {
  return kind_ == GroupKind::Trivial || kind_ == GroupKind::Cyclic ||
         kind_ == GroupKind::Abelian;
}

GroupSpec GroupSpec::normalized() const {
  if (kind_ == GroupKind::Abelian) {
    if (factors_.empty()) return trivial();
    if (factors_.size() == 1) return cyclic(factors_[0]);
  }
  return *this;
}

Int GroupSpec::exponent() const {
  if (!is_abelian())
    throw std::domain_error("exponent: defined for abelian specs only");
  if (factors_.empty()) return Int(1);
  return factors_.back();
}

std::string GroupSpec::str() const {
  switch (kind_) {
    case GroupKind::Trivial: return "1";
    case GroupKind::K8: return "K8";
    case GroupKind::Cyclic: return "C" + factors_[0].str();
    case GroupKind::OtherNonAbelian: return label_;
    case GroupKind::Abelian: {
      std::string out = "A[";
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) out += ',';
        out += factors_[i].str();
      }
      return out + "]";
    }
  }
  throw std::logic_error("GroupSpec::str: unreachable");
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  return kind_ == o.kind_ && factors_ == o.factors_ && label_ == o.label_;
}

const char* clause_name(Clause c) {
  switch (c) {
    case Clause::C2C3_AnyD: return "c2_c3_any_d";
    case Clause::ExpDividesN: return "exp_divides_n";
    case Clause::C4_PositiveD: return "c4_positive_d";
    case Clause::C8_D1: return "c8_d1";
    case Clause::K8_Stufe4: return "k8_stufe4";
    case Clause::TrivialUnitGroup: return "trivial_unit_group";
    case Clause::NotInClassification: return "not_in_classification";
  }
  throw std::logic_error("clause_name: unreachable");
}

HyperbolicVerdict classify(const SquareFreeD& d, const GroupSpec& g) {
  GroupSpec n = g.normalized();
  const Int& dv = d.value();
  HyperbolicVerdict v{dv, n, false, Clause::NotInClassification,
                      std::nullopt, std::nullopt, stufe(d),
                      std::nullopt, std::nullopt};

  auto cyclic_of = [&](long long order) {
    return n.kind() == GroupKind::Cyclic && n.factors()[0] == order;
  };
  auto fire = [&](Clause c) {
    v.hyperbolic = true;
    v.clause = c;
  };

  if (cyclic_of(2) || cyclic_of(3)) {
    fire(Clause::C2C3_AnyD);
    return v;
  }
  if (n.is_abelian()) {
    Int e = n.exponent();
    auto divides = [&](long long m) { return Int(m) % e == 0; };
    if (divides(2) && dv > 0) {
      fire(Clause::ExpDividesN);
      v.clause_exponent = 2;
      v.clause_d_condition = "d>0";
      return v;
    }
    if (divides(6) && dv == 3) {
      fire(Clause::ExpDividesN);
      v.clause_exponent = 6;
      v.clause_d_condition = "d=3";
      return v;
    }
    if (divides(4) && dv == 1) {
      fire(Clause::ExpDividesN);
      v.clause_exponent = 4;
      v.clause_d_condition = "d=1";
      return v;
    }
  }
  if (cyclic_of(4) && dv > 0) {
    fire(Clause::C4_PositiveD);
    return v;
  }
  if (cyclic_of(8) && dv == 1) {
    fire(Clause::C8_D1);
    return v;
  }
  if (n.kind() == GroupKind::K8 && dv > 0 && dv % 8 == 7) {
    fire(Clause::K8_Stufe4);
    v.boundary = "S²";
    v.ends = 1;
    return v;
  }
  if (n.kind() == GroupKind::Trivial) {
    // only reachable for d < 0; positive d went through the exponent clause
    fire(Clause::TrivialUnitGroup);
    return v;
  }
  return v;
}

std::vector<HyperbolicVerdict> verdict_table(const Int& d_min, const Int& d_max,
                                             const std::vector<GroupSpec>& groups) {
  std::vector<HyperbolicVerdict> rows;
  for (Int dv = d_min; dv <= d_max; ++dv) {
    if (dv == 0 || dv == -1 || !is_square_free(dv)) continue;
    SquareFreeD d{dv};
    for (const GroupSpec& g : groups) rows.push_back(classify(d, g));
  }
  return rows;
}

nlohmann::ordered_json verdict_json(const HyperbolicVerdict& v) {
  nlohmann::ordered_json doc;
  doc["d"] = json_int(v.d);
  doc["group"] = v.group.str();
  doc["hyperbolic"] = v.hyperbolic;
  doc["clause"] = clause_name(v.clause);
  if (v.clause_exponent) doc["clause_exponent"] = *v.clause_exponent;
  if (v.clause_d_condition) doc["clause_d_condition"] = *v.clause_d_condition;
  if (v.stufe)
    doc["stufe"] = *v.stufe;
  else
    doc["stufe"] = "inf";
  if (v.boundary) doc["boundary"] = *v.boundary;
  if (v.ends) doc["ends"] = *v.ends;
  return doc;
}

}  // namespace qorder
