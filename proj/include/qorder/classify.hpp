#pragma once

#include <qorder/quadratic.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qorder {

enum class GroupKind { Trivial, Cyclic, Abelian, K8, OtherNonAbelian };

/**
 * Finite group shape for the classification: trivial, cyclic C_n, abelian by
 * invariant factors (each >= 2, each dividing the next), the quaternion group
 * K8, or an uninterpreted non-abelian label.
 */
class GroupSpec {
 public:
  static GroupSpec trivial();
  static GroupSpec cyclic(const Int& n);                 // n >= 2
  static GroupSpec abelian(const std::vector<Int>& fs);  // invariant factors
  static GroupSpec k8();
  static GroupSpec other(const std::string& label);

  /**
   * "1" | "C<n>" | "A[f1,f2,...]" | "K8" | any other identifier (treated as a
   * non-abelian label). Throws std::invalid_argument on empty input or
   * invariant violations like C1 or A[4,2].
   */
  static GroupSpec parse(const std::string& text);

  GroupKind kind() const { return kind_; }
  const std::vector<Int>& factors() const { return factors_; }
  const std::string& label() const { return label_; }

  bool is_abelian() const;  // Trivial, Cyclic, or Abelian

  // A[] becomes Trivial and A[n] becomes C<n>; everything else is unchanged.
  GroupSpec normalized() const;

  // Largest invariant factor (1 for Trivial); rejects non-abelian specs.
  Int exponent() const;

  std::string str() const;
  bool operator==(const GroupSpec& o) const;
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

 private:
  GroupSpec(GroupKind kind, std::vector<Int> factors, std::string label);
  GroupKind kind_;
  std::vector<Int> factors_;
  std::string label_;
};

enum class Clause {
  C2C3_AnyD,
  ExpDividesN,
  C4_PositiveD,
  C8_D1,
  K8_Stufe4,
  TrivialUnitGroup,  // extension beyond the theorem: trivial G, real field
  NotInClassification,
};
const char* clause_name(Clause c);

struct HyperbolicVerdict {
  Int d;
  GroupSpec group;  // normalized form
  bool hyperbolic;
  Clause clause;
  std::optional<int> clause_exponent;              // ExpDividesN only
  std::optional<std::string> clause_d_condition;   // ExpDividesN only
  std::optional<int> stufe;                        // nullopt = infinite
  std::optional<std::string> boundary;             // "S²" on K8_Stufe4
  std::optional<int> ends;                         // 1 on K8_Stufe4
};

/**
 * Ordered decision table. Exactly one clause fires per input:
 *   1. G in {C2, C3}, any d
 *   2. G abelian with exponent dividing 2 (d > 0), 6 (d = 3), or 4 (d = 1)
 *   3. G = C4 and d > 0
 *   4. G = C8 and d = 1
 *   5. G = K8, d > 0, d = 7 (mod 8)  [stufe 4; boundary S², one end]
 *   6. G trivial (reached only for d < 0; extension clause)
 * Anything else is not hyperbolic (NotInClassification).
 */
HyperbolicVerdict classify(const SquareFreeD& d, const GroupSpec& g);

/**
 * classify over every square-free d in [d_min, d_max] (0 and -1 skipped)
 * crossed with the catalog; d ascending, catalog order within each d.
 */
std::vector<HyperbolicVerdict> verdict_table(const Int& d_min, const Int& d_max,
                                             const std::vector<GroupSpec>& groups);

/**
 * {d, group, hyperbolic, clause, [clause_exponent, clause_d_condition],
 * stufe, [boundary, ends]}; stufe is "inf" when infinite.
 */
nlohmann::ordered_json verdict_json(const HyperbolicVerdict& v);

}  // namespace qorder
