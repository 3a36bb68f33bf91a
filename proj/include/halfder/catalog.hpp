#pragma once

#include "halfder/liealg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace halfder {

enum class Family {
  NFiliform,
  QFiliform,
  S1,
  S2,
  S3,
  S4,
  SN2,
  Tau1,
  Tau2,
  Tau3,
  Tau2N2,
  HeisSolv,
  AbelianSolv,
  Oscillator,
  Sl2Module,
  Schrodinger,
};

/// Selects one member of a family. Unused fields must stay empty; absent
/// optional parameters are filled with generic defaults by build().
struct FamilySpec {
  Family family = Family::S1;
  int n = 0;
  std::optional<Rational> beta;   // S1: beta, Tau1: alpha
  std::vector<Rational> alphas;   // S4: alpha_3..alpha_{n-1}; Tau3: alpha_4, alpha_6, .., alpha_{2n-2}
  std::vector<Rational> lambdas;  // Oscillator: 0 < lambda_1 <= .. <= lambda_n
  int m = 0;                      // Sl2Module

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

struct FamilyInfo {
  Family family;
  std::string id;          // CLI value, e.g. "s1"
  std::string parameters;  // e.g. "n, beta"
  std::string label;       // conventional name, e.g. "s^1_{n,1}(beta)"
};

/// All sixteen constructors in a stable order.
const std::vector<FamilyInfo>& list_families();
const FamilyInfo& family_info(Family f);
std::optional<Family> family_from_id(const std::string& id);

/// Fills absent generic parameters (beta = 5/3, nonzero alpha lists,
/// lambda_j = j) and validates the result. Throws ParameterError.
FamilySpec with_defaults(FamilySpec spec);

/// Dimension of the algebra build(spec) returns.
std::size_t family_dimension(const FamilySpec& spec);

/// Constructs the algebra. Throws ParameterError naming the violated
/// constraint when the spec is inadmissible.
LieAlgebra build(const FamilySpec& spec);

/// Short display label with parameters, e.g. "s1_5(2)" or "oscillator_2(1,2)".
std::string describe(const FamilySpec& spec);

}  // namespace halfder
