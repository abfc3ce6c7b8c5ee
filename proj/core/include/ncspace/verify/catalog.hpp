#pragma once

#include "ncspace/algebra/poincare_algebra.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ncspace::verify {

enum class IdentityId {
  PoincareJacobi,
  XPCommutator,
  JXCovariance,
  XXSnyder,
  MassCasimir,
  TranslationAdjointX,
  SnyderTranslationCovariance,
  DeformedX,
  DeformedCommutator,
  DeformedTranslationCovariance,
  DeformedLorentzInfinitesimal,
};

enum class Status { Unverified, Pass, Fail };

std::string_view status_name(Status s);

class UnknownIdentityError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// All identities in report order.
const std::vector<IdentityId>& catalog();

/// Stable upper-case name, e.g. "X_P_COMMUTATOR".
std::string_view identity_name(IdentityId id);
/// Short description of the claim the identity encodes.
std::string_view identity_reference(IdentityId id);
/// Inverse of identity_name; throws UnknownIdentityError.
IdentityId identity_from_name(std::string_view name);

/// One concrete index assignment of an identity.
struct IdentityCase {
  std::string label;  // e.g. "mu=1,nu=2"
  algebra::AlgebraElement lhs;
  algebra::AlgebraElement rhs;
};

/// Outcome of checking every index assignment of one identity.
/// status is Pass exactly when witness is zero.
struct IdentityRecord {
  IdentityId id = IdentityId::PoincareJacobi;
  int dimension = 4;
  Status status = Status::Unverified;
  std::size_t cases_checked = 0;
  /// Label, sides and normal-ordered cross-multiplied difference of the
  /// first failing case; empty on pass.
  std::string failing_case;
  algebra::AlgebraElement lhs;
  algebra::AlgebraElement rhs;
  algebra::AlgebraElement witness;
  double ms = 0.0;

  std::string_view name() const { return identity_name(id); }
  std::string_view reference() const { return identity_reference(id); }
};

/// Calls `visit` for every index assignment of `id`, in a fixed order, until
/// it returns false.
void for_each_case(IdentityId id, const algebra::PoincareAlgebra& alg,
                   const std::function<bool(IdentityCase)>& visit);

/// Checks every case of `id` in `alg`, stopping at the first failure.
IdentityRecord verify(IdentityId id, const algebra::PoincareAlgebra& alg);
/// Same in a fresh algebra of dimension d; throws std::invalid_argument for d < 2.
IdentityRecord verify(IdentityId id, int d);
/// Every catalog identity, evaluated concurrently and returned in catalog order.
std::vector<IdentityRecord> verify_all(int d);
std::vector<IdentityRecord> verify_all(const algebra::PoincareAlgebra& alg);

/// Generates the cases of `id` eagerly (used by tests and benchmarks).
std::vector<IdentityCase> cases(IdentityId id, const algebra::PoincareAlgebra& alg);

}  // namespace ncspace::verify
