#pragma once

#include <stdexcept>
#include <string>

namespace mingen {

enum class ErrorKind {
  parse_error,
  not_a_group,
  identity_not_zero,
  not_a_permutation,
  bad_params,
  not_transitive,
  not_primitive,
  not_normal,
  not_abelian,
  not_simple,
  not_solvable,
  not_product_of_simples,
  not_direct_product,
  bad_factor_d,
  bad_known_gens,
  gcd_condition_fails,
  trivial_group,
  layer_abelian,
  layer_not_abelian,
  order_exceeded,
  lattice_too_large,
  internal,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::not_a_group: return "NotAGroup";
    case ErrorKind::identity_not_zero: return "IdentityNotZero";
    case ErrorKind::not_a_permutation: return "NotAPermutation";
    case ErrorKind::bad_params: return "BadParams";
    case ErrorKind::not_transitive: return "NotTransitive";
    case ErrorKind::not_primitive: return "NotPrimitive";
    case ErrorKind::not_normal: return "NotNormal";
    case ErrorKind::not_abelian: return "NotAbelian";
    case ErrorKind::not_simple: return "NotSimple";
    case ErrorKind::not_solvable: return "NotSolvable";
    case ErrorKind::not_product_of_simples: return "NotProductOfSimples";
    case ErrorKind::not_direct_product: return "NotDirectProduct";
    case ErrorKind::bad_factor_d: return "BadFactorD";
    case ErrorKind::bad_known_gens: return "BadKnownGens";
    case ErrorKind::gcd_condition_fails: return "GcdConditionFails";
    case ErrorKind::trivial_group: return "TrivialGroup";
    case ErrorKind::layer_abelian: return "LayerAbelian";
    case ErrorKind::layer_not_abelian: return "LayerNotAbelian";
    case ErrorKind::order_exceeded: return "OrderExceeded";
    case ErrorKind::lattice_too_large: return "LatticeTooLarge";
    case ErrorKind::internal: return "InternalError";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above; the
/// CLI maps kinds to exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace mingen
