#pragma once

// Registry of the harmonic-number identities: each record pairs a left-hand
// side (series, finite sum, or a combination of other series) with an
// evaluable closed form, a parameter domain and canonical test points.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hseries/complex.hpp"
#include "hseries/precision.hpp"
#include "hseries/rational.hpp"

namespace hseries::catalog {

enum class Kind { InfiniteSeries, FiniteSum, DerivedScalar };
std::string to_string(Kind k);

/// A parameter as typed by the user plus its numeric (and, when rational, exact) value.
struct ParamValue {
  std::string text;
  Complex value;
  std::optional<BigRational> exact;

  bool operator==(const ParamValue& o) const { return text == o.text; }
};

/// Parses "3", "-7/2", "0.25", "1e-3", "0.3+0.7i", "-2i". ParseError otherwise.
ParamValue parse_param(std::string_view text);

using Params = std::map<std::string, ParamValue>;

/// Builds parameters from name=value pairs, e.g. {{"z", "1/2"}}.
Params make_params(std::initializer_list<std::pair<const char*, const char*>> items);
/// "z=1/2, m=3"; empty for no parameters.
std::string to_string(const Params& p);

struct IdentityRecord {
  std::string id;
  Kind kind = Kind::InfiniteSeries;
  /// Anchor of the displayed equation or theorem the identity comes from.
  std::string provenance;
  std::string lhs_text;
  std::string rhs_text;
  std::vector<std::string> param_names;
  std::string domain;
  std::vector<Params> canonical_params;
  bool exact_available = false;
};

const std::vector<IdentityRecord>& list_identities();
/// NotFound for unknown ids.
const IdentityRecord& lookup(std::string_view id);

/// Right-hand side at the working precision. DomainError outside the domain.
Complex closed_form(std::string_view id, const Params& params);

struct VerificationReport {
  std::string id;
  std::string provenance;
  Params params;
  Complex lhs;
  Complex rhs;
  Real abs_error;
  Real rel_error;
  std::size_t terms_used = 0;
  bool accelerated = false;
  Real achieved_tol;
  /// rel_error bound used for the verdict (abs_error bound when rhs = 0).
  Real threshold;
  bool passed = false;
  double wall_time_ms = 0;
  /// Set when the point could not be evaluated (sweeps record and continue).
  std::string error_kind;
  std::string error_message;
};

/// Evaluates both sides at ctx's precision. Passes when
/// rel_error <= max(ctx.target_tol, 100 * achieved_tol), or abs_error <= 1e-12
/// when the right-hand side vanishes. Errors carry the identity id.
VerificationReport verify(std::string_view id, const Params& params, const PrecisionContext& ctx);

struct ExactReport {
  std::string id;
  Params params;
  /// Names of the basis constants the coefficient vectors refer to.
  std::vector<std::string> basis;
  std::vector<BigRational> lhs;
  std::vector<BigRational> rhs;
  bool equal = false;
};

/// Exact comparison for finite identities with rational parameters.
/// KindError for series identities, DomainError for non-rational parameters.
ExactReport verify_exact(std::string_view id, const Params& params);

/// verify() at every grid point; per-point errors are recorded in the report
/// (passed = false, error_kind set) and the sweep continues.
std::vector<VerificationReport> sweep(std::string_view id, const std::vector<Params>& grid,
                                      const PrecisionContext& ctx);

/// Versioned registry document.
nlohmann::json registry_json();
inline constexpr int kRegistrySchemaVersion = 1;

}  // namespace hseries::catalog
