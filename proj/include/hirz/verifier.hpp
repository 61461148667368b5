#pragma once

/**
 * @file verifier.hpp
 * @brief Mechanical replay of the almost-nef, non-pseudo-effective example.
 *
 * On X = F_2 take the nonsplit extension 0 -> O_X(C) -> E -> O_X -> 0
 * (Ext^1(O_X, O_X(C)) = H^1(O_X(C)) is one-dimensional). The replay
 * certifies, for every beta >= 1 (symbolic mode) or for beta <= beta_max
 * (sweep mode), that the quotient maps
 *
 *   sigma_b : S^{4b}(S^4 E)(5bH)    ->> O_X(5bH)        (char 0)
 *   s_b     : S^{4b}(Frob^* E)(5bH) ->> O_X(5bH)        (char p)
 *   t_b     : S^{4b}(E)(bH)         ->> O_X(bH)
 *
 * are zero on global sections, where H = C + 3F. The vanishing reduces, by
 * peeling off copies of C with 0 -> O(-C) -> O -> O_C -> 0, to h^0 = 0 of
 * bundles restricted to C, which split on P^1 with degrees given by an
 * affine DegreeForm in (beta, l).
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hirz/bundle_expr.hpp"
#include "hirz/divisor.hpp"
#include "hirz/splitting.hpp"

namespace hirz::replay {

enum class Mode { Symbolic, Sweep };
enum class Status { Pass, Fail };

const char* mode_name(Mode m);
const char* status_name(Status s);

/// Deliberate corruptions showing that the certificates can fail.
struct Controls {
  bool split_restriction = false;  ///< use the split extension, E|_C = O(-2) + O
  bool inflated_twist = false;     ///< claim4 twists by 16bF instead of 15bF
};

struct ReplayOptions {
  Int characteristic = 0;  ///< 0 or a prime
  Mode mode = Mode::Symbolic;
  Int beta_max = 50;  ///< sweep mode only
  Controls controls;
};

/// One named sub-check inside a claim record.
struct Check {
  std::string name;
  std::string observed;
  std::string expected;
  bool pass = false;
};

using Witness = std::pair<Int, Int>;  // (beta, l)

struct ClaimRecord {
  std::string id;
  std::string certifies;
  std::string bundle;  ///< bundle restricted to C, as an expression
  std::optional<DegreeForm> form;
  std::string rank;
  std::string region;
  std::vector<Check> checks;
  std::map<std::string, Int> values;
  Int evaluations = 0;  ///< h^0 evaluations performed (sweep mode)
  std::optional<Witness> witness;
  std::optional<Int> witness_h0;
  std::string conclusion;
  std::vector<std::string> notes;
  Status status = Status::Fail;
};

class NoNonsplitExtension : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The extension of O_X by O_X(C). Throws NoNonsplitExtension when
/// H^1(O_X(C)) = 0, which happens for e <= 1.
ExtensionDatum build_extension(const SurfaceContext& ctx);

struct RestrictionCertificate {
  Int h1_structure_sheaf = 0;  ///< h^1(O_X); zero makes H^1(O_X(C)) -> H^1(O_C(C)) injective
  Int h1_normal = 0;           ///< h^1(O_C(C)) = h^1(O_P1(-e))
  std::optional<SplittingType> section_type;  ///< E|_C
  std::optional<SplittingType> fiber_type;    ///< E|_F
  std::string reason;
  Status status = Status::Fail;
};

RestrictionCertificate nonsplit_restriction_certificate(const SurfaceContext& ctx, const ExtensionDatum& ext);

/// H^0(tau_b) bijective: h^0(C, S^{4b}(S^4 E)(lC + 15bF)|_C) = 0 for l >= 0.
ClaimRecord claim3_certificate(const SurfaceContext& ctx, const ExtensionDatum& ext, const ReplayOptions& opts);
/// H^0(lambda_b) = 0: the l = 0 vanishing plus the bottom-row identity.
ClaimRecord claim4_certificate(const SurfaceContext& ctx, const ExtensionDatum& ext, const ReplayOptions& opts);
/// H^0(sigma_b) = 0 and the conclusion that S^4(E)(H) is not pseudo-effective.
ClaimRecord sigma_zero_conclusion(const SurfaceContext& ctx, const ClaimRecord& claim3, const ClaimRecord& claim4,
                                  const ReplayOptions& opts);
/// Frobenius-twisted variant for characteristic p.
ClaimRecord char_p_certificate(const SurfaceContext& ctx, const ExtensionDatum& ext, Int p, const ReplayOptions& opts);
/// H^0(t_b) = 0, so E itself is not pseudo-effective.
ClaimRecord remark_t_beta_certificate(const SurfaceContext& ctx, const ExtensionDatum& ext, const ReplayOptions& opts);
/// E|_F nef, E|_C not nef. Evidence only.
ClaimRecord almost_nef_evidence(const SurfaceContext& ctx, const ExtensionDatum& ext);

/// 1 for p >= 5, 2 for p < 5, so that p^k >= 4.
Int frobenius_exponent(Int p);

struct VerificationReport {
  static constexpr int kSchema = 1;

  Int surface_e = 2;
  ReplayOptions options;
  std::optional<ExtensionDatum> extension;
  std::optional<RestrictionCertificate> restriction;
  std::vector<ClaimRecord> claims;  // logical order; serialized keyed by id
  std::vector<std::string> notes;
  std::string conclusion;
  std::string first_failure;
  Status status = Status::Fail;

  const ClaimRecord* find(std::string_view id) const;
};

/// Throws std::invalid_argument when the characteristic is neither 0 nor prime.
VerificationReport run_full_replay(const SurfaceContext& ctx, const ReplayOptions& opts);

}  // namespace hirz::replay
