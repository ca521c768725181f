#pragma once

// Verifiers for the sum formulas, the Rota-Baxter laws, Euler's
// decomposition, the extended double shuffle closure, and the symbolic
// reduction behind the weighted sum formula. Every check builds both sides as
// exact linear combinations and reports their difference.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mzv/coefficients.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/shuffle.hpp"
#include "mzv/stuffle.hpp"
#include "mzv/words.hpp"

namespace mzv {

enum class IdentityId {
  Thm31,
  Thm32,
  Thm25,
  Thm26,
  Lem42a,
  Lem42b,
  RotaBaxter,
  EulerDecomp,
  EDSClosure,
  WSFReduction,
};

inline constexpr std::array<IdentityId, 10> kAllIdentities = {
    IdentityId::Thm31,  IdentityId::Thm32,      IdentityId::Thm25,       IdentityId::Thm26,
    IdentityId::Lem42a, IdentityId::Lem42b,     IdentityId::RotaBaxter,  IdentityId::EulerDecomp,
    IdentityId::EDSClosure, IdentityId::WSFReduction,
};

inline std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::Thm31: return "Thm31";
    case IdentityId::Thm32: return "Thm32";
    case IdentityId::Thm25: return "Thm25";
    case IdentityId::Thm26: return "Thm26";
    case IdentityId::Lem42a: return "Lem42a";
    case IdentityId::Lem42b: return "Lem42b";
    case IdentityId::RotaBaxter: return "RotaBaxter";
    case IdentityId::EulerDecomp: return "EulerDecomp";
    case IdentityId::EDSClosure: return "EDSClosure";
    case IdentityId::WSFReduction: return "WSFReduction";
  }
  return "?";
}

inline std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (IdentityId id : kAllIdentities) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

enum class ReportStatus { verified, failed };

/// Outcome of one (identity, k, n) cell. `discrepancy` is LHS - RHS (or the
/// first offending combination for the exhaustive checks); it is zero exactly
/// when the status is verified.
struct IdentityReport {
  IdentityId identity;
  int k = 0;
  int n = 0;
  ReportStatus status = ReportStatus::verified;
  LinComb<Composition> discrepancy;

  bool verified() const noexcept { return status == ReportStatus::verified; }

  static IdentityReport from(IdentityId id, int k, int n, LinComb<Composition> diff) {
    IdentityReport r{id, k, n, ReportStatus::verified, std::move(diff)};
    r.status = r.discrepancy.is_zero() ? ReportStatus::verified : ReportStatus::failed;
    return r;
  }
};

inline nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["identity"] = std::string(to_string(r.identity));
  j["k"] = r.k;
  j["n"] = r.n;
  j["status"] = r.verified() ? "verified" : "failed";
  j["discrepancy"] = to_json(r.discrepancy);
  return j;
}

// ---------------------------------------------------------------------------
// Weights of the weighted sum formula.

/// The bracketed weight of z_s in the weighted sum formula, written with the
/// partial sums S_i = s1 + ... + si:
///   2^{s1-1} + (2^{s1-1} - 1) (sum_{i=2}^{k-1} 2^{S_i - s1 - (i-1)} + 2^{S_{k-1} - s1 - (k-2)}).
inline BigInt main_theorem_weight(const Composition& s) {
  if (!s.admissible() || s.depth() < 2) {
    throw DomainError("main_theorem_weight requires an admissible composition of depth >= 2");
  }
  const long k = static_cast<long>(s.depth());
  const long s1 = s[0];
  std::vector<long> partial(static_cast<std::size_t>(k) + 1, 0);  // partial[i] = S_i
  for (long i = 1; i <= k; ++i) partial[i] = partial[i - 1] + s[static_cast<std::size_t>(i - 1)];
  BigInt inner = 0;
  for (long i = 2; i <= k - 1; ++i) inner += pow2(partial[i] - s1 - (i - 1));
  inner += pow2(partial[k - 1] - s1 - (k - 2));
  return pow2(s1 - 1) + (pow2(s1 - 1) - 1) * inner;
}

/// C(t1,...,t_{k-1}) - C(t2,...,t_{k-1}) for a depth-k composition t.
inline BigInt c_difference_weight(const Composition& t) {
  if (t.depth() < 2) throw DomainError("c_difference_weight requires depth >= 2");
  const auto head = t.prefix(t.depth() - 1);
  return calc_C(head.parts()) - calc_C(head.tail().parts());
}

// ---------------------------------------------------------------------------
// Extended double shuffle elements.

/// z_r ⧢~ w - z_r * w for admissible w.
inline LinComb<Composition> eds_element(int r, const Composition& w,
                                        ProductEngine engine = ProductEngine::recursive) {
  if (r < 1) throw DomainError("eds_element requires r >= 1");
  if (!w.admissible()) throw DomainError("eds_element requires an admissible word, got " + to_string(w));
  const Composition zr{r};
  LinComb<Composition> prod = engine == ProductEngine::oracle ? oracle::quasi_shuffle(zr, w) : stuffle(zr, w);
  return transported_shuffle(zr, w, engine) - prod;
}

// ---------------------------------------------------------------------------
// Cell domains and checks.

/// Whether (k, n) is a meaningful cell for the identity.
inline bool cell_in_domain(IdentityId id, int k, int n) {
  switch (id) {
    case IdentityId::Thm31:
    case IdentityId::Thm25:
    case IdentityId::Lem42a:
    case IdentityId::Lem42b:
      return k >= 2 && n >= k;
    case IdentityId::Thm32:
    case IdentityId::Thm26:
    case IdentityId::WSFReduction:
    case IdentityId::EDSClosure:
      return k >= 2 && n >= k + 1;
    case IdentityId::RotaBaxter:
      return k >= 0 && n >= k;
    case IdentityId::EulerDecomp:
      return k == 2 && n >= 2;
  }
  return false;
}

/// The regrouped difference of the admissible shuffle and stuffle sums:
///   sum_{r, s1>=2} (z_r ⧢~ z_s - z_r * z_s)
///     = sum_{t1>=2} [C(t1..t_{k-1}) - C(t2..t_{k-1}) - k] z_t - (n-k) sum_{u1>=2} z_u.
inline IdentityReport wsf_reduction(int k, int n, ProductEngine engine = ProductEngine::recursive) {
  if (!cell_in_domain(IdentityId::WSFReduction, k, n)) {
    throw DomainError("wsf_reduction requires k >= 2 and n >= k+1");
  }
  LinComb<Composition> lhs = shuffle_sum_lhs(k, n, true, engine) - stuffle_sum_lhs(k, n, true, engine);
  LinComb<Composition> rhs;
  for (const auto& t : compositions_of(n, k, true)) rhs.add_term(t, c_difference_weight(t) - k);
  for (const auto& u : compositions_of(n, k - 1, true)) rhs.add_term(u, BigInt(-(n - k)));
  return IdentityReport::from(IdentityId::WSFReduction, k, n, lhs - rhs);
}

/// All four mixed Rota-Baxter laws of P and Q for one pair; returns the first
/// nonzero discrepancy, or zero.
inline LinComb<Composition> rota_baxter_discrepancy(const Composition& w1, const Composition& w2,
                                                    ProductEngine engine = ProductEngine::recursive) {
  auto sh = [engine](const Composition& a, const Composition& b) { return transported_shuffle(a, b, engine); };
  // Q(w1) ⧢ Q(w2) = Q(w1 ⧢ Q(w2)) + Q(Q(w1) ⧢ w2)
  {
    auto diff = sh(opQ(w1), opQ(w2)) - opQ(sh(w1, opQ(w2))) - opQ(sh(opQ(w1), w2));
    if (!diff.is_zero()) return diff;
  }
  if (!w1.empty() && !w2.empty()) {
    // P(w1) ⧢ P(w2) = P(w1 ⧢ P(w2)) + P(P(w1) ⧢ w2)
    auto diff = sh(opP(w1), opP(w2)) - opP(sh(w1, opP(w2))) - opP(sh(opP(w1), w2));
    if (!diff.is_zero()) return diff;
  }
  if (!w1.empty()) {
    // P(w1) ⧢ Q(w2) = Q(P(w1) ⧢ w2) + P(w1 ⧢ Q(w2))
    auto diff = sh(opP(w1), opQ(w2)) - opQ(sh(opP(w1), w2)) - opP(sh(w1, opQ(w2)));
    if (!diff.is_zero()) return diff;
  }
  if (!w2.empty()) {
    // Q(w1) ⧢ P(w2) = Q(w1 ⧢ P(w2)) + P(Q(w1) ⧢ w2)
    auto diff = sh(opQ(w1), opP(w2)) - opQ(sh(w1, opP(w2))) - opP(sh(opQ(w1), w2));
    if (!diff.is_zero()) return diff;
  }
  return {};
}

namespace detail {

// Compositions of weight n and depth k, including the empty word at (0, 0).
inline std::vector<Composition> words_of(int n, int k) {
  if (n == 0) return k == 0 ? std::vector<Composition>{Composition{}} : std::vector<Composition>{};
  if (k == 0) return {};
  return compositions_of(n, k);
}

inline IdentityReport verify_rota_baxter(int k, int n, ProductEngine engine) {
  require_weight_within_limit(n);
  for (int n1 = 0; n1 <= n; ++n1) {
    for (int k1 = 0; k1 <= k; ++k1) {
      for (const auto& w1 : words_of(n1, k1)) {
        for (const auto& w2 : words_of(n - n1, k - k1)) {
          auto diff = rota_baxter_discrepancy(w1, w2, engine);
          if (!diff.is_zero()) return IdentityReport::from(IdentityId::RotaBaxter, k, n, std::move(diff));
        }
      }
    }
  }
  return IdentityReport::from(IdentityId::RotaBaxter, k, n, {});
}

inline IdentityReport verify_euler_decomposition(int k, int n, ProductEngine engine) {
  for (int r = 1; r < n; ++r) {
    auto diff = euler_decomposition(r, n - r) - transported_shuffle(Composition{r}, Composition{n - r}, engine);
    if (!diff.is_zero()) return IdentityReport::from(IdentityId::EulerDecomp, k, n, std::move(diff));
  }
  return IdentityReport::from(IdentityId::EulerDecomp, k, n, {});
}

inline IdentityReport verify_eds_closure(int k, int n, ProductEngine engine) {
  for (const auto& w : compositions_of(n - 1, k - 1, true)) {
    auto bad = filter_terms(eds_element(1, w, engine), [](const Composition& t) { return !t.admissible(); });
    if (!bad.is_zero()) return IdentityReport::from(IdentityId::EDSClosure, k, n, std::move(bad));
  }
  return IdentityReport::from(IdentityId::EDSClosure, k, n, {});
}

}  // namespace detail

/// Builds both sides of the identity at (k, n) and reports their difference.
inline IdentityReport verify(IdentityId id, int k, int n, ProductEngine engine = ProductEngine::recursive) {
  if (!cell_in_domain(id, k, n)) {
    throw DomainError(std::string(to_string(id)) + " is not defined at k=" + std::to_string(k) +
                      ", n=" + std::to_string(n));
  }
  auto report = [&](LinComb<Composition> lhs, LinComb<Composition> rhs) {
    return IdentityReport::from(id, k, n, std::move(lhs) - rhs);
  };
  switch (id) {
    case IdentityId::Thm31: return report(stuffle_sum_lhs(k, n, false, engine), stuffle_sum_rhs_thm31(k, n));
    case IdentityId::Thm32: return report(stuffle_sum_lhs(k, n, true, engine), stuffle_sum_rhs_thm32(k, n));
    case IdentityId::Thm25: return report(shuffle_sum_lhs(k, n, false, engine), shuffle_sum_rhs_thm25(k, n));
    case IdentityId::Thm26: return report(shuffle_sum_lhs(k, n, true, engine), shuffle_sum_rhs_thm26(k, n));
    case IdentityId::Lem42a: return report(z1_shuffle_lhs(k, n, true, engine), z1_shuffle_rhs_admissible(k, n));
    case IdentityId::Lem42b: return report(z1_shuffle_lhs(k, n, false, engine), z1_shuffle_rhs_all(k, n));
    case IdentityId::RotaBaxter: return detail::verify_rota_baxter(k, n, engine);
    case IdentityId::EulerDecomp: return detail::verify_euler_decomposition(k, n, engine);
    case IdentityId::EDSClosure: return detail::verify_eds_closure(k, n, engine);
    case IdentityId::WSFReduction: return wsf_reduction(k, n, engine);
  }
  throw DomainError("unknown identity");
}

}  // namespace mzv
