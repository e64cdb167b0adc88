#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "free2/kpq_family.hpp"
#include "free2/structure.hpp"
#include "free2/word.hpp"

namespace free2 {

inline constexpr int kDefaultWindow = 6;

struct ClassifierOptions {
  /// Universal-in-n statements are checked for |n| <= window only.
  int window = kDefaultWindow;
  std::size_t length_cap = kDefaultLengthCap;
};

enum class FormKind { Trivial, TorusT2, TorusT58, General };

struct KnotForm {
  FormKind kind = FormKind::General;
  /// Second torus index for TorusT2, i.e. 2q - 1.
  std::int64_t torus_b = 0;

  /// (a, b) for T(a, b); empty unless the knot is a torus knot.
  std::optional<std::pair<std::int64_t, std::int64_t>> torus_params() const;
  std::string_view name() const;  // "trivial", "torus" or "general"

  friend bool operator==(const KnotForm&, const KnotForm&) = default;
};

/// A lift whose multiplicity is not 1.
struct Counterexample {
  FamilyId family = FamilyId::L0;
  std::int64_t n = 0;
  /// primitive_root exponent; 0 when the word is trivial.
  std::int64_t exponent = 0;
};

/// Algebraic inputs of the atoroidality criterion, checked inside a window.
struct CertificateStatus {
  bool ok = false;
  int window = 0;
  std::int64_t mu_m0 = 0;
  std::int64_t mu_m1 = 0;
  std::optional<Counterexample> counterexample;
};

struct OneOneWitness {
  std::int64_t n = 0;
  FamilyId c0 = FamilyId::C0P;
  FamilyId c1 = FamilyId::C1P;
  CommPowerWitness detail;
};

/// A lift pairing that could not be tested (trivial lift or a proper power
/// of a non-primitive element).
struct SkippedCandidate {
  std::int64_t n = 0;
  FamilyId c0 = FamilyId::C0P;
  FamilyId c1 = FamilyId::C1P;
  std::string reason;
};

struct OneOneDecision {
  bool decided = false;
  int window = 0;
  std::optional<OneOneWitness> witness;
  std::vector<SkippedCandidate> skipped;
};

struct SurgeryInvariant {
  std::int64_t slope = 0;
  /// Third index of S^2(2, 2, index).
  std::int64_t seifert_index = 1;
};

struct TunnelWitness {
  FamilyId family = FamilyId::L0;
  std::int64_t n = 0;
  Word word;
};

struct ClassificationReport {
  std::int64_t p = 0;
  std::int64_t q = 0;
  KnotForm form;
  std::int64_t slope = 0;
  std::optional<bool> pi1_injective;
  std::optional<TunnelWitness> tunnel;
  std::optional<CertificateStatus> atoroidality;
  OneOneDecision one_one;
  std::optional<SurgeryInvariant> surgery;
};

KnotForm special_form(std::int64_t p, std::int64_t q);

/// True iff dP(p,q) is neither primitive nor a proper power. Throws
/// DomainError unless special_form(p, q) is General.
bool pi1_injective(std::int64_t p, std::int64_t q,
                   const ClassifierOptions& opts = {});

/// First primitive longitude lift: l0'(0), l1'(0), then l0'(n), l1'(n) for
/// n = 1, -1, 2, -2, ... inside the window.
std::optional<TunnelWitness> tunnel_one(std::int64_t p, std::int64_t q,
                                        const ClassifierOptions& opts = {});

/// Checks mu = 1 for l0'(n), l1'(n), |n| <= window, and for m0 or m1.
/// Throws DomainError unless the form is General.
CertificateStatus atoroidality_certificate(std::int64_t p, std::int64_t q,
                                           const ClassifierOptions& opts = {});

/// Searches the (1,1)-structure conditions over n = 0, 1, -1, ... and the
/// lift pairings c0'xc1', c0'xc1'', c0''xc1', c0''xc1''. Throws DomainError
/// unless the form is General.
OneOneDecision decide_11(std::int64_t p, std::int64_t q,
                         const ClassifierOptions& opts = {});

/// Present when dP(p,q) is primitive and the exponent-sum determinant of
/// {dP(p,q), l0'(0,p,q)} is nonzero.
std::optional<SurgeryInvariant> surgery_invariant(
    std::int64_t p, std::int64_t q, const ClassifierOptions& opts = {});

/// Genus 3|p| - 1 of the meridian braid closure. Throws DomainError at p = 0.
std::int64_t meridian_genus(std::int64_t p);

ClassificationReport classify(std::int64_t p, std::int64_t q,
                              const ClassifierOptions& opts = {});

struct SurveyGrid {
  std::int64_t p_lo = 0;
  std::int64_t p_hi = 0;
  std::int64_t q_lo = 0;
  std::int64_t q_hi = 0;
};

/// Rows ordered by p, then q. Points are evaluated on up to `threads`
/// workers (0 picks the hardware concurrency). Throws DomainError on an
/// empty range.
std::vector<ClassificationReport> survey(const SurveyGrid& grid,
                                         const ClassifierOptions& opts = {},
                                         unsigned threads = 0);

/// Same as survey(), but hands each row to `sink` as soon as it and every
/// row before it are done. `sink` runs on the calling thread.
void survey_stream(const SurveyGrid& grid, const ClassifierOptions& opts,
                   unsigned threads,
                   const std::function<void(const ClassificationReport&)>& sink);

}  // namespace free2
