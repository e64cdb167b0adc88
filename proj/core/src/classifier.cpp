#include "free2/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "free2/automorphism.hpp"
#include "free2/error.hpp"

namespace free2 {
namespace {

// n = 0, 1, -1, 2, -2, ... , window, -window
std::vector<std::int64_t> window_order(int window) {
  std::vector<std::int64_t> out{0};
  for (std::int64_t k = 1; k <= window; ++k) {
    out.push_back(k);
    out.push_back(-k);
  }
  return out;
}

void require_general(std::int64_t p, std::int64_t q, const char* what) {
  if (special_form(p, q).kind != FormKind::General) {
    throw DomainError(std::string(what) + " needs a general (p,q), got (" +
                      std::to_string(p) + "," + std::to_string(q) + ")");
  }
}

Word lift(FamilyId f, std::int64_t n, std::int64_t p, std::int64_t q,
          const ClassifierOptions& opts) {
  return generate(f, {n, p, q}, opts.length_cap);
}

// primitive_root of the word, or nullopt for the trivial word.
std::optional<MultiplicityResult> mu_of(const Word& w) {
  if (CyclicWord::of(w).empty()) return std::nullopt;
  return multiplicity(w);
}

}  // namespace

std::optional<std::pair<std::int64_t, std::int64_t>> KnotForm::torus_params()
    const {
  switch (kind) {
    case FormKind::TorusT2: return std::pair<std::int64_t, std::int64_t>{2, torus_b};
    case FormKind::TorusT58: return std::pair<std::int64_t, std::int64_t>{5, 8};
    default: return std::nullopt;
  }
}

std::string_view KnotForm::name() const {
  switch (kind) {
    case FormKind::Trivial: return "trivial";
    case FormKind::TorusT2:
    case FormKind::TorusT58: return "torus";
    case FormKind::General: return "general";
  }
  return "general";
}

KnotForm special_form(std::int64_t p, std::int64_t q) {
  if (p == 0 && (q == 0 || q == 1)) return {FormKind::Trivial, 0};
  // K(0,q) = T(2, 2q-1); this includes (0,-1), the trefoil T(2,-3).
  if (p == 0) return {FormKind::TorusT2, 2 * q - 1};
  if (p == -1 && q == 1) return {FormKind::TorusT58, 0};
  return {FormKind::General, 0};
}

bool pi1_injective(std::int64_t p, std::int64_t q,
                   const ClassifierOptions& opts) {
  require_general(p, q, "pi1_injective");
  const Word boundary = generate(FamilyId::DP, {0, p, q}, opts.length_cap);
  const auto mu = mu_of(boundary);
  if (!mu) return false;
  return mu->exponent == 1 && !mu->root_is_primitive;
}

std::optional<TunnelWitness> tunnel_one(std::int64_t p, std::int64_t q,
                                        const ClassifierOptions& opts) {
  for (std::int64_t n : window_order(opts.window)) {
    for (FamilyId f : {FamilyId::L0, FamilyId::L1}) {
      Word w = lift(f, n, p, q, opts);
      if (is_primitive(w)) return TunnelWitness{f, n, std::move(w)};
    }
  }
  return std::nullopt;
}

CertificateStatus atoroidality_certificate(std::int64_t p, std::int64_t q,
                                           const ClassifierOptions& opts) {
  require_general(p, q, "atoroidality_certificate");
  CertificateStatus status;
  status.window = opts.window;

  for (FamilyId f : {FamilyId::M0, FamilyId::M1}) {
    const auto mu = mu_of(lift(f, 0, p, q, opts));
    (f == FamilyId::M0 ? status.mu_m0 : status.mu_m1) = mu ? mu->exponent : 0;
  }
  if (status.mu_m0 != 1 && status.mu_m1 != 1) {
    status.counterexample =
        Counterexample{FamilyId::M0, 0, status.mu_m0};
    return status;
  }

  for (std::int64_t n : window_order(opts.window)) {
    for (FamilyId f : {FamilyId::L0, FamilyId::L1}) {
      const auto mu = mu_of(lift(f, n, p, q, opts));
      if (!mu || mu->exponent != 1) {
        status.counterexample = Counterexample{f, n, mu ? mu->exponent : 0};
        return status;
      }
    }
  }
  status.ok = true;
  return status;
}

OneOneDecision decide_11(std::int64_t p, std::int64_t q,
                         const ClassifierOptions& opts) {
  require_general(p, q, "decide_11");
  OneOneDecision decision;
  decision.window = opts.window;

  static constexpr std::pair<FamilyId, FamilyId> pairings[] = {
      {FamilyId::C0P, FamilyId::C1P},
      {FamilyId::C0P, FamilyId::C1PP},
      {FamilyId::C0PP, FamilyId::C1P},
      {FamilyId::C0PP, FamilyId::C1PP},
  };
  const Word x{Letter::x()};
  const Word y{Letter::y()};

  for (std::int64_t n : window_order(opts.window)) {
    const Word disk = lift(FamilyId::D2, n, p, q, opts);
    struct Lift {
      Word word;
      std::optional<MultiplicityResult> mu;
    };
    auto make = [&](FamilyId f) {
      Word w = lift(f, n, p, q, opts);
      auto mu = mu_of(w);
      return Lift{std::move(w), std::move(mu)};
    };
    const Lift c0[] = {make(FamilyId::C0P), make(FamilyId::C0PP)};
    const Lift c1[] = {make(FamilyId::C1P), make(FamilyId::C1PP)};

    for (const auto& [f0, f1] : pairings) {
      const Lift& a = c0[f0 == FamilyId::C0P ? 0 : 1];
      const Lift& b = c1[f1 == FamilyId::C1P ? 0 : 1];
      auto skip = [&](std::string reason) {
        decision.skipped.push_back({n, f0, f1, std::move(reason)});
      };
      if (!a.mu || !b.mu) {
        skip("trivial lift");
        continue;
      }
      const bool a_power = a.mu->exponent >= 2;
      const bool b_power = b.mu->exponent >= 2;
      if ((a_power && !a.mu->root_is_primitive) ||
          (b_power && !b.mu->root_is_primitive)) {
        skip("proper power of a non-primitive element");
        continue;
      }

      std::optional<CommPowerWitness> found;
      if (!a_power && !b_power) {
        if (is_commutator_of_basis(disk)) {
          found = CommPowerWitness{Condition::i, x, y, 1, 1};
        }
      } else if (a_power != b_power) {
        found = comm_power_form(disk, a_power ? a.word : b.word);
      } else {
        found = comm_power_pair(disk, a.word, b.word);
      }
      if (found) {
        decision.decided = true;
        decision.witness = OneOneWitness{n, f0, f1, std::move(*found)};
        return decision;
      }
    }
  }
  return decision;
}

std::optional<SurgeryInvariant> surgery_invariant(
    std::int64_t p, std::int64_t q, const ClassifierOptions& opts) {
  const Word boundary = generate(FamilyId::DP, {0, p, q}, opts.length_cap);
  if (!is_primitive(boundary)) return std::nullopt;
  const AbelianImage a = exponent_sums(boundary);
  const AbelianImage b = exponent_sums(lift(FamilyId::L0, 0, p, q, opts));
  const std::int64_t det = a.ex * b.ey - a.ey * b.ex;
  if (det == 0) return std::nullopt;
  return SurgeryInvariant{boundary_slope(p, q), std::llabs(det)};
}

std::int64_t meridian_genus(std::int64_t p) {
  if (p == 0) throw DomainError("meridian_genus is undefined at p = 0");
  return 3 * std::llabs(p) - 1;
}

ClassificationReport classify(std::int64_t p, std::int64_t q,
                              const ClassifierOptions& opts) {
  ClassificationReport r;
  r.p = p;
  r.q = q;
  r.form = special_form(p, q);
  r.slope = boundary_slope(p, q);
  r.tunnel = tunnel_one(p, q, opts);
  r.surgery = surgery_invariant(p, q, opts);
  r.one_one.window = opts.window;
  if (r.form.kind == FormKind::General) {
    r.pi1_injective = pi1_injective(p, q, opts);
    r.atoroidality = atoroidality_certificate(p, q, opts);
    r.one_one = decide_11(p, q, opts);
  }
  return r;
}

void survey_stream(
    const SurveyGrid& grid, const ClassifierOptions& opts, unsigned threads,
    const std::function<void(const ClassificationReport&)>& sink) {
  if (grid.p_lo > grid.p_hi || grid.q_lo > grid.q_hi) {
    throw DomainError("survey range is empty");
  }
  const auto q_count = static_cast<std::size_t>(grid.q_hi - grid.q_lo + 1);
  const std::size_t total =
      static_cast<std::size_t>(grid.p_hi - grid.p_lo + 1) * q_count;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));

  std::vector<std::optional<ClassificationReport>> rows(total);
  std::vector<std::exception_ptr> errors(total);
  std::atomic<std::size_t> next{0};
  std::mutex mutex;
  std::condition_variable ready;

  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const std::int64_t p =
          grid.p_lo + static_cast<std::int64_t>(i / q_count);
      const std::int64_t q =
          grid.q_lo + static_cast<std::int64_t>(i % q_count);
      std::optional<ClassificationReport> row;
      std::exception_ptr err;
      try {
        row = classify(p, q, opts);
      } catch (...) {
        err = std::current_exception();
      }
      {
        std::lock_guard lock(mutex);
        rows[i] = std::move(row);
        errors[i] = err;
        if (err) next = total;  // stop handing out work
      }
      ready.notify_one();
    }
  };

  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  for (std::size_t i = 0; i < total; ++i) {
    std::unique_lock lock(mutex);
    ready.wait(lock, [&] { return rows[i].has_value() || errors[i]; });
    if (errors[i]) {
      lock.unlock();
      pool.clear();
      std::rethrow_exception(errors[i]);
    }
    ClassificationReport row = std::move(*rows[i]);
    rows[i].reset();
    lock.unlock();
    sink(row);
  }
}

std::vector<ClassificationReport> survey(const SurveyGrid& grid,
                                         const ClassifierOptions& opts,
                                         unsigned threads) {
  std::vector<ClassificationReport> out;
  survey_stream(grid, opts, threads,
                [&](const ClassificationReport& r) { out.push_back(r); });
  return out;
}

}  // namespace free2
