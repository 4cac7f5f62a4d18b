#include "wlink/scan.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "wlink/errors.hpp"
#include "wlink/milnor.hpp"
#include "wlink/orb.hpp"

namespace wlink {

bool passes_conditions(const WeightVector& w, std::int64_t d) {
  if (!is_well_formed(w).well_formed) return false;
  const GradedPiece piece = monomial_basis(w, d);
  return quasi_smooth_conditions(w, d, piece.basis).all_pass();
}

namespace {

Candidate make_candidate(const WeightVector& w, std::int64_t d, std::int64_t index) {
  Candidate c;
  c.weights.assign(w.values().begin(), w.values().end());
  c.degree = d;
  c.index = index;
  c.graded_dimension = static_cast<std::int64_t>(monomial_basis(w, d).dimension());
  try {
    QuickInvariants q;
    q.mu = milnor_number(w, d);
    q.betti = betti(divisor_of_delta(w, d));
    q.c1_sq = c1_squared(w, d);
    c.invariants = std::move(q);
  } catch (const Error& e) {
    if (error_class(e.code()) != ErrorClass::Inadmissible) throw;
    c.skip_reason = std::string(to_string(e.code())) + ": " + e.detail();
  }
  return c;
}

// All ascending tuples with first entry w0; already in lexicographic order.
std::vector<Candidate> scan_slice(std::int64_t w0, const ScanOptions& opt) {
  std::vector<Candidate> out;
  const std::int64_t W = opt.max_weight;
  for (std::int64_t w1 = w0; w1 <= W; ++w1) {
    for (std::int64_t w2 = w1; w2 <= W; ++w2) {
      for (std::int64_t w3 = w2; w3 <= W; ++w3) {
        const std::int64_t d = w0 + w1 + w2 + w3 - opt.index;
        if (d < 1) continue;
        if (std::gcd(std::gcd(w0, w1), std::gcd(w2, w3)) != 1) continue;
        const WeightVector w = validate_weights({w0, w1, w2, w3});
        if (!passes_conditions(w, d)) continue;
        out.push_back(make_candidate(w, d, opt.index));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Candidate> scan_candidates(const ScanOptions& options) {
  if (options.index < 1 || options.max_weight < 1) {
    throw Error(ErrorCode::InvalidInput, "scan_candidates",
                "need index >= 1 and max_weight >= 1, got " + std::to_string(options.index) +
                    " and " + std::to_string(options.max_weight));
  }
  const auto slices = static_cast<std::size_t>(options.max_weight);
  unsigned workers = options.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, slices));

  std::vector<std::vector<Candidate>> results(slices);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    try {
      for (std::size_t s = next.fetch_add(1); s < slices; s = next.fetch_add(1)) {
        results[s] = scan_slice(static_cast<std::int64_t>(s) + 1, options);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(slices);
    }
  };

  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Candidate> merged;
  for (auto& slice : results) {
    std::move(slice.begin(), slice.end(), std::back_inserter(merged));
  }
  return merged;
}

}  // namespace wlink
