// Copyright 2026 The Schinzel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Witness search over a coefficient box. Candidates are produced
// sequentially (shell by shell for exhaustive runs, from one seeded stream
// for random runs), verified in fixed-size batches that may be spread over
// worker threads, and merged in candidate order so the report does not
// depend on the thread count.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

#include "schinzel/errors.hpp"
#include "schinzel/factor/multivariate.hpp"
#include "schinzel/multipoly.hpp"
#include "schinzel/rings.hpp"
#include "schinzel/search/problem.hpp"
#include "schinzel/search/space.hpp"

namespace schinzel {

enum class SearchStatus { Found, ExhaustedNone, BudgetExhausted };

inline std::string to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::ExhaustedNone: return "exhaustively-none";
    case SearchStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

inline int exit_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return 0;
    case SearchStatus::ExhaustedNone: return 2;
    case SearchStatus::BudgetExhausted: return 3;
  }
  return 1;
}

template <class R>
struct Witness {
  std::uint64_t index = 0;            // 1-based candidate ordinal
  std::vector<MultiPoly<R>> M;        // one per y variable
  std::vector<MultiPoly<R>> images;   // P_i(x, M)
  bool verified = false;
};

template <class R>
struct SearchReport {
  SearchStatus status = SearchStatus::BudgetExhausted;
  bool complete = false;  // the whole box was examined
  std::uint64_t tested = 0;
  std::uint64_t hits = 0;
  std::uint64_t budget = 0;
  std::uint64_t seed = 0;
  Strategy strategy = Strategy::Exhaustive;
  mpz_class box_size;
  std::map<std::string, std::uint64_t> rejected;
  std::vector<Witness<R>> witnesses;
  std::vector<std::string> warnings;
};

namespace search_detail {

/// Enumerates digit tuples shell by shell: shell L holds the tuples whose
/// largest coordinate level is exactly L. Coordinate 0 varies fastest.
template <class R>
class ShellEnumerator {
 public:
  ShellEnumerator(const CoordinateSpace<R>& space, std::size_t coords)
      : space_(space), digits_(coords, 0) {
    limit_ = space_.count_up_to(0);
    fresh_ = limit_ > 0;
    if (!fresh_) next_level();
  }

  bool next(std::vector<std::size_t>& out) {
    for (;;) {
      if (done_) return false;
      if (!fresh_ && !advance()) {
        next_level();
        continue;
      }
      fresh_ = false;
      if (level_ == 0 || in_shell()) {
        out = digits_;
        return true;
      }
    }
  }

 private:
  bool advance() {
    for (auto& d : digits_) {
      if (++d < limit_) return true;
      d = 0;
    }
    return false;
  }

  bool in_shell() const {
    for (auto d : digits_) {
      if (d >= previous_) return true;
    }
    return false;
  }

  void next_level() {
    for (;;) {
      if (level_ >= space_.max_level()) {
        done_ = true;
        return;
      }
      ++level_;
      previous_ = limit_;
      limit_ = space_.count_up_to(level_);
      if (limit_ > previous_) break;
    }
    std::fill(digits_.begin(), digits_.end(), 0);
    fresh_ = true;
  }

  const CoordinateSpace<R>& space_;
  std::vector<std::size_t> digits_;
  unsigned level_ = 0;
  std::size_t limit_ = 0, previous_ = 0;
  bool fresh_ = false, done_ = false;
};

template <class R>
std::vector<MultiPoly<R>> build_candidate(const SchinzelProblem<R>& prob,
                                          const CoordinateSpace<R>& space,
                                          const std::vector<std::size_t>& digits) {
  const std::size_t S = prob.support.size();
  std::vector<MultiPoly<R>> M;
  for (std::size_t k = 0; k < prob.m(); ++k) {
    MultiPoly<R> mk(prob.ring, prob.n());
    for (std::size_t j = 0; j < S; ++j) mk.add_term(prob.support[j], space.values[digits[k * S + j]]);
    M.push_back(std::move(mk));
  }
  return M;
}

template <class R>
std::size_t max_u_degree(const MultiPoly<R>& f) {
  std::size_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, c.size() - 1);
  return d;
}

/// Images P_i(x, M) by sequential specialization of y_1..y_m. Sets `reason`
/// when an intermediate polynomial degenerates or becomes reducible.
template <class R>
std::vector<MultiPoly<R>> specialize(const SchinzelProblem<R>& prob,
                                     const std::vector<MultiPoly<R>>& M,
                                     std::optional<std::string>* reason) {
  const std::size_t n = prob.n(), m = prob.m();
  std::vector<MultiPoly<R>> cur = prob.P;
  for (std::size_t k = 0; k < m; ++k) {
    const auto Mk = extend_vars(M[k], n + m);
    for (auto& c : cur) c = substitute_var(c, n + k, Mk);
    if (k + 1 == m || !reason) continue;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (*degree_in_range(prob.P[i], n + k + 1, n + m) == 0) continue;
      if (cur[i].is_zero() || *degree_in_range(cur[i], n + k + 1, n + m) == 0) {
        *reason = "intermediate_degenerate";
        return {};
      }
      if (!is_irreducible(cur[i]).irreducible) {
        *reason = "intermediate_reducible";
        return {};
      }
    }
  }
  for (auto& c : cur) c = truncate_vars(c, n);
  return cur;
}

/// Reason an image fails to be irreducible in R[x], or nullopt.
template <class R>
std::optional<std::string> image_failure(const MultiPoly<R>& F) {
  if (F.is_constant()) return std::string("constant_image");
  const auto cert = is_irreducible(F);
  if (cert.irreducible) return std::nullopt;
  if (cert.reason == "content") return std::string("content_nonunit");
  return std::string("reducible_over_K");
}

template <class R>
struct Outcome {
  std::optional<std::string> reason;
  std::vector<MultiPoly<R>> M;
  std::vector<MultiPoly<R>> images;
};

template <class R>
Outcome<R> evaluate(const SchinzelProblem<R>& prob, std::vector<MultiPoly<R>> M) {
  Outcome<R> out;
  const auto& c = prob.constraints;
  const R& ring = prob.ring;
  for (const auto& mk : M) {
    for (std::size_t j = 0; j < c.exact_degree.size(); ++j) {
      if (c.exact_degree[j] && (mk.is_zero() || *degree_in(mk, j) != prob.degrees[j])) {
        out.reason = "degree_shortfall";
        return out;
      }
    }
    if constexpr (is_poly_ring_v<R>) {
      if (c.deg_u_target) {
        const auto p = ring.characteristic();
        const std::size_t target = p == 0 ? *c.deg_u_target : p * *c.deg_u_target;
        if (mk.is_zero() || max_u_degree(mk) != target) {
          out.reason = "degree_shortfall";
          return out;
        }
      }
    }
    if (c.coprime_pair) {
      const auto g = ring_gcd(ring, mk.coeff(c.coprime_pair->first), mk.coeff(c.coprime_pair->second));
      if (!ring.is_unit(g)) {
        out.reason = "coprimality";
        return out;
      }
    }
  }
  std::optional<std::string> reason;
  auto images = specialize(prob, M, &reason);
  if (reason) {
    out.reason = reason;
    return out;
  }
  for (const auto& F : images) {
    if ((out.reason = image_failure(F))) return out;
  }
  if (prob.extra) {
    if ((out.reason = prob.extra(M, images))) return out;
  }
  out.M = std::move(M);
  out.images = std::move(images);
  return out;
}

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t; i < count; i += threads) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline constexpr std::size_t kBatchSize = 256;

}  // namespace search_detail

/// Images P_i(x, M) for a candidate tuple, without intermediate checks.
template <class R>
std::vector<MultiPoly<R>> specialize_images(const SchinzelProblem<R>& prob,
                                            const std::vector<MultiPoly<R>>& M) {
  if (M.size() != prob.m()) throw DomainError("need one M per y variable");
  return search_detail::specialize(prob, M, nullptr);
}

/// True iff every P_i(x, M) is irreducible in R[x].
template <class R>
bool verify_witness(const SchinzelProblem<R>& prob, const std::vector<MultiPoly<R>>& M) {
  for (const auto& F : specialize_images(prob, M)) {
    if (search_detail::image_failure(F)) return false;
  }
  return true;
}

/// Searches the box for witnesses M (one per y variable). With keep = false
/// only counts are recorded.
template <class R>
SearchReport<R> schinzel_search(const SchinzelProblem<R>& prob, bool keep = true) {
  using namespace search_detail;
  const auto& c = prob.constraints;
  const auto space = resolve_space(prob);
  const std::size_t coords = prob.m() * prob.support.size();

  SearchReport<R> report;
  report.budget = c.budget;
  report.seed = c.seed;
  report.strategy = c.strategy;
  report.warnings = prob.warnings;
  mpz_pow_ui(report.box_size.get_mpz_t(), mpz_class(static_cast<unsigned long>(space.size())).get_mpz_t(),
             coords);

  ShellEnumerator<R> shells(space, coords);
  std::mt19937_64 rng(c.seed);
  bool exhausted = false, stop = false;
  std::vector<std::size_t> digits(coords);

  // Batches start at one candidate per thread and double up to kBatchSize,
  // so an early witness does not pay for a full batch. The in-order merge
  // makes the report independent of the batch sizes.
  std::size_t batch_size = std::max<std::size_t>(1, c.threads);
  while (!stop) {
    std::vector<std::vector<MultiPoly<R>>> batch;
    while (batch.size() < batch_size && report.tested + batch.size() < c.budget) {
      if (c.strategy == Strategy::Exhaustive) {
        if (!shells.next(digits)) {
          exhausted = true;
          break;
        }
      } else {
        for (auto& d : digits) d = static_cast<std::size_t>(rng() % space.size());
      }
      batch.push_back(build_candidate(prob, space, digits));
    }
    if (batch.empty()) {
      if (c.strategy == Strategy::Exhaustive && !exhausted) {
        // Budget spent: check whether the box happens to be finished.
        exhausted = !shells.next(digits);
      }
      break;
    }
    batch_size = std::min(kBatchSize, 2 * batch_size);
    std::vector<Outcome<R>> outcomes(batch.size());
    parallel_for(batch.size(), c.threads, [&](std::size_t i) { outcomes[i] = evaluate(prob, batch[i]); });
    for (auto& o : outcomes) {
      ++report.tested;
      if (o.reason) {
        ++report.rejected[*o.reason];
        continue;
      }
      ++report.hits;
      if (keep) report.witnesses.push_back({report.tested, std::move(o.M), std::move(o.images), false});
      if (c.max_witnesses != 0 && report.hits >= c.max_witnesses) {
        stop = true;
        break;
      }
    }
    if (exhausted) break;
  }
  report.complete = c.strategy == Strategy::Exhaustive && exhausted && !stop;
  if (report.complete) {
    report.status = report.hits > 0 ? SearchStatus::Found : SearchStatus::ExhaustedNone;
  } else {
    report.status = report.hits > 0 ? SearchStatus::Found : SearchStatus::BudgetExhausted;
  }

  for (auto& w : report.witnesses) {
    w.verified = verify_witness(prob, w.M);
    if (!w.verified) throw Error("witness failed re-verification");
  }
  return report;
}

/// gcd over the box of prod_i P_i(x, M) (P_i in x1..xn, y). Finite fields:
/// the whole box is enumerated (at most 2^20 candidates). Infinite rings:
/// `samples` random candidates. Returns the gcd when it is not a unit.
template <class R>
std::optional<MultiPoly<R>> check_fixed_divisor(const SchinzelProblem<R>& prob,
                                                std::uint64_t samples = 64) {
  using namespace search_detail;
  if (prob.m() != 1) throw DomainError("fixed-divisor check supports a single y variable");
  const auto& c = prob.constraints;
  const auto space = resolve_space(prob);
  const std::size_t coords = prob.support.size();
  const R& ring = prob.ring;

  std::optional<MultiPoly<R>> g;
  auto absorb = [&](const std::vector<std::size_t>& digits) {
    auto M = build_candidate(prob, space, digits);
    auto prod = MultiPoly<R>::constant(ring, prob.n(), ring.one());
    for (const auto& F : specialize_images(prob, M)) prod *= F;
    if (prod.is_zero()) return false;
    g = g ? poly_gcd(*g, prod) : normalize(prod);
    return g->is_constant() && ring.is_unit(g->constant_term());
  };

  std::vector<std::size_t> digits(coords);
  if constexpr (R::is_finite) {
    mpz_class box;
    mpz_pow_ui(box.get_mpz_t(), mpz_class(static_cast<unsigned long>(space.size())).get_mpz_t(), coords);
    if (box > (1 << 20)) throw DomainError("box too large for the fixed-divisor check");
    ShellEnumerator<R> shells(space, coords);
    while (shells.next(digits)) {
      if (absorb(digits)) return std::nullopt;
    }
  } else {
    std::mt19937_64 rng(c.seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      for (auto& d : digits) d = static_cast<std::size_t>(rng() % space.size());
      if (absorb(digits)) return std::nullopt;
    }
  }
  if (!g || (g->is_constant() && ring.is_unit(g->constant_term()))) return std::nullopt;
  return g;
}

struct DensityEstimate {
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double fraction = 0;
  double lower = 0;  // Wilson 95% interval
  double upper = 0;
  std::map<std::string, std::uint64_t> rejected;
};

inline DensityEstimate wilson_interval(std::uint64_t hits, std::uint64_t n) {
  DensityEstimate e;
  e.samples = n;
  e.hits = hits;
  if (n == 0) return e;
  const double z = 1.959963984540054;
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(hits) / nn;
  const double denom = 1 + z * z / nn;
  const double center = (p + z * z / (2 * nn)) / denom;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / denom;
  e.fraction = p;
  e.lower = std::max(0.0, center - half);
  e.upper = std::min(1.0, center + half);
  return e;
}

/// Fraction of uniformly sampled box candidates that are witnesses.
template <class R>
DensityEstimate density_probe(SchinzelProblem<R> prob, std::uint64_t samples) {
  if (samples == 0) throw DomainError("density probe needs at least one sample");
  prob.constraints.strategy = Strategy::Random;
  prob.constraints.budget = samples;
  prob.constraints.max_witnesses = 0;
  const auto report = schinzel_search(prob, false);
  auto e = wilson_interval(report.hits, report.tested);
  e.rejected = report.rejected;
  return e;
}

}  // namespace schinzel
