#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "regans/automata.hpp"
#include "regans/error.hpp"

namespace regans {

/// Strongly connected components of a DFA's transition graph.
/// Components are numbered in reverse topological order of the
/// condensation: every condensation edge goes from a higher to a lower id.
struct SccDecomposition {
  std::vector<int> component_of;
  std::vector<std::vector<StateId>> members;
  /// Deduplicated condensation edges, successors[c] = components reached from c.
  std::vector<std::vector<int>> successors;

  std::size_t size() const noexcept { return members.size(); }
};

/// Iterative Tarjan.
inline SccDecomposition scc_decompose(const Dfa& dfa) {
  const std::size_t n = dfa.num_states();
  const std::size_t k = dfa.num_symbols();
  SccDecomposition out;
  out.component_of.assign(n, -1);
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<StateId> stack;
  int counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<std::pair<StateId, std::size_t>> frames{{static_cast<StateId>(root), 0}};
    index[root] = low[root] = counter++;
    stack.push_back(static_cast<StateId>(root));
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [q, s] = frames.back();
      if (s < k) {
        StateId t = dfa.next(q, static_cast<int>(s++));
        if (t == kNoState) continue;
        if (index[t] == -1) {
          index[t] = low[t] = counter++;
          stack.push_back(t);
          on_stack[t] = true;
          frames.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[q] = std::min(low[q], index[t]);
        }
        continue;
      }
      const StateId done = q;
      frames.pop_back();
      if (!frames.empty()) {
        StateId parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        const int id = static_cast<int>(out.members.size());
        out.members.emplace_back();
        StateId v;
        do {
          v = stack.back();
          stack.pop_back();
          on_stack[v] = false;
          out.component_of[v] = id;
          out.members[id].push_back(v);
        } while (v != done);
        std::sort(out.members[id].begin(), out.members[id].end());
      }
    }
  }

  out.successors.resize(out.members.size());
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t s = 0; s < k; ++s) {
      StateId t = dfa.next(static_cast<StateId>(q), static_cast<int>(s));
      if (t == kNoState) continue;
      const int from = out.component_of[q];
      const int to = out.component_of[t];
      if (from != to) out.successors[from].push_back(to);
    }
  }
  for (auto& succ : out.successors) {
    std::sort(succ.begin(), succ.end());
    succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
  }
  return out;
}

/// Exact growth pattern of one component's adjacency submatrix.
enum class SccClass {
  Trivial,    ///< single state without self-loop, local index 0
  Cycle,      ///< a simple cycle, local index exactly 1
  Expanding,  ///< local index > 1
};

/// Integer-only test: a strongly connected component is a simple cycle iff
/// each member has exactly one transition staying inside the component.
inline SccClass exact_scc_class(const SccDecomposition& scc, int component, const Dfa& dfa) {
  const auto& members = scc.members.at(component);
  bool all_one = true;
  std::size_t total = 0;
  for (StateId q : members) {
    std::size_t inside = 0;
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(q, static_cast<int>(s));
      if (t != kNoState && scc.component_of[t] == component) ++inside;
    }
    total += inside;
    all_one = all_one && inside == 1;
  }
  if (total == 0) return SccClass::Trivial;
  return all_one ? SccClass::Cycle : SccClass::Expanding;
}

enum class GrowthClass { Finite, Polynomial, Exponential };

inline std::string to_string(GrowthClass c) {
  switch (c) {
    case GrowthClass::Finite: return "finite";
    case GrowthClass::Polynomial: return "polynomial";
    case GrowthClass::Exponential: return "exponential";
  }
  return {};
}

struct PowerIterationOptions {
  double tolerance = 1e-13;
  int max_iterations = 10000;
};

struct SpectralEstimate {
  double value = 0.0;
  /// Change of the estimate in the last iteration.
  double residual = 0.0;
  int iterations = 0;
};

/// Frobenius root of one strongly connected component's adjacency submatrix.
/// Power iteration runs on (M + I), which is primitive even when M is
/// periodic; the shift is subtracted from the result.
inline SpectralEstimate component_frobenius_root(const SccDecomposition& scc, int component, const Dfa& dfa,
                                                 const PowerIterationOptions& options = {}) {
  const auto& members = scc.members.at(component);
  const std::size_t n = members.size();
  std::vector<double> shifted(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i * n + i] = 1.0;
    for (std::size_t s = 0; s < dfa.num_symbols(); ++s) {
      StateId t = dfa.next(members[i], static_cast<int>(s));
      if (t == kNoState || scc.component_of[t] != component) continue;
      const auto j = static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), t) - members.begin());
      shifted[i * n + j] += 1.0;
    }
  }
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), y(n);
  SpectralEstimate est;
  double previous = 0.0;
  for (est.iterations = 1; est.iterations <= options.max_iterations; ++est.iterations) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += shifted[i * n + j] * x[j];
      y[i] = acc;
      norm += acc;
    }
    // x is kept at unit 1-norm, so the growth of the 1-norm estimates the root.
    const double lambda = norm;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    est.residual = std::abs(lambda - previous);
    est.value = lambda - 1.0;
    if (est.iterations > 1 && est.residual < options.tolerance) break;
    previous = lambda;
  }
  est.iterations = std::min(est.iterations, options.max_iterations);
  return est;
}

/// Growth summary of a trim DFA's language.
struct GrowthInfo {
  GrowthClass growth_class = GrowthClass::Finite;
  /// Frobenius root of the adjacency matrix: exactly 0 or 1 for finite and
  /// polynomial languages, a power-iteration estimate otherwise.
  double index = 0.0;
  double index_tolerance = 0.0;
  /// Undefined (0) for finite languages.
  int polynomial_index = 0;
  std::size_t scc_count = 0;
};

namespace detail {

struct ComponentIndices {
  std::vector<SccClass> classes;
  std::vector<double> roots;
  std::vector<double> residuals;
};

inline ComponentIndices component_indices(const SccDecomposition& scc, const Dfa& dfa) {
  ComponentIndices out;
  for (std::size_t c = 0; c < scc.size(); ++c) {
    const SccClass cls = exact_scc_class(scc, static_cast<int>(c), dfa);
    out.classes.push_back(cls);
    if (cls == SccClass::Expanding) {
      SpectralEstimate est = component_frobenius_root(scc, static_cast<int>(c), dfa);
      out.roots.push_back(est.value);
      out.residuals.push_back(est.residual);
    } else {
      out.roots.push_back(cls == SccClass::Cycle ? 1.0 : 0.0);
      out.residuals.push_back(0.0);
    }
  }
  return out;
}

}  // namespace detail

/// Tolerance under which two expanding components count as attaining the
/// same index when marking maximal components.
inline constexpr double kIndexMatchTolerance = 1e-6;

inline GrowthInfo analyze_growth(const Dfa& dfa) {
  require_trim(dfa);
  const SccDecomposition scc = scc_decompose(dfa);
  const detail::ComponentIndices comps = detail::component_indices(scc, dfa);
  GrowthInfo info;
  info.scc_count = scc.size();

  const SccClass top = comps.classes.empty() ? SccClass::Trivial
                                             : *std::max_element(comps.classes.begin(), comps.classes.end());
  std::vector<bool> marked(scc.size(), false);
  switch (top) {
    case SccClass::Trivial:
      info.growth_class = GrowthClass::Finite;
      return info;
    case SccClass::Cycle:
      info.growth_class = GrowthClass::Polynomial;
      info.index = 1.0;
      for (std::size_t c = 0; c < scc.size(); ++c) marked[c] = comps.classes[c] == SccClass::Cycle;
      break;
    case SccClass::Expanding: {
      info.growth_class = GrowthClass::Exponential;
      std::size_t best = 0;
      for (std::size_t c = 0; c < scc.size(); ++c) {
        if (comps.roots[c] > comps.roots[best]) best = c;
      }
      info.index = comps.roots[best];
      info.index_tolerance = comps.residuals[best];
      for (std::size_t c = 0; c < scc.size(); ++c) {
        marked[c] = comps.classes[c] == SccClass::Expanding &&
                    std::abs(comps.roots[c] - info.index) <= kIndexMatchTolerance;
      }
      break;
    }
  }

  // Longest path in the condensation counting marked components. Successors
  // have lower ids, so increasing id order is a valid evaluation order.
  std::vector<int> best_from(scc.size(), 0);
  int best = 0;
  for (std::size_t c = 0; c < scc.size(); ++c) {
    int tail = 0;
    for (int succ : scc.successors[c]) tail = std::max(tail, best_from[succ]);
    best_from[c] = tail + (marked[c] ? 1 : 0);
    best = std::max(best, best_from[c]);
  }
  info.polynomial_index = best - 1;
  return info;
}

/// Index and growth class of L(dfa).
inline std::pair<double, GrowthClass> index(const Dfa& dfa) {
  GrowthInfo info = analyze_growth(dfa);
  return {info.index, info.growth_class};
}

inline int polynomial_index(const Dfa& dfa) {
  GrowthInfo info = analyze_growth(dfa);
  if (info.growth_class == GrowthClass::Finite) {
    throw FiniteLanguageError("polynomial index is undefined for a finite language");
  }
  return info.polynomial_index;
}

/// Limit of the compression ratio of a base conversion between two infinite
/// languages, from their growth summaries.
struct CrPrediction {
  enum class Kind { Ratio, Infinite, Zero, IndeterminateFinite };
  Kind kind = Kind::Ratio;
  double ratio = 0.0;  ///< meaningful for Kind::Ratio only

  std::string to_string() const {
    switch (kind) {
      case Kind::Ratio: return std::to_string(ratio);
      case Kind::Infinite: return "infinite";
      case Kind::Zero: return "zero";
      case Kind::IndeterminateFinite: return "indeterminate-finite";
    }
    return {};
  }
};

inline CrPrediction predict_cr(const GrowthInfo& src, const GrowthInfo& dst) {
  if (src.growth_class == GrowthClass::Finite || dst.growth_class == GrowthClass::Finite) {
    throw FiniteLanguageError("compression ratio needs two infinite languages");
  }
  using Kind = CrPrediction::Kind;
  if (dst.growth_class == GrowthClass::Exponential) {
    // log 1 = 0 for a polynomial source.
    const double num = src.growth_class == GrowthClass::Exponential ? std::log(src.index) : 0.0;
    return {Kind::Ratio, num / std::log(dst.index)};
  }
  if (src.growth_class == GrowthClass::Exponential) return {Kind::Infinite, 0.0};
  if (src.polynomial_index < dst.polynomial_index) return {Kind::Zero, 0.0};
  if (src.polynomial_index > dst.polynomial_index) return {Kind::Infinite, 0.0};
  return {Kind::IndeterminateFinite, 0.0};
}

}  // namespace regans
