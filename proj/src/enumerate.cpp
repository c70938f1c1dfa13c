#include "gsgp/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

#include "gsgp/constructors.hpp"

namespace gsgp {

namespace {

constexpr Elem kUnset = -1;

int cell_index(int m, int gamma, Elem a, Elem b) { return (gamma * m + a) * m + b; }

// Checks every associativity triple whose four lookups are all
// determined in the partial table; undetermined triples are skipped and
// re-examined once later assignments pin them down.
bool partial_consistent(const std::vector<Elem>& t, int m, int g) {
  for (int alpha = 0; alpha < g; ++alpha)
    for (int beta = 0; beta < g; ++beta)
      for (Elem a = 0; a < m; ++a)
        for (Elem b = 0; b < m; ++b) {
          Elem ab = t[cell_index(m, alpha, a, b)];
          for (Elem c = 0; c < m; ++c) {
            if (ab >= 0) {
              Elem lhs = t[cell_index(m, beta, ab, c)];
              if (lhs >= 0) {
                Elem bc = t[cell_index(m, beta, b, c)];
                if (bc >= 0) {
                  Elem rhs = t[cell_index(m, alpha, a, bc)];
                  if (rhs >= 0 && lhs != rhs) return false;
                }
              }
            }
          }
        }
  return true;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void apply_relabeling(const std::vector<Elem>& src, std::vector<Elem>& dst, int m, int g,
                      const std::vector<int>& elem_perm, const std::vector<int>& gamma_perm,
                      bool flip) {
  for (int gamma = 0; gamma < g; ++gamma)
    for (Elem a = 0; a < m; ++a)
      for (Elem b = 0; b < m; ++b) {
        Elem v = src[cell_index(m, gamma, a, b)];
        if (flip)
          dst[cell_index(m, gamma_perm[gamma], elem_perm[b], elem_perm[a])] = elem_perm[v];
        else
          dst[cell_index(m, gamma_perm[gamma], elem_perm[a], elem_perm[b])] = elem_perm[v];
      }
}

// Depth-first fill of one subtree rooted at a fixed prefix of cells.
struct SubtreeRun {
  const EnumSpec* spec;
  std::vector<std::vector<int>> elem_perms;
  std::vector<std::vector<int>> gamma_perms;

  std::vector<Elem> table;
  int cells = 0;
  uint64_t nodes = 0;
  std::optional<uint64_t> node_cap;  // absolute cap on this->nodes
  bool capped = false;
  bool stopped = false;  // consumer asked to stop

  std::vector<std::vector<Elem>> emitted;

  bool leaf_accept() const {
    if (!spec->up_to_iso) return true;
    const std::vector<Elem>& t = table;
    std::vector<Elem> candidate(t.size());
    int flips = spec->include_anti_iso ? 2 : 1;
    for (const auto& ep : elem_perms)
      for (const auto& gp : gamma_perms)
        for (int f = 0; f < flips; ++f) {
          apply_relabeling(t, candidate, spec->m, spec->g, ep, gp, f == 1);
          if (candidate < t) return false;
        }
    return true;
  }

  void dfs(int pos) {
    if (stopped || capped) return;
    if (pos == cells) {
      if (leaf_accept()) emitted.push_back(table);
      return;
    }
    for (Elem v = 0; v < spec->m; ++v) {
      ++nodes;
      if (node_cap && nodes > *node_cap) {
        capped = true;
        return;
      }
      table[pos] = v;
      if (partial_consistent(table, spec->m, spec->g)) dfs(pos + 1);
      table[pos] = kUnset;
      if (stopped || capped) return;
    }
  }
};

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<int>(std::min(hw, 8u));
}

}  // namespace

std::vector<Elem> canonical_form(const std::vector<Elem>& flat, int m, int g,
                                 bool include_anti_iso) {
  std::vector<Elem> best = flat;
  std::vector<Elem> candidate(flat.size());
  auto elem_perms = permutations_of(m);
  auto gamma_perms = permutations_of(g);
  int flips = include_anti_iso ? 2 : 1;
  for (const auto& ep : elem_perms)
    for (const auto& gp : gamma_perms)
      for (int f = 0; f < flips; ++f) {
        apply_relabeling(flat, candidate, m, g, ep, gp, f == 1);
        if (candidate < best) best = candidate;
      }
  return best;
}

bool is_canonical(const std::vector<Elem>& flat, int m, int g, bool include_anti_iso) {
  return canonical_form(flat, m, g, include_anti_iso) == flat;
}

EnumStats enumerate(const EnumSpec& spec, const EnumCallback& cb, int workers) {
  if (spec.m < 1 || spec.g < 1) throw std::invalid_argument("enumerate: need m, g >= 1");
  if (workers <= 0) workers = default_workers();
  if (spec.budget) workers = 1;  // budget semantics follow the sequential node order

  const int cells = spec.g * spec.m * spec.m;
  EnumStats stats;

  auto elem_perms = spec.up_to_iso ? permutations_of(spec.m) : std::vector<std::vector<int>>{};
  auto gamma_perms = spec.up_to_iso ? permutations_of(spec.g) : std::vector<std::vector<int>>{};

  auto deliver = [&](const std::vector<Elem>& flat) -> bool {
    RawTable raw;
    raw.m = spec.m;
    raw.g = spec.g;
    raw.entries = flat;
    GammaSemigroup M = must_validate(raw);
    if (spec.require_zero && !M.has_zero()) return true;
    ++stats.emitted;
    return cb(M);
  };

  // Split the forest on a prefix of cells so that subtrees outnumber the
  // workers; prefix enumeration itself is part of the node count.
  int prefix_len = 0;
  std::vector<std::vector<Elem>> prefixes;
  prefixes.emplace_back();  // the empty prefix
  if (workers > 1) {
    while (prefix_len < cells && static_cast<int>(prefixes.size()) < 4 * workers) {
      std::vector<std::vector<Elem>> next;
      std::vector<Elem> table(cells, kUnset);
      for (const auto& p : prefixes) {
        std::copy(p.begin(), p.end(), table.begin());
        for (Elem v = 0; v < spec.m; ++v) {
          ++stats.nodes;
          table[prefix_len] = v;
          if (partial_consistent(table, spec.m, spec.g)) {
            std::vector<Elem> q = p;
            q.push_back(v);
            next.push_back(std::move(q));
          }
        }
        std::fill(table.begin(), table.begin() + prefix_len + 1, kUnset);
      }
      ++prefix_len;
      prefixes = std::move(next);
      if (prefixes.empty()) break;
    }
  }

  std::vector<SubtreeRun> runs(prefixes.size());
  for (size_t i = 0; i < prefixes.size(); ++i) {
    SubtreeRun& run = runs[i];
    run.spec = &spec;
    run.elem_perms = elem_perms;
    run.gamma_perms = gamma_perms;
    run.cells = cells;
    run.table.assign(cells, kUnset);
    std::copy(prefixes[i].begin(), prefixes[i].end(), run.table.begin());
  }

  if (workers == 1) {
    for (SubtreeRun& run : runs) {
      if (spec.budget) {
        if (*spec.budget <= stats.nodes) {
          stats.budget_exhausted = true;
          return stats;
        }
        run.node_cap = *spec.budget - stats.nodes;
      }
      run.dfs(prefix_len);
      stats.nodes += run.nodes;
      for (const auto& flat : run.emitted)
        if (!deliver(flat)) return stats;  // consumer stop, not exhaustion
      if (run.capped) {
        stats.budget_exhausted = true;
        return stats;
      }
    }
    return stats;
  }

  std::atomic<size_t> next_run{0};
  auto worker_fn = [&]() {
    for (;;) {
      size_t i = next_run.fetch_add(1);
      if (i >= runs.size()) return;
      runs[i].dfs(prefix_len);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(worker_fn);
  for (auto& th : pool) th.join();

  // node stats first, so they match the sequential count even when the
  // consumer stops mid-stream
  for (const SubtreeRun& run : runs) stats.nodes += run.nodes;
  for (const SubtreeRun& run : runs)
    for (const auto& flat : run.emitted)
      if (!deliver(flat)) return stats;
  return stats;
}

std::vector<GammaSemigroup> enumerate_all(const EnumSpec& spec, int workers) {
  std::vector<GammaSemigroup> out;
  enumerate(
      spec,
      [&](const GammaSemigroup& M) {
        out.push_back(M);
        return true;
      },
      workers);
  return out;
}

std::vector<CensusEntry> census(int max_m, int max_g, const CensusOptions& options,
                                int workers) {
  if (max_m < 1 || max_g < 1) throw std::invalid_argument("census: need bounds >= 1");
  std::vector<CensusEntry> out;
  for (int m = 1; m <= max_m; ++m)
    for (int g = 1; g <= max_g; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      spec.up_to_iso = options.up_to_iso;
      spec.include_anti_iso = options.include_anti_iso;
      spec.require_zero = options.require_zero;
      uint64_t count = 0;
      enumerate(
          spec,
          [&](const GammaSemigroup&) {
            ++count;
            return true;
          },
          workers);
      out.push_back({m, g, count});
    }
  return out;
}

std::optional<GammaSemigroup> random_instance(int m, int g, uint64_t seed, int attempts) {
  if (m < 1 || g < 1) throw std::invalid_argument("random_instance: need m, g >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Elem> pick(0, m - 1);

  for (int k = 0; k < attempts; ++k) {
    RawTable raw;
    raw.m = m;
    raw.g = g;
    raw.entries.resize(g * m * m);
    for (Elem& e : raw.entries) e = pick(rng);
    ValidationResult res = validate(raw);
    if (res.ok()) return *std::move(res.value);
  }

  // stock fallback, randomly relabeled
  std::vector<Elem> flat(g * m * m);
  int family_count = (m >= 2 && g <= m - 1) ? 4 : 3;
  switch (rng() % family_count) {
    case 0:  // null: everything maps to element 0
      std::fill(flat.begin(), flat.end(), 0);
      break;
    case 1:  // left-zero
      for (int gamma = 0; gamma < g; ++gamma)
        for (Elem a = 0; a < m; ++a)
          for (Elem b = 0; b < m; ++b) flat[cell_index(m, gamma, a, b)] = a;
      break;
    case 2:  // right-zero
      for (int gamma = 0; gamma < g; ++gamma)
        for (Elem a = 0; a < m; ++a)
          for (Elem b = 0; b < m; ++b) flat[cell_index(m, gamma, a, b)] = b;
      break;
    default: {
      std::vector<Elem> gamma_subset(m - 1);
      std::iota(gamma_subset.begin(), gamma_subset.end(), 0);
      std::shuffle(gamma_subset.begin(), gamma_subset.end(), rng);
      gamma_subset.resize(g);
      std::sort(gamma_subset.begin(), gamma_subset.end());
      GammaSemigroup gz = group_with_zero(cyclic_group(m - 1), gamma_subset);
      flat.assign(gz.flat_table().begin(), gz.flat_table().end());
      break;
    }
  }

  std::vector<int> elem_perm(m), gamma_perm(g);
  std::iota(elem_perm.begin(), elem_perm.end(), 0);
  std::iota(gamma_perm.begin(), gamma_perm.end(), 0);
  std::shuffle(elem_perm.begin(), elem_perm.end(), rng);
  std::shuffle(gamma_perm.begin(), gamma_perm.end(), rng);
  std::vector<Elem> relabeled(flat.size());
  apply_relabeling(flat, relabeled, m, g, elem_perm, gamma_perm, false);

  RawTable raw;
  raw.m = m;
  raw.g = g;
  raw.entries = std::move(relabeled);
  ValidationResult res = validate(raw);
  if (!res.ok()) return std::nullopt;
  return *std::move(res.value);
}

StatementId problem_statement(int problem) {
  switch (problem) {
    case 1: return StatementId::Problem1;
    case 2: return StatementId::Problem2;
    case 3: return StatementId::Problem3;
  }
  throw std::invalid_argument("problem must be 1, 2 or 3");
}

SearchOutcome search_counterexample(int problem, int max_m, int max_g,
                                    std::optional<uint64_t> budget, int workers) {
  if (max_m < 1 || max_g < 1) throw std::invalid_argument("search: bounds must be >= 1");
  StatementId statement = problem_statement(problem);

  SearchOutcome outcome;
  outcome.problem = problem;
  outcome.max_m = max_m;
  outcome.max_g = max_g;

  for (int m = 1; m <= max_m && !outcome.counterexample; ++m)
    for (int g = 1; g <= max_g && !outcome.counterexample; ++g) {
      EnumSpec spec;
      spec.m = m;
      spec.g = g;
      if (budget) {
        if (*budget <= outcome.nodes) {
          outcome.budget_exhausted = true;
          return outcome;
        }
        spec.budget = *budget - outcome.nodes;
      }
      EnumStats stats = enumerate(
          spec,
          [&](const GammaSemigroup& M) {
            ++outcome.instances;
            CheckReport rep = check(M, statement);
            if (rep.verdict == Verdict::violated) {
              outcome.counterexample = SearchCounterexample{M, rep};
              return false;
            }
            return true;
          },
          workers);
      outcome.nodes += stats.nodes;
      if (stats.budget_exhausted) {
        outcome.budget_exhausted = true;
        return outcome;
      }
    }
  return outcome;
}

}  // namespace gsgp
