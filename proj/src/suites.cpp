#include "tspread/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>

#include "tspread/block_type.hpp"
#include "tspread/linear_quotients.hpp"
#include "tspread/oracle.hpp"
#include "tspread/sorting.hpp"
#include "tspread/spread.hpp"
#include "tspread/util.hpp"

namespace tspread {

namespace {

struct PointTask {
  std::string params;
  // Returns pass/fail detail; may also push informational notes.
  std::function<PointOutcome(const Deadline*, std::vector<PointOutcome>&)> run;
};

std::vector<CBounded> cbounded_grid(const GridBounds& bounds) {
  std::vector<CBounded> specs;
  for (int n = 1; n <= bounds.max_n; ++n)
    for (int d = 1; d <= bounds.max_d; ++d) {
      int c_cap = bounds.max_c == 0 ? d : std::min(bounds.max_c, d);
      for (int c = 1; c <= c_cap; ++c)
        for (int t = 0; t <= bounds.max_t; ++t) {
          CBounded spec{c, n, d, t};
          if (family_nonempty(spec)) specs.push_back(spec);
        }
    }
  return specs;
}

PointOutcome pass_point(std::string params) {
  return PointOutcome{std::move(params), true, false, ""};
}

PointOutcome fail_point(std::string params, std::string detail) {
  return PointOutcome{std::move(params), false, false, std::move(detail)};
}

using TaskBuilder = std::function<std::vector<PointTask>(const GridBounds&)>;

std::vector<PointTask> for_each_cbounded(
    const GridBounds& bounds,
    std::function<PointOutcome(const CBounded&, const Deadline*,
                               std::vector<PointOutcome>&)>
        check) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    tasks.push_back(PointTask{
        describe(spec),
        [spec, check](const Deadline* deadline,
                      std::vector<PointOutcome>& notes) {
          return check(spec, deadline, notes);
        }});
  }
  return tasks;
}

// ---- individual suites ----

std::vector<PointTask> build_linear_quotients(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline* deadline,
                 std::vector<PointOutcome>&) {
        LinearQuotientsResult res = verify_linear_quotients(spec, deadline);
        if (res.ok) return pass_point(describe(spec));
        return fail_point(describe(spec), res.detail);
      });
}

std::vector<PointTask> build_sortable(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline* deadline,
                 std::vector<PointOutcome>&) {
        SortClosureResult res = verify_sortable(spec, deadline);
        if (res.closed) return pass_point(describe(spec));
        return fail_point(describe(spec),
                          "sorting " + to_string(res.counterexample->first) +
                              ", " + to_string(res.counterexample->second) +
                              " leaves the generator set");
      });
}

std::vector<PointTask> build_l_exchange(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline* deadline,
                 std::vector<PointOutcome>&) {
        ExchangeResult res = verify_l_exchange(spec, 2, deadline);
        if (res.ok) return pass_point(describe(spec));
        return fail_point(describe(spec), res.detail);
      });
}

std::vector<PointTask> build_betti_shift(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline*,
                 std::vector<PointOutcome>&) {
        CBounded base{spec.c, spec.n - (spec.d - 1) * spec.t, spec.d, 0};
        if (betti_numbers(spec) != betti_numbers(base))
          return fail_point(describe(spec),
                            "betti numbers differ from " + describe(base));
        return pass_point(describe(spec));
      });
}

std::vector<PointTask> build_betti_oracle(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    MonomialIdeal ideal = generators(spec);
    if (ideal.size() > 25) continue;
    tasks.push_back(PointTask{
        describe(spec),
        [spec, ideal](const Deadline* deadline, std::vector<PointOutcome>&) {
          std::vector<long long> formula = betti_numbers(spec);
          BettiTable table = betti_table(ideal, 100000, deadline);
          for (std::size_t i = 0; i < formula.size(); ++i)
            if (table.total(static_cast<int>(i)) != formula[i])
              return fail_point(
                  describe(spec),
                  "oracle row sum " +
                      std::to_string(table.total(static_cast<int>(i))) +
                      " != formula " + std::to_string(formula[i]) + " at i=" +
                      std::to_string(i));
          if (table.projective_dimension() !=
              static_cast<int>(formula.size()) - 1)
            return fail_point(describe(spec), "projective dimension differs");
          if (!table.linear_for_degree(spec.d))
            return fail_point(describe(spec),
                              "oracle table is not concentrated on the "
                              "linear strand");
          return pass_point(describe(spec));
        }});
  }
  return tasks;
}

std::vector<PointTask> build_height(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline*,
                 std::vector<PointOutcome>&) {
        int closed = height_cbounded(spec);
        int oracle = height_oracle(generators(spec));
        if (closed != oracle)
          return fail_point(describe(spec),
                            "closed height " + std::to_string(closed) +
                                " != oracle " + std::to_string(oracle));
        return pass_point(describe(spec));
      });
}

std::vector<PointTask> build_spread(const GridBounds& bounds) {
  return for_each_cbounded(
      bounds, [](const CBounded& spec, const Deadline*,
                 std::vector<PointOutcome>& notes) {
        SpreadResult res = analytic_spread(spec);
        if (res.raw_closed_value) {
          if (res.discrepancy)
            return fail_point(
                describe(spec),
                "closed form " + std::to_string(*res.raw_closed_value) +
                    " != graph " + std::to_string(res.graph_value) +
                    " in case " + to_string(res.case_tag));
        } else {
          std::string detail =
              "case iii with r < c: graph value " +
              std::to_string(res.graph_value) + " shipped; literal form gives " +
              (res.literal_case3_value
                   ? std::to_string(*res.literal_case3_value)
                   : std::string("nothing"));
          notes.push_back(PointOutcome{describe(spec), true, false, detail});
        }
        return pass_point(describe(spec));
      });
}

std::vector<PointTask> build_cohen_macaulay(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    MonomialIdeal ideal = generators(spec);
    if (ideal.size() > 60) continue;
    tasks.push_back(PointTask{
        describe(spec),
        [spec, ideal](const Deadline* deadline, std::vector<PointOutcome>&) {
          bool formula = is_cohen_macaulay(spec);
          BettiTable table = betti_table(ideal, 100000, deadline);
          bool oracle =
              table.projective_dimension() + 1 == height_oracle(ideal);
          if (formula != oracle)
            return fail_point(describe(spec),
                              std::string("formula says ") +
                                  (formula ? "CM" : "not CM") +
                                  " but the oracle disagrees");
          return pass_point(describe(spec));
        }});
  }
  return tasks;
}

std::vector<PointTask> build_regularity_blocktype(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (int n = 3; n <= bounds.max_n; ++n)
    for (int d = 2; d <= bounds.max_d; ++d)
      for (int k = 2; k < n; ++k) {
        std::string params = describe(BlockType{n, d, 0, k});
        tasks.push_back(PointTask{
            params, [n, d, k, params](const Deadline*,
                                      std::vector<PointOutcome>&) {
              long long formula = regularity_blocktype(n, d, k);
              int socle = top_socle_degree(generators(BlockType{n, d, 0, k}));
              if (formula != socle)
                return fail_point(params,
                                  "formula " + std::to_string(formula) +
                                      " != socle search " +
                                      std::to_string(socle));
              return pass_point(params);
            }});
      }
  return tasks;
}

std::vector<PointTask> build_power_identity(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (int n = 3; n <= bounds.max_n; ++n)
    for (int d = 1; d <= bounds.max_d; ++d)
      for (int k = 2; k < n; ++k) {
        std::string params =
            describe(BlockType{n, d, 0, k}) + "^" + std::to_string(n - 1);
        tasks.push_back(PointTask{
            params, [n, d, k, params](const Deadline*,
                                      std::vector<PointOutcome>&) {
              if (!power_equals_mpower(n, d, k, n - 1))
                return fail_point(
                    params, "power n-1 is not the matching maximal-ideal power");
              return pass_point(params);
            }});
      }
  return tasks;
}

std::vector<PointTask> build_linres_powers(const GridBounds&) {
  // Small powers with an affordable homology box; the two named specs are
  // the contract, the rest widen the net.
  std::vector<std::pair<CBounded, int>> cases = {
      {{1, 4, 2, 0}, 1}, {{1, 4, 2, 0}, 2}, {{2, 4, 2, 0}, 1},
      {{2, 4, 2, 0}, 2}, {{1, 5, 2, 0}, 2}, {{2, 3, 3, 0}, 2},
  };
  std::vector<PointTask> tasks;
  for (auto [spec, s] : cases) {
    std::string params = describe(spec) + "^" + std::to_string(s);
    tasks.push_back(PointTask{
        params,
        [spec = spec, s = s, params](const Deadline* deadline,
                                     std::vector<PointOutcome>&) {
          MonomialIdeal pow = power(generators(spec), s);
          BettiTable table = betti_table(pow, 200000, deadline);
          if (!table.linear_for_degree(spec.d * s))
            return fail_point(params, "power lacks a linear resolution");
          return pass_point(params);
        }});
  }
  return tasks;
}

std::vector<PointTask> build_gap_soundness(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    MonomialIdeal ideal = generators(spec);
    if (ideal.size() > 200) continue;
    tasks.push_back(PointTask{
        describe(spec),
        [spec, ideal](const Deadline* deadline, std::vector<PointOutcome>&) {
          MonomialSet gset = generator_set(ideal);
          for (const Monomial& u : ideal.gens) {
            poll_deadline(deadline, "gap-soundness");
            std::vector<int> set = quotient_set(u, spec);
            std::vector<bool> in_set(static_cast<std::size_t>(spec.n) + 1,
                                     false);
            for (int i : set) in_set[static_cast<std::size_t>(i)] = true;
            for (int i = 1; i <= spec.n; ++i) {
              // Third path: a direct exchange scan, no colon and no
              // interval arithmetic.
              bool witness = false;
              for (int j = i + 1; j <= spec.n && !witness; ++j)
                if (u.exponents[static_cast<std::size_t>(j - 1)] > 0 &&
                    gset.count(exchange(u, i, j)))
                  witness = true;
              if (witness != in_set[static_cast<std::size_t>(i)])
                return fail_point(
                    describe(spec),
                    "index " + std::to_string(i) + " of " + to_string(u) +
                        (witness ? " has an exchange witness but is not in"
                                 : " is in") +
                        " the gap-interval set");
            }
          }
          return pass_point(describe(spec));
        }});
  }
  return tasks;
}

std::vector<PointTask> build_sorted_uniqueness(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    MonomialIdeal ideal = generators(spec);
    if (ideal.size() > 30 || ideal.size() < 2) continue;
    tasks.push_back(PointTask{
        describe(spec),
        [spec, ideal](const Deadline* deadline, std::vector<PointOutcome>&) {
          MonomialSet gset = generator_set(ideal);
          const auto& g = ideal.gens;
          int m = static_cast<int>(g.size());
          for (int r = 2; r <= 3; ++r) {
            std::map<std::vector<int>, std::vector<Monomial>> canonical;
            std::vector<int> combo(static_cast<std::size_t>(r), 0);
            while (true) {
              poll_deadline(deadline, "sorted-uniqueness");
              std::vector<Monomial> tuple;
              for (int idx : combo)
                tuple.push_back(g[static_cast<std::size_t>(idx)]);
              std::vector<Monomial> sorted = sort_tuple(tuple);
              if (!is_sorted_tuple(sorted))
                return fail_point(describe(spec),
                                  "redistribution is not sorted");
              for (const Monomial& m2 : sorted)
                if (!gset.count(m2))
                  return fail_point(describe(spec),
                                    "sorted tuple leaves the generator set");
              std::vector<int> prod(static_cast<std::size_t>(spec.n), 0);
              for (const Monomial& m2 : tuple)
                for (int q = 0; q < spec.n; ++q)
                  prod[static_cast<std::size_t>(q)] +=
                      m2.exponents[static_cast<std::size_t>(q)];
              auto [it, inserted] = canonical.try_emplace(prod, sorted);
              if (!inserted && it->second != sorted)
                return fail_point(describe(spec),
                                  "two sorted tuples share a product");
              if (is_sorted_tuple(tuple) && tuple != sorted)
                return fail_point(describe(spec),
                                  "a sorted tuple resorts to a different "
                                  "sorted tuple");
              // next multicombination
              int pos = r - 1;
              while (pos >= 0 && combo[static_cast<std::size_t>(pos)] == m - 1)
                --pos;
              if (pos < 0) break;
              int v = combo[static_cast<std::size_t>(pos)] + 1;
              for (int p = pos; p < r; ++p)
                combo[static_cast<std::size_t>(p)] = v;
            }
          }
          return pass_point(describe(spec));
        }});
  }
  return tasks;
}

std::vector<PointTask> build_rank_spread(const GridBounds& bounds) {
  std::vector<PointTask> tasks;
  for (const CBounded& spec : cbounded_grid(bounds)) {
    MonomialIdeal ideal = generators(spec);
    if (ideal.size() > 500) continue;
    tasks.push_back(PointTask{
        describe(spec),
        [spec, ideal](const Deadline*, std::vector<PointOutcome>&) {
          int via_graph = analytic_spread_graph(ideal);
          int via_rank = exponent_span_rank(ideal);
          if (via_graph != via_rank)
            return fail_point(describe(spec),
                              "graph value " + std::to_string(via_graph) +
                                  " != exponent-span rank " +
                                  std::to_string(via_rank));
          return pass_point(describe(spec));
        }});
  }
  return tasks;
}

const std::map<std::string, TaskBuilder>& suite_registry() {
  static const std::map<std::string, TaskBuilder> registry = {
      {"linear-quotients", build_linear_quotients},
      {"sortable", build_sortable},
      {"l-exchange", build_l_exchange},
      {"betti-shift", build_betti_shift},
      {"betti-oracle", build_betti_oracle},
      {"height", build_height},
      {"spread", build_spread},
      {"cohen-macaulay", build_cohen_macaulay},
      {"regularity-blocktype", build_regularity_blocktype},
      {"power-identity", build_power_identity},
      {"linres-powers", build_linres_powers},
      {"gap-soundness", build_gap_soundness},
      {"sorted-uniqueness", build_sorted_uniqueness},
      {"rank-spread", build_rank_spread},
  };
  return registry;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, builder] : suite_registry()) names.push_back(name);
  return names;
}

SuiteReport run_suite(const std::string& name, const GridBounds& bounds,
                      double timeout_secs, bool parallel) {
  auto it = suite_registry().find(name);
  if (it == suite_registry().end())
    throw std::invalid_argument("unknown suite: " + name);

  auto start = std::chrono::steady_clock::now();
  std::vector<PointTask> tasks = it->second(bounds);

  struct Slot {
    PointOutcome outcome;
    std::vector<PointOutcome> notes;
  };
  std::vector<Slot> slots(tasks.size());

  auto run_one = [&](std::size_t idx) {
    std::optional<Deadline> deadline;
    if (timeout_secs > 0) deadline = Deadline::after_seconds(timeout_secs);
    Slot& slot = slots[idx];
    try {
      slot.outcome =
          tasks[idx].run(deadline ? &*deadline : nullptr, slot.notes);
    } catch (const TimeoutError& e) {
      slot.outcome = PointOutcome{tasks[idx].params, false, true, e.what()};
    } catch (const BudgetExceeded& e) {
      slot.outcome = PointOutcome{tasks[idx].params, false, true, e.what()};
    } catch (const std::exception& e) {
      slot.outcome = PointOutcome{tasks[idx].params, false, false, e.what()};
    }
  };

  unsigned workers = parallel ? std::thread::hardware_concurrency() : 1;
  workers = std::max(1u, std::min<unsigned>(workers, 16));
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        while (true) {
          std::size_t idx = next.fetch_add(1);
          if (idx >= tasks.size()) break;
          run_one(idx);
        }
      });
    }
    for (std::thread& th : pool) th.join();
  }

  SuiteReport report;
  report.suite = name;
  for (Slot& slot : slots) {
    ++report.points;
    if (slot.outcome.skipped) {
      ++report.skipped;
      report.skips.push_back(slot.outcome);
    } else if (slot.outcome.pass) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back(slot.outcome);
    }
    for (PointOutcome& note : slot.notes)
      report.notes.push_back(std::move(note));
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace tspread
