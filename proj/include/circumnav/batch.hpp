#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "circumnav/monitors.hpp"
#include "circumnav/simulation.hpp"

namespace circumnav {

/// Compact per-run record kept after the full trace is discarded.
struct RunSummary {
  int run_index = 0;
  std::uint64_t seed = 0;
  bool aborted = false;
  std::string abort_reason;
  UavState initial_state;
  UavState final_state;
  std::size_t sample_count = 0;
  double t_final = 0.0;
};

struct RunResult {
  RunSummary summary;
  RunReport report;
};

/// Optional per-trace consumer (e.g. a CSV writer). Invoked under a lock,
/// once per completed run, before the trace is discarded; never invoked for
/// aborted runs.
using TraceSink = std::function<void(int run_index, const SimTrace&)>;

/// Runs `cfg.runs` independent simulations with per-run derived seeds and
/// condenses each into a RunResult. Results are ordered by run index and are
/// identical regardless of how many worker threads execute them
/// (max_workers = 0 picks the hardware concurrency). Aborted runs
/// (vehicle-at-target) are recorded as failed entries; the batch continues.
inline std::vector<RunResult> run_batch(const ScenarioConfig& cfg,
                                        const MonitorThresholds& thresholds = {},
                                        const TraceSink& sink = {},
                                        unsigned max_workers = 0) {
  cfg.validate();
  const int runs = cfg.runs;
  std::vector<RunResult> results(static_cast<std::size_t>(runs));

  std::mutex sink_mutex;
  auto execute_run = [&](int index) {
    RunResult& out = results[static_cast<std::size_t>(index)];
    out.summary.run_index = index;
    out.summary.seed = derive_run_seed(cfg.seed, static_cast<std::uint64_t>(index));
    out.report.run_index = index;
    const UavState initial = initial_state_for_run(cfg, static_cast<std::uint64_t>(index));
    out.summary.initial_state = initial;
    try {
      const SimTrace trace = run_simulation(cfg, initial);
      if (sink) {
        std::lock_guard<std::mutex> lock(sink_mutex);
        sink(index, trace);
      }
      out.summary.final_state = trace.samples.back().state;
      out.summary.sample_count = trace.samples.size();
      out.summary.t_final = trace.samples.back().t;
      out.report = make_run_report(trace, thresholds);
      out.report.run_index = index;
    } catch (const SingularityError& e) {
      out.summary.aborted = true;
      out.summary.abort_reason = e.what();
      out.report.aborted = true;
      out.report.abort_reason = e.what();
    }
  };

  unsigned hw = max_workers;
  if (hw == 0) hw = std::thread::hardware_concurrency();
  const unsigned workers = std::min<unsigned>(hw > 0 ? hw : 1, static_cast<unsigned>(runs));
  if (workers <= 1) {
    for (int i = 0; i < runs; ++i) execute_run(i);
    return results;
  }

  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < runs; i = next.fetch_add(1)) {
        try {
          execute_run(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
  return results;
}

}  // namespace circumnav
