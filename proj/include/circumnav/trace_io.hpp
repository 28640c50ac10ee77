#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "circumnav/batch.hpp"
#include "circumnav/trace.hpp"

namespace circumnav {

/// Shortest-ish deterministic rendering with 9 significant digits; all file
/// output goes through this so repeated runs are byte-identical.
inline std::string format_g9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

inline std::string format_opt_g9(const std::optional<double>& v) {
  return v ? format_g9(*v) : std::string{};
}

/// Writes the trace as CSV with the fixed column set
/// t,x,y,psi,r,theta_b,omega,rdot_true,rdot_est,lyap. Fields without a value
/// (rdot_est when the ground-truth source is active, lyap inside the desired
/// circle) are left empty.
inline void write_trace_csv(const SimTrace& trace, std::ostream& os) {
  os << "t,x,y,psi,r,theta_b,omega,rdot_true,rdot_est,lyap\n";
  for (const auto& s : trace.samples) {
    os << format_g9(s.t) << ',' << format_g9(s.state.position.x) << ','
       << format_g9(s.state.position.y) << ',' << format_g9(s.state.heading) << ','
       << format_g9(s.geom.range) << ',' << format_g9(s.geom.bearing) << ','
       << format_g9(s.omega) << ',' << format_g9(s.geom.range_rate) << ','
       << format_opt_g9(s.rdot_est) << ',' << format_opt_g9(s.lyap) << '\n';
  }
}

inline void write_trace_csv(const SimTrace& trace, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_trace_csv(trace, os);
  if (!os.flush()) throw std::runtime_error("write failed for " + path.string());
}

namespace detail {

class JsonWriter {
 public:
  explicit JsonWriter(std::string& out) : out_(out) {}

  void begin_object() { separate(); out_ += '{'; fresh_ = true; }
  void end_object() { out_ += '}'; fresh_ = false; }
  void begin_array() { separate(); out_ += '['; fresh_ = true; }
  void end_array() { out_ += ']'; fresh_ = false; }

  void key(const char* name) {
    separate();
    string_literal(name);
    out_ += ':';
    fresh_ = true;
  }

  void value(double v) { separate(); out_ += format_g9(v); }
  void value(int v) { separate(); out_ += std::to_string(v); }
  void value(std::uint64_t v) { separate(); out_ += std::to_string(v); }
  void value(bool v) { separate(); out_ += v ? "true" : "false"; }
  void value(const std::string& v) { separate(); string_literal(v.c_str()); }
  void value(const char* v) { separate(); string_literal(v); }
  void null() { separate(); out_ += "null"; }
  void value(const std::optional<double>& v) { v ? value(*v) : null(); }

 private:
  void separate() {
    if (!fresh_) out_ += ',';
    fresh_ = false;
  }

  void string_literal(const char* s) {
    out_ += '"';
    for (; *s; ++s) {
      switch (*s) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        default: out_ += *s;
      }
    }
    out_ += '"';
  }

  std::string& out_;
  bool fresh_ = true;
};

inline void emit_config(JsonWriter& w, const ScenarioConfig& cfg, double effective_radius) {
  w.begin_object();
  w.key("v"); w.value(cfg.speed);
  w.key("target"); w.begin_array(); w.value(cfg.target.x); w.value(cfg.target.y); w.end_array();
  w.key("r_d"); w.value(cfg.desired_radius);
  w.key("k"); w.value(cfg.gain);
  w.key("law"); w.value(cfg.law == ControlLaw::Smooth ? "smooth" : "signum");
  w.key("compensate_rd"); w.value(cfg.compensate_rd);
  w.key("effective_r_d"); w.value(effective_radius);
  w.key("rdot_source");
  w.value(cfg.rdot.filtered ? "filter:" + format_g9(cfg.rdot.tau) : std::string("truth"));
  w.key("dt"); w.value(cfg.integration.dt);
  w.key("scheme");
  w.value(cfg.integration.scheme == IntegrationScheme::RK4 ? "rk4" : "euler");
  w.key("duration"); w.value(cfg.duration);
  if (const auto* box = std::get_if<InitBox>(&cfg.init)) {
    w.key("init_box");
    w.begin_array();
    w.value(box->x_min); w.value(box->x_max); w.value(box->y_min); w.value(box->y_max);
    w.end_array();
  } else {
    const auto& s = std::get<UavState>(cfg.init);
    w.key("init_state");
    w.begin_array();
    w.value(s.position.x); w.value(s.position.y); w.value(s.heading);
    w.end_array();
  }
  w.key("seed"); w.value(cfg.seed);
  w.key("runs"); w.value(cfg.runs);
  w.end_object();
}

inline void emit_run(JsonWriter& w, const RunResult& rr) {
  const RunReport& rep = rr.report;
  w.begin_object();
  w.key("run"); w.value(rr.summary.run_index);
  w.key("seed"); w.value(rr.summary.seed);
  w.key("aborted"); w.value(rep.aborted);
  if (rep.aborted) {
    w.key("abort_reason"); w.value(rep.abort_reason);
    w.key("initial_state");
    w.begin_array();
    w.value(rr.summary.initial_state.position.x);
    w.value(rr.summary.initial_state.position.y);
    w.value(rr.summary.initial_state.heading);
    w.end_array();
    w.key("all_pass"); w.value(false);
    w.end_object();
    return;
  }
  w.key("initial_state");
  w.begin_array();
  w.value(rr.summary.initial_state.position.x);
  w.value(rr.summary.initial_state.position.y);
  w.value(rr.summary.initial_state.heading);
  w.end_array();
  w.key("target_radius"); w.value(rep.target_radius);
  w.key("final_radius"); w.value(rep.final_radius);
  w.key("steady_radius_mean"); w.value(rep.steady_radius_mean);
  w.key("steady_radius_min"); w.value(rep.steady_radius_min);
  w.key("steady_radius_max"); w.value(rep.steady_radius_max);
  w.key("convergence_time"); w.value(rep.convergence_time);
  w.key("cd_entry_episodes"); w.value(rep.cd_entry_episodes);
  w.key("bearing_capture_time"); w.value(rep.bearing_capture_time);
  w.key("steady_bearing_max_dev"); w.value(rep.steady_bearing_max_dev);
  w.key("rotation"); w.value(to_string(rep.rotation));
  w.key("lyapunov_violations"); w.value(rep.lyapunov_violations);
  w.key("max_abs_omega"); w.value(rep.max_abs_omega);
  w.key("verdicts");
  w.begin_object();
  for (const auto& [name, ok] : rep.verdicts) {
    w.key(name.c_str());
    w.value(ok);
  }
  w.end_object();
  w.key("all_pass"); w.value(rep.all_pass());
  w.end_object();
}

}  // namespace detail

/// Renders the batch report as deterministic JSON: the resolved config
/// (including the effective commanded radius), per-run reports ordered by
/// run index, and the aggregate verdict.
inline std::string report_json(const ScenarioConfig& cfg,
                               const std::vector<RunResult>& results) {
  std::string out;
  detail::JsonWriter w(out);
  w.begin_object();
  w.key("config");
  detail::emit_config(w, cfg, cfg.effective_desired_radius());
  w.key("runs");
  w.begin_array();
  for (const auto& rr : results) detail::emit_run(w, rr);
  w.end_array();
  bool all = true;
  for (const auto& rr : results) all = all && rr.report.all_pass();
  w.key("all_pass");
  w.value(all);
  w.end_object();
  out += '\n';
  return out;
}

inline void write_report_json(const ScenarioConfig& cfg,
                              const std::vector<RunResult>& results,
                              const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
  os << report_json(cfg, results);
  if (!os.flush()) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace circumnav
