#include "polydist/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "polydist/errors.hpp"

namespace polydist {

namespace {

Json point_json(const Point2& p) {
  return Json::array({rat_str(p.x1), rat_str(p.x2)});
}

Json points_json(const std::vector<Point2>& pts) {
  Json arr = Json::array();
  for (const Point2& p : pts) arr.push_back(point_json(p));
  return arr;
}

Json rats_json(const std::vector<Rat>& vs) {
  Json arr = Json::array();
  for (const Rat& v : vs) arr.push_back(rat_str(v));
  return arr;
}

}  // namespace

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string digest_hex(const std::string& bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

std::string json_text(const Json& j) { return j.dump(2) + "\n"; }

Json norm_json(const PolygonalNorm& norm) {
  Json j;
  j["K"] = norm.K;
  j["b"] = points_json(norm.b);
  j["a"] = points_json(norm.a);
  return j;
}

Json set_json(const SeparatedSet& set) {
  Json j;
  j["n"] = set.n.get_ui();
  j["points"] = points_json(set.points);
  j["proj_counts"] = set.proj_counts;
  j["min_distance"] = rat_str(set.min_distance);
  j["scale_note"] = set.scale_note;
  j["norm_id"] = digest_hex(json_text(norm_json(set.norm)));
  std::uint64_t seed = 0;
  Json spec;
  if (const LatticeSpec* ls = std::get_if<LatticeSpec>(&set.spec)) {
    spec["kind"] = "lattice";
    spec["K"] = ls->K;
    spec["N"] = ls->N;
    spec["u"] = rats_json(ls->u);
    seed = ls->seed;
  } else {
    const PowerSpec& ps = std::get<PowerSpec>(set.spec);
    spec["kind"] = "power";
    spec["d"] = ps.d;
    spec["L"] = ps.L;
    spec["N"] = ps.N;
    spec["gamma"] = rats_json(ps.gamma);
  }
  j["spec"] = spec;
  j["seed"] = seed;
  return j;
}

Json cert_json(const CertificationReport& report) {
  Json j;
  j["alpha"] = rat_str(report.alpha);
  j["beta"] = rat_str(report.beta);
  Json constants = Json::array();
  for (std::size_t k = 0; k < report.constants.size(); ++k) {
    const FunctionalConstant& fc = report.constants[k];
    Json c;
    c["k"] = k;
    c["count"] = fc.count;
    c["quotient_upper"] = rat_str(fc.quotient_upper);
    c["exact"] = fc.exact;
    constants.push_back(c);
  }
  j["constants"] = constants;
  j["c_max"] = rat_str(report.c_max);
  j["t_lower"] = rat_str(report.t_lower);
  j["t_exact"] = report.t_exact;
  return j;
}

Json margin_json(const MarginReport& report) {
  Json j;
  j["L"] = report.L;
  j["coeff_bound"] = report.coeff_bound;
  j["margin"] = rat_str(report.margin);
  j["witness"] = report.witness;
  j["rhs"] = rat_str(report.rhs);
  j["rhs_exact"] = report.rhs_exact;
  j["pass"] = report.pass;
  return j;
}

Json schedule_json(const ConstructionSchedule& schedule) {
  Json j;
  j["mode"] =
      schedule.mode == ScheduleMode::theorem1 ? "theorem1" : "theorem4";
  j["K"] = schedule.K;
  j["c"] = rat_str(schedule.c);
  j["C_upper"] = rat_str(schedule.c_upper);
  j["C_bar"] = rat_str(schedule.c_bar);
  Json levels = Json::array();
  for (std::size_t idx = 0; idx < schedule.levels.size(); ++idx) {
    const ScheduleLevel& level = schedule.levels[idx];
    Json lj;
    lj["j"] = idx + 1;
    lj["n_j"] = level.n_j.get_str();
    lj["s_j"] = rat_str(level.s_j);
    lj["alpha_j"] = rat_str(level.alpha_j);
    lj["beta_j"] = rat_str(level.beta_j);
    if (level.has_eps) lj["eps_j"] = rat_str(level.eps_j);
    lj["delta_unit"] = rat_str(level.delta_unit);
    lj["delta_exact"] = level.delta_exact;
    lj["delta_j"] = rat_str(level.delta_j);
    lj["n_alpha_upper"] = rat_str(level.pow_alpha_upper);
    lj["c_level"] = rat_str(level.c_level);
    lj["n_cum"] = level.n_cum.get_str();
    lj["Delta_cum"] = rat_str(level.delta_cum);
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

Json stage_json(const CantorStage& stage) {
  Json j;
  j["j"] = stage.j;
  j["N_j"] = stage.counts.get_str();
  j["Delta_j"] = rat_str(stage.radius);
  if (stage.materialized && cmp(stage.counts, 4096) <= 0)
    j["centers"] = points_json(stage.centers);
  Json sizes = Json::array();
  for (const RatSet& proj : stage.proj_sets) sizes.push_back(proj.size());
  j["proj_set_sizes"] = sizes;
  return j;
}

Json decay_json(const DecayReport& report) {
  Json j;
  j["contraction"] = rat_str(report.contraction);
  Json levels = Json::array();
  for (const DecayLevel& level : report.levels) {
    Json lj;
    lj["j"] = level.j;
    lj["total_length"] = rat_str(level.total_length);
    lj["bound"] = rat_str(level.bound);
    lj["intervals"] = level.intervals;
    lj["intervals_raw"] = level.raw_intervals;
    lj["within_bound"] = level.within_bound;
    levels.push_back(lj);
  }
  j["levels"] = levels;
  return j;
}

Json manifest_json(const std::string& command, const Json& config,
                   std::uint64_t seed, std::optional<std::int64_t> wall_ms,
                   const std::map<std::string, std::string>& outputs) {
  Json j;
  j["artifact_version"] = "0.1.0";
  j["command"] = command;
  j["config"] = config;
  j["seed"] = seed;
  if (wall_ms.has_value())
    j["wall_time_ms"] = *wall_ms;
  else
    j["wall_time_ms"] = nullptr;
  j["outputs"] = outputs;
  return j;
}

std::string points_csv(const SeparatedSet& set) {
  std::string out = "x1,x2\n";
  for (const Point2& p : set.points) {
    out += rat_str(p.x1);
    out += ',';
    out += rat_str(p.x2);
    out += '\n';
  }
  return out;
}

std::string cover_csv(const IntervalCover& cover) {
  std::string out = "lo,hi\n";
  for (const CoverInterval& iv : cover.intervals) {
    out += rat_str(iv.lo);
    out += ',';
    out += rat_str(iv.hi);
    out += '\n';
  }
  return out;
}

std::string estimates_csv(const std::vector<DimensionEstimate>& estimates,
                          const Rat& target) {
  std::string out = "j,estimate,target\n";
  const std::string target_str = rat_str(target);
  for (const DimensionEstimate& est : estimates) {
    out += std::to_string(est.j);
    out += ',';
    out += est.estimate_str;
    out += ',';
    out += target_str;
    out += '\n';
  }
  return out;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to " + path.string() + " failed");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read from " + path.string() + " failed");
  return buf.str();
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace polydist
