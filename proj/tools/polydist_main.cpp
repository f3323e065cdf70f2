#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "polydist/budgets.hpp"
#include "polydist/cantor.hpp"
#include "polydist/dioph.hpp"
#include "polydist/distset.hpp"
#include "polydist/errors.hpp"
#include "polydist/json_io.hpp"
#include "polydist/polynorm.hpp"
#include "polydist/rng.hpp"
#include "polydist/sepset.hpp"

namespace {

using namespace polydist;

struct GlobalOpts {
  std::uint64_t seed = 0;
  int threads = 1;
  std::string out = "out";
  bool record_timing = false;
  Budgets budgets;
};

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::vector<Slope> parse_slope_list(const std::string& csv) {
  std::vector<Slope> out;
  for (const std::string& tok : split_csv(csv)) out.push_back(parse_slope(tok));
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& csv) {
  std::vector<Rat> out;
  for (const std::string& tok : split_csv(csv)) out.push_back(parse_rat(tok));
  return out;
}

std::vector<int> parse_int_list(const std::string& csv) {
  std::vector<int> out;
  for (const std::string& tok : split_csv(csv)) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError("not an integer: '" + tok + "'");
    }
  }
  return out;
}

// 0, inf, 1, -1, 2, -2, .. : the first K pairwise distinct side slopes.
std::vector<Slope> default_slopes(int K) {
  if (K < 2) throw ParseError("a norm needs at least two side slopes");
  std::vector<Slope> out{Slope(Int(0), Int(1)), Slope::infinity()};
  for (long m = 1; static_cast<int>(out.size()) < K; ++m) {
    out.emplace_back(Int(m), Int(1));
    if (static_cast<int>(out.size()) < K) out.emplace_back(Int(-m), Int(1));
  }
  return out;
}

Json slopes_config(const std::vector<Slope>& slopes) {
  Json arr = Json::array();
  for (const Slope& s : slopes) arr.push_back(slope_str(s));
  return arr;
}

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Collects artifacts in an output directory and closes with a manifest that
// lists each file by name and content digest. Filenames are kept relative so
// two runs with the same inputs produce byte-identical manifests.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec)
      throw IoError("cannot create " + dir_.string() + ": " + ec.message());
  }

  void add(const std::string& name, const std::string& text) {
    write_text_file(dir_ / name, text);
    digests_[name] = digest_hex(text);
  }

  void finish(const std::string& command, const Json& config,
              std::uint64_t seed, bool record_timing) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    std::optional<std::int64_t> wall;
    if (record_timing) wall = ms;
    write_text_file(
        dir_ / "manifest.json",
        json_text(manifest_json(command, config, seed, wall, digests_)));
    std::cerr << command << ": " << digests_.size() + 1 << " artifacts, "
              << ms << " ms\n";
  }

  std::size_t count() const { return digests_.size(); }

 private:
  std::filesystem::path dir_;
  std::map<std::string, std::string> digests_;
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

struct NormOpts {
  std::string slopes;
  std::string normalize;
};

void run_norm(const GlobalOpts& g, const NormOpts& o) {
  ArtifactWriter w(g.out);
  std::vector<Slope> slopes = parse_slope_list(o.slopes);
  Json config;
  config["slopes"] = slopes_config(slopes);
  if (!o.normalize.empty()) {
    std::vector<int> idx = parse_int_list(o.normalize);
    if (idx.size() != 3 || idx[0] < 0 || idx[1] < 0 || idx[2] < 0)
      throw ParseError("--normalize needs three nonnegative indices");
    slopes = normalize_slopes(slopes, static_cast<std::size_t>(idx[0]),
                              static_cast<std::size_t>(idx[1]),
                              static_cast<std::size_t>(idx[2]));
    config["normalize"] = idx;
    config["slopes_normalized"] = slopes_config(slopes);
  }
  PolygonalNorm norm = from_slopes(slopes);
  w.add("norm.json", json_text(norm_json(norm)));
  w.finish("norm", config, g.seed, g.record_timing);
  std::cout << "norm with K=" << norm.K << " written\n";
}

struct GenLatticeOpts {
  int K = 4;
  int N = 2;
  std::string t = "0";
  int max_tries = 100;
  std::string slopes;
  std::string u;
};

void run_gen_lattice(const GlobalOpts& g, const GenLatticeOpts& o) {
  ArtifactWriter w(g.out);
  std::vector<Slope> slopes =
      o.slopes.empty() ? default_slopes(o.K) : parse_slope_list(o.slopes);
  if (static_cast<int>(slopes.size()) != o.K)
    throw ParseError("--slopes must list exactly K slopes");
  PolygonalNorm norm = from_slopes(slopes);
  LatticeSpec spec;
  if (!o.u.empty()) {
    spec.K = o.K;
    spec.N = o.N;
    spec.u = parse_rat_list(o.u);
    spec.seed = g.seed;
    if (static_cast<int>(spec.u.size()) != o.K)
      throw ParseError("--u must list exactly K scale factors");
  } else {
    spec = sample_good_parameters(norm, o.K, o.N, parse_rat(o.t), o.max_tries,
                                  g.seed, g.budgets);
  }
  SeparatedSet set = build_lattice_set(norm, spec, g.budgets);
  CertificationReport cert = certify(set, Rat(o.K - 1, o.K), Rat(1, 2));
  Json config;
  config["kind"] = "lattice";
  config["K"] = o.K;
  config["N"] = o.N;
  config["t"] = o.t;
  config["max_tries"] = o.max_tries;
  config["slopes"] = slopes_config(slopes);
  w.add("norm.json", json_text(norm_json(norm)));
  w.add("set.json", json_text(set_json(set)));
  w.add("points.csv", points_csv(set));
  w.add("cert.json", json_text(cert_json(cert)));
  w.finish("gen lattice", config, g.seed, g.record_timing);
  std::cout << "lattice set: n=" << set.n.get_str()
            << " min_distance=" << rat_str(set.min_distance) << "\n";
}

struct GenPowerOpts {
  std::string gamma;
  int L = 2;
  int N = 2;
  std::string eps;
};

void run_gen_power(const GlobalOpts& g, const GenPowerOpts& o) {
  ArtifactWriter w(g.out);
  PowerSpec spec;
  spec.gamma = parse_rat_list(o.gamma);
  spec.d = static_cast<int>(spec.gamma.size());
  spec.L = o.L;
  spec.N = o.N;
  SeparatedSet set = build_power_set(spec, g.budgets);
  Rat eps = o.eps.empty() ? Rat(1, o.L) : parse_rat(o.eps);
  CertificationReport cert =
      certify(set, Rat(1, 2) + eps, Rat(1, 2) + eps);
  Json config;
  config["kind"] = "power";
  config["gamma"] = o.gamma;
  config["L"] = o.L;
  config["N"] = o.N;
  config["eps"] = rat_str(eps);
  w.add("norm.json", json_text(norm_json(set.norm)));
  w.add("set.json", json_text(set_json(set)));
  w.add("points.csv", points_csv(set));
  w.add("cert.json", json_text(cert_json(cert)));
  w.finish("gen power", config, g.seed, g.record_timing);
  std::cout << "power set: n=" << set.n.get_str()
            << " min_distance=" << rat_str(set.min_distance) << "\n";
}

struct KmOpts {
  std::string gamma;
  int L = 2;
  std::string bounds;
  std::string eps;
};

void run_km(const GlobalOpts& g, const KmOpts& o) {
  ArtifactWriter w(g.out);
  GammaVector gv;
  gv.gamma = parse_rat_list(o.gamma);
  gv.d = static_cast<int>(gv.gamma.size());
  std::vector<int> bounds = parse_int_list(o.bounds);
  Rat eps = o.eps.empty() ? Rat(1, o.L) : parse_rat(o.eps);
  std::vector<MarginReport> reports =
      km_margin_curve(gv, o.L, bounds, eps, g.budgets, g.threads);
  Json j;
  j["L"] = o.L;
  Json gamma_arr = Json::array();
  for (const Rat& v : gv.gamma) gamma_arr.push_back(rat_str(v));
  j["gamma"] = gamma_arr;
  j["epsilon"] = rat_str(eps);
  Json arr = Json::array();
  for (const MarginReport& r : reports) arr.push_back(margin_json(r));
  j["reports"] = arr;
  Json config;
  config["gamma"] = o.gamma;
  config["L"] = o.L;
  config["bounds"] = bounds;
  config["eps"] = rat_str(eps);
  w.add("margins.json", json_text(j));
  w.finish("km", config, g.seed, g.record_timing);
  for (const MarginReport& r : reports)
    std::cout << "bound " << r.coeff_bound << ": margin "
              << rat_str(r.margin) << (r.pass ? " >= " : " < ")
              << rat_str(r.rhs) << "\n";
}

struct BuildOpts {
  std::string mode = "theorem1";
  int K = 2;
  int N = 2;
  int depth = 0;
  std::string c;
  std::string u;
  std::string slopes;
  std::string schedule = "constant";
  std::string t = "0";
  int max_tries = 100;
  std::string gamma;
  int L = 2;
  std::string eps;
};

void run_build(const GlobalOpts& g, const BuildOpts& o) {
  ArtifactWriter w(g.out);
  const ScheduleMode mode = o.mode == "theorem4" ? ScheduleMode::theorem4
                                                 : ScheduleMode::theorem1;
  Json config;
  config["mode"] = o.mode;
  config["depth"] = o.depth;
  config["c"] = o.c.empty() ? "auto" : o.c;

  PolygonalNorm norm;
  int K = 0;
  std::vector<std::shared_ptr<const SeparatedSet>> gens;
  std::vector<Rat> eps_list;

  if (mode == ScheduleMode::theorem1) {
    K = o.K;
    std::vector<Slope> slopes =
        o.slopes.empty() ? default_slopes(K) : parse_slope_list(o.slopes);
    if (static_cast<int>(slopes.size()) != K)
      throw ParseError("--slopes must list exactly K slopes");
    norm = from_slopes(slopes);
    config["K"] = K;
    config["N"] = o.N;
    config["schedule"] = o.schedule;
    config["t"] = o.t;
    config["max_tries"] = o.max_tries;
    config["slopes"] = slopes_config(slopes);
    if (!o.u.empty()) config["u"] = o.u;
    if (o.depth > 0) {
      const Rat t_target = parse_rat(o.t);
      if (o.schedule == "growing") {
        Rng master(g.seed);
        for (int level = 1; level <= o.depth; ++level) {
          const long scaled_n = static_cast<long>(o.N) << (level - 1);
          if (scaled_n > (1L << 26))
            throw BudgetExceeded("growing schedule level " +
                                 std::to_string(level) + " needs N = " +
                                 std::to_string(scaled_n));
          LatticeSpec spec = sample_good_parameters(
              norm, K, static_cast<int>(scaled_n), t_target, o.max_tries,
              master.next(), g.budgets);
          gens.push_back(std::make_shared<SeparatedSet>(
              build_lattice_set(norm, spec, g.budgets)));
        }
      } else {
        LatticeSpec spec;
        if (!o.u.empty()) {
          spec.K = K;
          spec.N = o.N;
          spec.u = parse_rat_list(o.u);
          spec.seed = g.seed;
          if (static_cast<int>(spec.u.size()) != K)
            throw ParseError("--u must list exactly K scale factors");
        } else {
          spec = sample_good_parameters(norm, K, o.N, t_target, o.max_tries,
                                        g.seed, g.budgets);
        }
        auto gen = std::make_shared<SeparatedSet>(
            build_lattice_set(norm, spec, g.budgets));
        gens.assign(static_cast<std::size_t>(o.depth), gen);
      }
    }
  } else {
    if (o.gamma.empty())
      throw ParseError("--gamma is required in theorem4 mode");
    PowerSpec spec;
    spec.gamma = parse_rat_list(o.gamma);
    spec.d = static_cast<int>(spec.gamma.size());
    spec.L = o.L;
    spec.N = o.N;
    K = spec.d + 3;
    config["gamma"] = o.gamma;
    config["L"] = o.L;
    config["N"] = o.N;
    if (!o.eps.empty()) {
      eps_list = parse_rat_list(o.eps);
      config["eps"] = o.eps;
    }
    if (o.depth > 0) {
      auto gen = std::make_shared<SeparatedSet>(
          build_power_set(spec, g.budgets));
      norm = gen->norm;
      gens.assign(static_cast<std::size_t>(o.depth), gen);
    } else {
      std::vector<Slope> slopes;
      for (const Rat& gk : spec.gamma) slopes.push_back(Slope::from_rat(gk));
      slopes.push_back(Slope(Int(0), Int(1)));
      slopes.push_back(Slope(Int(1), Int(1)));
      slopes.push_back(Slope::infinity());
      norm = from_slopes(slopes);
    }
  }

  w.add("norm.json", json_text(norm_json(norm)));

  if (o.depth == 0) {
    CantorStage s0 = stage_zero(K);
    w.add("stage_0.json", json_text(stage_json(s0)));
    w.add("cover_0.csv", cover_csv(cover_distance_set(s0, norm)));
    w.finish("build", config, g.seed, g.record_timing);
    std::cout << "depth 0: base cover written\n";
    return;
  }

  std::optional<Rat> c_opt;
  if (!o.c.empty()) c_opt = parse_rat(o.c);
  ConstructionSchedule schedule = make_schedule(mode, K, gens, c_opt, eps_list);

  for (std::size_t idx = 0; idx < gens.size(); ++idx) {
    const ScheduleLevel& level = schedule.levels[idx];
    const std::string tag = std::to_string(idx + 1);
    w.add("gen_" + tag + ".json", json_text(set_json(*gens[idx])));
    w.add("cert_" + tag + ".json",
          json_text(cert_json(
              certify(*gens[idx], level.alpha_j, level.beta_j))));
  }
  w.add("schedule.json", json_text(schedule_json(schedule)));

  CantorStage stage = stage_zero(K);
  w.add("stage_0.json", json_text(stage_json(stage)));
  w.add("cover_0.csv", cover_csv(cover_distance_set(stage, norm)));
  for (int level = 1; level <= o.depth; ++level) {
    stage = iterate(stage, schedule, g.budgets);
    const std::string tag = std::to_string(level);
    w.add("stage_" + tag + ".json", json_text(stage_json(stage)));
    w.add("cover_" + tag + ".csv",
          cover_csv(cover_distance_set(stage, norm)));
  }

  DecayReport decay = decay_report(schedule, norm, o.depth, g.budgets);
  w.add("decay.json", json_text(decay_json(decay)));
  w.add("estimates.csv",
        estimates_csv(dimension_estimates(schedule),
                      dimension_target(schedule)));
  w.finish("build", config, g.seed, g.record_timing);
  std::cout << "built " << o.depth << " levels: c=" << rat_str(schedule.c)
            << " contraction=" << rat_str(decay.contraction) << "\n";
}

struct ReportOpts {
  std::string in;
};

void run_report(const GlobalOpts& g, const ReportOpts& o) {
  const std::filesystem::path dir(o.in);
  Json manifest = read_json_file(dir / "manifest.json");
  Json schedule = read_json_file(dir / "schedule.json");
  Json decay = read_json_file(dir / "decay.json");
  const std::string est_csv = read_text_file(dir / "estimates.csv");

  struct EstRow {
    int j;
    double estimate;
    double target;
  };
  std::vector<EstRow> est_rows;
  {
    std::istringstream ss(est_csv);
    std::string line;
    std::getline(ss, line);  // header
    while (std::getline(ss, line)) {
      if (line.empty()) continue;
      std::vector<std::string> f = split_csv(line);
      if (f.size() != 3) throw IoError("malformed estimates row: " + line);
      EstRow row;
      row.j = parse_int_list(f[0])[0];
      row.estimate = std::strtod(f[1].c_str(), nullptr);
      row.target = parse_rat(f[2]).get_d();
      est_rows.push_back(row);
    }
  }

  ArtifactWriter w(g.out);
  Json agg;
  agg["source_command"] = manifest.value("command", "");
  agg["seed"] = manifest.value("seed", Json());
  agg["mode"] = schedule.value("mode", "");
  agg["c"] = schedule.value("c", "");
  agg["contraction"] = decay.value("contraction", "");
  bool all_within = true;
  Json levels = Json::array();
  std::string plot_decay = "j,total_length,bound\n";
  for (const Json& lv : decay.at("levels")) {
    const double total =
        parse_rat(lv.at("total_length").get<std::string>()).get_d();
    const double bound = parse_rat(lv.at("bound").get<std::string>()).get_d();
    const bool within = lv.value("within_bound", true);
    all_within = all_within && within;
    Json out_level;
    out_level["j"] = lv.at("j");
    out_level["total_length"] = total;
    out_level["bound"] = bound;
    out_level["within_bound"] = within;
    levels.push_back(out_level);
    plot_decay += std::to_string(lv.at("j").get<int>());
    plot_decay += ',';
    plot_decay += g17(total);
    plot_decay += ',';
    plot_decay += g17(bound);
    plot_decay += '\n';
  }
  agg["levels"] = levels;
  agg["within_bound_all"] = all_within;
  Json ests = Json::array();
  std::string plot_est = "j,estimate,target\n";
  for (const EstRow& row : est_rows) {
    Json e;
    e["j"] = row.j;
    e["estimate"] = row.estimate;
    ests.push_back(e);
    plot_est += std::to_string(row.j);
    plot_est += ',';
    plot_est += g17(row.estimate);
    plot_est += ',';
    plot_est += g17(row.target);
    plot_est += '\n';
  }
  agg["estimates"] = ests;
  if (!est_rows.empty()) {
    agg["final_estimate"] = est_rows.back().estimate;
    agg["target"] = est_rows.back().target;
  }
  w.add("aggregate.json", json_text(agg));
  w.add("plot_decay.csv", plot_decay);
  w.add("plot_estimates.csv", plot_est);
  Json config;
  config["inputs"] = Json::array(
      {"manifest.json", "schedule.json", "decay.json", "estimates.csv"});
  w.finish("report", config, g.seed, g.record_timing);
  std::cout << "report aggregated " << est_rows.size() << " levels\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact construction and certification of separated point sets"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--seed", g.seed, "master RNG seed")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for margin scans")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--out", g.out, "output directory")->capture_default_str();
  app.add_flag("--record-timing", g.record_timing,
               "store wall time in the manifest");
  app.add_option("--budget-points", g.budgets.points, "max points per set")
      ->capture_default_str();
  app.add_option("--budget-values", g.budgets.values,
                 "max values per projection set")
      ->capture_default_str();
  app.add_option("--budget-km", g.budgets.km_vectors,
                 "max coefficient vectors per margin scan")
      ->capture_default_str();
  app.add_option("--budget-centers", g.budgets.centers,
                 "max materialized centers per stage")
      ->capture_default_str();

  NormOpts norm_opts;
  CLI::App* norm_cmd =
      app.add_subcommand("norm", "build a polygonal norm from side slopes");
  norm_cmd->fallthrough();
  norm_cmd->add_option("--slopes", norm_opts.slopes,
                       "comma list of slopes, e.g. 0,1,inf")
      ->required();
  norm_cmd->add_option("--normalize", norm_opts.normalize,
                       "indices i1,i2,i3 mapped to slopes 0,1,inf");

  CLI::App* gen_cmd = app.add_subcommand("gen", "generate a separated set");
  gen_cmd->require_subcommand(1);
  gen_cmd->fallthrough();

  GenLatticeOpts lat_opts;
  CLI::App* lat_cmd = gen_cmd->add_subcommand(
      "lattice", "scaled lattice set adapted to a polygonal norm");
  lat_cmd->fallthrough();
  lat_cmd->add_option("--K", lat_opts.K, "number of norm functionals")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  lat_cmd->add_option("--N", lat_opts.N, "grid side length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lat_cmd->add_option("--t", lat_opts.t,
                      "separation target: min_distance >= t * n^(-1/2)")
      ->capture_default_str();
  lat_cmd->add_option("--max-tries", lat_opts.max_tries,
                      "sampling attempts before giving up")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  lat_cmd->add_option("--slopes", lat_opts.slopes,
                      "norm side slopes (default 0,inf,1,-1,2,..)");
  lat_cmd->add_option("--u", lat_opts.u, "explicit scale factors, skips sampling");

  GenPowerOpts pow_opts;
  CLI::App* pow_cmd = gen_cmd->add_subcommand(
      "power", "product set from power sums of rational bases");
  pow_cmd->fallthrough();
  pow_cmd->add_option("--gamma", pow_opts.gamma, "comma list of rational bases")
      ->required();
  pow_cmd->add_option("--L", pow_opts.L, "exponent range {0..L-1}")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pow_cmd->add_option("--N", pow_opts.N, "digit range {1..N}")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  pow_cmd->add_option("--eps", pow_opts.eps,
                      "certification exponent offset (default 1/L)");

  KmOpts km_opts;
  CLI::App* km_cmd = app.add_subcommand(
      "km", "exact small-coefficient power-sum margins");
  km_cmd->fallthrough();
  km_cmd->add_option("--gamma", km_opts.gamma, "comma list of rational bases")
      ->required();
  km_cmd->add_option("--L", km_opts.L, "exponent range {0..L-1}")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  km_cmd->add_option("--bounds", km_opts.bounds,
                     "comma list of coefficient bounds")
      ->required();
  km_cmd->add_option("--eps", km_opts.eps,
                     "margin exponent offset (default 1/L)");

  BuildOpts build_opts;
  CLI::App* build_cmd = app.add_subcommand(
      "build", "iterated construction with covers and dimension estimates");
  build_cmd->fallthrough();
  build_cmd->add_option("--mode", build_opts.mode, "theorem1 or theorem4")
      ->check(CLI::IsMember({"theorem1", "theorem4"}))
      ->capture_default_str();
  build_cmd->add_option("--K", build_opts.K, "number of norm functionals")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  build_cmd->add_option("--N", build_opts.N, "generator grid side")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build_cmd->add_option("--depth", build_opts.depth, "number of levels")
      ->check(CLI::Range(0, 64))
      ->required();
  build_cmd->add_option("--c", build_opts.c,
                        "contraction coefficient (default: largest feasible "
                        "on the 2^-16 grid)");
  build_cmd->add_option("--u", build_opts.u,
                        "explicit scale factors for a constant schedule");
  build_cmd->add_option("--slopes", build_opts.slopes, "norm side slopes");
  build_cmd->add_option("--schedule", build_opts.schedule,
                        "constant or growing generator sizes")
      ->check(CLI::IsMember({"constant", "growing"}))
      ->capture_default_str();
  build_cmd->add_option("--t", build_opts.t, "sampling separation target")
      ->capture_default_str();
  build_cmd->add_option("--max-tries", build_opts.max_tries,
                        "sampling attempts per level")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build_cmd->add_option("--gamma", build_opts.gamma,
                        "rational bases (theorem4 mode)");
  build_cmd->add_option("--L", build_opts.L, "exponent range (theorem4 mode)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  build_cmd->add_option("--eps", build_opts.eps,
                        "comma list of per-level exponent offsets "
                        "(theorem4 mode, default 1/(j+2))");

  ReportOpts report_opts;
  CLI::App* report_cmd =
      app.add_subcommand("report", "aggregate build artifacts for plotting");
  report_cmd->fallthrough();
  report_cmd->add_option("--in", report_opts.in, "directory of a build run")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (app.got_subcommand(norm_cmd)) {
      run_norm(g, norm_opts);
    } else if (app.got_subcommand(gen_cmd)) {
      if (gen_cmd->got_subcommand(lat_cmd))
        run_gen_lattice(g, lat_opts);
      else
        run_gen_power(g, pow_opts);
    } else if (app.got_subcommand(km_cmd)) {
      run_km(g, km_opts);
    } else if (app.got_subcommand(build_cmd)) {
      run_build(g, build_opts);
    } else if (app.got_subcommand(report_cmd)) {
      run_report(g, report_opts);
    }
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
