#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fwm/classical.hpp"
#include "fwm/coherent.hpp"
#include "fwm/csv.hpp"
#include "fwm/error.hpp"
#include "fwm/kummer.hpp"
#include "fwm/quantum.hpp"
#include "fwm/sector.hpp"
#include "verify.hpp"

namespace fwm::cli {
namespace {

enum Exit { kOk = 0, kDomain = 1, kConfig = 2, kVerify = 3 };

const std::vector<std::string> kKeys = {"c",  "omega", "g",     "hbar", "n",  "m", "t0", "t1", "steps",
                                        "T",  "format", "out", "b",    "I0", "psi", "z"};

struct RunConfig {
  FourWaveParams params;
  std::optional<SectorLabel> sector;
  std::optional<FrozenActions> b;
  std::optional<double> I0;
  std::vector<double> psi;
  std::optional<ModeState> z;
  std::optional<std::string> n, m;
  double t0 = 0.0, t1 = 10.0;
  int steps = 200;
  int T = 8;
  std::optional<std::string> format;
  std::optional<std::string> out;
};

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::ConfigError, what); }

double to_double(const std::string& key, const std::string& s) {
  double v = 0.0;
  std::size_t used = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    config_error("--" + key + ": not a number: '" + s + "'");
  }
  if (used != s.size()) config_error("--" + key + ": not a number: '" + s + "'");
  return v;
}

int to_int(const std::string& key, const std::string& s) {
  const double v = to_double(key, s);
  if (v != std::floor(v) || std::abs(v) > 1e9) config_error("--" + key + ": expected an integer, got '" + s + "'");
  return int(v);
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<double> doubles(const std::string& key, const std::string& s, std::size_t want_min, std::size_t want_max) {
  std::vector<double> v;
  for (const std::string& p : split(s)) v.push_back(to_double(key, p));
  if (v.size() < want_min || v.size() > want_max)
    config_error("--" + key + ": expected " + std::to_string(want_min) +
                 (want_max != want_min ? "-" + std::to_string(want_max) : "") + " comma-separated values");
  return v;
}

std::vector<int> ints(const std::string& key, const std::string& s, std::size_t count) {
  std::vector<int> v;
  for (const std::string& p : split(s)) v.push_back(to_int(key, p));
  if (v.size() != count) config_error("--" + key + ": expected " + std::to_string(count) + " comma-separated integers");
  return v;
}

std::string json_to_flag(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? "," : "") + json_to_flag(j[i]);
    return s;
  }
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number()) return format_double(j.get<double>());
  config_error("config value " + j.dump() + " has an unsupported type");
}

// Raw string values per key; flags fill them first, the config file fills the rest.
struct RawOptions {
  std::map<std::string, std::string> values;
  std::string config_path;
};

void bind(CLI::App* sub, RawOptions& raw) {
  for (const std::string& k : kKeys) sub->add_option("--" + k, raw.values[k]);
  sub->add_option("--config", raw.config_path, "JSON file keyed by flag names; flags take precedence");
}

RunConfig resolve(CLI::App* sub, RawOptions& raw) {
  std::map<std::string, std::string> v;
  for (const std::string& k : kKeys)
    if (sub->count("--" + k) > 0) v[k] = raw.values[k];
  if (!raw.config_path.empty()) {
    std::ifstream in(raw.config_path);
    if (!in) config_error("cannot open config file " + raw.config_path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const std::exception& e) {
      config_error(std::string("malformed config JSON: ") + e.what());
    }
    if (!j.is_object()) config_error("config file must hold a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (std::find(kKeys.begin(), kKeys.end(), it.key()) == kKeys.end()) config_error("unknown config key " + it.key());
      if (!v.count(it.key())) v[it.key()] = json_to_flag(it.value());
    }
  }
  RunConfig rc;
  if (v.count("omega")) {
    const auto w = doubles("omega", v["omega"], 4, 4);
    std::copy(w.begin(), w.end(), rc.params.omega.begin());
  }
  if (v.count("g")) rc.params.g = to_double("g", v["g"]);
  if (v.count("hbar")) rc.params.hbar = to_double("hbar", v["hbar"]);
  rc.params.validate();
  if (v.count("c")) {
    const auto c = ints("c", v["c"], 3);
    rc.sector = SectorLabel{c[0], c[1], c[2]};
  }
  if (v.count("b")) {
    const auto b = doubles("b", v["b"], 3, 3);
    rc.b = FrozenActions{b[0], b[1], b[2]};
  }
  if (v.count("I0")) rc.I0 = to_double("I0", v["I0"]);
  if (v.count("psi")) rc.psi = doubles("psi", v["psi"], 1, 4);
  if (v.count("z")) {
    const auto z = doubles("z", v["z"], 8, 8);
    ModeState s;
    for (int k = 0; k < 4; ++k) s.z[k] = cplx(z[2 * k], z[2 * k + 1]);
    rc.z = s;
  }
  if (v.count("n")) rc.n = v["n"];
  if (v.count("m")) rc.m = v["m"];
  if (v.count("t0")) rc.t0 = to_double("t0", v["t0"]);
  if (v.count("t1")) rc.t1 = to_double("t1", v["t1"]);
  if (v.count("steps")) rc.steps = to_int("steps", v["steps"]);
  if (v.count("T")) rc.T = to_int("T", v["T"]);
  if (v.count("format")) {
    rc.format = v["format"];
    if (*rc.format != "csv" && *rc.format != "json") config_error("--format must be csv or json");
  }
  if (v.count("out")) rc.out = v["out"];
  if (!(rc.t1 > rc.t0)) config_error("t1 must exceed t0");
  if (rc.steps < 1) config_error("steps must be at least 1");
  if (rc.T < 0 || rc.T > kMaxOracleT) config_error("T must lie in [0, 12]");
  return rc;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const RunConfig& rc) {
    if (rc.out) {
      file_ = std::make_unique<std::ofstream>(*rc.out, std::ios::binary);
      if (!*file_) config_error("cannot open output file " + *rc.out);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string fmt(const RunConfig& rc, const char* fallback) { return rc.format.value_or(fallback); }

const SectorLabel& need_sector(const RunConfig& rc) {
  if (!rc.sector) config_error("--c c1,c2,c3 is required");
  return *rc.sector;
}

nlohmann::ordered_json jnum(double x) { return std::isfinite(x) ? nlohmann::ordered_json(x) : nlohmann::ordered_json(); }

int cmd_sector(const RunConfig& rc) {
  const SectorLabel& c = need_sector(rc);
  Output out(rc);
  if (fmt(rc, "json") == "json") {
    out.stream() << sector_report_json(c, rc.params) << '\n';
    return kOk;
  }
  CsvWriter w(out.stream(), {"n", "n0", "n1", "n2", "n3"});
  const auto states = basis_states(c);
  for (std::size_t i = 0; i < states.size(); ++i)
    w.row({double(i), double(states[i][0]), double(states[i][1]), double(states[i][2]), double(states[i][3])});
  return kOk;
}

int cmd_spectrum(const RunConfig& rc) {
  const SectorSpectrum sp = spectral_decomposition(need_sector(rc), rc.params);
  Output out(rc);
  if (fmt(rc, "csv") == "csv") {
    write_spectrum_csv(out.stream(), sp);
    return kOk;
  }
  nlohmann::ordered_json j;
  j["lambda"] = sp.table.lambdas;
  j["energy"] = sp.energies;
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_transition(const RunConfig& rc) {
  const SectorLabel& c = need_sector(rc);
  const int n = rc.n ? to_int("n", *rc.n) : 0;
  const int m = rc.m ? to_int("m", *rc.m) : 1;
  const int d = shape_of(c).dim();
  if (n < 0 || n >= d || m < 0 || m >= d)
    throw Error(Errc::IndexOutOfRange, "--n and --m must lie in [0, " + std::to_string(d - 1) + "]");
  const std::vector<double> grid = uniform_grid(rc.t0, rc.t1, rc.steps);
  std::vector<double> prob;
  for (double t : grid) prob.push_back(transition_probability(c, rc.params, m, n, t));
  Output out(rc);
  if (fmt(rc, "csv") == "csv") {
    CsvWriter w(out.stream(), {"t", "probability"});
    for (std::size_t i = 0; i < grid.size(); ++i) w.row({grid[i], prob[i]});
    return kOk;
  }
  nlohmann::ordered_json j;
  j["t"] = grid;
  j["probability"] = prob;
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_evolve_quantum(const RunConfig& rc) {
  const SectorLabel& c = need_sector(rc);
  const int n = rc.n ? to_int("n", *rc.n) : 0;
  const int d = shape_of(c).dim();
  if (n < 0 || n >= d) throw Error(Errc::IndexOutOfRange, "--n must lie in [0, " + std::to_string(d - 1) + "]");
  const std::vector<double> grid = uniform_grid(rc.t0, rc.t1, rc.steps);
  std::vector<std::string> header{"t"};
  for (int k = 0; k < d; ++k) header.push_back("p" + std::to_string(k));
  std::vector<std::vector<double>> rows;
  for (double t : grid) {
    const SectorOperator U = propagator(c, rc.params, t, true);
    std::vector<double> row{t};
    for (int k = 0; k < d; ++k) row.push_back(std::norm(U.matrix(k, n)));
    rows.push_back(std::move(row));
  }
  Output out(rc);
  if (fmt(rc, "csv") == "csv") {
    CsvWriter w(out.stream(), header);
    for (const auto& r : rows) w.row(r);
    return kOk;
  }
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows) j.push_back(r);
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

ActionAngle initial_data(const RunConfig& rc) {
  if (rc.z) return to_action_angle(*rc.z);
  if (!rc.b || !rc.I0) config_error("give either --z or --b with --I0 (and optionally --psi)");
  ActionAngle a;
  a.I = {*rc.I0, rc.b->b1, rc.b->b2, rc.b->b3};
  for (std::size_t k = 0; k < rc.psi.size(); ++k) a.psi[k] = rc.psi[k];
  from_action_angle(a);
  return a;
}

int cmd_classical(const RunConfig& rc) {
  const ActionAngle a = initial_data(rc);
  const ReducedTrajectory tr = solve_reduced(reduce(a), rc.params, uniform_grid(rc.t0, rc.t1, rc.steps));
  Output out(rc);
  if (fmt(rc, "csv") == "csv") {
    const OuterPhases ph = integrate_outer_phases(tr, {a.psi[1], a.psi[2], a.psi[3]}, rc.params);
    write_reduced_csv(out.stream(), tr, ph, rc.params);
    return kOk;
  }
  nlohmann::ordered_json j;
  j["method"] = method_name(tr.method);
  j["regime"] = regime_name(tr.coeffs.regime);
  j["energy"] = jnum(tr.energy);
  j["p"] = jnum(tr.coeffs.p);
  j["q"] = jnum(tr.coeffs.q);
  j["r"] = jnum(tr.coeffs.r);
  j["Delta"] = jnum(tr.coeffs.Delta);
  j["b"] = {tr.b.b1, tr.b.b2, tr.b.b3};
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_kummer(const RunConfig& rc) {
  Output out(rc);
  if (!rc.z && !rc.I0) {
    if (!rc.b) config_error("--b is required for the shape mesh");
    write_mesh_csv(out.stream(), shape_mesh(*rc.b));
    return kOk;
  }
  const ActionAngle a = initial_data(rc);
  const ReducedTrajectory tr = solve_reduced(reduce(a), rc.params, uniform_grid(rc.t0, rc.t1, rc.steps));
  const ShapeReport rep = trajectory_on_shape(tr, rc.params);
  if (fmt(rc, "csv") == "csv") {
    write_polyline_csv(out.stream(), rep.polyline);
    return kOk;
  }
  nlohmann::ordered_json j;
  j["max_casimir"] = rep.max_casimir;
  j["max_energy_deviation"] = rep.max_energy_deviation;
  j["samples"] = rep.polyline.size();
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_coherent(const RunConfig& rc) {
  Output out(rc);
  if (rc.n) {
    if (!rc.z) config_error("--z is required for amplitudes");
    const auto v = ints("n", *rc.n, 4);
    const FockState n{v[0], v[1], v[2], v[3]};
    for (int k : n)
      if (k < 0) config_error("--n occupations must be nonnegative");
    const std::vector<double> grid = uniform_grid(rc.t0, rc.t1, rc.steps);
    std::vector<cplx> amp;
    for (double t : grid) amp.push_back(fock_coherent_amplitude(*rc.z, n, t, rc.params));
    if (fmt(rc, "csv") == "csv") {
      write_amplitude_csv(out.stream(), grid, amp);
      return kOk;
    }
    nlohmann::ordered_json j;
    j["t"] = grid;
    std::vector<double> re, im;
    for (const cplx& a : amp) re.push_back(a.real()), im.push_back(a.imag());
    j["re"] = re;
    j["im"] = im;
    out.stream() << j.dump(2) << '\n';
    return kOk;
  }
  const SectorLabel& c = need_sector(rc);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(moment_report_json(c, radial_moments(c)));
  if (rc.z) {
    const Projection pr = project_coherent(*rc.z, c, rc.params.hbar);
    j["alpha"] = {pr.alpha.real(), pr.alpha.imag()};
    j["zeta"] = {pr.reduced.zeta.real(), pr.reduced.zeta.imag()};
    j["hbar_factor"] = pr.hbar_factor;
  }
  out.stream() << j.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const RunConfig& rc) {
  Output out(rc);
  const std::vector<Check> checks = run_verify(out.stream());
  std::size_t failed = 0;
  for (const Check& c : checks) failed += !c.pass;
  out.stream() << (failed ? "FAILED " : "OK ") << checks.size() - failed << '/' << checks.size() << " checks passed\n";
  if (failed) {
    std::cerr << "failed invariants:\n";
    for (const Check& c : checks)
      if (!c.pass)
        std::cerr << "  " << c.module << '/' << c.name << " deviation=" << format_double(c.deviation)
                  << " tol=" << format_double(c.tolerance) << (c.note.empty() ? "" : " " + c.note) << '\n';
  }
  out.stream().flush();
  return failed ? kVerify : kOk;
}

}  // namespace

int main_impl(int argc, char** argv) {
  CLI::App app{"Four-wave mixing: quantum sectors, classical reduction and coherent states"};
  app.require_subcommand(1);
  using Cmd = int (*)(const RunConfig&);
  const std::vector<std::tuple<std::string, std::string, Cmd>> table = {
      {"sector", "sector shape and basis for --c", cmd_sector},
      {"spectrum", "dual Hahn spectrum of a sector", cmd_spectrum},
      {"transition", "transition probability |U_mn(t)|^2 within a sector", cmd_transition},
      {"evolve-quantum", "occupation probabilities of sector states from local state --n", cmd_evolve_quantum},
      {"classical", "reduced classical trajectory with reconstructed phases", cmd_classical},
      {"kummer", "trajectory on the Kummer shape, or the shape mesh when only --b is given", cmd_kummer},
      {"coherent", "Fock amplitudes of a coherent state (--n n0,n1,n2,n3) or sector moments (--c)", cmd_coherent},
      {"verify", "run the invariant suite", cmd_verify},
  };
  std::vector<std::unique_ptr<RawOptions>> raws;
  std::vector<std::pair<CLI::App*, Cmd>> subs;
  for (const auto& [name, help, fn] : table) {
    CLI::App* sub = app.add_subcommand(name, help);
    raws.push_back(std::make_unique<RawOptions>());
    bind(sub, *raws.back());
    subs.emplace_back(sub, fn);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfig;
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i].first->parsed()) continue;
    const std::string name = subs[i].first->get_name();
    try {
      const RunConfig rc = resolve(subs[i].first, *raws[i]);
      return subs[i].second(rc);
    } catch (const Error& e) {
      std::cerr << "fwm " << name << ": " << e.what() << '\n';
      return e.code() == Errc::ConfigError ? kConfig : kDomain;
    } catch (const std::exception& e) {
      std::cerr << "fwm " << name << ": " << e.what() << '\n';
      return kDomain;
    }
  }
  return kConfig;
}

}  // namespace fwm::cli

int main(int argc, char** argv) { return fwm::cli::main_impl(argc, argv); }
