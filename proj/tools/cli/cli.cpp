#include "cli/cli.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <sstream>
#include <variant>

#include "symscat/core.hpp"
#include "symscat/noninjective.hpp"
#include "symscat/potential.hpp"
#include "symscat/smatrix.hpp"
#include "symscat/spectral.hpp"
#include "symscat/szego.hpp"

namespace symscat::cli {
namespace {

using Json = nlohmann::ordered_json;

// Invalid flag values discovered after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) { return fmt::format("{:.17g}", v); }

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": `" + item + "` is not a number");
    }
  }
  if (out.empty()) throw UsageError(flag + " needs at least one value");
  return out;
}

// "start,stop,count" -> count evenly spaced values including both ends.
std::vector<double> parse_linspace(const std::string& text, const std::string& flag) {
  const auto v = parse_list(text, flag);
  if (v.size() != 3 || v[2] < 1 || v[2] != std::floor(v[2])) {
    throw UsageError(flag + " expects start,stop,count");
  }
  const auto count = static_cast<int>(v[2]);
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = count == 1 ? v[0] : v[0] + (v[1] - v[0]) * i / (count - 1);
  }
  return out;
}

// "start:stop:step" or a comma list.
std::vector<double> parse_t_grid(const std::string& text) {
  if (text.find(':') == std::string::npos) return parse_list(text, "--t");
  std::string spec = text;
  std::replace(spec.begin(), spec.end(), ':', ',');
  const auto v = parse_list(spec, "--t");
  if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0]) throw UsageError("--t expects start:stop:step");
  const auto count = static_cast<int>(std::floor((v[1] - v[0]) / v[2] + 1e-9)) + 1;
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = v[0] + i * v[2];
  return out;
}

Json smatrix_json(const SMatrix& s, double energy) {
  Json j;
  j["energy"] = energy;
  j["k"] = s.k;
  j["a"] = s.half_width;
  j["s11"] = complex_json(s.s11);
  j["s12"] = complex_json(s.s12);
  j["s21"] = complex_json(s.s21);
  j["s22"] = complex_json(s.s22);
  j["unitarity_residual"] = s.unitarity_residual();
  j["parity_residual"] = s.parity_residual;
  return j;
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw UsageError("cannot open --out path " + path);
    }
    stream_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

void emit_json(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

void require_format(const std::string& format) {
  if (format != "json" && format != "csv") throw UsageError("--format must be json or csv");
}

// ---------------------------------------------------------------- smatrix

struct SmatrixFlags {
  std::string well;
  double delta = 0.0;
  std::string sampled;
  std::optional<double> energy;
  std::string energy_grid;
  int steps = kDefaultSteps;
  std::string format = "json";
  std::string out;
};

int cmd_smatrix(const SmatrixFlags& f, std::ostream& out) {
  require_format(f.format);
  const int kinds = !f.well.empty() + (f.delta != 0.0) + !f.sampled.empty();
  if (kinds != 1) throw UsageError("give exactly one of --well, --delta, --sampled");
  if (f.energy.has_value() == !f.energy_grid.empty()) throw UsageError("give exactly one of --energy, --energy-grid");

  const auto energies = f.energy ? std::vector<double>{*f.energy} : parse_linspace(f.energy_grid, "--energy-grid");
  for (double e : energies) {
    if (!(e > 0.0)) throw UsageError("energies must be positive");
  }

  Json config;
  Json potential;
  std::optional<EvaluatedPotential> pot;
  if (!f.well.empty()) {
    const auto v = parse_list(f.well, "--well");
    if (v.size() != 2) throw UsageError("--well expects v0,a");
    config["well"] = f.well;
    potential = {{"kind", "well"}, {"v0", v[0]}, {"a", v[1]}};
    try {
      pot = validate(SquareWell{v[0], v[1]});
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  } else if (f.delta != 0.0) {
    config["delta"] = f.delta;
    potential = {{"kind", "delta"}, {"alpha", f.delta}};
    if (!(f.delta > 0.0)) throw UsageError("--delta must be positive");
  } else {
    config["sampled"] = f.sampled;
    auto s = load_potential_csv(f.sampled);
    potential = {{"kind", "sampled"}, {"a", s.half_width}, {"samples", s.x.size()}};
    pot = validate(std::move(s));
  }
  if (f.energy) config["energy"] = *f.energy;
  if (!f.energy_grid.empty()) config["energy_grid"] = f.energy_grid;
  config["steps"] = f.steps;
  config["format"] = f.format;

  std::vector<SMatrix> results;
  results.reserve(energies.size());
  for (double e : energies) {
    results.push_back(pot ? smatrix_via_transfer(*pot, Energy(e), f.steps) : analytic_delta(f.delta, Energy(e)));
  }

  Output sink(f.out, out);
  auto& os = sink.stream();
  if (f.format == "csv") {
    os << "E,k,s11_re,s11_im,s12_re,s12_im,s21_re,s21_im,s22_re,s22_im,abs_s11_sq,abs_s21_sq,"
          "unitarity_residual,parity_residual\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      const auto& s = results[i];
      os << fmt::format("{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n", num(energies[i]), num(s.k), num(s.s11.real()),
                        num(s.s11.imag()), num(s.s12.real()), num(s.s12.imag()), num(s.s21.real()),
                        num(s.s21.imag()), num(s.s22.real()), num(s.s22.imag()), num(std::norm(s.s11)),
                        num(std::norm(s.s21)), num(s.unitarity_residual()), num(s.parity_residual));
    }
    return kExitOk;
  }
  Json report;
  report["command"] = "smatrix";
  report["config"] = config;
  report["potential"] = potential;
  report["method"] = pot ? "transfer" : "analytic";
  report["results"] = Json::array();
  for (std::size_t i = 0; i < results.size(); ++i) report["results"].push_back(smatrix_json(results[i], energies[i]));
  emit_json(os, report);
  return kExitOk;
}

// --------------------------------------------------------- counterexample

struct CounterexampleFlags {
  double q = 1.0;
  double eps = 0.01;
  double a = 1.0;
  std::string bump = "smooth";
  double energy = 1.0;
  double shift = 0.5;
  int steps = kCounterexampleSteps;
  std::string traces;
  std::string out;
};

int cmd_counterexample(const CounterexampleFlags& f, std::ostream& out, std::ostream& err) {
  if (f.bump != "smooth" && f.bump != "paper") throw UsageError("--bump must be smooth or paper");
  if (!(f.a > 0.0) || !(f.q > 0.0) || !(f.q * f.a < 0.5 * constants::pi)) {
    throw UsageError("need q > 0, a > 0 and q a < pi/2");
  }
  if (!(f.energy > 0.0) || !(f.energy + f.shift > 0.0)) throw UsageError("energies must be positive");

  const auto kind = f.bump == "smooth" ? BumpFunction::Kind::kSmooth : BumpFunction::Kind::kPaperLiteral;
  const auto pair = build_counterexample(f.q, f.eps, f.a, kind, Energy(f.energy), f.steps);
  const auto same = verify_same_smatrix(pair, f.steps);
  const auto off = verify_same_smatrix(pair, f.steps, Energy(f.energy + f.shift));

  Json report;
  report["command"] = "counterexample";
  report["config"] = {{"q", f.q},           {"eps", f.eps},     {"a", f.a},
                      {"bump", f.bump},     {"energy", f.energy}, {"off_energy_shift", f.shift},
                      {"steps", f.steps},   {"traces", f.traces}};
  report["energy"] = f.energy;
  report["separation"] = pair.separation;
  report["boundary_residual"] = pair.boundary_residual;
  report["kink_warning"] = pair.bump.has_kink();
  if (pair.bump.has_kink()) {
    report["warning"] = "bump slope jumps across x = 0; psi0 + f is not C1 there";
    err << "warning: bump slope jumps across x = 0; psi0 + f is not C1 there\n";
  } else {
    report["warning"] = nullptr;
  }
  report["masked_points"] = pair.perturbed_potential.masked_count() + pair.baseline_potential.masked_count();
  report["smatrix"] = {{"baseline", smatrix_json(same.baseline, same.energy)},
                       {"perturbed", smatrix_json(same.perturbed, same.energy)},
                       {"max_entry_diff", same.max_entry_diff},
                       {"even_channel_diff", same.even_channel_diff},
                       {"odd_channel_diff", same.odd_channel_diff},
                       {"amplitude_diff", same.amplitude_diff}};
  report["off_energy"] = {{"energy", off.energy},
                          {"max_entry_diff", off.max_entry_diff},
                          {"even_channel_diff", off.even_channel_diff},
                          {"odd_channel_diff", off.odd_channel_diff}};
  report["potentials"] = {{"x", pair.baseline_potential.x},
                          {"baseline", pair.baseline_potential.filled()},
                          {"perturbed", pair.perturbed_potential.filled()}};

  if (!f.traces.empty()) {
    std::ofstream csv(f.traces);
    if (!csv) throw UsageError("cannot open --traces path " + f.traces);
    csv << "x,psi0,psi,V0,V\n";
    const auto v0 = pair.baseline_potential.filled();
    const auto v1 = pair.perturbed_potential.filled();
    for (std::size_t i = 0; i < v0.size(); ++i) {
      csv << fmt::format("{},{},{},{},{}\n", num(pair.baseline_trace.x[i]), num(pair.baseline_trace.psi[i].real()),
                         num(pair.perturbed_trace.psi[i].real()), num(v0[i]), num(v1[i]));
    }
  }

  Output sink(f.out, out);
  emit_json(sink.stream(), report);
  return kExitOk;
}

// --------------------------------------------------------------- fredholm

struct FredholmFlags {
  std::string t;
  int quad = 300;
  std::string format = "csv";
  std::string out;
};

int cmd_fredholm(const FredholmFlags& f, std::ostream& out) {
  require_format(f.format);
  const auto grid = parse_t_grid(f.t);
  const auto r = fredholm_report(grid, f.quad);

  Output sink(f.out, out);
  auto& os = sink.stream();
  if (f.format == "csv") {
    os << "t,logF+,logF-,asym_res+,asym_res-,W+,W-,deltaid+,deltaid-\n";
    for (std::size_t i = 0; i < grid.size(); ++i) {
      os << fmt::format("{},{},{},{},{},{},{},{},{}\n", num(grid[i]), num(r.log_f_plus[i]), num(r.log_f_minus[i]),
                        num(r.asym_residual_plus[i]), num(r.asym_residual_minus[i]), num(r.w_plus[i]),
                        num(r.w_minus[i]), num(r.delta_identity_plus[i]), num(r.delta_identity_minus[i]));
    }
    return kExitOk;
  }
  Json report;
  report["command"] = "fredholm";
  report["config"] = {{"t", f.t}, {"quad", f.quad}, {"format", f.format}};
  report["t_grid"] = r.t_grid;
  report["log_f_plus"] = r.log_f_plus;
  report["log_f_minus"] = r.log_f_minus;
  report["asym_residual_plus"] = r.asym_residual_plus;
  report["asym_residual_minus"] = r.asym_residual_minus;
  report["w_plus"] = r.w_plus;
  report["w_minus"] = r.w_minus;
  report["delta_identity_plus"] = r.delta_identity_plus;
  report["delta_identity_minus"] = r.delta_identity_minus;
  emit_json(os, report);
  return kExitOk;
}

// ------------------------------------------------------------------ szego

struct SzegoFlags {
  std::optional<double> alpha;
  std::optional<double> t;
  std::string n;
  int quad = 300;
  std::string format = "csv";
  std::string out;
};

int cmd_szego(const SzegoFlags& f, std::ostream& out) {
  require_format(f.format);
  if (f.alpha.has_value() == f.t.has_value()) throw UsageError("give exactly one of --alpha, --t");
  std::vector<int> sizes;
  for (double v : parse_list(f.n, "--n")) {
    if (v < 1 || v != std::floor(v)) throw UsageError("--n entries must be positive integers");
    sizes.push_back(static_cast<int>(v));
  }

  std::vector<ToeplitzResult> rows;
  std::vector<SzegoLimitReport> checks;
  for (int n : sizes) {
    const double alpha = f.alpha ? *f.alpha : 2.0 * constants::pi * *f.t / n;
    rows.push_back(toeplitz_log_det(ArcSymbol{alpha}, n));
    if (f.t) checks.push_back(szego_limit_check(alpha, n, *f.t, f.quad));
  }

  Output sink(f.out, out);
  auto& os = sink.stream();
  if (f.format == "csv") {
    os << "n,alpha,log_det,asymptotic_eq86,residual\n";
    for (const auto& r : rows) {
      os << fmt::format("{},{},{},{},{}\n", r.n, num(r.alpha), num(r.log_det), num(r.asymptotic), num(r.residual));
    }
    return kExitOk;
  }
  Json report;
  report["command"] = "szego";
  Json config = {{"n", f.n}, {"quad", f.quad}, {"format", f.format}};
  if (f.alpha) config["alpha"] = *f.alpha;
  if (f.t) config["t"] = *f.t;
  report["config"] = config;
  report["toeplitz"] = Json::array();
  for (const auto& r : rows) {
    report["toeplitz"].push_back({{"n", r.n},
                                  {"alpha", r.alpha},
                                  {"log_det", r.log_det},
                                  {"asymptotic", r.asymptotic},
                                  {"residual", r.residual},
                                  {"digits", r.digits}});
  }
  report["cross_check"] = Json::array();
  for (const auto& c : checks) {
    report["cross_check"].push_back({{"alpha", c.alpha},
                                     {"n", c.n},
                                     {"t", c.t},
                                     {"toeplitz_log_det", c.toeplitz_log_det},
                                     {"fredholm_log_det", c.fredholm_log_det},
                                     {"continuum_asymptotic", c.continuum_asymptotic},
                                     {"gap_to_fredholm", c.gap_to_fredholm},
                                     {"gap_to_asymptotic", c.gap_to_asymptotic}});
  }
  emit_json(os, report);
  return kExitOk;
}

// ------------------------------------------------------------- phaseshift

struct PhaseshiftFlags {
  std::string k;
  std::string k_grid;
  std::string format = "csv";
  std::string out;
};

int cmd_phaseshift(const PhaseshiftFlags& f, std::ostream& out) {
  require_format(f.format);
  if (f.k.empty() == f.k_grid.empty()) throw UsageError("give exactly one of --k, --k-grid");
  const auto ks = f.k.empty() ? parse_linspace(f.k_grid, "--k-grid") : parse_list(f.k, "--k");

  Output sink(f.out, out);
  auto& os = sink.stream();
  Json rows = Json::array();
  if (f.format == "csv") {
    os << "k,eta_even,eta_odd,k_tan_2eta_even,k_tan_2eta_odd,abs_a_odd,a_odd_re,a_odd_im,"
          "exp_ieta_even_re,exp_ieta_even_im,arg_exp_ieta_even\n";
  }
  for (double k : ks) {
    const auto p = phase_shift(k);
    const auto j = jost_forms(k);
    const double te = k * std::tan(2.0 * p.eta_even);
    const double to = k * std::tan(2.0 * p.eta_odd);
    if (f.format == "csv") {
      os << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", num(k), num(p.eta_even), num(p.eta_odd), num(te),
                        num(to), num(std::abs(j.a_odd)), num(j.a_odd.real()), num(j.a_odd.imag()),
                        num(j.exp_ieta_even.real()), num(j.exp_ieta_even.imag()), num(std::arg(j.exp_ieta_even)));
    } else {
      rows.push_back({{"k", k},
                      {"eta_even", p.eta_even},
                      {"eta_odd", p.eta_odd},
                      {"k_tan_2eta_even", te},
                      {"k_tan_2eta_odd", to},
                      {"a_odd", complex_json(j.a_odd)},
                      {"abs_a_odd", std::abs(j.a_odd)},
                      {"exp_ieta_even", complex_json(j.exp_ieta_even)},
                      {"arg_exp_ieta_even", std::arg(j.exp_ieta_even)}});
    }
  }
  if (f.format == "json") {
    Json report;
    report["command"] = "phaseshift";
    Json config = {{"format", f.format}};
    if (!f.k.empty()) config["k"] = f.k;
    if (!f.k_grid.empty()) config["k_grid"] = f.k_grid;
    report["config"] = config;
    report["rows"] = rows;
    emit_json(os, report);
  }
  return kExitOk;
}

// ---------------------------------------------------------------- recover

struct RecoverFlags {
  std::string trace;
  double energy = 0.0;
  double node_tol = kNodeTolerance;
  std::string format = "csv";
  std::string out;
};

WaveTrace read_trace_csv(const std::string& path, double energy) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open --trace " + path);
  std::string line;
  std::getline(in, line);
  std::erase_if(line, [](char c) { return c == '\r' || c == ' '; });
  if (line != "x,psi_re,psi_im") throw Error(ErrorCode::kInvalidInput, "trace CSV header must be `x,psi_re,psi_im`");
  WaveTrace t;
  t.energy = Energy(energy);
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto v = parse_list(line, "trace row");
    if (v.size() != 3) throw Error(ErrorCode::kInvalidInput, "trace rows need 3 columns");
    t.x.push_back(v[0]);
    t.psi.emplace_back(v[1], v[2]);
  }
  if (t.x.size() < 6) throw Error(ErrorCode::kInvalidInput, "trace needs at least 6 rows");
  const double h = (t.x.back() - t.x.front()) / static_cast<double>(t.x.size() - 1);
  for (std::size_t i = 1; i < t.x.size(); ++i) {
    if (std::abs(t.x[i] - t.x[i - 1] - h) > 1e-9 * std::abs(h)) {
      throw Error(ErrorCode::kNonUniformGrid, "trace grid must be uniform");
    }
  }
  return t;
}

int cmd_recover(const RecoverFlags& f, std::ostream& out) {
  require_format(f.format);
  if (!(f.energy > 0.0)) throw UsageError("--energy must be positive");
  const auto trace = read_trace_csv(f.trace, f.energy);
  const auto rec = recover_potential(trace, Energy(f.energy), f.node_tol);

  Output sink(f.out, out);
  auto& os = sink.stream();
  if (f.format == "csv") {
    os << "x,V,masked\n";
    for (std::size_t i = 0; i < rec.x.size(); ++i) {
      os << fmt::format("{},{},{}\n", num(rec.x[i]), num(rec.v[i]), rec.masked[i] ? 1 : 0);
    }
    return kExitOk;
  }
  Json report;
  report["command"] = "recover";
  report["config"] = {{"trace", f.trace}, {"energy", f.energy}, {"node_tol", f.node_tol}, {"format", f.format}};
  report["x"] = rec.x;
  report["V"] = rec.v;
  report["masked"] = rec.masked;
  emit_json(os, report);
  return kExitOk;
}

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPreconditionViolated:
    case ErrorCode::kNonPositiveEnergy:
    case ErrorCode::kNonPositiveK:
    case ErrorCode::kInvalidInput:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Scattering matrices, inverse-scattering determinants and Szego asymptotics in 1D", "symscat"};
  app.require_subcommand(1);

  SmatrixFlags sm;
  auto* smatrix = app.add_subcommand("smatrix", "S-matrix of a symmetric potential");
  smatrix->add_option("--well", sm.well, "square well depth,half-width (v0,a)");
  smatrix->add_option("--delta", sm.delta, "attractive delta strength alpha");
  smatrix->add_option("--sampled", sm.sampled, "CSV file with header x,V");
  smatrix->add_option("--energy", sm.energy, "single energy E > 0");
  smatrix->add_option("--energy-grid", sm.energy_grid, "start,stop,count");
  smatrix->add_option("--steps", sm.steps, "Numerov steps")->capture_default_str();
  smatrix->add_option("--format", sm.format, "json or csv")->capture_default_str();
  smatrix->add_option("--out", sm.out, "output path (default: stdout)");

  CounterexampleFlags ce;
  auto* counter = app.add_subcommand("counterexample", "two potentials sharing boundary data at one energy");
  counter->add_option("--q", ce.q, "baseline wavenumber in cos(q x)")->capture_default_str();
  counter->add_option("--eps", ce.eps, "bump amplitude")->capture_default_str();
  counter->add_option("--a", ce.a, "half-width")->capture_default_str();
  counter->add_option("--bump", ce.bump, "smooth or paper")->capture_default_str();
  counter->add_option("--energy", ce.energy, "construction energy")->capture_default_str();
  counter->add_option("--off-energy-shift", ce.shift, "second energy offset")->capture_default_str();
  counter->add_option("--steps", ce.steps, "grid and Numerov steps")->capture_default_str();
  counter->add_option("--traces", ce.traces, "optional CSV of psi0, psi, V0, V");
  counter->add_option("--out", ce.out, "output path (default: stdout)");

  FredholmFlags fr;
  auto* fredholm = app.add_subcommand("fredholm", "sine-kernel Fredholm determinants F+-(t)");
  fredholm->add_option("--t", fr.t, "start:stop:step or comma list")->required();
  fredholm->add_option("--quad", fr.quad, "Gauss-Legendre order")->capture_default_str();
  fredholm->add_option("--format", fr.format, "csv or json")->capture_default_str();
  fredholm->add_option("--out", fr.out, "output path (default: stdout)");

  SzegoFlags sz;
  auto* szego = app.add_subcommand("szego", "Toeplitz determinants of the arc symbol");
  szego->add_option("--alpha", sz.alpha, "gap half-angle alpha in (0, pi)");
  szego->add_option("--t", sz.t, "couple alpha = 2 pi t / n and cross-check F(t)");
  szego->add_option("--n", sz.n, "comma list of matrix sizes")->required();
  szego->add_option("--quad", sz.quad, "Gauss-Legendre order for the F(t) cross-check")->capture_default_str();
  szego->add_option("--format", sz.format, "csv or json")->capture_default_str();
  szego->add_option("--out", sz.out, "output path (default: stdout)");

  PhaseshiftFlags ps;
  auto* phase = app.add_subcommand("phaseshift", "phase shifts and Jost closed forms");
  phase->add_option("--k", ps.k, "comma list of k > 0");
  phase->add_option("--k-grid", ps.k_grid, "start,stop,count");
  phase->add_option("--format", ps.format, "csv or json")->capture_default_str();
  phase->add_option("--out", ps.out, "output path (default: stdout)");

  RecoverFlags rc;
  auto* recover = app.add_subcommand("recover", "potential from a real wavefunction trace");
  recover->add_option("--trace", rc.trace, "CSV with header x,psi_re,psi_im")->required();
  recover->add_option("--energy", rc.energy, "energy E > 0")->required();
  recover->add_option("--node-tol", rc.node_tol, "relative |psi| below which points are masked")
      ->capture_default_str();
  recover->add_option("--format", rc.format, "csv or json")->capture_default_str();
  recover->add_option("--out", rc.out, "output path (default: stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (smatrix->parsed()) return cmd_smatrix(sm, out);
    if (counter->parsed()) return cmd_counterexample(ce, out, err);
    if (fredholm->parsed()) return cmd_fredholm(fr, out);
    if (szego->parsed()) return cmd_szego(sz, out);
    if (phase->parsed()) return cmd_phaseshift(ps, out);
    if (recover->parsed()) return cmd_recover(rc, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_error(e.code()) ? kExitUsage : kExitComputation;
  }
  return kExitUsage;
}

}  // namespace symscat::cli
