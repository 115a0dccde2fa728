// SPDX-License-Identifier: Apache-2.0

#include "swanson/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include "CLI11.hpp"
#include "json.hpp"
#include "swanson/continuum.hpp"
#include "swanson/core.hpp"
#include "swanson/dynamics.hpp"
#include "swanson/eigensystems.hpp"
#include "swanson/ep_analysis.hpp"
#include "swanson/errors.hpp"
#include "swanson/pairing.hpp"

namespace swanson::cli
{

using json = nlohmann::ordered_json;

std::string format_double(double v)
{
  if (std::isnan(v))
  {
    return "nan";
  }
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace
{

// CSV built row by row, LF line ends.
class Csv
{
 public:
  explicit Csv(const std::vector<std::string> &header) { row_strings(header); }

  void row(const std::vector<double> &cells)
  {
    std::vector<std::string> s;
    s.reserve(cells.size());
    for (double c : cells)
    {
      s.push_back(format_double(c));
    }
    row_strings(s);
  }

  void row_strings(const std::vector<std::string> &cells)
  {
    for (std::size_t i = 0; i < cells.size(); i++)
    {
      text_ += (i ? "," : "") + cells[i];
    }
    text_ += '\n';
  }

  const std::string &text() const { return text_; }

 private:
  std::string text_;
};

json number(double v)
{
  return std::isfinite(v) ? json(v) : json(nullptr);
}

json number(const std::optional<double> &v)
{
  return v ? number(*v) : json(nullptr);
}

json cnum(complex z)
{
  return json::array({number(z.real()), number(z.imag())});
}

std::string opt_cell(const std::optional<double> &v)
{
  return v ? format_double(*v) : "";
}

struct Common
{
  ModelParams params;
  std::string format = "csv";
  std::string output;
};

json params_json(const ModelParams &p)
{
  return json{{"omega", p.omega}, {"alpha", p.alpha}, {"beta", p.beta}, {"b0", p.b0}, {"hbar", p.hbar}};
}

json header(const std::string &command, const ModelParams &p)
{
  json j;
  j["schema"] = 1;
  j["command"] = command;
  j["params"] = params_json(p);
  return j;
}

void add_model_options(CLI::App *sub, Common &c)
{
  sub->add_option("--omega", c.params.omega, "omega")->capture_default_str();
  sub->add_option("--alpha", c.params.alpha, "alpha")->capture_default_str();
  sub->add_option("--beta", c.params.beta, "beta")->capture_default_str();
  sub->add_option("--b0", c.params.b0, "length scale b0")->capture_default_str();
  sub->add_option("--hbar", c.params.hbar, "hbar")->capture_default_str();
}

void add_output_options(CLI::App *sub, Common &c)
{
  sub->add_option("--format", c.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("-o,--output", c.output, "output file");
}

std::filesystem::path resolve_output(const std::string &command, const Common &c)
{
  const char *dir = std::getenv("SWANSON_OUTPUT_DIR");
  std::filesystem::path path;
  if (!c.output.empty())
  {
    path = c.output;
  }
  else if (dir && *dir)
  {
    path = command + "." + c.format;
  }
  else
  {
    return {};
  }
  if (path.is_relative() && dir && *dir)
  {
    path = std::filesystem::path(dir) / path;
  }
  return path;
}

void write_file(const std::filesystem::path &path, const std::string &text)
{
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
  {
    throw Error("cannot open output file " + path.string());
  }
  f << text;
  if (!f)
  {
    throw Error("failed writing " + path.string());
  }
}

std::vector<double> make_grid(double half_width, int points, double b0)
{
  if (points < 1)
  {
    throw InvalidParameters("--points must be >= 1");
  }
  return uniform_grid(half_width * b0, points);
}

std::vector<complex> complex_list(const std::vector<double> &re, const std::vector<double> &im)
{
  if (im.size() > re.size())
  {
    throw InvalidParameters("more imaginary parts than coefficients");
  }
  std::vector<complex> out;
  for (std::size_t i = 0; i < re.size(); i++)
  {
    out.emplace_back(re[i], i < im.size() ? im[i] : 0.0);
  }
  return out;
}

Branch parse_branch(const std::string &s)
{
  if (s == "plus")
  {
    return Branch::Plus;
  }
  if (s == "minus")
  {
    return Branch::Minus;
  }
  throw InvalidParameters("branch must be plus or minus");
}

// Each command fills the summary text and the CSV/JSON payloads.
struct Result
{
  std::string summary;
  std::string csv;
  json doc;
};

Result cmd_classify(const Common &c)
{
  const Region r = classify(c.params);
  Result res;
  res.summary = std::string(region_name(r)) + "\n";
  Csv csv({"region_id", "region"});
  csv.row_strings({std::string(region_id(r)), std::string(region_name(r))});
  res.csv = csv.text();
  res.doc = header("classify", c.params);
  res.doc["region_id"] = region_id(r);
  res.doc["region"] = region_name(r);
  return res;
}

Result cmd_derive(const Common &c)
{
  const DerivedQuantities d = derive(c.params);
  const Region r = classify(c.params);
  Result res;
  Csv csv({"quantity", "value"});
  csv.row_strings({"omega_sq", format_double(d.omega_sq)});
  csv.row_strings({"omega_cap_re", format_double(d.omega_cap.real())});
  csv.row_strings({"omega_cap_im", format_double(d.omega_cap.imag())});
  csv.row_strings({"detuning", format_double(d.detuning)});
  csv.row_strings({"m_eff", opt_cell(d.m_eff)});
  csv.row_strings({"k_stiff", opt_cell(d.k_stiff)});
  csv.row_strings({"sigma", opt_cell(d.sigma)});
  csv.row_strings({"upsilon_coeff", opt_cell(d.upsilon_coeff)});
  csv.row_strings({"tau_coeff", opt_cell(d.tau_coeff)});
  res.csv = csv.text();
  res.doc = header("derive", c.params);
  res.doc["region"] = region_name(r);
  res.doc["omega_sq"] = d.omega_sq;
  res.doc["omega_cap"] = cnum(d.omega_cap);
  res.doc["detuning"] = d.detuning;
  res.doc["m_eff"] = number(d.m_eff);
  res.doc["k_stiff"] = number(d.k_stiff);
  res.doc["sigma"] = number(d.sigma);
  res.doc["upsilon_coeff"] = number(d.upsilon_coeff);
  res.doc["tau_coeff"] = number(d.tau_coeff);
  res.summary = std::string(region_name(r)) + ", Omega^2 = " + format_double(d.omega_sq) + "\n";
  return res;
}

Result cmd_surface(double range, int n)
{
  const std::vector<SurfacePoint> grid = surface_grid(range, n);
  Csv csv({"alpha_over_omega", "beta_over_omega", "omega_sq", "mass", "upsilon_coeff", "region"});
  json rows = json::array();
  int flips = 0;
  for (const SurfacePoint &s : grid)
  {
    csv.row_strings({format_double(s.alpha_over_omega), format_double(s.beta_over_omega),
                     format_double(s.omega_sq), opt_cell(s.mass), opt_cell(s.upsilon_coeff),
                     std::string(region_id(s.region))});
    rows.push_back(json{{"alpha_over_omega", s.alpha_over_omega},
                        {"beta_over_omega", s.beta_over_omega},
                        {"omega_sq", s.omega_sq},
                        {"mass", number(s.mass)},
                        {"upsilon_coeff", number(s.upsilon_coeff)},
                        {"region", region_id(s.region)}});
    flips += s.mass && *s.mass < 0 ? 1 : 0;
  }
  Result res;
  res.csv = csv.text();
  res.doc = header("surface", ModelParams{});
  res.doc.erase("params");
  res.doc["range"] = range;
  res.doc["n"] = n;
  res.doc["points"] = std::move(rows);
  res.summary = std::to_string(grid.size()) + " grid points, " + std::to_string(flips) +
                " with negative mass\n";
  return res;
}

Result cmd_states(const Common &c, int n_max, const std::vector<double> &continuum, double half,
                  int points)
{
  Result res;
  res.doc = header("states", c.params);
  const Region r = classify(c.params);
  res.doc["region"] = region_name(r);
  if (!continuum.empty())
  {
    // continuum_state values: E, side on the grid
    Csv csv({"energy", "side", "x", "re_value", "im_value"});
    json list = json::array();
    const std::vector<double> grid = make_grid(half, points, c.params.b0);
    for (double e : continuum)
    {
      for (int side : {1, -1})
      {
        const GeneralizedFunction f = continuum_state(c.params, e, side, ContinuumKind::PhiTilde);
        json vals = json::array();
        for (double x : grid)
        {
          const complex v = evaluate(f, x, c.params);
          csv.row({e, double(side), x, v.real(), v.imag()});
          vals.push_back(cnum(v));
        }
        list.push_back(json{{"energy", e}, {"side", side}, {"nu", cnum(continuum_nu(c.params, e))},
                            {"values", std::move(vals)}});
      }
    }
    res.csv = csv.text();
    res.doc["grid"] = grid;
    res.doc["continuum"] = std::move(list);
    res.summary = std::string(region_name(r)) + ": " + std::to_string(continuum.size()) +
                  " continuum energies on " + std::to_string(grid.size()) + " points\n";
    return res;
  }
  const std::vector<EigenstateSpec> st = discrete_states(c.params, n_max);
  Csv csv({"n", "branch", "re_E", "im_E", "re_dual_E", "im_dual_E"});
  json list = json::array();
  for (const EigenstateSpec &s : st)
  {
    csv.row_strings({std::to_string(s.n), std::string(branch_name(s.branch)), format_double(s.energy.real()),
                     format_double(s.energy.imag()), format_double(s.dual_energy.real()),
                     format_double(s.dual_energy.imag())});
    list.push_back(json{{"n", s.n},
                        {"branch", branch_name(s.branch)},
                        {"energy", cnum(s.energy)},
                        {"dual_energy", cnum(s.dual_energy)},
                        {"right", s.right_fn.variant_name()},
                        {"left", s.left_fn.variant_name()}});
  }
  res.csv = csv.text();
  res.doc["states"] = std::move(list);
  res.summary = std::string(region_name(r)) + ": " + std::to_string(st.size()) + " states, E_0 = " +
                format_double(st.front().energy.real()) + " + " + format_double(st.front().energy.imag()) +
                "i\n";
  return res;
}

Result cmd_gram(const Common &c, int n_max, bool metric)
{
  const GramReport g = gram(c.params, n_max, metric ? GramKind::Metric : GramKind::RightLeft);
  Csv csv({"i", "j", "re", "im"});
  json m = json::array();
  for (int i = 0; i < g.dim(); i++)
  {
    json row = json::array();
    for (int j = 0; j < g.dim(); j++)
    {
      const complex v = g.at(i, j);
      csv.row({double(i), double(j), v.real(), v.imag()});
      row.push_back(cnum(v));
    }
    m.push_back(std::move(row));
  }
  Result res;
  res.csv = csv.text();
  res.doc = header("gram", c.params);
  res.doc["region"] = region_name(classify(c.params));
  res.doc["kind"] = metric ? "metric" : "right_left";
  res.doc["n_max"] = n_max;
  res.doc["blocks"] = g.blocks;
  res.doc["max_offdiag"] = g.max_offdiag;
  res.doc["max_diag_err"] = g.max_diag_err;
  res.doc["matrix"] = std::move(m);
  res.summary = "dim " + std::to_string(g.dim()) + ", max_offdiag " + format_double(g.max_offdiag) +
                ", max_diag_err " + format_double(g.max_diag_err) + "\n";
  return res;
}

Result cmd_reconstruct(const Common &c, int n_max, double shift, double width, const std::string &sector,
                       double half, int points, bool spectral)
{
  const GeneralizedFunction target = gaussian_target(shift * c.params.b0, width, c.params);
  const std::vector<double> grid = make_grid(half, points, c.params.b0);
  const Region r = classify(c.params);
  std::vector<complex> coeffs;
  double sup = 0.0;
  std::vector<complex> hvals;
  if (r == Region::RegionII || r == Region::RegionIV)
  {
    const Branch b = parse_branch(sector);
    const ResonantExpansion e = resonant_expansion(c.params, target, n_max, b, grid);
    coeffs = e.coefficients;
    sup = e.sup_error;
    if (spectral)
    {
      hvals = spectral_apply(c.params, target, n_max, b, grid);
    }
  }
  else
  {
    const Reconstruction e = reconstruct(c.params, target, n_max, grid);
    coeffs = e.coefficients;
    sup = e.sup_error;
  }
  Result res;
  Csv csv({"n", "re_c", "im_c"});
  for (std::size_t n = 0; n < coeffs.size(); n++)
  {
    csv.row({double(n), coeffs[n].real(), coeffs[n].imag()});
  }
  res.csv = csv.text();
  res.doc = header("reconstruct", c.params);
  res.doc["region"] = region_name(r);
  res.doc["target"] = json{{"shift", shift}, {"width", width}};
  res.doc["n_max"] = n_max;
  json cs = json::array();
  for (const complex &z : coeffs)
  {
    cs.push_back(cnum(z));
  }
  res.doc["coefficients"] = std::move(cs);
  res.doc["sup_error"] = sup;
  if (!hvals.empty())
  {
    json h = json::array();
    for (const complex &z : hvals)
    {
      h.push_back(cnum(z));
    }
    res.doc["grid"] = grid;
    res.doc["spectral_apply"] = std::move(h);
  }
  res.summary = std::string(region_name(r)) + ": " + std::to_string(coeffs.size()) +
                " coefficients, sup_error " + format_double(sup) + "\n";
  return res;
}

Result cmd_poles(const Common &c, int n_scan, int spu, double probe_window, double probe_energy)
{
  const PoleScanReport rep = pole_scan(c.params, n_scan, spu);
  Csv csv({"im_E", "log_abs_gamma"});
  for (std::size_t i = 0; i < rep.energies_imag.size(); i++)
  {
    csv.row({rep.energies_imag[i], rep.log_gamma_magnitude[i]});
  }
  Result res;
  res.csv = csv.text();
  res.doc = header("poles", c.params);
  res.doc["region"] = region_name(classify(c.params));
  res.doc["n_scan"] = n_scan;
  res.doc["samples_per_unit"] = spu;
  res.doc["im_E"] = rep.energies_imag;
  res.doc["log_abs_gamma"] = rep.log_gamma_magnitude;
  res.doc["detected_poles"] = rep.detected_poles;
  std::ostringstream s;
  s << "poles at";
  for (double p : rep.detected_poles)
  {
    s << ' ' << format_double(p);
  }
  s << " (units hbar|Omega|)\n";
  if (probe_window > 0.0)
  {
    const double u = c.params.hbar * derive(c.params).abs_omega();
    const complex q = delta_normalization_probe(c.params, probe_energy * u, probe_window * u);
    res.doc["probe"] = json{{"energy", probe_energy}, {"window", probe_window}, {"value", cnum(q)}};
    res.doc["continuum_constant"] = continuum_constant(c.params);
    s << "delta probe " << format_double(q.real()) << "\n";
  }
  res.summary = s.str();
  return res;
}

Result cmd_evolve(const Common &c, const std::vector<complex> &coeffs, const std::vector<complex> &minus,
                  const std::vector<complex> &plus, const std::string &kind, double t_max, int steps,
                  double x)
{
  if (steps < 1)
  {
    throw InvalidParameters("--steps must be >= 1");
  }
  const Region r = classify(c.params);
  Csv csv({"t", "re_value", "im_value"});
  json series = json::array();
  Result res;
  res.doc = header("evolve", c.params);
  res.doc["region"] = region_name(r);
  if (r == Region::RegionII || r == Region::RegionIV)
  {
    bool overflow = false;
    json scales = json::array();
    for (int k = 0; k <= steps; k++)
    {
      const double t = t_max * k / steps;
      const SectorEvolution e = evolve_sector(c.params, minus, plus, t, {x * c.params.b0});
      // values beyond double range are written as log-scaled
      csv.row({t, e.values[0].real(), e.values[0].imag()});
      series.push_back(cnum(e.values[0]));
      scales.push_back(e.log_scale);
      overflow = overflow || e.overflow;
    }
    json m = json::array(), p = json::array();
    for (const complex &z : minus)
    {
      m.push_back(cnum(z));
    }
    for (const complex &z : plus)
    {
      p.push_back(cnum(z));
    }
    res.doc["state"] = json{{"minus", std::move(m)}, {"plus", std::move(p)}, {"x", x}};
    res.doc["values"] = std::move(series);
    res.doc["log_scale"] = std::move(scales);
    res.doc["overflow"] = overflow;
    res.summary = std::string(region_name(r)) + ": xi(x, t) at " + std::to_string(steps + 1) + " times" +
                  (overflow ? " (log-scaled, overflow)" : "") + "\n";
  }
  else
  {
    const ObservableKind k = parse_observable(kind);
    const StateVector s = make_state(c.params, coeffs);
    for (int i = 0; i <= steps; i++)
    {
      const double t = t_max * i / steps;
      const complex v = evolve_expectation(s, k, c.params, t);
      csv.row({t, v.real(), v.imag()});
      series.push_back(cnum(v));
    }
    json cs = json::array();
    for (const complex &z : s.coeffs)
    {
      cs.push_back(cnum(z));
    }
    res.doc["state"] = json{{"coeffs", std::move(cs)}, {"normalized", s.normalized}};
    res.doc["kind"] = observable_name(k);
    res.doc["values"] = std::move(series);
    res.summary = std::string(region_name(r)) + ": <" + std::string(observable_name(k)) + ">(0) = " +
                  format_double(evolve_expectation(s, k, c.params, 0.0).real()) + "\n";
  }
  res.doc["t_max"] = t_max;
  res.doc["steps"] = steps;
  res.csv = csv.text();
  return res;
}

Result cmd_ep_sweep(const Common &c, const std::string &mode, int n, const std::string &side,
                    const std::string &branch, const std::vector<double> &values)
{
  Result res;
  res.doc = header("ep-sweep", c.params);
  res.doc["mode"] = mode;
  if (mode == "flow")
  {
    const auto rows = ep_spectrum_flow(c.params.omega, c.params.beta, n, values, c.params);
    Csv csv({"eps", "n", "re_E_I", "im_E_I", "re_E_II_plus", "im_E_II_plus", "re_E_II_minus", "im_E_II_minus"});
    json list = json::array();
    for (const SpectrumFlowRow &r : rows)
    {
      csv.row({r.eps, double(r.n), r.energy_side_i.real(), r.energy_side_i.imag(), r.energy_side_ii_plus.real(),
               r.energy_side_ii_plus.imag(), r.energy_side_ii_minus.real(), r.energy_side_ii_minus.imag()});
      list.push_back(json{{"eps", r.eps},
                          {"n", r.n},
                          {"E_I", cnum(r.energy_side_i)},
                          {"E_II_plus", cnum(r.energy_side_ii_plus)},
                          {"E_II_minus", cnum(r.energy_side_ii_minus)}});
    }
    res.csv = csv.text();
    res.doc["rows"] = std::move(list);
    res.summary = std::to_string(rows.size()) + " spectrum-flow rows\n";
    return res;
  }
  LimitSweepReport rep;
  if (mode == "ep")
  {
    if (side != "I" && side != "II")
    {
      throw InvalidParameters("--side must be I or II");
    }
    rep = sweep_to_EP(c.params.omega, c.params.beta, n, side == "I" ? EpSide::I : EpSide::II, values, c.params);
    res.doc["side"] = side;
  }
  else if (mode == "boundary")
  {
    const Branch b = parse_branch(branch);
    rep = sweep_to_boundary_I_III(c.params.alpha, c.params.beta, n, b, values, c.params);
    res.doc["branch"] = branch;
    if (b == Branch::Minus && rep.battery.size() >= 2)
    {
      res.doc["cauchy_tail"] = cauchy_tail(rep);
    }
  }
  else
  {
    throw InvalidParameters("--mode must be ep, boundary or flow");
  }
  Csv csv({"param", "distance", "re_E", "im_E"});
  json d = json::array(), e = json::array();
  for (std::size_t i = 0; i < rep.parameter_values.size(); i++)
  {
    csv.row({rep.parameter_values[i], rep.distances[i], rep.energies[i].real(), rep.energies[i].imag()});
    e.push_back(cnum(rep.energies[i]));
  }
  res.csv = csv.text();
  res.doc["n"] = n;
  res.doc["param"] = rep.parameter_values;
  res.doc["distance"] = rep.distances;
  res.doc["energy"] = std::move(e);
  res.summary = "final distance " + format_double(rep.distances.back()) + " at " +
                format_double(rep.parameter_values.back()) + "\n";
  return res;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Spectral toolkit for the Swanson Hamiltonian", "swanson"};
  app.require_subcommand(1);
  Common common;
  std::function<Result()> action;
  std::string command;

  const auto make_sub = [&](const std::string &name, const std::string &help) {
    CLI::App *sub = app.add_subcommand(name, help);
    add_model_options(sub, common);
    add_output_options(sub, common);
    return sub;
  };

  CLI::App *classify_cmd = make_sub("classify", "region of a parameter point");
  classify_cmd->callback([&] { command = "classify"; action = [&] { return cmd_classify(common); }; });

  CLI::App *derive_cmd = make_sub("derive", "derived quantities");
  derive_cmd->callback([&] { command = "derive"; action = [&] { return cmd_derive(common); }; });

  double range = 2.0;
  int surface_n = 101;
  CLI::App *surface_cmd = make_sub("surface", "region and mass surfaces over (alpha/omega, beta/omega)");
  surface_cmd->add_option("--range", range, "half-width of the grid")->capture_default_str();
  surface_cmd->add_option("--n", surface_n, "points per axis")->capture_default_str();
  surface_cmd->callback([&] {
    command = "surface";
    action = [&] { return cmd_surface(range, surface_n); };
  });

  int n_max = 10;
  double half = 6.0;
  int points = 121;
  std::vector<double> continuum_energies;
  CLI::App *states_cmd = make_sub("states", "discrete spectrum, or continuum states with --continuum");
  states_cmd->add_option("--nmax", n_max, "highest level")->capture_default_str();
  states_cmd->add_option("--continuum", continuum_energies, "continuum energies (Regions II/IV)");
  states_cmd->add_option("--half-width", half, "grid half-width in units of b0")->capture_default_str();
  states_cmd->add_option("--points", points, "grid points")->capture_default_str();
  states_cmd->callback([&] {
    command = "states";
    action = [&] { return cmd_states(common, n_max, continuum_energies, half, points); };
  });

  bool metric = false;
  CLI::App *gram_cmd = make_sub("gram", "biorthogonality gram matrix");
  gram_cmd->add_option("--nmax", n_max, "highest level")->capture_default_str();
  gram_cmd->add_flag("--metric", metric, "metric inner products of right states");
  gram_cmd->callback([&] {
    command = "gram";
    action = [&] { return cmd_gram(common, n_max, metric); };
  });

  double shift = 0.0;
  double width = 1.0;
  std::string sector = "minus";
  bool spectral = false;
  CLI::App *rec_cmd = make_sub("reconstruct", "expand a Gaussian in the discrete basis");
  rec_cmd->add_option("--nmax", n_max, "highest level")->capture_default_str();
  rec_cmd->add_option("--shift", shift, "centre in units of b0")->capture_default_str();
  rec_cmd->add_option("--width", width, "width in units of b0")->capture_default_str();
  rec_cmd->add_option("--sector", sector, "plus or minus (Regions II/IV)")->capture_default_str();
  rec_cmd->add_option("--half-width", half, "grid half-width in units of b0")->capture_default_str();
  rec_cmd->add_option("--points", points, "grid points")->capture_default_str();
  rec_cmd->add_flag("--spectral", spectral, "also apply the truncated spectral resolution of H");
  rec_cmd->callback([&] {
    command = "reconstruct";
    action = [&] { return cmd_reconstruct(common, n_max, shift, width, sector, half, points, spectral); };
  });

  int n_scan = 3;
  int spu = 200;
  double probe_window = 0.0;
  double probe_energy = 0.0;
  CLI::App *poles_cmd = make_sub("poles", "Gamma-pole scan along imaginary energies");
  poles_cmd->add_option("--nscan", n_scan, "levels to scan")->capture_default_str();
  poles_cmd->add_option("--spu", spu, "samples per unit")->capture_default_str();
  poles_cmd->add_option("--probe-window", probe_window, "delta-probe window in hbar|Omega| (0: off)")
      ->capture_default_str();
  poles_cmd->add_option("--probe-energy", probe_energy, "delta-probe centre in hbar|Omega|")
      ->capture_default_str();
  poles_cmd->callback([&] {
    command = "poles";
    action = [&] { return cmd_poles(common, n_scan, spu, probe_window, probe_energy); };
  });

  std::vector<double> coeffs{1.0, 1.0}, coeffs_im, minus_re, minus_im, plus_re, plus_im;
  std::string kind = "X";
  double t_max = 10.0;
  int steps = 100;
  double x0 = 0.0;
  CLI::App *evolve_cmd = make_sub("evolve", "expectation values (I/III) or sector wavefunctions (II/IV)");
  evolve_cmd->add_option("--coeffs", coeffs, "real parts of the state coefficients")->capture_default_str();
  evolve_cmd->add_option("--coeffs-im", coeffs_im, "imaginary parts");
  evolve_cmd->add_option("--kind", kind, "X, P, X2 or P2")->capture_default_str();
  evolve_cmd->add_option("--minus", minus_re, "minus-branch coefficients (II/IV)");
  evolve_cmd->add_option("--minus-im", minus_im, "imaginary parts");
  evolve_cmd->add_option("--plus", plus_re, "plus-branch coefficients (II/IV)");
  evolve_cmd->add_option("--plus-im", plus_im, "imaginary parts");
  evolve_cmd->add_option("--x", x0, "evaluation point in units of b0 (II/IV)")->capture_default_str();
  evolve_cmd->add_option("--t-max", t_max, "final time")->capture_default_str();
  evolve_cmd->add_option("--steps", steps, "time steps")->capture_default_str();
  evolve_cmd->callback([&] {
    command = "evolve";
    action = [&] {
      return cmd_evolve(common, complex_list(coeffs, coeffs_im), complex_list(minus_re, minus_im),
                        complex_list(plus_re, plus_im), kind, t_max, steps, x0);
    };
  });

  std::string mode = "ep";
  int sweep_n = 0;
  std::string side = "I";
  std::string branch = "plus";
  std::vector<double> values{0.1, 0.01, 0.001};
  CLI::App *ep_cmd = make_sub("ep-sweep", "limits onto the exceptional points and the boundary I-III");
  ep_cmd->add_option("--mode", mode, "ep, boundary or flow")->capture_default_str();
  ep_cmd->add_option("--n", sweep_n, "level (highest level for flow)")->capture_default_str();
  ep_cmd->add_option("--side", side, "I or II (mode ep)")->capture_default_str();
  ep_cmd->add_option("--branch", branch, "plus or minus (mode boundary)")->capture_default_str();
  ep_cmd->add_option("--values", values, "eps list (ep, flow) or G list (boundary)")->capture_default_str();
  ep_cmd->callback([&] {
    command = "ep-sweep";
    action = [&] { return cmd_ep_sweep(common, mode, sweep_n, side, branch, values); };
  });

  try
  {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  }
  catch (const CLI::CallForHelp &e)
  {
    return app.exit(e, out, err);
  }
  catch (const CLI::CallForAllHelp &e)
  {
    return app.exit(e, out, err);
  }
  catch (const CLI::ParseError &e)
  {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try
  {
    common.params.validate();
    const Result res = action();
    const std::filesystem::path path = resolve_output(command, common);
    if (!path.empty())
    {
      write_file(path, common.format == "json" ? res.doc.dump(2) + "\n" : res.csv);
    }
    out << res.summary;
    if (!path.empty())
    {
      out << "wrote " << path.string() << "\n";
    }
    return kExitOk;
  }
  catch (const InvalidParameters &e)
  {
    err << "swanson " << command << ": " << e.what() << "\n";
    return kExitUsage;
  }
  catch (const std::exception &e)
  {
    err << "swanson " << command << ": " << e.what() << "\n";
    return kExitNumerical;
  }
}

}  // namespace swanson::cli
