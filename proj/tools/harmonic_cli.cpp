// harmonic: spectral reshaping, conjugation, analytic continuation,
// conformal mapping and harmonic correlation over CSV files.
//
// Exit codes: 0 success, 2 input/validation error, 3 numerical
// non-convergence.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmonic/harmonic.hpp"

namespace {

using namespace harmonic;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitNoConvergence = 3;

// Output sink: a file path or "-" for stdout.
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::runtime_error("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

SpectralProfile load_profile_json(const std::string& path, std::size_t n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open profile '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("profile '" + path + "': " + e.what());
  }
  if (!doc.is_object() || !doc.contains("lambda") || !doc["lambda"].is_array())
    throw std::runtime_error("profile '" + path + "': expected {\"lambda\": [...], \"r\": x, \"psi\": y}");
  SpectralProfile p;
  p.lambda = doc["lambda"].get<std::vector<double>>();
  p.r = doc.value("r", 1.0);
  p.psi = doc.value("psi", 0.0);
  if (p.lambda.size() != harmonic_bins(n))
    throw std::runtime_error("profile '" + path + "': lambda has " +
                             std::to_string(p.lambda.size()) + " entries, signal needs " +
                             std::to_string(harmonic_bins(n)));
  return p;
}

SpectralProfile gaussian_profile(std::size_t n, double center, double width) {
  require(width > 0.0 && std::isfinite(center), "gaussian profile: width must be positive");
  SpectralProfile p;
  p.lambda.resize(harmonic_bins(n));
  for (std::size_t k = 1; k <= p.lambda.size(); ++k) {
    const double d = (static_cast<double>(k) - center) / width;
    p.lambda[k - 1] = std::exp(-d * d);
  }
  return p;
}

int cmd_afc(const std::string& input, const std::string& output) {
  const RealSignal u = csv::read_signal_file(input);
  const AfcSpectrum s = afc(u);
  Sink sink(output);
  sink.stream() << "k,a,b\n";
  for (std::size_t k = 0; k < s.a.size(); ++k)
    sink.stream() << k << ',' << csv::format_double(s.a[k]) << ','
                  << csv::format_double(s.b[k]) << '\n';
  if (u.size() % 2 == 0)
    sink.stream() << u.size() / 2 << ',' << csv::format_double(s.nyquist) << ",0\n";
  return kExitOk;
}

int cmd_synth(const std::string& input, std::size_t n, const std::string& output) {
  const csv::Table table = csv::read_table_file(input);
  AfcSpectrum s;
  s.n = n;
  s.a.assign(harmonic_bins(n) + 1, 0.0);
  s.b.assign(harmonic_bins(n) + 1, 0.0);
  for (const auto& row : table.rows) {
    if (row.size() != 3) throw std::runtime_error("'" + input + "': expected rows k,a,b");
    const auto k = static_cast<std::size_t>(row[0]);
    if (row[0] < 0 || row[0] != std::floor(row[0]) || k > n / 2)
      throw std::runtime_error("'" + input + "': bad harmonic index");
    if (n % 2 == 0 && k == n / 2) {
      s.nyquist = row[1];
    } else {
      s.a[k] = row[1];
      s.b[k] = row[2];
    }
  }
  Sink sink(output);
  csv::write_real_signal(sink.stream(), reconstruct(s));
  return kExitOk;
}

int cmd_filter(const std::string& input, const std::string& profile_path,
               const std::string& gaussian, double r, double psi, const std::string& output) {
  const RealSignal u = csv::read_signal_file(input);
  SpectralProfile p;
  if (!profile_path.empty()) {
    p = load_profile_json(profile_path, u.size());
  } else if (!gaussian.empty()) {
    const auto comma = gaussian.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("--gaussian expects center,width");
    p = gaussian_profile(u.size(), std::stod(gaussian.substr(0, comma)),
                         std::stod(gaussian.substr(comma + 1)));
  } else {
    p.lambda.assign(harmonic_bins(u.size()), 1.0);
  }
  p.r = r;
  p.psi = psi;
  const ComplexSignal out = build_general(u.size(), p).apply(u);
  Sink sink(output);
  csv::write_complex_signal(sink.stream(), out);
  return kExitOk;
}

int cmd_conjugate(const std::string& input, const std::string& output) {
  const RealSignal u = csv::read_signal_file(input);
  Sink sink(output);
  csv::write_real_signal(sink.stream(), tilde(u));
  return kExitOk;
}

int cmd_extend(const std::string& input, double r, double psi, bool add_dc,
               const std::string& output) {
  const RealSignal u = csv::read_signal_file(input);
  ComplexSignal out = extend(u, r, psi);
  if (add_dc) {
    const double dc = 0.5 * afc(u).a[0];
    for (auto& v : out) v += dc;
  }
  Sink sink(output);
  csv::write_complex_signal(sink.stream(), out);
  return kExitOk;
}

int cmd_wave(const std::string& input, const std::string& output) {
  const RealSignal density = csv::read_signal_file(input);
  const ComplexSignal psi = reinstate_wave(density);
  Sink sink(output);
  csv::write_complex_signal(sink.stream(), psi);
  return kExitOk;
}

void render_map_svg(const std::string& path, const ConformalSolution& sol, std::size_t rings,
                    std::size_t spokes) {
  const auto mesh = evaluate_disk(sol, rings, sol.n);
  std::vector<svg::Polyline> lines;
  lines.reserve(rings + spokes);
  for (const auto& ring : mesh) lines.push_back({ring, "#1f77b4", true});
  // spokes: center -> boundary along fixed angles of the solved grid
  for (std::size_t j = 0; j < spokes; ++j) {
    const std::size_t column = j * sol.n / spokes;
    svg::Polyline spoke;
    spoke.stroke = "#d62728";
    spoke.points.push_back(sol.w0);
    for (const auto& ring : mesh) spoke.points.push_back(ring[column]);
    lines.push_back(std::move(spoke));
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  svg::write_svg(out, lines);
}

void write_map_report(const std::string& path, const ConformalSolution& sol) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  // one rectangular table: grid row j carries the residual of iteration j
  // while iterations last
  out << "j,s,t,ns,residual\n";
  for (std::size_t j = 0; j < sol.n; ++j) {
    out << j << ',' << csv::format_double(grid_angle(j, sol.n)) << ','
        << csv::format_double(sol.t[j]) << ',' << csv::format_double(sol.ns[j]) << ',';
    if (j < sol.residual_history.size()) out << csv::format_double(sol.residual_history[j]);
    out << '\n';
  }
}

int cmd_confmap(const std::string& curve_path, const std::string& shape, std::size_t n,
                double tol, std::size_t max_iter, std::size_t rings, std::size_t spokes,
                const std::string& center_text, const std::string& svg_path,
                const std::string& report_path) {
  std::unique_ptr<BoundaryCurve> curve;
  if (!curve_path.empty()) {
    const csv::Table table = csv::read_table_file(curve_path);
    ComplexSignal samples;
    samples.reserve(table.rows.size());
    for (const auto& row : table.rows) {
      if (row.size() != 2)
        throw std::runtime_error("'" + curve_path + "': expected two columns re,im");
      samples.emplace_back(row[0], row[1]);
    }
    curve = std::make_unique<BoundaryCurve>(BoundaryCurve::from_samples(samples));
  } else {
    curve = std::make_unique<BoundaryCurve>(parse_shape(shape));
  }
  std::optional<Complex> center;
  if (!center_text.empty()) {
    const auto comma = center_text.find(',');
    if (comma == std::string::npos) throw std::runtime_error("--center expects re,im");
    center = Complex(std::stod(center_text.substr(0, comma)),
                     std::stod(center_text.substr(comma + 1)));
  }
  const ConformalSolution sol = solve(*curve, n, tol, max_iter, center);
  std::cerr << "converged in " << sol.iterations << " iterations, residual "
            << csv::format_double(sol.residual) << "\n";
  if (!svg_path.empty()) render_map_svg(svg_path, sol, rings, spokes);
  if (!report_path.empty()) write_map_report(report_path, sol);
  return kExitOk;
}

int cmd_hc(const std::string& input, const std::string& ref_label, std::size_t top,
           const std::string& key_name, const std::string& output) {
  const csv::Table table = csv::read_table_file(input);
  if (table.header.empty())
    throw std::runtime_error("'" + input + "': price CSV needs a header row of labels");
  if (table.rows.size() < 3)
    throw std::runtime_error("'" + input + "': need at least 3 aligned observations");
  std::size_t ref_col = table.header.size();
  for (std::size_t i = 0; i < table.header.size(); ++i)
    if (table.header[i] == ref_label) ref_col = i;
  if (ref_col == table.header.size())
    throw std::runtime_error("'" + input + "': no column labeled '" + ref_label + "'");

  auto column = [&table](std::size_t i) {
    RealSignal u(table.rows.size());
    for (std::size_t rrow = 0; rrow < table.rows.size(); ++rrow) u[rrow] = table.rows[rrow][i];
    return u;
  };
  const RealSignal reference = column(ref_col);
  std::vector<std::pair<std::string, RealSignal>> candidates;
  for (std::size_t i = 0; i < table.header.size(); ++i)
    candidates.emplace_back(table.header[i], column(i));

  const RankKey key = (key_name == "abs") ? RankKey::magnitude : RankKey::distance_from_one;
  const auto ranked = rank(reference, candidates, key);

  Sink sink(output);
  sink.stream() << "label,hc_re,hc_im,pearson\n";
  std::size_t written = 0;
  for (const auto& entry : ranked) {
    if (entry.degenerate) continue;
    if (top != 0 && written >= top) break;
    sink.stream() << entry.label << ',' << csv::format_double(entry.hc.correlation.real())
                  << ',' << csv::format_double(entry.hc.correlation.imag()) << ','
                  << csv::format_double(entry.pearson) << '\n';
    ++written;
  }
  for (const auto& entry : ranked)
    if (entry.degenerate)
      sink.stream() << "# constant series (not ranked): " << entry.label << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harmonic analysis toolkit: circulant spectral operators over CSV files"};
  app.require_subcommand(1);

  std::string input, output = "-";
  std::string profile_path, gaussian, curve_path, shape, svg_path, report_path;
  std::string ref_label, key_name = "hc1", center_text;
  double r = 1.0, psi = 0.0, tol = 1e-10;
  std::size_t n = 256, max_iter = 50, rings = 8, spokes = 16, top = 0;
  bool add_dc = false;

  auto* afc_cmd = app.add_subcommand("afc", "Real Fourier coefficient pairs of a signal");
  afc_cmd->add_option("input", input, "one-column signal CSV")->required();
  afc_cmd->add_option("-o,--output", output, "output CSV (default stdout)");

  auto* synth_cmd = app.add_subcommand("synth", "Reconstruct a signal from k,a,b rows");
  synth_cmd->add_option("input", input, "coefficient CSV (k,a,b)")->required();
  synth_cmd->add_option("--n", n, "signal length")->required()->check(CLI::Range(std::size_t{3}, std::size_t{1} << 24));
  synth_cmd->add_option("-o,--output", output, "output CSV (default stdout)");

  auto* filter_cmd = app.add_subcommand("filter", "Apply the spectral reshaping operator");
  filter_cmd->add_option("input", input, "one-column signal CSV")->required();
  auto* popt = filter_cmd->add_option("--profile", profile_path, "profile JSON file");
  auto* gopt = filter_cmd->add_option("--gaussian", gaussian, "center,width band profile");
  popt->excludes(gopt);
  filter_cmd->add_option("--r", r, "radius ratio (default 1)")->check(CLI::NonNegativeNumber);
  filter_cmd->add_option("--psi", psi, "phase shift in radians")->check(CLI::Number);
  filter_cmd->add_option("-o,--output", output, "output CSV re,im (default stdout)");

  auto* conj_cmd = app.add_subcommand("conjugate", "Harmonic conjugate via the tilde operator");
  conj_cmd->add_option("input", input, "one-column signal CSV")->required();
  conj_cmd->add_option("-o,--output", output, "output CSV (default stdout)");

  auto* extend_cmd = app.add_subcommand("extend", "Analytic continuation to a concentric circle");
  extend_cmd->add_option("input", input, "one-column signal CSV")->required();
  extend_cmd->add_option("--r", r, "radius ratio")->required()->check(CLI::NonNegativeNumber);
  extend_cmd->add_option("--psi", psi, "phase shift in radians")->check(CLI::Number);
  extend_cmd->add_flag("--add-dc", add_dc, "add back the a_0/2 constant of the input");
  extend_cmd->add_option("-o,--output", output, "output CSV re,im (default stdout)");

  auto* wave_cmd = app.add_subcommand("wave", "Reinstate a wave function from its density");
  wave_cmd->add_option("input", input, "one-column strictly positive density CSV")->required();
  wave_cmd->add_option("-o,--output", output, "output CSV re,im (default stdout)");

  auto* conf_cmd = app.add_subcommand("confmap", "Conformal map from the unit disk");
  auto* copt = conf_cmd->add_option("--curve", curve_path, "boundary sample CSV (re,im)");
  auto* sopt = conf_cmd->add_option("--shape", shape, "built-in shape spec, e.g. ellipse:a=2,b=1");
  copt->excludes(sopt);
  conf_cmd->add_option("--n", n, "solver grid size (default 256)")->check(CLI::Range(std::size_t{16}, std::size_t{1} << 20));
  conf_cmd->add_option("--tol", tol, "residual tolerance (default 1e-10)")->check(CLI::PositiveNumber);
  conf_cmd->add_option("--max-iter", max_iter, "iteration cap (default 50)")->check(CLI::PositiveNumber);
  conf_cmd->add_option("--rings", rings, "mesh rings (default 8)")->check(CLI::PositiveNumber);
  conf_cmd->add_option("--spokes", spokes, "mesh spokes (default 16)")->check(CLI::Range(std::size_t{1}, std::size_t{1} << 16));
  conf_cmd->add_option("--center", center_text, "pin the image of 0 to re,im (default: boundary mean)");
  conf_cmd->add_option("--svg", svg_path, "write mesh image SVG here");
  conf_cmd->add_option("--report", report_path, "write residual/reparametrization CSV here");

  auto* hc_cmd = app.add_subcommand("hc", "Rank series by harmonic correlation to a reference");
  hc_cmd->add_option("--input", input, "price CSV with labeled header")->required();
  hc_cmd->add_option("--ref", ref_label, "reference column label")->required();
  hc_cmd->add_option("--top", top, "keep only the first K rows");
  hc_cmd->add_option("--key", key_name, "ranking key: hc1 (|HC-1| asc) or abs (|HC| desc)")
      ->check(CLI::IsMember({"hc1", "abs"}));
  hc_cmd->add_option("-o,--output", output, "output CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (afc_cmd->parsed()) return cmd_afc(input, output);
    if (synth_cmd->parsed()) return cmd_synth(input, n, output);
    if (filter_cmd->parsed()) return cmd_filter(input, profile_path, gaussian, r, psi, output);
    if (conj_cmd->parsed()) return cmd_conjugate(input, output);
    if (extend_cmd->parsed()) return cmd_extend(input, r, psi, add_dc, output);
    if (wave_cmd->parsed()) return cmd_wave(input, output);
    if (conf_cmd->parsed()) {
      if (curve_path.empty() && shape.empty())
        throw std::runtime_error("confmap needs --curve or --shape");
      return cmd_confmap(curve_path, shape, n, tol, max_iter, rings, spokes, center_text,
                         svg_path, report_path);
    }
    if (hc_cmd->parsed()) return cmd_hc(input, ref_label, top, key_name, output);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNoConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
