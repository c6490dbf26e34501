#include "flagmodel/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "flagmodel/bounds.hpp"
#include "flagmodel/embed.hpp"
#include "flagmodel/geometry.hpp"
#include "flagmodel/io.hpp"
#include "flagmodel/repdim.hpp"
#include "flagmodel/reports.hpp"

namespace flagmodel::cli {

namespace {

enum class Format { Json, Csv, Text };

struct GlobalOptions {
  std::string format = "json";
  std::uint64_t seed = 0;
  Tolerances tol;

  Format fmt() const {
    if (format == "csv") return Format::Csv;
    if (format == "text") return Format::Text;
    return Format::Json;
  }
};

struct SpectrumOptions {
  std::string ks;
  std::string spectrum;
};

std::string join(const std::vector<double>& v, const char* sep = ",") {
  std::ostringstream os;
  os << std::setprecision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

std::string real(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

void write_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << '\n'; }

void write_csv_matrix(std::ostream& out, const Rows& rows) {
  for (const auto& row : rows) out << join(row) << '\n';
}

void write_text_matrix(std::ostream& out, const Rows& rows) {
  write_matrix_text(out, from_rows(rows));
}

FlagSignature signature_from(int n, const std::string& ks) {
  if (ks.empty()) throw FlagError(ErrorCode::InvalidArgument, "--ks is required");
  return make_signature(n, parse_int_list(ks));
}

Spectrum spectrum_from(const FlagSignature& sig, const std::string& text,
                       const Tolerances& tol) {
  if (text.empty()) return default_traceless_spectrum(sig);
  return make_spectrum(sig, parse_real_list(text), tol);
}

std::vector<double> sorted_eigenvalues(const Matrix& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(x, Eigen::EigenvaluesOnly);
  const Vector& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

// ---------------------------------------------------------------- embed

struct EmbedArgs {
  int n = 0;
  SpectrumOptions spec;
  bool identity = false;
  std::string q_file;
};

int cmd_embed(const EmbedArgs& a, const GlobalOptions& g, std::ostream& out) {
  const FlagSignature sig = signature_from(a.n, a.spec.ks);
  const Spectrum spec = spectrum_from(sig, a.spec.spectrum, g.tol);
  FlagPoint f = identity_flag(sig);
  if (!a.q_file.empty()) {
    f = make_flag_point(sig, read_matrix_file(a.q_file), g.tol);
  } else if (!a.identity) {
    f = random_flag_point(sig, g.seed);
  }
  const EmbeddedFlag e = embed(f, spec);

  EmbedReport r{sig.n(), sig.ks(), spec.values(), to_rows(e.x.matrix()),
                sorted_eigenvalues(e.x.matrix()), e.x.trace()};
  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv: write_csv_matrix(out, r.matrix); break;
    case Format::Text:
      out << "n " << r.n << "\nks " << join(r.ks) << "\nspectrum " << join(r.spectrum)
          << "\ntrace " << real(r.trace) << "\neigenvalues " << join(r.eigenvalues)
          << "\nmatrix\n";
      write_text_matrix(out, r.matrix);
      break;
  }
  return kSuccess;
}

// -------------------------------------------------------------- recover

struct MatrixArgs {
  std::string matrix_file;
  SpectrumOptions spec;
};

int cmd_recover(const MatrixArgs& a, const GlobalOptions& g, std::ostream& out) {
  const Matrix raw = read_matrix_file(a.matrix_file);
  const SymmetricMatrix x = SymmetricMatrix::checked(raw, g.tol.sym);
  const FlagSignature sig = signature_from(x.n(), a.spec.ks);
  const Spectrum spec = spectrum_from(sig, a.spec.spectrum, g.tol);
  const FlagPoint f = recover(x, spec, g.tol);

  RecoverReport r;
  r.n = sig.n();
  r.ks = sig.ks();
  r.spectrum = spec.values();
  r.q = to_rows(f.q());
  for (int b = 0; b < sig.num_blocks(); ++b)
    r.eigenbases.push_back(to_rows(f.q().middleCols(sig.block_offset(b), sig.block_size(b))));
  r.reconstruction_error = (embed(f, spec).x.matrix() - x.matrix()).norm();

  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv: write_csv_matrix(out, r.q); break;
    case Format::Text:
      out << "reconstruction_error " << real(r.reconstruction_error) << "\nq\n";
      write_text_matrix(out, r.q);
      for (std::size_t b = 0; b < r.eigenbases.size(); ++b) {
        out << "eigenbasis " << b + 1 << " value " << real(r.spectrum[b]) << '\n';
        write_csv_matrix(out, r.eigenbases[b]);
      }
      break;
  }
  return kSuccess;
}

// -------------------------------------------------------------- project

int cmd_project(const MatrixArgs& a, const GlobalOptions& g, std::ostream& out) {
  const SymmetricMatrix x = SymmetricMatrix::checked(read_matrix_file(a.matrix_file), g.tol.sym);
  const FlagSignature sig = signature_from(x.n(), a.spec.ks);
  const Spectrum spec = spectrum_from(sig, a.spec.spectrum, g.tol);
  const EmbeddedFlag p = nearest_point(x, spec, g.tol);

  ProjectReport r{sig.n(), sig.ks(), spec.values(), to_rows(p.x.matrix()),
                  (p.x.matrix() - x.matrix()).norm()};
  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv: write_csv_matrix(out, r.point); break;
    case Format::Text:
      out << "distance " << real(r.distance) << "\npoint\n";
      write_text_matrix(out, r.point);
      break;
  }
  return kSuccess;
}

// ------------------------------------------------------------- optimize

struct OptimizeArgs {
  std::string target_file;
  SpectrumOptions spec;
  DescentOptions descent;
};

int cmd_optimize(const OptimizeArgs& a, const GlobalOptions& g, std::ostream& out) {
  const SymmetricMatrix target =
      SymmetricMatrix::checked(read_matrix_file(a.target_file), g.tol.sym);
  const FlagSignature sig = signature_from(target.n(), a.spec.ks);
  const Spectrum spec = spectrum_from(sig, a.spec.spectrum, g.tol);
  const EmbeddedFlag init = embed(random_flag_point(sig, g.seed), spec);

  const Matrix& t = target.matrix();
  const GradientOracle grad = [&t](const Matrix& x) -> Matrix { return x - t; };
  const DescentResult res = gradient_descent(grad, spec, init, a.descent, g.tol);
  const EmbeddedFlag best = nearest_point(target, spec, g.tol);

  OptimizeReport r;
  r.n = sig.n();
  r.ks = sig.ks();
  r.spectrum = spec.values();
  r.step = a.descent.step;
  r.point = to_rows(res.point.x.matrix());
  r.iterations = res.iterations;
  r.converged = res.converged;
  r.final_grad_norm = res.grad_norms.back();
  r.grad_norms = res.grad_norms;
  r.distance_to_target = (res.point.x.matrix() - t).norm();
  r.distance_to_nearest = (res.point.x.matrix() - best.x.matrix()).norm();

  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv:
      out << "iteration,grad_norm\n";
      for (std::size_t i = 0; i < r.grad_norms.size(); ++i)
        out << i << ',' << real(r.grad_norms[i]) << '\n';
      break;
    case Format::Text:
      out << "iterations " << r.iterations << "\nconverged " << (r.converged ? "true" : "false")
          << "\nfinal_grad_norm " << real(r.final_grad_norm) << "\ndistance_to_target "
          << real(r.distance_to_target) << "\ndistance_to_nearest "
          << real(r.distance_to_nearest) << "\ngrad_norms " << join(r.grad_norms)
          << "\npoint\n";
      write_text_matrix(out, r.point);
      break;
  }
  return kSuccess;
}

// --------------------------------------------------------------- repdim

int parse_half_integer(const std::string& text) {
  const HighestWeight w = parse_weight(3, text);  // rank one: a single entry
  return w.doubled().front();
}

BigInt parse_big(const std::string& text) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw FlagError(ErrorCode::InvalidArgument, "expected a nonnegative integer, got '" + text + "'");
  return BigInt(text);
}

struct RepdimArgs {
  int n = 0;
  std::string weight;
  std::string max_dim;
  std::string cap = "4";
};

int cmd_repdim_dim(const RepdimArgs& a, const GlobalOptions& g, std::ostream& out) {
  const HighestWeight w = parse_weight(a.n, a.weight);
  const DimReport r{a.n, w.to_string(), weyl_dim(w)};
  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv: out << "n,weight,dimension\n" << r.n << ",\"" << r.weight << "\"," << r.dimension.str() << '\n'; break;
    case Format::Text: out << r.dimension.str() << '\n'; break;
  }
  return kSuccess;
}

void write_hits(std::ostream& out, const std::vector<EnumerationHit>& hits, Format fmt) {
  if (fmt == Format::Csv) out << "weight,dimension,conjugate_pair,real_form\n";
  for (const auto& h : hits) {
    if (fmt == Format::Csv) {
      out << '"' << h.weight.to_string() << "\"," << h.dimension.str() << ','
          << std::boolalpha << h.conjugate_pair << ',' << h.real_form << '\n';
    } else {
      out << '(' << h.weight.to_string() << ")\t" << h.dimension.str()
          << (h.conjugate_pair ? "\tconjugate-pair" : "")
          << (h.real_form ? "" : "\tno-real-form") << '\n';
    }
  }
}

int cmd_repdim_enumerate(const RepdimArgs& a, const GlobalOptions& g, std::ostream& out) {
  const EnumerationReport r =
      enumerate_low_dim(a.n, parse_big(a.max_dim), parse_half_integer(a.cap));
  if (g.fmt() == Format::Json) {
    write_json(out, r);
  } else {
    write_hits(out, r.hits, g.fmt());
  }
  return kSuccess;
}

int cmd_repdim_verify(const RepdimArgs& a, const GlobalOptions& g, std::ostream& out) {
  const ClassificationReport r = verify_classification(a.n, parse_half_integer(a.cap));
  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv:
      out << "check,passed,detail\n";
      for (const auto& c : r.checks)
        out << '"' << c.name << "\"," << std::boolalpha << c.passed << ",\"" << c.detail << "\"\n";
      break;
    case Format::Text:
      for (const auto& c : r.checks)
        out << (c.passed ? "PASS " : "FAIL ") << c.name << "  " << c.detail << '\n';
      out << (r.passed() ? "PASS" : "FAIL") << " n=" << r.n << '\n';
      break;
  }
  return r.passed() ? kSuccess : kCheckFailed;
}

// --------------------------------------------------------------- bounds

struct BoundsArgs {
  int n = 0;
  std::string ks;
  std::optional<Count> group_order;
  int max_n = 0;
};

const char* kBoundsHeader = "n,ks,flag_dim,isospectral,gunther,whitney,wang,isospectral_lt_gunther,isospectral_le_whitney,isospectral_status";

void write_bound_csv(std::ostream& out, const BoundReport& r) {
  out << r.n << ",\"" << join(r.ks) << "\"," << r.flag_dim << ',' << r.isospectral << ','
      << r.gunther << ',' << r.whitney << ',' << (r.wang ? std::to_string(*r.wang) : "") << ','
      << std::boolalpha << r.comparison("isospectral_lt_gunther") << ','
      << r.comparison("isospectral_le_whitney") << ',' << r.isospectral_status << '\n';
}

int cmd_bounds(const BoundsArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.n == 0) throw FlagError(ErrorCode::InvalidArgument, "--n is required");
  const FlagSignature sig = signature_from(a.n, a.ks);
  const BoundReport r = bound_table(sig, a.group_order);
  switch (g.fmt()) {
    case Format::Json: write_json(out, r); break;
    case Format::Csv: out << kBoundsHeader << '\n'; write_bound_csv(out, r); break;
    case Format::Text:
      out << "flag_dim " << r.flag_dim << "\nisospectral " << r.isospectral << " ("
          << r.isospectral_status << ")\ngunther " << r.gunther << "\nwhitney " << r.whitney
          << '\n';
      if (r.wang) out << "wang_whitney " << *r.wang << '\n';
      for (const auto& c : r.comparisons) out << c.name << ' ' << (c.holds ? "true" : "false") << '\n';
      break;
  }
  return kSuccess;
}

int cmd_bounds_sweep(const BoundsArgs& a, const GlobalOptions& g, std::ostream& out) {
  if (a.max_n < 2 || a.max_n > 20)
    throw FlagError(ErrorCode::InvalidArgument, "--max-n must be in 2..20");
  SweepReport r;
  r.max_n = a.max_n;
  r.all_gunther_hold = true;
  for (int n = 2; n <= a.max_n; ++n) {
    for (const auto& sig : all_signatures(n)) {
      r.rows.push_back(bound_table(sig));
      r.all_gunther_hold = r.all_gunther_hold && r.rows.back().comparison("isospectral_lt_gunther");
    }
  }
  if (g.fmt() == Format::Json) {
    write_json(out, r);
  } else {
    out << kBoundsHeader << '\n';
    for (const auto& row : r.rows) write_bound_csv(out, row);
  }
  return r.all_gunther_hold ? kSuccess : kCheckFailed;
}

void report_error(std::ostream& err, std::string_view code, int exit_code,
                  const std::string& message, std::optional<double> value = std::nullopt) {
  std::string msg = message;
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  std::replace(msg.begin(), msg.end(), '"', '\'');
  err << "error=" << code << " exit=" << exit_code;
  if (value) err << " value=" << real(*value);
  err << " message=\"" << msg << "\"\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isospectral flag-manifold toolkit", "flagmodel"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions g;
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--seed", g.seed, "Seed for random flags");
  app.add_option("--orth-tol", g.tol.orth, "Orthogonality tolerance");
  app.add_option("--sym-tol", g.tol.sym, "Symmetry tolerance");
  app.add_option("--trace-tol", g.tol.trace, "Trace tolerance");
  app.add_option("--gap-tol", g.tol.spectrum_gap, "Spectrum and boundary gap tolerance");
  app.add_option("--eig-tol", g.tol.eig, "Eigenvalue matching tolerance");

  auto add_spectrum = [](CLI::App* sub, SpectrumOptions& s) {
    sub->add_option("--ks", s.ks, "Comma-separated k_1 < ... < k_p")->required();
    sub->add_option("--spectrum", s.spectrum,
                    "Comma-separated a_1..a_{p+1} (default: canonical traceless)");
  };

  EmbedArgs embed_args;
  auto* embed_cmd = app.add_subcommand("embed", "Embed a flag as Q I Q^T");
  embed_cmd->add_option("--n", embed_args.n, "Ambient dimension")->required();
  add_spectrum(embed_cmd, embed_args.spec);
  auto* id_flag = embed_cmd->add_flag("--identity", embed_args.identity, "Use Q = I");
  embed_cmd->add_option("--q-file", embed_args.q_file, "Matrix file holding Q")
      ->excludes(id_flag);

  MatrixArgs recover_args;
  auto* recover_cmd = app.add_subcommand("recover", "Recover a flag from an embedded matrix");
  recover_cmd->add_option("--matrix-file", recover_args.matrix_file, "Matrix file")->required();
  add_spectrum(recover_cmd, recover_args.spec);

  MatrixArgs project_args;
  auto* project_cmd = app.add_subcommand("project", "Nearest point of the isospectral set");
  project_cmd->add_option("--matrix-file", project_args.matrix_file, "Matrix file")->required();
  add_spectrum(project_cmd, project_args.spec);

  OptimizeArgs opt_args;
  auto* opt_cmd = app.add_subcommand("optimize", "Gradient descent on 1/2 ||X - A||_F^2");
  opt_cmd->add_option("--target-file", opt_args.target_file, "Matrix file holding A")->required();
  add_spectrum(opt_cmd, opt_args.spec);
  opt_cmd->add_option("--step", opt_args.descent.step, "Step size")->capture_default_str();
  opt_cmd->add_option("--max-iters", opt_args.descent.max_iters, "Iteration cap")->capture_default_str();
  opt_cmd->add_option("--grad-tol", opt_args.descent.grad_tol, "Projected-gradient tolerance")
      ->capture_default_str();

  RepdimArgs rep_args;
  auto* rep_cmd = app.add_subcommand("repdim", "Exact SO(n) representation dimensions");
  rep_cmd->require_subcommand(1);
  auto* dim_cmd = rep_cmd->add_subcommand("dim", "Dimension of one highest weight");
  dim_cmd->add_option("--n", rep_args.n, "n")->required();
  dim_cmd->add_option("--weight", rep_args.weight, "Weight, e.g. 2,1 or 1/2,1/2")->required();
  auto* enum_cmd = rep_cmd->add_subcommand("enumerate", "All weights up to a dimension");
  enum_cmd->add_option("--n", rep_args.n, "n")->required();
  enum_cmd->add_option("--max-dim", rep_args.max_dim, "Dimension bound")->required();
  enum_cmd->add_option("--cap", rep_args.cap, "Search box mu_1 <= cap")->capture_default_str();
  auto* verify_cmd = rep_cmd->add_subcommand("verify", "Check the low-dimension classification");
  verify_cmd->add_option("--n", rep_args.n, "n")->required();
  verify_cmd->add_option("--cap", rep_args.cap, "Search box mu_1 <= cap")->capture_default_str();

  BoundsArgs bound_args;
  auto* bounds_cmd = app.add_subcommand("bounds", "Embedding-dimension bounds");
  bounds_cmd->add_option("--n", bound_args.n, "Ambient dimension");
  bounds_cmd->add_option("--ks", bound_args.ks, "Comma-separated k_1 < ... < k_p");
  bounds_cmd->add_option("--group-order", bound_args.group_order, "Finite group order |G|");
  auto* sweep_cmd = bounds_cmd->add_subcommand("sweep", "All signatures up to --max-n");
  sweep_cmd->add_option("--max-n", bound_args.max_n, "Largest n")->required();

  std::ostringstream cli_out;
  std::ostringstream cli_err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    report_error(err, "UsageError", kInvalidInput, e.what());
    return kInvalidInput;
  }

  try {
    if (embed_cmd->parsed()) return cmd_embed(embed_args, g, out);
    if (recover_cmd->parsed()) return cmd_recover(recover_args, g, out);
    if (project_cmd->parsed()) return cmd_project(project_args, g, out);
    if (opt_cmd->parsed()) return cmd_optimize(opt_args, g, out);
    if (dim_cmd->parsed()) return cmd_repdim_dim(rep_args, g, out);
    if (enum_cmd->parsed()) return cmd_repdim_enumerate(rep_args, g, out);
    if (verify_cmd->parsed()) return cmd_repdim_verify(rep_args, g, out);
    if (sweep_cmd->parsed()) return cmd_bounds_sweep(bound_args, g, out);
    if (bounds_cmd->parsed()) return cmd_bounds(bound_args, g, out);
  } catch (const FlagError& e) {
    const int code = is_numerical(e.code()) ? kNumericalFailure : kInvalidInput;
    report_error(err, error_name(e.code()), code, e.what(), e.value());
    return code;
  } catch (const std::exception& e) {
    report_error(err, "InternalError", kCheckFailed, e.what());
    return kCheckFailed;
  }
  report_error(err, "UsageError", kInvalidInput, "no command given");
  return kInvalidInput;
}

}  // namespace flagmodel::cli
