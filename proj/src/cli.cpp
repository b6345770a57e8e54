#include "blab/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blab/bargmann.hpp"
#include "blab/certify.hpp"
#include "blab/ellipse.hpp"
#include "blab/hermite.hpp"
#include "blab/ncho.hpp"
#include "blab/quadrature.hpp"
#include "blab/toeplitz.hpp"

namespace blab::cli {

namespace {

Real parse_real(const std::string& s) {
  std::size_t pos = 0;
  const Real v = std::stold(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("not a number: " + s);
  return v;
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string output;
  std::string format;
  std::string A, B = "-i", C = "i";
  double h = 1;
  double alpha = 2, beta = 0;
  int n = 8;
  std::string system = "hermite";
  std::string method = "exact";
  std::string suite = "hermite";
  double disk = 1;
  double trace = 0;
  int samples = 256;
  int nodes = 120;
  std::string grid_dump;
  std::uint64_t seed = 20241;
  int pairs = 20, points = 10;
};

PhaseParams phase_from(const Options& o) {
  const Complex B = parse_complex(o.B), C = parse_complex(o.C);
  const Complex A = o.A.empty() ? canonical_A(B, C) : parse_complex(o.A);
  return PhaseParams::make(A, B, C, o.h);
}

nlohmann::json cj(Complex c) { return complex_to_json(c); }

nlohmann::json matrix_json(const ComplexMatrix& G) {
  auto rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    auto row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < G.cols(); ++j) row.push_back(cj(G(i, j)));
    rows.push_back(row);
  }
  return rows;
}

void matrix_csv(std::ostream& os, const ComplexMatrix& G) {
  os << "i,j,re,im\n" << std::setprecision(17);
  for (Eigen::Index i = 0; i < G.rows(); ++i) {
    for (Eigen::Index j = 0; j < G.cols(); ++j) {
      os << i << ',' << j << ',' << static_cast<double>(G(i, j).real()) << ','
         << static_cast<double>(G(i, j).imag()) << '\n';
    }
  }
}

void records_csv(std::ostream& os, const std::vector<EigenRecord>& recs) {
  os << "n,eigenvalue,residual\n" << std::setprecision(17);
  for (const auto& r : recs) {
    os << r.n << ',' << static_cast<double>(r.eigenvalue) << ',' << static_cast<double>(r.residual)
       << '\n';
  }
}

bool records_ok(const std::vector<EigenRecord>& recs) {
  for (const auto& r : recs) {
    if (!(r.residual <= 1e-10L)) return false;
  }
  return true;
}

void checks_csv(std::ostream& os, const SuiteReport& r) {
  os << "name,measured,tolerance,pass\n" << std::setprecision(17);
  for (const auto& c : r.checks) {
    os << '"' << c.name << "\"," << static_cast<double>(c.measured) << ','
       << static_cast<double>(c.tolerance) << ',' << (c.pass ? "true" : "false") << '\n';
  }
}

// Each command writes its artifact to os and returns the exit status.
int cmd_gram(const Options& o, std::ostream& os) {
  ComplexMatrix G;
  nlohmann::json params;
  bool ok = true;
  if (o.system == "hermite") {
    const HermiteSystem sys(phase_from(o));
    const auto method = o.method == "quadrature" ? GramMethod::Quadrature : GramMethod::Exact;
    G = sys.gram_matrix(o.n, method);
    params = sys.params();
    ok = identity_deviation(G) <= (method == GramMethod::Exact ? 1e-10L : 1e-6L);
  } else if (o.system == "ellipse") {
    const EllipseParams p = EllipseParams::make(o.alpha, o.beta);
    G = psi_gram_quad(p, o.n, o.nodes);
    params = {{"alpha", o.alpha}, {"beta", o.beta}};
    for (int m = 0; m < o.n; ++m) {
      for (int k = 0; k < o.n; ++k) {
        const Real scale = std::sqrt(psi_norm_sq(p, m) * psi_norm_sq(p, k));
        const Real expect = m == k ? psi_norm_sq(p, k) : 0;
        if (!(std::abs(G(m, k) - expect) <= 1e-4L * scale)) ok = false;
      }
    }
  } else if (o.system == "ncho") {
    const NchoParams p = NchoParams::make(o.alpha, o.h);
    G = combined_gram(p, o.n);
    params = {{"alpha", o.alpha}, {"h", o.h}};
    ok = identity_deviation(G) <= 1e-10L;
  } else {
    throw Usage("--system must be hermite, ellipse or ncho");
  }
  if (o.format == "csv") {
    matrix_csv(os, G);
  } else {
    nlohmann::json j{{"system", o.system}, {"params", params}, {"n", o.n}, {"matrix", matrix_json(G)}};
    if (o.system == "hermite") j["method"] = o.method;
    os << j.dump(2) << '\n';
  }
  return ok ? kExitOk : kExitTolerance;
}

int cmd_eigres(const Options& o, std::ostream& os) {
  const HermiteSystem sys(phase_from(o));
  const auto recs = sys.eigen_report(o.n);
  if (o.format == "csv") {
    records_csv(os, recs);
  } else {
    os << nlohmann::json{{"params", sys.params()}, {"records", to_json(recs)}}.dump(2) << '\n';
  }
  return records_ok(recs) ? kExitOk : kExitTolerance;
}

int cmd_transform(const Options& o, std::ostream& os) {
  const PhaseParams p = phase_from(o);
  const HermiteSystem sys(p);
  const HoloGauss U = transform(p, sys.hermite_phi(o.n));
  if (!o.grid_dump.empty()) {
    std::ofstream f(o.grid_dump);
    if (!f) throw Usage("cannot write " + o.grid_dump);
    write_grid_csv(f, GridFunction::sample(weight_grid(p, o.nodes), [&](Complex z) { return U(z); }));
  }
  if (o.format == "csv") {
    os << "k,re,im\n" << std::setprecision(17);
    for (int k = 0; k <= U.poly().degree(); ++k) {
      os << k << ',' << static_cast<double>(U.poly()[k].real()) << ','
         << static_cast<double>(U.poly()[k].imag()) << '\n';
    }
    return kExitOk;
  }
  auto coeffs = nlohmann::json::array();
  for (int k = 0; k <= U.poly().degree(); ++k) coeffs.push_back(cj(U.poly()[k]));
  nlohmann::json j{{"params", p},   {"n", o.n},         {"poly", coeffs},
                   {"c2", cj(U.c2())}, {"c1", cj(U.c1())}};
  os << j.dump(2) << '\n';
  return kExitOk;
}

int cmd_ncho(const Options& o, std::ostream& os) {
  const NchoParams p = NchoParams::make(o.alpha, o.h);
  const auto entries = spectrum_check(p, o.n);
  bool ok = true;
  for (const auto& e : entries) ok = ok && e.residual <= 1e-10L;
  if (o.format == "csv") {
    os << "sign,n,lambda,residual\n" << std::setprecision(17);
    for (const auto& e : entries) {
      os << to_string(e.sign) << ',' << e.n << ',' << static_cast<double>(e.lambda) << ','
         << static_cast<double>(e.residual) << '\n';
    }
  } else {
    os << spectrum_report(p, entries).dump(2) << '\n';
  }
  return ok ? kExitOk : kExitTolerance;
}

int cmd_ellipse(const Options& o, std::ostream& os) {
  const FamilyResolution fam = resolve_family(o.alpha, o.beta);
  if (fam.tag == FamilyTag::ClassicDisk) {
    // The usual disk: the classic Hermite system.
    const auto recs = HermiteSystem(fam.phase).eigen_report(o.n);
    if (o.format == "csv") {
      records_csv(os, recs);
    } else {
      os << nlohmann::json{{"family", "classic_disk"}, {"records", to_json(recs)}}.dump(2) << '\n';
    }
    return records_ok(recs) ? kExitOk : kExitTolerance;
  }
  const EllipseParams& p = *fam.ellipse;
  if (o.trace > 0) {
    write_trace_csv(os, ellipse_trace(p, o.trace, o.samples));
    return kExitOk;
  }
  const auto recs = Psi_eigen_report(p, o.n);
  if (o.format == "csv") {
    records_csv(os, recs);
  } else {
    nlohmann::json j{{"family", "ellipse"},
                     {"alpha", o.alpha},
                     {"beta", o.beta},
                     {"records", to_json(recs)}};
    os << j.dump(2) << '\n';
  }
  return records_ok(recs) ? kExitOk : kExitTolerance;
}

int cmd_toeplitz(const Options& o, std::ostream& os) {
  const auto rows = disk_spectrum(o.disk, o.n);
  bool ok = true;
  for (const auto& r : rows) ok = ok && r.abs_diff <= 1e-10L;
  if (o.format == "json") {
    auto arr = nlohmann::json::array();
    for (const auto& r : rows) {
      arr.push_back({{"n", r.n},
                     {"lambda_formula", static_cast<double>(r.lambda_formula)},
                     {"lambda_quadrature", static_cast<double>(r.lambda_quadrature)},
                     {"abs_diff", static_cast<double>(r.abs_diff)}});
    }
    os << nlohmann::json{{"R", o.disk}, {"rows", arr}}.dump(2) << '\n';
  } else {
    write_spectrum_csv(os, rows);
  }
  return ok ? kExitOk : kExitTolerance;
}

int cmd_certify(const Options& o, std::ostream& os) {
  SuiteReport r;
  if (o.suite == "hermite") {
    r = certify_hermite(phase_from(o), o.n);
  } else if (o.suite == "transform") {
    r = certify_transform(phase_from(o), o.pairs, o.points, o.seed);
  } else if (o.suite == "ncho") {
    r = certify_ncho(NchoParams::make(o.alpha, o.h), o.n);
  } else if (o.suite == "ellipse") {
    r = certify_ellipse(EllipseParams::make(o.alpha, o.beta), o.n, std::min(o.n, 7));
  } else if (o.suite == "toeplitz") {
    r = certify_toeplitz(o.disk, o.n);
  } else if (o.suite == "gaussint") {
    r = certify_gaussint({0.5L, 1.0L, 2.0L}, {-0.7L, 0.0L, 0.7L});
  } else {
    throw Usage("unknown suite " + o.suite);
  }
  if (o.format == "csv") {
    checks_csv(os, r);
  } else {
    os << to_json(r).dump(2) << '\n';
  }
  return r.passed() ? kExitOk : kExitTolerance;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw std::invalid_argument("empty complex value");
  if (s.back() != 'i' && s.back() != 'j') return parse_real(s);

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not a leading sign or an exponent sign.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  const std::string re = split == std::string::npos ? "" : body.substr(0, split);
  std::string im = split == std::string::npos ? body : body.substr(split);
  Real imv;
  if (im.empty() || im == "+") {
    imv = 1;
  } else if (im == "-") {
    imv = -1;
  } else {
    imv = parse_real(im);
  }
  return {re.empty() ? 0.0L : parse_real(re), imv};
}

std::vector<std::string> normalize_args(std::vector<std::string> args) {
  std::vector<std::string> out;
  for (std::size_t k = 0; k < args.size(); ++k) {
    const std::string& a = args[k];
    if (a.rfind("--", 0) == 0 && a.find('=') == std::string::npos && k + 1 < args.size() &&
        args[k + 1].size() > 1 && args[k + 1][0] == '-' && args[k + 1][1] != '-') {
      try {
        parse_complex(args[k + 1]);
        out.push_back(a + "=" + args[k + 1]);
        ++k;
        continue;
      } catch (const std::exception&) {
      }
    }
    out.push_back(a);
  }
  return out;
}

int run(const std::vector<std::string>& raw, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bargmann-transform laboratory", "bargmann-lab"};
  app.require_subcommand(1, 1);
  app.set_help_flag("--help", "print help");  // -h would clash with --h

  auto common = [&](CLI::App* c) {
    c->add_option("--output,-o", o.output, "output file (default stdout)");
    c->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    c->add_option("--n", o.n, "number of indices")->check(CLI::Range(1, kMaxN));
  };
  auto phase = [&](CLI::App* c) {
    c->add_option("--A", o.A, "phase coefficient A (default canonical)");
    c->add_option("--B", o.B, "phase coefficient B")->capture_default_str();
    c->add_option("--C", o.C, "phase coefficient C")->capture_default_str();
    c->add_option("--h", o.h, "semiclassical parameter")->capture_default_str();
  };

  auto* gram = app.add_subcommand("gram", "Gram matrix of a family");
  common(gram);
  phase(gram);
  gram->add_option("--system", o.system)->check(CLI::IsMember({"hermite", "ellipse", "ncho"}));
  gram->add_option("--method", o.method)->check(CLI::IsMember({"exact", "quadrature"}));
  gram->add_option("--alpha", o.alpha);
  gram->add_option("--beta", o.beta);
  gram->add_option("--nodes", o.nodes)->check(CLI::Range(8, 400));

  auto* eigres = app.add_subcommand("eigres", "eigen-residuals of generalized Hermite functions");
  common(eigres);
  phase(eigres);

  auto* trans = app.add_subcommand("transform", "transform of phi_n as an entire function");
  common(trans);
  phase(trans);
  trans->add_option("--grid-dump", o.grid_dump, "CSV of the transform on the weight grid");
  trans->add_option("--nodes", o.nodes)->check(CLI::Range(8, 400));

  auto* ncho = app.add_subcommand("ncho", "spectrum of the commutative oscillator system");
  common(ncho);
  ncho->add_option("--alpha", o.alpha);
  ncho->add_option("--h", o.h);

  auto* ell = app.add_subcommand("ellipse", "elliptic family eigen-report or boundary trace");
  common(ell);
  ell->add_option("--alpha", o.alpha);
  ell->add_option("--beta", o.beta);
  ell->add_option("--trace", o.trace, "boundary radius rho; writes (x, xi) CSV");
  ell->add_option("--samples", o.samples)->check(CLI::Range(1, 100000));

  auto* toep = app.add_subcommand("toeplitz", "disk localization eigenvalues");
  common(toep);
  toep->add_option("--disk", o.disk, "disk parameter R")->check(CLI::PositiveNumber);

  auto* cert = app.add_subcommand("certify", "run a certification suite");
  common(cert);
  phase(cert);
  cert->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"hermite", "transform", "ncho", "ellipse", "toeplitz", "gaussint"}));
  cert->add_option("--alpha", o.alpha);
  cert->add_option("--beta", o.beta);
  cert->add_option("--disk", o.disk)->check(CLI::PositiveNumber);
  cert->add_option("--seed", o.seed);
  cert->add_option("--pairs", o.pairs)->check(CLI::Range(1, 1000));
  cert->add_option("--points", o.points)->check(CLI::Range(1, 1000));

  std::vector<std::string> args = normalize_args(raw);
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  const std::string name = cmd->get_name();
  if (o.format.empty()) o.format = (name == "toeplitz") ? "csv" : "json";

  std::ostringstream buf;
  int status;
  try {
    if (name == "gram") {
      status = cmd_gram(o, buf);
    } else if (name == "eigres") {
      status = cmd_eigres(o, buf);
    } else if (name == "transform") {
      status = cmd_transform(o, buf);
    } else if (name == "ncho") {
      status = cmd_ncho(o, buf);
    } else if (name == "ellipse") {
      status = cmd_ellipse(o, buf);
    } else if (name == "toeplitz") {
      status = cmd_toeplitz(o, buf);
    } else {
      status = cmd_certify(o, buf);
    }
  } catch (const TruncationError& e) {
    err << "tolerance: " << e.what() << '\n';
    return kExitTolerance;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.output.empty()) {
    out << buf.str();
  } else {
    std::ofstream f(o.output, std::ios::binary);
    if (!(f << buf.str())) {
      err << "error: cannot write " << o.output << '\n';
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace blab::cli
