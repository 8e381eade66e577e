#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lenslab/map_kernel.hpp"
#include "lenslab/oracle_verify.hpp"
#include "lenslab/order_analysis.hpp"

namespace {

using namespace lenslab;
using nlohmann::ordered_json;

constexpr double kPi = std::numbers::pi;

struct CliConfig {
  double tol = 1e-8;
  double eps_t = 1e-9;
  int scan_points = 2048;
  int grid_radial = 64;
  int grid_angular = 512;
};

void validate(const CliConfig& cfg) {
  if (!(cfg.tol > 0.0)) throw std::domain_error("tol must be positive");
  if (!(cfg.eps_t > 0.0 && cfg.eps_t < 1e-2)) throw std::domain_error("eps-t must lie in (0, 1e-2)");
  if (cfg.scan_points < 8 || cfg.grid_radial < 8 || cfg.grid_angular < 8) {
    throw std::domain_error("point counts must be >= 8");
  }
}

OrderKind parse_kind(const std::string& s) {
  if (s == "starlike") return OrderKind::starlike;
  if (s == "convex") return OrderKind::convex;
  throw std::domain_error("unknown kind '" + s + "' (expected starlike or convex)");
}

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

ordered_json order_json(const OrderResult& r) {
  ordered_json j;
  j["alpha"] = r.alpha;
  j["kind"] = to_string(r.kind);
  j["closed_form"] = r.closed_form;
  j["numeric"] = r.numeric;
  j["minimizer_t"] = r.minimizer_t;
  j["minimizer_x"] = r.minimizer_x;
  j["residual"] = r.residual;
  j["tol"] = r.tol;
  j["pass"] = r.pass;
  return j;
}

int run_order(double alpha, const std::string& kind_str, const std::string& method,
              const std::string& format, const CliConfig& cfg) {
  const OrderKind kind = parse_kind(kind_str);
  if (alpha == 0.0) throw std::domain_error("alpha must be nonzero");

  if (method == "closed") {
    const double order = kind == OrderKind::starlike ? closed_form_starlike_order(alpha)
                                                     : closed_form_convex_order(alpha);
    if (format == "json") {
      ordered_json j;
      j["alpha"] = alpha;
      j["kind"] = kind_str;
      j["closed_form"] = order;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "alpha        " << fmt12(alpha) << "\n"
                << "kind         " << kind_str << "\n"
                << "closed_form  " << fmt12(order) << "\n";
    }
    return 0;
  }

  const OrderResult r = numeric_order(alpha, kind, cfg.tol, cfg.eps_t, cfg.scan_points);
  if (format == "json") {
    std::cout << order_json(r).dump(2) << "\n";
  } else {
    std::cout << "alpha        " << fmt12(r.alpha) << "\n"
              << "kind         " << to_string(r.kind) << "\n"
              << "closed_form  " << fmt12(r.closed_form) << "\n"
              << "numeric      " << fmt12(r.numeric) << "\n"
              << "minimizer_t  " << fmt12(r.minimizer_t) << "\n"
              << "minimizer_x  " << fmt12(r.minimizer_x) << "\n"
              << "residual     " << fmt12(r.residual) << "\n"
              << "pass         " << (r.pass ? "true" : "false") << "\n";
  }
  return r.pass ? 0 : 2;
}

int run_scan(double alpha_min, double alpha_max, int steps, const std::string& kind_str,
             const std::string& out, const CliConfig& cfg) {
  const OrderKind kind = parse_kind(kind_str);
  if (!(alpha_min > 0.0 && alpha_min < alpha_max) || steps < 2) {
    throw std::domain_error("need 0 < alpha-min < alpha-max and steps >= 2");
  }
  const double regime_max = kind == OrderKind::convex ? 1.0 : 2.0;
  if (alpha_max > regime_max) {
    throw std::domain_error("alpha-max outside the regime for this kind");
  }

  std::ostringstream csv;
  csv << "alpha,closed_form,numeric,residual,minimizer_t\n";
  for (int i = 0; i < steps; ++i) {
    const double alpha = alpha_min + (alpha_max - alpha_min) * i / (steps - 1);
    const OrderResult r = numeric_order(alpha, kind, cfg.tol, cfg.eps_t, cfg.scan_points);
    csv << fmt12(r.alpha) << ',' << fmt12(r.closed_form) << ',' << fmt12(r.numeric) << ','
        << fmt12(r.residual) << ',' << fmt12(r.minimizer_t) << "\n";
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream f(out, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << csv.str();
  }
  return 0;
}

int run_verify(double alpha, double tol) {
  const LensParam p(alpha);
  const VerifyReport rep = full_verify(p, tol);
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.overall ? 0 : 2;
}

int run_grid_image(double alpha, int rays, int circles, int samples,
                   const std::string& out) {
  if (rays < 2 || circles < 1 || samples < 8) {
    throw std::domain_error("need rays >= 2, circles >= 1, samples >= 8");
  }
  const LensParam p(alpha);

  auto point = [&](complexd z) {
    const complexd w = lens_map(p, z);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f", w.real(), -w.imag());
    return std::string(buf);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"-1.1 -1.1 2.2 2.2\" width=\"512\" height=\"512\">\n";
  svg << "  <circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#bbbbbb\" "
         "stroke-width=\"0.004\"/>\n";
  for (int k = 1; k <= circles; ++k) {
    const double r = static_cast<double>(k) / (circles + 1);
    svg << "  <polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"0.004\" points=\"";
    for (int j = 0; j <= samples; ++j) {
      const double t = 2.0 * kPi * (j % samples) / samples;
      svg << point(std::polar(r, t)) << (j < samples ? " " : "");
    }
    svg << "\"/>\n";
  }
  for (int j = 0; j < rays; ++j) {
    const double theta = 2.0 * kPi * j / rays;
    svg << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"0.004\" points=\"";
    for (int i = 0; i < samples; ++i) {
      const double r = 0.995 * i / (samples - 1);
      svg << point(std::polar(r, theta)) << (i < samples - 1 ? " " : "");
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";

  std::ofstream f(out, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot open output file: " + out);
  f << svg.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lenslab: orders of starlikeness and convexity of the conformal lens maps"};
  app.require_subcommand(1);
  app.set_config("--config");

  CliConfig cfg;
  auto* tol_opt = app.add_option("--tol", cfg.tol, "pass/fail tolerance");
  app.add_option("--eps-t", cfg.eps_t, "boundary endpoint guard");
  app.add_option("--scan-points", cfg.scan_points, "coarse minimization scan size");
  app.add_option("--grid-radial", cfg.grid_radial, "radial grid size");
  app.add_option("--grid-angular", cfg.grid_angular, "angular grid size");

  double alpha = 0.0;
  std::string kind = "starlike";
  std::string method = "both";
  std::string format = "json";
  std::string out;

  auto* order = app.add_subcommand("order", "order of one lens map");
  order->add_option("--alpha", alpha)->required();
  order->add_option("--kind", kind)->required();
  order->add_option("--method", method)->check(CLI::IsMember({"closed", "numeric", "both"}));
  order->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  double alpha_min = 0.0, alpha_max = 0.0;
  int steps = 0;
  auto* scan = app.add_subcommand("scan", "tabulate orders over an alpha range as CSV");
  scan->add_option("--alpha-min", alpha_min)->required();
  scan->add_option("--alpha-max", alpha_max)->required();
  scan->add_option("--steps", steps)->required();
  scan->add_option("--kind", kind)->required();
  scan->add_option("--out", out);

  auto* verify = app.add_subcommand("verify", "run the full verification suite");
  verify->add_option("--alpha", alpha)->required();

  int rays = 12, circles = 8, samples = 256;
  auto* image = app.add_subcommand("grid-image", "SVG image of a polar grid under the map");
  image->add_option("--alpha", alpha)->required();
  image->add_option("--rays", rays);
  image->add_option("--circles", circles);
  image->add_option("--samples", samples);
  image->add_option("--out", out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    validate(cfg);
    if (order->parsed()) return run_order(alpha, kind, method, format, cfg);
    if (scan->parsed()) return run_scan(alpha_min, alpha_max, steps, kind, out, cfg);
    if (verify->parsed()) return run_verify(alpha, tol_opt->count() > 0 ? cfg.tol : 1e-6);
    if (image->parsed()) return run_grid_image(alpha, rays, circles, samples, out);
  } catch (const std::exception& e) {
    std::cerr << "lenslab: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
