#include <cubicmw/parse.hpp>
#include <cubicmw/report.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace cubicmw;
using nlohmann::json;

namespace {

int exit_code(Error::Kind k) {
  switch (k) {
    case Error::Kind::InvalidPencil: return 3;
    case Error::Kind::NotElliptic: return 4;
    case Error::Kind::InconsistentSurface: return 5;
    default: return 2;
  }
}

std::vector<Rat> parse_rats(const std::vector<std::string>& words) {
  std::vector<Rat> out;
  for (const auto& w : words) out.push_back(parse_rat(w));
  return out;
}

ProjPoint parse_point(std::string text) {
  // "[a,b,c]", "a,b,c" or "a:b:c"
  for (char& c : text)
    if (c == '[' || c == ']' || c == ':' || c == ',') c = ' ';
  std::istringstream is(text);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  if (words.size() != 3) throw Error(Error::Kind::Parse, "expected a point with three coordinates");
  const auto c = parse_rats(words);
  return ProjPoint(c[0], c[1], c[2]);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact analysis of cubic pencils and rational elliptic surfaces"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string format = "json";
  bool verbose = false;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "summary"}));
  app.add_flag("--verbose,-v", verbose, "Print a summary to stderr as well");

  std::string h1, h2, base_text;
  auto* pencil_cmd = app.add_subcommand("analyze-pencil", "Base points, singular members, optional fibration");
  pencil_cmd->add_option("h1", h1, "First cubic in X, Y, Z")->required();
  pencil_cmd->add_option("h2", h2, "Second cubic in X, Y, Z")->required();
  pencil_cmd->add_option("--weierstrass", base_text, "Rational base point to project from, e.g. 0,0,1");

  std::string equation;
  auto* weier_cmd = app.add_subcommand("analyze-weierstrass", "Fiber configuration and Mordell-Weil group");
  weier_cmd->add_option("equation", equation, "y^2 + a1*x*y + a3*y = x^3 + a2*x^2 + a4*x + a6")->required();

  std::string family_id;
  std::vector<std::string> family_coeffs;
  auto* family_cmd = app.add_subcommand("family", "Instantiate and analyze a family member");
  family_cmd->add_option("id", family_id, "E8a, E8b, E7a, E7b, E6a or E6b")->required();
  family_cmd->add_option("coefficients", family_coeffs, "p coefficients then q coefficients");

  std::string lattice_id, norm_text;
  bool list_vectors = false;
  auto* lattice_cmd = app.add_subcommand("lattice", "Gram matrices, discriminant group, short vectors");
  lattice_cmd->add_option("id", lattice_id, "E8, D4, A2, or a dual such as E7v")->required();
  lattice_cmd->add_option("--minimal-norm", norm_text, "Count vectors of this norm");
  lattice_cmd->add_flag("--list", list_vectors, "List the vectors too");

  int m = 8;
  bool list_classes = false;
  auto* dp_cmd = app.add_subcommand("delpezzo", "(-1)-classes on the blow-up of m points");
  dp_cmd->add_option("--m", m, "Number of blown-up points, 1..8");
  dp_cmd->add_flag("--list", list_classes, "List the classes too");

  std::string cusp_mode;
  std::vector<std::string> cusp_args;
  auto* cusp_cmd = app.add_subcommand("cusp", "Parameters on the cuspidal cubic");
  cusp_cmd->add_option("mode", cusp_mode, "ninth or q")->required()->check(CLI::IsMember({"ninth", "q"}));
  cusp_cmd->add_option("u", cusp_args, "Eight rational parameters");



  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json report;
  try {
    if (*pencil_cmd) {
      const CubicPencil pencil(PlaneCurve(parse_form(h1)), PlaneCurve(parse_form(h2)));
      std::optional<ProjPoint> base;
      if (!base_text.empty()) base = parse_point(base_text);
      report = pencil_report(pencil, base);
    } else if (*weier_cmd) {
      report = fibration_report(parse_weierstrass(equation));
    } else if (*family_cmd) {
      report = family_report(parse_family(family_id), parse_rats(family_coeffs));
    } else if (*lattice_cmd) {
      std::optional<Rat> norm;
      if (!norm_text.empty()) norm = parse_rat(norm_text);
      report = lattice_report(LatticeName::parse(lattice_id), norm, list_vectors);
    } else if (*dp_cmd) {
      report = delpezzo_report(m, list_classes);
    } else if (*cusp_cmd) {
      if (cusp_args.size() != 8)
        throw Error(Error::Kind::Parse, "cusp takes 8 parameters, got " + std::to_string(cusp_args.size()));
      const auto u = parse_rats(cusp_args);
      const Rat r = cusp_mode == "ninth" ? ninth_base_parameter(u) : manin_q_parameter(u);
      report = {{"mode", cusp_mode}, {"result", to_string(r)}, {"u", json::array()}};
      for (const auto& x : u) report["u"].push_back(to_string(x));
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }

  if (format == "summary")
    std::cout << render_summary(report);
  else
    std::cout << report.dump(2) << '\n';
  if (verbose) std::cerr << render_summary(report);
  return 0;
}
