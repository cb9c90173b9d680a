// spinline: exact spin representations, holonomy algebras, and invariant
// spinor lines over Q(i).
//
// Subcommands: rep, lines, dirac, kahler, verify, export. Global flags:
// --normalization half|paper, --format json|text, --seed <n>. Exit code 0 on
// success (for `verify`: all claims pass), 1 otherwise.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "spinline/algebra_spec.hpp"
#include "spinline/invariant.hpp"
#include "spinline/serialize.hpp"
#include "spinline/spin_geometry.hpp"
#include "spinline/verify.hpp"

namespace {

using spinline::Json;

struct GlobalOpts {
  std::string normalization = "half";
  std::string format = "text";
  std::uint64_t seed = 0;

  spinline::Normalization norm() const {
    return normalization == "paper" ? spinline::Normalization::paper
                                    : spinline::Normalization::half;
  }
  bool json() const { return format == "json"; }
};

spinline::Signature parse_signature(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError("--signature", "expected \"r,s\", got \"" + text + "\"");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw CLI::ValidationError("--signature", "expected integers \"r,s\", got \"" + text + "\"");
  }
}

void emit(const std::string& text) { std::cout << text; }

int cmd_rep(const GlobalOpts& g, const std::string& signature, bool force_export) {
  spinline::Signature sig = parse_signature(signature);
  spinline::CliffordRep rep = spinline::build_rep(sig);
  spinline::verify_clifford_relations(rep);
  if (force_export || g.json()) {
    emit(spinline::rep_export_json(rep).dump(2) + "\n");
    return 0;
  }
  std::cout << "signature (" << sig.r << "," << sig.s << "), dim Delta = " << rep.dim << ", "
            << sig.n() << " generators; Clifford relations verified exactly\n";
  for (int i = 0; i < sig.n(); ++i) {
    std::cout << "gen " << i << ":";
    for (int r = 0; r < rep.dim; ++r) {
      std::cout << (r == 0 ? " " : "        ");
      for (int c = 0; c < rep.dim; ++c)
        std::cout << spinline::scalar_string(rep.gen[i].at(r, c)) << (c + 1 < rep.dim ? " " : "\n");
    }
  }
  return 0;
}

int cmd_lines(const GlobalOpts& g, const std::string& algebra) {
  spinline::LieAlgebraRep alg = spinline::parse_algebra_spec(algebra);
  spinline::CliffordRep rep = spinline::build_rep(alg.sig);
  spinline::LineReport report =
      spinline::invariant_lines(spinline::lambda_images(rep, alg, g.norm()), rep.dim);
  if (g.json()) {
    Json out;
    out["algebra"] = alg.name;
    out["signature"] = Json::array({alg.sig.r, alg.sig.s});
    out["normalization"] = spinline::normalization_name(g.norm());
    out["report"] = spinline::line_report_json(report);
    emit(out.dump(2) + "\n");
  } else {
    std::cout << "algebra " << alg.name << " on Delta of signature (" << alg.sig.r << ","
              << alg.sig.s << "), normalization " << spinline::normalization_name(g.norm())
              << "\n"
              << spinline::line_report_text(report);
  }
  return 0;
}

int cmd_dirac(const GlobalOpts& g, const std::string& signature, const std::string& spinor_path) {
  spinline::Signature sig = parse_signature(signature);
  spinline::CliffordRep rep = spinline::build_rep(sig);
  spinline::Vec s = spinline::spinor_from_file(spinor_path, rep.dim);
  spinline::HermitianForm form = spinline::hermitian_form(rep);
  spinline::DiracCurrent p = spinline::dirac_current(rep, form, s);
  spinline::Rational norm = spinline::dirac_norm(rep, p);
  if (g.json()) {
    Json out;
    out["signature"] = Json::array({sig.r, sig.s});
    Json comps = Json::array();
    for (const auto& c : p.components) comps.push_back(spinline::rational_string(c));
    out["current"] = std::move(comps);
    out["g_pp"] = spinline::rational_string(norm);
    emit(out.dump(2) + "\n");
  } else {
    std::cout << "Dirac current:";
    for (const auto& c : p.components) std::cout << " " << spinline::rational_string(c);
    std::cout << "\ng(p,p) = " << spinline::rational_string(norm) << "\n";
  }
  return 0;
}

int cmd_kahler(const GlobalOpts& g, const std::string& signature) {
  spinline::Signature sig = parse_signature(signature);
  spinline::CliffordRep rep = spinline::build_rep(sig);
  spinline::Matrix j = spinline::standard_complex_structure(sig);
  spinline::KahlerSpectrum ks = spinline::kahler_spectrum(rep, j);
  if (g.json()) {
    Json out;
    out["signature"] = Json::array({sig.r, sig.s});
    out["m"] = ks.m;
    Json spectrum = Json::array();
    for (const auto& [ev, mult] : ks.spectrum)
      spectrum.push_back(
          Json{{"eigenvalue", spinline::scalar_string(ev)}, {"multiplicity", mult}});
    out["spectrum"] = std::move(spectrum);
    emit(out.dump(2) + "\n");
  } else {
    std::cout << "Kahler 2-form spectrum on Delta of signature (" << sig.r << "," << sig.s
              << "), m = " << ks.m << "\n";
    for (const auto& [ev, mult] : ks.spectrum)
      std::cout << "  " << spinline::scalar_string(ev) << "  multiplicity " << mult << "\n";
  }
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int max_n) {
  spinline::SuiteSpec spec;
  spec.name = suite;
  spec.norm = g.norm();
  spec.max_n = max_n;
  spec.seed = g.seed;
  spinline::Report report = spinline::run_suite(spec);
  emit(g.json() ? spinline::report_json(report) : spinline::report_text(report));
  std::cerr << "elapsed: " << report.elapsed_ms << " ms\n";
  return report.overall ? 0 : 1;
}

int cmd_export(const GlobalOpts& g, const std::string& algebra, const std::string& out_path) {
  (void)g;
  spinline::LieAlgebraRep alg = spinline::parse_algebra_spec(algebra);
  std::string text = spinline::algebra_json(alg).dump(2) + "\n";
  if (out_path.empty()) {
    emit(text);
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("export: cannot open " + out_path);
    out << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spin representations, holonomy algebras, and invariant spinor lines"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--normalization", g.normalization, "bivector action scale on spinors")
      ->check(CLI::IsMember({"half", "paper"}))
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized property checks")->capture_default_str();

  std::string signature, algebra, spinor_path, suite = "all", out_path;
  int max_n = 10;

  CLI::App* rep = app.add_subcommand("rep", "build a Clifford representation and print/export it");
  rep->add_option("--signature", signature, "signature r,s")->required();
  CLI::App* rep_export = rep->add_subcommand("export", "emit the generator JSON document");

  CLI::App* lines = app.add_subcommand("lines", "enumerate invariant lines of a holonomy algebra");
  lines->add_option("--algebra", algebra, "algebra spec (so:r,s u:p,q su:p,q sp:p,q g2 g2split "
                                          "spin7 spin34 sim:... neutral-gl:n neutral-sl:n file:path)")
      ->required();

  CLI::App* dirac = app.add_subcommand("dirac", "Dirac current of a spinor (Lorentzian signature)");
  dirac->add_option("--signature", signature, "signature 1,N")->required();
  dirac->add_option("--spinor", spinor_path, "JSON file with the spinor coordinates")->required();

  CLI::App* kahler = app.add_subcommand("kahler", "spectrum of the Kahler 2-form action");
  kahler->add_option("--signature", signature, "signature r,s with r, s even")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "clifford riemannian lorentzian kahler neutral spinc all")
      ->capture_default_str();
  verify->add_option("--max-n", max_n, "largest frame dimension (cap 16)")->capture_default_str();

  CLI::App* exp = app.add_subcommand("export", "export algebra generators as JSON");
  exp->add_option("--algebra", algebra, "algebra spec")->required();
  exp->add_option("--out", out_path, "output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (rep->parsed()) return cmd_rep(g, signature, rep_export->parsed());
    if (lines->parsed()) return cmd_lines(g, algebra);
    if (dirac->parsed()) return cmd_dirac(g, signature, spinor_path);
    if (kahler->parsed()) return cmd_kahler(g, signature);
    if (verify->parsed()) return cmd_verify(g, suite, max_n);
    if (exp->parsed()) return cmd_export(g, algebra, out_path);
  } catch (const spinline::spec_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
