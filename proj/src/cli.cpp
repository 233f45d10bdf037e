#include "sabar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "sabar/io.hpp"

namespace sabar {

namespace {

const auto rational_check = CLI::Validator(
    [](std::string& s) -> std::string {
      try {
        Rational::parse(s);
      } catch (const std::exception&) {
        return "malformed rational '" + s + "'";
      }
      return "";
    },
    "RATIONAL");

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_target(const std::string& target, const std::string& data, std::ostream& out) {
  if (target == "-") {
    out << data;
    return;
  }
  std::ofstream f(target, std::ios::binary);
  if (!f) throw ContractError("cannot write '" + target + "'");
  f << data;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    const auto a = cur.find_first_not_of(' ');
    if (a == std::string::npos) continue;
    out.push_back(cur.substr(a, cur.find_last_not_of(' ') - a + 1));
  }
  return out;
}

std::vector<Rational> rationals(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split(s, ',')) out.push_back(Rational::parse(t));
  return out;
}

void emit(const RunConfig& cfg, const std::vector<Barcode>& bs, const std::string& preamble, std::ostream& out) {
  if (cfg.json_out) write_target(*cfg.json_out, emit_barcode_json(bs), out);
  if (cfg.svg_out) write_target(*cfg.svg_out, emit_barcode_svg(bs), out);
  if (cfg.json_out != "-" && cfg.svg_out != "-") out << preamble << barcodes_text(bs);
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app("Persistent homology barcodes of filtrations and semi-algebraic sets, computed exactly.", "sabar");
  app.require_subcommand(1);

  auto outputs = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_out, "write barcode JSON ('-' for stdout)");
    sub->add_option("--svg", cfg.svg_out, "write barcode SVG ('-' for stdout)");
  };

  auto* barcode = app.add_subcommand("barcode", "compute barcodes");
  barcode->require_subcommand(1);
  auto* simplicial = barcode->add_subcommand("simplicial", "finite filtration from a file");
  simplicial->add_option("file", cfg.input, "filtration file")->required();
  simplicial->add_option("--max-dim", cfg.max_dim, "largest homology dimension")->check(CLI::Range(0, 64));
  outputs(simplicial);

  auto* sublevel = barcode->add_subcommand("sublevel", "sub-level sets of a polynomial on a semi-algebraic set");
  sublevel->add_option("--formula", cfg.formula, "closed quantifier-free formula")->required();
  sublevel->add_option("--poly", cfg.poly, "filtering polynomial")->required();
  sublevel->add_option("--radius", cfg.radius, "R, the set is cut by |x|^2 <= R")->required()->check(rational_check);
  sublevel->add_option("--max-dim", cfg.max_dim, "largest homology dimension")->required()->check(CLI::Range(0, 3));
  sublevel->add_option("--grid", cfg.grid_n, "grid steps per axis")->required()->check(CLI::Range(2, 4096));
  sublevel->add_option("--levels", cfg.levels, "comma-separated rational levels; skips elimination");
  sublevel->add_option("--extra-levels", cfg.extra_levels, "comma-separated rational levels added to the critical values");
  outputs(sublevel);

  auto* rips = barcode->add_subcommand("rips", "Rips filtration of a point cloud");
  rips->add_option("--points", cfg.input, "CSV of rational coordinates")->required();
  rips->add_option("--max-dim", cfg.max_dim, "largest homology dimension")->required()->check(CLI::Range(0, 2));
  outputs(rips);

  auto* roots = app.add_subcommand("roots", "real algebraic numbers");
  roots->require_subcommand(1);
  auto* order = roots->add_subcommand("order", "order the real roots of univariate polynomials");
  order->add_option("--polys", cfg.polys, "polynomials separated by ';'")->required();

  auto* formula = app.add_subcommand("formula", "univariate formulas");
  formula->require_subcommand(1);
  auto* closed = formula->add_subcommand("make-closed", "closed formula with the closure of the realization");
  closed->add_option("--formula", cfg.formula, "univariate formula")->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, msg, msg);
    if (code == 0) {
      cfg.verb = Verb::Help;
      cfg.help = msg.str();
      return cfg;
    }
    throw UsageError(msg.str());
  }
  if (*simplicial) cfg.verb = Verb::BarcodeSimplicial;
  else if (*sublevel) cfg.verb = Verb::BarcodeSublevel;
  else if (*rips) cfg.verb = Verb::BarcodeRips;
  else if (*order) cfg.verb = Verb::RootsOrder;
  else cfg.verb = Verb::FormulaMakeClosed;
  if (cfg.levels && cfg.extra_levels) throw UsageError("--levels and --extra-levels are exclusive\n");
  for (const auto* opt : {&cfg.levels, &cfg.extra_levels}) {
    if (!*opt) continue;
    try {
      rationals(**opt);
    } catch (const std::exception&) {
      throw UsageError("malformed rational in level list '" + **opt + "'\n");
    }
  }
  return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  worker_count();  // validates SABAR_THREADS
  switch (cfg.verb) {
    case Verb::Help:
      out << cfg.help;
      return kOk;
    case Verb::BarcodeSimplicial: {
      const Filtration f = read_filtration(read_file(cfg.input));
      emit(cfg, barcodes(f, cfg.max_dim), "", out);
      return kOk;
    }
    case Verb::BarcodeSublevel: {
      SemialgebraicInput in;
      in.formula = QfFormula::parse(cfg.formula);
      in.poly = MultiPoly::parse(cfg.poly);
      in.radius = Rational::parse(cfg.radius);
      in.level = cfg.max_dim;
      const SemialgebraicBarcodes r = cfg.levels ? barcode_at_levels(in, cfg.grid_n, rationals(*cfg.levels))
                                                 : barcode_semialgebraic(in, cfg.grid_n, cfg.extra_levels ? rationals(*cfg.extra_levels) : std::vector<Rational>{});
      std::ostringstream pre;
      pre << "levels:";
      for (const auto& t : r.levels.values) pre << ' ' << FiltrationValue::of(t, Rational(1, 1000)).str();
      pre << "\nsimplices: " << r.simplices << "\n";
      emit(cfg, r.barcodes, pre.str(), out);
      return kOk;
    }
    case Verb::BarcodeRips: {
      const auto pts = read_points_csv(read_file(cfg.input));
      const Filtration f = rips_filtration(pts, std::min(cfg.max_dim + 1, 3));
      emit(cfg, barcodes(f, cfg.max_dim), "", out);
      return kOk;
    }
    case Verb::RootsOrder: {
      std::vector<UniPoly> polys;
      for (const auto& s : split(cfg.polys, ';')) polys.push_back(UniPoly::parse(s, "X"));
      const auto roots = order_roots(polys);
      for (std::size_t i = 0; i < roots.size(); ++i) {
        const auto& t = roots[i];
        out << i << "  " << FiltrationValue::of(t, Rational(1, 1000)).str() << "  " << thom_to_json(t).dump() << "\n";
      }
      return kOk;
    }
    case Verb::FormulaMakeClosed: {
      const QfFormula f = QfFormula::parse(cfg.formula);
      const ClosedFormula c = make_closed(f);
      out << "closed: " << c.str() << "\n";
      out << "realization: " << realize_univariate(c.to_formula()).str() << "\n";
      return kOk;
    }
  }
  return kInternal;
}

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + 1, argv + argc);
  RunConfig cfg;
  try {
    cfg = parse_args(args);
  } catch (const UsageError& e) {
    err << e.what();
    return kUsage;
  }
  try {
    return run(cfg, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kContract;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kContract;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kContract;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace sabar
