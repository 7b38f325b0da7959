// Command-line interface: batch computations on Frobenius complexes of
// two- and three-generator monoid presentations, with JSON/text/CSV output.
//
// Exit codes: 0 success, 1 verification-suite failure, 2 malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "frobex/complex.hpp"
#include "frobex/homology.hpp"
#include "frobex/interval.hpp"
#include "frobex/monoid.hpp"
#include "frobex/poincare.hpp"
#include "frobex/serialize.hpp"
#include "frobex/transition.hpp"
#include "frobex/verify.hpp"

namespace {

using frobex::OutputFormat;

struct GlobalOptions {
  std::string format = "json";
  std::string output;  // empty = stdout
};

void emit(const GlobalOptions& global, const std::string& payload) {
  if (global.output.empty()) {
    std::cout << payload;
    if (payload.empty() || payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(global.output, std::ios::binary);
  if (!out) throw frobex::Error("cannot open output file '" + global.output + "'");
  out << payload;
  if (payload.empty() || payload.back() != '\n') out << '\n';
}

frobex::Coords parse_coords(const std::string& text) {
  frobex::Coords out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    out.push_back(std::stoll(item, &used));
    if (used != item.size()) throw frobex::Error("bad coordinate '" + item + "'");
  }
  if (out.empty()) throw frobex::Error("empty coordinate tuple");
  return out;
}

std::array<std::int64_t, 2> parse_pair(const std::string& text) {
  frobex::Coords c = parse_coords(text);
  if (c.size() != 2) throw frobex::Error("expected a pair 'm,n', got '" + text + "'");
  return {c[0], c[1]};
}

// --- interval ---

struct IntervalArgs {
  std::string monoid, lambda, mu;
  bool core = false;
};

void run_interval(const GlobalOptions& global, const IntervalArgs& args) {
  frobex::MonoidSpec spec = frobex::MonoidSpec::parse(args.monoid);
  frobex::MonoidElement lambda = frobex::parse_element(spec, args.lambda);
  frobex::IntervalPoset poset =
      args.mu.empty()
          ? frobex::open_interval(spec, lambda)
          : frobex::half_open_interval(spec, frobex::parse_element(spec, args.mu),
                                       lambda);
  if (args.core) poset = poset.core();
  switch (frobex::parse_format(global.format)) {
    case OutputFormat::json: emit(global, frobex::poset_to_json(poset)); break;
    case OutputFormat::text: emit(global, frobex::poset_to_text(poset)); break;
    case OutputFormat::csv: emit(global, frobex::poset_to_csv(poset)); break;
  }
}

// --- complex ---

struct ComplexArgs {
  std::string monoid, lambda;
  bool core = false;
};

void run_complex(const GlobalOptions& global, const ComplexArgs& args) {
  frobex::MonoidSpec spec = frobex::MonoidSpec::parse(args.monoid);
  frobex::MonoidElement lambda = frobex::parse_element(spec, args.lambda);
  frobex::IntervalPoset poset = frobex::open_interval(spec, lambda);
  if (args.core) poset = poset.core();
  frobex::SimplicialComplex complex = frobex::order_complex(poset);
  switch (frobex::parse_format(global.format)) {
    case OutputFormat::json: emit(global, frobex::complex_to_json(complex)); break;
    case OutputFormat::text: emit(global, frobex::complex_to_text(complex)); break;
    case OutputFormat::csv: emit(global, frobex::complex_to_csv(complex)); break;
  }
}

// --- betti ---

struct BettiArgs {
  std::string monoid, lambda;
  std::string field = "gf2";
  bool cross_check = false;
  bool raw = false;  // skip the core reduction
};

void run_betti(const GlobalOptions& global, const BettiArgs& args) {
  frobex::MonoidSpec spec = frobex::MonoidSpec::parse(args.monoid);
  frobex::MonoidElement lambda = frobex::parse_element(spec, args.lambda);
  frobex::FieldSpec field = frobex::FieldSpec::parse(args.field);
  frobex::LocalBettiVector betti =
      frobex::local_betti(spec, lambda, field, !args.raw);
  if (args.cross_check) {
    for (const frobex::FieldSpec& other :
         {frobex::FieldSpec::gf(3), frobex::FieldSpec::rational()}) {
      if (other == field) continue;
      frobex::LocalBettiVector again =
          frobex::local_betti(spec, lambda, other, !args.raw);
      if (!(again == betti))
        throw frobex::Error("field cross-check failed: " + field.to_string() +
                            " gives " + betti.to_string() + ", " +
                            other.to_string() + " gives " + again.to_string());
    }
  }
  switch (frobex::parse_format(global.format)) {
    case OutputFormat::json: emit(global, frobex::betti_to_json(betti)); break;
    case OutputFormat::text: emit(global, frobex::betti_to_text(betti)); break;
    case OutputFormat::csv: emit(global, frobex::betti_to_csv(betti)); break;
  }
}

// --- predict ---

struct PredictArgs {
  std::string monoid, lambda;
};

void run_predict(const GlobalOptions& global, const PredictArgs& args) {
  frobex::MonoidSpec spec = frobex::MonoidSpec::parse(args.monoid);
  frobex::MonoidElement lambda = frobex::parse_element(spec, args.lambda);
  frobex::Prediction prediction = frobex::predicted_betti(spec, lambda);
  if (frobex::parse_format(global.format) == OutputFormat::json)
    emit(global, frobex::prediction_to_json(prediction));
  else
    emit(global, frobex::prediction_to_text(prediction));
}

// --- poincare ---

struct PoincareArgs {
  std::string monoid;
  int i_max = 4;
  std::string box;
  std::string field = "gf2";
  std::string mode = "homology";
};

void run_poincare(const GlobalOptions& global, const PoincareArgs& args) {
  frobex::MonoidSpec spec = frobex::MonoidSpec::parse(args.monoid);
  if (args.i_max < 0) throw frobex::Error("--imax must be nonnegative");
  frobex::Coords box = args.box.empty()
                           ? frobex::default_series_box(spec, args.i_max)
                           : parse_coords(args.box);
  frobex::FieldSpec field = frobex::FieldSpec::parse(args.field);
  frobex::SeriesMode mode;
  if (args.mode == "homology")
    mode = frobex::SeriesMode::homology;
  else if (args.mode == "oracle")
    mode = frobex::SeriesMode::oracle;
  else
    throw frobex::Error("unknown mode '" + args.mode + "'");

  frobex::MultigradedSeries computed =
      frobex::series_computed(spec, args.i_max, box, mode, field);
  std::optional<frobex::MultigradedSeries> closed;
  if (spec.kind() == frobex::MonoidKind::three_gen)
    closed = frobex::series_closed_form(spec, args.i_max, box);

  switch (frobex::parse_format(global.format)) {
    case OutputFormat::json: {
      nlohmann::ordered_json out;
      out["computed"] = nlohmann::ordered_json::parse(
          frobex::series_to_json(computed));
      if (closed) {
        out["closed_form"] = nlohmann::ordered_json::parse(
            frobex::series_to_json(*closed));
        out["diff"] = nlohmann::ordered_json::parse(
            frobex::diff_to_json(frobex::series_diff(computed, *closed)));
      } else {
        out["closed_form"] = nullptr;
        out["diff"] = nullptr;
      }
      emit(global, out.dump(2));
      break;
    }
    case OutputFormat::text:
    case OutputFormat::csv: {
      std::ostringstream out;
      out << "# computed\n" << frobex::series_to_csv(computed);
      if (closed) {
        out << "# closed_form\n" << frobex::series_to_csv(*closed);
        auto diff = frobex::series_diff(computed, *closed);
        out << "# diff " << diff.size() << " entries\n";
      }
      emit(global, out.str());
      break;
    }
  }
}

// --- recognize ---

struct RecognizeArgs {
  std::vector<std::string> generators;
};

void run_recognize(const GlobalOptions& global, const RecognizeArgs& args) {
  if (args.generators.size() != 3)
    throw frobex::Error("recognize takes exactly three generators 'm,n'");
  frobex::RecognizedMonoid recognized = frobex::recognize_submonoid(
      parse_pair(args.generators[0]), parse_pair(args.generators[1]),
      parse_pair(args.generators[2]));
  if (frobex::parse_format(global.format) == OutputFormat::json)
    emit(global, frobex::recognized_to_json(recognized));
  else
    emit(global, frobex::recognized_to_text(recognized));
}

// --- verify ---

struct VerifyArgs {
  std::string suite = "all";
};

int run_verify(const GlobalOptions& global, const VerifyArgs& args) {
  std::vector<frobex::CriterionResult> results = frobex::run_suite(args.suite);
  bool all_pass = true;
  std::ostringstream out;
  OutputFormat format = frobex::parse_format(global.format);
  nlohmann::ordered_json array = nlohmann::ordered_json::array();
  if (format == OutputFormat::csv) out << "id,name,pass,seconds,detail\n";
  for (const frobex::CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    switch (format) {
      case OutputFormat::json: {
        nlohmann::ordered_json row;
        row["id"] = r.id;
        row["name"] = r.name;
        row["pass"] = r.pass;
        row["seconds"] = r.seconds;
        row["detail"] = r.detail;
        array.push_back(row);
        break;
      }
      case OutputFormat::text: {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.1f", r.seconds);
        out << (r.pass ? "PASS" : "FAIL") << ' ' << r.id << ' ' << r.name
            << " (" << buffer << "s) " << r.detail << '\n';
        break;
      }
      case OutputFormat::csv:
        out << r.id << ',' << r.name << ',' << (r.pass ? "true" : "false")
            << ',' << r.seconds << ",\"" << r.detail << "\"\n";
        break;
    }
  }
  if (format == OutputFormat::json)
    emit(global, array.dump(2));
  else
    emit(global, out.str());
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius complexes of two- and three-generator monoids"};
  app.require_subcommand(1);
  // Let --format / -o appear after the subcommand as well.
  app.fallthrough();

  GlobalOptions global;
  app.add_option("--format", global.format, "Output format: json, text, csv")
      ->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("-o,--output", global.output, "Write output to a file");

  IntervalArgs interval_args;
  CLI::App* interval = app.add_subcommand(
      "interval", "Open interval (0, lambda) of the divisibility order");
  interval->add_option("--monoid", interval_args.monoid, "Monoid spec")
      ->required();
  interval->add_option("--lambda", interval_args.lambda, "Top element")
      ->required();
  interval->add_option("--mu", interval_args.mu,
                       "Lower bound: export [mu, lambda) instead");
  interval->add_flag("--core", interval_args.core,
                     "Dismantle to the homotopy core first");

  ComplexArgs complex_args;
  CLI::App* complex = app.add_subcommand(
      "complex", "Order complex of the open interval (0, lambda)");
  complex->add_option("--monoid", complex_args.monoid, "Monoid spec")
      ->required();
  complex->add_option("--lambda", complex_args.lambda, "Top element")
      ->required();
  complex->add_flag("--core", complex_args.core,
                    "Dismantle to the homotopy core first");

  BettiArgs betti_args;
  CLI::App* betti = app.add_subcommand(
      "betti", "Local Betti vector of lambda (interval homology)");
  betti->add_option("--monoid", betti_args.monoid, "Monoid spec")->required();
  betti->add_option("--lambda", betti_args.lambda, "Element")->required();
  betti->add_option("--field", betti_args.field,
                    "Coefficient field: gf2, gf:p, rational");
  betti->add_flag("--cross-check-fields", betti_args.cross_check,
                  "Recompute over gf:3 and rationals and require agreement");
  betti->add_flag("--raw", betti_args.raw, "Skip the core reduction");

  PredictArgs predict_args;
  CLI::App* predict = app.add_subcommand(
      "predict", "Closed-form local Betti vector and homotopy-type label");
  predict->add_option("--monoid", predict_args.monoid, "Monoid spec")
      ->required();
  predict->add_option("--lambda", predict_args.lambda, "Element")->required();

  PoincareArgs poincare_args;
  CLI::App* poincare = app.add_subcommand(
      "poincare", "Truncated multigraded Poincare series");
  poincare->add_option("--monoid", poincare_args.monoid, "Monoid spec")
      ->required();
  poincare->add_option("--imax", poincare_args.i_max,
                       "Largest homological degree");
  poincare->add_option("--box", poincare_args.box,
                       "Inclusive normal-form coordinate bounds m,n[,k]");
  poincare->add_option("--field", poincare_args.field,
                       "Coefficient field for homology mode");
  poincare->add_option("--mode", poincare_args.mode,
                       "Term source: homology or oracle")
      ->check(CLI::IsMember({"homology", "oracle"}));

  RecognizeArgs recognize_args;
  CLI::App* recognize = app.add_subcommand(
      "recognize", "Recognize p*u + q*v = r*w among three generators of N^2");
  recognize->add_option("generators", recognize_args.generators,
                        "Three generators as 'm,n'")
      ->expected(3);

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run a named verification suite (default: all)");
  verify->add_option("--suite", verify_args.suite, "Suite name or 'all'")
      ->check(CLI::IsMember(frobex::suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*interval) run_interval(global, interval_args);
    if (*complex) run_complex(global, complex_args);
    if (*betti) run_betti(global, betti_args);
    if (*predict) run_predict(global, predict_args);
    if (*poincare) run_poincare(global, poincare_args);
    if (*recognize) run_recognize(global, recognize_args);
    if (*verify) return run_verify(global, verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
