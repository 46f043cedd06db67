#ifndef WEYLKIT_CLI_HPP
#define WEYLKIT_CLI_HPP

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "weylkit/bergman_toeplitz.hpp"
#include "weylkit/errors.hpp"
#include "weylkit/json_io.hpp"
#include "weylkit/operator_catalog.hpp"
#include "weylkit/symbol_parser.hpp"
#include "weylkit/weyl_checker.hpp"

namespace weylkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitNumeric = 3;

namespace detail {

inline void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw InvalidInput("failed writing '" + path + "'");
}

inline std::string read_file(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

inline CatalogParams parse_params(const std::string& name, const std::vector<std::string>& items) {
  CatalogParams params = default_catalog_params(name);
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("parameter '" + item + "' is not of the form key=value");
    const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != value.size()) throw InvalidInput("parameter " + key + " has non-numeric value '" + value + "'");
    params[key] = v;
  }
  return params;
}

}  // namespace detail

/// Entry point of the weylkit command-line tool. Exit codes: 0 success,
/// 2 malformed input or failed validation, 3 numerical failure.
inline int run(int argc, char** argv) {
  CLI::App app{"Weyl-type spectral properties and Bergman Toeplitz symbols"};
  app.name("weylkit");
  app.require_subcommand(1);

  std::string expr, out_path, in_path, name, eigs_path;
  int samples = kDefaultSamples, grid = kDefaultGrid, size = 0;
  bool full = false;
  std::vector<std::string> params;

  auto* classify = app.add_subcommand("classify-symbol", "Compact-perturbation stability report for T_phi");
  classify->add_option("--expr", expr, "symbol expression")->required();
  classify->add_option("--samples", samples, "boundary samples")->capture_default_str();
  classify->add_option("--grid", grid, "raster resolution")->capture_default_str();
  classify->add_option("--out", out_path, "output JSON file ('-' for stdout)")->required();

  auto* curve = app.add_subcommand("curve", "Boundary curve samples and holes");
  curve->add_option("--expr", expr, "symbol expression")->required();
  curve->add_option("--samples", samples, "boundary samples")->capture_default_str();
  curve->add_option("--grid", grid, "raster resolution")->capture_default_str();
  curve->add_option("--out", out_path, "output JSON file ('-' for stdout)")->required();

  auto* truncate = app.add_subcommand("truncate", "Bergman truncation matrix and its eigenvalues");
  truncate->add_option("--expr", expr, "symbol expression")->required();
  truncate->add_option("--n", size, "matrix size")->required();
  truncate->add_option("--out", out_path, "matrix CSV file ('-' for stdout)")->required();
  truncate->add_option("--eigs", eigs_path, "eigenvalue CSV file");

  auto* catalog = app.add_subcommand("catalog", "Export a catalog entry as picture JSON");
  catalog->add_option("--name", name, "entry name")->required();
  catalog->add_option("--param", params, "entry parameter key=value (repeatable)");
  catalog->add_option("--out", out_path, "output JSON file ('-' for stdout)")->required();

  auto* check = app.add_subcommand("check-picture", "Evaluate Weyl-type properties on a picture");
  check->add_option("--in", in_path, "picture JSON file ('-' for stdin)")->required();
  check->add_option("--out", out_path, "output JSON file ('-' for stdout)")->required();
  check->add_option("--grid", grid, "raster resolution for --full")->capture_default_str();
  check->add_flag("--full", full, "add stability and closure checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (classify->parsed()) {
      const SymbolExpr symbol = parse_symbol(expr);
      Json j = stability_report_to_json(classify_compact_stability(symbol, samples, grid));
      j["symbol"] = print_symbol(symbol);
      detail::write_file(out_path, to_text(j));
    } else if (curve->parsed()) {
      const SymbolExpr symbol = parse_symbol(expr);
      const Curve c = boundary_curve(symbol, samples);
      Json holes = Json::array();
      if (!is_constant_on_boundary(symbol))
        for (const auto& h : find_holes(c, grid)) holes.push_back(hole_to_json(h));
      detail::write_file(out_path, to_text(Json{{"samples", points_json(c.samples())}, {"holes", holes}}));
    } else if (truncate->parsed()) {
      const SymbolExpr symbol = parse_symbol(expr);
      const TruncationMatrix t = truncation_matrix(symbol, size);
      detail::write_file(out_path, matrix_csv(t.entries));
      if (!eigs_path.empty()) detail::write_file(eigs_path, eigenvalues_csv(eigenvalues(t)));
    } else if (catalog->parsed()) {
      const CatalogEntry e = make_catalog_entry(name, detail::parse_params(name, params));
      detail::write_file(out_path, to_text(catalog_entry_to_json(e)));
    } else if (check->parsed()) {
      Json input;
      try {
        input = Json::parse(detail::read_file(in_path));
      } catch (const Json::exception& ex) {
        throw InvalidInput(std::string("malformed picture JSON: ") + ex.what());
      }
      const SpectralPicture pic = picture_from_json(input);
      Json j = property_report_to_json(evaluate_properties(pic));
      if (full) {
        j["uwe_stable_under_compacts"] = uwe_stable_under_compacts(pic, grid);
        j["closure_hp_connected"] = closure_hp_connectedness(pic, grid);
        const RadiusSearch sp = closure_sp_connectedness(pic, grid);
        j["closure_sp_connected"] = sp.connected;
        j["closure_sp_radius"] = sp.radius ? Json(*sp.radius) : Json(nullptr);
        if (pic.flags.is_hypercyclic.value_or(false)) {
          const auto v = check_th5_hypercyclic(pic);
          j["hypercyclic_check"] = {{"consistent", v.consistent}, {"detail", v.detail}};
        }
        if (pic.flags.is_supercyclic.value_or(false)) {
          const auto v = check_th5_supercyclic(pic);
          j["supercyclic_check"] = {{"consistent", v.consistent},
                                    {"alpha", v.alpha ? point_json(*v.alpha) : Json(nullptr)},
                                    {"detail", v.detail}};
        }
      }
      detail::write_file(out_path, to_text(j));
    }
  } catch (const NumericFailure& e) {
    std::cerr << "weylkit: numerical failure: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const InvalidInput& e) {
    std::cerr << "weylkit: " << e.what() << '\n';
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "weylkit: malformed JSON: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}

}  // namespace weylkit::cli

#endif  // WEYLKIT_CLI_HPP
