// Copyright 2026 The lozenge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lozenge/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "lozenge/cut_type.hpp"
#include "lozenge/error.hpp"
#include "lozenge/group.hpp"
#include "lozenge/io.hpp"
#include "lozenge/lattice.hpp"
#include "lozenge/mutation.hpp"
#include "lozenge/oracle.hpp"
#include "lozenge/tiling.hpp"

namespace lozenge::cli {
namespace {

struct Options {
  // classify
  std::string group;
  std::string matrix;
  // types
  bool all = false;
  std::string svg;
  // tile / enumerate
  std::string type;
  std::string air;
  std::string out;
  std::string list;
  // flips
  std::vector<std::string> connect;
  // verify
  std::int64_t max_n = 12;
  std::int64_t max_order = 12;
};

std::string paren(const CutType& g) { return "(" + format_cut_type(g) + ")"; }

std::string extension(const std::string& path) {
  return std::filesystem::path(path).extension().string();
}

PeriodicityMatrix matrix_arg(const Options& o) { return canonicalize(parse_matrix(o.matrix)); }

int cmd_classify(const Options& o, std::ostream& out) {
  if (!o.group.empty()) {
    const GroupEmbedding g = parse_group(o.group);
    if (admits_cut_group_form(g)) {
      out << "admits a higher preprojective cut\n";
    } else if (is_klein_four(g)) {
      out << "no higher preprojective cut (Klein four-group)\n";
    } else {
      out << "no higher preprojective cut (trivial character)\n";
    }
    out << "G = " << format_group(g) << "\n";
    out << "B = " << format_matrix(g.matrix()) << "\n";
    out << "|G| = " << g.order() << "\n";
    return kExitOk;
  }
  const PeriodicityMatrix b = matrix_arg(o);
  out << (admits_cut_matrix_form(b) ? "admits a higher preprojective cut\n"
                                    : "no higher preprojective cut (no positive type)\n");
  out << "B = " << format_matrix(b) << "\n";
  out << "|G| = " << b.n() << "\n";
  return kExitOk;
}

int cmd_types(const Options& o, std::ostream& out) {
  const PeriodicityMatrix b = matrix_arg(o);
  const std::vector<CutType> types = valid_types(b, o.all);
  std::vector<CutType> positive;
  std::vector<CutType> boundary;
  for (const CutType& g : types) (g.positive() ? positive : boundary).push_back(g);
  out << "B = " << format_matrix(b) << "\n";
  out << "n = " << b.n() << "\n";
  out << "positive " << positive.size() << ":";
  for (const CutType& g : positive) out << " " << paren(g);
  out << "\n";
  if (o.all) {
    out << "boundary " << boundary.size() << ":";
    for (const CutType& g : boundary) out << " " << paren(g);
    out << "\n";
  }
  if (!o.svg.empty()) write_file(o.svg, render_types_svg(b, types));
  return kExitOk;
}

std::array<std::int64_t, 4> parse_air(const std::string& text) {
  std::array<std::int64_t, 4> v{};
  std::istringstream in(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(in, part, ',')) {
    if (i == v.size()) break;
    try {
      std::size_t used = 0;
      v[i] = std::stoll(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw LozengeError(ErrorCode::kParseError, "bad --air entry \"" + part + "\"");
    }
    ++i;
  }
  if (i != v.size() || in.rdbuf()->in_avail() > 0) {
    throw LozengeError(ErrorCode::kParseError, "--air expects n,e1,e2,e3");
  }
  return v;
}

void emit_tiling(const Tiling& t, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << render_ascii(t);
    return;
  }
  const std::string ext = extension(path);
  if (ext == ".json") {
    write_file(path, encode_tiling_json(t));
  } else if (ext == ".svg") {
    write_file(path, render_tiling_svg(t));
  } else if (ext == ".txt") {
    write_file(path, render_ascii(t));
  } else {
    throw CLI::ValidationError("--out", "extension must be .json, .svg or .txt");
  }
}

int cmd_tile(const Options& o, std::ostream& out) {
  std::optional<Tiling> t;
  if (!o.air.empty()) {
    const auto [n, e1, e2, e3] = parse_air(o.air);
    if (!o.matrix.empty()) {
      const PeriodicityMatrix b = matrix_arg(o);
      if (b.n() != n) {
        throw LozengeError(ErrorCode::kBadExponentSum,
                           "--air n=" + std::to_string(n) + " differs from det B = " +
                               std::to_string(b.n()));
      }
      t = air_tiling(b, {e1, e2, e3});
    } else {
      t = air_tiling(n, {e1, e2, e3});
    }
    if (!o.type.empty() && type_of(*t) != parse_cut_type(o.type)) {
      throw LozengeError(ErrorCode::kInvalidType, "AIR tiling has type " + paren(type_of(*t)) +
                                                      ", not (" + o.type + ")");
    }
  } else {
    if (o.matrix.empty() || o.type.empty()) {
      throw CLI::RequiredError("tile needs --matrix and --type, or --air");
    }
    t = canonical_tiling(matrix_arg(o), parse_cut_type(o.type));
  }
  emit_tiling(*t, o.out, out);
  return kExitOk;
}

int cmd_flips(const Options& o, std::ostream& out) {
  const Tiling a = decode_tiling_json(read_file(o.connect[0]));
  const Tiling b = decode_tiling_json(read_file(o.connect[1]));
  const FlipSequence seq = flip_connect(a, b);
  out << "type " << paren(type_of(a)) << "\n";
  out << "height distance " << height_distance(a, b) << "\n";
  out << "flips " << seq.steps.size() << ":";
  for (const std::size_t s : seq.steps) out << " (" << format_point(a.quotient().rep(s)) << ")";
  out << "\n";
  return kExitOk;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
  const PeriodicityMatrix b = matrix_arg(o);
  const std::int64_t bound = oracle_bound_from_env();
  std::optional<CutType> wanted;
  if (!o.type.empty()) wanted = parse_cut_type(o.type);
  if (wanted && wanted->n() != b.n()) {
    throw LozengeError(ErrorCode::kInvalidType,
                       "type " + paren(*wanted) + " does not sum to det B = " + std::to_string(b.n()));
  }
  if (!o.list.empty()) std::filesystem::create_directories(o.list);

  std::map<CutType, std::size_t> census;
  std::size_t written = 0;
  for_each_tiling(b, bound, [&](const Tiling& t) {
    const CutType g = type_of(t);
    ++census[g];
    if (wanted && g != *wanted) return true;
    if (!o.list.empty()) {
      char name[32];
      std::snprintf(name, sizeof(name), "tiling_%06zu.json", written);
      write_file((std::filesystem::path(o.list) / name).string(), encode_tiling_json(t));
    }
    ++written;
    return true;
  });

  out << "B = " << format_matrix(b) << "\n";
  if (wanted) {
    out << "type " << paren(*wanted) << ": " << census[*wanted] << " tilings\n";
  } else {
    for (const auto& [g, count] : census) out << "type " << paren(g) << ": " << count << " tilings\n";
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::int64_t bound = std::max(oracle_bound_from_env(), o.max_n);
  Report all;
  for (const PeriodicityMatrix& b : canonical_matrices(o.max_n)) {
    all.append(verify_type_theorem(b, bound));
    all.append(verify_mutation_theorem(b, bound));
  }
  if (o.max_order > 0) all.append(verify_classification(o.max_order));
  out << all.format();
  out << (all.passed() ? "ALL PASS" : "FAILURES") << " " << all.checks.size() - all.failures()
      << "/" << all.checks.size() << "\n";
  return all.passed() ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic lozenge tilings, cuts and flips", "lozenge"};
  app.require_subcommand(1);
  Options o;

  auto* classify = app.add_subcommand("classify", "Decide whether a group or matrix admits a cut");
  auto* group_opt = classify->add_option("--group", o.group, "Generators, e.g. \"1/3(1,1,1)\"");
  auto* matrix_opt = classify->add_option("--matrix", o.matrix, "Periodicity matrix \"a1 b1 / a2 b2\"");
  group_opt->excludes(matrix_opt);
  classify->require_option(1);

  auto* types = app.add_subcommand("types", "List cut types of a periodicity matrix");
  types->add_option("--matrix", o.matrix, "Periodicity matrix")->required();
  types->add_flag("--all", o.all, "Include boundary types");
  types->add_option("--svg", o.svg, "Write the type simplex as SVG");

  auto* tile = app.add_subcommand("tile", "Build a tiling of a given type");
  tile->add_option("--matrix", o.matrix, "Periodicity matrix");
  tile->add_option("--type", o.type, "Type g1,g2,g3");
  tile->add_option("--air", o.air, "Exponent form n,e1,e2,e3");
  tile->add_option("--out", o.out, "Output file (.json, .svg or .txt); ASCII to stdout if omitted");

  auto* flips = app.add_subcommand("flips", "Connect two tilings of one type by flips");
  flips->add_option("--connect", o.connect, "Two tiling JSON files")->expected(2)->required()
      ->check(CLI::ExistingFile);

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate all tilings of a matrix");
  enumerate->add_option("--matrix", o.matrix, "Periodicity matrix")->required();
  enumerate->add_option("--type", o.type, "Restrict to one type");
  enumerate->add_option("--list", o.list, "Write each tiling as JSON into this directory");

  auto* verify = app.add_subcommand("verify", "Check the theorems against the exhaustive oracle");
  verify->add_option("--max-n", o.max_n, "Largest det B")->check(CLI::Range(1, 64));
  verify->add_option("--max-order", o.max_order, "Largest group order (0 skips)")
      ->check(CLI::Range(0, 64));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(o, out);
    if (types->parsed()) return cmd_types(o, out);
    if (tile->parsed()) return cmd_tile(o, out);
    if (flips->parsed()) return cmd_flips(o, out);
    if (enumerate->parsed()) return cmd_enumerate(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const LozengeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace lozenge::cli
