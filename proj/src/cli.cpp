#include "fri/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>

#include "fri/document.hpp"
#include "fri/errors.hpp"
#include "fri/minimality.hpp"
#include "fri/minimax.hpp"
#include "fri/oracle.hpp"

namespace fri::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json index_set_json(const std::vector<std::size_t>& indices) {
  auto arr = Json::array();
  for (std::size_t j : indices) arr.push_back(j + 1);
  return arr;
}

Json assignments_json(const std::vector<Assignment>& xs) {
  auto arr = Json::array();
  for (const auto& x : xs) arr.push_back(vector_json(x));
  return arr;
}

Json certificate_json(const MinimalityCertificate& cert) {
  Json j;
  j["minimal"] = cert.minimal;
  j["tight_row"] = cert.tight_row ? Json(*cert.tight_row + 1) : Json(nullptr);
  j["single_row"] = cert.single_row;
  j["support"] = index_set_json(cert.support.indices);
  Json flags = Json::object();
  for (const auto& [col, strict] : cert.strict_flags) flags[std::to_string(col + 1)] = strict;
  j["strict_flags"] = std::move(flags);
  Json witnesses = Json::object();
  for (const auto& [col, row] : cert.column_witnesses) witnesses[std::to_string(col + 1)] = row + 1;
  j["column_witnesses"] = std::move(witnesses);
  j["fixed_point_deltas"] = vector_json(cert.fixed_point_deltas);
  return j;
}

Json trace_json(const RowMinimaxTrace& trace) {
  Json j;
  j["row"] = trace.row + 1;
  j["stop"] = trace.stop == StopRule::TightSum ? "tight-sum" : "stable-active-set";
  j["steps"] = Json::array();
  for (const auto& s : trace.steps) {
    Json step;
    step["k"] = s.k;
    step["u"] = scalar_json(s.u.value());
    step["active"] = index_set_json(s.active);
    step["row_sum"] = scalar_json(s.row_sum);
    j["steps"].push_back(std::move(step));
  }
  j["final_u"] = scalar_json(trace.final_u.value());
  return j;
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw InputError("bad index list \"" + text + "\"");
    out.push_back(std::stoul(item));
  }
  return out;
}

std::vector<Rational> parse_literal_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  return out;
}

// Human-readable rendering of a result document.
void print_pretty(const Json& doc, std::ostream& out) {
  std::function<std::string(const Json&)> flat = [&](const Json& v) -> std::string {
    if (v.is_object() && v.contains("exact") && v.size() == 2) return v["exact"].get<std::string>();
    if (v.is_array()) {
      std::string s = "(";
      for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + flat(v[k]);
      return s + ")";
    }
    if (v.is_object()) {
      std::string s = "{";
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        s += (first ? "" : ", ") + key + ": " + flat(item);
        first = false;
      }
      return s + "}";
    }
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  };
  out << "status   " << doc["status"].get<std::string>() << '\n';
  if (doc.contains("command")) out << "command  " << doc["command"].get<std::string>() << '\n';
  if (doc.contains("message")) out << "message  " << doc["message"].get<std::string>() << '\n';
  if (!doc.contains("payload")) return;
  std::size_t width = 0;
  for (const auto& [key, item] : doc["payload"].items()) width = std::max(width, key.size());
  for (const auto& [key, item] : doc["payload"].items()) {
    const bool nested = item.is_array() && !item.empty() &&
                        (item[0].is_array() || (item[0].is_object() && !item[0].contains("exact")));
    if (nested) {
      out << key << ":\n";
      for (const auto& row : item) out << "  " << flat(row) << '\n';
    } else {
      out << key << std::string(width + 2 - key.size(), ' ') << flat(item) << '\n';
    }
  }
}

struct Options {
  std::string problem_file;
  std::string point_file;
  std::string from_file;
  std::string perm;
  std::string step = "1/10";
  std::string extra;
  std::string oracle_mode;
  std::size_t limit = 1000;
  std::size_t coordinate = 0;
  bool all_perms = false;
  bool allow_large = false;
  bool trace = false;
  bool minimal_optimals = false;
  bool verify = false;
  bool full = false;
  bool pretty = false;
};

ProblemDocument load_problem(const Options& o) {
  return parse_problem_document(read_file(o.problem_file));
}

oracle::GridSpec grid_from(const Options& o) {
  std::vector<Rational> extra;
  if (!o.extra.empty()) extra = parse_literal_list(o.extra);
  return oracle::GridSpec(parse_rational(o.step), std::move(extra));
}

// Returns the exit code; fills `payload`.
int cmd_check(const Options& o, Json& payload) {
  const Problem p = load_problem(o).problem;
  const bool solvable = is_solvable(p);
  payload["solvable"] = solvable;
  payload["rows"] = Json::array();
  for (std::size_t i = 0; i < p.rows(); ++i)
    payload["rows"].push_back(
        {{"row", i + 1}, {"row_sum", scalar_json(p.row_sum(i))}, {"b", scalar_json(p.b(i))}});
  if (!o.point_file.empty()) {
    const Assignment x = parse_assignment(read_file(o.point_file));
    detail::require_width(p, x);
    payload["point"] = vector_json(x);
    auto values = Json::array();
    for (std::size_t i = 0; i < p.rows(); ++i) values.push_back(scalar_json(row_value(p, i, x)));
    payload["row_values"] = std::move(values);
    const bool feasible = is_solution(p, x);
    payload["is_solution"] = feasible;
    if (feasible) payload["certificate"] = certificate_json(is_minimal(p, x));
  }
  return solvable ? kOk : kInfeasible;
}

int cmd_greatest(const Options& o, Json& payload) {
  payload["greatest"] = vector_json(greatest_solution(load_problem(o).problem));
  return kOk;
}

int cmd_minimal(const Options& o, Json& payload) {
  const Problem p = load_problem(o).problem;
  if (o.coordinate > 0) {
    const auto cand = single_coordinate_candidate(p, o.coordinate - 1);
    payload["coordinate"] = o.coordinate;
    payload["point"] = vector_json(cand.point);
    payload["certified"] = cand.certified;
    payload["minimal"] = is_minimal(p, cand.point).minimal;
    return kOk;
  }
  const Assignment from =
      o.from_file.empty() ? greatest_solution(p) : parse_assignment(read_file(o.from_file));
  payload["from"] = vector_json(from);
  if (o.all_perms) {
    const auto found = enumerate_minimals(p, from, o.limit, o.allow_large);
    payload["limit"] = o.limit;
    payload["count"] = found.size();
    payload["minimal_solutions"] = assignments_json(found);
    return kOk;
  }
  const Permutation perm = o.perm.empty() ? Permutation::identity(p.cols())
                                          : Permutation::from_one_based(parse_index_list(o.perm));
  const ReductionTrace trace = reduce_to_minimal_traced(p, from, perm);
  payload["perm"] = index_set_json(perm.order());
  payload["shortcut_candidate"] = vector_json(trace.shortcut_candidate);
  payload["shortcut_taken"] = trace.shortcut_taken;
  payload["steps"] = Json::array();
  for (const auto& s : trace.steps)
    payload["steps"].push_back({{"column", s.column + 1},
                                {"delta", scalar_json(s.delta.value())},
                                {"after", vector_json(s.after)}});
  payload["minimal"] = vector_json(trace.result);
  return kOk;
}

int cmd_unique_minimal(const Options& o, Json& payload) {
  const Problem p = load_problem(o).problem;
  const auto v = unique_minimal(p);
  payload["delta_vector"] = vector_json(delta_vector(p, Assignment::ones(p.cols())));
  payload["unique_minimal"] = v ? vector_json(*v) : Json(nullptr);
  return kOk;
}

int cmd_unique_solution(const Options& o, Json& payload) {
  payload["unique_solution"] = unique_solution_check(load_problem(o).problem);
  return kOk;
}

int cmd_minimax(const Options& o, Json& payload, std::string& message) {
  const Problem p = load_problem(o).problem;
  const MinimaxResult r = solve_minimax(p);
  payload["u_star"] = scalar_json(r.u_star.value());
  payload["optimal_value"] = scalar_json(r.optimal_value.value());
  payload["greatest_optimal"] = vector_json(r.greatest_optimal);
  payload["unique"] = r.unique;
  auto per_row = Json::array();
  for (const auto& row : r.per_row) per_row.push_back(scalar_json(row.u.value()));
  payload["per_row"] = std::move(per_row);
  if (o.trace) {
    auto traces = Json::array();
    for (const auto& row : r.per_row) traces.push_back(trace_json(row.trace));
    payload["traces"] = std::move(traces);
  }
  if (o.minimal_optimals)
    payload["minimal_optimal_solutions"] =
        assignments_json(minimal_optimal_solutions(p, o.limit, o.allow_large));
  if (o.verify) {
    const auto grid = grid_from(o);
    const UnitScalar g = oracle::grid_minimax_value(p, grid, oracle::ScanMode::Diagonal,
                                                    oracle::grid_cap_from_env());
    const bool guaranteed = mpz_divisible_p(grid.step().get_den().get_mpz_t(),
                                            r.u_star.value().get_den().get_mpz_t()) != 0;
    const bool agrees = guaranteed ? g == r.u_star : g >= r.u_star;
    payload["verification"] = {{"step", to_exact_string(grid.step())},
                               {"grid_value", scalar_json(g.value())},
                               {"equality_guaranteed", guaranteed},
                               {"agrees", agrees}};
    if (!agrees) {
      message = "verification failed: grid value disagrees with the solver";
      return kResourceError;
    }
  }
  return kOk;
}

int cmd_oracle(const Options& o, Json& payload) {
  const Problem p = load_problem(o).problem;
  const auto grid = grid_from(o);
  const auto cap = oracle::grid_cap_from_env();
  payload["mode"] = o.oracle_mode;
  payload["step"] = to_exact_string(grid.step());
  if (o.oracle_mode == "feasible") {
    auto stream = oracle::grid_feasible(p, grid, cap);
    auto points = Json::array();
    while (auto x = stream.next()) points.push_back(vector_json(*x));
    payload["count"] = points.size();
    payload["visited"] = stream.visited();
    payload["points"] = std::move(points);
    return kOk;
  }
  if (o.oracle_mode == "minimax") {
    const auto mode = o.full ? oracle::ScanMode::Full : oracle::ScanMode::Diagonal;
    payload["scan"] = o.full ? "full" : "diagonal";
    payload["grid_value"] = scalar_json(oracle::grid_minimax_value(p, grid, mode, cap).value());
    return kOk;
  }
  if (o.point_file.empty()) throw InputError("oracle falsify needs --point FILE");
  const Assignment x = parse_assignment(read_file(o.point_file));
  detail::require_width(p, x);
  payload["point"] = vector_json(x);
  const auto witness = oracle::falsify_minimality(p, x, grid, cap);
  payload["witness"] = witness ? vector_json(*witness) : Json(nullptr);
  return kOk;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact solver for addition-Lukasiewicz fuzzy relational inequalities", "fri"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--pretty", o.pretty, "human-readable output");

  auto* check = app.add_subcommand("check", "solvability; with --point, feasibility and minimality");
  check->add_option("problem", o.problem_file)->required();
  check->add_option("--point", o.point_file, "assignment file");

  auto* greatest = app.add_subcommand("greatest", "greatest solution");
  greatest->add_option("problem", o.problem_file)->required();

  auto* minimal = app.add_subcommand("minimal", "minimal solutions by coordinate reduction");
  minimal->add_option("problem", o.problem_file)->required();
  minimal->add_option("--from", o.from_file, "starting solution (default: all ones)");
  auto* perm_opt = minimal->add_option("--perm", o.perm, "1-based column order, e.g. 3,1,2");
  auto* all_opt = minimal->add_flag("--all-perms", o.all_perms, "sweep every permutation");
  minimal->add_option("--limit", o.limit, "max distinct results for --all-perms");
  minimal->add_flag("--allow-large", o.allow_large, "permit sweeps over more than 8 columns");
  auto* coord_opt = minimal->add_option("--coordinate", o.coordinate,
                                        "single-coordinate construction for column J (1-based)");
  perm_opt->excludes(all_opt);
  coord_opt->excludes(perm_opt)->excludes(all_opt);

  auto* umin = app.add_subcommand("unique-minimal", "unique minimal solution, if any");
  umin->add_option("problem", o.problem_file)->required();

  auto* usol = app.add_subcommand("unique-solution", "whether all-ones is the only solution");
  usol->add_option("problem", o.problem_file)->required();

  auto* minimax = app.add_subcommand("minimax", "minimize max_j x_j over the solution set");
  minimax->add_option("problem", o.problem_file)->required();
  minimax->add_flag("--trace", o.trace, "include per-row iteration traces");
  minimax->add_flag("--minimal-optimals", o.minimal_optimals, "list minimal optimal solutions");
  minimax->add_option("--limit", o.limit, "max distinct minimal optimal solutions");
  minimax->add_flag("--allow-large", o.allow_large, "permit sweeps over more than 8 columns");
  auto* verify = minimax->add_flag("--verify", o.verify, "cross-check u* on a grid");
  minimax->add_option("--step", o.step, "grid step 1/k")->needs(verify);

  auto* orc = app.add_subcommand("oracle", "brute-force grid references");
  orc->add_option("mode", o.oracle_mode)->required()->check(
      CLI::IsMember({"feasible", "minimax", "falsify"}));
  orc->add_option("problem", o.problem_file)->required();
  orc->add_option("--step", o.step, "grid step 1/k");
  orc->add_option("--extra", o.extra, "extra grid points, comma separated");
  orc->add_option("--point", o.point_file, "assignment file (falsify)");
  orc->add_flag("--full", o.full, "full n-dimensional scan (minimax)");

  Json doc;
  auto emit = [&](int code) {
    if (o.pretty) {
      print_pretty(doc, out);
    } else {
      out << doc.dump(2) << '\n';
    }
    return code;
  };

  try {
    const auto command = std::find_if(args.begin(), args.end(),
                                      [](const std::string& a) { return a.empty() || a[0] != '-'; });
    if (command != args.end() && !app.get_subcommand_no_throw(*command))
      throw CLI::ExtrasError("unknown command \"" + *command + "\"", CLI::ExitCodes::ExtrasError);
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    doc["status"] = "input-error";
    doc["message"] = e.what();
    return emit(kInputError);
  }

  const auto* sub = app.get_subcommands().front();
  doc["status"] = "ok";
  doc["command"] = sub->get_name();
  Json payload = Json::object();
  std::string message;
  int code = kOk;
  try {
    if (sub == check) code = cmd_check(o, payload);
    else if (sub == greatest) code = cmd_greatest(o, payload);
    else if (sub == minimal) code = cmd_minimal(o, payload);
    else if (sub == umin) code = cmd_unique_minimal(o, payload);
    else if (sub == usol) code = cmd_unique_solution(o, payload);
    else if (sub == minimax) code = cmd_minimax(o, payload, message);
    else code = cmd_oracle(o, payload);
  } catch (const InfeasibleError& e) {
    code = kInfeasible;
    message = e.what();
  } catch (const InputError& e) {
    code = kInputError;
    message = e.what();
  } catch (const ResourceError& e) {
    code = kResourceError;
    message = e.what();
  } catch (const InternalError& e) {
    code = kResourceError;
    message = std::string("internal: ") + e.what();
  }
  switch (code) {
    case kOk: doc["status"] = "ok"; break;
    case kInfeasible: doc["status"] = "infeasible"; break;
    case kInputError: doc["status"] = "input-error"; break;
    default: doc["status"] = "resource-error"; break;
  }
  if (!message.empty()) doc["message"] = message;
  if (!payload.empty()) doc["payload"] = std::move(payload);
  if (code != kOk && code != kInfeasible) err << "error: " << message << '\n';
  return emit(code);
}

}  // namespace fri::cli
