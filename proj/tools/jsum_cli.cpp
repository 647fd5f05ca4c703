// Command-line front end: norm computations on serialized sequence-space
// elements, subspace geometry queries, and scripted experiment runs.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jsum/jsum.hpp"

namespace {

using jsum::ordered_json;

struct CliConfig {
  std::string input_path;
  std::string output_path;
  std::string format = "json";
  std::optional<std::string> p_flag;
  std::uint64_t seed = 0;
  double tol = 1e-8;
  std::string experiment_name;
  int trials = 200;
  int max_len = 12;
  int r_max = 10;
  int threads = 1;
};

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw jsum::PreconditionError("cannot open input file: " + path);
  }
  ordered_json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw jsum::PreconditionError("input is not valid JSON: " +
                                  std::string(e.what()));
  }
  return j;
}

std::ostream& open_output(const CliConfig& cfg, std::ofstream& file) {
  if (cfg.output_path.empty() || cfg.output_path == "-") return std::cout;
  file.open(cfg.output_path);
  if (!file) {
    throw jsum::PreconditionError("cannot open output file: " +
                                  cfg.output_path);
  }
  return file;
}

jsum::PExponent parse_p_flag(const std::string& text) {
  if (text == "inf") return jsum::PExponent::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return jsum::PExponent(v);
  } catch (const jsum::PreconditionError&) {
    throw;
  } catch (const std::exception&) {
    throw jsum::PreconditionError("--p expects a number >= 1 or 'inf'");
  }
}

/// Applies the --p override to a serialized element.
jsum::JVector load_jvector(const CliConfig& cfg) {
  ordered_json j = read_json_file(cfg.input_path);
  if (cfg.p_flag) j["p"] = jsum::pexponent_to_json(parse_p_flag(*cfg.p_flag));
  return jsum::jvector_from_json(j);
}

ordered_json defaults_json(const CliConfig& cfg) {
  ordered_json d;
  d["tol"] = cfg.tol;
  d["dist_max_iter"] = jsum::DistOptions{}.max_iter;
  d["lowdisc_starts"] = jsum::SearchOptions{}.lowdisc_starts;
  d["random_starts"] = jsum::SearchOptions{}.random_starts;
  d["refine_iters"] = jsum::SearchOptions{}.refine_iters;
  d["seed"] = cfg.seed;
  d["threads"] = cfg.threads;
  return d;
}

void emit_scalar(const CliConfig& cfg, const std::string& op, double value) {
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "csv") {
    out << op << "\n" << jsum::format_double(value) << "\n";
    return;
  }
  if (cfg.format == "plain") {
    out << jsum::format_double(value) << "\n";
    return;
  }
  ordered_json j;
  j["op"] = op;
  j["value"] = value;
  j["defaults"] = defaults_json(cfg);
  out << j.dump() << "\n";
}

void emit_bounds(const CliConfig& cfg, const std::string& op,
                 const jsum::BoundPair& b, ordered_json extra) {
  std::ofstream file;
  std::ostream& out = open_output(cfg, file);
  if (cfg.format == "csv") {
    out << "index,lower,upper,certified_lower,certified_upper\n";
    out << "0," << jsum::format_double(b.lower) << ","
        << jsum::format_double(b.upper) << "," << (b.certified_lower ? 1 : 0)
        << "," << (b.certified_upper ? 1 : 0) << "\n";
    return;
  }
  ordered_json j;
  j["op"] = op;
  j["bounds"] = jsum::bound_pair_to_json(b);
  for (auto& [k, v] : extra.items()) j[k] = v;
  j["defaults"] = defaults_json(cfg);
  out << j.dump() << "\n";
}

jsum::SearchOptions search_options(const CliConfig& cfg) {
  jsum::SearchOptions opts;
  opts.seed = cfg.seed;
  opts.tol = cfg.tol;
  opts.dist.tol = cfg.tol;
  return opts;
}

int run_experiment(const CliConfig& cfg) {
  jsum::ExperimentReport rep;
  if (cfg.experiment_name == "lemma2") {
    jsum::PExponent p = cfg.p_flag ? parse_p_flag(*cfg.p_flag)
                                   : jsum::PExponent(1.5);
    rep = jsum::run_lemma2_bounds(p, cfg.trials, cfg.max_len, cfg.seed);
  } else if (cfg.experiment_name == "theorem7") {
    jsum::PExponent p =
        cfg.p_flag ? parse_p_flag(*cfg.p_flag) : jsum::PExponent(3.0);
    rep = jsum::run_theorem7_growth(p, cfg.r_max, cfg.seed);
  } else if (cfg.experiment_name == "coordinate_pairs") {
    jsum::PExponent p =
        cfg.p_flag ? parse_p_flag(*cfg.p_flag) : jsum::PExponent(1.5);
    rep = jsum::run_coordinate_pairs(p, cfg.max_len, search_options(cfg));
  } else if (cfg.experiment_name == "inclination_sweep") {
    if (cfg.input_path.empty()) {
      throw jsum::PreconditionError(
          "inclination_sweep needs --input with a family descriptor");
    }
    const ordered_json j = read_json_file(cfg.input_path);
    const jsum::SweepFamily family = jsum::sweep_family_from_json(j);
    std::vector<jsum::PExponent> ps;
    if (j.contains("p_list")) {
      for (const ordered_json& pj : j.at("p_list")) {
        ps.push_back(jsum::pexponent_from_json(pj));
      }
    } else if (cfg.p_flag) {
      ps.push_back(parse_p_flag(*cfg.p_flag));
    } else {
      ps.push_back(jsum::PExponent(2.0));
    }
    rep = jsum::run_inclination_sweep(family, ps, cfg.seed,
                                      search_options(cfg));
  } else {
    throw jsum::PreconditionError(
        "unknown experiment name: " + cfg.experiment_name +
        " (expected lemma2, theorem7, coordinate_pairs, inclination_sweep)");
  }

  ordered_json summary = jsum::report_summary_json(rep);
  summary["defaults"]["threads"] = cfg.threads;
  if (cfg.format == "json") {
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << summary.dump() << "\n";
  } else {
    // CSV rows on the chosen stream; the summary line goes to stdout.
    std::ofstream file;
    std::ostream& out = open_output(cfg, file);
    out << jsum::report_to_csv(rep);
    std::cout << summary.dump() << "\n";
  }
  return rep.verdict() ? 0 : 1;
}

int dispatch(const std::string& cmd, const CliConfig& cfg) {
  if (cmd == "jnorm") {
    emit_scalar(cfg, "jnorm", jsum::j_norm(load_jvector(cfg)));
  } else if (cmd == "knorm") {
    emit_scalar(cfg, "knorm", jsum::k_norm(load_jvector(cfg)));
  } else if (cmd == "omega") {
    emit_scalar(cfg, "omega", jsum::omega_seminorm(load_jvector(cfg)));
  } else if (cmd == "chain") {
    const ordered_json j = read_json_file(cfg.input_path);
    if (!j.contains("jvector") || !j.contains("chain")) {
      throw jsum::PreconditionError(
          "chain: expected {\"jvector\": {...}, \"chain\": [...]}");
    }
    ordered_json xv = j.at("jvector");
    if (cfg.p_flag) {
      xv["p"] = jsum::pexponent_to_json(parse_p_flag(*cfg.p_flag));
    }
    const jsum::JVector x = jsum::jvector_from_json(xv);
    const jsum::Chain c = jsum::chain_from_json(j.at("chain"));
    int horizon = static_cast<int>(x.support_end()) + 1;
    if (j.contains("horizon")) horizon = j.at("horizon").get<int>();
    horizon = std::max(horizon, c.indices().back());
    emit_scalar(cfg, "chain", jsum::chain_value(x, c, horizon));
  } else if (cmd == "inclination") {
    const ordered_json j = read_json_file(cfg.input_path);
    if (!j.contains("U") || !j.contains("V")) {
      throw jsum::PreconditionError(
          "inclination: expected {\"p\": ..., \"U\": {...}, \"V\": {...}}");
    }
    const jsum::PExponent p = cfg.p_flag
                                  ? parse_p_flag(*cfg.p_flag)
                                  : jsum::pexponent_from_json(j.at("p"));
    const jsum::Subspace U = jsum::subspace_from_json(j.at("U"));
    const jsum::Subspace V = jsum::subspace_from_json(j.at("V"));
    const jsum::InclinationResult r =
        jsum::inclination(U, V, p, search_options(cfg));
    ordered_json extra;
    extra["witness"] = r.witness.coords();
    emit_bounds(cfg, "inclination", r.bounds, extra);
  } else if (cmd == "extend") {
    const ordered_json j = read_json_file(cfg.input_path);
    if (!j.contains("inner") || !j.contains("outer")) {
      throw jsum::PreconditionError(
          "extend: expected {\"p\": ..., \"inner\": {...}, "
          "\"outer\": {...}}");
    }
    const jsum::PExponent p = cfg.p_flag
                                  ? parse_p_flag(*cfg.p_flag)
                                  : jsum::pexponent_from_json(j.at("p"));
    const jsum::SubspacePair pair(jsum::subspace_from_json(j.at("inner")),
                                  jsum::subspace_from_json(j.at("outer")), p);
    const jsum::ExtensionResult r =
        jsum::min_extension_norm(pair, search_options(cfg));
    ordered_json extra;
    ordered_json op = ordered_json::array();
    for (Eigen::Index row = 0; row < r.op.rows(); ++row) {
      ordered_json line = ordered_json::array();
      for (Eigen::Index col = 0; col < r.op.cols(); ++col) {
        line.push_back(r.op(row, col));
      }
      op.push_back(std::move(line));
    }
    extra["operator"] = std::move(op);
    emit_bounds(cfg, "extend", r.bounds, extra);
  } else if (cmd == "bm") {
    const ordered_json j = read_json_file(cfg.input_path);
    if (!j.contains("subspace")) {
      throw jsum::PreconditionError(
          "bm: expected {\"p\": ..., \"subspace\": {...}}");
    }
    const jsum::PExponent p = cfg.p_flag
                                  ? parse_p_flag(*cfg.p_flag)
                                  : jsum::pexponent_from_json(j.at("p"));
    const jsum::Subspace E = jsum::subspace_from_json(j.at("subspace"));
    emit_bounds(cfg, "bm",
                jsum::bm_distance_to_l2(E, p, search_options(cfg)), {});
  } else if (cmd == "experiment") {
    return run_experiment(cfg);
  } else {
    throw jsum::PreconditionError("unknown subcommand: " + cmd);
  }
  return 0;
}

int error_line(const std::string& code, const std::string& message,
               int exit_code) {
  ordered_json j;
  j["code"] = code;
  j["message"] = message;
  std::cerr << j.dump() << "\n";
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite-truncation laboratory for chain-sup sequence norms and l_p "
      "subspace geometry"};
  app.require_subcommand(1);

  CliConfig cfg;
  if (const char* env = std::getenv("JSUM_THREADS")) {
    try {
      cfg.threads = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      return error_line("precondition", "JSUM_THREADS must be an integer", 1);
    }
  }

  const std::vector<std::string> with_input = {"jnorm", "knorm",  "omega",
                                               "chain", "inclination",
                                               "extend", "bm"};
  std::vector<CLI::App*> subs;
  for (const std::string& name : with_input) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--input", cfg.input_path)->required();
    subs.push_back(sub);
  }
  CLI::App* exp = app.add_subcommand("experiment");
  exp->add_option("--name", cfg.experiment_name)->required();
  exp->add_option("--input", cfg.input_path);
  exp->add_option("--trials", cfg.trials);
  exp->add_option("--max-len", cfg.max_len);
  exp->add_option("--r-max", cfg.r_max);
  subs.push_back(exp);

  for (CLI::App* sub : subs) {
    sub->add_option("--p", [&cfg](const std::vector<std::string>& v) {
      cfg.p_flag = v.front();
      return true;
    }, "l_p exponent (number >= 1 or 'inf')");
    sub->add_option("--seed", cfg.seed);
    sub->add_option("--tol", cfg.tol);
    sub->add_option("--output", cfg.output_path);
    sub->add_option("--format", cfg.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::stringstream ss;
    ss << e.what();
    return error_line("precondition", ss.str(), 1);
  }

  try {
    if (!(cfg.tol > 0.0)) {
      throw jsum::PreconditionError("--tol must be > 0");
    }
    return dispatch(app.get_subcommands().front()->get_name(), cfg);
  } catch (const jsum::InternalConsistencyError& e) {
    return error_line("internal", e.what(), 2);
  } catch (const jsum::UnconvergedError& e) {
    return error_line("unconverged",
                      std::string(e.what()) + " (best value " +
                          jsum::format_double(e.best_value()) + ")",
                      1);
  } catch (const jsum::PreconditionError& e) {
    return error_line("precondition", e.what(), 1);
  } catch (const std::exception& e) {
    return error_line("precondition", e.what(), 1);
  }
}
