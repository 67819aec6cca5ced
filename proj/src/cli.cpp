#include "ringstore/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "ringstore/construct.hpp"
#include "ringstore/errors.hpp"
#include "ringstore/prng.hpp"
#include "ringstore/protocol.hpp"
#include "ringstore/scheme.hpp"
#include "ringstore/scheme_file.hpp"
#include "ringstore/simnet.hpp"

namespace ringstore {

namespace {

using nlohmann::json;

std::string join(std::span<const Elem> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string link_label(const LinkEnd& from, const LinkEnd& to) {
  return from.label() + "->" + to.label();
}

std::uint64_t parse_u64(std::string_view token, std::string_view what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::BadArguments,
                "bad " + std::string(what) + " '" + std::string(token) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = s.find(sep, start);
    out.push_back(s.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

RowVector data_from_csv(const Scheme& s, std::string_view csv) {
  RowVector x;
  for (auto token : split(csv, ',')) {
    const auto v = parse_u64(token, "data value");
    if (!s.field().contains(v)) {
      throw Error(ErrorCode::OutOfField,
                  "data value " + std::to_string(v) + " not in GF(" +
                      std::to_string(s.field().p()) + ")");
    }
    x.push_back(static_cast<Elem>(v));
  }
  if (x.size() != s.m()) {
    throw Error(ErrorCode::DimensionMismatch,
                "expected " + std::to_string(s.m()) + " data values, got " +
                    std::to_string(x.size()));
  }
  return x;
}

RowVector data_from_seed(const Scheme& s, std::uint64_t seed) {
  Lcg64 rng(seed);
  RowVector x(s.m());
  for (auto& v : x) v = rng.next_mod(s.field().p());
  return x;
}

json hops_json(const std::vector<LinkTransfer>& hops) {
  json out = json::array();
  for (const auto& hop : hops) {
    json vectors = json::array();
    for (std::size_t c = 0; c < hop.payload.cols(); ++c) {
      vectors.push_back(hop.payload.column(c));
    }
    out.push_back({{"from", hop.from.label()},
                   {"to", hop.to.label()},
                   {"size", hop.size()},
                   {"vectors", vectors}});
  }
  return out;
}

void print_hops(std::ostream& out, const std::vector<LinkTransfer>& hops) {
  for (const auto& hop : hops) {
    out << "  " << link_label(hop.from, hop.to) << "  " << hop.size()
        << " symbols\n";
    for (std::size_t c = 0; c < hop.payload.cols(); ++c) {
      out << "    [" << join(hop.payload.column(c)) << "]\n";
    }
  }
}

std::string params_line(const Scheme& s) {
  return "n=" + std::to_string(s.n()) + " alpha=" + std::to_string(s.alpha()) +
         " M=" + std::to_string(s.m()) + " q=" + std::to_string(s.field().p()) +
         " k=" + std::to_string(s.k()) + " gamma=" + std::to_string(s.gamma());
}

std::string list_or_none(const std::vector<std::size_t>& v) {
  if (v.empty()) return "none";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += "N" + std::to_string(v[i]);
  }
  return out;
}

struct BuildArgs {
  std::string construction;
  std::size_t n = 0, alpha = 0, m = 0;
  std::optional<std::uint32_t> q;
  std::uint64_t seed = 0;
  std::string output;
};

int cmd_build(const BuildArgs& a, std::ostream& out) {
  if (a.n == 0 || a.alpha == 0 || a.m == 0) {
    throw Error(ErrorCode::BadArguments, "n, alpha and M must be positive");
  }
  const std::size_t cols = a.n * a.alpha;
  std::optional<Matrix> g;
  if (a.construction == "ed") {
    g = build_ed_matrix(a.m, cols);
  } else if (a.construction == "mds-cauchy") {
    const FieldSpec field(a.q.value_or(
        smallest_prime_at_least(static_cast<std::uint32_t>(cols))));
    g = build_cauchy_mds(a.m, cols, field);
  } else {
    std::uint32_t q = 0;
    if (a.q) {
      q = *a.q;
    } else {
      const std::uint64_t need = binomial(cols - 1, a.m - 1) + 1;
      if (need > UINT32_MAX) {
        throw Error(ErrorCode::FieldTooSmall, "required field size overflows");
      }
      q = smallest_prime_at_least(static_cast<std::uint32_t>(need));
    }
    g = greedy_mds_columns(a.m, cols, FieldSpec(q), a.seed);
  }
  const Scheme s = make_scheme(*g, a.n, a.alpha);
  write_scheme_file(a.output, s);
  out << "wrote " << a.output << ": construction=" << a.construction << " "
      << params_line(s) << "\n";
  return 0;
}

int cmd_validate(const std::string& file, bool as_json, std::ostream& out,
                 std::ostream& err) {
  const Scheme s = read_scheme_file(file);
  const auto report = validate_ordss(s);
  if (as_json) {
    out << json{{"n", s.n()},
                {"alpha", s.alpha()},
                {"M", s.m()},
                {"q", s.field().p()},
                {"k", s.k()},
                {"gamma", s.gamma()},
                {"is_ordss", report.is_ordss},
                {"failed_window_condition_i", report.failed_window_condition_i},
                {"failed_window_condition_ii", report.failed_window_condition_ii}}
               .dump(2)
        << "\n";
  } else {
    out << params_line(s) << "\n"
        << "ORDSS: " << (report.is_ordss ? "yes" : "no") << "\n"
        << "condition (i) failing windows: "
        << list_or_none(report.failed_window_condition_i) << "\n"
        << "condition (ii) failing windows: "
        << list_or_none(report.failed_window_condition_ii) << "\n";
  }
  if (!report.is_ordss) {
    err << "error: NotOrdss: window conditions fail\n";
    return 1;
  }
  return 0;
}

int cmd_bounds(std::size_t n, std::size_t alpha, std::size_t m, bool as_json,
               std::ostream& out) {
  const auto rec = reconstruct_lower_bound(n, alpha, m);
  const auto cuts = cut_constraints(n, alpha, m);
  if (as_json) {
    json table = json::array();
    for (const auto& c : cuts) {
      table.push_back({{"from", c.from.label()},
                       {"to", c.to.label()},
                       {"min_symbols", c.min_symbols}});
    }
    out << json{{"n", n},
                {"alpha", alpha},
                {"M", m},
                {"k", cuts.size()},
                {"reconstruct_lower_bound", rec},
                {"repair_lower_bound", m},
                {"cut_constraints", table}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "n=" << n << " alpha=" << alpha << " M=" << m << " k=" << cuts.size()
      << "\n"
      << "reconstruct_lower_bound: " << rec << "\n"
      << "repair_lower_bound: " << m << "\n"
      << "cut constraints (user at N1):\n";
  for (const auto& c : cuts) {
    out << "  " << link_label(c.from, c.to) << "  >= " << c.min_symbols << "\n";
  }
  return 0;
}

int cmd_reconstruct(const std::string& file, std::size_t user,
                    const std::optional<std::string>& data, std::uint64_t seed,
                    bool as_json, std::ostream& out) {
  const Scheme s = read_scheme_file(file);
  const RowVector x = data ? data_from_csv(s, *data) : data_from_seed(s, seed);
  const auto st = encode(s, x);
  const auto plan = plan_reconstruction(s, user);
  const auto result = execute_reconstruction(s, st, plan);
  const auto bound = reconstruct_lower_bound(s.n(), s.alpha(), s.m());
  if (as_json) {
    out << json{{"user", user},
                {"hops", hops_json(plan.hops)},
                {"basis_columns", plan.basis_columns},
                {"bandwidth", result.bandwidth_used},
                {"lower_bound", bound},
                {"data", x},
                {"recovered", result.data},
                {"exact", result.data == x}}
               .dump(2)
        << "\n";
  } else {
    out << params_line(s) << "\n"
        << "user: U" << user << "\n"
        << "plan:\n";
    print_hops(out, plan.hops);
    out << "bandwidth: " << result.bandwidth_used << " (lower bound " << bound
        << ")\n"
        << "data:      " << join(x) << "\n"
        << "recovered: " << join(result.data) << "\n";
  }
  if (result.data != x) {
    throw Error(ErrorCode::InvariantViolation, "recovered data differs");
  }
  return 0;
}

int cmd_repair(const std::string& file, std::size_t node, std::uint64_t seed,
               bool as_json, std::ostream& out) {
  const Scheme s = read_scheme_file(file);
  const auto st = encode(s, data_from_seed(s, seed));
  const auto plan = plan_repair(s, node);
  const auto result = execute_repair(s, st, plan);
  const auto& original = st.symbols[node - 1];
  if (as_json) {
    out << json{{"node", node},
                {"hops", hops_json(plan.hops)},
                {"bandwidth", result.bandwidth_used},
                {"lower_bound", repair_lower_bound(s)},
                {"original", original},
                {"repaired", result.symbols},
                {"exact", result.symbols == original}}
               .dump(2)
        << "\n";
  } else {
    out << params_line(s) << "\n"
        << "failed node: N" << node << "\n"
        << "plan:\n";
    print_hops(out, plan.hops);
    out << "bandwidth: " << result.bandwidth_used << " (lower bound "
        << repair_lower_bound(s) << ")\n"
        << "original: " << join(original) << "\n"
        << "repaired: " << join(result.symbols) << "\n";
  }
  if (result.symbols != original) {
    throw Error(ErrorCode::InvariantViolation, "repaired symbols differ");
  }
  return 0;
}

int cmd_simulate(const std::string& file, std::uint64_t seed,
                 const std::string& script, bool as_json, std::ostream& out) {
  RingSim sim(read_scheme_file(file), seed);
  for (auto op : split(script, ',')) {
    const auto colon = op.find(':');
    const auto verb = op.substr(0, colon);
    if (verb == "repair" && colon == std::string_view::npos) {
      sim.repair();
      continue;
    }
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::BadArguments, "bad script op '" + std::string(op) + "'");
    }
    const auto index = static_cast<std::size_t>(parse_u64(op.substr(colon + 1), "index"));
    if (verb == "read") {
      sim.user_read(index);
    } else if (verb == "fail") {
      sim.fail_and_repair(index);
    } else if (verb == "crash") {
      sim.fail(index);
    } else {
      throw Error(ErrorCode::BadArguments, "unknown script op '" + std::string(verb) + "'");
    }
  }
  const auto stats = sim.stats();
  if (as_json) {
    json events = json::array();
    for (const auto& ev : sim.event_log()) {
      events.push_back({{"kind", to_string(ev.kind)},
                        {"index", ev.node_or_user},
                        {"bandwidth", ev.bandwidth},
                        {"success", ev.success}});
    }
    json links = json::object();
    for (const auto& [link, count] : stats.per_link) {
      links[link_label(link.from, link.to)] = count;
    }
    json kinds = json::object();
    for (const auto& [kind, total] : stats.per_kind) kinds[std::string(to_string(kind))] = total;
    out << json{{"seed", seed},
                {"data", sim.original_x()},
                {"events", events},
                {"per_link", links},
                {"per_kind", kinds},
                {"event_count", stats.event_count}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << params_line(sim.scheme()) << "\n"
      << "data: " << join(sim.original_x()) << "\n"
      << "events:\n";
  for (const auto& ev : sim.event_log()) {
    out << "  " << to_string(ev.kind) << " " << ev.node_or_user
        << " bandwidth=" << ev.bandwidth << (ev.success ? " ok" : " failed") << "\n";
  }
  out << "per-link totals:\n";
  for (const auto& [link, count] : stats.per_link) {
    out << "  " << link_label(link.from, link.to) << ": " << count << "\n";
  }
  out << "per-kind totals:\n";
  for (const auto& [kind, total] : stats.per_kind) {
    out << "  " << to_string(kind) << ": " << total << "\n";
  }
  out << "event count: " << stats.event_count << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Storage schemes over unidirectional ring networks", "ringstore"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "Construct a scheme file");
  build_cmd->add_option("--construction", build.construction)
      ->required()
      ->check(CLI::IsMember({"ed", "mds-cauchy", "mds-greedy"}));
  build_cmd->add_option("-n", build.n, "Number of nodes")->required();
  build_cmd->add_option("-a,--alpha", build.alpha, "Symbols per node")->required();
  build_cmd->add_option("-M", build.m, "Data size in symbols")->required();
  build_cmd->add_option("--q", build.q, "Prime field size (ignored for ed)");
  build_cmd->add_option("--seed", build.seed, "Seed for mds-greedy");
  build_cmd->add_option("-o,--output", build.output, "Output file")->required();

  std::string file;
  bool as_json = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check the window conditions");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_flag("--json", as_json);

  std::size_t bn = 0, balpha = 0, bm = 0;
  auto* bounds_cmd = app.add_subcommand("bounds", "Print bandwidth lower bounds");
  bounds_cmd->add_option("-n", bn)->required();
  bounds_cmd->add_option("-a,--alpha", balpha)->required();
  bounds_cmd->add_option("-M", bm)->required();
  bounds_cmd->add_flag("--json", as_json);

  std::size_t index = 0;
  std::optional<std::string> data;
  std::uint64_t seed = 0;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Plan and run a user read");
  rec_cmd->add_option("file", file)->required();
  rec_cmd->add_option("--user", index)->required();
  auto* data_opt = rec_cmd->add_option("--data", data, "Comma-separated data");
  rec_cmd->add_option("--seed", seed)->excludes(data_opt);
  rec_cmd->add_flag("--json", as_json);

  auto* rep_cmd = app.add_subcommand("repair", "Plan and run an exact repair");
  rep_cmd->add_option("file", file)->required();
  rep_cmd->add_option("--node", index)->required();
  rep_cmd->add_option("--seed", seed);
  rep_cmd->add_flag("--json", as_json);

  std::string script;
  auto* sim_cmd = app.add_subcommand("simulate", "Run an operation script");
  sim_cmd->add_option("file", file)->required();
  sim_cmd->add_option("--seed", seed)->required();
  sim_cmd->add_option("--script", script)->required();
  sim_cmd->add_flag("--json", as_json);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: UsageError: " << msg << "\n";
    return 2;
  }

  try {
    if (*build_cmd) return cmd_build(build, out);
    if (*validate_cmd) return cmd_validate(file, as_json, out, err);
    if (*bounds_cmd) return cmd_bounds(bn, balpha, bm, as_json, out);
    if (*rec_cmd) return cmd_reconstruct(file, index, data, seed, as_json, out);
    if (*rep_cmd) return cmd_repair(file, index, seed, as_json, out);
    if (*sim_cmd) return cmd_simulate(file, seed, script, as_json, out);
  } catch (const Error& e) {
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "error: " << to_string(e.code()) << ": " << msg << "\n";
    return 1;
  }
  return 2;
}

}  // namespace ringstore
