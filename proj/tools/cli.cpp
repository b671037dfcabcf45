#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "bench.hpp"
#include "oblivis/bytes.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/harness/session.hpp"
#include "verify.hpp"

namespace oblivis::tools {

namespace {

struct CommonFlags {
  std::uint64_t seed = 0;
  std::string profile = "test";
  std::optional<std::size_t> sigma;
  std::optional<std::size_t> lambda;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--seed", flags.seed, "Master seed (OBLIVIS_SEED overrides)");
  cmd->add_option("--profile", flags.profile, "Parameter profile")->check(CLI::IsMember({"test", "production"}));
  cmd->add_option("--sigma", flags.sigma, "Message length in bits");
  cmd->add_option("--lambda", flags.lambda, "Tag length in bits");
}

/// Applies OBLIVIS_SEED and the size overrides. Throws PreconditionError.
SessionConfig resolve(CommonFlags& flags) {
  if (const char* env = std::getenv("OBLIVIS_SEED"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    errno = 0;
    const unsigned long long v = std::strtoull(env, &end, 0);
    if (errno != 0 || end == env || *end != '\0') {
      throw PreconditionError(std::string("OBLIVIS_SEED is not an unsigned integer: ") + env);
    }
    flags.seed = v;
  }
  SessionConfig config = SessionConfig::profile(flags.profile);
  if (flags.sigma) config.sigma_bits = *flags.sigma;
  if (flags.lambda) config.lambda_bits = *flags.lambda;
  config.validate();
  return config;
}

/// Readable demo payload that fits the configured message length.
Bytes demo_payload(const SessionConfig& config, std::size_t record, int bit) {
  std::string text = "record " + std::to_string(record) + " message " + std::to_string(bit);
  text.resize(std::min(text.size(), config.max_payload_bytes()));
  return to_bytes(text);
}

std::string printable(const Bytes& b) {
  std::string out;
  for (std::uint8_t c : b) {
    if (c < 0x20 || c > 0x7e) return to_hex(b);
    out.push_back(static_cast<char>(c));
  }
  return out;
}

/// Accepts the "-ot" spelling used in some docs, e.g. "dq-ot".
std::string normalize_protocol(std::string name) {
  if (name.size() > 3 && name.ends_with("-ot")) name.resize(name.size() - 3);
  return name;
}

harness::SchedulerKind scheduler_from(const std::string& name) {
  if (name == "threaded") return harness::SchedulerKind::threaded;
  if (name == "socket") return harness::SchedulerKind::socket;
  return harness::SchedulerKind::sequential;
}

struct DemoFlags {
  std::string protocol = "supersonic";
  std::size_t s = 0;
  std::size_t v = 0;
  std::size_t z = 2;
  std::string scheduler = "sequential";
  std::string log;
};

int run_demo(DemoFlags& d, CommonFlags& c, std::ostream& out) {
  using namespace harness;
  const SessionConfig config = resolve(c);
  const Protocol protocol = protocol_from_name(normalize_protocol(d.protocol));
  const bool indexed = protocol == Protocol::one_of_n || protocol == Protocol::compiled;
  const bool multi = indexed || protocol == Protocol::dqmr || protocol == Protocol::duqmr ||
                     protocol == Protocol::strawman_broadcast || protocol == Protocol::strawman_index;
  const std::size_t z = multi ? d.z : 1;
  if (z == 0) throw PreconditionError("--z must be positive");
  std::size_t v = d.v;
  std::size_t s = d.s;
  if (indexed) {
    if (s >= 2 * z) throw PreconditionError("--s must be below 2z for indexed protocols");
    v = s / 2;
    s %= 2;
  } else {
    if (s > 1) throw PreconditionError("--s must be 0 or 1");
    if (!multi) v = 0;
    if (v >= z) throw PreconditionError("--v must be below --z");
  }

  std::vector<std::pair<Bytes, Bytes>> matrix;
  for (std::size_t t = 0; t < z; ++t) {
    matrix.emplace_back(demo_payload(config, t, 0), demo_payload(config, t, 1));
  }
  SessionOptions options;
  options.config = config;
  options.seed = seed_bytes(c.seed);
  options.scheduler = scheduler_from(d.scheduler);
  const SessionResult result = run_session(protocol, inputs::for_protocol(protocol, matrix, v, s), options);

  const Bytes& got = result.message_output(Role::R);
  const Bytes& want = s == 0 ? matrix[v].first : matrix[v].second;
  out << "protocol: " << protocol_name(protocol) << "\n";
  out << "session: " << to_hex(Bytes(result.session.begin(), result.session.end())) << "\n";
  out << "envelopes: " << result.log.size() << "\n";
  for (const auto& e : result.log.entries()) {
    out << "  [" << e.stamp() << "] " << role_name(e.from) << " -> " << role_name(e.to) << " "
        << kind_name(e.kind) << " (" << e.payload.size() << " bytes)\n";
  }
  out << "bytes to R: " << bytes_to_role(result.log, Role::R) << "\n";
  for (const auto& [role, output] : result.outputs) {
    if (role == Role::R) continue;
    if (const auto* count = std::get_if<std::size_t>(&output)) {
      out << role_name(role) << " output: " << *count << "\n";
    }
  }
  out << "R output: " << printable(got) << "\n";
  if (!d.log.empty()) {
    std::ofstream f(d.log);
    if (!f) throw Error("cannot write " + d.log);
    f << result.log.export_ndjson();
  }
  const bool ok = got == want;
  out << (ok ? "ok" : "MISMATCH") << "\n";
  return ok ? kExitOk : kExitFailure;
}

struct BenchFlags {
  std::string protocol = "all";
  std::size_t n = 1;
  std::size_t reps = 50;
  std::size_t warmup = 10;
  std::size_t z = 2;
  std::size_t threads = 1;
  std::string csv;
};

int run_bench_cmd(BenchFlags& b, CommonFlags& c, std::ostream& out) {
  const SessionConfig config = resolve(c);
  std::vector<std::string> protocols;
  b.protocol = normalize_protocol(b.protocol);
  if (b.protocol == "all") {
    for (auto p : bench_protocols()) protocols.emplace_back(p);
  } else {
    if (std::find(bench_protocols().begin(), bench_protocols().end(), b.protocol) == bench_protocols().end()) {
      throw PreconditionError("unknown bench protocol '" + b.protocol + "'");
    }
    protocols.push_back(b.protocol);
  }
  std::vector<std::string> rows;
  for (const auto& p : protocols) {
    BenchOptions options;
    options.protocol = p;
    options.n = b.n;
    options.reps = b.reps;
    options.warmup = b.warmup;
    options.seed = c.seed;
    options.config = config;
    options.z = b.z;
    options.threads = b.threads;
    rows.push_back(csv_row(run_bench(options)));
  }
  out << "# " << environment_description() << "\n";
  out << csv_header() << "\n";
  for (const auto& r : rows) out << r << "\n";
  if (!b.csv.empty()) {
    std::ofstream f(b.csv);
    if (!f) throw Error("cannot write " + b.csv);
    f << csv_header() << "\n";
    for (const auto& r : rows) f << r << "\n";
  }
  return kExitOk;
}

struct VerifyFlags {
  std::string suite = "all";
  bool mutate = false;
};

int run_verify_cmd(VerifyFlags& v, CommonFlags& c, std::ostream& out) {
  VerifyOptions options;
  options.config = resolve(c);
  options.seed = c.seed;
  options.suite = v.suite;
  options.mutate_dq_sign = v.mutate;
  const auto results = run_verify(options);
  std::size_t failed = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.suite << "/" << r.name;
    if (!r.passed) out << ": " << r.detail;
    out << "\n";
    failed += r.passed ? 0 : 1;
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oblivious transfer demos, benchmarks and self-checks", "oblivis"};
  app.require_subcommand(1);

  CommonFlags demo_common;
  DemoFlags demo;
  auto* demo_cmd = app.add_subcommand("demo", "Run one session and print what R received");
  demo_cmd->add_option("--protocol,protocol", demo.protocol, "Protocol name");
  demo_cmd->add_option("--s", demo.s, "Choice bit, or lane for one-of-n and compiled");
  demo_cmd->add_option("--v", demo.v, "Record index for multi-record protocols");
  demo_cmd->add_option("--z", demo.z, "Record count for multi-record protocols");
  demo_cmd->add_option("--scheduler", demo.scheduler, "Party scheduler")
      ->check(CLI::IsMember({"sequential", "threaded", "socket"}));
  demo_cmd->add_option("--log", demo.log, "Write the routing log as NDJSON");
  add_common(demo_cmd, demo_common);

  CommonFlags bench_common;
  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time protocol phases and print CSV");
  bench_cmd->add_option("--protocol,protocol", bench.protocol, "Protocol name or 'all'");
  bench_cmd->add_option("--n", bench.n, "Invocations per batch")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--warmup", bench.warmup, "Untimed warm-up invocations");
  bench_cmd->add_option("--z", bench.z, "Records, or lanes for the compiled suite")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--threads", bench.threads, "Worker threads (exploration only)")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--csv", bench.csv, "Also write the CSV to this file");
  add_common(bench_cmd, bench_common);

  CommonFlags verify_common;
  VerifyFlags verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run self-checks");
  std::vector<std::string> suites;
  for (auto s : verify_suites()) suites.emplace_back(s);
  verify_cmd->add_option("--suite,suite", verify.suite, "Suite name")->check(CLI::IsMember(suites));
  verify_cmd->add_flag("--mutate-dq-sign", verify.mutate, "Use the wrong sign in DQ retrieval");
  add_common(verify_cmd, verify_common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (demo_cmd->parsed()) return run_demo(demo, demo_common, out);
    if (bench_cmd->parsed()) return run_bench_cmd(bench, bench_common, out);
    return run_verify_cmd(verify, verify_common, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace oblivis::tools
