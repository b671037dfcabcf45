#include "bench.hpp"

#include <sys/utsname.h>

#include <algorithm>
#include <chrono>
#include <exception>
#include <cstdio>
#include <functional>
#include <memory>
#include <optional>
#include <thread>
#include <vector>

#include "oblivis/compiler.hpp"
#include "oblivis/dq_ot.hpp"
#include "oblivis/duq_ot.hpp"
#include "oblivis/errors.hpp"
#include "oblivis/mr_ot.hpp"
#include "oblivis/np_ot.hpp"
#include "oblivis/supersonic.hpp"

namespace oblivis::tools {

namespace {

using Clock = std::chrono::steady_clock;

/// One batch of n invocations split into phases. `check` runs untimed
/// afterwards and throws if any invocation returned the wrong message.
struct Batch {
  std::vector<std::function<void()>> phases;
  std::function<void()> check;
};

using BatchFactory = std::function<Batch(std::size_t n, Rng& rng)>;

struct Workload {
  std::vector<Message> m0;
  std::vector<Message> m1;
  std::vector<bool> s;
  std::vector<Bytes> expected;
  std::vector<Bytes> got;
};

std::shared_ptr<Workload> make_workload(std::size_t n, const SessionConfig& config, Rng& rng) {
  auto w = std::make_shared<Workload>();
  const std::size_t len = config.max_payload_bytes();
  for (std::size_t i = 0; i < n; ++i) {
    const Bytes a = rng.bytes(len);
    const Bytes b = rng.bytes(len);
    const bool s = rng.bit();
    w->m0.push_back(Message::pad(a, config));
    w->m1.push_back(Message::pad(b, config));
    w->s.push_back(s);
    w->expected.push_back(s ? b : a);
  }
  w->got.resize(n);
  return w;
}

std::function<void()> checker(std::shared_ptr<Workload> w) {
  return [w] {
    if (w->got != w->expected) throw Error("benchmark invocation returned a wrong message");
  };
}

MessageMatrix make_matrix(std::size_t z, const SessionConfig& config, Rng& rng) {
  MessageMatrix out;
  for (std::size_t t = 0; t < z; ++t) {
    out.emplace_back(Message::pad(rng.bytes(config.max_payload_bytes()), config),
                     Message::pad(rng.bytes(config.max_payload_bytes()), config));
  }
  return out;
}

BatchFactory supersonic_factory(const SessionConfig& config) {
  return [config](std::size_t n, Rng& rng) {
    auto w = make_workload(n, config, rng);
    struct State {
      std::vector<PadKeys> keys;
      std::vector<BitShares> shares;
      std::vector<SwappedPair> pairs;
      std::vector<Bytes> finals;
    };
    auto st = std::make_shared<State>();
    auto r = std::make_shared<Rng>(rng.derive("invocations"));
    Batch b;
    b.phases = {
        [=] {
          st->keys.reserve(n);
          for (std::size_t i = 0; i < n; ++i) st->keys.push_back(ss_setup(config, *r));
        },
        [=] {
          st->shares.reserve(n);
          for (std::size_t i = 0; i < n; ++i) st->shares.push_back(ss_gen_query(w->s[i], *r));
        },
        [=] {
          st->pairs.reserve(n);
          for (std::size_t i = 0; i < n; ++i) {
            st->pairs.push_back(ss_gen_res(w->m0[i], w->m1[i], st->keys[i], st->shares[i].s1));
          }
        },
        [=] {
          st->finals.reserve(n);
          for (std::size_t i = 0; i < n; ++i) {
            st->finals.push_back(ss_obl_filter(st->pairs[i], st->shares[i].s2));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) w->got[i] = ss_retrieve(st->finals[i], st->keys[i], w->s[i]);
        },
    };
    b.check = checker(w);
    return b;
  };
}

BatchFactory np_factory(const SessionConfig& config) {
  return [config](std::size_t n, Rng& rng) {
    auto w = make_workload(n, config, rng);
    struct State {
      GroupParams pk;
      std::vector<NpQueryResult> queries;
      std::vector<ResponsePair> res;
    };
    auto st = std::make_shared<State>();
    auto r = std::make_shared<Rng>(rng.derive("invocations"));
    Batch b;
    b.phases = {
        [=] { st->pk = np_init(config, *r); },
        [=] {
          for (std::size_t i = 0; i < n; ++i) st->queries.push_back(np_gen_query(st->pk, w->s[i], *r));
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            st->res.push_back(np_gen_res(w->m0[i], w->m1[i], st->pk, st->queries[i].query, *r));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) w->got[i] = np_retrieve(st->res[i], st->queries[i].secret, st->pk);
        },
    };
    b.check = checker(w);
    return b;
  };
}

BatchFactory dq_factory(const SessionConfig& config, GroupParams pk, std::size_t z, bool multi) {
  return [config, pk, z, multi](std::size_t n, Rng& rng) {
    auto w = make_workload(n, config, rng);
    struct State {
      MessageMatrix matrix;
      std::vector<std::size_t> v;
      std::vector<DqRequest> req;
      std::vector<PartialQuery> q2;
      std::vector<FinalQuery> q1;
      std::vector<ResponsePair> res;
    };
    auto st = std::make_shared<State>();
    if (multi) {
      st->matrix = make_matrix(z, config, rng);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = rng.uniform_below(z).get_ui();
        st->v.push_back(v);
        w->m0[i] = st->matrix[v].first;
        w->m1[i] = st->matrix[v].second;
        w->expected[i] = (w->s[i] ? w->m1[i] : w->m0[i]).unpad();
      }
    }
    auto r = std::make_shared<Rng>(rng.derive("invocations"));
    Batch b;
    b.phases = {
        [=] {
          for (std::size_t i = 0; i < n; ++i) st->req.push_back(dq_request(pk, w->s[i], *r));
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) st->q2.push_back(dq_p2_gen_query(st->req[i].to_p2, pk));
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            st->q1.push_back(dq_p1_gen_query(st->req[i].to_p1, st->q2[i], pk));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            if (multi) {
              const auto all = dqmr_gen_res(st->matrix, pk, st->q1[i], *r);
              st->res.push_back(dqmr_obl_filter(all, st->v[i]));
            } else {
              st->res.push_back(dq_gen_res(w->m0[i], w->m1[i], pk, st->q1[i], *r));
            }
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            w->got[i] = multi ? dqmr_retrieve(st->res[i], st->req[i].state, pk)
                              : dq_retrieve(st->res[i], st->req[i].state, pk);
          }
        },
    };
    b.check = checker(w);
    return b;
  };
}

BatchFactory duq_factory(const SessionConfig& config, GroupParams pk, std::size_t z, bool multi) {
  return [config, pk, z, multi](std::size_t n, Rng& rng) {
    auto w = make_workload(n, config, rng);
    struct State {
      MessageMatrix matrix;
      std::vector<std::size_t> v;
      std::optional<AheKeyPair> keys;
      std::vector<std::vector<AheCiphertext>> onehot;
      std::vector<DuqBlinds> blinds;
      std::vector<IssuerRequest> issued;
      std::vector<PartialQuery> q2;
      std::vector<FinalQuery> q1;
      std::vector<TaggedResponsePair> res;
      std::vector<FilteredResponse> filtered;
    };
    auto st = std::make_shared<State>();
    if (multi) {
      st->matrix = make_matrix(z, config, rng);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = rng.uniform_below(z).get_ui();
        st->v.push_back(v);
        w->expected[i] = (w->s[i] ? st->matrix[v].second : st->matrix[v].first).unpad();
      }
    }
    auto r = std::make_shared<Rng>(rng.derive("invocations"));
    Batch b;
    b.phases = {
        [=] {
          if (multi) st->keys = duqmr_r_setup(config, *r);
          for (std::size_t i = 0; i < n; ++i) {
            if (multi) st->onehot.push_back(duqmr_t_setup(st->keys->pk, z, st->v[i], *r));
            st->blinds.push_back(duq_r_request(pk, *r));
            st->issued.push_back(duq_t_request(config, w->s[i], *r));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            st->q2.push_back(duq_p2_gen_query(st->blinds[i].r2, st->issued[i].share_p2, pk));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            st->q1.push_back(duq_p1_gen_query(st->blinds[i].r1, st->issued[i].share_p1, st->q2[i], pk));
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            const Bytes& r3 = st->issued[i].sender_tag;
            if (multi) {
              const auto all = duqmr_gen_res(st->matrix, pk, st->q1[i], r3, config, *r);
              st->filtered.push_back(duqmr_obl_filter(st->keys->pk, all, st->onehot[i]));
            } else {
              st->res.push_back(duq_gen_res(w->m0[i], w->m1[i], pk, st->q1[i], r3, config, *r));
            }
          }
        },
        [=] {
          for (std::size_t i = 0; i < n; ++i) {
            const auto& tag = st->issued[i].receiver_tag;
            w->got[i] = multi ? duqmr_retrieve(st->filtered[i], st->blinds[i], *st->keys, tag, pk, config)
                              : duq_retrieve(st->res[i], st->blinds[i], tag, pk, config);
          }
        },
    };
    b.check = checker(w);
    return b;
  };
}

BatchFactory compiled_factory(const SessionConfig& config, std::size_t lanes) {
  return [config, lanes](std::size_t n, Rng& rng) {
    struct State {
      std::vector<std::vector<Message>> messages;
      std::vector<std::size_t> choice;
      std::vector<Bytes> expected;
      std::vector<Bytes> got;
      GroupParams pk;
      std::optional<AheKeyPair> keys;
      std::vector<Compiled<NpOneOfN>::Query> queries;
      std::vector<Compiled<NpOneOfN>::Secret> secrets;
      std::vector<Compiled<NpOneOfN>::Response> res;
    };
    auto st = std::make_shared<State>();
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Message> row;
      for (std::size_t j = 0; j < lanes; ++j) {
        row.push_back(Message::pad(rng.bytes(config.max_payload_bytes()), config));
      }
      const std::size_t s = rng.uniform_below(lanes).get_ui();
      st->expected.push_back(row[s].unpad());
      st->messages.push_back(std::move(row));
      st->choice.push_back(s);
    }
    st->got.resize(n);
    const NpOneOfN inner(lanes, config);
    auto r = std::make_shared<Rng>(rng.derive("invocations"));
    Batch b;
    b.phases = {
        [=] { st->pk = inner.init(*r); },
        [=] { st->keys = compiled_setup(inner, *r); },
        [=] {
          const auto suite = compile(inner, *st->keys);
          for (std::size_t i = 0; i < n; ++i) {
            auto [q, sp] = suite.gen_query(st->pk, st->choice[i], *r);
            st->queries.push_back(std::move(q));
            st->secrets.push_back(std::move(sp));
          }
        },
        [=] {
          const Compiled<NpOneOfN> sender(inner);
          for (std::size_t i = 0; i < n; ++i) {
            st->res.push_back(sender.gen_res(st->messages[i], st->pk, st->queries[i], *r));
          }
        },
        [=] {
          const auto suite = compile(inner, *st->keys);
          for (std::size_t i = 0; i < n; ++i) {
            st->got[i] = suite.retrieve(st->res[i], st->queries[i], st->secrets[i], st->pk, st->choice[i]);
          }
        },
    };
    b.check = [st] {
      if (st->got != st->expected) throw Error("benchmark invocation returned a wrong message");
    };
    return b;
  };
}

BatchFactory factory_for(const BenchOptions& options) {
  const SessionConfig& config = options.config;
  const std::string& p = options.protocol;
  if (p == "supersonic") return supersonic_factory(config);
  if (p == "naor-pinkas") return np_factory(config);
  if (p == "compiled") return compiled_factory(config, std::max<std::size_t>(2, options.z));
  if (options.z == 0) throw PreconditionError("z must be positive");
  Rng group_rng = Rng::from_u64(options.seed).derive("bench-group");
  const GroupParams pk = init_group(config, group_rng);
  if (p == "dq") return dq_factory(config, pk, options.z, false);
  if (p == "dqmr") return dq_factory(config, pk, options.z, true);
  if (p == "duq") return duq_factory(config, pk, options.z, false);
  if (p == "duqmr") return duq_factory(config, pk, options.z, true);
  throw PreconditionError("unknown protocol '" + p + "'");
}

double ms_since(Clock::time_point start, Clock::time_point end) {
  return std::chrono::duration<double, std::milli>(end - start).count();
}

}  // namespace

double BenchReport::phase_sum() const {
  double sum = 0;
  for (double v : phase_ms) sum += v;
  return sum;
}

const std::array<std::string_view, 7>& bench_protocols() {
  static const std::array<std::string_view, 7> names{
      "naor-pinkas", "dq", "duq", "dqmr", "duqmr", "compiled", "supersonic"};
  return names;
}

BenchReport run_bench(const BenchOptions& options) {
  options.config.validate();
  if (options.n == 0) throw PreconditionError("n must be positive");
  if (options.reps == 0) throw PreconditionError("reps must be positive");
  const BatchFactory factory = factory_for(options);
  const Rng master = Rng::from_u64(options.seed);

  for (std::size_t i = 0; i < options.warmup; ++i) {
    Rng rng = master.derive("warmup", i);
    Batch b = factory(1, rng);
    for (auto& phase : b.phases) phase();
    b.check();
  }

  BenchReport report;
  report.protocol = options.protocol;
  report.n = options.n;
  report.reps = options.reps;
  report.environment = environment_description();
  const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, options.n);
  for (std::size_t rep = 0; rep < options.reps; ++rep) {
    std::vector<Batch> parts;
    for (std::size_t t = 0; t < threads; ++t) {
      Rng rng = threads == 1 ? master.derive("rep", rep) : master.derive("rep", rep).derive("part", t);
      const std::size_t share = options.n / threads + (t < options.n % threads ? 1 : 0);
      parts.push_back(factory(share, rng));
    }
    const std::size_t phases = parts.front().phases.size();
    report.phases_used = phases;
    const auto start = Clock::now();
    for (std::size_t k = 0; k < phases; ++k) {
      const auto t0 = Clock::now();
      if (threads == 1) {
        parts.front().phases[k]();
      } else {
        std::vector<std::jthread> pool;
        std::vector<std::exception_ptr> errors(threads);
        for (std::size_t t = 0; t < threads; ++t) {
          pool.emplace_back([&, t] {
            try {
              parts[t].phases[k]();
            } catch (...) {
              errors[t] = std::current_exception();
            }
          });
        }
        pool.clear();
        for (auto& e : errors) {
          if (e) std::rethrow_exception(e);
        }
      }
      report.phase_ms[k] += ms_since(t0, Clock::now());
    }
    report.total_ms += ms_since(start, Clock::now());
    for (auto& part : parts) part.check();
  }
  for (double& v : report.phase_ms) v /= static_cast<double>(options.reps);
  report.total_ms /= static_cast<double>(options.reps);
  return report;
}

std::string csv_header() { return "protocol,N,phase1,phase2,phase3,phase4,phase5,total,reps"; }

std::string csv_row(const BenchReport& report) {
  std::string out = report.protocol + "," + std::to_string(report.n);
  char buf[64];
  for (double v : report.phase_ms) {
    std::snprintf(buf, sizeof buf, ",%.6f", v);
    out += buf;
  }
  std::snprintf(buf, sizeof buf, ",%.6f", report.total_ms);
  out += buf;
  out += "," + std::to_string(report.reps);
  return out;
}

std::string environment_description() {
  std::string out;
#if defined(__clang__)
  out += "clang " __clang_version__;
#elif defined(__GNUC__)
  out += "gcc " __VERSION__;
#endif
  utsname uts{};
  if (::uname(&uts) == 0) {
    out += "; ";
    out += uts.sysname;
    out += " ";
    out += uts.release;
    out += " ";
    out += uts.machine;
  }
  out += "; " + std::to_string(std::thread::hardware_concurrency()) + " hardware threads";
  return out;
}

}  // namespace oblivis::tools
