#include "schedulers.hpp"

#include <sys/socket.h>
#include <poll.h>
#include <unistd.h>

#include <atomic>
#include <condition_variable>
#include <cstring>
#include <deque>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

#include "oblivis/codec.hpp"

namespace oblivis::harness::detail {

namespace {

std::map<Role, Party*> index_parties(std::vector<std::unique_ptr<Party>>& parties) {
  std::map<Role, Party*> out;
  for (auto& p : parties) out[p->role()] = p.get();
  return out;
}

void check_route(const std::map<Role, Party*>& by_role, Role sender, const PartyEnvelope& env) {
  if (env.from != sender) throw SessionError(sender, env.kind, "envelope with a forged sender");
  if (by_role.count(env.to) == 0) {
    throw SessionError(sender, env.kind,
                       "no party plays role " + std::string(role_name(env.to)));
  }
}

// Sequential: one thread, FIFO delivery.

void run_sequential(std::vector<std::unique_ptr<Party>>& parties, RoutingLog& log) {
  const auto by_role = index_parties(parties);
  std::deque<PartyEnvelope> queue;

  class QueueOutbox final : public Outbox {
   public:
    QueueOutbox(Role sender, const std::map<Role, Party*>& by_role,
                std::deque<PartyEnvelope>& queue, RoutingLog& log)
        : sender_(sender), by_role_(by_role), queue_(queue), log_(log) {}
    void send(PartyEnvelope env) override {
      check_route(by_role_, sender_, env);
      log_.append(env);
      queue_.push_back(std::move(env));
    }

   private:
    Role sender_;
    const std::map<Role, Party*>& by_role_;
    std::deque<PartyEnvelope>& queue_;
    RoutingLog& log_;
  };

  for (auto& p : parties) {
    QueueOutbox out(p->role(), by_role, queue, log);
    p->start(out);
  }
  while (!queue.empty()) {
    PartyEnvelope env = std::move(queue.front());
    queue.pop_front();
    Party* target = by_role.at(env.to);
    QueueOutbox out(target->role(), by_role, queue, log);
    target->deliver(env, out);
  }
}

// Threaded: one thread per party, blocking inboxes, quiescence by counting
// activations that are queued or running.

class Mailbox {
 public:
  void push(PartyEnvelope env) {
    {
      std::lock_guard lock(mu_);
      queue_.push_back(std::move(env));
    }
    cv_.notify_one();
  }
  std::optional<PartyEnvelope> pop() {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return closed_ || !queue_.empty(); });
    if (closed_) return std::nullopt;
    PartyEnvelope env = std::move(queue_.front());
    queue_.pop_front();
    return env;
  }
  void close() {
    {
      std::lock_guard lock(mu_);
      closed_ = true;
    }
    cv_.notify_all();
  }

 private:
  std::mutex mu_;
  std::condition_variable cv_;
  std::deque<PartyEnvelope> queue_;
  bool closed_ = false;
};

void run_threaded(std::vector<std::unique_ptr<Party>>& parties, RoutingLog& log) {
  const auto by_role = index_parties(parties);
  std::map<Role, std::unique_ptr<Mailbox>> boxes;
  for (auto& p : parties) boxes[p->role()] = std::make_unique<Mailbox>();

  std::atomic<std::size_t> pending{parties.size()};
  std::mutex error_mu;
  std::exception_ptr error;

  auto close_all = [&] {
    for (auto& [role, box] : boxes) box->close();
  };
  auto finish_activation = [&] {
    if (pending.fetch_sub(1) == 1) close_all();
  };
  auto fail = [&](std::exception_ptr e) {
    {
      std::lock_guard lock(error_mu);
      if (!error) error = e;
    }
    close_all();
  };

  class MailOutbox final : public Outbox {
   public:
    MailOutbox(Role sender, const std::map<Role, Party*>& by_role,
               std::map<Role, std::unique_ptr<Mailbox>>& boxes, std::atomic<std::size_t>& pending,
               RoutingLog& log)
        : sender_(sender), by_role_(by_role), boxes_(boxes), pending_(pending), log_(log) {}
    void send(PartyEnvelope env) override {
      check_route(by_role_, sender_, env);
      log_.append(env);
      pending_.fetch_add(1);
      boxes_.at(env.to)->push(std::move(env));
    }

   private:
    Role sender_;
    const std::map<Role, Party*>& by_role_;
    std::map<Role, std::unique_ptr<Mailbox>>& boxes_;
    std::atomic<std::size_t>& pending_;
    RoutingLog& log_;
  };

  std::vector<std::thread> threads;
  for (auto& p : parties) {
    Party* party = p.get();
    threads.emplace_back([&, party] {
      MailOutbox out(party->role(), by_role, boxes, pending, log);
      try {
        party->start(out);
        finish_activation();
        while (auto env = boxes.at(party->role())->pop()) {
          party->deliver(*env, out);
          finish_activation();
        }
      } catch (...) {
        fail(std::current_exception());
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

// Socket: every party talks to a router thread over its own stream socket.
// Frames are a 4-byte big-endian length followed by a type byte and a body.

enum class Frame : std::uint8_t { envelope = 0, ack = 1, error = 2, shutdown = 3 };

void write_all(int fd, const std::uint8_t* data, std::size_t n) {
  while (n > 0) {
    const ssize_t w = ::write(fd, data, n);
    if (w < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("socket write failed: ") + std::strerror(errno));
    }
    data += w;
    n -= static_cast<std::size_t>(w);
  }
}

bool read_all(int fd, std::uint8_t* data, std::size_t n) {
  while (n > 0) {
    const ssize_t r = ::read(fd, data, n);
    if (r == 0) return false;
    if (r < 0) {
      if (errno == EINTR) continue;
      throw Error(std::string("socket read failed: ") + std::strerror(errno));
    }
    data += r;
    n -= static_cast<std::size_t>(r);
  }
  return true;
}

void send_frame(int fd, Frame type, BytesView body) {
  ByteWriter w;
  w.u32(static_cast<std::uint32_t>(body.size() + 1)).u8(static_cast<std::uint8_t>(type)).raw(body);
  const Bytes& out = w.bytes();
  write_all(fd, out.data(), out.size());
}

std::optional<std::pair<Frame, Bytes>> recv_frame(int fd) {
  std::uint8_t header[4];
  if (!read_all(fd, header, sizeof header)) return std::nullopt;
  const std::uint32_t len = (std::uint32_t{header[0]} << 24) | (std::uint32_t{header[1]} << 16) |
                            (std::uint32_t{header[2]} << 8) | header[3];
  if (len == 0) throw DecodeError("empty frame");
  Bytes body(len);
  if (!read_all(fd, body.data(), len)) throw DecodeError("truncated frame");
  const auto type = static_cast<Frame>(body[0]);
  return std::make_pair(type, Bytes(body.begin() + 1, body.end()));
}

Bytes encode_error(const SessionError& e) {
  ByteWriter w;
  w.u8(static_cast<std::uint8_t>(e.role()))
      .u8(e.phase() ? 1 : 0)
      .u16(e.phase() ? static_cast<std::uint16_t>(*e.phase()) : 0)
      .blob(to_bytes(e.what()));
  return std::move(w).bytes();
}

SessionError decode_error(BytesView body) {
  ByteReader r(body);
  const Role role = role_from_code(r.u8());
  const bool has_phase = r.boolean();
  const std::uint16_t code = r.u16();
  const Bytes what = r.blob();
  std::optional<Kind> phase;
  if (has_phase) phase = kind_from_code(code);
  return SessionError(role, phase, "remote: " + std::string(what.begin(), what.end()));
}

struct FdPair {
  int router = -1;
  int party = -1;
  ~FdPair() {
    if (router >= 0) ::close(router);
    if (party >= 0) ::close(party);
  }
};

void run_socket(std::vector<std::unique_ptr<Party>>& parties, RoutingLog& log) {
  const auto by_role = index_parties(parties);
  std::vector<FdPair> fds(parties.size());
  std::map<Role, int> router_fd;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    int sv[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM, 0, sv) != 0) {
      throw Error(std::string("socketpair failed: ") + std::strerror(errno));
    }
    fds[i].router = sv[0];
    fds[i].party = sv[1];
    router_fd[parties[i]->role()] = sv[0];
  }

  class SocketOutbox final : public Outbox {
   public:
    explicit SocketOutbox(int fd) : fd_(fd) {}
    void send(PartyEnvelope env) override { send_frame(fd_, Frame::envelope, encode_envelope(env)); }

   private:
    int fd_;
  };

  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < parties.size(); ++i) {
    Party* party = parties[i].get();
    const int fd = fds[i].party;
    threads.emplace_back([party, fd] {
      SocketOutbox out(fd);
      auto report = [&](const SessionError& e) { send_frame(fd, Frame::error, encode_error(e)); };
      try {
        try {
          party->start(out);
          send_frame(fd, Frame::ack, {});
        } catch (const SessionError& e) {
          report(e);
        }
        while (auto frame = recv_frame(fd)) {
          if (frame->first == Frame::shutdown) break;
          if (frame->first != Frame::envelope) continue;
          try {
            party->deliver(decode_envelope(frame->second), out);
            send_frame(fd, Frame::ack, {});
          } catch (const SessionError& e) {
            report(e);
          } catch (const std::exception& e) {
            report(SessionError(party->role(), std::nullopt, e.what()));
          }
        }
      } catch (...) {
        // The router notices the closed socket or the missing ack.
      }
    });
  }

  std::optional<SessionError> failure;
  std::exception_ptr router_error;
  try {
    std::size_t pending = parties.size();
    std::vector<pollfd> polls;
    std::vector<Role> poll_roles;
    for (auto& p : parties) {
      polls.push_back({router_fd.at(p->role()), POLLIN, 0});
      poll_roles.push_back(p->role());
    }
    while (pending > 0 && !failure) {
      if (::poll(polls.data(), polls.size(), -1) < 0) {
        if (errno == EINTR) continue;
        throw Error(std::string("poll failed: ") + std::strerror(errno));
      }
      for (std::size_t i = 0; i < polls.size() && !failure; ++i) {
        if ((polls[i].revents & (POLLIN | POLLHUP)) == 0) continue;
        auto frame = recv_frame(polls[i].fd);
        if (!frame) throw Error("party socket closed unexpectedly");
        switch (frame->first) {
          case Frame::envelope: {
            PartyEnvelope env = decode_envelope(frame->second);
            check_route(by_role, poll_roles[i], env);
            log.append(env);
            ++pending;
            send_frame(router_fd.at(env.to), Frame::envelope, frame->second);
            break;
          }
          case Frame::ack:
            --pending;
            break;
          case Frame::error:
            failure = decode_error(frame->second);
            break;
          case Frame::shutdown:
            throw DecodeError("party sent a shutdown frame");
        }
      }
    }
  } catch (const SessionError& e) {
    failure = e;
  } catch (...) {
    router_error = std::current_exception();
  }
  for (auto& [role, fd] : router_fd) {
    try {
      send_frame(fd, Frame::shutdown, {});
    } catch (...) {
    }
  }
  for (auto& t : threads) t.join();
  if (router_error) std::rethrow_exception(router_error);
  if (failure) throw *failure;
}

}  // namespace

void schedule(SchedulerKind kind, std::vector<std::unique_ptr<Party>>& parties, RoutingLog& log) {
  switch (kind) {
    case SchedulerKind::sequential:
      return run_sequential(parties, log);
    case SchedulerKind::threaded:
      return run_threaded(parties, log);
    case SchedulerKind::socket:
      return run_socket(parties, log);
  }
}

}  // namespace oblivis::harness::detail
