#pragma once

#include <memory>
#include <vector>

#include "oblivis/harness/party.hpp"
#include "oblivis/harness/routing_log.hpp"
#include "oblivis/harness/session.hpp"

namespace oblivis::harness::detail {

/// Drives the parties until no envelope is in flight. Every routed
/// envelope is appended to `log`. Throws SessionError on the first failure.
void schedule(SchedulerKind kind, std::vector<std::unique_ptr<Party>>& parties, RoutingLog& log);

}  // namespace oblivis::harness::detail
