#pragma once

#include <memory>
#include <vector>

#include "oblivis/harness/party.hpp"
#include "oblivis/harness/session.hpp"

namespace oblivis::harness::detail {

/// Instantiates the parties of one session, each with its own random stream.
std::vector<std::unique_ptr<Party>> make_parties(Protocol protocol, const SessionInputs& inputs,
                                                 const SessionOptions& options,
                                                 const SessionId& session);

}  // namespace oblivis::harness::detail
