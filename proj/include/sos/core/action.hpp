// Copyright 2026 the sos middleware developers.
// Licensed under the Apache License, Version 2.0:
// http://www.apache.org/licenses/LICENSE-2.0

#pragma once

#include <variant>
#include <vector>

#include "sos/core/ids.hpp"

namespace sos::core {

struct PublishAction {
  MessageId message;
};

struct FollowAction {
  UserId followee;
};

struct UnfollowAction {
  UserId followee;
};

/// Application-layer action, saved locally first and synchronized with the
/// cloud when connectivity appears. `synced` flips false -> true exactly once.
struct Action {
  Timestamp at = 0;
  UserId actor;
  std::variant<PublishAction, FollowAction, UnfollowAction> what;
  bool synced = false;
};

/// follower -> followee edge plus the time it was created. At most one live
/// subscription exists per ordered pair.
struct Subscription {
  UserId follower;
  UserId followee;
  Timestamp since = 0;

  auto operator<=>(const Subscription&) const = default;
};

}  // namespace sos::core
