#pragma once

// Test hook: while a ScopedPurityMutation is alive, the definitional purity
// scans report every ideal as pure. The corpus must then show failures.
namespace ringlab::mutation {

bool purity_always_true();

class ScopedPurityMutation {
 public:
  ScopedPurityMutation();
  ~ScopedPurityMutation();
  ScopedPurityMutation(const ScopedPurityMutation&) = delete;
  ScopedPurityMutation& operator=(const ScopedPurityMutation&) = delete;
};

}  // namespace ringlab::mutation
