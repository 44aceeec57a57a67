#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace ringlab {

// Per-object cache of derived invariants. Values are computed outside the
// lock, so a factory may itself consult the cache; when two threads race on
// the same key the first stored value wins and both observe it.
class Memo {
 public:
  Memo() = default;
  Memo(const Memo&) = delete;
  Memo& operator=(const Memo&) = delete;

  template <class T, class F>
  std::shared_ptr<const T> get(const std::string& key, F&& make) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = slots_.find(key); it != slots_.end())
        return std::static_pointer_cast<const T>(it->second);
    }
    auto value = std::make_shared<const T>(make());
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = slots_.emplace(key, value);
    return std::static_pointer_cast<const T>(it->second);
  }

 private:
  mutable std::mutex mu_;
  mutable std::map<std::string, std::shared_ptr<const void>> slots_;
};

}  // namespace ringlab
