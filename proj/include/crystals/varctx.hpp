#pragma once

#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace crystals::alg {

// Append-only variable context. Polynomials hold a shared_ptr to their
// context; extending the context with new variables never invalidates
// existing values, so a context can be grown (e.g. by an action parameter
// "d") while charts built earlier stay usable.
class VarCtx {
public:
  VarCtx() = default;

  int intern(const std::string& name) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    int idx = static_cast<int>(names_.size());
    names_.push_back(name);
    index_.emplace(name, idx);
    return idx;
  }

  int find(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = index_.find(name);
    return it == index_.end() ? -1 : it->second;
  }

  std::string name(int idx) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (idx < 0 || idx >= static_cast<int>(names_.size()))
      throw std::out_of_range("VarCtx::name: bad index");
    return names_[idx];
  }

  int size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return static_cast<int>(names_.size());
  }

private:
  mutable std::mutex mu_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

using CtxPtr = std::shared_ptr<VarCtx>;

CtxPtr make_ctx();
// Convenience: context with torus variables t1..tn followed by chart
// variables c1..cl (the standard chart layout).
CtxPtr make_chart_ctx(int n, int l);

}  // namespace crystals::alg
