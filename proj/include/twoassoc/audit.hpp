#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "twoassoc/enumerate_wn.hpp"
#include "twoassoc/two_bracketing.hpp"

namespace twoassoc {

struct AuditCheck {
  std::string group;  // "counts", "identities", "eulerian", ...
  std::string name;
  nlohmann::ordered_json instance;
  std::string expected;
  std::string observed;
  bool pass = false;
};

class AuditReport {
 public:
  void add(AuditCheck check) { checks_.push_back(std::move(check)); }
  void add(std::string group, std::string name, nlohmann::ordered_json instance, std::string expected,
           std::string observed);
  void merge(const AuditReport& other);

  const std::vector<AuditCheck>& checks() const { return checks_; }
  std::size_t passed() const;
  std::size_t failed() const { return checks_.size() - passed(); }
  bool all_pass() const { return failed() == 0; }

  nlohmann::ordered_json to_json() const;
  std::string to_table() const;

 private:
  std::vector<AuditCheck> checks_;
};

/// Per (T, m): series coefficient, recurrence value and enumerated fiber
/// count agree. Uses `w` when given instead of enumerating again.
AuditReport audit_counts(const NVector& n, int max_degree, const WnPoset* w = nullptr);

/// One fiber product of W_{m_1} ... W_{m_k} over K_r: alternating sum
/// summed tuple by tuple.
struct FiberProductCheck {
  long long alternating_sum = 0;
  long long elements = 0;
};
FiberProductCheck fiber_product_sum(const std::vector<WnPoset>& factors);

/// Identities at t = -1, global and per-fiber balance of each W_n, fiber
/// products over K_r for r in r_list (all factors with |m_i| <= 3, up to
/// three factors), and reduced-product balance on posets of at most six
/// elements.
AuditReport audit_identities(const std::vector<NVector>& n_list, const std::vector<int>& r_list, int max_degree);

/// Full interval check of the completed poset, plus gradedness, diamonds,
/// Moebius values, named sub- and superlevel intervals and the cd-index.
AuditReport audit_eulerian(const NVector& n, const WnPoset* w = nullptr);

/// All nonzero n with r = 1 and n <= 8, r = 2 and |n| <= 5, r = 3 and |n| <= 4.
std::vector<NVector> desk_n_list();

/// Everything above at desk scale.
AuditReport audit_desk();

}  // namespace twoassoc
