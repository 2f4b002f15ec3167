#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nkwb/io.hpp"

namespace nkwb {

enum class CheckLevel { Fast, Full };

struct SuiteConfig {
  std::uint64_t seed = 0;
  CheckLevel level = CheckLevel::Fast;
};

/// Info lines report a predicate value (yes/no) that is not a failure,
/// such as "not unimodular" for the Sweedler algebra.
enum class ItemStatus { Pass, Fail, Inconclusive, Info };
const char* status_name(ItemStatus s);

struct SuiteItem {
  std::string id;  // registry identity
  ItemStatus status = ItemStatus::Pass;
  std::string detail;
};

struct SuiteContext;

struct IdentityEntry {
  std::string id;
  std::string statement;
  bool hopf_only = false;
  std::function<std::vector<SuiteItem>(SuiteContext&)> run;
};
/// Every identity the verify suite can report, in report order.
const std::vector<IdentityEntry>& identity_registry();

struct SuiteReport {
  std::string object;
  std::vector<SuiteItem> items;
  /// 0 all pass, 1 some certified failure, 3 otherwise inconclusive.
  int exit_code() const;
};
SuiteReport run_verify_suite(const LoadedObject& obj, const SuiteConfig& cfg);

std::string report_text(const SuiteReport& r);
json report_json(const SuiteReport& r);

/// Known classification of the named builtins (k2, mat:N, group:*,
/// dualgroup:*, sweedler, taft:*); false when the name has no expectation.
struct ExpectedClass {
  bool semiperfect, qcf, cofrobenius;
  int symmetric;  // 1 yes, 0 no, -1 given by the coinner test
};
bool expected_classification(const std::string& name, ExpectedClass& out);

}  // namespace nkwb
