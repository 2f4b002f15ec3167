#include <gtest/gtest.h>

#include <set>

#include "nkwb/suite.hpp"

using namespace nkwb;

namespace {

std::set<std::string> registry_ids() {
  std::set<std::string> ids;
  for (const auto& e : identity_registry()) ids.insert(e.id);
  return ids;
}

}  // namespace

TEST(Registry, IdsAreUniqueAndImplemented) {
  std::set<std::string> seen;
  for (const auto& e : identity_registry()) {
    EXPECT_TRUE(seen.insert(e.id).second) << "duplicate " << e.id;
    EXPECT_FALSE(e.statement.empty()) << e.id;
    EXPECT_TRUE(static_cast<bool>(e.run)) << e.id;
  }
}

TEST(Registry, NoDanglingNamesAndFullCoverage) {
  auto ids = registry_ids();
  std::set<std::string> emitted;
  for (const std::string name : {"k2", "sweedler", "dualgroup:S3"}) {
    auto rep = run_verify_suite(load_object(name), {0, CheckLevel::Full});
    for (const auto& item : rep.items) {
      EXPECT_TRUE(ids.count(item.id)) << "dangling report name " << item.id;
      emitted.insert(item.id);
    }
  }
  for (const auto& id : ids) EXPECT_TRUE(emitted.count(id)) << "registry entry never reported: " << id;
}

TEST(Suite, ExpectedNegativesAreNotFailures) {
  auto k2 = run_verify_suite(load_object("k2"), {});
  EXPECT_EQ(k2.exit_code(), 0);
  bool saw_not_qcf = false;
  for (const auto& i : k2.items)
    if (i.id == "classification" && i.status == ItemStatus::Info && i.detail.find("qcf=no") != std::string::npos) saw_not_qcf = true;
  EXPECT_TRUE(saw_not_qcf);

  auto h4 = run_verify_suite(load_object("sweedler"), {});
  EXPECT_EQ(h4.exit_code(), 0);
  bool saw_not_unimodular = false;
  for (const auto& i : h4.items)
    if (i.id == "unimodular" && i.detail.rfind("no", 0) == 0) saw_not_unimodular = true;
  EXPECT_TRUE(saw_not_unimodular);
}

TEST(Suite, DeterministicReports) {
  for (std::uint64_t seed : {0ull, 7ull}) {
    auto a = report_text(run_verify_suite(load_object("taft:3:13"), {seed, CheckLevel::Fast}));
    auto b = report_text(run_verify_suite(load_object("taft:3:13"), {seed, CheckLevel::Fast}));
    EXPECT_EQ(a, b);
  }
}

TEST(Suite, JsonReportCarriesSchema) {
  auto j = report_json(run_verify_suite(load_object("mat:2"), {}));
  EXPECT_EQ(j["schema"], "nkwb/1");
  EXPECT_EQ(j["exit"], 0);
}
