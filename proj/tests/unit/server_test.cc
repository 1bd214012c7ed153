//
// Copyright 2026 The quadcoref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "quadcoref/server.h"

#include <gtest/gtest.h>
#include <httplib.h>

#include <filesystem>
#include <thread>

#include "quadcoref/counterfactual.h"
#include "quadcoref/io.h"
#include "quadcoref/pipeline.h"
#include "test_util.h"

namespace quadcoref {
namespace {

namespace fs = std::filesystem;

fs::path FreshRecordsPath(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "quadcoref_server_test";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  fs::remove(path);
  return path;
}

Quadruple PassageQuadruple() {
  return BuildQuadruple(testing::PassageOriginal(), testing::TestResources());
}

AnnotationRecord Pick(const Instance& x, const std::string& annotator,
                      std::vector<Span> spans) {
  AnnotationRecord r;
  r.instance_id = x.id;
  r.annotator_id = annotator;
  r.selections = std::move(spans);
  return r;
}

class ServerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    path_ = FreshRecordsPath(std::string(info->name()) + ".jsonl");
    quad_ = PassageQuadruple();
    store_ = std::make_unique<AnnotationStore>(
        std::vector<Instance>(quad_.variants.begin(), quad_.variants.end()),
        path_);
    server_ = std::make_unique<AnnotationServer>(store_.get());
    ASSERT_TRUE(server_->MountStatic(testing::FixtureDir() / "../../tools/ui"));
    port_ = server_->Bind("127.0.0.1", 0);
    ASSERT_GT(port_, 0);
    thread_ = std::thread([this] { server_->Listen(); });
    client_ = std::make_unique<httplib::Client>("127.0.0.1", port_);
    // Wait until the listener accepts requests.
    for (int k = 0; k < 200 && !client_->Get("/progress"); ++k) {
      std::this_thread::sleep_for(std::chrono::milliseconds(5));
    }
  }
  void TearDown() override {
    server_->Stop();
    thread_.join();
  }

  httplib::Result Post(const AnnotationRecord& r) {
    return client_->Post("/records", AnnotationToJson(r).dump(),
                         "application/json");
  }

  fs::path path_;
  Quadruple quad_;
  std::unique_ptr<AnnotationStore> store_;
  std::unique_ptr<AnnotationServer> server_;
  std::unique_ptr<httplib::Client> client_;
  std::thread thread_;
  int port_ = 0;
};

TEST_F(ServerTest, ServesStaticPage) {
  auto res = client_->Get("/index.html");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_NE(res->body.find("/instances/next?annotator="), std::string::npos);
  EXPECT_EQ(client_->Get("/missing.html")->status, 404);
}

TEST_F(ServerTest, NextIsStickyUntilSubmitted) {
  auto res = client_->Get("/instances/next?annotator=ann1");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const Instance first = InstanceFromJson(Json::parse(res->body));
  EXPECT_FALSE(first.gold.has_value());
  res = client_->Get("/instances/next?annotator=ann1");
  EXPECT_EQ(InstanceFromJson(Json::parse(res->body)).id, first.id);

  res = Post(Pick(first, "ann1", {first.candidates[0].spans[0]}));
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  res = client_->Get("/instances/next?annotator=ann1");
  EXPECT_NE(InstanceFromJson(Json::parse(res->body)).id, first.id);

  EXPECT_EQ(client_->Get("/instances/next")->status, 400);
}

TEST_F(ServerTest, ViolationsReturnMessages) {
  const Instance& x = quad_.original();
  struct Case {
    AnnotationRecord record;
    std::string message;
  };
  AnnotationRecord misuse = Pick(x, "a", {x.candidates[0].spans[0]});
  misuse.none_flag = true;
  const std::vector<Case> cases = {
      {Pick(x, "a", {{4, 7}}), kNotAName},
      {Pick(x, "a", {x.candidates[0].spans[0], x.candidates[1].spans[0]}),
       kMultipleEntities},
      {Pick(x, "a", {}), kNothingSelected},
  };
  for (const Case& c : cases) {
    const auto res = Post(c.record);
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400);
    EXPECT_EQ(Json::parse(res->body)["errors"][0], c.message);
  }
  // The JSON reader rejects none_flag with selections before validation.
  EXPECT_EQ(Post(misuse)->status, 400);
  EXPECT_EQ(store_->GetProgress().records, 0);
}

TEST_F(ServerTest, UniquenessAndCapacity) {
  const Instance& x = quad_.original();
  const Span tom = x.candidates[0].spans[0];
  EXPECT_EQ(Post(Pick(x, "a", {tom}))->status, 201);
  EXPECT_EQ(Post(Pick(x, "a", {tom}))->status, 409);
  EXPECT_EQ(Post(Pick(x, "b", {tom}))->status, 201);
  EXPECT_EQ(Post(Pick(x, "c", {tom}))->status, 201);
  EXPECT_EQ(Post(Pick(x, "d", {tom}))->status, 409);
  AnnotationRecord unknown = Pick(x, "a", {tom});
  unknown.instance_id = "missing";
  EXPECT_EQ(Post(unknown)->status, 404);

  const auto res = client_->Get("/progress");
  ASSERT_TRUE(res);
  const Json p = Json::parse(res->body);
  EXPECT_EQ(p["instances"], 4);
  EXPECT_EQ(p["complete"], 1);
  EXPECT_EQ(p["records"], 3);
  EXPECT_EQ(p["per_annotator"]["a"], 1);
}

TEST_F(ServerTest, AtMostThreeAnnotatorsHoldAnInstance) {
  std::map<std::string, int> handed;
  for (const std::string a : {"a", "b", "c", "d"}) {
    const auto res = client_->Get(("/instances/next?annotator=" + a).c_str());
    ++handed[InstanceFromJson(Json::parse(res->body)).id];
  }
  for (const auto& [id, n] : handed) EXPECT_LE(n, kAnnotatorsPerInstance);
  EXPECT_EQ(handed.size(), 2u);
}

TEST_F(ServerTest, AcceptedRecordsFeedAggregation) {
  for (const std::string a : {"a", "b", "c"}) {
    for (int k = 0; k < 4; ++k) {
      const auto res =
          client_->Get(("/instances/next?annotator=" + a).c_str());
      ASSERT_EQ(res->status, 200);
      const Instance x = InstanceFromJson(Json::parse(res->body));
      EXPECT_EQ(Post(Pick(x, a, {x.candidates[0].spans[0]}))->status, 201);
    }
    EXPECT_EQ(client_->Get(("/instances/next?annotator=" + a).c_str())->status,
              204);
  }
  // Reload from disk: the stored file is the aggregation input.
  const auto records = ReadAnnotations(path_);
  EXPECT_EQ(records.size(), 12u);
  const AggregateResult agg = Aggregate({quad_}, records, 1);
  EXPECT_EQ(agg.consistent, 1);
  EXPECT_EQ(agg.invalid, 0);
  EXPECT_DOUBLE_EQ(agg.agreement.majority, 1.0);

  AnnotationStore reloaded(
      std::vector<Instance>(quad_.variants.begin(), quad_.variants.end()),
      path_);
  EXPECT_EQ(reloaded.GetProgress().complete, 4);
  EXPECT_FALSE(reloaded.NextFor("z").has_value());
}

}  // namespace
}  // namespace quadcoref
