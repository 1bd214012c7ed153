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

#include <chrono>
#include <ctime>
#include <fstream>

#include "httplib.h"
#include "quadcoref/error.h"
#include "quadcoref/io.h"

namespace quadcoref {
namespace {

std::string UtcNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

void Reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

Json ErrorBody(const std::vector<std::string>& errors) {
  return Json{{"errors", errors}};
}

}  // namespace

AnnotationStore::AnnotationStore(std::vector<Instance> instances,
                                 std::filesystem::path records_path)
    : instances_(std::move(instances)),
      records_path_(std::move(records_path)),
      records_(instances_.size()) {
  for (size_t k = 0; k < instances_.size(); ++k) {
    instances_[k].gold.reset();
    if (!index_.emplace(instances_[k].id, k).second) {
      throw DataError("duplicate instance id " + instances_[k].id);
    }
  }
  if (std::filesystem::exists(records_path_)) {
    for (AnnotationRecord& r : ReadAnnotations(records_path_)) {
      const auto it = index_.find(r.instance_id);
      if (it == index_.end()) {
        throw DataError("stored record for unknown instance " + r.instance_id);
      }
      records_[it->second].push_back(std::move(r));
    }
  }
}

bool AnnotationStore::HasRecord(size_t index,
                                const std::string& annotator_id) const {
  for (const AnnotationRecord& r : records_[index]) {
    if (r.annotator_id == annotator_id) return true;
  }
  return false;
}

int AnnotationStore::Taken(size_t index,
                           const std::string& annotator_id) const {
  int taken = static_cast<int>(records_[index].size());
  for (const auto& [annotator, pending] : pending_) {
    if (pending == index && annotator != annotator_id) ++taken;
  }
  return taken;
}

std::optional<Instance> AnnotationStore::NextFor(
    const std::string& annotator_id) {
  std::lock_guard lock(mutex_);
  if (const auto it = pending_.find(annotator_id); it != pending_.end()) {
    return instances_[it->second];
  }
  for (size_t k = 0; k < instances_.size(); ++k) {
    if (HasRecord(k, annotator_id)) continue;
    if (Taken(k, annotator_id) >= kAnnotatorsPerInstance) continue;
    pending_[annotator_id] = k;
    return instances_[k];
  }
  return std::nullopt;
}

SubmitResult AnnotationStore::Submit(AnnotationRecord record) {
  std::lock_guard lock(mutex_);
  const auto it = index_.find(record.instance_id);
  if (it == index_.end()) {
    return {404, {"unknown instance " + record.instance_id}};
  }
  if (record.annotator_id.empty()) return {400, {"missing annotator_id"}};
  const size_t k = it->second;
  if (HasRecord(k, record.annotator_id)) {
    return {409, {"annotator " + record.annotator_id +
                  " already annotated " + record.instance_id}};
  }
  if (static_cast<int>(records_[k].size()) >= kAnnotatorsPerInstance) {
    return {409, {"instance " + record.instance_id + " is complete"}};
  }
  std::vector<std::string> problems;
  try {
    problems = ValidateRecord(record, instances_[k]);
  } catch (const DataError& e) {
    problems.emplace_back(e.what());
  }
  if (!problems.empty()) return {400, problems};
  if (record.timestamp.empty()) record.timestamp = UtcNow();

  std::ofstream out(records_path_, std::ios::binary | std::ios::app);
  if (!out) throw DataError("cannot append to " + records_path_.string());
  out << AnnotationToJson(record).dump() << '\n';
  out.flush();
  if (!out) throw DataError("write failed for " + records_path_.string());

  if (const auto p = pending_.find(record.annotator_id);
      p != pending_.end() && p->second == k) {
    pending_.erase(p);
  }
  records_[k].push_back(std::move(record));
  return {};
}

Progress AnnotationStore::GetProgress() const {
  std::lock_guard lock(mutex_);
  Progress p;
  p.instances = static_cast<int>(instances_.size());
  for (const auto& records : records_) {
    p.records += static_cast<int>(records.size());
    if (static_cast<int>(records.size()) >= kAnnotatorsPerInstance) {
      ++p.complete;
    }
    for (const AnnotationRecord& r : records) ++p.per_annotator[r.annotator_id];
  }
  return p;
}

std::vector<AnnotationRecord> AnnotationStore::Records() const {
  std::lock_guard lock(mutex_);
  std::vector<AnnotationRecord> all;
  for (const auto& records : records_) {
    all.insert(all.end(), records.begin(), records.end());
  }
  return all;
}

AnnotationServer::AnnotationServer(AnnotationStore* store)
    : store_(store), server_(std::make_unique<httplib::Server>()) {
  server_->Get("/instances/next",
               [this](const httplib::Request& req, httplib::Response& res) {
                 const std::string annotator =
                     req.get_param_value("annotator");
                 if (annotator.empty()) {
                   Reply(res, 400, ErrorBody({"missing annotator parameter"}));
                   return;
                 }
                 if (auto x = store_->NextFor(annotator)) {
                   Reply(res, 200, InstanceToJson(*x));
                 } else {
                   res.status = 204;
                 }
               });
  server_->Post("/records",
                [this](const httplib::Request& req, httplib::Response& res) {
                  AnnotationRecord record;
                  try {
                    record = AnnotationFromJson(Json::parse(req.body));
                  } catch (const Json::exception& e) {
                    Reply(res, 400, ErrorBody({e.what()}));
                    return;
                  } catch (const DataError& e) {
                    Reply(res, 400, ErrorBody({e.what()}));
                    return;
                  }
                  const SubmitResult result = store_->Submit(std::move(record));
                  if (result.accepted()) {
                    Reply(res, 201, Json{{"status", "accepted"}});
                  } else {
                    Reply(res, result.status, ErrorBody(result.errors));
                  }
                });
  server_->Get("/progress",
               [this](const httplib::Request&, httplib::Response& res) {
                 const Progress p = store_->GetProgress();
                 Json per_annotator = Json::object();
                 for (const auto& [id, n] : p.per_annotator) {
                   per_annotator[id] = n;
                 }
                 Reply(res, 200,
                       Json{{"instances", p.instances},
                            {"complete", p.complete},
                            {"records", p.records},
                            {"annotators_per_instance", kAnnotatorsPerInstance},
                            {"per_annotator", per_annotator}});
               });
}

AnnotationServer::~AnnotationServer() { Stop(); }

bool AnnotationServer::MountStatic(const std::filesystem::path& dir) {
  return server_->set_mount_point("/", dir.string());
}

int AnnotationServer::Bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

void AnnotationServer::Listen() { server_->listen_after_bind(); }

void AnnotationServer::Stop() {
  if (server_) server_->stop();
}

}  // namespace quadcoref
