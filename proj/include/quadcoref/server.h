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

#ifndef QUADCOREF_SERVER_H_
#define QUADCOREF_SERVER_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "quadcoref/annotation.h"
#include "quadcoref/instance.h"

namespace httplib {
class Server;
}

namespace quadcoref {

inline constexpr int kAnnotatorsPerInstance = 3;

struct SubmitResult {
  // HTTP-style status: 201 accepted, 400 invalid, 404 unknown instance,
  // 409 duplicate or instance already complete.
  int status = 201;
  std::vector<std::string> errors;
  bool accepted() const { return status == 201; }
};

struct Progress {
  int instances = 0;
  int complete = 0;
  int records = 0;
  std::map<std::string, int> per_annotator;
};

// Append-only record store behind the annotation endpoints. Every
// instance is handed to at most three distinct annotators; an annotator
// keeps the same pending instance until submitting it.
class AnnotationStore {
 public:
  // Existing records in `records_path` are loaded; new ones are appended.
  AnnotationStore(std::vector<Instance> instances,
                  std::filesystem::path records_path);

  std::optional<Instance> NextFor(const std::string& annotator_id);
  SubmitResult Submit(AnnotationRecord record);
  Progress GetProgress() const;
  std::vector<AnnotationRecord> Records() const;

 private:
  int Taken(size_t index, const std::string& annotator_id) const;
  bool HasRecord(size_t index, const std::string& annotator_id) const;

  std::vector<Instance> instances_;
  std::map<std::string, size_t> index_;
  std::filesystem::path records_path_;
  mutable std::mutex mutex_;
  std::vector<std::vector<AnnotationRecord>> records_;
  // annotator -> instance index currently assigned.
  std::map<std::string, size_t> pending_;
};

// GET /instances/next?annotator=ID, POST /records, GET /progress.
class AnnotationServer {
 public:
  explicit AnnotationServer(AnnotationStore* store);
  ~AnnotationServer();
  AnnotationServer(const AnnotationServer&) = delete;
  AnnotationServer& operator=(const AnnotationServer&) = delete;

  // Serves the files under `dir` at "/" (the browser client). False if
  // `dir` is not a directory.
  bool MountStatic(const std::filesystem::path& dir);
  // Returns the bound port, or -1. Port 0 picks a free port.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Listen();
  void Stop();

 private:
  AnnotationStore* store_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace quadcoref

#endif  // QUADCOREF_SERVER_H_
