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

#ifndef QUADCOREF_IO_H_
#define QUADCOREF_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "quadcoref/annotation.h"
#include "quadcoref/instance.h"
#include "quadcoref/metrics.h"
#include "quadcoref/scoring.h"

namespace quadcoref {

using Json = nlohmann::ordered_json;

// Spans serialize as [begin, end] pairs of Unicode scalar offsets.
Json SpanToJson(const Span& span);
Span SpanFromJson(const Json& j);

Json InstanceToJson(const Instance& x);
Instance InstanceFromJson(const Json& j);

// {quadruple_id, original_gender, instances: {original, controlled,
// swapped1, swapped2}}.
Json QuadrupleToJson(const Quadruple& q);
Quadruple QuadrupleFromJson(const Json& j);

Json AnnotationToJson(const AnnotationRecord& r);
AnnotationRecord AnnotationFromJson(const Json& j);

Json PredictionToJson(const PredictionRecord& p);
PredictionRecord PredictionFromJson(const Json& j);

Json ScoreToJson(const QuadrupleScore& s);
QuadrupleScore ScoreFromJson(const Json& j);

Json ReportToJson(const MetricsReport& r);

// One JSON value per non-blank line. Errors name the source and line.
std::vector<Json> ParseJsonl(std::string_view content,
                             std::string_view source = "<input>");
std::vector<Json> ReadJsonl(const std::filesystem::path& path);
std::string ToJsonl(const std::vector<Json>& values);
void WriteText(const std::filesystem::path& path, std::string_view content);
std::string ReadText(const std::filesystem::path& path);

// Typed readers; a value that does not convert is reported with its line.
std::vector<Instance> ReadInstances(const std::filesystem::path& path);
std::vector<Quadruple> ReadQuadruples(const std::filesystem::path& path);
std::vector<AnnotationRecord> ReadAnnotations(
    const std::filesystem::path& path);
std::vector<PredictionRecord> ReadPredictions(
    const std::filesystem::path& path);
std::vector<QuadrupleScore> ReadScores(const std::filesystem::path& path);

template <typename T>
std::string RecordsToJsonl(const std::vector<T>& records,
                           Json (*convert)(const T&)) {
  std::vector<Json> values;
  values.reserve(records.size());
  for (const T& r : records) values.push_back(convert(r));
  return ToJsonl(values);
}

}  // namespace quadcoref

#endif  // QUADCOREF_IO_H_
