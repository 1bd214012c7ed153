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

#include "quadcoref/io.h"

#include <fstream>
#include <sstream>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

std::string Str(TextView text) { return ToUtf8(text); }
Text Txt(const Json& j) { return FromUtf8(j.get<std::string>()); }

Json SpansToJson(const std::vector<Span>& spans) {
  Json out = Json::array();
  for (const Span& s : spans) out.push_back(SpanToJson(s));
  return out;
}

std::vector<Span> SpansFromJson(const Json& j) {
  std::vector<Span> spans;
  for (const Json& s : j) spans.push_back(SpanFromJson(s));
  return spans;
}

Json SlotToJson(const NameSlot& slot, std::string_view role) {
  Json out;
  out["key"] = Str(slot.key);
  out["role"] = role;
  out["spans"] = SpansToJson(slot.spans);
  return out;
}

NameSlot SlotFromJson(const Json& j) {
  return {Txt(j.at("key")), SpansFromJson(j.at("spans"))};
}

Json Optional(const std::optional<double>& value) {
  return value ? Json(*value) : Json(nullptr);
}

Json TestToJson(const SignificanceTest& t) {
  Json out;
  out["observed"] = t.observed;
  out["direction"] = t.direction > 0 ? "greater" : "less";
  out["p_value"] = t.p_value;
  out["significant"] = t.significant;
  return out;
}

}  // namespace

Json SpanToJson(const Span& span) { return Json::array({span.begin, span.end}); }

Span SpanFromJson(const Json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw DataError("span must be a [begin, end] pair");
  }
  const Span span{j[0].get<int64_t>(), j[1].get<int64_t>()};
  if (span.begin < 0 || span.end < span.begin) {
    throw DataError("invalid span [" + std::to_string(span.begin) + ", " +
                    std::to_string(span.end) + ")");
  }
  return span;
}

Json InstanceToJson(const Instance& x) {
  Json out;
  out["id"] = x.id;
  out["quadruple_id"] = x.quadruple_id;
  out["variant"] = VariantName(x.variant);
  out["text"] = Str(x.text);
  out["pattern"] = PatternName(x.pattern);
  out["original_gender"] = GenderName(x.original_gender);
  out["pronoun"] = {{"span", SpanToJson(x.pronoun_span)},
                    {"surface", Str(x.pronoun)}};
  out["candidates"] = Json::array({SlotToJson(x.candidates[0], "C1"),
                                   SlotToJson(x.candidates[1], "C2")});
  out["opposites"] = Json::array({SlotToJson(x.opposites[0], "O1"),
                                  SlotToJson(x.opposites[1], "O2")});
  if (x.gold) out["gold"] = {{"c1", x.gold->c1}, {"c2", x.gold->c2}};
  out["source"] = {{"document_id", x.document_id},
                   {"sentences", {x.first_sentence, x.last_sentence}}};
  return out;
}

Instance InstanceFromJson(const Json& j) {
  Instance x;
  x.id = j.at("id").get<std::string>();
  x.quadruple_id = j.at("quadruple_id").get<std::string>();
  x.variant = ParseVariant(j.at("variant").get<std::string>());
  x.text = Txt(j.at("text"));
  x.pattern = ParsePattern(j.at("pattern").get<std::string>());
  x.original_gender = ParseGender(j.at("original_gender").get<std::string>());
  x.pronoun_span = SpanFromJson(j.at("pronoun").at("span"));
  x.pronoun = Txt(j.at("pronoun").at("surface"));
  const Json& candidates = j.at("candidates");
  const Json& opposites = j.at("opposites");
  if (candidates.size() != 2 || opposites.size() != 2) {
    throw DataError("instance " + x.id +
                    ": expected two candidates and two opposites");
  }
  for (int k = 0; k < 2; ++k) {
    x.candidates[k] = SlotFromJson(candidates[k]);
    x.opposites[k] = SlotFromJson(opposites[k]);
  }
  if (j.contains("gold") && !j["gold"].is_null()) {
    x.gold = AggregatedLabel{j["gold"].at("c1").get<bool>(),
                             j["gold"].at("c2").get<bool>()};
  }
  if (j.contains("source")) {
    const Json& source = j["source"];
    x.document_id = source.value("document_id", "");
    if (source.contains("sentences")) {
      x.first_sentence = source["sentences"].at(0).get<int>();
      x.last_sentence = source["sentences"].at(1).get<int>();
    }
  }
  ValidateInstance(x);
  return x;
}

Json QuadrupleToJson(const Quadruple& q) {
  Json out;
  out["quadruple_id"] = q.id;
  out["original_gender"] = GenderName(q.original_gender);
  Json instances;
  for (const Variant v : kAllVariants) {
    instances[std::string(VariantName(v))] = InstanceToJson(q.at(v));
  }
  out["instances"] = std::move(instances);
  return out;
}

Quadruple QuadrupleFromJson(const Json& j) {
  Quadruple q;
  q.id = j.at("quadruple_id").get<std::string>();
  q.original_gender = ParseGender(j.at("original_gender").get<std::string>());
  for (const Variant v : kAllVariants) {
    Instance x =
        InstanceFromJson(j.at("instances").at(std::string(VariantName(v))));
    if (x.variant != v || x.quadruple_id != q.id) {
      throw DataError("quadruple " + q.id + ": misplaced instance " + x.id);
    }
    q.at(v) = std::move(x);
  }
  return q;
}

Json AnnotationToJson(const AnnotationRecord& r) {
  Json out;
  out["instance_id"] = r.instance_id;
  out["annotator_id"] = r.annotator_id;
  out["selections"] = SpansToJson(r.selections);
  out["none_flag"] = r.none_flag;
  out["invalid_flag"] = r.invalid_flag;
  out["timestamp"] = r.timestamp;
  return out;
}

AnnotationRecord AnnotationFromJson(const Json& j) {
  AnnotationRecord r;
  r.instance_id = j.at("instance_id").get<std::string>();
  r.annotator_id = j.at("annotator_id").get<std::string>();
  r.selections = SpansFromJson(j.value("selections", Json::array()));
  r.none_flag = j.value("none_flag", false);
  r.invalid_flag = j.value("invalid_flag", false);
  r.timestamp = j.value("timestamp", "");
  if (r.none_flag && !r.selections.empty()) {
    throw DataError("annotation for " + r.instance_id +
                    ": none_flag set together with selections");
  }
  return r;
}

Json PredictionToJson(const PredictionRecord& p) {
  Json out;
  out["instance_id"] = p.instance_id;
  out["pronoun_cluster"] = SpansToJson(p.pronoun_cluster);
  return out;
}

PredictionRecord PredictionFromJson(const Json& j) {
  return {j.at("instance_id").get<std::string>(),
          SpansFromJson(j.at("pronoun_cluster"))};
}

Json ScoreToJson(const QuadrupleScore& s) {
  Json out;
  out["quadruple_id"] = s.quadruple_id;
  out["original_gender"] = GenderName(s.original_gender);
  out["f_o"] = s.f_o;
  out["f_c"] = s.f_c;
  out["f_so"] = s.f_so;
  out["f_sc"] = s.f_sc;
  return out;
}

QuadrupleScore ScoreFromJson(const Json& j) {
  QuadrupleScore s;
  s.quadruple_id = j.at("quadruple_id").get<std::string>();
  s.original_gender = ParseGender(j.at("original_gender").get<std::string>());
  s.f_o = j.at("f_o").get<int>();
  s.f_c = j.at("f_c").get<int>();
  s.f_so = j.at("f_so").get<int>();
  s.f_sc = j.at("f_sc").get<int>();
  ValidateScore(s);
  return s;
}

Json ReportToJson(const MetricsReport& r) {
  Json out;
  out["counts"] = {{"quadruples", r.quadruples},
                   {"masculine_original", r.masculine_original},
                   {"feminine_original", r.feminine_original}};
  out["accuracy"] = {{"acc_m", r.accuracy.acc_m},
                     {"acc_f", r.accuracy.acc_f},
                     {"acc_diff", r.accuracy.diff},
                     {"test", TestToJson(r.acc_diff_test)}};
  out["within"] = {{"m", Optional(r.within_m)},
                   {"f", Optional(r.within_f)},
                   {"diff", Optional(r.within_diff)},
                   {"i_within", r.i_within}};
  out["across"] = {{"m2f", Optional(r.across_m2f)},
                   {"f2m", Optional(r.across_f2m)},
                   {"diff", Optional(r.across_diff)},
                   {"i_across", r.i_across}};
  out["delta_i"] = {{"value", r.delta_i}, {"test", TestToJson(r.delta_i_test)}};
  out["systematic"] = {{"acc_orig", r.systematic.acc_orig},
                       {"acc_counter", r.systematic.acc_counter},
                       {"diff", r.systematic.diff},
                       {"spearman_rho", Optional(r.systematic.spearman_rho)},
                       {"test", TestToJson(r.systematic_test)}};
  out["bootstrap"] = {{"resamples", r.bootstrap.resamples},
                      {"seed", r.bootstrap.seed},
                      {"alpha", r.bootstrap.alpha},
                      {"unit", "quadruple"},
                      {"estimator", "(1 + #{stat <= 0}) / (B + 1)"}};
  return out;
}

std::vector<Json> ParseJsonl(std::string_view content, std::string_view source) {
  std::vector<Json> values;
  size_t start = 0;
  int line_number = 0;
  while (start <= content.size()) {
    size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    ++line_number;
    std::string_view line = content.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") != std::string_view::npos) {
      try {
        values.push_back(Json::parse(line));
      } catch (const Json::exception& e) {
        throw DataError(std::string(source) + ":" +
                        std::to_string(line_number) + ": malformed JSON (" +
                        e.what() + ")");
      }
    }
    if (end == content.size()) break;
    start = end + 1;
  }
  return values;
}

std::string ReadText(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteText(const std::filesystem::path& path, std::string_view content) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  out << content;
  if (!out) throw DataError("write failed for " + path.string());
}

std::vector<Json> ReadJsonl(const std::filesystem::path& path) {
  return ParseJsonl(ReadText(path), path.string());
}

std::string ToJsonl(const std::vector<Json>& values) {
  std::string out;
  for (const Json& v : values) {
    out += v.dump();
    out += '\n';
  }
  return out;
}

template <typename T>
std::vector<T> ReadRecords(const std::filesystem::path& path,
                           T (*convert)(const Json&)) {
  const std::string content = ReadText(path);
  std::vector<T> records;
  std::istringstream in(content);
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = path.string() + ":" + std::to_string(line_number);
    try {
      records.push_back(convert(Json::parse(line)));
    } catch (const Json::exception& e) {
      throw DataError(where + ": malformed record (" + e.what() + ")");
    } catch (const DataError& e) {
      throw DataError(where + ": " + e.what());
    }
  }
  return records;
}

std::vector<Instance> ReadInstances(const std::filesystem::path& path) {
  return ReadRecords(path, &InstanceFromJson);
}

std::vector<Quadruple> ReadQuadruples(const std::filesystem::path& path) {
  return ReadRecords(path, &QuadrupleFromJson);
}

std::vector<AnnotationRecord> ReadAnnotations(
    const std::filesystem::path& path) {
  return ReadRecords(path, &AnnotationFromJson);
}

std::vector<PredictionRecord> ReadPredictions(
    const std::filesystem::path& path) {
  return ReadRecords(path, &PredictionFromJson);
}

std::vector<QuadrupleScore> ReadScores(const std::filesystem::path& path) {
  return ReadRecords(path, &ScoreFromJson);
}

}  // namespace quadcoref
