// Copyright 2026 The hypersat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypersat/report.hpp"

#include <sstream>

#include "json.hpp"

namespace hypersat {

using Json = nlohmann::ordered_json;

ReportRecord& ReportRecord::add(std::string key, std::string value) {
  values.emplace_back(std::move(key), std::move(value));
  return *this;
}
ReportRecord& ReportRecord::add(std::string key, const BigInt& value) { return add(std::move(key), value.str()); }
ReportRecord& ReportRecord::add(std::string key, const Rational& value) {
  return add(std::move(key), rational_string(value));
}
ReportRecord& ReportRecord::add(std::string key, std::uint64_t value) {
  return add(std::move(key), std::to_string(value));
}
ReportRecord& ReportRecord::add(std::string key, double value) { return add(std::move(key), decimal_string(value)); }
ReportRecord& ReportRecord::add(std::string key, bool value) {
  return add(std::move(key), std::string(value ? "true" : "false"));
}

const std::string& ReportRecord::at(std::string_view key) const {
  for (const auto& [k, v] : values) {
    if (k == key) return v;
  }
  throw Error("record '" + name + "' has no value '" + std::string(key) + "'");
}

ReportRecord record_from_trace(const TraceRecord& t) {
  ReportRecord rec;
  rec.name = t.stage;
  rec.anchor = t.anchor;
  rec.values.emplace_back("r", std::to_string(t.r));
  rec.values.insert(rec.values.end(), t.values.begin(), t.values.end());
  rec.status = t.status;
  return rec;
}

bool Report::ok() const {
  for (const auto& r : records) {
    if (r.status == ReportRecord::Status::fail) return false;
  }
  return true;
}

const ReportRecord& Report::find(std::string_view name) const {
  for (const auto& r : records) {
    if (r.name == name) return r;
  }
  throw Error("report has no record '" + std::string(name) + "'");
}

namespace {

Json labels(const std::vector<Vertex>& vs) {
  Json a = Json::array();
  for (Vertex v : vs) a.push_back(std::to_string(v));
  return a;
}

std::vector<Vertex> parse_labels(const Json& a) {
  std::vector<Vertex> out;
  for (const auto& v : a) {
    const std::string& s = v.get_ref<const std::string&>();
    std::size_t used = 0;
    const unsigned long x = std::stoul(s, &used);
    if (used != s.size() || x > 0xffffffffUL) throw Error("bad vertex label '" + s + "'");
    out.push_back(static_cast<Vertex>(x));
  }
  return out;
}

ReportRecord::Status parse_status(const std::string& s) {
  for (auto st : {ReportRecord::Status::pass, ReportRecord::Status::fail, ReportRecord::Status::report}) {
    if (s == to_string(st)) return st;
  }
  throw Error("unknown record status '" + s + "'");
}

void require_keys(const Json& obj, std::initializer_list<const char*> allowed, const char* what) {
  if (!obj.is_object()) throw Error(std::string(what) + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw Error(std::string(what) + ": unknown key '" + key + "'");
  }
}

}  // namespace

std::string report_json(const Report& r) {
  Json j;
  j["schema"] = kReportSchema;
  j["version"] = r.version;
  j["command"] = r.command;
  Json recs = Json::array();
  for (const auto& rec : r.records) {
    Json jr;
    jr["name"] = rec.name;
    jr["anchor"] = rec.anchor;
    Json vals = Json::object();
    for (const auto& [k, v] : rec.values) {
      if (vals.contains(k)) throw Error("record '" + rec.name + "' repeats value '" + k + "'");
      vals[k] = v;
    }
    jr["values"] = vals;
    jr["status"] = to_string(rec.status);
    recs.push_back(jr);
  }
  j["records"] = recs;
  Json certs = Json::array();
  for (const auto& c : r.certificates) {
    Json jc;
    jc["r"] = std::to_string(c.r);
    jc["ell"] = std::to_string(c.ell);
    jc["hinges"] = labels(c.hinges);
    Json inner = Json::array();
    for (const auto& s : c.interior) inner.push_back(labels(s));
    jc["interior"] = inner;
    certs.push_back(jc);
  }
  j["certificates"] = certs;
  if (r.hypergraph) j["hypergraph"] = *r.hypergraph;
  return j.dump(2) + "\n";
}

Report parse_report(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("report: ") + e.what());
  }
  require_keys(j, {"schema", "version", "command", "records", "certificates", "hypergraph"}, "report");
  if (j.value("schema", "") != kReportSchema) throw Error("report: schema is not " + std::string(kReportSchema));
  Report r;
  try {
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::vector<std::string>>();
    for (const auto& jr : j.at("records")) {
      require_keys(jr, {"name", "anchor", "values", "status"}, "record");
      ReportRecord rec;
      rec.name = jr.at("name").get<std::string>();
      rec.anchor = jr.at("anchor").get<std::string>();
      if (!jr.at("values").is_object()) throw Error("record values must be an object");
      for (const auto& [k, v] : jr.at("values").items()) rec.values.emplace_back(k, v.get<std::string>());
      rec.status = parse_status(jr.at("status").get<std::string>());
      r.records.push_back(std::move(rec));
    }
    for (const auto& jc : j.at("certificates")) {
      require_keys(jc, {"r", "ell", "hinges", "interior"}, "certificate");
      const auto cr = static_cast<unsigned>(std::stoul(jc.at("r").get<std::string>()));
      const auto ell = static_cast<unsigned>(std::stoul(jc.at("ell").get<std::string>()));
      std::vector<std::vector<Vertex>> interior;
      for (const auto& s : jc.at("interior")) interior.push_back(parse_labels(s));
      r.certificates.push_back(make_certificate(cr, ell, parse_labels(jc.at("hinges")), std::move(interior)));
    }
    if (j.contains("hypergraph")) r.hypergraph = j.at("hypergraph").get<std::string>();
  } catch (const Json::exception& e) {
    throw Error(std::string("report: ") + e.what());
  } catch (const std::logic_error& e) {
    throw Error(std::string("report: bad integer field: ") + e.what());
  }
  return r;
}

std::string report_plain(const Report& r) {
  std::ostringstream out;
  for (const auto& rec : r.records) {
    out << rec.name;
    if (rec.status != ReportRecord::Status::report) out << " [" << to_string(rec.status) << "]";
    if (!rec.anchor.empty()) out << "  (" << rec.anchor << ")";
    out << '\n';
    for (const auto& [k, v] : rec.values) out << "  " << k << " = " << v << '\n';
  }
  if (!r.certificates.empty()) out << "certificates: " << r.certificates.size() << '\n';
  for (const auto& c : r.certificates) {
    out << " ";
    for (std::size_t i = 0; i < c.hinges.size(); ++i) {
      out << ' ' << c.hinges[i] << " [";
      for (std::size_t k = 0; k < c.interior[i].size(); ++k) out << (k ? " " : "") << c.interior[i][k];
      out << ']';
    }
    out << '\n';
  }
  if (r.hypergraph) out << *r.hypergraph;
  return out.str();
}

const char* to_string(ReportFormat f) { return f == ReportFormat::plain ? "plain" : "structured"; }

ReportFormat parse_report_format(std::string_view s) {
  if (s == "plain") return ReportFormat::plain;
  if (s == "structured" || s == "json") return ReportFormat::structured;
  throw PreconditionError("unknown report format '" + std::string(s) + "'");
}

std::string config_json(const ExperimentConfig& c) {
  Json j;
  j["command"] = c.command;
  if (c.input) j["input"] = *c.input;
  if (c.output) j["output"] = *c.output;
  j["seed"] = std::to_string(c.seed);
  Json budgets = Json::object();
  for (const auto& [k, v] : c.budgets) budgets[k] = std::to_string(v);
  j["budgets"] = budgets;
  Json params = Json::object();
  for (const auto& [k, v] : c.params) params[k] = v;
  j["params"] = params;
  j["format"] = to_string(c.format);
  return j.dump(2) + "\n";
}

namespace {

std::uint64_t parse_u64(const Json& v, const std::string& what) {
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (!v.is_string()) throw Error("config: " + what + " must be a non-negative integer or decimal string");
  const std::string& s = v.get_ref<const std::string&>();
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("config: " + what + " is not a decimal integer: '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw Error("config: " + what + " out of range: '" + s + "'");
  }
}

}  // namespace

ExperimentConfig parse_config(std::string_view json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("config: ") + e.what());
  }
  require_keys(j, {"command", "input", "output", "seed", "budgets", "params", "format"}, "config");
  ExperimentConfig c;
  const auto text = [&](const char* key) -> std::string {
    const Json& v = j.at(key);
    if (!v.is_string()) throw Error(std::string("config: ") + key + " must be a string");
    return v.get<std::string>();
  };
  if (!j.contains("command")) throw Error("config: missing 'command'");
  c.command = text("command");
  if (j.contains("input")) c.input = text("input");
  if (j.contains("output")) c.output = text("output");
  if (j.contains("seed")) c.seed = parse_u64(j.at("seed"), "seed");
  if (j.contains("format")) {
    try {
      c.format = parse_report_format(text("format"));
    } catch (const PreconditionError& e) {
      throw Error(std::string("config: ") + e.what());
    }
  }
  if (j.contains("budgets")) {
    if (!j.at("budgets").is_object()) throw Error("config: budgets must be an object");
    for (const auto& [k, v] : j.at("budgets").items()) c.budgets[k] = parse_u64(v, "budget '" + k + "'");
  }
  if (j.contains("params")) {
    if (!j.at("params").is_object()) throw Error("config: params must be an object");
    for (const auto& [k, v] : j.at("params").items()) {
      if (!v.is_string()) throw Error("config: param '" + k + "' must be a string");
      c.params[k] = v.get<std::string>();
    }
  }
  return c;
}

std::vector<std::string> config_arguments(const ExperimentConfig& c) {
  std::vector<std::string> args{c.command};
  if (c.input) args.insert(args.end(), {"--host", *c.input});
  if (c.output) args.insert(args.end(), {"--output", *c.output});
  args.insert(args.end(), {"--seed", std::to_string(c.seed)});
  for (const auto& [k, v] : c.budgets) args.insert(args.end(), {"--" + k, std::to_string(v)});
  for (const auto& [k, v] : c.params) args.insert(args.end(), {"--" + k, v});
  args.insert(args.end(), {"--format", to_string(c.format)});
  return args;
}

}  // namespace hypersat
