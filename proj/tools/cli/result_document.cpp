// Copyright 2026 The planeloc Authors.
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

#include "cli/result_document.hpp"

#include <cmath>

#include "cli/json_writer.hpp"
#include "nlohmann/json.hpp"

#ifndef PLANELOC_VERSION
#define PLANELOC_VERSION "unknown"
#endif

namespace planeloc::cli {

namespace {

using nlohmann::json;

// Doubles compare bitwise so that NaN-free documents round-trip exactly.
bool Same(double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); }

void WritePair(JsonWriter& w, PlanarPoint p) {
  const double xy[2] = {p.real(), p.imag()};
  w.Numbers(xy);
}

void WriteCertificate(JsonWriter& w, const CertificateInfo& c) {
  w.BeginObject();
  w.Key("space").Value(c.space);
  w.Key("d").BeginArray();
  for (PlanarPoint d : c.d) WritePair(w, d);
  w.EndArray();
  w.Key("t").Numbers(c.t);
  w.Key("residual").Value(c.residual);
  w.Key("slack").Value(c.slack);
  w.Key("holds").Value(c.holds);
  w.EndObject();
}

void WriteTolerances(JsonWriter& w, const Tolerances& t) {
  w.BeginObject();
  w.Key("rel").Value(t.rel);
  w.Key("class").Value(t.cls);
  w.EndObject();
}

const json& Field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + key + ": missing");
  }
  return obj.at(key);
}

double Number(const json& v, const std::string& field) {
  if (!v.is_number()) throw InputError(field + ": expected a number");
  return v.get<double>();
}

std::string String(const json& v, const std::string& field) {
  if (!v.is_string()) throw InputError(field + ": expected a string");
  return v.get<std::string>();
}

PlanarPoint Pair(const json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 2) throw InputError(field + ": expected [x, y]");
  return {Number(v[0], field + "[0]"), Number(v[1], field + "[1]")};
}

ProblemKind Kind(const json& v) {
  const auto k = ParseKind(String(v, "kind"));
  if (!k) throw InputError("kind: expected \"fermat\" or \"chebyshev\"");
  return *k;
}

CertificateInfo ReadCertificate(const json& c) {
  CertificateInfo out;
  out.space = String(Field(c, "space", "certificate."), "certificate.space");
  const json& d = Field(c, "d", "certificate.");
  if (!d.is_array()) throw InputError("certificate.d: expected an array");
  for (std::size_t i = 0; i < d.size(); ++i)
    out.d.push_back(Pair(d[i], "certificate.d[" + std::to_string(i) + "]"));
  const json& t = Field(c, "t", "certificate.");
  if (!t.is_array()) throw InputError("certificate.t: expected an array");
  for (std::size_t i = 0; i < t.size(); ++i)
    out.t.push_back(Number(t[i], "certificate.t[" + std::to_string(i) + "]"));
  out.residual = Number(Field(c, "residual", "certificate."), "certificate.residual");
  out.slack = Number(Field(c, "slack", "certificate."), "certificate.slack");
  const json& h = Field(c, "holds", "certificate.");
  if (!h.is_boolean()) throw InputError("certificate.holds: expected a boolean");
  out.holds = h.get<bool>();
  return out;
}

Tolerances ReadTolerances(const json& t) {
  return {Number(Field(t, "rel", "tolerances."), "tolerances.rel"),
          Number(Field(t, "class", "tolerances."), "tolerances.class")};
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

bool SameTolerances(const Tolerances& a, const Tolerances& b) {
  return Same(a.rel, b.rel) && Same(a.cls, b.cls);
}

}  // namespace

bool ResultDocument::operator==(const ResultDocument& o) const {
  return solver_name == o.solver_name && solver_version == o.solver_version &&
         kind == o.kind && case_info == o.case_info && point == o.point &&
         segment == o.segment && Same(value, o.value) && support == o.support &&
         hull_weights == o.hull_weights && certificate == o.certificate &&
         SameTolerances(tolerances, o.tolerances) && iterations == o.iterations;
}

bool CertifyReport::operator==(const CertifyReport& o) const {
  return kind == o.kind && candidate == o.candidate &&
         certificate == o.certificate && SameTolerances(tolerances, o.tolerances);
}

std::string SolverVersion() { return PLANELOC_VERSION; }

CertificateInfo Describe(const SupportFunctionalCertificate& cert) {
  CertificateInfo c;
  c.space = cert.space == NormSpace::kL1 ? "l1" : "linf";
  c.d = cert.coefficients;
  c.t = cert.convex_weights;
  c.residual = cert.residual;
  c.slack = cert.slack;
  c.holds = cert.holds;
  return c;
}

ResultDocument MakeDocument(const FtSolveResult& r, const Tolerances& tol) {
  ResultDocument doc;
  doc.solver_version = SolverVersion();
  doc.kind = ProblemKind::kFermat;
  doc.case_info.tag = ToString(r.tag.kind);
  doc.case_info.index = r.tag.index;
  if (r.tag.theta) doc.case_info.theta = r.tag.theta->radians();
  if (r.tag.phi) doc.case_info.phi = r.tag.phi->radians();
  if (const auto* p = std::get_if<PointSolution>(&r.solution)) {
    doc.point = p->w;
  } else {
    const auto& s = std::get<SegmentSolution>(r.solution);
    doc.segment = std::array<PlanarPoint, 2>{s.a, s.b};
  }
  doc.value = r.objective;
  doc.support = r.certificate.functional.support;
  doc.certificate = Describe(r.certificate.functional);
  doc.tolerances = tol;
  doc.iterations = r.iterations;
  return doc;
}

ResultDocument MakeDocument(const ChebySolveResult& r, const Tolerances& tol) {
  ResultDocument doc;
  doc.solver_version = SolverVersion();
  doc.kind = ProblemKind::kChebyshev;
  doc.case_info.tag = "ChebyshevCenter";
  doc.point = r.center;
  doc.value = r.radius;
  doc.support = r.support;
  doc.hull_weights = r.hull_weights;
  doc.certificate = Describe(r.certificate);
  doc.tolerances = tol;
  return doc;
}

std::string Serialize(const ResultDocument& doc) {
  JsonWriter w;
  w.BeginObject();
  w.Key("solver").BeginObject();
  w.Key("name").Value(doc.solver_name);
  w.Key("version").Value(doc.solver_version);
  w.EndObject();
  w.Key("kind").Value(ToString(doc.kind));
  w.Key("case").BeginObject();
  w.Key("tag").Value(doc.case_info.tag);
  if (doc.case_info.index) w.Key("index").Value(*doc.case_info.index);
  if (doc.case_info.theta) w.Key("theta").Value(*doc.case_info.theta);
  if (doc.case_info.phi) w.Key("phi").Value(*doc.case_info.phi);
  w.EndObject();
  w.Key("solution").BeginObject();
  if (doc.point) {
    w.Key("point");
    WritePair(w, *doc.point);
  }
  if (doc.segment) {
    w.Key("segment").BeginArray();
    WritePair(w, (*doc.segment)[0]);
    WritePair(w, (*doc.segment)[1]);
    w.EndArray();
  }
  w.EndObject();
  w.Key(doc.kind == ProblemKind::kFermat ? "objective" : "radius").Value(doc.value);
  w.Key("support").Indices(doc.support);
  if (doc.kind == ProblemKind::kChebyshev) w.Key("hull_weights").Numbers(doc.hull_weights);
  w.Key("iterations").Value(static_cast<std::size_t>(doc.iterations));
  w.Key("certificate");
  WriteCertificate(w, doc.certificate);
  w.Key("tolerances");
  WriteTolerances(w, doc.tolerances);
  w.EndObject();
  return w.str();
}

std::string Serialize(const CertifyReport& report) {
  JsonWriter w;
  w.BeginObject();
  w.Key("kind").Value(ToString(report.kind));
  w.Key("candidate");
  WritePair(w, report.candidate);
  w.Key("pass").Value(report.certificate.holds);
  w.Key("residual").Value(report.certificate.residual);
  w.Key("slack").Value(report.certificate.slack);
  w.Key("certificate");
  WriteCertificate(w, report.certificate);
  w.Key("tolerances");
  WriteTolerances(w, report.tolerances);
  w.EndObject();
  return w.str();
}

std::string SerializeCertificate(const CertificateInfo& cert) {
  JsonWriter w;
  WriteCertificate(w, cert);
  return w.str();
}

ResultDocument ParseResultDocument(std::string_view text) {
  const json j = ParseJson(text);
  if (!j.is_object()) throw InputError("top level: expected an object");
  ResultDocument doc;
  const json& solver = Field(j, "solver", "");
  doc.solver_name = String(Field(solver, "name", "solver."), "solver.name");
  doc.solver_version = String(Field(solver, "version", "solver."), "solver.version");
  doc.kind = Kind(Field(j, "kind", ""));

  const json& c = Field(j, "case", "");
  doc.case_info.tag = String(Field(c, "tag", "case."), "case.tag");
  if (c.contains("index")) {
    if (!c["index"].is_number_unsigned()) throw InputError("case.index: expected an index");
    doc.case_info.index = c["index"].get<std::size_t>();
  }
  if (c.contains("theta")) doc.case_info.theta = Number(c["theta"], "case.theta");
  if (c.contains("phi")) doc.case_info.phi = Number(c["phi"], "case.phi");

  const json& s = Field(j, "solution", "");
  if (s.contains("point")) doc.point = Pair(s["point"], "solution.point");
  if (s.contains("segment")) {
    const json& seg = s["segment"];
    if (!seg.is_array() || seg.size() != 2) {
      throw InputError("solution.segment: expected two endpoints");
    }
    doc.segment = std::array<PlanarPoint, 2>{Pair(seg[0], "solution.segment[0]"),
                                             Pair(seg[1], "solution.segment[1]")};
  }
  if (doc.point.has_value() == doc.segment.has_value()) {
    throw InputError("solution: expected exactly one of point or segment");
  }
  const char* value_key = doc.kind == ProblemKind::kFermat ? "objective" : "radius";
  doc.value = Number(Field(j, value_key, ""), value_key);

  const json& sup = Field(j, "support", "");
  if (!sup.is_array()) throw InputError("support: expected an array");
  for (std::size_t i = 0; i < sup.size(); ++i) {
    if (!sup[i].is_number_unsigned()) {
      throw InputError("support[" + std::to_string(i) + "]: expected an index");
    }
    doc.support.push_back(sup[i].get<std::size_t>());
  }
  if (j.contains("hull_weights")) {
    const json& h = j["hull_weights"];
    if (!h.is_array()) throw InputError("hull_weights: expected an array");
    for (std::size_t i = 0; i < h.size(); ++i)
      doc.hull_weights.push_back(Number(h[i], "hull_weights[" + std::to_string(i) + "]"));
  }
  if (j.contains("iterations")) {
    if (!j["iterations"].is_number_integer()) throw InputError("iterations: expected an integer");
    doc.iterations = j["iterations"].get<int>();
  }
  doc.certificate = ReadCertificate(Field(j, "certificate", ""));
  doc.tolerances = ReadTolerances(Field(j, "tolerances", ""));
  return doc;
}

CertifyReport ParseCertifyReport(std::string_view text) {
  const json j = ParseJson(text);
  if (!j.is_object()) throw InputError("top level: expected an object");
  CertifyReport r;
  r.kind = Kind(Field(j, "kind", ""));
  r.candidate = Pair(Field(j, "candidate", ""), "candidate");
  r.certificate = ReadCertificate(Field(j, "certificate", ""));
  r.tolerances = ReadTolerances(Field(j, "tolerances", ""));
  return r;
}

}  // namespace planeloc::cli
