#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "waringlab/curves.hpp"
#include "waringlab/rankengine.hpp"
#include "waringlab/veronese.hpp"

namespace waringlab {

/// Insertion-ordered, so serialized output is stable.
using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings (or plain integers as "p").
Json to_json(const Scalar& x);
Json to_json(const Vector& v);
/// {"dim": projective dimension, "basis": canonical rows}.
Json to_json(const LinearSubspace& s);
Json to_json(const BinaryForm& f);
Json to_json(const DualForm& g);
Json to_json(const RankProfile& p);
Json to_json(const WqResult& w);
Json to_json(const Witness& w);
Json to_json(const H1Report& r);
Json to_json(const PointSet& s);
Json to_json(const MixedInstance& inst);
Json to_json(const MixedReport& rep);
Json to_json(const SpanPair& sp);
Json to_json(const ParamCurve& c);

/// Inverse of to_json(Scalar); throws ParseError.
Scalar scalar_from_json(const Json& j);

constexpr int kReportSchema = 1;

struct Report {
  std::string command;
  /// The statement the command checks, written as a formula.
  std::string anchor;
  std::uint64_t seed = 0;
  Json inputs = Json::object();
  Json outputs = Json::object();
  bool pass = false;
  long elapsed_ms = 0;
};

Json to_json(const Report& r);

}  // namespace waringlab
