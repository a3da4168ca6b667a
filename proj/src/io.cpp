#include "zariski/io.hpp"

#include <json.hpp>

#include "zariski/errors.hpp"
#include "zariski/rational.hpp"

namespace zariski {
namespace {

using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
}

const Json& member(const Json& node, const char* key) {
  if (!node.is_object() || !node.contains(key)) {
    throw ParseError(std::string("document is missing \"") + key + "\"");
  }
  return node.at(key);
}

std::string string_member(const Json& node, const char* key) {
  const Json& value = member(node, key);
  if (!value.is_string()) {
    throw ParseError(std::string("\"") + key + "\" must be a string");
  }
  return value.get<std::string>();
}

std::vector<std::string> string_list(const Json& node, const char* what) {
  if (!node.is_array()) {
    throw ParseError(std::string(what) + " must be a list");
  }
  std::vector<std::string> entries;
  entries.reserve(node.size());
  for (const Json& item : node) {
    if (!item.is_string()) {
      throw ParseError(std::string(what) + " entries must be strings");
    }
    entries.push_back(item.get<std::string>());
  }
  return entries;
}

bool boolean_member(const Json& node, const char* key) {
  const Json& value = member(node, key);
  if (!value.is_boolean()) {
    throw ParseError(std::string("\"") + key + "\" must be true or false");
  }
  return value.get<bool>();
}

// Emission funnels every rational through the parser so the output is always
// in lowest terms, whatever the struct holds.
std::string canonical(const std::string& text) { return to_string(parse_rational(text)); }

std::vector<std::string> canonical_list(const std::vector<std::string>& entries) {
  std::vector<std::string> out;
  out.reserve(entries.size());
  for (const std::string& entry : entries) out.push_back(canonical(entry));
  return out;
}

SpaceDocument space_from_json(const Json& node) {
  SpaceDocument document;
  document.basis = string_list(member(node, "basis"), "basis");
  const Json& rows = member(node, "matrix");
  if (!rows.is_array()) {
    throw ParseError("matrix must be a list of rows");
  }
  for (const Json& row : rows) {
    document.matrix.push_back(string_list(row, "matrix row"));
  }
  return document;
}

Json space_to_json(const SpaceDocument& document) {
  Json node;
  node["basis"] = document.basis;
  Json rows = Json::array();
  for (const std::vector<std::string>& row : document.matrix) {
    rows.push_back(canonical_list(row));
  }
  node["matrix"] = std::move(rows);
  return node;
}

Json result_to_json(const ResultDocument& document) {
  Json node;
  node["space"] = space_to_json(document.space);
  node["vector"] = canonical_list(document.vector);
  node["algorithm"] = document.algorithm;
  node["positive"] = canonical_list(document.positive);
  node["negative"] = canonical_list(document.negative);
  node["negative_support"] = document.negative_support;
  Json verdicts;
  verdicts["reconstructs"] = document.verification.reconstructs;
  verdicts["positive_nef"] = document.verification.positive_nef;
  verdicts["negative_effective"] = document.verification.negative_effective;
  verdicts["orthogonal"] = document.verification.orthogonal;
  verdicts["support_negative_definite"] = document.verification.support_negative_definite;
  verdicts["positive_effective"] = document.verification.positive_effective;
  node["verification"] = std::move(verdicts);
  if (document.trace) {
    Json steps = Json::array();
    for (const TraceStepDocument& step : *document.trace) {
      Json entry;
      entry["subspace"] = step.subspace;
      entry["increment"] = canonical_list(step.increment);
      entry["remainder"] = canonical_list(step.remainder);
      steps.push_back(std::move(entry));
    }
    node["trace"] = std::move(steps);
  }
  return node;
}

ResultDocument result_from_json(const Json& node) {
  ResultDocument document;
  document.space = space_from_json(member(node, "space"));
  document.vector = string_list(member(node, "vector"), "vector");
  document.algorithm = string_member(node, "algorithm");
  document.positive = string_list(member(node, "positive"), "positive");
  document.negative = string_list(member(node, "negative"), "negative");
  document.negative_support = string_list(member(node, "negative_support"), "negative_support");
  const Json& verdicts = member(node, "verification");
  document.verification.reconstructs = boolean_member(verdicts, "reconstructs");
  document.verification.positive_nef = boolean_member(verdicts, "positive_nef");
  document.verification.negative_effective = boolean_member(verdicts, "negative_effective");
  document.verification.orthogonal = boolean_member(verdicts, "orthogonal");
  document.verification.support_negative_definite =
      boolean_member(verdicts, "support_negative_definite");
  document.verification.positive_effective = boolean_member(verdicts, "positive_effective");
  if (node.is_object() && node.contains("trace")) {
    const Json& steps = node.at("trace");
    if (!steps.is_array()) {
      throw ParseError("trace must be a list of steps");
    }
    std::vector<TraceStepDocument> parsed;
    for (const Json& entry : steps) {
      TraceStepDocument step;
      step.subspace = string_list(member(entry, "subspace"), "trace subspace");
      step.increment = string_list(member(entry, "increment"), "trace increment");
      step.remainder = string_list(member(entry, "remainder"), "trace remainder");
      parsed.push_back(std::move(step));
    }
    document.trace = std::move(parsed);
  }
  return document;
}

}  // namespace

SpaceDocument parse_space_document(const std::string& text) {
  return space_from_json(parse_json(text));
}

std::string emit_space_document(const SpaceDocument& document) {
  return space_to_json(document).dump(2) + "\n";
}

ResultDocument parse_result_document(const std::string& text) {
  return result_from_json(parse_json(text));
}

std::string emit_result_document(const ResultDocument& document) {
  return result_to_json(document).dump(2) + "\n";
}

IntersectionSpace space_from_document(const SpaceDocument& document) {
  const std::size_t row_count = document.matrix.size();
  const std::size_t column_count = row_count == 0 ? 0 : document.matrix.front().size();
  RationalMatrix matrix(row_count, column_count);
  for (std::size_t i = 0; i < row_count; ++i) {
    if (document.matrix[i].size() != column_count) {
      throw ParseError("matrix rows have unequal lengths");
    }
    for (std::size_t j = 0; j < column_count; ++j) {
      matrix(i, j) = parse_rational(document.matrix[i][j]);
    }
  }
  return validate_space(std::move(matrix), document.basis);
}

SpaceDocument document_from_space(const IntersectionSpace& space) {
  SpaceDocument document;
  document.basis = space.labels();
  for (std::size_t i = 0; i < space.dimension(); ++i) {
    std::vector<std::string> row;
    row.reserve(space.dimension());
    for (std::size_t j = 0; j < space.dimension(); ++j) {
      row.push_back(to_string(space.matrix()(i, j)));
    }
    document.matrix.push_back(std::move(row));
  }
  return document;
}

std::vector<std::string> rational_strings(const QVector& v) {
  std::vector<std::string> strings;
  strings.reserve(v.size());
  for (const Rational& entry : v) strings.push_back(to_string(entry));
  return strings;
}

QVector vector_from_strings(const std::vector<std::string>& strings) {
  std::vector<Rational> entries;
  entries.reserve(strings.size());
  for (const std::string& text : strings) entries.push_back(parse_rational(text));
  return QVector(std::move(entries));
}

ResultDocument make_result_document(const IntersectionSpace& space, const QVector& input,
                                    const std::string& algorithm,
                                    const ZariskiDecomposition& decomposition,
                                    const DecompositionReport& verification,
                                    const std::optional<AlgorithmTrace>& trace) {
  ResultDocument document;
  document.space = document_from_space(space);
  document.vector = rational_strings(input);
  document.algorithm = algorithm;
  document.positive = rational_strings(decomposition.positive);
  document.negative = rational_strings(decomposition.negative);
  for (std::size_t index : support(decomposition.negative)) {
    document.negative_support.push_back(space.label(index));
  }
  document.verification = verification;
  if (trace) {
    std::vector<TraceStepDocument> steps;
    for (const TraceStep& step : trace->steps) {
      TraceStepDocument entry;
      for (std::size_t index : step.subspace) entry.subspace.push_back(space.label(index));
      entry.increment = rational_strings(step.increment);
      entry.remainder = rational_strings(step.remainder);
      steps.push_back(std::move(entry));
    }
    document.trace = std::move(steps);
  }
  return document;
}

}  // namespace zariski
