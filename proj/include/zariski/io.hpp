#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zariski/cones.hpp"
#include "zariski/decomposition.hpp"

namespace zariski {

/**
 * Wire form of an intersection space: basis labels plus the Gram matrix, every
 * entry a rational string ("p/q" or a plain integer). Emission always writes
 * lowest terms.
 */
struct SpaceDocument {
  std::vector<std::string> basis;
  std::vector<std::vector<std::string>> matrix;

  friend bool operator==(const SpaceDocument&, const SpaceDocument&) = default;
};

/** One round of the iterative algorithm, with the subspace given by labels. */
struct TraceStepDocument {
  std::vector<std::string> subspace;
  std::vector<std::string> increment;
  std::vector<std::string> remainder;

  friend bool operator==(const TraceStepDocument&, const TraceStepDocument&) = default;
};

/**
 * Full record of one decomposition run: the input echoed back, both parts,
 * the support of the negative part as labels, the per-condition verification
 * verdicts and, when the iterative algorithm ran with tracing on, its rounds.
 */
struct ResultDocument {
  SpaceDocument space;
  std::vector<std::string> vector;
  std::string algorithm;
  std::vector<std::string> positive;
  std::vector<std::string> negative;
  std::vector<std::string> negative_support;
  DecompositionReport verification;
  std::optional<std::vector<TraceStepDocument>> trace;

  friend bool operator==(const ResultDocument&, const ResultDocument&) = default;
};

/** Parses the JSON text of a space file. Throws ParseError on malformed input. */
SpaceDocument parse_space_document(const std::string& text);

/** Canonical JSON emission; emit then parse is the identity. */
std::string emit_space_document(const SpaceDocument& document);

ResultDocument parse_result_document(const std::string& text);
std::string emit_result_document(const ResultDocument& document);

/**
 * Builds the validated space described by the document. Throws ParseError on
 * unparseable entries or ragged rows and passes through the validate_space
 * errors (NotSymmetric, NegativeOffDiagonal, DuplicateLabel,
 * DimensionMismatch).
 */
IntersectionSpace space_from_document(const SpaceDocument& document);

SpaceDocument document_from_space(const IntersectionSpace& space);

/** Coordinates as canonical rational strings. */
std::vector<std::string> rational_strings(const QVector& v);

/** Inverse of rational_strings. Throws ParseError. */
QVector vector_from_strings(const std::vector<std::string>& strings);

/**
 * Assembles the result record for one run. The negative support and any trace
 * subspaces are translated to basis labels.
 */
ResultDocument make_result_document(const IntersectionSpace& space, const QVector& input,
                                    const std::string& algorithm,
                                    const ZariskiDecomposition& decomposition,
                                    const DecompositionReport& verification,
                                    const std::optional<AlgorithmTrace>& trace);

}  // namespace zariski
