#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "zariski/cones.hpp"
#include "zariski/decomposition.hpp"
#include "zariski/errors.hpp"
#include "zariski/geometry.hpp"
#include "zariski/io.hpp"
#include "zariski/rational.hpp"

namespace {

using namespace zariski;

// Pasted vectors often carry the typographic minus sign; accept it.
std::string replace_unicode_minus(std::string text) {
  static const std::string minus = "\xe2\x88\x92";
  std::size_t pos = 0;
  while ((pos = text.find(minus, pos)) != std::string::npos) {
    text.replace(pos, minus.size(), "-");
    ++pos;
  }
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream stream(path, std::ios::binary);
  if (!stream) {
    throw ParseError("cannot read \"" + path + "\"");
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return buffer.str();
}

IntersectionSpace load_space(const std::string& path) {
  return space_from_document(parse_space_document(read_file(path)));
}

QVector parse_vector_text(const std::string& text, const IntersectionSpace& space) {
  std::vector<Rational> entries = parse_rational_list(replace_unicode_minus(text));
  if (entries.size() != space.dimension()) {
    throw DimensionMismatch("vector has " + std::to_string(entries.size()) +
                            " coordinates, the space dimension is " +
                            std::to_string(space.dimension()));
  }
  return QVector(std::move(entries));
}

QVector resolve_vector(bool has_inline, const std::string& inline_text, bool has_file,
                       const std::string& file_path, const IntersectionSpace& space) {
  if (has_inline && has_file) {
    throw ParseError("give either --vector or --vector-file, not both");
  }
  if (!has_inline && !has_file) {
    throw ParseError("a vector is required: --vector or --vector-file");
  }
  return parse_vector_text(has_file ? read_file(file_path) : inline_text, space);
}

SupportSet parse_subset(const std::string& text, const IntersectionSpace& space) {
  std::vector<std::size_t> indices;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const std::size_t first = token.find_first_not_of(" \t");
    if (first == std::string::npos) {
      throw ParseError("empty label in subset \"" + text + "\"");
    }
    const std::size_t last = token.find_last_not_of(" \t");
    const std::string label = token.substr(first, last - first + 1);
    std::optional<std::size_t> index = space.index_of(label);
    if (!index) {
      throw ParseError("unknown basis label \"" + label + "\"");
    }
    indices.push_back(*index);
  }
  if (indices.empty()) {
    throw ParseError("subset \"" + text + "\" names no basis elements");
  }
  return SupportSet(std::move(indices));
}

std::string vector_text(const QVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += to_string(v[i]);
  }
  return out;
}

// Label combination like "2L+E1+E2"; unit coefficients drop the number.
std::string combo_text(const IntersectionSpace& space, const QVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (v[i] != 1) out += to_string(v[i]);
    out += space.label(i);
  }
  return out.empty() ? "0" : out;
}

int exit_code_for(const std::exception& error) {
  if (dynamic_cast<const NotEffective*>(&error)) return 3;
  if (dynamic_cast<const NotQuasiEffective*>(&error)) return 3;
  if (dynamic_cast<const InternalError*>(&error)) return 4;
  if (dynamic_cast<const UniquenessViolation*>(&error)) return 4;
  if (dynamic_cast<const DimensionCapExceeded*>(&error)) return 5;
  if (dynamic_cast<const UnsupportedCase*>(&error)) return 6;
  if (dynamic_cast<const Error*>(&error)) return 2;
  return 4;
}

constexpr std::size_t oracle_cap = 12;

struct DecomposeOptions {
  std::string space_path;
  std::string vector_inline;
  std::string vector_file;
  std::string algorithm = "direct";
  bool has_inline = false;
  bool has_file = false;
  bool trace = false;
};

int run_decompose(const DecomposeOptions& options) {
  if (options.trace && options.algorithm != "zariski" && options.algorithm != "all") {
    throw ParseError("--trace requires --algorithm zariski or all");
  }
  IntersectionSpace space = load_space(options.space_path);
  QVector v = resolve_vector(options.has_inline, options.vector_inline, options.has_file,
                             options.vector_file, space);

  ZariskiDecomposition result;
  std::optional<AlgorithmTrace> trace;
  if (options.algorithm == "direct") {
    result = decompose_direct(space, v);
  } else if (options.algorithm == "zariski") {
    auto [decomposition, rounds] = decompose_zariski(space, v);
    result = std::move(decomposition);
    if (options.trace) trace = std::move(rounds);
  } else if (options.algorithm == "oracle") {
    result = decompose_oracle(space, v);
  } else {
    ZariskiDecomposition direct = decompose_direct(space, v);
    auto [iterative, rounds] = decompose_zariski(space, v);
    if (direct.positive != iterative.positive || direct.negative != iterative.negative) {
      throw InternalError("algorithms disagree: direct p = " + vector_text(direct.positive) +
                          ", iterative p = " + vector_text(iterative.positive));
    }
    if (space.dimension() <= oracle_cap) {
      ZariskiDecomposition oracle = decompose_oracle(space, v);
      if (direct.positive != oracle.positive || direct.negative != oracle.negative) {
        throw InternalError("algorithms disagree: direct p = " + vector_text(direct.positive) +
                            ", oracle p = " + vector_text(oracle.positive));
      }
    } else {
      std::cerr << "note: dimension " << space.dimension()
                << " is past the exhaustive check's cap of " << oracle_cap
                << "; compared the other two algorithms only\n";
    }
    result = std::move(direct);
    if (options.trace) trace = std::move(rounds);
  }

  DecompositionReport report =
      verify_decomposition(space, v, result.positive, result.negative);
  std::cout << emit_result_document(
      make_result_document(space, v, options.algorithm, result, report, trace));
  return 0;
}

struct CheckOptions {
  std::string space_path;
  std::string vector_inline;
  std::string vector_file;
  std::string predicate;
  std::string other_text;
  std::string subset_text;
  bool has_inline = false;
  bool has_file = false;
  bool has_other = false;
  bool has_subset = false;
};

int run_check(const CheckOptions& options) {
  IntersectionSpace space = load_space(options.space_path);
  QVector v = resolve_vector(options.has_inline, options.vector_inline, options.has_file,
                             options.vector_file, space);

  bool value = false;
  std::string witness;
  if (options.predicate == "effective") {
    value = is_effective(v);
    if (!value) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 0) {
          witness = space.label(i) + " (coefficient " + to_string(v[i]) + ")";
          break;
        }
      }
    }
  } else if (options.predicate == "nef") {
    QVector products = space.matrix() * v;
    value = is_effective(products);
    if (!value) {
      for (std::size_t i = 0; i < products.size(); ++i) {
        if (products[i] < 0) {
          witness = space.label(i) + " (pairing " + to_string(products[i]) + ")";
          break;
        }
      }
    }
  } else if (options.predicate == "quasi-effective") {
    value = is_quasi_effective(space, v);
  } else if (options.predicate == "numerically-equivalent") {
    if (!options.has_other) {
      throw ParseError("numerically-equivalent needs --other");
    }
    QVector other = parse_vector_text(options.other_text, space);
    QVector left = space.matrix() * v;
    QVector right = space.matrix() * other;
    value = left == right;
    if (!value) {
      for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] != right[i]) {
          witness = space.label(i) + " (pairings " + to_string(left[i]) + " and " +
                    to_string(right[i]) + ")";
          break;
        }
      }
    }
  } else if (options.predicate == "negative-definite") {
    if (!options.has_subset) {
      throw ParseError("negative-definite needs --subset");
    }
    SupportSet subset = parse_subset(options.subset_text, space);
    std::optional<QVector> effective_nef = find_effective_nef(space, subset);
    value = !effective_nef.has_value();
    if (effective_nef) {
      witness = combo_text(space, *effective_nef) +
                " (effective, pairs nonnegatively with the subset)";
    }
  } else {
    throw ParseError("unknown predicate \"" + options.predicate + "\"");
  }

  std::cout << (value ? "true" : "false") << "\n";
  if (!witness.empty()) {
    std::cout << "witness: " << witness << "\n";
  }
  return 0;
}

struct LatticeOptions {
  std::string space_path;
  std::string ceiling_text;
  bool has_ceiling = false;
};

int run_lattice(const LatticeOptions& options) {
  IntersectionSpace space = load_space(options.space_path);
  SupportSet ceiling;
  if (options.has_ceiling) {
    ceiling = parse_subset(options.ceiling_text, space);
  } else {
    std::vector<std::size_t> all(space.dimension());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    ceiling = SupportSet(std::move(all));
  }
  for (const SupportSet& subset : negative_definite_sublattice(space, ceiling)) {
    std::string line;
    for (std::size_t index : subset) {
      if (!line.empty()) line += ',';
      line += space.label(index);
    }
    std::cout << line << "\n";
  }
  return 0;
}

BlowupDivisor parse_divisor(const std::string& a_text, const std::string& b_text,
                            const std::string& c_text) {
  return BlowupDivisor{parse_rational(replace_unicode_minus(a_text)),
                       parse_rational(replace_unicode_minus(b_text)),
                       parse_rational(replace_unicode_minus(c_text))};
}

int run_five_case(const std::string& a_text, const std::string& b_text,
                  const std::string& c_text) {
  auto [decomposition, tag] = five_case_decomposition(parse_divisor(a_text, b_text, c_text));
  IntersectionSpace space = two_point_blowup_space();
  std::cout << "case " << static_cast<int>(tag) + 1 << ": p = "
            << combo_text(space, decomposition.positive) << ", n = "
            << combo_text(space, decomposition.negative) << "\n";
  return 0;
}

void print_ratio_table(const std::vector<Rational>& dims, const Rational& target,
                       std::size_t n_max) {
  std::vector<Rational> deviations = asymptotic_ratio_report(dims, target, n_max);
  std::cout << "target " << to_string(target) << "\n";
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::cout << n << " " << to_string(dims[n - 1]) << " " << to_string(deviations[n - 1])
              << "\n";
  }
}

int run_asymptotic(const std::string& a_text, const std::string& b_text,
                   const std::string& c_text, std::size_t n_max) {
  BlowupDivisor divisor = parse_divisor(a_text, b_text, c_text);
  auto [decomposition, tag] = five_case_decomposition(divisor);
  (void)tag;
  IntersectionSpace space = two_point_blowup_space();
  Rational target = pairing(space, decomposition.positive, decomposition.positive);
  std::vector<Rational> dims;
  dims.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    dims.emplace_back(dim_two_point_system(divisor, Integer(n)));
  }
  print_ratio_table(dims, target, n_max);
  return 0;
}

int run_plane(long long degree, std::size_t n_max) {
  Integer d(degree);
  std::vector<Rational> dims;
  dims.reserve(n_max);
  for (std::size_t n = 1; n <= n_max; ++n) {
    dims.emplace_back(dim_plane_system(d, Integer(n)));
  }
  print_ratio_table(dims, Rational(d * d), n_max);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Zariski decomposition in rational intersection spaces"};
  app.require_subcommand(1);

  DecomposeOptions decompose_options;
  CLI::App* decompose = app.add_subcommand(
      "decompose", "Split an effective vector into its nef and negative parts");
  decompose->add_option("--space", decompose_options.space_path, "space document file")
      ->required();
  decompose->add_option("--vector", decompose_options.vector_inline,
                        "coordinates as rational strings");
  decompose->add_option("--vector-file", decompose_options.vector_file,
                        "file holding the coordinates");
  decompose
      ->add_option("--algorithm", decompose_options.algorithm,
                   "direct, zariski, oracle or all")
      ->check(CLI::IsMember({"direct", "zariski", "oracle", "all"}));
  decompose->add_flag("--trace", decompose_options.trace,
                      "record the iterative algorithm's rounds");

  CheckOptions check_options;
  CLI::App* check = app.add_subcommand("check", "Evaluate a predicate on a vector");
  check->add_option("--space", check_options.space_path, "space document file")->required();
  check->add_option("--vector", check_options.vector_inline,
                    "coordinates as rational strings");
  check->add_option("--vector-file", check_options.vector_file,
                    "file holding the coordinates");
  check
      ->add_option("--predicate", check_options.predicate,
                   "effective, nef, quasi-effective, numerically-equivalent or "
                   "negative-definite")
      ->required();
  check->add_option("--other", check_options.other_text,
                    "second vector for numerically-equivalent");
  check->add_option("--subset", check_options.subset_text,
                    "comma-separated labels for negative-definite");

  LatticeOptions lattice_options;
  CLI::App* lattice =
      app.add_subcommand("lattice", "List the negative definite subsets of the basis");
  lattice->add_option("--space", lattice_options.space_path, "space document file")
      ->required();
  lattice->add_option("--ceiling", lattice_options.ceiling_text,
                      "restrict to subsets of these labels");

  CLI::App* geom = app.add_subcommand("geom", "Closed-form surface computations");
  geom->require_subcommand(1);
  std::string a_text;
  std::string b_text;
  std::string c_text;
  std::size_t n_max = 0;
  long long plane_degree = 0;
  CLI::App* five = geom->add_subcommand(
      "five-case", "Decompose aL + bE1 + cE2 on the two-point blow-up");
  five->add_option("a", a_text, "coefficient of L")->required();
  five->add_option("b", b_text, "coefficient of E1")->required();
  five->add_option("c", c_text, "coefficient of E2")->required();
  CLI::App* asymptotic = geom->add_subcommand(
      "asymptotic", "Deviation of dim/(n^2/2) from the self-pairing of the nef part");
  asymptotic->add_option("a", a_text, "coefficient of L")->required();
  asymptotic->add_option("b", b_text, "coefficient of E1")->required();
  asymptotic->add_option("c", c_text, "coefficient of E2")->required();
  asymptotic->add_option("nmax", n_max, "largest multiple")->required();
  CLI::App* plane = geom->add_subcommand(
      "plane", "Same deviation table for plane curves of one degree");
  plane->add_option("d", plane_degree, "curve degree")->required();
  plane->add_option("nmax", n_max, "largest multiple")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  decompose_options.has_inline = decompose->count("--vector") > 0;
  decompose_options.has_file = decompose->count("--vector-file") > 0;
  check_options.has_inline = check->count("--vector") > 0;
  check_options.has_file = check->count("--vector-file") > 0;
  check_options.has_other = check->count("--other") > 0;
  check_options.has_subset = check->count("--subset") > 0;
  lattice_options.has_ceiling = lattice->count("--ceiling") > 0;

  try {
    if (decompose->parsed()) return run_decompose(decompose_options);
    if (check->parsed()) return run_check(check_options);
    if (lattice->parsed()) return run_lattice(lattice_options);
    if (five->parsed()) return run_five_case(a_text, b_text, c_text);
    if (asymptotic->parsed()) return run_asymptotic(a_text, b_text, c_text, n_max);
    if (plane->parsed()) return run_plane(plane_degree, n_max);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
