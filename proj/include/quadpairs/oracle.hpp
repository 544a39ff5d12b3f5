#pragma once

// Brute-force layer: explicit matrices of root elements on minuscule
// representations, unipotence degree and drop by exact linear algebra, and a
// randomized check that a tensor product of a k1-unipotent and a
// k2-unipotent matrix is (k1+k2-1)-unipotent.

#include "quadpairs/exact_matrix.hpp"
#include "quadpairs/minuscule.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace qp {

struct UnipotenceReport {
  int degree = 1;       // least k with (M-1)^k = 0
  std::size_t drop = 0; // rank(M-1)
  bool quadratic = true;
};

// Throws NotUnipotentError if M-1 is not nilpotent.
UnipotenceReport unipotence(const ExactMatrix& m);

// Structure constants of x_a on the weight basis. x_a sends v_mu to
// v_mu + c v_{mu+a} when <mu, a^v> = -1. Positive takes c = 1; IndexParity
// takes c = (-1)^(i+j) for orbit indices i of mu and j of mu+a.
enum class SignConvention { Positive, IndexParity };

const char* to_string(SignConvention c);
SignConvention parse_sign_convention(const std::string& text);

// Product of x_a over pairwise orthogonal positive roots (given by index),
// in the order listed, acting on the weight basis ordered as rep.orbit.
// Products of more than one root are exploratory: the signs are not
// certified to come from a group representation.
ExactMatrix build_root_element(const MinusculeRep& rep, std::span<const std::size_t> roots,
                               Field field,
                               SignConvention signs = SignConvention::IndexParity);

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b);

// Unipotent matrix with Jordan blocks of the given sizes.
ExactMatrix jordan_unipotent(std::span<const int> blocks, Field field);

// Random integral conjugate of a unipotent Jordan matrix of size dim whose
// largest block has size k, so the result is exactly k-unipotent over Q.
ExactMatrix random_unipotent(int k, std::size_t dim, std::mt19937_64& rng, Field field);

struct TensorLemmaOptions {
  int k1 = 2;
  int k2 = 2;
  // Each trial draws dim_i uniformly from [k_i, max_dim_i].
  std::size_t max_dim1 = 6;
  std::size_t max_dim2 = 6;
  int trials = 100;
  std::uint64_t seed = 1;
  Field field = Field::rationals();
};

struct TensorTrial {
  int trial = 0;
  std::size_t dim1 = 0;
  std::size_t dim2 = 0;
  int degree1 = 0;
  int degree2 = 0;
  int degree = 0;
};

struct TensorLemmaReport {
  TensorLemmaOptions options;
  int expected_degree = 0;
  std::map<int, int> degree_histogram; // tensor degree -> trials
  // Trials whose tensor degree differs from k1+k2-1: failures over Q,
  // recorded as characteristic deviations over F_p.
  int mismatches = 0;
  int characteristic_deviations = 0;
  // Quadratic tensors with both factors different from 1.
  int quadratic_counterexamples = 0;
  std::vector<TensorTrial> anomalies;
  std::vector<std::string> notes;
  bool passed = false;
};

TensorLemmaReport verify_tensor_lemma(const TensorLemmaOptions& options);

// Root specs: comma-separated list of epsilon mnemonics ("e1-e2", "e1+e2",
// "e3", "2e1", classical types only), simple roots "a<i>" (1-based) or
// "theta" for the highest root. Returns positive-root indices.
std::vector<std::size_t> parse_root_spec(const RootDatum& datum, const std::string& spec);

// Epsilon mnemonic of a positive root of a classical type, "a<i>"-sums
// otherwise.
std::string root_label(const RootDatum& datum, std::size_t index);

struct RootElementReport {
  MinusculeRep rep;
  std::vector<std::size_t> roots;
  Field field = Field::rationals();
  SignConvention signs = SignConvention::IndexParity;
  UnipotenceReport unipotence;
  // Weight-count drop; only defined for a single root.
  std::optional<std::size_t> combinatorial_drop;
  bool exploratory = false;
};

RootElementReport root_element_report(const MinusculeRep& rep, std::span<const std::size_t> roots,
                                      Field field, SignConvention signs);

} // namespace qp
