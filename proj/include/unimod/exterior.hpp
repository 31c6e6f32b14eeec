#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "unimod/isometry.hpp"

namespace unimod {

/// One basis element of H^2(T^4) = dt_i ^ dt_j, with 1-based (i, j) as
/// written, so y2 = dt_4 ^ dt_2 keeps its reversed order.
struct WedgeBasis {
  std::string name;
  int i;
  int j;
};

/// x1, y1, x2, y2, x3, y3.
const std::array<WedgeBasis, 6>& basis_dictionary();

/// The form 3U in the dictionary basis.
const GramForm& three_u();

/// Column m is the image of basis element m:
/// C(n, m) = a(k_n, i_m) a(l_n, j_m) - a(k_n, j_m) a(l_n, i_m).
IntMatrix exterior_square(const IntMatrix& a);

struct Lambda2Report {
  IntMatrix input;
  IntMatrix output;
  bool gram_preserved = false;
  /// Present only when the output is an isometry.
  std::optional<ComponentInvariant> component;
};

Lambda2Report lambda2(const IntMatrix& a);

bool functoriality_check(const IntMatrix& a, const IntMatrix& b);

/// Named elements of A(3U): "n1", "s2", "p13", "a21", and products written
/// as concatenations ("n3s3", "p12n1"), composed left to right.
IntMatrix wall_element(const std::string& word);

/// diag(-1,1,1,-1) and the three further 4x4 matrices whose exterior squares are
/// n1n2, s1s2, p12n1 and a12.
struct BasePreimage {
  std::string image;
  IntMatrix matrix;
};
const std::array<BasePreimage, 4>& base_preimages();

struct RelationVerdict {
  std::string family;
  std::string instance;
  bool holds = false;
};

std::vector<RelationVerdict> relation_suite();

struct NGenerator {
  std::string label;
  IntMatrix element;   // 6x6
  IntMatrix preimage;  // 4x4, det 1
  std::string base;    // image label of the base matrix it was conjugated from
};

/// n_i n_j, s_i s_j, p_ij n_i, a_ij, s_i a_ij s_i, s_j a_ij s_j with a
/// preimage found by conjugating the base matrices with signed permutations.
std::vector<NGenerator> n_subgroup_generators();

/// Product of `length` elementary matrices E_ij(+-1).
IntMatrix random_sl4_word(std::mt19937_64& rng, std::size_t length);

struct IndexCertificate {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::size_t word_length = 0;
  std::size_t nontrivial_samples = 0;
  std::vector<std::pair<std::string, ComponentInvariant>> coset_values;  // I, n3, s3, n3s3
  bool values_distinct = false;
  bool holds = false;
};

IndexCertificate index_lower_bound_certificate(std::size_t samples, std::uint64_t seed, std::size_t word_length = 16);

struct ReplayStep {
  int step = 0;
  std::string relation;      // e.g. "R_{1,3,2;1,2}"
  std::string instance;      // the relation with known values substituted
  std::string substitution;  // which facts were used
  std::string derived;       // the new fact
};

struct ReplayTrace {
  std::string target;
  IntMatrix target_matrix;
  std::vector<ReplayStep> steps;
  IntMatrix forced_image;  // Lambda^2(+-I)
  bool closed = false;
};

/// Replays the argument that n3, s3 and n3s3 are not in the image: the
/// columns they share with the identity force A = +-I.
ReplayTrace non_realizability_replay(const std::string& target);

}  // namespace unimod
