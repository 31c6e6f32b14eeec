#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unimod/json_io.hpp"

namespace unimod {

const char* tool_version();

/// thm2.2, prop2.4, lemma2.5, lemma2.6, prop4.2, prop4.3, def1.1.
const std::vector<std::string>& verify_targets();

/// {"target", "status", "seed", "version", "duration_ms", "certificate"}.
/// "all" nests one report per target. Throws invalid_argument for an
/// unknown target.
json verify_paper(const std::string& target, std::uint64_t seed);

/// Random indefinite StandardSpec of rank <= max_rank.
StandardSpec random_indefinite_spec(std::mt19937_64& rng, int max_rank);

/// Product of elementary matrices E_ij(+-1), so determinant 1.
IntMatrix random_unimodular(std::size_t n, std::size_t ops, std::mt19937_64& rng);

/// Random element of GL(2,Z) with both determinants represented.
IntMatrix random_gl2(std::mt19937_64& rng);

}  // namespace unimod
