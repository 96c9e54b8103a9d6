#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "sylvester/multipoly.hpp"
#include "sylvester/scalar_partition.hpp"
#include "sylvester/vector_partition.hpp"

namespace sylvester {

// Deterministic single-line JSON renderings. Rationals serialize as "p/q"
// (or "p" when q = 1), complex values as {"re": "...", "im": "..."}; term
// lists come out sorted so equal inputs give byte-equal output.

std::string to_json(const MultiPoly& poly);
std::string to_json(const QuasiPoly1D& quasi);
std::string to_json(const VectorWaveDecomposition& decomp);

std::string evaluation_report_json(std::span<const std::int64_t> s,
                                   std::span<const GaussianRational> alpha,
                                   const GaussianRational& value,
                                   std::optional<std::uint64_t> brute);

}  // namespace sylvester
