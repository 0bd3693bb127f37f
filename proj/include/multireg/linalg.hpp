#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "multireg/field.hpp"

namespace multireg {

/// Sparse row: (column, nonzero coefficient) pairs sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, Coeff>>;

/// Rank over F_p of the matrix with the given rows.
std::size_t sparse_rank(std::vector<SparseRow> rows, std::size_t ncols, const PrimeField& k);

/// Rank of a small dense matrix (row-major), destroyed in the process.
std::size_t dense_rank(std::vector<std::vector<Coeff>>& m, const PrimeField& k);

} // namespace multireg
