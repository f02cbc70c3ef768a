#pragma once

#include "incalg/scalar.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace incalg {

using SparseVector = std::map<std::size_t, Scalar>;
using DenseVector = std::vector<Scalar>;

/// Incrementally maintained reduced row echelon form over a field.
///
/// Rows are reduced in arrival order; a new independent row takes its
/// lowest nonzero column as pivot and is cleared from all earlier pivot
/// rows, so the stored rows are always fully reduced. The result depends
/// only on the row order.
class RowEchelon {
public:
	/// Throws InputError if `ring` is not a field.
	RowEchelon(RingSpec ring, std::size_t columns);

	/// Returns true when the row was independent of the rows seen so far.
	bool add_row(const SparseVector &row);

	std::size_t columns() const { return columns_; }
	std::size_t rank() const { return pivots_.size(); }
	const std::map<std::size_t, SparseVector> &pivot_rows() const
	{
		return pivots_;
	}

	/// Basis of {x : row . x = 0 for all rows}, one vector per free column
	/// in increasing column order, with a 1 at that column.
	std::vector<DenseVector> nullspace_basis() const;

private:
	SparseVector reduce(const SparseVector &row) const;

	RingSpec ring_;
	std::size_t columns_;
	std::map<std::size_t, SparseVector> pivots_; // pivot column -> row
};

/// Rank of a list of dense vectors over a field.
std::size_t rank(const RingSpec &ring, const std::vector<DenseVector> &rows);

} // namespace incalg
