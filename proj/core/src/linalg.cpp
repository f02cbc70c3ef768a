#include "incalg/linalg.hpp"

#include "incalg/errors.hpp"

namespace incalg {

RowEchelon::RowEchelon(RingSpec ring, std::size_t columns)
    : ring_(std::move(ring)), columns_(columns)
{
	if (!ring_.is_field())
		throw InputError("elimination requires a field, got " + ring_.to_string());
}

SparseVector RowEchelon::reduce(const SparseVector &row) const
{
	// Stored pivot rows vanish on every other pivot column, so the row's
	// entries on pivot columns are exactly the multipliers to subtract.
	SparseVector out;
	for (const auto &[col, v] : row)
		if (!pivots_.contains(col))
			out.emplace_hint(out.end(), col, v);
	for (const auto &[col, v] : row) {
		auto it = pivots_.find(col);
		if (it == pivots_.end())
			continue;
		for (const auto &[c, pv] : it->second) {
			if (c == col)
				continue;
			auto [slot, inserted] = out.try_emplace(c, -(v * pv));
			if (!inserted) {
				slot->second -= v * pv;
				if (slot->second.is_zero())
					out.erase(slot);
			}
		}
	}
	return out;
}

bool RowEchelon::add_row(const SparseVector &row)
{
	for (const auto &[col, v] : row) {
		if (col >= columns_)
			throw InputError("row references column beyond the system");
		if (!(v.ring() == ring_))
			throw InputError("row coefficient ring mismatch");
	}
	SparseVector r = reduce(row);
	if (r.empty())
		return false;

	const std::size_t pivot = r.begin()->first;
	const Scalar inv = r.begin()->second.inverse();
	for (auto &[c, v] : r)
		v *= inv;

	for (auto &[pcol, prow] : pivots_) {
		auto hit = prow.find(pivot);
		if (hit == prow.end())
			continue;
		const Scalar factor = hit->second;
		for (const auto &[c, v] : r) {
			auto [slot, inserted] = prow.try_emplace(c, -(factor * v));
			if (!inserted) {
				slot->second -= factor * v;
				if (slot->second.is_zero())
					prow.erase(slot);
			}
		}
	}
	pivots_.emplace(pivot, std::move(r));
	return true;
}

std::vector<DenseVector> RowEchelon::nullspace_basis() const
{
	std::vector<DenseVector> basis;
	const auto zero = Scalar::zero(ring_);
	const auto one = Scalar::one(ring_);
	for (std::size_t free = 0; free < columns_; ++free) {
		if (pivots_.contains(free))
			continue;
		DenseVector v(columns_, zero);
		v[free] = one;
		for (const auto &[pcol, prow] : pivots_) {
			auto it = prow.find(free);
			if (it != prow.end())
				v[pcol] = -it->second;
		}
		basis.push_back(std::move(v));
	}
	return basis;
}

std::size_t rank(const RingSpec &ring, const std::vector<DenseVector> &rows)
{
	std::size_t columns = 0;
	for (const auto &r : rows)
		columns = std::max(columns, r.size());
	RowEchelon ech(ring, columns);
	for (const auto &r : rows) {
		SparseVector s;
		for (std::size_t c = 0; c < r.size(); ++c)
			if (!r[c].is_zero())
				s.emplace_hint(s.end(), c, r[c]);
		ech.add_row(s);
	}
	return ech.rank();
}

} // namespace incalg
