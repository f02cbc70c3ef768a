#pragma once

#include "incalg/preorder.hpp"
#include "incalg/scalar.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace incalg {

/// The basis element e_xy, stored as element indices with x <= y.
struct BasisIndex {
	std::size_t x = 0;
	std::size_t y = 0;
	friend auto operator<=>(const BasisIndex &, const BasisIndex &) = default;
};

class IncidenceAlgebra;
using AlgebraPtr = std::shared_ptr<const IncidenceAlgebra>;

/// I(X, R) for a finite preorder X and an exact ring R.
///
/// Basis elements are numbered 0..dimension()-1 in lexicographic order of
/// (x, y) element indices. The numbering is what elements and maps key on.
class IncidenceAlgebra {
public:
	static AlgebraPtr make(Preorder preorder, RingSpec ring);

	const Preorder &preorder() const { return preorder_; }
	const RingSpec &ring() const { return ring_; }

	/// Number of comparable pairs, i.e. |B|.
	std::size_t dimension() const { return basis_.size(); }
	const BasisIndex &basis(std::size_t id) const { return basis_.at(id); }
	const std::vector<BasisIndex> &basis() const { return basis_; }

	std::optional<std::size_t> basis_id(std::size_t x, std::size_t y) const;
	/// Throws InputError when a label is unknown or x is not <= y.
	std::size_t basis_id(std::string_view x, std::string_view y) const;

	/// e_p * e_q as a basis id, or nullopt when the product vanishes.
	std::optional<std::size_t> product(std::size_t p, std::size_t q) const
	{
		const auto &a = basis_[p];
		const auto &b = basis_[q];
		if (a.y != b.x)
			return std::nullopt;
		return pair_to_id_[a.x * preorder_.size() + b.y];
	}

	/// "e(x,y)" with labels, used in reports.
	std::string basis_name(std::size_t id) const;

	/// Same preorder and ring.
	bool same_as(const IncidenceAlgebra &o) const
	{
		return this == &o || (ring_ == o.ring_ && preorder_ == o.preorder_);
	}

private:
	IncidenceAlgebra(Preorder p, RingSpec r);

	Preorder preorder_;
	RingSpec ring_;
	std::vector<BasisIndex> basis_;
	std::vector<std::size_t> pair_to_id_; // npos when incomparable
};

void require_same_algebra(const IncidenceAlgebra &a, const IncidenceAlgebra &b);

/// A finitely supported function on comparable pairs. Zero coefficients
/// are never stored.
class IncidenceElement {
public:
	using Terms = std::map<std::size_t, Scalar>;

	explicit IncidenceElement(AlgebraPtr algebra);

	static IncidenceElement zero(AlgebraPtr algebra);
	/// The Kronecker delta: coefficient 1 on every (x, x).
	static IncidenceElement identity(AlgebraPtr algebra);
	static IncidenceElement basis(AlgebraPtr algebra, std::size_t id);
	static IncidenceElement basis(AlgebraPtr algebra, std::string_view x,
	                              std::string_view y);

	const AlgebraPtr &algebra() const { return algebra_; }
	const Terms &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	Scalar coefficient(std::size_t id) const;
	/// Coefficient at (x, y) by element index; zero when incomparable.
	Scalar coefficient_at(std::size_t x, std::size_t y) const;

	/// this += coef * e_id.
	void add_term(std::size_t id, const Scalar &coef);

	IncidenceElement operator-() const;
	IncidenceElement &operator+=(const IncidenceElement &o);
	IncidenceElement &operator-=(const IncidenceElement &o);
	friend IncidenceElement operator+(IncidenceElement a,
	                                  const IncidenceElement &b)
	{
		return a += b;
	}
	friend IncidenceElement operator-(IncidenceElement a,
	                                  const IncidenceElement &b)
	{
		return a -= b;
	}
	/// Convolution product.
	friend IncidenceElement operator*(const IncidenceElement &f,
	                                  const IncidenceElement &g);
	friend IncidenceElement operator*(const Scalar &r, const IncidenceElement &f);

	/// Product with a basis element on the right or left, without building it.
	IncidenceElement times_basis(std::size_t id) const;
	IncidenceElement basis_times(std::size_t id) const;

	std::string to_string() const;

	friend bool operator==(const IncidenceElement &a, const IncidenceElement &b);

private:
	AlgebraPtr algebra_;
	Terms terms_;
};

inline IncidenceElement add(const IncidenceElement &f, const IncidenceElement &g)
{
	return f + g;
}
inline IncidenceElement scale(const Scalar &r, const IncidenceElement &f)
{
	return r * f;
}
inline IncidenceElement convolve(const IncidenceElement &f,
                                 const IncidenceElement &g)
{
	return f * g;
}

/// An R-linear endomorphism of I(X, R), stored by the images of the basis.
class LinearMap {
public:
	explicit LinearMap(AlgebraPtr algebra);

	static LinearMap zero(AlgebraPtr algebra);
	static LinearMap identity(AlgebraPtr algebra);
	/// f -> c f
	static LinearMap left_multiplication(const IncidenceElement &c);
	/// f -> f c
	static LinearMap right_multiplication(const IncidenceElement &c);
	/// a -> c a - a c
	static LinearMap inner_derivation(const IncidenceElement &c);

	const AlgebraPtr &algebra() const { return algebra_; }
	const std::vector<IncidenceElement> &images() const { return images_; }
	const IncidenceElement &image(std::size_t id) const { return images_.at(id); }
	void set_image(std::size_t id, IncidenceElement value);

	IncidenceElement apply(const IncidenceElement &f) const;
	IncidenceElement operator()(const IncidenceElement &f) const { return apply(f); }

	bool is_zero() const;

	LinearMap &operator+=(const LinearMap &o);
	LinearMap &operator-=(const LinearMap &o);
	friend LinearMap operator+(LinearMap a, const LinearMap &b) { return a += b; }
	friend LinearMap operator-(LinearMap a, const LinearMap &b) { return a -= b; }
	friend LinearMap operator*(const Scalar &r, const LinearMap &m);

	friend bool operator==(const LinearMap &a, const LinearMap &b);

private:
	AlgebraPtr algebra_;
	std::vector<IncidenceElement> images_;
};

inline LinearMap map_add(const LinearMap &a, const LinearMap &b) { return a + b; }
inline LinearMap map_sub(const LinearMap &a, const LinearMap &b) { return a - b; }
inline LinearMap map_scale(const Scalar &r, const LinearMap &m) { return r * m; }
inline LinearMap left_multiplication(const IncidenceElement &c)
{
	return LinearMap::left_multiplication(c);
}

} // namespace incalg
