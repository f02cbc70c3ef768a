#include "incalg/algebra.hpp"

#include "incalg/errors.hpp"

#include <limits>

namespace incalg {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

IncidenceAlgebra::IncidenceAlgebra(Preorder p, RingSpec r)
    : preorder_(std::move(p)), ring_(std::move(r))
{
	const std::size_t n = preorder_.size();
	pair_to_id_.assign(n * n, kNone);
	for (auto [x, y] : preorder_.relation()) {
		pair_to_id_[x * n + y] = basis_.size();
		basis_.push_back({x, y});
	}
}

AlgebraPtr IncidenceAlgebra::make(Preorder preorder, RingSpec ring)
{
	return AlgebraPtr(new IncidenceAlgebra(std::move(preorder), std::move(ring)));
}

std::optional<std::size_t> IncidenceAlgebra::basis_id(std::size_t x,
                                                      std::size_t y) const
{
	const std::size_t n = preorder_.size();
	if (x >= n || y >= n)
		return std::nullopt;
	auto id = pair_to_id_[x * n + y];
	if (id == kNone)
		return std::nullopt;
	return id;
}

std::size_t IncidenceAlgebra::basis_id(std::string_view x, std::string_view y) const
{
	auto id = basis_id(preorder_.index_of(x), preorder_.index_of(y));
	if (!id)
		throw InputError("(" + std::string(x) + ", " + std::string(y) +
		                 ") is not a comparable pair");
	return *id;
}

std::string IncidenceAlgebra::basis_name(std::size_t id) const
{
	const auto &b = basis_.at(id);
	return "e(" + preorder_.label(b.x) + "," + preorder_.label(b.y) + ")";
}

void require_same_algebra(const IncidenceAlgebra &a, const IncidenceAlgebra &b)
{
	if (!a.same_as(b))
		throw InputError("operands belong to different incidence algebras");
}

// IncidenceElement

IncidenceElement::IncidenceElement(AlgebraPtr algebra) : algebra_(std::move(algebra))
{
	if (!algebra_)
		throw InputError("incidence element without an algebra");
}

IncidenceElement IncidenceElement::zero(AlgebraPtr algebra)
{
	return IncidenceElement(std::move(algebra));
}

IncidenceElement IncidenceElement::identity(AlgebraPtr algebra)
{
	IncidenceElement f(algebra);
	const auto one = Scalar::one(algebra->ring());
	for (std::size_t i = 0; i < algebra->preorder().size(); ++i)
		f.terms_.emplace(*algebra->basis_id(i, i), one);
	return f;
}

IncidenceElement IncidenceElement::basis(AlgebraPtr algebra, std::size_t id)
{
	if (id >= algebra->dimension())
		throw InputError("basis index out of range");
	IncidenceElement f(algebra);
	f.terms_.emplace(id, Scalar::one(algebra->ring()));
	return f;
}

IncidenceElement IncidenceElement::basis(AlgebraPtr algebra, std::string_view x,
                                         std::string_view y)
{
	auto id = algebra->basis_id(x, y);
	return basis(std::move(algebra), id);
}

Scalar IncidenceElement::coefficient(std::size_t id) const
{
	auto it = terms_.find(id);
	return it == terms_.end() ? Scalar::zero(algebra_->ring()) : it->second;
}

Scalar IncidenceElement::coefficient_at(std::size_t x, std::size_t y) const
{
	auto id = algebra_->basis_id(x, y);
	return id ? coefficient(*id) : Scalar::zero(algebra_->ring());
}

void IncidenceElement::add_term(std::size_t id, const Scalar &coef)
{
	if (coef.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(id, coef);
	if (!inserted) {
		it->second += coef;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

IncidenceElement IncidenceElement::operator-() const
{
	IncidenceElement r(algebra_);
	for (const auto &[id, c] : terms_)
		r.terms_.emplace_hint(r.terms_.end(), id, -c);
	return r;
}

IncidenceElement &IncidenceElement::operator+=(const IncidenceElement &o)
{
	require_same_algebra(*algebra_, *o.algebra_);
	for (const auto &[id, c] : o.terms_)
		add_term(id, c);
	return *this;
}

IncidenceElement &IncidenceElement::operator-=(const IncidenceElement &o)
{
	require_same_algebra(*algebra_, *o.algebra_);
	for (const auto &[id, c] : o.terms_)
		add_term(id, -c);
	return *this;
}

IncidenceElement operator*(const IncidenceElement &f, const IncidenceElement &g)
{
	require_same_algebra(*f.algebra_, *g.algebra_);
	const auto &alg = *f.algebra_;
	// (fg)(x,y) = sum over z of f(x,z) g(z,y); only supported pairs contribute.
	IncidenceElement r(f.algebra_);
	for (const auto &[p, fp] : f.terms_)
		for (const auto &[q, gq] : g.terms_)
			if (auto pq = alg.product(p, q))
				r.add_term(*pq, fp * gq);
	return r;
}

IncidenceElement operator*(const Scalar &s, const IncidenceElement &f)
{
	if (!(s.ring() == f.algebra_->ring()))
		throw InputError("scalar ring " + s.ring().to_string() +
		                 " does not match algebra ring " +
		                 f.algebra_->ring().to_string());
	IncidenceElement r(f.algebra_);
	if (s.is_zero())
		return r;
	for (const auto &[id, c] : f.terms_)
		r.add_term(id, s * c);
	return r;
}

IncidenceElement IncidenceElement::times_basis(std::size_t id) const
{
	IncidenceElement r(algebra_);
	for (const auto &[p, c] : terms_)
		if (auto pq = algebra_->product(p, id))
			r.add_term(*pq, c);
	return r;
}

IncidenceElement IncidenceElement::basis_times(std::size_t id) const
{
	IncidenceElement r(algebra_);
	for (const auto &[q, c] : terms_)
		if (auto pq = algebra_->product(id, q))
			r.add_term(*pq, c);
	return r;
}

std::string IncidenceElement::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto &[id, c] : terms_) {
		if (!out.empty())
			out += " + ";
		out += c.to_string() + "*" + algebra_->basis_name(id);
	}
	return out;
}

bool operator==(const IncidenceElement &a, const IncidenceElement &b)
{
	return a.algebra_->same_as(*b.algebra_) && a.terms_ == b.terms_;
}

// LinearMap

LinearMap::LinearMap(AlgebraPtr algebra)
    : algebra_(std::move(algebra)),
      images_(algebra_->dimension(), IncidenceElement(algebra_))
{
}

LinearMap LinearMap::zero(AlgebraPtr algebra) { return LinearMap(std::move(algebra)); }

LinearMap LinearMap::identity(AlgebraPtr algebra)
{
	LinearMap m(algebra);
	for (std::size_t id = 0; id < algebra->dimension(); ++id)
		m.images_[id] = IncidenceElement::basis(algebra, id);
	return m;
}

LinearMap LinearMap::left_multiplication(const IncidenceElement &c)
{
	LinearMap m(c.algebra());
	for (std::size_t id = 0; id < m.images_.size(); ++id)
		m.images_[id] = c.times_basis(id);
	return m;
}

LinearMap LinearMap::right_multiplication(const IncidenceElement &c)
{
	LinearMap m(c.algebra());
	for (std::size_t id = 0; id < m.images_.size(); ++id)
		m.images_[id] = c.basis_times(id);
	return m;
}

LinearMap LinearMap::inner_derivation(const IncidenceElement &c)
{
	return left_multiplication(c) - right_multiplication(c);
}

void LinearMap::set_image(std::size_t id, IncidenceElement value)
{
	require_same_algebra(*algebra_, *value.algebra());
	images_.at(id) = std::move(value);
}

IncidenceElement LinearMap::apply(const IncidenceElement &f) const
{
	require_same_algebra(*algebra_, *f.algebra());
	IncidenceElement r(algebra_);
	for (const auto &[id, c] : f.terms())
		for (const auto &[t, v] : images_[id].terms())
			r.add_term(t, c * v);
	return r;
}

bool LinearMap::is_zero() const
{
	for (const auto &img : images_)
		if (!img.is_zero())
			return false;
	return true;
}

LinearMap &LinearMap::operator+=(const LinearMap &o)
{
	require_same_algebra(*algebra_, *o.algebra_);
	for (std::size_t i = 0; i < images_.size(); ++i)
		images_[i] += o.images_[i];
	return *this;
}

LinearMap &LinearMap::operator-=(const LinearMap &o)
{
	require_same_algebra(*algebra_, *o.algebra_);
	for (std::size_t i = 0; i < images_.size(); ++i)
		images_[i] -= o.images_[i];
	return *this;
}

LinearMap operator*(const Scalar &r, const LinearMap &m)
{
	LinearMap out(m.algebra_);
	for (std::size_t i = 0; i < m.images_.size(); ++i)
		out.images_[i] = r * m.images_[i];
	return out;
}

bool operator==(const LinearMap &a, const LinearMap &b)
{
	return a.algebra_->same_as(*b.algebra_) && a.images_ == b.images_;
}

} // namespace incalg
