#include "incalg/scalar.hpp"

#include "incalg/errors.hpp"

#include <charconv>

namespace incalg {

RingSpec RingSpec::integers()
{
	static const auto d = std::make_shared<const Data>(Data{Kind::Integers, 0});
	return RingSpec(d);
}

RingSpec RingSpec::rationals()
{
	static const auto d = std::make_shared<const Data>(Data{Kind::Rationals, 0});
	return RingSpec(d);
}

RingSpec RingSpec::mod(const mpz_class &n)
{
	if (n < 2)
		throw InputError("Z/n requires n >= 2, got " + n.get_str());
	return RingSpec(std::make_shared<const Data>(Data{Kind::ModN, n}));
}

RingSpec RingSpec::parse(std::string_view text)
{
	if (text == "Z")
		return integers();
	if (text == "Q")
		return rationals();
	if (text.starts_with("Z/")) {
		auto digits = text.substr(2);
		if (!digits.empty() &&
		    digits.find_first_not_of("0123456789") == std::string_view::npos)
			return mod(mpz_class(std::string(digits)));
	}
	throw InputError("unknown ring descriptor '" + std::string(text) +
	                 "' (expected Z, Q or Z/n)");
}

std::string RingSpec::to_string() const
{
	switch (kind()) {
	case Kind::Integers:
		return "Z";
	case Kind::Rationals:
		return "Q";
	case Kind::ModN:
		return "Z/" + modulus().get_str();
	}
	return {};
}

bool RingSpec::is_field() const
{
	switch (kind()) {
	case Kind::Integers:
		return false;
	case Kind::Rationals:
		return true;
	case Kind::ModN:
		return mpz_probab_prime_p(modulus().get_mpz_t(), 50) > 0;
	}
	return false;
}

bool RingSpec::is_two_torsion_free() const
{
	if (kind() != Kind::ModN)
		return true;
	return mpz_odd_p(modulus().get_mpz_t()) != 0;
}

Scalar::Scalar(RingSpec r, mpq_class v) : ring_(std::move(r)), value_(std::move(v))
{
	canonicalize();
}

void Scalar::canonicalize()
{
	switch (ring_.kind()) {
	case RingSpec::Kind::Rationals:
		break;
	case RingSpec::Kind::Integers:
		if (value_.get_den() != 1)
			throw InputError("non-integer value " + value_.get_str() + " in Z");
		break;
	case RingSpec::Kind::ModN:
		if (value_.get_den() != 1)
			throw InputError("fraction " + value_.get_str() + " in " +
			                 ring_.to_string());
		mpz_fdiv_r(value_.get_num_mpz_t(), value_.get_num_mpz_t(),
		           ring_.modulus().get_mpz_t());
		break;
	}
}

Scalar Scalar::from_int(const RingSpec &r, long v) { return Scalar(r, mpq_class(v)); }

Scalar Scalar::from_integer(const RingSpec &r, const mpz_class &v)
{
	return Scalar(r, mpq_class(v));
}

Scalar Scalar::from_rational(const RingSpec &r, const mpq_class &v)
{
	mpq_class c(v);
	c.canonicalize();
	return Scalar(r, c);
}

Scalar Scalar::parse(const RingSpec &r, std::string_view text)
{
	std::string s(text);
	if (!s.empty() && s.front() == '+')
		s.erase(0, 1);
	const auto slash = s.find('/');
	auto valid_int = [](std::string_view t) {
		if (!t.empty() && t.front() == '-')
			t.remove_prefix(1);
		return !t.empty() &&
		       t.find_first_not_of("0123456789") == std::string_view::npos;
	};
	if (slash == std::string::npos) {
		if (!valid_int(s))
			throw InputError("malformed scalar '" + std::string(text) + "'");
		return Scalar(r, mpq_class(mpz_class(s)));
	}
	auto num = s.substr(0, slash);
	auto den = s.substr(slash + 1);
	if (!valid_int(num) || !valid_int(den) || den.front() == '-')
		throw InputError("malformed scalar '" + std::string(text) + "'");
	mpz_class d(den);
	if (d == 0)
		throw InputError("zero denominator in '" + std::string(text) + "'");
	if (r.kind() != RingSpec::Kind::Rationals) {
		if (d != 1)
			throw InputError("fraction '" + std::string(text) + "' outside Q");
		return Scalar(r, mpq_class(mpz_class(num)));
	}
	mpq_class q(mpz_class(num), d);
	q.canonicalize();
	return Scalar(r, q);
}

void Scalar::require_same_ring(const Scalar &o) const
{
	if (!(ring_ == o.ring_))
		throw InputError("ring mismatch: " + ring_.to_string() + " vs " +
		                 o.ring_.to_string());
}

Scalar Scalar::operator-() const
{
	Scalar r = *this;
	r.value_ = -r.value_;
	if (ring_.kind() == RingSpec::Kind::ModN)
		r.canonicalize();
	return r;
}

Scalar &Scalar::operator+=(const Scalar &o)
{
	require_same_ring(o);
	if (ring_.kind() == RingSpec::Kind::Rationals) {
		value_ += o.value_;
	} else {
		mpz_add(value_.get_num_mpz_t(), value_.get_num_mpz_t(),
		        o.value_.get_num_mpz_t());
		if (ring_.kind() == RingSpec::Kind::ModN)
			canonicalize();
	}
	return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
	require_same_ring(o);
	if (ring_.kind() == RingSpec::Kind::Rationals) {
		value_ -= o.value_;
	} else {
		mpz_sub(value_.get_num_mpz_t(), value_.get_num_mpz_t(),
		        o.value_.get_num_mpz_t());
		if (ring_.kind() == RingSpec::Kind::ModN)
			canonicalize();
	}
	return *this;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
	require_same_ring(o);
	if (ring_.kind() == RingSpec::Kind::Rationals) {
		value_ *= o.value_;
	} else {
		mpz_mul(value_.get_num_mpz_t(), value_.get_num_mpz_t(),
		        o.value_.get_num_mpz_t());
		if (ring_.kind() == RingSpec::Kind::ModN)
			canonicalize();
	}
	return *this;
}

Scalar Scalar::inverse() const
{
	if (!ring_.is_field())
		throw ArithmeticError("cannot invert in " + ring_.to_string() +
		                      ": not a field");
	if (is_zero())
		throw ArithmeticError("cannot invert zero");
	if (ring_.kind() == RingSpec::Kind::Rationals)
		return Scalar(ring_, 1 / value_);
	mpz_class inv;
	mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(),
	           ring_.modulus().get_mpz_t());
	return Scalar(ring_, mpq_class(inv));
}

std::string Scalar::to_string() const { return value_.get_str(); }

} // namespace incalg
