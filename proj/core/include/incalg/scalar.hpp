#pragma once

#include <gmpxx.h>

#include <compare>
#include <memory>
#include <string>
#include <string_view>

namespace incalg {

/// Descriptor of an exact commutative coefficient ring with identity:
/// the integers, the rationals or Z/nZ for n >= 2.
///
/// RingSpec is a cheap handle; copies share the modulus.
class RingSpec {
public:
	enum class Kind { Integers, Rationals, ModN };

	static RingSpec integers();
	static RingSpec rationals();
	/// Throws InputError when n < 2.
	static RingSpec mod(const mpz_class &n);
	static RingSpec mod(long n) { return mod(mpz_class(n)); }

	/// Parses "Z", "Q" or "Z/n".
	static RingSpec parse(std::string_view text);

	RingSpec() : RingSpec(rationals()) {}

	Kind kind() const { return data_->kind; }
	/// Modulus for ModN, zero otherwise.
	const mpz_class &modulus() const { return data_->modulus; }
	std::string to_string() const;

	bool is_field() const;
	/// 2a = 0 implies a = 0.
	bool is_two_torsion_free() const;

	friend bool operator==(const RingSpec &a, const RingSpec &b)
	{
		return a.data_ == b.data_ ||
		       (a.data_->kind == b.data_->kind &&
		        a.data_->modulus == b.data_->modulus);
	}

private:
	struct Data {
		Kind kind;
		mpz_class modulus;
	};
	explicit RingSpec(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
	std::shared_ptr<const Data> data_;
};

inline bool is_field(const RingSpec &r) { return r.is_field(); }
inline bool is_two_torsion_free(const RingSpec &r)
{
	return r.is_two_torsion_free();
}

/// An element of a RingSpec. Values are always canonical: fractions are
/// reduced with positive denominator, residues lie in [0, n).
class Scalar {
public:
	Scalar() = default; // rational zero

	static Scalar zero(const RingSpec &r) { return Scalar(r, mpq_class(0)); }
	static Scalar one(const RingSpec &r) { return Scalar(r, mpq_class(1)); }
	static Scalar from_int(const RingSpec &r, long v);
	static Scalar from_integer(const RingSpec &r, const mpz_class &v);
	/// Fractions only make sense in Q; elsewhere throws InputError.
	static Scalar from_rational(const RingSpec &r, const mpq_class &v);
	/// Parses "-3", "5/6" or "4" according to the ring.
	static Scalar parse(const RingSpec &r, std::string_view text);

	const RingSpec &ring() const { return ring_; }
	const mpq_class &value() const { return value_; }

	bool is_zero() const { return sgn(value_) == 0; }
	bool is_one() const { return value_ == 1; }

	Scalar operator-() const;
	Scalar &operator+=(const Scalar &o);
	Scalar &operator-=(const Scalar &o);
	Scalar &operator*=(const Scalar &o);
	friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
	friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
	friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }

	/// Multiplicative inverse. Throws ArithmeticError for zero or when the
	/// ring is not a field.
	Scalar inverse() const;

	std::string to_string() const;

	friend bool operator==(const Scalar &a, const Scalar &b)
	{
		return a.ring_ == b.ring_ && a.value_ == b.value_;
	}

private:
	Scalar(RingSpec r, mpq_class v);
	void canonicalize();
	void require_same_ring(const Scalar &o) const;

	RingSpec ring_;
	mpq_class value_;
};

inline Scalar add(const Scalar &a, const Scalar &b) { return a + b; }
inline Scalar neg(const Scalar &a) { return -a; }
inline Scalar mul(const Scalar &a, const Scalar &b) { return a * b; }
inline Scalar invert(const Scalar &a) { return a.inverse(); }

} // namespace incalg
