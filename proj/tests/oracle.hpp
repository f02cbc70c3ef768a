#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's element, map, predicate or elimination code: functions on X x X
// are dense tables, products are evaluated straight from the defining sum
// over x <= z <= y, and ranks come from a dense Gaussian elimination.

#include "incalg/preorder.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <utility>
#include <map>
#include <vector>

namespace oracle {

template <class T>
using BasicTable = std::vector<T>; // n*n, row-major f(x, y)
using Table = BasicTable<mpq_class>;

struct Order {
	std::size_t n = 0;
	std::vector<char> leq; // n*n
	std::vector<std::pair<std::size_t, std::size_t>> basis;

	explicit Order(const incalg::Preorder &p) : n(p.size()), leq(n * n)
	{
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				leq[x * n + y] = p.leq(x, y);
		for (std::size_t x = 0; x < n; ++x)
			for (std::size_t y = 0; y < n; ++y)
				if (leq[x * n + y])
					basis.emplace_back(x, y);
	}
	bool le(std::size_t x, std::size_t y) const { return leq[x * n + y]; }
	Table zero() const { return Table(n * n); }
	template <class T = mpq_class>
	BasicTable<T> e(std::size_t b) const
	{
		BasicTable<T> t(n * n);
		t[basis[b].first * n + basis[b].second] = 1;
		return t;
	}
};

/// (fg)(x, y) = sum_{x <= z <= y} f(x, z) g(z, y).
template <class T>
BasicTable<T> convolve(const Order &o, const BasicTable<T> &f, const BasicTable<T> &g)
{
	BasicTable<T> r(o.n * o.n);
	for (std::size_t x = 0; x < o.n; ++x)
		for (std::size_t y = 0; y < o.n; ++y) {
			if (!o.le(x, y))
				continue;
			T s = 0;
			for (std::size_t z = 0; z < o.n; ++z)
				if (o.le(x, z) && o.le(z, y) && f[x * o.n + z] != 0)
					s += f[x * o.n + z] * g[z * o.n + y];
			r[x * o.n + y] = s;
		}
	return r;
}

template <class T>
BasicTable<T> plus(BasicTable<T> a, const BasicTable<T> &b, int sign = 1)
{
	for (std::size_t i = 0; i < a.size(); ++i) {
		if (b[i] == 0)
			continue;
		if (sign > 0)
			a[i] += b[i];
		else
			a[i] -= b[i];
	}
	return a;
}

/// A linear map given as a dense |B| x |B| coefficient matrix.
template <class T>
struct BasicMap {
	const Order *o;
	std::vector<T> m; // m[s * |B| + t] = coefficient of e_t in image of e_s

	BasicTable<T> apply(const BasicTable<T> &f) const
	{
		const std::size_t dim = o->basis.size();
		BasicTable<T> r(o->n * o->n);
		for (std::size_t s = 0; s < dim; ++s) {
			const auto &[x, y] = o->basis[s];
			const T c = f[x * o->n + y];
			if (c == 0)
				continue;
			for (std::size_t t = 0; t < dim; ++t) {
				if (m[s * dim + t] == 0)
					continue;
				const auto &[u, v] = o->basis[t];
				r[u * o->n + v] += c * m[s * dim + t];
			}
		}
		return r;
	}
};
using Map = BasicMap<mpq_class>;


/// Rank of an integer-valued dense matrix over Q (p == 0) or GF(p).
inline std::size_t rank(std::vector<std::vector<mpq_class>> rows, long p = 0)
{
	if (rows.empty())
		return 0;
	const std::size_t cols = rows.front().size();
	auto reduce = [&](mpq_class &v) {
		if (p == 0)
			return;
		mpz_class num = v.get_num();
		mpz_class r;
		mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(p));
		v = r;
	};
	auto inverse = [&](const mpq_class &v) {
		if (p == 0)
			return mpq_class(1 / v);
		mpz_class inv, mod(p);
		mpz_class num = v.get_num();
		mpz_invert(inv.get_mpz_t(), num.get_mpz_t(), mod.get_mpz_t());
		return mpq_class(inv);
	};
	for (auto &r : rows)
		for (auto &v : r)
			reduce(v);
	std::size_t rk = 0;
	for (std::size_t c = 0; c < cols && rk < rows.size(); ++c) {
		std::size_t piv = rk;
		while (piv < rows.size() && rows[piv][c] == 0)
			++piv;
		if (piv == rows.size())
			continue;
		std::swap(rows[piv], rows[rk]);
		const mpq_class inv = inverse(rows[rk][c]);
		for (auto &v : rows[rk]) {
			v *= inv;
			reduce(v);
		}
		std::vector<std::size_t> support;
		for (std::size_t k = 0; k < cols; ++k)
			if (rows[rk][k] != 0)
				support.push_back(k);
		for (std::size_t r = 0; r < rows.size(); ++r) {
			if (r == rk || rows[r][c] == 0)
				continue;
			const mpq_class f = rows[r][c];
			for (std::size_t k : support) {
				rows[r][k] -= f * rows[rk][k];
				reduce(rows[r][k]);
			}
		}
		++rk;
	}
	return rk;
}

enum class Kind { Der, JDer, GDer, GJDer };

/// Dimension of a solution space, from residual columns of elementary maps.
///
/// Each unknown (a single image coefficient) contributes one column: the
/// residual of the defining identity, evaluated on every test input, for
/// the map that is 1 on that coefficient and 0 elsewhere. Jordan classes
/// use squares of e_i and of e_i + e_j rather than a polarized identity.
inline std::size_t solution_dimension(const incalg::Preorder &p, Kind kind, long prime = 0)
{
	const Order o(p);
	const std::size_t dim = o.basis.size();
	const bool pair = kind == Kind::GDer || kind == Kind::GJDer;
	const bool jordan = kind == Kind::JDer || kind == Kind::GJDer;
	const std::size_t block = dim * dim;
	const std::size_t unknowns = (pair ? 2 : 1) * block;
	if (unknowns == 0)
		return 0;

	// Inputs: pairs (a, b) for Leibniz, single elements a for Jordan.
	// Products do not depend on the map, so they are formed once.
	// Residuals of elementary maps on basis inputs are small integers.
	using IntTable = BasicTable<long>;
	using IntMap = BasicMap<long>;
	struct Input {
		IntTable a, b, ab;
	};
	std::vector<Input> pairs, squares;
	for (std::size_t i = 0; i < dim; ++i)
		for (std::size_t j = 0; j < dim; ++j)
			pairs.push_back({o.e<long>(i), o.e<long>(j), convolve(o, o.e<long>(i), o.e<long>(j))});
	for (std::size_t i = 0; i < dim; ++i) {
		auto a = o.e<long>(i);
		squares.push_back({a, a, convolve(o, a, a)});
		for (std::size_t j = i + 1; j < dim; ++j) {
			auto s = plus(o.e<long>(i), o.e<long>(j));
			squares.push_back({s, s, convolve(o, s, s)});
		}
	}

	// residual(tau, xi) stacked over all inputs; tau-identity rows first.
	auto residual = [&](const IntMap &tau, const IntMap &xi) {
		std::vector<long> out;
		auto push = [&](const IntTable &t) { out.insert(out.end(), t.begin(), t.end()); };
		auto identity = [&](const std::vector<Input> &inputs, const IntMap &X, const IntMap &T) {
			for (const auto &[a, b, ab] : inputs)
				push(plus(X.apply(ab), plus(convolve(o, X.apply(a), b), convolve(o, a, T.apply(b))),
				          -1));
		};
		const auto &inputs = jordan ? squares : pairs;
		identity(inputs, tau, tau);
		if (pair)
			identity(inputs, xi, tau);
		return out;
	};

	// Residuals are mostly zero; keep only coordinates some column touches.
	std::vector<std::map<std::size_t, mpq_class>> sparse;
	std::map<std::size_t, std::size_t> used;
	for (std::size_t u = 0; u < unknowns; ++u) {
		IntMap tau{&o, std::vector<long>(block)};
		IntMap xi{&o, std::vector<long>(block)};
		if (u < block)
			tau.m[u] = 1;
		else
			xi.m[u - block] = 1;
		auto r = residual(tau, xi);
		auto &col = sparse.emplace_back();
		for (std::size_t k = 0; k < r.size(); ++k)
			if (r[k] != 0) {
				col.emplace(k, r[k]);
				used.emplace(k, 0);
			}
	}
	std::size_t next = 0;
	for (auto &[k, slot] : used)
		slot = next++;
	std::vector<std::vector<mpq_class>> columns;
	for (const auto &col : sparse) {
		auto &dense = columns.emplace_back(used.size());
		for (const auto &[k, v] : col)
			dense[used.at(k)] = v;
	}
	// rank(columns) = rank of the constraint matrix.
	return unknowns - rank(columns, prime);
}

} // namespace oracle
