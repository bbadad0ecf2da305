#pragma once

/**
 * Dense exact linear algebra over a field.
 *
 * Deterministic by construction: reduction scans columns left to right
 * and rows top to bottom (lexicographic pivoting), nullspace vectors put
 * a unit in each free column, and the canonical solution of a linear
 * system is zero on all non-pivot columns. No thresholds anywhere.
 */

#include "corner/error.hpp"
#include "corner/rational.hpp"
#include <vector>

namespace corner {

template <class F> class Matrix {
  public:
	Matrix() : rows_(0), cols_(0) {}
	Matrix(size_t rows, size_t cols)
	    : rows_(rows), cols_(cols), data_(rows * cols, F())
	{}

	size_t rows() const { return rows_; }
	size_t cols() const { return cols_; }

	F &at(size_t i, size_t j) { return data_[i * cols_ + j]; }
	F const &at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

	Matrix transpose() const
	{
		Matrix t(cols_, rows_);
		for (size_t i = 0; i < rows_; ++i)
			for (size_t j = 0; j < cols_; ++j)
				t.at(j, i) = at(i, j);
		return t;
	}

	Matrix conj_transpose() const
	{
		Matrix t(cols_, rows_);
		for (size_t i = 0; i < rows_; ++i)
			for (size_t j = 0; j < cols_; ++j)
				t.at(j, i) = at(i, j).conj();
		return t;
	}

	friend Matrix operator*(Matrix const &a, Matrix const &b)
	{
		require(a.cols_ == b.rows_, Err::Internal, "matrix shape mismatch");
		Matrix r(a.rows_, b.cols_);
		for (size_t i = 0; i < a.rows_; ++i)
			for (size_t k = 0; k < a.cols_; ++k)
			{
				if (a.at(i, k).is_zero())
					continue;
				for (size_t j = 0; j < b.cols_; ++j)
				{
					if (b.at(k, j).is_zero())
						continue;
					r.at(i, j) += a.at(i, k) * b.at(k, j);
				}
			}
		return r;
	}

	std::vector<F> apply(std::vector<F> const &x) const
	{
		require(x.size() == cols_, Err::Internal, "vector length mismatch");
		std::vector<F> y(rows_, F());
		for (size_t i = 0; i < rows_; ++i)
			for (size_t j = 0; j < cols_; ++j)
				if (!at(i, j).is_zero() && !x[j].is_zero())
					y[i] += at(i, j) * x[j];
		return y;
	}

  private:
	size_t rows_, cols_;
	std::vector<F> data_;
};

/// In-place reduced row echelon form; returns the pivot columns in order.
template <class F> std::vector<size_t> rref(Matrix<F> &m)
{
	std::vector<size_t> pivots;
	size_t row = 0;
	for (size_t col = 0; col < m.cols() && row < m.rows(); ++col)
	{
		size_t p = row;
		while (p < m.rows() && m.at(p, col).is_zero())
			++p;
		if (p == m.rows())
			continue;
		if (p != row)
			for (size_t j = 0; j < m.cols(); ++j)
				std::swap(m.at(p, j), m.at(row, j));
		F inv = F(1) / m.at(row, col);
		for (size_t j = col; j < m.cols(); ++j)
			m.at(row, j) = m.at(row, j) * inv;
		for (size_t i = 0; i < m.rows(); ++i)
		{
			if (i == row || m.at(i, col).is_zero())
				continue;
			F f = m.at(i, col);
			for (size_t j = col; j < m.cols(); ++j)
				m.at(i, j) = m.at(i, j) - f * m.at(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

template <class F> size_t rank(Matrix<F> m)
{
	return rref(m).size();
}

/// Canonical kernel basis: one vector per free column, unit entry there.
template <class F> std::vector<std::vector<F>> nullspace(Matrix<F> m)
{
	auto pivots = rref(m);
	std::vector<bool> is_pivot(m.cols(), false);
	for (size_t c : pivots)
		is_pivot[c] = true;
	std::vector<std::vector<F>> basis;
	for (size_t free = 0; free < m.cols(); ++free)
	{
		if (is_pivot[free])
			continue;
		std::vector<F> v(m.cols(), F());
		v[free] = F(1);
		for (size_t r = 0; r < pivots.size(); ++r)
			v[pivots[r]] = F() - m.at(r, free);
		basis.push_back(std::move(v));
	}
	return basis;
}

template <class F> struct LinearSolution
{
	std::vector<F> x;          // canonical solution (zero on free columns)
	bool in_image = false;     // b was exactly in the column space
	std::vector<std::vector<F>> kernel;
};

/// Solve A x = b; if b is outside the image, solve A x = pi(b) instead,
/// where pi is the caller-supplied replacement for b (see solve_projected).
template <class F>
LinearSolution<F> solve_canonical(Matrix<F> const &a, std::vector<F> const &b)
{
	require(b.size() == a.rows(), Err::Internal, "rhs length mismatch");
	Matrix<F> aug(a.rows(), a.cols() + 1);
	for (size_t i = 0; i < a.rows(); ++i)
	{
		for (size_t j = 0; j < a.cols(); ++j)
			aug.at(i, j) = a.at(i, j);
		aug.at(i, a.cols()) = b[i];
	}
	auto pivots = rref(aug);
	LinearSolution<F> sol;
	sol.in_image = pivots.empty() || pivots.back() != a.cols();
	sol.x.assign(a.cols(), F());
	if (sol.in_image)
	{
		for (size_t r = 0; r < pivots.size(); ++r)
			sol.x[pivots[r]] = aug.at(r, a.cols());
	}
	sol.kernel = nullspace(a);
	return sol;
}

/// Orthogonal projection of b onto the column space of A in the standard
/// Hermitian inner product, together with the canonical preimage of the
/// projection. Requires F to provide conj().
template <class F>
LinearSolution<F> solve_projected(Matrix<F> const &a, std::vector<F> const &b)
{
	auto direct = solve_canonical(a, b);
	if (direct.in_image)
		return direct;
	// Normal equations A^H A x = A^H b give some least-squares solution;
	// re-solving against A x_ls recovers the canonical representative.
	Matrix<F> ah = a.conj_transpose();
	Matrix<F> gram = ah * a;
	std::vector<F> rhs = ah.apply(b);
	auto ls = solve_canonical(gram, rhs);
	require(ls.in_image, Err::Internal, "normal equations must be solvable");
	std::vector<F> projected = a.apply(ls.x);
	auto sol = solve_canonical(a, projected);
	require(sol.in_image, Err::Internal, "projection must land in the image");
	sol.in_image = false;
	return sol;
}

/// pi_I(b): orthogonal projection of b onto the column space of A.
template <class F>
std::vector<F> image_projection(Matrix<F> const &a, std::vector<F> const &b)
{
	auto direct = solve_canonical(a, b);
	if (direct.in_image)
		return b;
	Matrix<F> ah = a.conj_transpose();
	auto ls = solve_canonical(ah * a, ah.apply(b));
	return a.apply(ls.x);
}

/// Membership of v in the span of the given vectors.
template <class F>
bool in_span(std::vector<std::vector<F>> const &span, std::vector<F> const &v)
{
	if (span.empty())
	{
		for (auto &c : v)
			if (!c.is_zero())
				return false;
		return true;
	}
	size_t n = v.size();
	Matrix<F> a(n, span.size());
	for (size_t j = 0; j < span.size(); ++j)
	{
		require(span[j].size() == n, Err::Internal, "span length mismatch");
		for (size_t i = 0; i < n; ++i)
			a.at(i, j) = span[j][i];
	}
	return solve_canonical(a, v).in_image;
}

using QMatrix = Matrix<GaussianRational>;

} // namespace corner
