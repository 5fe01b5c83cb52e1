#ifndef GLSM_EXACT_LINALG_HPP
#define GLSM_EXACT_LINALG_HPP

#include "glsm/rational.hpp"

#include <cstddef>
#include <set>
#include <vector>

namespace glsm {

/// Dense integer matrix. Rows index gauge torus factors, columns index
/// coordinates of V throughout this project.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long long>> init);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector col(std::size_t j) const;
    IntMatrix transposed() const;
    /// Columns selected by an index set, in ascending index order.
    IntMatrix select_columns(const std::vector<std::size_t>& idx) const;
    /// Appends one row (length must equal cols()).
    void append_row(const IntVector& r);

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

/// Entries are rationals in [0,1); entry t stands for the root of unity
/// exp(2*pi*i*t).
class PhaseVector {
public:
    PhaseVector() = default;
    explicit PhaseVector(RatVector entries);

    std::size_t size() const { return e_.size(); }
    const Rat& operator[](std::size_t i) const { return e_[i]; }
    const RatVector& entries() const { return e_; }

    PhaseVector operator+(const PhaseVector& o) const;
    PhaseVector inverse() const;
    bool is_identity() const;
    /// Smallest k >= 1 with k*this integral.
    Int order() const;
    /// Sum of entries (each already a fractional part).
    Rat age() const;

    bool operator==(const PhaseVector& o) const { return e_ == o.e_; }
    bool operator<(const PhaseVector& o) const { return e_ < o.e_; }

private:
    RatVector e_;
};

/// Diagonalization D = U*M*V with U,V unimodular; only V and the diagonal
/// are retained (U is never needed downstream).
struct SmithForm {
    std::vector<Int> diag;    // nonnegative; zeros trail after rank entries
    IntMatrix v;              // n x n unimodular column transform
    std::size_t rank = 0;
};

SmithForm smith_diagonalize(const IntMatrix& m);

std::size_t rank_of(const IntMatrix& m);

/// Lattice basis of {v in Z^n : M v = 0}.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

/// All t in [0,1)^m with t . (column j of M) integral for every j.
/// Throws std::domain_error when the solution group is infinite
/// (i.e. rank(M) < m).
std::vector<PhaseVector> finite_group_elements(const IntMatrix& m);

/// True iff v is a nonnegative rational combination of the generators.
bool cone_member(const std::vector<RatVector>& generators, const RatVector& v);

/// True iff some nonzero a >= 0 supported inside `support` has M a = 0.
bool nonneg_kernel_exists(const IntMatrix& m, const std::set<std::size_t>& support);

// ---- small dot-product helpers used across modules ----

Rat dot(const RatVector& a, const RatVector& b);
Rat dot(const RatVector& a, const IntVector& b);

RatVector to_rat(const IntVector& v);

/// Rational row rank of a matrix whose rows are given vectors.
std::size_t rat_rank(std::vector<RatVector> rows);

/// True iff v lies in the rational span of the given vectors.
bool in_span(const std::vector<RatVector>& vectors, const RatVector& v);

}  // namespace glsm

#endif
