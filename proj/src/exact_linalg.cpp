#include "glsm/exact_linalg.hpp"

#include "glsm/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace glsm {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
        for (long long x : r) a_.emplace_back(x);
    }
}

IntVector IntMatrix::row(std::size_t i) const {
    IntVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVector IntMatrix::col(std::size_t j) const {
    IntVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= cols_) throw std::out_of_range("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) s.at(i, k) = at(i, idx[k]);
    }
    return s;
}

void IntMatrix::append_row(const IntVector& r) {
    if (rows_ > 0 && r.size() != cols_) throw std::invalid_argument("row length mismatch");
    if (rows_ == 0) cols_ = r.size();
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

PhaseVector::PhaseVector(RatVector entries) : e_(std::move(entries)) {
    for (auto& x : e_) x = frac_mod1(x);
}

PhaseVector PhaseVector::operator+(const PhaseVector& o) const {
    if (size() != o.size()) throw std::invalid_argument("phase vector size mismatch");
    RatVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = e_[i] + o.e_[i];
    return PhaseVector(std::move(r));
}

PhaseVector PhaseVector::inverse() const {
    RatVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = -e_[i];
    return PhaseVector(std::move(r));
}

bool PhaseVector::is_identity() const {
    return std::all_of(e_.begin(), e_.end(), [](const Rat& x) { return x == 0; });
}

Int PhaseVector::order() const {
    Int k = 1;
    for (const auto& x : e_) k = int_lcm(k, denominator(x));
    return k;
}

Rat PhaseVector::age() const {
    Rat s = 0;
    for (const auto& x : e_) s += x;
    return s;
}

SmithForm smith_diagonalize(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix a = m;
    IntMatrix v(nc, nc);
    for (std::size_t j = 0; j < nc; ++j) v.at(j, j) = 1;

    auto swap_rows = [&](std::size_t i1, std::size_t i2) {
        for (std::size_t j = 0; j < nc; ++j) std::swap(a.at(i1, j), a.at(i2, j));
    };
    auto swap_cols = [&](std::size_t j1, std::size_t j2) {
        for (std::size_t i = 0; i < nr; ++i) std::swap(a.at(i, j1), a.at(i, j2));
        for (std::size_t i = 0; i < nc; ++i) std::swap(v.at(i, j1), v.at(i, j2));
    };
    auto addmul_row = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t j = 0; j < nc; ++j) a.at(dst, j) += q * a.at(src, j);
    };
    auto addmul_col = [&](std::size_t dst, std::size_t src, const Int& q) {
        for (std::size_t i = 0; i < nr; ++i) a.at(i, dst) += q * a.at(i, src);
        for (std::size_t i = 0; i < nc; ++i) v.at(i, dst) += q * v.at(i, src);
    };

    const std::size_t lim = std::min(nr, nc);
    std::size_t t = 0;
    for (; t < lim; ++t) {
        // Pick the smallest-magnitude nonzero entry as pivot.
        std::size_t pi = nr, pj = nc;
        for (std::size_t i = t; i < nr; ++i)
            for (std::size_t j = t; j < nc; ++j)
                if (a.at(i, j) != 0 &&
                    (pi == nr || abs(a.at(i, j)) < abs(a.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi == nr) break;
        if (pi != t) swap_rows(pi, t);
        if (pj != t) swap_cols(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (a.at(i, t) == 0) continue;
                Int q = a.at(i, t) / a.at(t, t);
                addmul_row(i, t, -q);
                if (a.at(i, t) != 0) {
                    swap_rows(i, t);  // strictly smaller pivot
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (a.at(t, j) == 0) continue;
                Int q = a.at(t, j) / a.at(t, t);
                addmul_col(j, t, -q);
                if (a.at(t, j) != 0) {
                    swap_cols(j, t);
                    clean = false;
                }
            }
        }
        if (a.at(t, t) < 0) {
            for (std::size_t j = 0; j < nc; ++j) a.at(t, j) = -a.at(t, j);
        }
    }

    SmithForm sf;
    sf.rank = t;
    sf.diag.assign(lim, Int(0));
    for (std::size_t i = 0; i < t; ++i) sf.diag[i] = a.at(i, i);
    sf.v = v;
    return sf;
}

std::size_t rank_of(const IntMatrix& m) { return smith_diagonalize(m).rank; }

std::vector<IntVector> kernel_basis(const IntMatrix& m) {
    SmithForm sf = smith_diagonalize(m);
    std::vector<IntVector> basis;
    for (std::size_t j = sf.rank; j < m.cols(); ++j) basis.push_back(sf.v.col(j));
    return basis;
}

std::vector<PhaseVector> finite_group_elements(const IntMatrix& m) {
    const std::size_t mm = m.rows();
    // Solve t . col_j integral for all j: diagonalize the transpose.
    IntMatrix a = m.transposed();  // n x m
    SmithForm sf = smith_diagonalize(a);
    if (sf.rank < mm)
        throw std::domain_error("finite_group_elements: solution group is infinite");

    // t = V s with d_i s_i integral; enumerate s_i in {k/d_i}.
    std::vector<PhaseVector> out;
    std::vector<Int> counters(mm, Int(0));
    while (true) {
        RatVector t(mm, Rat(0));
        for (std::size_t i = 0; i < mm; ++i) {
            Rat si(counters[i], sf.diag[i]);
            for (std::size_t k = 0; k < mm; ++k) t[k] += Rat(sf.v.at(k, i)) * si;
        }
        out.emplace_back(std::move(t));
        std::size_t pos = 0;
        while (pos < mm) {
            counters[pos] += 1;
            if (counters[pos] < sf.diag[pos]) break;
            counters[pos] = 0;
            ++pos;
        }
        if (pos == mm) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool cone_member(const std::vector<RatVector>& generators, const RatVector& v) {
    const std::size_t dim = v.size();
    for (const auto& g : generators)
        if (g.size() != dim) throw std::invalid_argument("cone_member: dimension mismatch");
    // Feasibility of  sum_i a_i g_i = v,  a >= 0.
    std::vector<RatVector> a(dim, RatVector(generators.size(), Rat(0)));
    for (std::size_t k = 0; k < generators.size(); ++k)
        for (std::size_t i = 0; i < dim; ++i) a[i][k] = generators[k][i];
    RatVector c(generators.size(), Rat(0));
    return lp_minimize(a, v, c).status == LpStatus::Optimal;
}

bool nonneg_kernel_exists(const IntMatrix& m, const std::set<std::size_t>& support) {
    for (std::size_t j : support)
        if (j >= m.cols()) throw std::out_of_range("support index out of range");
    std::vector<std::size_t> idx(support.begin(), support.end());
    if (idx.empty()) return false;
    std::vector<RatVector> gens;
    for (std::size_t j : idx) gens.push_back(to_rat(m.col(j)));
    // Nonzero a >= 0 with sum a_j col_j = 0 exists iff some -col_i lies in
    // the cone of the supported columns.
    for (std::size_t k = 0; k < idx.size(); ++k) {
        RatVector target(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i) target[i] = -gens[k][i];
        if (cone_member(gens, target)) return true;
    }
    return false;
}

Rat dot(const RatVector& a, const RatVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

RatVector to_rat(const IntVector& v) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::size_t rat_rank(std::vector<RatVector> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t nc = rows[0].size();
    for (std::size_t col = 0; col < nc && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            Rat f = rows[i][col] / rows[rank][col];
            for (std::size_t j = col; j < nc; ++j) rows[i][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

bool in_span(const std::vector<RatVector>& vectors, const RatVector& v) {
    std::vector<RatVector> rows = vectors;
    std::size_t r0 = rat_rank(rows);
    rows.push_back(v);
    return rat_rank(rows) == r0;
}

}  // namespace glsm
