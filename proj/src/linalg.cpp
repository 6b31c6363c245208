#include "tdkit/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace tdkit {

namespace {

// ---- integer factorization, used only to enumerate rational-root candidates

mpz_class pollard_brent(const mpz_class& n)
{
    if (n % 2 == 0) return 2;
    for (unsigned long c = 1;; ++c) {
        auto f = [&](const mpz_class& x) { return mpz_class((x * x + c) % n); };
        mpz_class y = 2, x, g = 1, q = 1, ys;
        const unsigned long m = 64;
        unsigned long r = 1;
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = (q * abs(mpz_class(x - y))) % n;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                mpz_class diff = abs(mpz_class(x - ys));
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out)
{
    if (n < 2) return;
    for (unsigned long p = 2; p < 10000; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > n) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
            ++out[mpz_class(p)];
            n /= p;
        }
    }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
        ++out[n];
        return;
    }
    // Remaining cofactor has no factor below 10^4; split it with rho.
    const mpz_class d = pollard_brent(n);
    factor_into(d, out);
    factor_into(mpz_class(n / d), out);
}

std::vector<mpz_class> divisors(const mpz_class& n)
{
    std::map<mpz_class, int> fac;
    factor_into(abs(n), fac);
    std::vector<mpz_class> divs{1};
    for (const auto& [p, e] : fac) {
        const std::size_t base = divs.size();
        mpz_class pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

/// Primitive integer polynomial with the same roots (ascending coefficients).
std::vector<mpz_class> primitive_integer(const Coeffs& c)
{
    mpz_class l = 1;
    for (const Rat& x : c) {
        const mpz_class d = x.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> z;
    z.reserve(c.size());
    mpz_class g = 0;
    for (const Rat& x : c) {
        z.push_back(x.numerator() * (l / x.denominator()));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
    }
    if (g != 0 && g != 1) {
        for (auto& v : z) v /= g;
    }
    return z;
}

/// Sum a_i p^i q^(n-i); zero iff p/q is a root.
bool is_root(const std::vector<mpz_class>& a, const mpz_class& p, const mpz_class& q)
{
    const std::size_t n = a.size() - 1;
    mpz_class acc = a[n];
    mpz_class qpow = 1;
    for (std::size_t i = n; i-- > 0;) {
        qpow *= q;
        acc = acc * p + a[i] * qpow;
    }
    return acc == 0;
}

/// Divides by (x - r); the remainder must vanish.
Coeffs deflate(const Coeffs& c, const Rat& r)
{
    const std::size_t n = c.size() - 1;
    Coeffs q(n);
    Rat carry(0);
    for (std::size_t i = n; i-- > 0;) {
        carry = c[i + 1] + carry * r;
        q[i] = carry;
    }
    return q;
}

struct Rref {
    Mat m;
    std::vector<std::size_t> pivots;
};

Rref reduce_rows(Mat m, std::size_t col_limit)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < col_limit && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != row) {
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        }
        const Rat inv = m(row, col).inverse();
        for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rat f = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) {
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

Vec flatten(const Mat& m) { return m.entries(); }

} // namespace

Coeffs char_poly(const Mat& a)
{
    if (!a.is_square()) throw std::invalid_argument("char_poly: matrix must be square");
    const std::size_t n = a.rows();
    Coeffs c(n + 1);
    c[n] = Rat(1);
    const Mat id = Mat::identity(n);
    Mat m(n, n); // M_0 = 0
    for (std::size_t k = 1; k <= n; ++k) {
        m = a * m + id * c[n - k + 1];
        c[n - k] = -(a * m).trace() / Rat(static_cast<long>(k));
    }
    return c;
}

Rat eval_poly(const Coeffs& c, const Rat& x)
{
    Rat acc(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

std::vector<std::pair<Rat, int>> rational_roots(const Coeffs& input)
{
    Coeffs c = input;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.size() <= 1) return {};

    std::map<Rat, int> found;
    // Zero roots.
    std::size_t zeros = 0;
    while (zeros < c.size() && c[zeros].is_zero()) ++zeros;
    if (zeros > 0) {
        found[Rat(0)] = static_cast<int>(zeros);
        c.erase(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(zeros));
    }

    bool progress = true;
    while (c.size() > 1 && progress) {
        progress = false;
        const std::vector<mpz_class> z = primitive_integer(c);
        const mpz_class lead = abs(z.back());
        const mpz_class cst = abs(z.front());
        // Cauchy bound on |root|, taken as an integer ceiling.
        mpz_class maxc = 0;
        for (std::size_t i = 0; i + 1 < z.size(); ++i) maxc = std::max(maxc, mpz_class(abs(z[i])));
        const Rat bound = Rat(1) + Rat(maxc, lead);

        const auto nums = divisors(cst);
        const auto dens = divisors(lead);
        for (const auto& q : dens) {
            for (const auto& p : nums) {
                mpz_class g;
                mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
                if (g != 1) continue;
                if (Rat(p, q) > bound) break;
                for (int s : {1, -1}) {
                    const mpz_class sp = p * s;
                    if (!is_root(z, sp, q)) continue;
                    const Rat r(sp, q);
                    while (c.size() > 1 && eval_poly(c, r).is_zero()) {
                        c = deflate(c, r);
                        ++found[r];
                    }
                    progress = true;
                    break;
                }
                if (progress) break;
            }
            if (progress) break;
        }
    }
    return {found.begin(), found.end()};
}

bool Spectrum::diagonalizable() const
{
    if (!splits) return false;
    for (const auto& e : eigenvalues) {
        if (static_cast<int>(e.basis.size()) != e.multiplicity) return false;
    }
    return true;
}

const Eigenspace* Spectrum::find(const Rat& value) const
{
    for (const auto& e : eigenvalues) {
        if (e.value == value) return &e;
    }
    return nullptr;
}

Spectrum rational_spectrum(const Mat& a)
{
    if (!a.is_square()) throw std::invalid_argument("rational_spectrum: matrix must be square");
    Spectrum s;
    int total = 0;
    for (const auto& [value, mult] : rational_roots(char_poly(a))) {
        Eigenspace e;
        e.value = value;
        e.multiplicity = mult;
        e.basis = null_space(a - Mat::identity(a.rows()) * value);
        total += mult;
        s.eigenvalues.push_back(std::move(e));
    }
    s.splits = total == static_cast<int>(a.rows());
    return s;
}

bool is_irreducible_tridiagonal(const Mat& a)
{
    if (!a.is_square()) throw std::invalid_argument("is_irreducible_tridiagonal: matrix must be square");
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap > 1 && !a(i, j).is_zero()) return false;
            if (gap == 1 && a(i, j).is_zero()) return false;
        }
    }
    return true;
}

std::size_t rank(const Mat& m) { return reduce_rows(m, m.cols()).pivots.size(); }

std::vector<Vec> null_space(const Mat& m)
{
    const Rref r = reduce_rows(m, m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols());
        v[f] = Rat(1);
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.m(k, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Mat inverse(const Mat& m)
{
    if (!m.is_square()) throw std::invalid_argument("inverse: matrix must be square");
    const std::size_t n = m.rows();
    Mat aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Rat(1);
    }
    const Rref r = reduce_rows(std::move(aug), n);
    if (r.pivots.size() != n) throw std::domain_error("inverse: singular matrix");
    Mat inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.m(i, n + j);
    return inv;
}

Rat determinant(const Mat& input)
{
    if (!input.is_square()) throw std::invalid_argument("determinant: matrix must be square");
    Mat m = input;
    const std::size_t n = m.rows();
    Rat det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t sel = col;
        while (sel < n && m(sel, col).is_zero()) ++sel;
        if (sel == n) return Rat(0);
        if (sel != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(sel, j), m(col, j));
            det = -det;
        }
        det *= m(col, col);
        const Rat inv = m(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (m(i, col).is_zero()) continue;
            const Rat f = m(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return det;
}

LinearSolution solve_linear(const Mat& m, const Vec& b)
{
    if (m.rows() != b.size()) throw std::invalid_argument("solve_linear: rhs length mismatch");
    const std::size_t n = m.cols();
    Mat aug(m.rows(), n + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n) = b[i];
    }
    const Rref r = reduce_rows(std::move(aug), n);
    LinearSolution sol;
    for (std::size_t i = r.pivots.size(); i < m.rows(); ++i) {
        if (!r.m(i, n).is_zero()) return sol; // inconsistent
    }
    sol.particular.assign(n, Rat(0));
    for (std::size_t k = 0; k < r.pivots.size(); ++k) sol.particular[r.pivots[k]] = r.m(k, n);

    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vec v(n);
        v[f] = Rat(1);
        for (std::size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.m(k, f);
        sol.null_basis.push_back(std::move(v));
    }
    sol.kind = sol.null_basis.empty() ? SolutionKind::unique : SolutionKind::affine;
    return sol;
}

// ---- SpanBasis

Vec SpanBasis::reduce(Vec v) const
{
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Rat f = v[pivots_[k]];
        if (f.is_zero()) continue;
        for (std::size_t j = pivots_[k]; j < ambient_; ++j) {
            if (!rows_[k][j].is_zero()) v[j] -= f * rows_[k][j];
        }
    }
    return v;
}

bool SpanBasis::contains(const Vec& v) const
{
    if (v.size() != ambient_) throw std::invalid_argument("SpanBasis: vector length mismatch");
    const Vec r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Rat& x) { return x.is_zero(); });
}

bool SpanBasis::insert(const Vec& v)
{
    if (v.size() != ambient_) throw std::invalid_argument("SpanBasis: vector length mismatch");
    Vec r = reduce(v);
    std::size_t p = 0;
    while (p < ambient_ && r[p].is_zero()) ++p;
    if (p == ambient_) return false;
    const Rat inv = r[p].inverse();
    for (std::size_t j = p; j < ambient_; ++j) r[j] *= inv;
    // Keep earlier rows reduced at the new pivot so reduce() stays one pass.
    for (auto& row : rows_) {
        const Rat f = row[p];
        if (f.is_zero()) continue;
        for (std::size_t j = p; j < ambient_; ++j) {
            if (!r[j].is_zero()) row[j] -= f * r[j];
        }
    }
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    originals_.push_back(v);
    return true;
}

std::size_t word_span_dimension(const Mat& a, const Mat& b)
{
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw std::invalid_argument("word_span_dimension: need square matrices of equal size");
    }
    const std::size_t n = a.rows();
    SpanBasis span(n * n);
    std::deque<Mat> frontier;
    const Mat id = Mat::identity(n);
    span.insert(flatten(id));
    frontier.push_back(id);
    while (!frontier.empty() && span.dimension() < n * n) {
        const Mat w = std::move(frontier.front());
        frontier.pop_front();
        for (const Mat* g : {&a, &b}) {
            Mat next = *g * w;
            if (span.insert(flatten(next))) frontier.push_back(std::move(next));
        }
    }
    return span.dimension();
}

std::optional<std::vector<Vec>> find_common_invariant_subspace(const Mat& a, const Mat& b)
{
    if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
        throw std::invalid_argument("find_common_invariant_subspace: need square matrices of equal size");
    }
    const std::size_t n = a.rows();
    std::vector<Vec> seeds;
    for (const Mat* m : {&a, &b}) {
        for (const auto& e : rational_spectrum(*m).eigenvalues) {
            seeds.insert(seeds.end(), e.basis.begin(), e.basis.end());
        }
    }
    for (const Vec& seed : seeds) {
        SpanBasis span(n);
        span.insert(seed);
        std::deque<Vec> frontier{seed};
        while (!frontier.empty() && span.dimension() < n) {
            const Vec v = std::move(frontier.front());
            frontier.pop_front();
            for (const Mat* g : {&a, &b}) {
                Vec w = mat_vec(*g, v);
                if (span.insert(w)) frontier.push_back(std::move(w));
            }
        }
        if (span.dimension() < n) return span.originals();
    }
    return std::nullopt;
}

} // namespace tdkit
