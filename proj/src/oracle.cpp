#include "stabgraph/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stabgraph/rng.hpp"

namespace stabgraph {

namespace {

constexpr double kShift = 1e-9; // margin required of root real parts, after scaling
constexpr double kBigMargin = 1e100;
constexpr double kPivotFloor = 1e-12; // pivots this small cannot be told from roundoff

void check_finite(const DenseMatrix& a) {
    for (int i = 1; i <= a.dim(); ++i) {
        for (int j = 1; j <= a.dim(); ++j) {
            if (!std::isfinite(a.at(i, j))) throw std::invalid_argument("matrix entry not finite");
        }
    }
}

// Characteristic polynomial coefficients [1, c1, ..., cn] by the
// Faddeev-LeVerrier recursion.
std::vector<double> charpoly(const DenseMatrix& a) {
    int n = a.dim();
    std::vector<double> coeff(n + 1, 0.0);
    coeff[0] = 1.0;
    std::vector<double> m(n * n), next(n * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i * n + j] = a.at(i + 1, j + 1);
    }
    for (int k = 1; k <= n; ++k) {
        double tr = 0.0;
        for (int i = 0; i < n; ++i) tr += m[i * n + i];
        coeff[k] = -tr / k;
        if (k == n) break;
        for (int i = 0; i < n; ++i) m[i * n + i] += coeff[k];
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                double s = 0.0;
                for (int l = 0; l < n; ++l) s += a.at(i + 1, l + 1) * m[l * n + j];
                next[i * n + j] = s;
            }
        }
        m.swap(next);
    }
    return coeff;
}

// Largest violation over the Routh first column: negative exactly when every
// root sits strictly in the left half plane.
double routh_margin(const std::vector<double>& coeff) {
    int n = static_cast<int>(coeff.size()) - 1;
    if (n == 0) return -1.0;
    std::size_t width = static_cast<std::size_t>(n) / 2 + 1;
    std::vector<double> prev(width + 1, 0.0), curr(width + 1, 0.0), nextrow(width + 1, 0.0);
    for (std::size_t j = 0; 2 * j <= static_cast<std::size_t>(n); ++j) prev[j] = coeff[2 * j];
    for (std::size_t j = 0; 2 * j + 1 <= static_cast<std::size_t>(n); ++j) curr[j] = coeff[2 * j + 1];

    double margin = kPivotFloor - prev[0];
    for (int row = 1; row <= n; ++row) {
        double pivot = curr[0];
        if (!std::isfinite(pivot)) return kBigMargin;
        margin = std::max(margin, kPivotFloor - pivot);
        if (row == n) break;
        if (pivot == 0.0) return kBigMargin; // table breaks down; hard violation
        for (std::size_t j = 0; j + 1 <= width; ++j) {
            nextrow[j] = prev[j + 1] - prev[0] / pivot * curr[j + 1];
        }
        nextrow[width] = 0.0;
        prev.swap(curr);
        curr.swap(nextrow);
    }
    return margin;
}

double shifted_margin(const DenseMatrix& a) {
    int n = a.dim();
    double scale = 0.0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) scale = std::max(scale, std::abs(a.at(i, j)));
    }
    if (scale < 1.0) scale = 1.0;
    DenseMatrix b(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) b.at(i, j) = a.at(i, j) / scale;
        b.at(i, i) += kShift;
    }
    return routh_margin(charpoly(b));
}

} // namespace

DenseMatrix::DenseMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {
    if (n < 1) throw std::invalid_argument("dimension must be positive");
}

double& DenseMatrix::at(int i, int j) {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

double DenseMatrix::at(int i, int j) const {
    if (i < 1 || i > n_ || j < 1 || j > n_) throw std::out_of_range("matrix index");
    return a_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

DenseMatrix random_matrix_in_pattern(const ZeroPattern& z, std::uint64_t seed, double lo,
                                     double hi) {
    if (!(lo >= 0.0 && lo <= hi)) throw std::invalid_argument("bad magnitude range");
    Rng stream = Rng::derive(seed, 0);
    DenseMatrix a(z.dim());
    for (auto [i, j] : z.support()) {
        double mag = lo + stream.next_uniform() * (hi - lo);
        bool negative = stream.next() & 1;
        a.at(i, j) = negative ? -mag : mag;
    }
    return a;
}

bool is_hurwitz(const DenseMatrix& a) {
    if (a.dim() > 24) throw std::invalid_argument("is_hurwitz supports n <= 24");
    check_finite(a);
    return shifted_margin(a) < 0.0;
}

std::optional<DenseMatrix> find_hurwitz(const ZeroPattern& z, int restarts, std::uint64_t seed) {
    if (z.dim() > 16) throw std::invalid_argument("find_hurwitz supports n <= 16");
    if (restarts < 1) throw std::invalid_argument("restart count must be positive");
    const auto& support = z.support();
    if (support.empty()) return std::nullopt;

    constexpr int kIterations = 500;
    constexpr int kMaxStalls = 4;

    for (int r = 0; r < restarts; ++r) {
        Rng stream = Rng::derive(seed, static_cast<std::uint64_t>(r));
        DenseMatrix a(z.dim());
        for (auto [i, j] : support) {
            double mag = 0.25 + stream.next_uniform() * 1.5;
            bool negative = i == j || (stream.next() & 1); // push diagonals left
            a.at(i, j) = negative ? -mag : mag;
        }

        double margin = shifted_margin(a);
        double step = 0.4;
        int stalls = 0;
        for (int iter = 0; iter < kIterations && margin >= 0.0; ++iter) {
            bool improved = false;
            for (auto [i, j] : support) {
                double base = a.at(i, j);
                double best = margin, best_value = base;
                for (double cand : {base * 1.6, base * 0.55, base + step, base - step, -base}) {
                    a.at(i, j) = cand;
                    double m = shifted_margin(a);
                    if (m < best) {
                        best = m;
                        best_value = cand;
                    }
                }
                a.at(i, j) = best_value;
                if (best < margin) {
                    margin = best;
                    improved = true;
                }
                if (margin < 0.0) break;
            }
            if (!improved) {
                step *= 0.4;
                if (++stalls >= kMaxStalls) break;
            }
        }
        if (margin < 0.0 && is_hurwitz(a)) return a;
    }
    return std::nullopt;
}

double determinant(const DenseMatrix& a) {
    check_finite(a);
    int n = a.dim();
    std::vector<double> lu(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) lu[i * static_cast<std::size_t>(n) + j] = a.at(i + 1, j + 1);
    }
    double det = 1.0;
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        double best = std::abs(lu[col * static_cast<std::size_t>(n) + col]);
        for (int row = col + 1; row < n; ++row) {
            double v = std::abs(lu[row * static_cast<std::size_t>(n) + col]);
            if (v > best) {
                best = v;
                pivot = row;
            }
        }
        if (best == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < n; ++j) {
                std::swap(lu[pivot * static_cast<std::size_t>(n) + j],
                          lu[col * static_cast<std::size_t>(n) + j]);
            }
            det = -det;
        }
        double diag = lu[col * static_cast<std::size_t>(n) + col];
        det *= diag;
        for (int row = col + 1; row < n; ++row) {
            double f = lu[row * static_cast<std::size_t>(n) + col] / diag;
            if (f == 0.0) continue;
            for (int j = col + 1; j < n; ++j) {
                lu[row * static_cast<std::size_t>(n) + j] -= f * lu[col * static_cast<std::size_t>(n) + j];
            }
        }
    }
    return det;
}

bool structural_det_zero(const ZeroPattern& z, int draws, double tol) {
    if (z.dim() > 64) throw std::invalid_argument("structural_det_zero supports n <= 64");
    if (draws < 1) throw std::invalid_argument("draw count must be positive");
    constexpr std::uint64_t kDetSeed = 0x7a3d0b5c91e6f204ULL;
    for (int d = 0; d < draws; ++d) {
        DenseMatrix a = random_matrix_in_pattern(z, kDetSeed + static_cast<std::uint64_t>(d), 0.5, 1.5);
        double scale = 1.0;
        for (int i = 1; i <= z.dim(); ++i) {
            double row_max = 0.0;
            for (int j = 1; j <= z.dim(); ++j) row_max = std::max(row_max, std::abs(a.at(i, j)));
            scale *= row_max;
        }
        if (std::abs(determinant(a)) > tol * scale) return false;
    }
    return true;
}

} // namespace stabgraph
