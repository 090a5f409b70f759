#ifndef STABGRAPH_ORACLE_HPP
#define STABGRAPH_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "stabgraph/graph.hpp"

namespace stabgraph {

class DenseMatrix {
public:
    explicit DenseMatrix(int n);

    int dim() const { return n_; }
    double& at(int i, int j);      // 1-based
    double at(int i, int j) const;

private:
    int n_;
    std::vector<double> a_;
};

// Free entries drawn with random sign and magnitude uniform in [lo, hi];
// entries outside the support stay exactly zero.
DenseMatrix random_matrix_in_pattern(const ZeroPattern& z, std::uint64_t seed, double lo,
                                     double hi);

// All characteristic-polynomial roots have real part below -1e-9, decided by
// the Routh table of the shifted and max-norm-scaled matrix. n <= 24.
bool is_hurwitz(const DenseMatrix& a);

// Multi-restart random initialization plus coordinate-wise perturbation
// descent on the largest Routh violation. Restart r draws from stream
// (seed, r); the first restart that succeeds wins. n <= 16.
std::optional<DenseMatrix> find_hurwitz(const ZeroPattern& z, int restarts, std::uint64_t seed);

// Randomized check that the determinant vanishes identically on the pattern:
// several random fillings with magnitudes in [0.5, 1.5], tolerance relative
// to the product of row max-norms. n <= 64.
bool structural_det_zero(const ZeroPattern& z, int draws = 3, double tol = 1e-8);

double determinant(const DenseMatrix& a); // LU with partial pivoting

} // namespace stabgraph

#endif
