#pragma once

#include <array>
#include <vector>

#include "sleib/linalg.hpp"
#include "sleib/scalar.hpp"

namespace sleib {

inline constexpr int kMinDim = 5;
inline constexpr int kMaxDim = 64;  // practical cap on the psi recursion cost
inline constexpr int kMaxClassifyDim = 8;

/// Parameters (beta_3, ..., beta_n, gamma) of an algebra L(beta, gamma) in
/// SLeib_{n+1}.  `dim` is the algebra dimension n+1.
struct ParamVector {
    int dim = 0;
    std::vector<GaussianRational> beta;  // beta[t - 3] is beta_t, 3 <= t <= n
    GaussianRational gamma;

    ParamVector() = default;
    ParamVector(int dim, std::vector<GaussianRational> beta, GaussianRational gamma);

    int n() const { return dim - 1; }
    const GaussianRational& beta_at(int t) const;  // t in 3..n

    /// Family notation, e.g. "L(1,0,3)".
    std::string to_string() const;

    friend bool operator==(const ParamVector& a, const ParamVector& b) {
        return a.dim == b.dim && a.beta == b.beta && a.gamma == b.gamma;
    }
    friend bool operator!=(const ParamVector& a, const ParamVector& b) { return !(a == b); }
};

/// Full cube of structure constants on a basis e_0..e_n:
/// [e_i e_j] = sum_k c(i,j,k) e_k.
class AlgebraTable {
  public:
    explicit AlgebraTable(int dim);

    int dim() const { return dim_; }
    GaussianRational& c(int i, int j, int k) {
        return cube_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }
    const GaussianRational& c(int i, int j, int k) const {
        return cube_[(static_cast<size_t>(i) * dim_ + j) * dim_ + k];
    }

    /// [e_i e_j] as a coordinate vector.
    Vec product(int i, int j) const;

    friend bool operator==(const AlgebraTable& a, const AlgebraTable& b) {
        return a.dim_ == b.dim_ && a.cube_ == b.cube_;
    }

  private:
    int dim_;
    std::vector<GaussianRational> cube_;
};

/// The mu_2 multiplication table of the second class:
///   [e0 e0] = e2,   [e_i e0] = e_{i+1} (2 <= i <= n-1),
///   [e0 e1] = beta_3 e3 + ... + beta_n en,   [e1 e1] = gamma en,
///   [e_j e1] = beta_3 e_{j+2} + ... + beta_{n+1-j} en (2 <= j <= n-2),
/// all other products zero.
AlgebraTable build_table(const ParamVector& p);

/// Bilinear extension of the table to coordinate vectors.
Vec bracket(const AlgebraTable& t, const Vec& x, const Vec& y);

/// Basis triples (i,j,k) where [e_i [e_j e_k]] != [[e_i e_j] e_k] - [[e_i e_k] e_j].
std::vector<std::array<int, 3>> leibniz_violations(const AlgebraTable& t);

/// Dimensions (dim L^1, dim L^2, ...) of the lower central series, down to 0.
std::vector<int> lower_central_dims(const AlgebraTable& t);

/// Inverse of build_table; throws NotAdapted if the table is not exactly of
/// the mu_2 shape.
ParamVector extract_params(const AlgebraTable& t);

/// Filiform profile (n+1, n-1, n-2, ..., 1, 0) for dimension n+1.
std::vector<int> filiform_profile(int dim);

}  // namespace sleib
