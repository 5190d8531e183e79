#pragma once

#include <random>

#include "sleib/classify.hpp"

namespace sleib {

/// Deterministic random generator for parameter vectors and triples.  The
/// scalar pool is degenerate-rich (0, small integers, small rationals, small
/// Gaussian rationals) so that thin strata are hit often; triples use
/// "generic" rationals with larger prime denominators so that an accidental
/// coincidence with a thin exceptional set is unlikely.
class Sampler {
  public:
    explicit Sampler(unsigned long long seed) : rng_(seed) {}

    /// Degenerate-rich mixed pool (zero with sizable probability).
    GaussianRational pooled();
    /// Pooled, but never zero.
    GaussianRational nonzero();
    /// Generic nonzero real rational with a larger prime denominator.
    GaussianRational generic();

    /// All components from the mixed pool; occasionally enforces the thin
    /// relations gamma = 2 beta_3^2 or gamma = 3 beta_4^2 so that the known
    /// partition gaps are reachable.
    ParamVector param_vector(int dim);

    /// A and D generic; B is zero a quarter of the time, otherwise generic.
    AdaptedTriple triple();

    /// Constructive rejection sampling into a printed subset: equalities are
    /// solved for a dependent parameter, inequalities retried.  Throws
    /// SubsetEmpty when the budget is exhausted (in particular for the
    /// dimension-7 subset U6, which is empty as printed).
    ParamVector in_subset(int dim, const std::string& subset, int budget = 5000);

    std::mt19937_64& rng() { return rng_; }

  private:
    std::mt19937_64 rng_;
};

}  // namespace sleib
