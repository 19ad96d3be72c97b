#ifndef BORELSUM_TYPES_HPP
#define BORELSUM_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace borelsum {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Base class for all library errors. Every failure mode carries a stable
/// machine-readable code string, used by the CLI to build error objects.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define BORELSUM_DEFINE_ERROR(NAME, CODE)                      \
  class NAME : public Error {                                  \
   public:                                                     \
    explicit NAME(const std::string& what) : Error(CODE, what) {} \
  }

BORELSUM_DEFINE_ERROR(NonSimpleRoots, "non_simple_roots");
BORELSUM_DEFINE_ERROR(DegenerateQ, "degenerate_q");
BORELSUM_DEFINE_ERROR(ResonanceError, "resonance");
BORELSUM_DEFINE_ERROR(RayHitsRoot, "ray_hits_root");
BORELSUM_DEFINE_ERROR(NoConvergence, "no_convergence");
BORELSUM_DEFINE_ERROR(IllConditioned, "ill_conditioned");
BORELSUM_DEFINE_ERROR(TailDominates, "tail_dominates");
BORELSUM_DEFINE_ERROR(BranchCollision, "branch_collision");
BORELSUM_DEFINE_ERROR(SeedFailure, "seed_failure");
BORELSUM_DEFINE_ERROR(DomainError, "domain");
BORELSUM_DEFINE_ERROR(ParameterUnsupported, "parameter_unsupported");
BORELSUM_DEFINE_ERROR(UnstableFit, "unstable_fit");
BORELSUM_DEFINE_ERROR(RayMisconfigured, "ray_misconfigured");
BORELSUM_DEFINE_ERROR(GammaPole, "gamma_pole");
BORELSUM_DEFINE_ERROR(SchemaError, "schema");

#undef BORELSUM_DEFINE_ERROR

inline bool near_nonpositive_integer(double x, double tol = 1e-12) {
  if (x > 0.5) return false;
  double r = std::round(x);
  return r <= 0.0 && std::abs(x - r) < tol;
}

}  // namespace borelsum

#endif  // BORELSUM_TYPES_HPP
