#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace equigen::testing {

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // e.g. inconclusive pm cases
  std::vector<std::string> messages;  // first few failures

  void pass() { ++cases; }
  void fail(std::string message);
  bool ok() const { return cases > 0 && failures == 0; }
  std::string summary() const;
};

// Generated f/gamma/theta/Theta/F polynomials: f(alpha^k c_k) =
// alpha^deg f(c) and sum k c_k df/dc_k = deg f at random points.
Outcome homogeneityAndEuler(std::uint64_t seed, int cases);
// (sum_m f_m u^m)^a = (1 + sum c_k u^k)^b at random points.
Outcome powerConsistency(std::uint64_t seed, int cases);
// s -> S -> s is the identity, and (1 + sum gamma_i u^i)^a = 1 + sum c_k u^k.
Outcome thetaGammaRoundTrip(std::uint64_t seed, int cases);
// Theta by partitions equals Theta by series power, i <= 8, symbolically
// and against the numeric power of the theta series.
Outcome thetaAgreement(std::uint64_t seed, int cases);

// reparamSolve on random data with a in {2,3,4}, K <= 12.
Outcome reparamBackSubstitution(std::uint64_t seed, int casesPerA);
Outcome reparamAudit(std::uint64_t seed, int casesPerA);
Outcome reparamPm(std::uint64_t seed, int casesPerA);

// liftRun with random admissible perturbations up to K = d(b+1)+6.
Outcome liftSinglePoint(std::uint64_t seed, int a, int b, int runs);
// Interleaved two-point run with the non-interference audit.
Outcome liftTwoPoint(std::uint64_t seed, int runs);

}  // namespace equigen::testing
