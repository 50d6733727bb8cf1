#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "betti/coset.hpp"

namespace betti {

/// Resolved invocation of one subcommand. The front end parses flags and
/// reads input files; dispatch works on values only.
struct RunConfig {
  std::string command;          // parse | tc | rs | b1 | chain | approx | vd | cert | tower
  std::string presentation;     // presentation text
  std::string subgroup_words;   // comma-separated words (tc, rs)
  bool closure_mode = false;    // treat subgroup words as a normal closure
  unsigned long p = 2;
  int depth = 2;
  EnumerationLimits limits;
  std::string format = "json";  // json | csv | text
  std::vector<unsigned long> p_rank_primes; // extra primes for b1 reports
  std::optional<mpq_class> known_b12;       // approx reference value
  mpq_class torsion_epsilon = mpq_class(1, 100);
  std::string chain_input;      // approx: serialized chain JSON (text, not a path)

  // tower
  unsigned gens = 2;
  mpq_class eps = mpq_class(1, 2);
  unsigned steps = 3;
  int probe_depth = 2;
  unsigned n_cap = 8;
  int chain_depth = 2;
  unsigned word_check_cap = 3;
  std::optional<mpq_class> delta;
};

/// Default enumeration limits, honoring the GRP_MAX_COSETS environment variable.
EnumerationLimits default_limits();

/// Runs one command: exit 0 on success, 1 on domain errors (syntax,
/// precondition, threshold), 2 on resource errors (limits). Output is
/// byte-identical across runs with the same config.
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

} // namespace betti
