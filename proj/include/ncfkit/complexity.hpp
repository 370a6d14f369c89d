#pragma once

#include <cstdint>
#include <vector>

#include "common.hpp"
#include "truth_table.hpp"

/*! \file complexity.hpp
  \brief Exact brute-force sensitivity and block-sensitivity oracles

  These routines only look at the truth table, never at any structural
  description of the function, so they serve as ground truth for the
  closed-form results in ncf.hpp.

  Sweeps over all 2^n input words run in parallel with OpenMP once the table
  is large enough; the reduction orders candidates by (value, -word index) so
  witnesses are identical to a serial left-to-right scan. Straightforward
  serial implementations live in namespace `serial` and are used to test the
  parallel kernels.
*/

namespace ncfkit
{

struct SensitivityResult
{
  unsigned value = 0;
  /// Smallest word (by encoded index) attaining the maximum.
  InputWord witness;
};

struct BlockPacking
{
  unsigned value = 0;
  /// Pairwise-disjoint sensitive blocks, each minimal; value == blocks.size().
  std::vector<VarMask> blocks;
};

struct BlockSensitivityResult
{
  unsigned value = 0;
  InputWord witness;
  std::vector<VarMask> blocks;
};

/// Exact rational sum_x s(f;x) / 2^n, left unreduced.
struct AverageSensitivity
{
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const { return static_cast<double>( numerator ) / static_cast<double>( denominator ); }
};

struct SensitivityReport
{
  unsigned n = 0;
  unsigned s = 0;
  unsigned bs = 0;
  /// bs_l[l - 1] holds bs_l(f) for l = 1..n.
  std::vector<unsigned> bs_l;
  InputWord s_witness;
  InputWord bs_witness;
  std::vector<VarMask> bs_blocks;
};

unsigned sensitivity_at( const TruthTable& f, const InputWord& x );

SensitivityResult sensitivity( const TruthTable& f, const Limits& limits = {} );

/*! \brief All minimal sensitive blocks of f at x.

  A block S is sensitive when f(x^S) != f(x) and minimal when no proper
  subset of S is sensitive. Ordered by size, then lexicographically.
*/
std::vector<VarMask> minimal_sensitive_blocks( const TruthTable& f, const InputWord& x, const Limits& limits = {} );

/*! \brief Maximum number of pairwise-disjoint sets among `blocks`.

  Exact depth-first branch-and-bound. Only blocks with at most `max_block_size`
  elements take part. The returned family is the first optimum met by a
  deterministic search order, so identical inputs yield identical families.
*/
BlockPacking max_disjoint_blocks( const std::vector<VarMask>& blocks, unsigned max_block_size = kHardMaxVars );

/// bs(f;x). Packing minimal blocks is lossless: every sensitive block contains a minimal one.
BlockPacking block_sensitivity_at( const TruthTable& f, const InputWord& x, const Limits& limits = {} );

/// bs_l(f;x): blocks restricted to cardinality at most l.
BlockPacking l_block_sensitivity_at( const TruthTable& f, const InputWord& x, unsigned l, const Limits& limits = {} );

BlockSensitivityResult block_sensitivity( const TruthTable& f, const Limits& limits = {} );
BlockSensitivityResult l_block_sensitivity( const TruthTable& f, unsigned l, const Limits& limits = {} );

AverageSensitivity average_sensitivity( const TruthTable& f, const Limits& limits = {} );

/// s, bs and every bs_l in one pass over the words.
SensitivityReport analyze_sensitivity( const TruthTable& f, const Limits& limits = {} );

/// Checks that `blocks` are nonempty, pairwise disjoint and each flips f at x.
bool verify_block_witness( const TruthTable& f, const InputWord& x, const std::vector<VarMask>& blocks );

namespace serial
{

/// Definition-level reference implementations, single-threaded.
SensitivityResult sensitivity( const TruthTable& f );
std::vector<VarMask> minimal_sensitive_blocks( const TruthTable& f, const InputWord& x );
BlockSensitivityResult l_block_sensitivity( const TruthTable& f, unsigned l );
BlockSensitivityResult block_sensitivity( const TruthTable& f );
AverageSensitivity average_sensitivity( const TruthTable& f );

} // namespace serial

} // namespace ncfkit
