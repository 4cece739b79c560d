#pragma once

#include <optional>
#include <vector>

#include "blowcalc/seq.hpp"

namespace blowcalc {

/// Truncation bounds for the provably infinite enumeration families.
struct EnumBounds {
  long c_max = 6;
  long n_max = 6;
  Weight x_min = -6;
  Weight x_max = 6;
};

enum class EKind { E, AlphaE, EAlpha, AlphaEBeta };

/// A pair (X, Y) such that (X, -1, Y) contracts to the kind's target under
/// the matching end restriction.
struct EPair {
  IntSeq x, y;
};

std::vector<EPair> e_pairs(EKind kind, std::optional<Weight> alpha, std::optional<Weight> beta,
                           const EnumBounds& bounds);

/// Restricted contraction reachability: blow-downs only, never at a
/// forbidden end. Used to verify emitted pairs.
bool contracts_to(const IntSeq& from, const IntSeq& target, bool forbid_left, bool forbid_right);

/// Fully blow down (leftmost -1 first) until minimal.
IntSeq contract_fully(const IntSeq& x);

/// The catalog of minimal sequences one successor step above M, within
/// bounds; every output is minimal and equivalent to (0, 0, M).
std::vector<IntSeq> m_oplus(const IntSeq& m, const EnumBounds& bounds);

struct MinimalSet {
  std::vector<IntSeq> elements;  // sorted, deduplicated
  bool complete = false;         // true: provably the whole set; false: within bounds
};

/// Minimal elements of the class of X. Complete singleton for prime classes;
/// the bounded m_oplus catalog when the predecessor is prime; classes at
/// successor depth >= 2 are rejected.
MinimalSet minimal_in_class(const IntSeq& x, const EnumBounds& bounds);

struct UnsupportedClassDepth : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_geometric_chain(const IntSeq& x);

}  // namespace blowcalc
