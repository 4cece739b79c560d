#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "blowcalc/numeric.hpp"

namespace blowcalc {

/// Finite integer sequence (element of Z*).
using IntSeq = std::vector<Weight>;

IntSeq reversed(const IntSeq& x);
IntSeq concat(std::initializer_list<IntSeq> parts);
IntSeq zeros(std::size_t r);

/// Determinant of the linear chain [X].
Int seq_det(const IntSeq& x);
/// det_i: determinant of the suffix (x_{i+1}, ..., x_n); 1 at i = n, 0 past it.
Int seq_det_i(const IntSeq& x, std::size_t i);
/// det of the interior (x_2, ..., x_{n-1}); 1 when n = 2, 0 when n < 2.
Int seq_det_star(const IntSeq& x);
/// Hodge number of the chain [X].
unsigned seq_hodge(const IntSeq& x);

/// (det_1(X), det_1(X reversed)).
std::pair<Int, Int> sub(const IntSeq& x);
/// sub reduced mod d = det(X), residues in [0, |d|); for d = 0 the raw values.
std::pair<Int, Int> sub_bar(const IntSeq& x);

/// All blow-ups of X: left, the n-1 interior ones, right; the empty sequence
/// blows up to (-1).
std::vector<IntSeq> seq_blow_ups(const IntSeq& x);
/// Inverse blow-up at the -1 in position `pos` (0-based).
IntSeq seq_blow_down(const IntSeq& x, std::size_t pos);
bool is_minimal_seq(const IntSeq& x);

/// A canonical sequence (0^r, A) with A admissible; r even when A is nonempty.
struct CanonicalSeq {
  std::size_t r = 0;
  IntSeq tail;  // every term <= -2

  IntSeq to_seq() const;
  bool operator==(const CanonicalSeq& o) const { return r == o.r && tail == o.tail; }
};

/// The unique canonical sequence equivalent to X.
CanonicalSeq canonical_form(const IntSeq& x);

/// The unique admissible chain with det = r0 and det_1 = r1
/// (pre: 0 <= r1 < r0, gcd(r0, r1) = 1), by negative-continued-fraction
/// unrolling of the determinant recursion.
IntSeq admissible_from_pair(const Int& r0, const Int& r1);

bool seq_equivalent(const IntSeq& x, const IntSeq& y);

CanonicalSeq transpose(const CanonicalSeq& c);
/// Equivalence of the chains [X] and [Y]: X ~ Y or X ~ Y reversed.
bool chain_equivalent(const IntSeq& x, const IntSeq& y);

/// The endpoint-weight correction between equivalent sequences.
Int delta(const IntSeq& x, const IntSeq& y);

/// Endpoint ownership type of a path / capped sequence.
enum class PathType { MinusMinus, PlusMinus, MinusPlus, PlusPlus };

/// tau-equivalence of capped sequences: caps are the end terms owned by
/// branch vertices per tau; decides via the core equivalence plus the
/// delta-shift conditions.
bool tau_equivalent(PathType tau, const IntSeq& a, const IntSeq& b);

/// All tau-blow-ups of x (used by the restricted oracle and tests).
std::vector<IntSeq> tau_blow_ups(PathType tau, const IntSeq& x);
std::vector<IntSeq> tau_blow_downs(PathType tau, const IntSeq& x);

bool class_is_prime(const IntSeq& x);
CanonicalSeq class_successor(const IntSeq& x);
std::optional<CanonicalSeq> class_predecessor(const IntSeq& x);

}  // namespace blowcalc
