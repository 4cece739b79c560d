#include "blowcalc/enumeration.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace blowcalc {

namespace {

std::string seq_text(const IntSeq& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

// Element of the set M of 7.2: first term != -1, the rest <= -2; decoded from
// (det, det_1) with det_1 > 0 by splitting off the leading term.
IntSeq m_set_decode(const Int& r0, const Int& r1) {
  if (!(r1 > 0 && gcd(r0, r1) == 1))
    throw std::invalid_argument("m_set_decode: need det_1 > 0 coprime to det");
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
  if (q == 1) throw std::invalid_argument("m_set_decode: leading term would be -1");
  Int r2 = q * r1 - r0;
  IntSeq out{to_weight(Int(-q))};
  IntSeq tail = admissible_from_pair(r1, r2);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

// Unique residue of -c mod m in [0, m).
Int neg_mod(const Int& c, const Int& m) {
  Int r;
  Int nc = -c;
  mpz_mod(r.get_mpz_t(), nc.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

bool contracts_to(const IntSeq& from, const IntSeq& target, bool forbid_left, bool forbid_right) {
  if (from == target) return true;
  std::set<IntSeq> seen;
  std::vector<IntSeq> stack{from};
  seen.insert(from);
  while (!stack.empty()) {
    IntSeq cur = stack.back();
    stack.pop_back();
    const std::size_t n = cur.size();
    if (n <= target.size()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (cur[j] != -1) continue;
      if (n == 1) {
        if (forbid_left || forbid_right) continue;
      } else {
        if (j == 0 && forbid_left) continue;
        if (j + 1 == n && forbid_right) continue;
      }
      IntSeq next = seq_blow_down(cur, j);
      if (next == target) return true;
      if (seen.insert(next).second) stack.push_back(next);
    }
  }
  return false;
}

IntSeq contract_fully(const IntSeq& x) {
  IntSeq cur = x;
  for (;;) {
    auto it = std::find(cur.begin(), cur.end(), Weight{-1});
    if (it == cur.end()) return cur;
    cur = seq_blow_down(cur, static_cast<std::size_t>(it - cur.begin()));
  }
}

std::vector<EPair> e_pairs(EKind kind, std::optional<Weight> alpha, std::optional<Weight> beta,
                           const EnumBounds& bounds) {
  if ((kind == EKind::E) != (!alpha.has_value()))
    throw std::invalid_argument("e_pairs: alpha required for capped kinds only");
  if ((kind == EKind::AlphaEBeta) != beta.has_value())
    throw std::invalid_argument("e_pairs: beta only for the doubly capped kind");

  std::vector<EPair> out;
  for (long c = 1; c <= bounds.c_max; ++c) {
    for (long p = 1; p <= c; ++p) {
      if (gcd(Int(c), Int(p)) != 1) continue;
      for (long n = 0; n <= bounds.n_max; ++n) {
        const Int ncp = Int(n) * c + p;
        EPair pair;
        IntSeq target;
        bool forbid_left = false, forbid_right = false;
        switch (kind) {
          case EKind::E: {
            pair.x = admissible_from_pair(ncp, neg_mod(c, ncp));
            pair.y = reversed(admissible_from_pair(Int(c), Int(c - p)));
            target = {};
            break;
          }
          case EKind::AlphaE: {
            // ceil(c / (nc+p)) != alpha + 1
            Int q;
            mpz_cdiv_q(q.get_mpz_t(), Int(c).get_mpz_t(), ncp.get_mpz_t());
            if (q == Int(*alpha) + 1) continue;
            pair.x = m_set_decode(Int(c) - Int(*alpha) * ncp, ncp);
            pair.y = reversed(admissible_from_pair(Int(c), Int(c - p)));
            target = {*alpha};
            forbid_left = true;
            break;
          }
          case EKind::EAlpha: {
            Int q;
            mpz_cdiv_q(q.get_mpz_t(), Int(c).get_mpz_t(), ncp.get_mpz_t());
            if (q == Int(*alpha) + 1) continue;
            pair.x = admissible_from_pair(Int(c), Int(c - p));
            pair.y = reversed(m_set_decode(Int(c) - Int(*alpha) * ncp, ncp));
            target = {*alpha};
            forbid_right = true;
            break;
          }
          case EKind::AlphaEBeta: {
            Int q;
            mpz_cdiv_q(q.get_mpz_t(), Int(c).get_mpz_t(), ncp.get_mpz_t());
            if (q == Int(*alpha) + 1) continue;
            if (n == *beta) continue;
            pair.x = m_set_decode(Int(c) - Int(*alpha) * ncp, ncp);
            pair.y = reversed(m_set_decode(Int(n - *beta) * c + p, Int(c)));
            target = {*alpha, *beta};
            forbid_left = forbid_right = true;
            break;
          }
        }
        IntSeq joined = concat({pair.x, {-1}, pair.y});
        if (!contracts_to(joined, target, forbid_left, forbid_right))
          throw std::logic_error("e_pairs: emitted pair fails its contraction check at " +
                                 seq_text(joined));
        out.push_back(std::move(pair));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const EPair& a, const EPair& b) {
    return std::tie(a.x, a.y) < std::tie(b.x, b.y);
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const EPair& a, const EPair& b) { return a.x == b.x && a.y == b.y; }),
            out.end());
  return out;
}

namespace {

void add_if_new(std::set<IntSeq>& acc, IntSeq z) {
  if (!is_minimal_seq(z)) throw std::logic_error("m_oplus: produced a non-minimal sequence");
  acc.insert(std::move(z));
}

bool in_range(Weight x, const EnumBounds& b) { return x >= b.x_min && x <= b.x_max; }

}  // namespace

std::vector<IntSeq> m_oplus(const IntSeq& m, const EnumBounds& bounds) {
  if (!is_minimal_seq(m)) throw std::invalid_argument("m_oplus: M must be minimal");
  std::set<IntSeq> acc;

  if (m.empty()) {
    add_if_new(acc, {1});
    for (Weight x = bounds.x_min; x <= bounds.x_max; ++x) {
      if (x == -1) continue;
      add_if_new(acc, {0, x});
      add_if_new(acc, {x, 0});
    }
    for (const EPair& e : e_pairs(EKind::E, std::nullopt, std::nullopt, bounds))
      for (Weight x = bounds.x_min; x <= bounds.x_max; ++x) {
        Weight y = wsub(-1, x);
        if (x == -1 || y == -1 || !in_range(y, bounds)) continue;
        add_if_new(acc, concat({e.x, {x, 0, y}, e.y}));
      }
    return {acc.begin(), acc.end()};
  }

  const std::size_t k = m.size();

  // (1) / (2): a new end term next to a zero
  for (Weight x = bounds.x_min; x <= bounds.x_max; ++x) {
    if (x == -1) continue;
    add_if_new(acc, concat({{0, x}, m}));
    add_if_new(acc, concat({m, {x, 0}}));
  }
  add_if_new(acc, contract_fully(concat({{0, -1}, m})));
  add_if_new(acc, contract_fully(concat({m, {-1, 0}})));

  // (3): split one term as x + y around a zero
  for (std::size_t j = 0; j < k; ++j) {
    IntSeq pre(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(j));
    IntSeq post(m.begin() + static_cast<std::ptrdiff_t>(j) + 1, m.end());
    for (Weight x = bounds.x_min; x <= bounds.x_max; ++x) {
      Weight y = wsub(m[j], x);
      if (x == -1 || y == -1 || !in_range(y, bounds)) continue;
      add_if_new(acc, concat({pre, {x, 0, y}, post}));
    }
    add_if_new(acc, contract_fully(concat({pre, {-1, 0, wadd(m[j], 1)}, post})));
    add_if_new(acc, contract_fully(concat({pre, {wadd(m[j], 1), 0, -1}, post})));
  }

  // (4): E-set insertions absorbing one or two neighboring terms
  auto insert_pairs = [&](const std::vector<EPair>& pairs, const IntSeq& pre, const IntSeq& post) {
    for (const EPair& e : pairs)
      for (Weight x = bounds.x_min; x <= bounds.x_max; ++x) {
        Weight y = wsub(-1, x);
        if (x == -1 || y == -1 || !in_range(y, bounds)) continue;
        add_if_new(acc, concat({pre, e.x, {x, 0, y}, e.y, post}));
      }
  };
  insert_pairs(e_pairs(EKind::EAlpha, m[0], std::nullopt, bounds), {},
               IntSeq(m.begin() + 1, m.end()));
  for (std::size_t i = 0; i + 1 < k; ++i)
    insert_pairs(e_pairs(EKind::AlphaEBeta, m[i], m[i + 1], bounds),
                 IntSeq(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(i)),
                 IntSeq(m.begin() + static_cast<std::ptrdiff_t>(i) + 2, m.end()));
  insert_pairs(e_pairs(EKind::AlphaE, m[k - 1], std::nullopt, bounds),
               IntSeq(m.begin(), m.end() - 1), {});

  return {acc.begin(), acc.end()};
}

MinimalSet minimal_in_class(const IntSeq& x, const EnumBounds& bounds) {
  CanonicalSeq c = canonical_form(x);
  if (c.r <= 1) return MinimalSet{{c.to_seq()}, true};
  CanonicalSeq pred{c.r - 2, c.tail};
  if (pred.r > 1) {
    std::ostringstream os;
    os << "minimal_in_class: class at successor depth >= 2; its minimal set "
          "recursion needs the full (infinite) minimal set of "
       << seq_text(pred.to_seq());
    throw UnsupportedClassDepth(os.str());
  }
  return MinimalSet{m_oplus(pred.to_seq(), bounds), false};
}

bool is_geometric_chain(const IntSeq& x) {
  if (seq_hodge(x) <= 1) return true;
  return chain_equivalent(x, {0, 0, 0});
}

}  // namespace blowcalc
