#include "blowcalc/seq.hpp"

#include <algorithm>
#include <stdexcept>

#include "blowcalc/graph.hpp"
#include "blowcalc/invariants.hpp"

namespace blowcalc {

IntSeq reversed(const IntSeq& x) { return IntSeq(x.rbegin(), x.rend()); }

IntSeq concat(std::initializer_list<IntSeq> parts) {
  IntSeq out;
  for (const IntSeq& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

IntSeq zeros(std::size_t r) { return IntSeq(r, 0); }

Int seq_det_i(const IntSeq& x, std::size_t i) {
  const std::size_t n = x.size();
  if (i > n) return 0;
  // right-to-left three-term recursion, seeds det_n = 1, det_{n+1} = 0
  Int cur = 1, nxt = 0;
  for (std::size_t k = n; k > i; --k) {
    Int d = Int(-x[k - 1]) * cur - nxt;
    nxt = cur;
    cur = d;
  }
  return cur;
}

Int seq_det(const IntSeq& x) { return seq_det_i(x, 0); }

Int seq_det_star(const IntSeq& x) {
  const std::size_t n = x.size();
  if (n < 2) return 0;
  if (n == 2) return 1;
  return seq_det(IntSeq(x.begin() + 1, x.end() - 1));
}

unsigned seq_hodge(const IntSeq& x) { return hodge_graph(chain_graph(x)); }

std::pair<Int, Int> sub(const IntSeq& x) {
  return {seq_det_i(x, 1), seq_det_i(reversed(x), 1)};
}

std::pair<Int, Int> sub_bar(const IntSeq& x) {
  Int d = abs(seq_det(x));
  auto [a, b] = sub(x);
  if (d == 0) return {a, b};
  Int ra, rb;
  mpz_mod(ra.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
  mpz_mod(rb.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t());
  return {ra, rb};
}

std::vector<IntSeq> seq_blow_ups(const IntSeq& x) {
  std::vector<IntSeq> out;
  const std::size_t n = x.size();
  if (n == 0) {
    out.push_back({-1});
    return out;
  }
  {
    IntSeq l = x;
    l[0] = wsub(l[0], 1);
    l.insert(l.begin(), -1);
    out.push_back(std::move(l));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    IntSeq m = x;
    m[i] = wsub(m[i], 1);
    m[i + 1] = wsub(m[i + 1], 1);
    m.insert(m.begin() + static_cast<std::ptrdiff_t>(i) + 1, -1);
    out.push_back(std::move(m));
  }
  {
    IntSeq r = x;
    r[n - 1] = wsub(r[n - 1], 1);
    r.push_back(-1);
    out.push_back(std::move(r));
  }
  return out;
}

IntSeq seq_blow_down(const IntSeq& x, std::size_t pos) {
  const std::size_t n = x.size();
  if (pos >= n || x[pos] != -1)
    throw std::invalid_argument("seq_blow_down: position does not hold -1");
  IntSeq out;
  out.reserve(n - 1);
  for (std::size_t i = 0; i < n; ++i)
    if (i != pos) out.push_back(x[i]);
  if (n == 1) return out;  // (-1) -> empty
  if (pos > 0) out[pos - 1] = wadd(out[pos - 1], 1);
  if (pos + 1 < n) out[pos] = wadd(out[pos], 1);
  return out;
}

bool is_minimal_seq(const IntSeq& x) {
  return std::none_of(x.begin(), x.end(), [](Weight t) { return t == -1; });
}

IntSeq CanonicalSeq::to_seq() const {
  IntSeq out = blowcalc::zeros(r);
  out.insert(out.end(), tail.begin(), tail.end());
  return out;
}

IntSeq admissible_from_pair(const Int& r0, const Int& r1) {
  if (!(r0 > 0 && r1 >= 0 && r1 < r0 && gcd(r0, r1) == 1))
    throw std::invalid_argument("admissible_from_pair: need 0 <= r1 < r0 with gcd 1");
  IntSeq out;
  Int a = r0, b = r1;
  while (a != 1) {
    // a = q*b - c with 0 <= c < b
    Int q, c;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    c = q * b - a;
    out.push_back(to_weight(Int(-q)));
    a = b;
    b = c;
  }
  return out;
}

CanonicalSeq canonical_form(const IntSeq& x) {
  const unsigned n = seq_hodge(x);
  Int d = abs(seq_det(x));
  CanonicalSeq c;
  if (d == 0) {
    c.r = 2 * static_cast<std::size_t>(n) - 1;
    return c;
  }
  c.r = 2 * static_cast<std::size_t>(n);
  Int s = seq_det_i(x, 1);
  if (n % 2 == 1) s = -s;
  mpz_mod(s.get_mpz_t(), s.get_mpz_t(), d.get_mpz_t());
  if (gcd(d, s) != 1) throw std::logic_error("canonical_form: det_1 not coprime to det");
  c.tail = admissible_from_pair(d, s);
  // Second coordinate of sub_bar must come out right on its own; the
  // construction only pins the first one.
  Int t = seq_det_i(reversed(x), 1);
  if (n % 2 == 1) t = -t;
  Int u = seq_det_i(reversed(c.tail), 1);
  if (((u - t) % d) != 0) throw std::logic_error("canonical_form: reversed det_1 mismatch");
  return c;
}

bool seq_equivalent(const IntSeq& x, const IntSeq& y) {
  return canonical_form(x) == canonical_form(y);
}

CanonicalSeq transpose(const CanonicalSeq& c) { return CanonicalSeq{c.r, reversed(c.tail)}; }

bool chain_equivalent(const IntSeq& x, const IntSeq& y) {
  return seq_equivalent(x, y) || seq_equivalent(x, reversed(y));
}

Int delta(const IntSeq& x, const IntSeq& y) {
  if (!seq_equivalent(x, y)) throw std::invalid_argument("delta: sequences not equivalent");
  Int d = seq_det(x);
  if (d != 0) {
    Int num = seq_det_i(x, 1) - seq_det_i(y, 1);
    if (num % d != 0) throw std::logic_error("delta: non-exact division");
    return num / d;
  }
  const unsigned n = seq_hodge(x);
  Int diff = seq_det_star(x) - seq_det_star(y);
  return (n % 2 == 0) ? Int(-diff) : diff;
}

namespace {

struct Decomposed {
  bool left_cap = false, right_cap = false;
  Weight a = 0, b = 0;
  IntSeq core;
};

Decomposed decompose(PathType tau, const IntSeq& s) {
  Decomposed d;
  switch (tau) {
    case PathType::MinusMinus:
      d.core = s;
      return d;
    case PathType::PlusMinus:
      if (s.empty()) throw std::invalid_argument("tau-sequence too short");
      d.left_cap = true;
      d.a = s.front();
      d.core.assign(s.begin() + 1, s.end());
      return d;
    case PathType::MinusPlus:
      if (s.empty()) throw std::invalid_argument("tau-sequence too short");
      d.right_cap = true;
      d.b = s.back();
      d.core.assign(s.begin(), s.end() - 1);
      return d;
    case PathType::PlusPlus:
      if (s.size() < 2) throw std::invalid_argument("tau-sequence too short");
      d.left_cap = d.right_cap = true;
      d.a = s.front();
      d.b = s.back();
      d.core.assign(s.begin() + 1, s.end() - 1);
      return d;
  }
  throw std::logic_error("bad tau");
}

}  // namespace

bool tau_equivalent(PathType tau, const IntSeq& a, const IntSeq& b) {
  Decomposed da = decompose(tau, a), db = decompose(tau, b);
  if (!seq_equivalent(da.core, db.core)) return false;
  if (tau == PathType::MinusMinus) return true;
  Int d = seq_det(da.core);
  if (d != 0) {
    if (da.left_cap && Int(db.a) != Int(da.a) + delta(da.core, db.core)) return false;
    if (da.right_cap &&
        Int(db.b) != Int(da.b) + delta(reversed(da.core), reversed(db.core)))
      return false;
    return true;
  }
  if (tau == PathType::PlusPlus)
    return Int(db.a) + Int(db.b) == Int(da.a) + Int(da.b) + delta(da.core, db.core);
  return true;  // det 0, one cap: all shifts are equivalent
}

std::vector<IntSeq> tau_blow_ups(PathType tau, const IntSeq& x) {
  bool left = tau == PathType::MinusMinus || tau == PathType::MinusPlus;
  bool right = tau == PathType::MinusMinus || tau == PathType::PlusMinus;
  if (x.empty()) {
    if (tau == PathType::MinusMinus) return {{-1}};
    return {};
  }
  // seq_blow_ups order: left form, the interiors, right form
  auto all = seq_blow_ups(x);
  std::vector<IntSeq> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i == 0 && !left) continue;
    if (i + 1 == all.size() && !right) continue;
    out.push_back(std::move(all[i]));
  }
  return out;
}

std::vector<IntSeq> tau_blow_downs(PathType tau, const IntSeq& x) {
  const std::size_t n = x.size();
  bool left = tau == PathType::MinusMinus || tau == PathType::MinusPlus;
  bool right = tau == PathType::MinusMinus || tau == PathType::PlusMinus;
  std::size_t min_len = 0;
  if (tau == PathType::PlusMinus || tau == PathType::MinusPlus) min_len = 1;
  if (tau == PathType::PlusPlus) min_len = 2;
  std::vector<IntSeq> out;
  if (n <= min_len) return out;
  for (std::size_t j = 0; j < n; ++j) {
    if (x[j] != -1) continue;
    if (n == 1) {
      if (left && right) out.push_back({});
      continue;
    }
    if (j == 0 && !left) continue;
    if (j + 1 == n && !right) continue;
    out.push_back(seq_blow_down(x, j));
  }
  return out;
}

bool class_is_prime(const IntSeq& x) { return canonical_form(x).r <= 1; }

CanonicalSeq class_successor(const IntSeq& x) {
  CanonicalSeq c = canonical_form(x);
  c.r += 2;
  return c;
}

std::optional<CanonicalSeq> class_predecessor(const IntSeq& x) {
  CanonicalSeq c = canonical_form(x);
  if (c.r < 2) return std::nullopt;
  c.r -= 2;
  return c;
}

}  // namespace blowcalc
