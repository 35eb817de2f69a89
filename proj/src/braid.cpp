#include "platcalc/braid.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace platcalc {

bool valid_letter(int strand_count, int letter) {
  int a = std::abs(letter);
  return a >= 1 && a <= strand_count - 1;
}

bool valid_word(const BraidWord& w) {
  if (w.strand_count < 2) return false;
  for (int g : w.letters)
    if (!valid_letter(w.strand_count, g)) return false;
  return true;
}

BraidWord free_reduce(BraidWord w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int g : w.letters) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  w.letters = std::move(out);
  return w;
}

BraidWord isotopy_normalize(BraidWord w) {
  std::vector<int>& v = w.letters;
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < v.size() && !changed; ++i) {
      for (size_t j = i + 1; j < v.size(); ++j) {
        if (v[j] == -v[i]) {
          v.erase(v.begin() + j);
          v.erase(v.begin() + i);
          changed = true;
          break;
        }
        if (std::abs(std::abs(v[j]) - std::abs(v[i])) < 2) break;
      }
    }
  }
  return w;
}

std::optional<BraidWord> apply_relation(const BraidWord& w, int position,
                                        RelationKind relation,
                                        RewriteDirection direction) {
  // The commutation swap and the braid-relation instance set are both closed
  // under reversal, so the direction never changes the result.
  (void)direction;
  if (position < 0) return std::nullopt;
  size_t pos = static_cast<size_t>(position);
  const std::vector<int>& v = w.letters;
  if (relation == RelationKind::Commutation) {
    if (pos + 2 > v.size()) return std::nullopt;
    if (std::abs(std::abs(v[pos]) - std::abs(v[pos + 1])) < 2)
      return std::nullopt;
    BraidWord out = w;
    std::swap(out.letters[pos], out.letters[pos + 1]);
    return out;
  }
  if (pos + 3 > v.size()) return std::nullopt;
  int a = v[pos], b = v[pos + 1], c = v[pos + 2];
  if (std::abs(std::abs(a) - std::abs(b)) != 1) return std::nullopt;
  bool same_sign = (a > 0) == (b > 0);
  BraidWord out = w;
  int* t = out.letters.data() + pos;
  if (c == a && same_sign) {
    t[0] = b;
    t[1] = a;
    t[2] = b;
  } else if (c == -a && same_sign) {
    t[0] = -b;
    t[1] = a;
    t[2] = b;
  } else if (c == -a) {
    t[0] = b;
    t[1] = -a;
    t[2] = -b;
  } else {
    return std::nullopt;
  }
  return out;
}

StrandPermutation identity_permutation(int size) {
  StrandPermutation p;
  p.image.resize(size);
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

StrandPermutation underlying_permutation(const BraidWord& w) {
  int m = w.strand_count;
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  for (int g : w.letters) {
    int s = std::abs(g) - 1;
    std::swap(cur[s], cur[s + 1]);
  }
  StrandPermutation p;
  p.image.resize(m);
  for (int pos = 0; pos < m; ++pos) p.image[cur[pos]] = pos;
  return p;
}

StrandPermutation compose(const StrandPermutation& first,
                          const StrandPermutation& then) {
  assert(first.size() == then.size());
  StrandPermutation out;
  out.image.resize(first.size());
  for (int i = 0; i < first.size(); ++i)
    out.image[i] = then.image[first.image[i]];
  return out;
}

StrandPermutation inverse(const StrandPermutation& p) {
  StrandPermutation out;
  out.image.resize(p.size());
  for (int i = 0; i < p.size(); ++i) out.image[p.image[i]] = i;
  return out;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count != b.strand_count)
    throw std::invalid_argument("concat: strand counts differ");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord out;
  out.strand_count = w.strand_count;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    out.letters.push_back(-*it);
  return out;
}

BraidWord conjugate(const BraidWord& w, const BraidWord& u) {
  return concat(concat(u, w), invert(u));
}

BraidWord full_twist(int strand_count) {
  if (strand_count < 2)
    throw std::invalid_argument("full_twist: need at least 2 strands");
  BraidWord out;
  out.strand_count = strand_count;
  for (int rep = 0; rep < strand_count; ++rep)
    for (int g = 1; g < strand_count; ++g) out.letters.push_back(g);
  return out;
}

namespace {

// Simple (permutation braid) factors are identified with their permutations,
// stored as image vectors in the same convention as StrandPermutation.
using Perm = std::vector<int>;

Perm perm_identity(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_reversal(int m) {
  Perm p(m);
  for (int i = 0; i < m; ++i) p[i] = m - 1 - i;
  return p;
}

Perm perm_inverse(const Perm& p) {
  Perm out(p.size());
  for (size_t i = 0; i < p.size(); ++i) out[p[i]] = i;
  return out;
}

// Reduced positive word realizing the permutation braid with permutation p:
// bubble passes emit a crossing whenever adjacent strands are still out of
// order relative to their targets.
std::vector<int> perm_to_word(const Perm& p) {
  int m = static_cast<int>(p.size());
  std::vector<int> cur(m);
  std::iota(cur.begin(), cur.end(), 0);
  std::vector<int> out;
  bool swapped = true;
  while (swapped) {
    swapped = false;
    for (int s = 0; s + 1 < m; ++s) {
      if (p[cur[s]] > p[cur[s + 1]]) {
        out.push_back(s + 1);
        std::swap(cur[s], cur[s + 1]);
        swapped = true;
      }
    }
  }
  return out;
}

// Greedy left-to-right split of a positive word into permutation braids: the
// running factor absorbs the next crossing unless the two strands involved
// have already crossed.
std::vector<Perm> greedy_factors(int m, const std::vector<int>& letters) {
  std::vector<Perm> out;
  Perm cur = perm_identity(m);
  Perm cur_inv = cur;
  for (int g : letters) {
    assert(g > 0);
    int s = g - 1;
    if (cur_inv[s] > cur_inv[s + 1]) {
      out.push_back(cur);
      cur = perm_identity(m);
      cur_inv = cur;
    }
    int x = cur_inv[s], y = cur_inv[s + 1];
    cur[x] = s + 1;
    cur[y] = s;
    std::swap(cur_inv[s], cur_inv[s + 1]);
  }
  if (!perm_is_identity(cur)) out.push_back(cur);
  return out;
}

// Makes the pair (a, b) left-weighted by moving initial crossings of b into
// the finishing set of a. Returns true if anything moved.
bool left_weight_pair(Perm& a, Perm& b) {
  int m = static_cast<int>(a.size());
  Perm a_inv = perm_inverse(a);
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s = 0; s + 1 < m; ++s) {
      bool starts_b = b[s] > b[s + 1];
      bool finishes_a = a_inv[s] > a_inv[s + 1];
      if (starts_b && !finishes_a) {
        int x = a_inv[s], y = a_inv[s + 1];
        a[x] = s + 1;
        a[y] = s;
        std::swap(a_inv[s], a_inv[s + 1]);
        std::swap(b[s], b[s + 1]);
        moved = true;
        progress = true;
      }
    }
  }
  return moved;
}

struct PositiveNormalForm {
  int delta_count = 0;
  std::vector<Perm> factors;
};

PositiveNormalForm positive_normal_form(int m, const std::vector<int>& letters) {
  std::vector<Perm> f = greedy_factors(m, letters);
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = static_cast<int>(f.size()) - 2; j >= 0; --j)
      if (left_weight_pair(f[j], f[j + 1])) changed = true;
    size_t before = f.size();
    f.erase(std::remove_if(f.begin(), f.end(), perm_is_identity), f.end());
    if (f.size() != before) changed = true;
  }
  Perm rev = perm_reversal(m);
  size_t lead = 0;
  while (lead < f.size() && f[lead] == rev) ++lead;
  PositiveNormalForm nf;
  nf.delta_count = static_cast<int>(lead);
  nf.factors.assign(f.begin() + lead, f.end());
  return nf;
}

// Rewrites the word as an equal positive word by replacing each inverse
// letter s^-1 with (s^-1 D) D, where D is the positive half twist; this
// spends one central full twist per inverse letter, so pad_twists extra full
// twists are appended to keep a common balance across comparisons.
std::vector<int> positivize(const BraidWord& w, int pad_twists) {
  int m = w.strand_count;
  std::vector<int> delta_word = perm_to_word(perm_reversal(m));
  std::vector<int> out;
  for (int g : w.letters) {
    if (g > 0) {
      out.push_back(g);
      continue;
    }
    int s = -g - 1;
    // s^-1 D is the permutation braid whose permutation is the reversal
    // preceded by the transposition (s, s+1).
    Perm head = perm_reversal(m);
    std::swap(head[s], head[s + 1]);
    std::vector<int> head_word = perm_to_word(head);
    out.insert(out.end(), head_word.begin(), head_word.end());
    out.insert(out.end(), delta_word.begin(), delta_word.end());
  }
  for (int rep = 0; rep < pad_twists; ++rep) {
    out.insert(out.end(), delta_word.begin(), delta_word.end());
    out.insert(out.end(), delta_word.begin(), delta_word.end());
  }
  return out;
}

int negative_count(const BraidWord& w) {
  int q = 0;
  for (int g : w.letters)
    if (g < 0) ++q;
  return q;
}

}  // namespace

GarsideNormalForm garside_normal_form(const BraidWord& w) {
  if (!valid_word(w))
    throw std::invalid_argument("garside_normal_form: invalid braid word");
  int q = negative_count(w);
  std::vector<int> positive = positivize(w, 0);
  PositiveNormalForm nf = positive_normal_form(w.strand_count, positive);
  GarsideNormalForm out;
  out.strand_count = w.strand_count;
  out.delta_power = nf.delta_count - 2 * q;
  out.factors = std::move(nf.factors);
  return out;
}

bool words_equal(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count != b.strand_count) return false;
  return garside_normal_form(a) == garside_normal_form(b);
}

}  // namespace platcalc
