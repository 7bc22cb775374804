#include "graded_match.hpp"

#include <algorithm>
#include <map>

namespace bratteli::detail {
namespace {

BigInt total(const Signature& s) {
  BigInt t = 0;
  for (const auto& r : s) t += r.second;
  return t;
}

void push_run(Signature& s, std::size_t v, const BigInt& c) {
  if (!s.empty() && s.back().first == v)
    s.back().second += c;
  else
    s.emplace_back(v, c);
}

LevelSignatures identity_block(std::size_t size) {
  LevelSignatures out(size);
  for (std::size_t v = 0; v < size; ++v) out[v] = {{v, BigInt(1)}};
  return out;
}

// Extends signatures relative to some earlier cut by one more level.
LevelSignatures compose(const LevelSignatures& prev, const LevelSignatures& raw, bool ordered) {
  LevelSignatures out(raw.size());
  for (std::size_t v = 0; v < raw.size(); ++v) {
    if (ordered) {
      Signature seq;
      for (const auto& [u, c] : raw[v])
        for (BigInt k = 0; k < c; ++k)
          for (const auto& [x, cx] : prev[u]) push_run(seq, x, cx);
      out[v] = std::move(seq);
    } else {
      std::map<std::size_t, BigInt> acc;
      for (const auto& [u, c] : raw[v])
        for (const auto& [x, cx] : prev[u]) acc[x] += c * cx;
      for (auto& [x, c] : acc) out[v].emplace_back(x, std::move(c));
    }
  }
  return out;
}

Signature relabel(const Signature& s, const std::vector<std::size_t>& perm, bool ordered) {
  Signature out;
  out.reserve(s.size());
  for (const auto& [x, c] : s) out.emplace_back(perm[x], c);
  if (!ordered) std::sort(out.begin(), out.end());
  return out;
}

class Matcher {
 public:
  Matcher(const GradedShape& target, const GradedShape& source, bool fixed)
      : t_(target), s_(source), fixed_(fixed) {}

  bool run() {
    if (t_.sizes.empty() || s_.sizes.empty()) return false;
    if (t_.sizes[0] != 1 || s_.sizes[0] != 1) return false;
    if (fixed_ && (t_.depth() != s_.depth() || t_.sizes != s_.sizes)) return false;
    return level(1, 0, {0});
  }

 private:
  bool level(std::size_t n, std::size_t m_prev, const std::vector<std::size_t>& perm_prev) {
    if (n > t_.depth()) return true;
    if (m_prev >= s_.depth()) return !fixed_ && n > 1;

    const std::size_t size = t_.sizes[n];
    LevelSignatures tsig(size);
    BigInt tmax = 0;
    for (std::size_t i = 0; i < size; ++i) {
      tsig[i] = relabel(t_.raw[n - 1][i], perm_prev, t_.ordered);
      tmax = std::max(tmax, total(tsig[i]));
    }
    std::vector<Signature> tsorted(tsig.begin(), tsig.end());
    std::sort(tsorted.begin(), tsorted.end());

    LevelSignatures cur = identity_block(s_.sizes[m_prev]);
    for (std::size_t m = m_prev + 1; m <= s_.depth(); ++m) {
      cur = compose(cur, s_.raw[m - 1], s_.ordered);
      if (fixed_ && m != n) continue;
      BigInt cmin = -1;
      for (const auto& sig : cur) {
        BigInt tt = total(sig);
        if (cmin < 0 || tt < cmin) cmin = tt;
      }
      if (s_.sizes[m] == size) {
        std::vector<Signature> ssorted(cur.begin(), cur.end());
        std::sort(ssorted.begin(), ssorted.end());
        if (ssorted == tsorted) {
          std::vector<std::size_t> perm(size);
          std::vector<char> used(size, 0);
          if (assign(n, m, tsig, cur, 0, perm, used)) return true;
        }
      }
      // Multiplicities only grow with deeper cuts.
      if (fixed_ || cmin > tmax) break;
    }
    return false;
  }

  bool assign(std::size_t n, std::size_t m, const LevelSignatures& tsig, const LevelSignatures& ssig,
              std::size_t i, std::vector<std::size_t>& perm, std::vector<char>& used) {
    if (i == tsig.size()) return level(n + 1, m, perm);
    for (std::size_t j = 0; j < ssig.size(); ++j) {
      if (used[j] || ssig[j] != tsig[i]) continue;
      used[j] = 1;
      perm[i] = j;
      if (assign(n, m, tsig, ssig, i + 1, perm, used)) return true;
      used[j] = 0;
    }
    return false;
  }

  const GradedShape& t_;
  const GradedShape& s_;
  bool fixed_;
};

}  // namespace

bool match(const GradedShape& target, const GradedShape& source, bool fixed_schedule) {
  return Matcher(target, source, fixed_schedule).run();
}

}  // namespace bratteli::detail
