#pragma once

namespace khintchine {

// The (N, M, p) triple behind every closed form: N signs, each +-1,
// conditioned on their sum being exactly M; moment order 2p.
//
// Invariants enforced at construction (violations throw
// std::invalid_argument with a message naming the offending rule):
//   N >= 1,  -N <= M <= N,  N - M even,  p >= 1.
class Parameters {
 public:
  Parameters(long n, long m, long p);

  long n() const { return n_; }
  long m() const { return m_; }
  long p() const { return p_; }

  long abs_m() const { return m_ < 0 ? -m_ : m_; }
  // Count of minority signs, (N - |M|)/2.  The parity split of the first
  // ell composition parts is what the tally closed form counts.
  long ell() const { return (n_ - abs_m()) / 2; }
  // Signs equal to +1, (N + M)/2 (uses the signed M).
  long positive_count() const { return (n_ + m_) / 2; }

 private:
  long n_;
  long m_;
  long p_;
};

}  // namespace khintchine
