#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <vector>

#include "kschur/core.hpp"
#include "kschur/lincomb.hpp"
#include "kschur/partition.hpp"

namespace kschur {

// A k-tableau: a filling of the core of mu whose rows weakly increase,
// whose columns strictly increase, and whose letter-i cells occupy
// exactly weight_i distinct residues.
struct KTableau {
  Core shape;
  // rows[i-1] holds the entries of row i, left to right.
  std::vector<std::vector<int>> rows;
  std::vector<int> weight;
};

// All k-tableaux of shape core(mu) and the given weight, in a fixed
// deterministic order.  Requires sum(weight) = |mu|.
std::vector<KTableau> enumerate_k_tableaux(const Partition& mu,
                                           const std::vector<int>& weight,
                                           int k);

// Number of k-tableaux of shape core(mu) and the given weight, counted
// by dynamic programming over the letter-by-letter growth chains.
std::int64_t k_kostka(const Partition& mu, const std::vector<int>& weight,
                      int k);

// The matrix K[mu][lambda] over all k-bounded partitions of one degree,
// indexed in descending lexicographic order.
struct KMatrix {
  int k = 0;
  int degree = 0;
  std::vector<Partition> index;
  std::vector<std::vector<std::int64_t>> values;

  int position(const Partition& p) const;
};

KMatrix k_kostka_matrix(int k, int degree);

// Optional on-disk store for computed KMatrix values, keyed by
// (k, degree).  The file is versioned and each entry checksummed;
// unreadable or tampered entries are recomputed.  Safe for concurrent
// lookups from several threads.
class KMatrixCache {
 public:
  explicit KMatrixCache(std::filesystem::path path);
  ~KMatrixCache();

  const KMatrix& get(int k, int degree);
  void flush();

 private:
  void load();

  std::filesystem::path path_;
  std::mutex mutex_;
  std::map<std::pair<int, int>, KMatrix> entries_;
  bool dirty_ = false;
};

// The h-expansion of the k-Schur function of lambda obtained by
// inverting the unitriangular system h_lambda = sum over mu dominating
// lambda of K[mu][lambda] s^{(k)}_mu.
LinComb h_expansion_via_kostka(const Partition& lambda, int k,
                               KMatrixCache* cache = nullptr);

}  // namespace kschur
