#include "kschur/ktableau.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "kschur/enumeration.hpp"
#include "kschur/json_io.hpp"

namespace kschur {

namespace {

void validate_weight(const Partition& mu, const std::vector<int>& weight,
                     int k) {
  if (mu.part(1) > k)
    throw std::invalid_argument("partition is not k-bounded");
  int total = 0;
  for (int w : weight) {
    if (w < 0) throw std::invalid_argument("weight entries must be >= 0");
    total += w;
  }
  if (total != mu.degree())
    throw std::invalid_argument("weight does not sum to the degree");
}

// All shapes nu with cur <= nu <= bound such that nu/cur is a
// horizontal strip occupying exactly want distinct residues.
std::vector<Partition> strip_growths(const Partition& cur,
                                     const Partition& bound, int want,
                                     int k) {
  std::vector<Partition> out;
  const int rows = std::min(cur.length() + 1, bound.length());
  std::vector<int> nu(std::max(rows, 1), 0);
  std::uint32_t residues = 0;
  std::function<void(int)> rec = [&](int i) {
    if (i > rows) {
      if (std::popcount(residues) == want)
        out.push_back(Partition(std::vector<int>(nu.begin(), nu.end())));
      return;
    }
    const int lo = cur.part(i);
    const int hi =
        i == 1 ? bound.part(1) : std::min(bound.part(i), cur.part(i - 1));
    for (int v = lo; v <= hi; ++v) {
      std::uint32_t added = 0;
      for (int c = lo + 1; c <= v; ++c)
        added |= std::uint32_t{1} << residue(i, c, k);
      nu[i - 1] = v;
      const std::uint32_t saved = residues;
      residues |= added;
      rec(i + 1);
      residues = saved;
    }
    nu[i - 1] = lo;
  };
  if (rows == 0) {
    if (want == 0) out.push_back(cur);
    return out;
  }
  rec(1);
  return out;
}

}  // namespace

std::vector<KTableau> enumerate_k_tableaux(const Partition& mu,
                                           const std::vector<int>& weight,
                                           int k) {
  validate_weight(mu, weight, k);
  const Core target = Core::from_bounded(mu, k);
  const Partition& full = target.shape();
  const int letters = static_cast<int>(weight.size());

  std::vector<KTableau> out;
  std::vector<Partition> chain{Partition()};
  std::function<void(int)> rec = [&](int i) {
    const Partition& cur = chain.back();
    if (i == letters) {
      if (cur != full) return;
      KTableau t{target, {}, weight};
      t.rows.resize(full.length());
      for (int r = 1; r <= full.length(); ++r)
        t.rows[r - 1].resize(full.part(r), 0);
      for (int step = 1; step <= letters; ++step)
        for (int r = 1; r <= chain[step].length(); ++r)
          for (int c = chain[step - 1].part(r) + 1; c <= chain[step].part(r);
               ++c)
            t.rows[r - 1][c - 1] = step;
      out.push_back(std::move(t));
      return;
    }
    int rest = 0;
    for (int j = i + 1; j < letters; ++j) rest += weight[j];
    for (Partition& nu : strip_growths(cur, full, weight[i], k)) {
      if (full.degree() - nu.degree() < rest) continue;
      chain.push_back(std::move(nu));
      rec(i + 1);
      chain.pop_back();
    }
  };
  rec(0);
  return out;
}

std::int64_t k_kostka(const Partition& mu, const std::vector<int>& weight,
                      int k) {
  validate_weight(mu, weight, k);
  const Core target = Core::from_bounded(mu, k);
  const Partition& full = target.shape();
  std::map<Partition, std::int64_t, PartitionDescLex> states;
  states.emplace(Partition(), 1);
  for (int w : weight) {
    std::map<Partition, std::int64_t, PartitionDescLex> next;
    for (const auto& [cur, count] : states)
      for (const Partition& nu : strip_growths(cur, full, w, k)) {
        auto [it, inserted] = next.emplace(nu, count);
        if (!inserted) it->second = checked_add(it->second, count);
      }
    states = std::move(next);
  }
  auto it = states.find(full);
  return it == states.end() ? 0 : it->second;
}

int KMatrix::position(const Partition& p) const {
  for (std::size_t i = 0; i < index.size(); ++i)
    if (index[i] == p) return static_cast<int>(i);
  throw std::invalid_argument("partition not in matrix index");
}

KMatrix k_kostka_matrix(int k, int degree) {
  KMatrix m;
  m.k = k;
  m.degree = degree;
  m.index = partitions_of(degree, k);
  const std::size_t n = m.index.size();
  m.values.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m.values[i][j] = k_kostka(m.index[i], m.index[j].parts(), k);
  return m;
}

LinComb h_expansion_via_kostka(const Partition& lambda, int k,
                               KMatrixCache* cache) {
  if (lambda.part(1) > k)
    throw std::invalid_argument("partition is not k-bounded");
  KMatrix local;
  const KMatrix& m =
      cache ? cache->get(k, lambda.degree())
            : (local = k_kostka_matrix(k, lambda.degree()), local);
  const std::size_t n = m.index.size();
  // The index order refines dominance, so the matrix must be upper
  // unitriangular; anything else is a computation bug.
  for (std::size_t i = 0; i < n; ++i) {
    if (m.values[i][i] != 1)
      throw std::logic_error("k-tableau count of shape = weight is not 1");
    for (std::size_t j = 0; j < i; ++j)
      if (m.values[i][j] != 0)
        throw std::logic_error("k-tableau matrix is not triangular");
  }
  const std::size_t pos = static_cast<std::size_t>(m.position(lambda));
  std::vector<LinComb> expansion;
  expansion.reserve(pos + 1);
  for (std::size_t j = 0; j <= pos; ++j) {
    LinComb e = LinComb::unit(Basis::h, m.index[j]);
    for (std::size_t i = 0; i < j; ++i)
      if (m.values[i][j] != 0) e -= expansion[i] * m.values[i][j];
    expansion.push_back(std::move(e));
  }
  return expansion[pos];
}

namespace {

constexpr int kCacheVersion = 1;

std::uint64_t fnv1a(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

nlohmann::ordered_json entry_payload(const KMatrix& m) {
  nlohmann::ordered_json e;
  e["k"] = m.k;
  e["degree"] = m.degree;
  nlohmann::ordered_json index = nlohmann::ordered_json::array();
  for (const Partition& p : m.index) index.push_back(partition_to_json(p));
  e["index"] = std::move(index);
  e["values"] = m.values;
  return e;
}

}  // namespace

KMatrixCache::KMatrixCache(std::filesystem::path path)
    : path_(std::move(path)) {
  load();
}

KMatrixCache::~KMatrixCache() {
  try {
    flush();
  } catch (...) {
    // A failed cache write must not take the computation down.
  }
}

void KMatrixCache::load() {
  if (path_.empty()) return;  // in-memory cache
  std::ifstream in(path_);
  if (!in) return;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception&) {
    return;  // corrupt file: behave as an empty cache
  }
  if (!doc.is_object() || doc.value("version", 0) != kCacheVersion) return;
  if (!doc.contains("entries") || !doc["entries"].is_array()) return;
  for (const auto& raw : doc["entries"]) {
    try {
      KMatrix m;
      m.k = raw.at("k").get<int>();
      m.degree = raw.at("degree").get<int>();
      for (const auto& p : raw.at("index"))
        m.index.push_back(partition_from_json(p));
      m.values =
          raw.at("values").get<std::vector<std::vector<std::int64_t>>>();
      const std::string sum = raw.at("checksum").get<std::string>();
      if (std::to_string(fnv1a(entry_payload(m).dump())) != sum) continue;
      entries_.emplace(std::make_pair(m.k, m.degree), std::move(m));
    } catch (const std::exception&) {
      // skip unreadable entries
    }
  }
}

const KMatrix& KMatrixCache::get(int k, int degree) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = entries_.find({k, degree});
  if (it == entries_.end()) {
    it = entries_.emplace(std::make_pair(k, degree), k_kostka_matrix(k, degree))
             .first;
    dirty_ = true;
  }
  return it->second;
}

void KMatrixCache::flush() {
  std::lock_guard<std::mutex> lock(mutex_);
  if (!dirty_ || path_.empty()) return;
  nlohmann::ordered_json doc;
  doc["format"] = "kschur-kostka-cache";
  doc["version"] = kCacheVersion;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [key, m] : entries_) {
    nlohmann::ordered_json e = entry_payload(m);
    e["checksum"] = std::to_string(fnv1a(e.dump()));
    entries.push_back(std::move(e));
  }
  doc["entries"] = std::move(entries);
  std::ofstream out(path_);
  if (!out) throw std::runtime_error("cannot write cache file");
  out << doc.dump(1) << "\n";
  dirty_ = false;
}

}  // namespace kschur
