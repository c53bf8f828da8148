#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "schurlab/partition.hpp"

namespace schurlab {

using Integer = mpz_class;

/// Truncated: work in n variables, where s_lambda = 0 for l(lambda) > n.
/// Formal: keep every partition; n only enters as a numeric parameter.
enum class Mode { Truncated, Formal };

std::string_view to_string(Mode mode);
Mode parse_mode(std::string_view text);

/// Element of Lambda_d written in the Schur basis. Zero coefficients are
/// never stored, so equality is structural.
class SchurVector {
 public:
  using Terms = std::map<Partition, Integer>;

  SchurVector(int nvars, Mode mode);

  static SchurVector unit(const Partition& lambda, int nvars, Mode mode);

  int nvars() const noexcept { return nvars_; }
  Mode mode() const noexcept { return mode_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Common size of the stored partitions, or -1 for the zero vector.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.begin()->first.size(); }

  Integer coefficient(const Partition& lambda) const;

  /// Adds c * s_lambda. In truncated mode, partitions longer than nvars are
  /// dropped. Mixing degrees throws InvalidInput.
  void add_term(const Partition& lambda, const Integer& c);

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);

  friend bool operator==(const SchurVector& a, const SchurVector& b) {
    return a.nvars_ == b.nvars_ && a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int nvars_;
  Mode mode_;
  Terms terms_;
};

SchurVector add(const SchurVector& a, const SchurVector& b);
SchurVector subtract(const SchurVector& a, const SchurVector& b);
SchurVector scale(const SchurVector& a, const Integer& c);
SchurVector operator+(const SchurVector& a, const SchurVector& b);
SchurVector operator-(const SchurVector& a, const SchurVector& b);
SchurVector operator*(const Integer& c, const SchurVector& a);

/// Drops every partition longer than nvars and retags as truncated.
SchurVector truncate(const SchurVector& v);

/// Bilinear Schur product through LR coefficients (memoized).
SchurVector multiply(const SchurVector& a, const SchurVector& b);
SchurVector operator*(const SchurVector& a, const SchurVector& b);

struct PositivityVerdict {
  bool positive = true;
  /// Lexicographically least partition carrying a negative coefficient.
  std::optional<std::pair<Partition, Integer>> witness;
};

PositivityVerdict is_schur_positive(const SchurVector& v);

struct LrKey {
  Partition outer;
  Partition inner;
  Partition content;
  friend bool operator==(const LrKey&, const LrKey&) = default;
};

struct LrKeyHash {
  std::size_t operator()(const LrKey& k) const noexcept;
};

/// Thread-safe memo of LR coefficients. Inserts are idempotent; concurrent
/// misses on the same key may both enumerate and the later write wins.
class LrCache {
 public:
  std::uint64_t coefficient(const Partition& outer, const Partition& inner, const Partition& content);

  std::optional<std::uint64_t> find(const LrKey& key) const;
  /// Inserts or checks a record; returns false if an existing record holds a
  /// different value.
  bool merge(const LrKey& key, std::uint64_t value);

  std::vector<std::pair<LrKey, std::uint64_t>> snapshot() const;
  std::size_t size() const;
  void clear();

  std::uint64_t enumerations() const noexcept { return enumerations_.load(); }
  std::uint64_t lookups() const noexcept { return lookups_.load(); }
  void reset_stats() noexcept {
    enumerations_ = 0;
    lookups_ = 0;
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<LrKey, std::uint64_t, LrKeyHash> table_;
  std::atomic<std::uint64_t> enumerations_{0};
  std::atomic<std::uint64_t> lookups_{0};
};

/// Process-wide cache used by multiply().
LrCache& lr_cache();

/// Drops the memoized unit products that sit on top of the LR cache.
void clear_product_memo();

}  // namespace schurlab
