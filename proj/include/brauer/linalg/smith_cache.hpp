#pragma once

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "brauer/linalg/lattice.hpp"
#include "brauer/linalg/sparse_matrix.hpp"

namespace brauer::linalg {

inline constexpr const char* kCacheEnvVar = "BRAUER_CACHE_DIR";

// Content-addressed store of adapted bases keyed by the boundary matrix digest
// and the algorithm version. Concurrent readers share a lock; writers are
// serialized. The optional disk layer uses an advisory flock per directory.
class SmithCache {
 public:
  SmithCache() = default;
  explicit SmithCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  static SmithCache& global() {
    static SmithCache cache = [] {
      const char* dir = std::getenv(kCacheEnvVar);
      return (dir != nullptr && *dir != '\0') ? SmithCache(dir) : SmithCache();
    }();
    return cache;
  }

  std::shared_ptr<const AdaptedBasis> adapted_basis(const SparseIntMatrix& b) {
    if (!enabled_) return std::make_shared<const AdaptedBasis>(compute_adapted_basis(b));
    const std::string key = key_for(b);
    {
      std::shared_lock lock(mutex_);
      if (auto it = memory_.find(key); it != memory_.end()) {
        ++hits_;
        return it->second;
      }
    }
    std::shared_ptr<const AdaptedBasis> value;
    if (!dir_.empty()) value = load(key);
    if (value) {
      ++disk_hits_;
    } else {
      value = std::make_shared<const AdaptedBasis>(compute_adapted_basis(b));
      ++misses_;
      if (!dir_.empty()) store(key, *value);
    }
    std::unique_lock lock(mutex_);
    return memory_.emplace(key, value).first->second;
  }

  void set_enabled(bool on) { enabled_ = on; }
  void clear_memory() {
    std::unique_lock lock(mutex_);
    memory_.clear();
  }
  [[nodiscard]] std::size_t hits() const noexcept { return hits_; }
  [[nodiscard]] std::size_t disk_hits() const noexcept { return disk_hits_; }
  [[nodiscard]] std::size_t misses() const noexcept { return misses_; }

  static std::string key_for(const SparseIntMatrix& b) {
    Digest d;
    d.add(std::string_view(kSmithAlgorithmVersion));
    d.add(std::string_view(b.digest()));
    return d.hex();
  }

 private:
  class DirLock {
   public:
    explicit DirLock(const std::filesystem::path& dir) {
      fd_ = ::open((dir / ".lock").c_str(), O_CREAT | O_RDWR, 0644);
      if (fd_ >= 0) ::flock(fd_, LOCK_EX);
    }
    ~DirLock() {
      if (fd_ >= 0) {
        ::flock(fd_, LOCK_UN);
        ::close(fd_);
      }
    }
    DirLock(const DirLock&) = delete;
    DirLock& operator=(const DirLock&) = delete;

   private:
    int fd_ = -1;
  };

  static void write_dense(std::ostream& os, const IntMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
      os << '\n';
    }
  }
  static bool read_dense(std::istream& is, IntMatrix& m) {
    std::string tok;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!(is >> tok)) return false;
        m(r, c) = Integer::parse(tok);
      }
    return true;
  }

  std::shared_ptr<const AdaptedBasis> load(const std::string& key) const {
    DirLock lock(dir_);
    std::ifstream in(dir_ / (key + ".adapted"));
    if (!in) return nullptr;
    std::string magic, version;
    std::size_t n = 0, r = 0;
    if (!(in >> magic >> version >> n >> r) || magic != "adapted" ||
        version != kSmithAlgorithmVersion) {
      return nullptr;
    }
    try {
      AdaptedBasis a;
      std::string tok;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(in >> tok)) return nullptr;
        a.invariants.push_back(Integer::parse(tok));
      }
      a.U = IntMatrix(n, n);
      a.U_inverse = IntMatrix(n, n);
      if (!read_dense(in, a.U) || !read_dense(in, a.U_inverse)) return nullptr;
      return std::make_shared<const AdaptedBasis>(std::move(a));
    } catch (const std::invalid_argument&) {
      return nullptr;
    }
  }

  void store(const std::string& key, const AdaptedBasis& a) const {
    DirLock lock(dir_);
    const auto final_path = dir_ / (key + ".adapted");
    const auto tmp_path = dir_ / (key + ".adapted.tmp");
    {
      std::ofstream out(tmp_path);
      out << "adapted " << kSmithAlgorithmVersion << ' ' << a.dimension() << ' ' << a.rank()
          << '\n';
      for (std::size_t i = 0; i < a.invariants.size(); ++i) {
        out << (i ? " " : "") << a.invariants[i];
      }
      out << '\n';
      write_dense(out, a.U);
      write_dense(out, a.U_inverse);
    }
    std::error_code ec;
    std::filesystem::rename(tmp_path, final_path, ec);
  }

  std::filesystem::path dir_;
  bool enabled_ = true;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, std::shared_ptr<const AdaptedBasis>> memory_;
  std::atomic<std::size_t> hits_{0}, disk_hits_{0}, misses_{0};
};

}  // namespace brauer::linalg
