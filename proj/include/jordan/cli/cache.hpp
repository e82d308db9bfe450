#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "jordan/group/jordan.hpp"

namespace jordan::cli {

// Stable key for a group: the group spec string plus the canonical forms of its
// generators.
std::string group_fingerprint(const std::string& spec, const FiniteGroup& g);

// JSON file mapping fingerprints to certificates. The file is only touched
// while an advisory lock on `<path>.lock` is held; when the lock is taken by
// someone else the cache is bypassed for the whole run.
class CertificateCache {
 public:
  // Empty path disables the cache.
  explicit CertificateCache(std::string path);
  ~CertificateCache();
  CertificateCache(const CertificateCache&) = delete;
  CertificateCache& operator=(const CertificateCache&) = delete;

  bool enabled() const { return lock_fd_ >= 0; }

  // Entries that fail to parse or fail the certificate re-check are dropped.
  std::optional<JordanCertificate> lookup(const std::string& key, const GroupPtr& g);
  void store(const std::string& key, const JordanCertificate& cert);

  // Writes back if anything changed (temp file + rename).
  void flush();

  std::size_t discarded() const { return discarded_; }

 private:
  std::string path_;
  int lock_fd_ = -1;
  nlohmann::json entries_ = nlohmann::json::object();
  bool dirty_ = false;
  std::size_t discarded_ = 0;
};

}  // namespace jordan::cli
