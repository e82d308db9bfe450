#include "jordan/cli/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jordan/group/io.hpp"

namespace jordan::cli {

std::string group_fingerprint(const std::string& spec, const FiniteGroup& g) {
  std::string out = spec + "|";
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    if (i) out += ";";
    out += g.generators()[i].to_string();
  }
  return out;
}

CertificateCache::CertificateCache(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  const std::string lock = path_ + ".lock";
  int fd = ::open(lock.c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
  if (fd < 0) return;
  if (::flock(fd, LOCK_EX | LOCK_NB) != 0) {
    ::close(fd);
    return;
  }
  lock_fd_ = fd;

  std::ifstream in(path_);
  if (!in) return;
  std::stringstream buf;
  buf << in.rdbuf();
  auto parsed = nlohmann::json::parse(buf.str(), nullptr, false);
  if (parsed.is_object() && parsed.value("version", 0) == 1 && parsed.contains("entries") &&
      parsed["entries"].is_object()) {
    entries_ = parsed["entries"];
  } else {
    // Unreadable file: start over, overwrite on flush.
    dirty_ = true;
    ++discarded_;
  }
}

CertificateCache::~CertificateCache() {
  flush();
  if (lock_fd_ >= 0) {
    ::flock(lock_fd_, LOCK_UN);
    ::close(lock_fd_);
  }
}

std::optional<JordanCertificate> CertificateCache::lookup(const std::string& key, const GroupPtr& g) {
  if (!enabled() || !entries_.contains(key)) return std::nullopt;
  try {
    JordanCertificate cert = certificate_from_json(entries_[key], g);
    CertificateChecks fresh = recheck_certificate(cert);
    fresh.search_was_exhaustive = cert.checks.search_was_exhaustive;
    if (cert.group_order == g->order() && fresh.all() && fresh == cert.checks) return cert;
  } catch (const std::exception&) {
  }
  entries_.erase(key);
  dirty_ = true;
  ++discarded_;
  return std::nullopt;
}

void CertificateCache::store(const std::string& key, const JordanCertificate& cert) {
  if (!enabled()) return;
  entries_[key] = certificate_to_json(cert);
  dirty_ = true;
}

void CertificateCache::flush() {
  if (!enabled() || !dirty_) return;
  const std::string tmp = path_ + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << nlohmann::json{{"version", 1}, {"entries", entries_}}.dump(2) << "\n";
    if (!out) return;
  }
  if (std::rename(tmp.c_str(), path_.c_str()) == 0) dirty_ = false;
}

}  // namespace jordan::cli
