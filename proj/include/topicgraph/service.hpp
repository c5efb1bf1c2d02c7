#pragma once

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "topicgraph/corpus_index.hpp"
#include "topicgraph/guidance.hpp"

namespace httplib {
class Server;
}

namespace topicgraph {

struct ServiceConfig {
  std::string host = "127.0.0.1";
  /// 0 binds an ephemeral port.
  int port = 8080;
  std::filesystem::path index_path;
  /// Static UI bundle served under "/" when set.
  std::filesystem::path ui_dir;
  /// Custom stopword list; the built-in list when empty.
  std::filesystem::path stopwords_path;
  std::size_t page_size = 50;
  GraphDefaults defaults;
};

using EnvLookup = std::function<const char*(const char*)>;

/// "key = value" lines, '#' comments. Keys: host, port, index, ui_dir,
/// stopwords, page_size, n, c, l, b, mode, width, height, min_dx, text_height.
ServiceConfig parse_service_config(std::string_view text);

/// Overrides fields from TOPICGRAPH_<KEY> environment variables.
void apply_environment(ServiceConfig& config, const EnvLookup& env = std::getenv);

/// Reads the file (if the path is non-empty) and applies the environment.
ServiceConfig load_service_config(const std::filesystem::path& file,
                                  const EnvLookup& env = std::getenv);

/// HTTP front end over one immutable index.
///
///   GET  /search?q=...          title list
///   GET  /graph?q=...&n&c&l&b&mode   topic word graph payload
///   POST /admin/reload          re-reads the index file and swaps it in
///   GET  /healthz
class GuidanceService {
 public:
  /// Loads config.index_path; throws DataError with a remediation hint when missing.
  explicit GuidanceService(ServiceConfig config);
  GuidanceService(ServiceConfig config, CorpusIndex index);
  ~GuidanceService();

  GuidanceService(const GuidanceService&) = delete;
  GuidanceService& operator=(const GuidanceService&) = delete;

  /// Binds the listening socket and returns the port actually bound.
  int bind();
  /// Serves on the bound socket until stop(); blocks.
  void serve();
  /// bind() followed by serve() on a background thread.
  int start();
  void stop();

  /// Atomically replaces the index with a fresh load of config.index_path.
  void reload();

  std::shared_ptr<const CorpusIndex> index() const;
  const Tokenizer& tokenizer() const noexcept { return tokenizer_; }
  const ServiceConfig& config() const noexcept { return config_; }

 private:
  void install_routes();

  ServiceConfig config_;
  Tokenizer tokenizer_;
  mutable std::mutex index_mutex_;
  std::shared_ptr<const CorpusIndex> index_;
  std::unique_ptr<httplib::Server> server_;
  std::thread worker_;
  int port_ = -1;
};

}  // namespace topicgraph
