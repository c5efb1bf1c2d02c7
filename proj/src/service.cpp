#include "topicgraph/service.hpp"

#include <httplib.h>

#include <fstream>
#include <map>
#include <sstream>

#include "topicgraph/errors.hpp"

namespace topicgraph {
namespace {

constexpr const char* kJson = "application/json";

Tokenizer make_tokenizer(const ServiceConfig& config) {
  if (config.stopwords_path.empty()) return Tokenizer();
  return Tokenizer::from_stopword_file(config.stopwords_path);
}

std::shared_ptr<const CorpusIndex> load_for_service(const std::filesystem::path& path) {
  if (path.empty()) {
    throw DataError("no index configured; set 'index' in the config file or TOPICGRAPH_INDEX");
  }
  if (!std::filesystem::exists(path)) {
    throw DataError("index file " + path.string() +
                    " not found; build one with 'topicgraph index build <corpus> --out " +
                    path.string() + "'");
  }
  return std::make_shared<const CorpusIndex>(load_index(path));
}

void set_value(ServiceConfig& cfg, const std::string& key, const std::string& value) {
  auto as_count = [&](const std::string& v) {
    try {
      std::size_t used = 0;
      const auto n = std::stoul(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
      return n;
    } catch (const std::exception&) {
      throw DataError("config key '" + key + "' expects an integer, got '" + v + "'");
    }
  };
  if (key == "host") {
    cfg.host = value;
  } else if (key == "port") {
    cfg.port = static_cast<int>(as_count(value));
  } else if (key == "index") {
    cfg.index_path = value;
  } else if (key == "ui_dir") {
    cfg.ui_dir = value;
  } else if (key == "stopwords") {
    cfg.stopwords_path = value;
  } else if (key == "page_size") {
    cfg.page_size = as_count(value);
  } else {
    static const char* kGraphKeys[] = {"n",      "c",      "l",      "b",          "mode", "width",
                                       "height", "min_dx", "c1",     "c2",         "text_height"};
    bool known = false;
    for (const char* k : kGraphKeys) known = known || key == k;
    if (!known) throw DataError("unknown config key '" + key + "'");
    // Reuse the request parser so defaults obey the same domains as requests.
    const auto req = parse_graph_request({{"q", "_"}, {key, value}}, cfg.defaults);
    cfg.defaults.classes = req.classes;
    cfg.defaults.layout = req.layout;
    cfg.defaults.mode = req.mode;
  }
}

}  // namespace

ServiceConfig parse_service_config(std::string_view text) {
  ServiceConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw DataError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    try {
      set_value(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ParameterError& e) {
      throw DataError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

void apply_environment(ServiceConfig& cfg, const EnvLookup& env) {
  static const char* kKeys[] = {"host",   "port",   "index", "ui_dir", "stopwords",
                                "page_size", "n",   "c",     "l",      "b",
                                "mode",   "width",  "height", "min_dx", "c1",
                                "c2",     "text_height"};
  for (const char* key : kKeys) {
    std::string name = "TOPICGRAPH_";
    for (const char* p = key; *p; ++p) name.push_back(static_cast<char>(std::toupper(*p)));
    if (const char* value = env(name.c_str())) {
      try {
        set_value(cfg, key, value);
      } catch (const ParameterError& e) {
        throw DataError(name + ": " + e.what());
      }
    }
  }
}

ServiceConfig load_service_config(const std::filesystem::path& file, const EnvLookup& env) {
  ServiceConfig cfg;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw DataError("cannot read config file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    cfg = parse_service_config(buf.str());
  }
  apply_environment(cfg, env);
  return cfg;
}

GuidanceService::GuidanceService(ServiceConfig config)
    : config_(std::move(config)),
      tokenizer_(make_tokenizer(config_)),
      index_(load_for_service(config_.index_path)),
      server_(std::make_unique<httplib::Server>()) {
  check_tokenizer(*index_, tokenizer_);
  install_routes();
}

GuidanceService::GuidanceService(ServiceConfig config, CorpusIndex index)
    : config_(std::move(config)),
      tokenizer_(make_tokenizer(config_)),
      index_(std::make_shared<const CorpusIndex>(std::move(index))),
      server_(std::make_unique<httplib::Server>()) {
  check_tokenizer(*index_, tokenizer_);
  install_routes();
}

GuidanceService::~GuidanceService() { stop(); }

std::shared_ptr<const CorpusIndex> GuidanceService::index() const {
  std::lock_guard lock(index_mutex_);
  return index_;
}

void GuidanceService::reload() {
  auto fresh = load_for_service(config_.index_path);
  check_tokenizer(*fresh, tokenizer_);
  std::lock_guard lock(index_mutex_);
  index_ = std::move(fresh);
}

int GuidanceService::bind() {
  if (config_.port == 0) {
    port_ = server_->bind_to_any_port(config_.host);
  } else {
    port_ = server_->bind_to_port(config_.host, config_.port) ? config_.port : -1;
  }
  if (port_ < 0) {
    throw DataError("cannot bind " + config_.host + ":" + std::to_string(config_.port));
  }
  return port_;
}

void GuidanceService::serve() { server_->listen_after_bind(); }

int GuidanceService::start() {
  const int port = bind();
  worker_ = std::thread([this] { serve(); });
  server_->wait_until_ready();
  return port;
}

void GuidanceService::stop() {
  if (server_) server_->stop();
  if (worker_.joinable()) worker_.join();
}

void GuidanceService::install_routes() {
  auto reply_error = [](httplib::Response& res, int status, const std::string& parameter,
                        const std::string& message) {
    res.status = status;
    res.set_content(serialize(error_json(parameter, message)), kJson);
  };
  auto params_of = [](const httplib::Request& req) {
    std::map<std::string, std::string> params;
    for (const auto& [k, v] : req.params) params[k] = v;  // last value wins
    return params;
  };
  // Shared failure mapping: bad input is the client's fault, everything else ours.
  auto guarded = [reply_error](auto&& body) {
    return [reply_error, body](const httplib::Request& req, httplib::Response& res) {
      try {
        body(req, res);
      } catch (const ParameterError& e) {
        reply_error(res, 400, e.parameter(), e.what());
      } catch (const ContractViolation& e) {
        reply_error(res, 400, "", e.what());
      } catch (const std::exception& e) {
        reply_error(res, 500, "", e.what());
      }
    };
  };

  server_->Get("/healthz", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\":\"ok\"}\n", kJson);
  });

  server_->Get("/search", guarded([this, params_of](const httplib::Request& req,
                                                     httplib::Response& res) {
                 const auto params = params_of(req);
                 auto q = params.find("q");
                 if (q == params.end()) throw ParameterError("q", "missing query parameter 'q'");
                 const auto idx = index();
                 res.set_content(
                     serialize(to_json(search(*idx, tokenizer_, q->second, config_.page_size))),
                     kJson);
               }));

  server_->Get("/graph", guarded([this, params_of](const httplib::Request& req,
                                                    httplib::Response& res) {
                 const auto request = parse_graph_request(params_of(req), config_.defaults);
                 const auto idx = index();
                 res.set_content(serialize(to_json(build_graph(*idx, tokenizer_, request))), kJson);
               }));

  server_->Post("/admin/reload", guarded([this](const httplib::Request&, httplib::Response& res) {
                  reload();
                  const auto idx = index();
                  nlohmann::ordered_json doc;
                  doc["schema_version"] = kPayloadSchemaVersion;
                  doc["doc_count"] = idx->doc_count();
                  doc["vocabulary_size"] = idx->vocabulary_size();
                  res.set_content(serialize(doc), kJson);
                }));

  if (!config_.ui_dir.empty()) {
    if (!server_->set_mount_point("/", config_.ui_dir.string())) {
      throw DataError("ui_dir " + config_.ui_dir.string() + " is not a directory");
    }
  }
}

}  // namespace topicgraph
