#include "topicgraph/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <map>
#include <optional>

#include "topicgraph/corpus_io.hpp"
#include "topicgraph/errors.hpp"
#include "topicgraph/guidance.hpp"
#include "topicgraph/service.hpp"

namespace topicgraph {
namespace {

Tokenizer tokenizer_for(const std::string& stopwords) {
  return stopwords.empty() ? Tokenizer() : Tokenizer::from_stopword_file(stopwords);
}

void print_stats(const CorpusIndex& index, std::size_t top, std::ostream& out) {
  out << "doc_count: " << index.doc_count() << "\n";
  out << "vocabulary_size: " << index.vocabulary_size() << "\n";
  std::vector<TermId> terms(index.vocabulary_size());
  for (TermId t = 0; t < terms.size(); ++t) terms[t] = t;
  const auto k = std::min(top, terms.size());
  std::partial_sort(terms.begin(), terms.begin() + static_cast<std::ptrdiff_t>(k), terms.end(),
                    [&](TermId a, TermId b) {
                      if (index.df_global(a) != index.df_global(b)) {
                        return index.df_global(a) > index.df_global(b);
                      }
                      return a < b;
                    });
  out << "top_df:\n";
  for (std::size_t i = 0; i < k; ++i) {
    out << "  " << index.word(terms[i]) << " " << index.df_global(terms[i]) << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Topic word graphs for interactive document retrieval", "topicgraph"};
  app.require_subcommand(1);

  auto* index_cmd = app.add_subcommand("index", "Build or inspect a corpus index");
  index_cmd->require_subcommand(1);

  std::string build_source;
  std::string build_out;
  std::string stopwords;
  auto* build = index_cmd->add_subcommand("build", "Index a corpus directory or JSONL file");
  build->add_option("source", build_source, "Corpus directory (one file per document) or .jsonl")
      ->required();
  build->add_option("--out", build_out, "Index file to write")->required();
  build->add_option("--stopwords", stopwords, "Stopword list replacing the built-in one");

  std::string stats_path;
  std::size_t stats_top = 10;
  auto* stats = index_cmd->add_subcommand("stats", "Print index statistics");
  stats->add_option("index", stats_path, "Index file")->required();
  stats->add_option("--top", stats_top, "Number of highest-DF words to list");

  std::string query_index;
  std::string query_text;
  std::map<std::string, std::string> query_params;
  std::string format = "text";
  auto* query = app.add_subcommand("query", "Print the topic word graph for a query");
  query->add_option("index", query_index, "Index file")->required();
  query->add_option("terms", query_text, "Query terms (all must match)")->required();
  for (const char* name : {"n", "c", "l", "b", "mode", "width", "height", "min-dx", "c1", "c2",
                           "text-height"}) {
    std::string key = name;
    std::replace(key.begin(), key.end(), '-', '_');
    query->add_option_function<std::string>(
        std::string("--") + name, [&query_params, key](const std::string& v) { query_params[key] = v; },
        "Graph parameter '" + key + "'");
  }
  query->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "dot", "structured"}));
  query->add_option("--stopwords", stopwords, "Stopword list the index was built with");

  std::string config_path;
  std::string serve_index;
  std::optional<int> serve_port;
  std::string serve_host;
  std::string ui_dir;
  auto* serve = app.add_subcommand("serve", "Run the HTTP guidance service");
  serve->add_option("--config", config_path, "key = value config file");
  serve->add_option("--index", serve_index, "Index file (overrides config)");
  serve->add_option("--port", serve_port, "Port (overrides config)");
  serve->add_option("--host", serve_host, "Bind address (overrides config)");
  serve->add_option("--ui-dir", ui_dir, "Static UI bundle directory (overrides config)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) {
      const auto tokenizer = tokenizer_for(stopwords);
      const auto docs = read_corpus(build_source);
      const auto index = build_index(docs, tokenizer);
      save_index(index, build_out);
      out << "indexed " << index.doc_count() << " documents, " << index.vocabulary_size()
          << " words -> " << build_out << "\n";
    } else if (*stats) {
      print_stats(load_index(stats_path), stats_top, out);
    } else if (*query) {
      const auto tokenizer = tokenizer_for(stopwords);
      const auto index = load_index(query_index);
      query_params["q"] = query_text;
      const auto request = parse_graph_request(query_params);
      const auto payload = build_graph(index, tokenizer, request);
      if (format == "structured") {
        out << serialize(to_json(payload));
      } else if (format == "dot") {
        out << to_dot(payload);
      } else {
        out << to_text(payload);
      }
    } else if (*serve) {
      auto config = load_service_config(config_path);
      if (!serve_index.empty()) config.index_path = serve_index;
      if (serve_port) config.port = *serve_port;
      if (!serve_host.empty()) config.host = serve_host;
      if (!ui_dir.empty()) config.ui_dir = ui_dir;
      GuidanceService service(config);
      const int port = service.bind();
      out << "serving " << service.index()->doc_count() << " documents on http://"
          << config.host << ":" << port << "\n"
          << std::flush;
      service.serve();
    }
  } catch (const ParameterError& e) {
    if (e.parameter() == "q") {
      err << "error: " << e.what() << "\n";
    } else {
      err << "error: --" << e.parameter() << ": " << e.what() << "\n";
    }
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}

}  // namespace topicgraph
