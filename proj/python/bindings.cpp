#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "topicgraph/errors.hpp"
#include "topicgraph/graph_layout.hpp"
#include "topicgraph/guidance.hpp"
#include "topicgraph/link_builder.hpp"
#include "topicgraph/retrieval.hpp"
#include "topicgraph/topic_extraction.hpp"

namespace py = pybind11;
using namespace topicgraph;

namespace {

std::map<std::string, std::string> to_params(const py::dict& d) {
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : d) out[py::str(k)] = py::str(v);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Topic-word graph construction over a document collection";

  auto base = py::register_exception<Error>(m, "TopicgraphError", PyExc_RuntimeError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<DataError>(m, "DataError", base.ptr());
  py::register_exception<IndexFormatError>(m, "IndexFormatError", base.ptr());
  py::register_exception<StaleIndexError>(m, "StaleIndexError", base.ptr());
  py::register_exception<ContractViolation>(m, "ContractViolation", base.ptr());

  py::class_<Tokenizer>(m, "Tokenizer")
      .def(py::init<>())
      .def(py::init<std::vector<std::string>>(), py::arg("stopwords"))
      .def_static("from_stopword_file", &Tokenizer::from_stopword_file)
      .def("tokenize", &Tokenizer::tokenize)
      .def("is_stopword", &Tokenizer::is_stopword);
  m.def("tokenize", [](std::string_view text) { return tokenize(text); });

  py::class_<Document>(m, "Document")
      .def(py::init([](std::int64_t id, std::string title, std::string body) {
             return Document{id, std::move(title), std::move(body)};
           }),
           py::arg("doc_id"), py::arg("title"), py::arg("body") = "")
      .def_readwrite("doc_id", &Document::doc_id)
      .def_readwrite("title", &Document::title)
      .def_readwrite("body", &Document::body);

  py::class_<CorpusIndex>(m, "CorpusIndex")
      .def_property_readonly("doc_count", &CorpusIndex::doc_count)
      .def_property_readonly("vocabulary_size", &CorpusIndex::vocabulary_size)
      .def_property_readonly("vocabulary", &CorpusIndex::vocabulary)
      .def("df_global", py::overload_cast<std::string_view>(&CorpusIndex::df_global, py::const_))
      .def("postings",
           [](const CorpusIndex& idx, std::string_view w) {
             auto p = idx.postings(w);
             return std::vector<DocOrdinal>(p.begin(), p.end());
           })
      .def("doc_id", [](const CorpusIndex& idx, DocOrdinal ord) { return idx.document(ord).doc_id; })
      .def("__eq__", [](const CorpusIndex& a, const CorpusIndex& b) { return a == b; });

  m.def(
      "build_index",
      [](const std::vector<Document>& docs, const Tokenizer* tok) {
        return build_index(docs, tok ? *tok : Tokenizer::default_instance());
      },
      py::arg("docs"), py::arg("tokenizer") = nullptr);
  m.def("save_index", &save_index);
  m.def("load_index", &load_index);

  py::class_<RetrievedSet>(m, "RetrievedSet")
      .def_property_readonly("size", &RetrievedSet::size)
      .def_property_readonly("max_df", &RetrievedSet::max_df)
      .def_property_readonly("doc_ordinals",
                             [](const RetrievedSet& rs) {
                               auto d = rs.doc_ids();
                               return std::vector<DocOrdinal>(d.begin(), d.end());
                             })
      .def("df", [](const RetrievedSet& rs, const CorpusIndex& idx, std::string_view w) {
        return rs.df(idx, w);
      });
  m.def(
      "execute_query",
      [](const CorpusIndex& idx, std::string_view text) {
        return execute_query(idx, Query::parse(text));
      },
      py::arg("index"), py::arg("query"));
  m.def("cooccurrence_freq", &cooccurrence_freq);

  py::class_<ClassConfig>(m, "ClassConfig")
      .def(py::init([](std::uint32_t n, std::uint32_t c, double l, double b) {
             ClassConfig cfg{n, c, l, b};
             cfg.validate();
             return cfg;
           }),
           py::arg("n") = 15, py::arg("c") = 3, py::arg("l") = 1.0 / 32, py::arg("b") = 0.0)
      .def_readonly("topic_count", &ClassConfig::topic_count)
      .def_readonly("class_count", &ClassConfig::class_count)
      .def_readonly("lower_bound", &ClassConfig::lower_bound)
      .def_readonly("balance", &ClassConfig::balance);

  py::class_<ClassPartition>(m, "ClassPartition")
      .def_readonly("max_df", &ClassPartition::max_df)
      .def_readonly("base", &ClassPartition::base)
      .def_readonly("ratio", &ClassPartition::ratio)
      .def_property_readonly("bands",
                             [](const ClassPartition& p) {
                               std::vector<std::pair<double, double>> out;
                               for (const auto& b : p.bands) out.emplace_back(b.low, b.high);
                               return out;
                             })
      .def("exclusion_threshold", &ClassPartition::exclusion_threshold);

  m.def("relative_frequency", &relative_frequency);
  m.def("class_partition", &class_partition);
  m.def("classify", &classify);
  m.def("allotment_caps", &allotment_caps);
  m.def("class_quotas", &class_quotas);

  py::class_<TopicWord>(m, "TopicWord")
      .def_readonly("word", &TopicWord::word)
      .def_readonly("df", &TopicWord::df)
      .def_readonly("global_df", &TopicWord::global_df)
      .def_readonly("rel_freq", &TopicWord::rel_freq)
      .def_readonly("class_idx", &TopicWord::class_idx)
      .def("__repr__", [](const TopicWord& w) {
        return "TopicWord(" + w.word + ", df=" + std::to_string(w.df) + ")";
      });
  m.def("select_topic_words_classed", [](const RetrievedSet& rs, const CorpusIndex& idx,
                                         const ClassConfig& cfg) {
    return select_topic_words_classed(rs, idx, cfg).words;
  });
  m.def("select_topic_words_plain", [](const RetrievedSet& rs, const CorpusIndex& idx,
                                       std::uint32_t n) {
    return select_topic_words_plain(rs, idx, n).words;
  });

  m.def("cooccur_strength", &cooccur_strength);
  m.def(
      "build_links",
      [](const std::vector<TopicWord>& words, const RetrievedSet& rs, const CorpusIndex& idx) {
        std::map<std::string, std::pair<std::string, double>> out;
        for (const auto& [child, link] : build_links(words, rs, idx).links) {
          out[child] = {link.parent, link.strength};
        }
        return out;
      },
      "Child word -> (parent, strength). Words without an entry are roots.");

  py::class_<LayoutConfig>(m, "LayoutConfig")
      .def(py::init([](std::optional<double> c1, double c2, double width, double height,
                       double min_dx, double text_height) {
             LayoutConfig cfg{c1, c2, width, height, min_dx, text_height};
             cfg.validate();
             return cfg;
           }),
           py::arg("c1") = py::none(), py::arg("c2") = 1.0, py::arg("width") = 800.0,
           py::arg("height") = 600.0, py::arg("min_dx") = 60.0, py::arg("text_height") = 18.0)
      .def("vertical_scale", &LayoutConfig::vertical_scale);

  m.def("middle_frequency", [](const std::vector<TopicWord>& w) { return middle_frequency(w); });
  m.def("layout_y", &layout_y, py::arg("df"), py::arg("middle_df"),
        py::arg("config") = LayoutConfig{});

  m.def(
      "graph_json",
      [](const CorpusIndex& idx, const py::dict& params) {
        const auto request = parse_graph_request(to_params(params), GraphDefaults{});
        return serialize(to_json(build_graph(idx, Tokenizer::default_instance(), request)));
      },
      py::arg("index"), py::arg("params"),
      "Graph payload JSON for query parameters such as {'q': 'climate', 'n': 15}.");
}
