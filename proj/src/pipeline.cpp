#include "pipeline.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "assembler.hpp"
#include "clustering.hpp"
#include "error.hpp"
#include "evaluation.hpp"
#include "json.hpp"

namespace fs = std::filesystem;

namespace rsg {

namespace {

std::string path_in(const PipelineConfig& config, const char* name) {
  return (fs::path(config.output_dir) / name).string();
}

void require_artifact(const std::string& path, const char* producer) {
  if (!fs::exists(path)) {
    throw Error(ErrorCode::MissingArtifact,
                "missing " + path + "; run `" + producer + "` first");
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  write_text(path, j.dump(2) + "\n");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, "malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::set<std::string> stopwords_for(const PipelineConfig& config) {
  if (config.stopwords_file.empty()) return default_stopwords();
  std::ifstream in(config.stopwords_file);
  if (!in) throw Error(ErrorCode::Io, "cannot open stopword list: " + config.stopwords_file);
  std::set<std::string> words;
  std::string w;
  while (in >> w) words.insert(w);
  return words;
}

SectionSelector sections_selector(const PipelineConfig& config) {
  auto sel = selector_from_name(config.sections);
  if (!sel) {
    throw Error(ErrorCode::InvalidArgument,
                "unknown sections value '" + config.sections + "' (use abs, abs+intro, or full)");
  }
  return *sel;
}

// ---- ingested corpus artifact ------------------------------------------

void save_ingested(const ResearcherCorpus& corpus, const PipelineConfig& config) {
  nlohmann::json j;
  j["researcher_id"] = corpus.researcher_id;
  if (corpus.reference_statement) j["reference_statement"] = *corpus.reference_statement;
  j["sections"] = config.sections;
  nlohmann::json papers = nlohmann::json::array();
  for (const auto& doc : corpus.papers) {
    nlohmann::json pj;
    pj["paper_id"] = doc.paper_id;
    nlohmann::json sections = nlohmann::json::object();
    for (const auto& [sec, text] : doc.sections) sections[section_name(sec)] = text;
    pj["sections"] = std::move(sections);
    nlohmann::json sents = nlohmann::json::array();
    for (const auto& s : doc.sentences) {
      sents.push_back({{"text", s.text},
                       {"section", section_name(s.section)},
                       {"position", s.position},
                       {"token_count", s.token_count}});
    }
    pj["sentences"] = std::move(sents);
    papers.push_back(std::move(pj));
  }
  j["papers"] = std::move(papers);
  write_json(path_in(config, "ingested.json"), j);
}

ResearcherCorpus load_ingested(const PipelineConfig& config) {
  std::string path = path_in(config, "ingested.json");
  require_artifact(path, "ingest");
  nlohmann::json j = read_json(path);
  ResearcherCorpus corpus;
  corpus.researcher_id = j.at("researcher_id").get<std::string>();
  if (j.contains("reference_statement")) {
    corpus.reference_statement = j["reference_statement"].get<std::string>();
  }
  for (const auto& pj : j.at("papers")) {
    Document doc;
    doc.paper_id = pj.at("paper_id").get<std::string>();
    for (const auto& [name, text] : pj.at("sections").items()) {
      auto sec = section_from_name(name);
      if (sec) doc.sections[*sec] = text.get<std::string>();
    }
    for (const auto& sj : pj.at("sentences")) {
      SentenceRecord s;
      s.text = sj.at("text").get<std::string>();
      s.paper_id = doc.paper_id;
      s.section = section_from_name(sj.at("section").get<std::string>()).value_or(Section::Other);
      s.position = sj.at("position").get<int>();
      s.token_count = sj.at("token_count").get<int>();
      doc.sentences.push_back(std::move(s));
    }
    corpus.papers.push_back(std::move(doc));
  }
  return corpus;
}

Vocabulary load_vocab(const PipelineConfig& config) {
  std::string path = path_in(config, "vocab.json");
  require_artifact(path, "ingest");
  nlohmann::json j = read_json(path);
  Vocabulary vocab;
  for (const auto& w : j.at("words")) {
    vocab.index[w.get<std::string>()] = static_cast<int>(vocab.words.size());
    vocab.words.push_back(w.get<std::string>());
  }
  return vocab;
}

std::vector<BowVector> paper_bows(const ResearcherCorpus& corpus, const Vocabulary& vocab) {
  std::vector<BowVector> bows;
  bows.reserve(corpus.papers.size());
  for (const auto& doc : corpus.papers) {
    std::vector<std::string> tokens;
    for (const auto& s : doc.sentences) {
      for (auto& t : tokenize(s.text)) tokens.push_back(std::move(t));
    }
    bows.push_back(to_bow(tokens, vocab));
  }
  return bows;
}

std::uint64_t require_seed(const PipelineConfig& config) {
  if (!config.seed) throw Error(ErrorCode::InvalidArgument, "a seed is required for generation");
  return *config.seed;
}

}  // namespace

// ---- config --------------------------------------------------------------

PipelineConfig load_config(const std::string& path) {
  nlohmann::json j = read_json(path);
  PipelineConfig c;
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j[key].get<std::decay_t<decltype(field)>>();
  };
  get("corpus", c.corpus_path);
  get("output_dir", c.output_dir);
  get("vocab_size", c.vocab_size);
  get("sections", c.sections);
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  get("terms_file", c.terms_file);
  get("coverage_selector", c.coverage_selector);
  get("stopwords_file", c.stopwords_file);
  if (j.contains("topic_model")) {
    const auto& t = j["topic_model"];
    if (t.contains("K")) c.topic.K = t["K"].get<int>();
    if (t.contains("H")) c.topic.H = t["H"].get<int>();
    if (t.contains("epochs")) c.topic.epochs = t["epochs"].get<int>();
    if (t.contains("batch_size")) c.topic.batch_size = t["batch_size"].get<int>();
    if (t.contains("learning_rate")) c.topic.learning_rate = t["learning_rate"].get<double>();
    if (t.contains("init_scale")) c.topic.init_scale = t["init_scale"].get<double>();
  }
  if (j.contains("clustering")) {
    const auto& a = j["clustering"];
    if (a.contains("preference") && !a["preference"].is_null() && !a["preference"].is_string()) {
      c.ap.preference = a["preference"].get<double>();
    }
    if (a.contains("damping")) c.ap.damping = a["damping"].get<double>();
    if (a.contains("max_iter")) c.ap.max_iter = a["max_iter"].get<int>();
    if (a.contains("stable_iters")) c.ap.stable_iters = a["stable_iters"].get<int>();
  }
  if (j.contains("scorer")) {
    const auto& s = j["scorer"];
    if (s.contains("name")) c.scorer.name = s["name"].get<std::string>();
    if (s.contains("scores_file")) c.scorer.scores_file = s["scores_file"].get<std::string>();
  }
  if (j.contains("mmr")) {
    const auto& m = j["mmr"];
    if (m.contains("lambda")) c.mmr.lambda = m["lambda"].get<double>();
    if (m.contains("word_limit")) c.mmr.word_limit = m["word_limit"].get<int>();
    if (m.contains("redundancy")) {
      std::string r = m["redundancy"].get<std::string>();
      if (r == "tfidf-cosine") {
        c.mmr.redundancy = RedundancyMetric::TfidfCosine;
      } else if (r == "topic-similarity") {
        c.mmr.redundancy = RedundancyMetric::TopicSimilarity;
      } else {
        throw Error(ErrorCode::InvalidArgument, "unknown redundancy metric: " + r);
      }
    }
  }
  return c;
}

void apply_override(PipelineConfig& c, const std::string& key, const std::string& value) {
  auto bad_value = [&]() -> Error {
    return Error(ErrorCode::InvalidArgument, "invalid value '" + value + "' for key " + key);
  };
  auto as_int = [&]() {
    try {
      std::size_t used = 0;
      int v = std::stoi(value, &used);
      if (used != value.size()) throw bad_value();
      return v;
    } catch (const Error&) { throw; } catch (...) { throw bad_value(); }
  };
  auto as_double = [&]() {
    try {
      std::size_t used = 0;
      double v = std::stod(value, &used);
      if (used != value.size()) throw bad_value();
      return v;
    } catch (const Error&) { throw; } catch (...) { throw bad_value(); }
  };
  auto as_seed = [&]() {
    try {
      std::size_t used = 0;
      std::uint64_t v = std::stoull(value, &used);
      if (used != value.size()) throw bad_value();
      return v;
    } catch (const Error&) { throw; } catch (...) { throw bad_value(); }
  };
  if (key == "corpus") c.corpus_path = value;
  else if (key == "output_dir") c.output_dir = value;
  else if (key == "vocab_size") c.vocab_size = as_int();
  else if (key == "sections") c.sections = value;
  else if (key == "seed") c.seed = as_seed();
  else if (key == "terms_file") c.terms_file = value;
  else if (key == "coverage_selector") c.coverage_selector = value;
  else if (key == "stopwords_file") c.stopwords_file = value;
  else if (key == "topic.K") c.topic.K = as_int();
  else if (key == "topic.H") c.topic.H = as_int();
  else if (key == "topic.epochs") c.topic.epochs = as_int();
  else if (key == "topic.batch_size") c.topic.batch_size = as_int();
  else if (key == "topic.learning_rate") c.topic.learning_rate = as_double();
  else if (key == "topic.init_scale") c.topic.init_scale = as_double();
  else if (key == "ap.preference") c.ap.preference = as_double();
  else if (key == "ap.damping") c.ap.damping = as_double();
  else if (key == "ap.max_iter") c.ap.max_iter = as_int();
  else if (key == "ap.stable_iters") c.ap.stable_iters = as_int();
  else if (key == "scorer.name") c.scorer.name = value;
  else if (key == "scorer.scores_file") c.scorer.scores_file = value;
  else if (key == "mmr.lambda") c.mmr.lambda = as_double();
  else if (key == "mmr.word_limit") c.mmr.word_limit = as_int();
  else if (key == "mmr.redundancy") {
    if (value == "tfidf-cosine") c.mmr.redundancy = RedundancyMetric::TfidfCosine;
    else if (value == "topic-similarity") c.mmr.redundancy = RedundancyMetric::TopicSimilarity;
    else throw Error(ErrorCode::InvalidArgument, "unknown redundancy metric: " + value);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown config key: " + key);
  }
}

// ---- stages ---------------------------------------------------------------

void stage_ingest(const PipelineConfig& config) {
  if (config.corpus_path.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no corpus path configured");
  }
  fs::create_directories(config.output_dir);
  ResearcherCorpus corpus = load_corpus(config.corpus_path);
  segment_corpus(corpus, sections_selector(config));
  Vocabulary vocab = build_vocabulary(corpus, config.vocab_size, stopwords_for(config));
  save_ingested(corpus, config);
  write_json(path_in(config, "vocab.json"), {{"words", vocab.words}});
}

void stage_train(const PipelineConfig& config) {
  ResearcherCorpus corpus = load_ingested(config);
  if (corpus.papers.empty()) {
    throw Error(ErrorCode::InvalidArgument, "corpus has no papers; nothing to train on");
  }
  Vocabulary vocab = load_vocab(config);
  TopicModelConfig tc = config.topic;
  tc.V = vocab.size();
  tc.seed = config.seed.value_or(0);
  TrainResult result = train(paper_bows(corpus, vocab), tc);
  save_checkpoint(result.params, path_in(config, "model.json"));
  write_json(path_in(config, "loss_trace.json"), {{"loss", result.loss_trace}});
}

void stage_cluster(const PipelineConfig& config) {
  ResearcherCorpus corpus = load_ingested(config);
  Vocabulary vocab = load_vocab(config);
  std::string model_path = path_in(config, "model.json");
  require_artifact(model_path, "train-topics");
  TopicModelParams params = load_checkpoint(model_path);
  if (params.config.V != vocab.size()) {
    throw Error(ErrorCode::Format, "model checkpoint vocabulary size disagrees with vocab.json");
  }

  std::vector<Eigen::VectorXd> thetas;
  nlohmann::json theta_rows = nlohmann::json::array();
  for (const auto& bow : paper_bows(corpus, vocab)) {
    Eigen::VectorXd theta = infer_theta(bow, params);
    std::vector<double> row(theta.data(), theta.data() + theta.size());
    theta_rows.push_back(row);
    thetas.push_back(std::move(theta));
  }
  nlohmann::json tj;
  tj["paper_ids"] = nlohmann::json::array();
  for (const auto& doc : corpus.papers) tj["paper_ids"].push_back(doc.paper_id);
  tj["thetas"] = std::move(theta_rows);
  write_json(path_in(config, "thetas.json"), tj);

  Eigen::MatrixXd S = similarity_matrix(thetas, config.ap.preference);
  ApOptions opts;
  opts.damping = config.ap.damping;
  opts.max_iter = config.ap.max_iter;
  opts.stable_iters = config.ap.stable_iters;
  ClusterAssignment assignment = affinity_propagation(S, opts);

  write_json(path_in(config, "assignment.json"), {{"labels", assignment.labels},
                                                  {"exemplars", assignment.exemplars},
                                                  {"converged", assignment.converged},
                                                  {"iterations", assignment.iterations}});
}

void stage_generate(const PipelineConfig& config) {
  std::uint64_t seed = require_seed(config);
  ResearcherCorpus corpus = load_ingested(config);
  if (corpus.papers.empty()) {
    throw Error(ErrorCode::InvalidArgument, "corpus has no papers; cannot generate a statement");
  }
  Vocabulary vocab = load_vocab(config);
  std::string model_path = path_in(config, "model.json");
  require_artifact(model_path, "train-topics");
  TopicModelParams params = load_checkpoint(model_path);

  std::string assignment_path = path_in(config, "assignment.json");
  require_artifact(assignment_path, "cluster");
  nlohmann::json aj = read_json(assignment_path);
  ClusterAssignment assignment;
  assignment.labels = aj.at("labels").get<std::vector<int>>();
  assignment.exemplars = aj.at("exemplars").get<std::vector<int>>();
  assignment.converged = aj.at("converged").get<bool>();
  assignment.iterations = aj.at("iterations").get<int>();
  if (assignment.labels.size() != corpus.papers.size()) {
    throw Error(ErrorCode::Format, "assignment.json does not match the ingested corpus");
  }

  // Sentence pool: all papers regarded as one document.
  std::vector<SentenceRecord> sentences;
  std::vector<int> paper_of_sentence;
  for (std::size_t p = 0; p < corpus.papers.size(); ++p) {
    for (const auto& s : corpus.papers[p].sentences) {
      sentences.push_back(s);
      paper_of_sentence.push_back(static_cast<int>(p));
    }
  }

  SalienceScores scores;
  const std::string& name = config.scorer.name;
  if (name == "random") {
    scores = score_random(sentences, seed);
  } else if (name == "multilead") {
    scores = score_multilead(sentences);
  } else if (name == "textrank") {
    scores = score_textrank(sentences, stopwords_for(config));
  } else if (name == "lexrank") {
    scores = score_lexrank(sentences);
  } else if (name == "oracle") {
    if (!corpus.reference_statement) {
      throw Error(ErrorCode::InvalidArgument, "oracle scorer requires a reference statement");
    }
    scores = score_oracle(sentences, *corpus.reference_statement);
  } else if (name == "external") {
    if (config.scorer.scores_file.empty()) {
      throw Error(ErrorCode::InvalidArgument, "external scorer requires scorer.scores_file");
    }
    scores = load_external_scores(config.scorer.scores_file, sentences);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown scorer: " + name);
  }

  nlohmann::json score_rows = nlohmann::json::array();
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    score_rows.push_back({{"paper_id", sentences[i].paper_id},
                          {"position", sentences[i].position},
                          {"score", scores.scores[i]}});
  }
  write_json(path_in(config, "scores.json"), score_rows);

  std::vector<Eigen::VectorXd> sentence_thetas;
  const std::vector<Eigen::VectorXd>* thetas_ptr = nullptr;
  if (config.mmr.redundancy == RedundancyMetric::TopicSimilarity) {
    sentence_thetas.reserve(sentences.size());
    for (const auto& s : sentences) {
      sentence_thetas.push_back(infer_theta(to_bow(s.text, vocab), params));
    }
    thetas_ptr = &sentence_thetas;
  }
  std::vector<int> picked = mmr_select(sentences, scores.scores, config.mmr, thetas_ptr);

  std::vector<SentenceRecord> selected;
  std::vector<int> selected_papers;
  for (int i : picked) {
    selected.push_back(sentences[i]);
    selected_papers.push_back(paper_of_sentence[i]);
  }

  auto grouped = group_by_cluster(selected, selected_papers, assignment, params, vocab);
  Rng reorder_rng(seed ^ 0xc2b2ae3d27d4eb4full);
  std::vector<std::pair<int, std::vector<SentenceRecord>>> ordered_clusters;
  for (const auto& [cluster_id, sets] : grouped) {
    ordered_clusters.emplace_back(cluster_id, reorder_cluster(sets, reorder_rng));
  }

  StatementDraft draft =
      compose_statement(ordered_clusters, assignment.exemplars, config.mmr.word_limit, seed);

  write_text(path_in(config, "statement.txt"), draft.full_text + "\n");
  nlohmann::json pj;
  pj["seed"] = draft.seed;
  pj["scorer"] = scores.scorer_name;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : draft.provenance) {
    entries.push_back({{"paper_id", e.paper_id},
                       {"position", e.position},
                       {"cluster_id", e.cluster_id},
                       {"order_index", e.order_index}});
  }
  pj["sentences"] = std::move(entries);
  write_json(path_in(config, "provenance.json"), pj);
}

namespace {

std::set<std::string> load_term_file(const std::string& path) {
  nlohmann::json j = read_json(path);
  if (!j.is_object()) {
    throw Error(ErrorCode::Format, "term annotation file must map doc ids to term lists");
  }
  std::set<std::string> terms;
  for (const auto& [doc, list] : j.items()) {
    for (const auto& t : list) terms.insert(t.get<std::string>());
  }
  return terms;
}

std::string normalize_text(const std::string& text) {
  std::string out;
  bool in_space = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = !out.empty();
    } else {
      if (in_space) out.push_back(' ');
      in_space = false;
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::set<std::string> terms_present(const std::string& text, const std::set<std::string>& terms) {
  std::string norm = normalize_text(text);
  std::set<std::string> present;
  for (const auto& t : terms) {
    std::string nt = normalize_text(t);
    if (!nt.empty() && norm.find(nt) != std::string::npos) present.insert(t);
  }
  return present;
}

nlohmann::json rouge_json(const RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

}  // namespace

void stage_evaluate(const PipelineConfig& config) {
  ResearcherCorpus corpus = load_ingested(config);
  if (!corpus.reference_statement) {
    throw Error(ErrorCode::InvalidArgument, "reference statement required for evaluation");
  }
  std::string statement_path = path_in(config, "statement.txt");
  require_artifact(statement_path, "generate");
  std::string candidate = read_text(statement_path);

  auto cand_tokens = tokenize(candidate);
  // Fairness budget: score at most word_limit candidate tokens.
  if (static_cast<int>(cand_tokens.size()) > config.mmr.word_limit) {
    cand_tokens.resize(config.mmr.word_limit);
  }
  auto ref_tokens = tokenize(*corpus.reference_statement);

  nlohmann::json report;
  report["researcher_id"] = corpus.researcher_id;
  report["word_budget"] = config.mmr.word_limit;
  report["rouge_1"] = rouge_json(rouge_n(cand_tokens, ref_tokens, 1));
  report["rouge_2"] = rouge_json(rouge_n(cand_tokens, ref_tokens, 2));
  report["rouge_l"] = rouge_json(rouge_l(cand_tokens, ref_tokens));
  int cand_sentences = static_cast<int>(split_sentences(candidate).size());
  int ref_sentences = static_cast<int>(split_sentences(*corpus.reference_statement).size());
  report["sentence_ratio"] = sentence_ratio(cand_sentences, std::max(1, ref_sentences));

  if (!config.terms_file.empty()) {
    std::set<std::string> all_terms = load_term_file(config.terms_file);
    std::set<std::string> ref_terms = terms_present(*corpus.reference_statement, all_terms);
    std::set<std::string> cand_terms = terms_present(candidate, all_terms);
    if (!ref_terms.empty()) {
      report["entity_recall"] = entity_recall(cand_terms, ref_terms);
    }
  }

  write_json(path_in(config, "report.json"), report);

  std::ostringstream table;
  table << "researcher: " << corpus.researcher_id << "\n";
  table << "metric          precision   recall      f1\n";
  auto row = [&](const char* name, const nlohmann::json& r) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%-15s %-11.4f %-11.4f %-11.4f\n", name,
                  r["precision"].get<double>(), r["recall"].get<double>(), r["f1"].get<double>());
    table << buf;
  };
  row("rouge-1", report["rouge_1"]);
  row("rouge-2", report["rouge_2"]);
  row("rouge-l", report["rouge_l"]);
  table << "sentence_ratio  " << report["sentence_ratio"].get<double>() << "\n";
  if (report.contains("entity_recall")) {
    table << "entity_recall   " << report["entity_recall"].get<double>() << "\n";
  }
  write_text(path_in(config, "report.txt"), table.str());
}

void stage_coverage(const PipelineConfig& config) {
  if (config.corpus_path.empty()) {
    throw Error(ErrorCode::InvalidArgument, "no corpus path configured");
  }
  fs::create_directories(config.output_dir);
  ResearcherCorpus corpus = load_corpus(config.corpus_path);

  std::vector<SectionSelector> selectors;
  if (config.coverage_selector == "all") {
    selectors = {SectionSelector::FullPaper, SectionSelector::AbsIntro, SectionSelector::Abs};
  } else {
    auto sel = selector_from_name(config.coverage_selector);
    if (!sel) {
      throw Error(ErrorCode::InvalidArgument,
                  "unknown coverage selector '" + config.coverage_selector + "'");
    }
    selectors = {*sel};
  }

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream table;
  table << "selector    R-1(rec)  R-2(rec)  R-L(rec)  SentenceRatio\n";
  for (SectionSelector sel : selectors) {
    CoverageRow row = coverage_analysis(corpus, sel);
    rows.push_back({{"researcher_id", corpus.researcher_id},
                    {"selector", selector_name(sel)},
                    {"rouge_1", rouge_json(row.r1)},
                    {"rouge_2", rouge_json(row.r2)},
                    {"rouge_l", rouge_json(row.rl)},
                    {"sentence_ratio", row.sentence_ratio}});
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-11s %-9.4f %-9.4f %-9.4f %-9.4f\n", selector_name(sel),
                  row.r1.recall, row.r2.recall, row.rl.recall, row.sentence_ratio);
    table << buf;
  }
  write_json(path_in(config, "coverage.json"), rows);
  write_text(path_in(config, "coverage.txt"), table.str());
}

void run_pipeline(const PipelineConfig& config) {
  require_seed(config);
  stage_ingest(config);
  stage_train(config);
  stage_cluster(config);
  stage_generate(config);
  ResearcherCorpus corpus = load_ingested(config);
  if (corpus.reference_statement) stage_evaluate(config);
}

void run_stage(const PipelineConfig& config, const std::string& stage) {
  if (stage == "ingest") stage_ingest(config);
  else if (stage == "train-topics") stage_train(config);
  else if (stage == "cluster") stage_cluster(config);
  else if (stage == "generate") stage_generate(config);
  else if (stage == "evaluate") stage_evaluate(config);
  else if (stage == "coverage") stage_coverage(config);
  else if (stage == "run") run_pipeline(config);
  else throw Error(ErrorCode::InvalidArgument, "unknown stage: " + stage);
}

}  // namespace rsg
