#include "inspire/cli/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <ctime>
#include <set>

#include "inspire/arena/arena.hpp"
#include "inspire/cli/config.hpp"
#include "inspire/core/json_io.hpp"
#include "inspire/debate/engine.hpp"
#include "inspire/fol/parser.hpp"
#include "inspire/fol/printer.hpp"
#include "inspire/fol/prover.hpp"
#include "inspire/scoring/pipeline.hpp"
#include "inspire/train/candidates.hpp"
#include "inspire/train/sft.hpp"
#include "inspire/util/fs.hpp"
#include "inspire/util/logging.hpp"
#include "inspire/util/pool.hpp"
#include "inspire/util/strings.hpp"

namespace fs = std::filesystem;

namespace inspire::cli {

std::atomic<bool>& interrupt_flag() {
    static std::atomic<bool> flag{false};
    return flag;
}

namespace {

struct RunPaths {
    fs::path root;
    fs::path transcripts() const { return root / "transcripts"; }
    fs::path scores_subjective() const { return root / "scores" / "subjective"; }
    fs::path scores_facts() const { return root / "scores" / "facts"; }
    fs::path scores_logic() const { return root / "scores" / "logic"; }
    fs::path report() const { return root / "report"; }
    fs::path cassette() const { return root / "cassette.jsonl"; }
    fs::path config_file() const { return root / "config.json"; }
    fs::path manifest() const { return root / "manifest.json"; }
    fs::path summary() const { return root / "summary.json"; }
    fs::path sft() const { return root / "sft.jsonl"; }
    fs::path dpo() const { return root / "pairs.dpo.jsonl"; }
};

struct CommonFlags {
    std::string config_path = "inspire.json";
    std::string run_id;
    std::string replay_path;
    std::string record_path;
    bool record_default = false;  // --record without a path
    int jobs = 0;                 // 0: use config
    int rounds = 0;
    bool allow_partial = false;
    bool llm_judge = false;
    bool verbose = false;
};

void add_common(CLI::App* sub, CommonFlags& flags, bool with_rounds = true) {
    sub->add_option("--config", flags.config_path, "run configuration JSON")
        ->capture_default_str();
    sub->add_option("--run-id", flags.run_id, "run directory name (default: timestamp)");
    sub->add_option("--replay", flags.replay_path, "replay cassette path (no live calls)");
    sub->add_option("--record", flags.record_path, "record cassette to this path");
    sub->add_flag("--record-here", flags.record_default,
                  "record cassette to runs/<id>/cassette.jsonl");
    sub->add_flag("--verbose", flags.verbose, "informational logging");
    sub->add_option("--jobs", flags.jobs, "bounded worker pool size");
    if (with_rounds) sub->add_option("--rounds", flags.rounds, "debate rounds m");
    sub->add_flag("--allow-partial", flags.allow_partial,
                  "average over judged rounds instead of failing the side");
    sub->add_flag("--llm-judge", flags.llm_judge,
                  "verify logical validity with the inference prompt instead of the prover");
}

std::string default_run_id() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "run-%Y%m%d-%H%M%S", &tm);
    return buf;
}

std::string iso_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

RunConfig apply_overrides(RunConfig config, const CommonFlags& flags) {
    if (flags.jobs > 0) config.jobs = flags.jobs;
    if (flags.rounds > 0) config.rounds = flags.rounds;
    if (flags.allow_partial) config.allow_partial = true;
    if (flags.llm_judge) config.logic_mode = scoring::VerifyMode::LlmJudge;
    if (flags.verbose) util::set_log_threshold(util::LogLevel::Info);
    return config;
}

// New run directory; the id must be unique within the output root.
RunPaths create_run(const RunConfig& config, const CommonFlags& flags, RunManifest& manifest) {
    std::string id = flags.run_id.empty() ? default_run_id() : flags.run_id;
    RunPaths paths{fs::path(config.output_root) / id};
    if (fs::exists(paths.root))
        throw ValidationError("run id already exists: " + paths.root.string());
    util::ensure_dir(paths.root);
    manifest.run_id = id;
    manifest.created_at = iso_timestamp();
    util::write_file(paths.config_file(), config_to_json(config).dump(2) + "\n");
    return paths;
}

gateways::GatewayHub make_hub(const RunConfig& config, const CommonFlags& flags,
                              const RunPaths* paths) {
    gateways::CassetteMode mode = config.cassette_mode;
    std::string cassette = config.cassette_path;
    if (!flags.replay_path.empty()) {
        mode = gateways::CassetteMode::Replay;
        cassette = flags.replay_path;
    } else if (!flags.record_path.empty() || flags.record_default) {
        mode = gateways::CassetteMode::Record;
        cassette = flags.record_path;
    }
    if (mode == gateways::CassetteMode::Record && cassette.empty())
        cassette = paths ? paths->cassette().string() : "cassette.jsonl";
    if (mode == gateways::CassetteMode::Replay && cassette.empty())
        throw ValidationError("replay mode needs a cassette path");
    gateways::GatewayHub hub(config.engines, config.policy, mode, cassette);
    hub.default_search_k = config.search_top_k;
    return hub;
}

std::vector<Topic> load_topics(const std::string& path) {
    std::vector<Topic> topics;
    int n = 0;
    for (const std::string& raw : util::split_lines(util::read_file(path))) {
        std::string line = util::trim(raw);
        if (line.empty() || line[0] == '#') continue;
        ++n;
        size_t tab = line.find('\t');
        if (tab != std::string::npos)
            topics.push_back(make_topic(util::trim(line.substr(0, tab)),
                                        util::trim(line.substr(tab + 1))));
        else
            topics.push_back(make_topic("t" + std::to_string(n), line));
    }
    if (topics.empty()) throw ValidationError("no topics found in " + path);
    return topics;
}

void write_summary(const RunPaths& paths, const gateways::GatewayHub& hub,
                   const std::vector<std::string>& failures) {
    const auto& c = hub.counters();
    Json j{{"schema", "inspire/summary/v1"},
           {"gateway",
            Json{{"chat_calls", c.chat_calls.load()},
                 {"search_calls", c.search_calls.load()},
                 {"live_chat", c.live_chat.load()},
                 {"live_search", c.live_search.load()},
                 {"replayed_chat", c.replayed_chat.load()},
                 {"replayed_search", c.replayed_search.load()}}},
           {"failures", failures}};
    util::write_file(paths.summary(), j.dump(2) + "\n");
}

void finish_manifest(const RunPaths& paths, RunManifest manifest) {
    manifest.finished_at = iso_timestamp();
    util::write_file(paths.manifest(), manifest_to_json(manifest).dump(2) + "\n");
}

std::string round_file(const std::string& debate, int round, const char* side = nullptr) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%02d", round);
    std::string name = debate;
    if (side) name += std::string("__") + side;
    return name + "__round" + buf + ".json";
}

void persist_artifacts(const RunPaths& paths, const std::string& debate,
                       const scoring::EvaluationArtifacts& art) {
    for (const auto& j : art.judgements)
        util::write_file(paths.scores_subjective() / round_file(debate, j.round_index),
                         scoring::judgement_to_json(j).dump(2) + "\n");
    for (const auto& [side, reports] : art.fact_reports)
        for (const auto& r : reports)
            util::write_file(
                paths.scores_facts() / round_file(debate, r.round_index, to_string(side)),
                scoring::fact_report_to_json(r).dump(2) + "\n");
    for (const auto& [side, turns] : art.logic_turns) {
        const auto& verdicts = art.logic_verdicts.at(side);
        for (size_t i = 0; i < turns.size(); ++i)
            util::write_file(
                paths.scores_logic() / round_file(debate, turns[i].round_index, to_string(side)),
                scoring::formalized_turn_to_json(turns[i], verdicts[i]).dump(2) + "\n");
    }
}

scoring::PipelineOptions pipeline_options(const RunConfig& config) {
    if (config.judge_engine.empty())
        throw ValidationError("config needs judge_engine for scoring commands");
    scoring::PipelineOptions opts;
    opts.judge_engine = config.judge_engine;
    opts.formalizer_engine = config.formalizer_engine;
    opts.logic_mode = config.logic_mode;
    opts.allow_partial = config.allow_partial;
    opts.search_top_k = config.search_top_k;
    return opts;
}

debate::DebatePlan make_plan(const RunConfig& config, const Topic& topic, const std::string& pro,
                             const std::string& con) {
    debate::DebatePlan plan;
    plan.topic = topic;
    plan.pro_engine = pro;
    plan.con_engine = con;
    plan.rounds = config.rounds;
    plan.web_rag = config.web_rag;
    plan.evidence.max_snippets = config.evidence_max_snippets;
    plan.evidence.max_chars = config.evidence_max_chars;
    plan.temperature = config.debate_temperature;
    plan.max_tokens = config.max_tokens;
    return plan;
}

// ---------------------------------------------------------------------------
// Subcommand bodies
// ---------------------------------------------------------------------------

int cmd_debate(const CommonFlags& flags, const std::string& topic_text,
               const std::string& topic_id, const std::string& pro, const std::string& con,
               bool web_rag, std::ostream& out) {
    RunConfig config = apply_overrides(load_config(flags.config_path), flags);
    if (web_rag) config.web_rag = true;
    if (!config.engines.count(pro)) throw ValidationError("unknown engine id: " + pro);
    if (!config.engines.count(con)) throw ValidationError("unknown engine id: " + con);

    RunManifest manifest;
    manifest.engine_ids = {pro, con};
    manifest.topic_ids = {topic_id};
    RunPaths paths = create_run(config, flags, manifest);
    gateways::GatewayHub hub = make_hub(config, flags, &paths);

    Topic topic = make_topic(topic_id, topic_text);
    std::vector<std::string> failures;
    try {
        DebateTranscript t = run_debate(hub, make_plan(config, topic, pro, con));
        util::write_file(paths.transcripts() / (debate_id(t) + ".json"),
                         transcript_to_json(t).dump(2) + "\n");
        out << "debate complete: " << debate_id(t) << " (" << t.turns.size() << " turns)\n";
    } catch (const debate::DebateAbort& e) {
        util::write_file(paths.transcripts() / (debate_id(e.partial()) + ".partial.json"),
                         transcript_to_json(e.partial()).dump(2) + "\n");
        failures.push_back(e.what());
    }
    write_summary(paths, hub, failures);
    finish_manifest(paths, manifest);
    if (!failures.empty()) throw Error(failures.front());
    return 0;
}

int cmd_tournament(const CommonFlags& flags, const std::string& engines_csv,
                   const std::string& topics_path, std::ostream& out) {
    RunConfig config = apply_overrides(load_config(flags.config_path), flags);
    std::vector<Topic> topics = load_topics(topics_path);

    std::vector<std::string> engines;
    if (!engines_csv.empty()) {
        for (const std::string& e : util::split(engines_csv, ','))
            if (!util::trim(e).empty()) engines.push_back(util::trim(e));
    } else {
        for (const auto& [id, e] : config.engines)
            if (id != config.judge_engine && id != config.formalizer_engine)
                engines.push_back(id);
    }
    for (const std::string& e : engines)
        if (!config.engines.count(e)) throw ValidationError("unknown engine id: " + e);

    RunManifest manifest;
    manifest.engine_ids = engines;
    for (const Topic& t : topics) manifest.topic_ids.push_back(t.id);
    RunPaths paths = create_run(config, flags, manifest);
    gateways::GatewayHub hub = make_hub(config, flags, &paths);
    scoring::PipelineOptions sopts = pipeline_options(config);

    std::vector<arena::Match> schedule = arena::schedule_round_robin(engines, topics);
    out << "tournament: " << schedule.size() << " debates over " << topics.size()
        << " topics, jobs=" << config.jobs << "\n";

    struct Outcome {
        std::string debate;
        std::optional<ScoreCard> pro, con;
        std::string pro_engine, con_engine;
        std::string error;
    };
    std::vector<Outcome> outcomes(schedule.size());

    util::parallel_for(schedule.size(), config.jobs, [&](size_t i) {
        if (interrupt_flag().load()) return;
        const arena::Match& match = schedule[i];
        Outcome& o = outcomes[i];
        o.pro_engine = match.pro_engine;
        o.con_engine = match.con_engine;
        try {
            DebateTranscript t =
                run_debate(hub, make_plan(config, match.topic, match.pro_engine, match.con_engine));
            o.debate = debate_id(t);
            util::write_file(paths.transcripts() / (o.debate + ".json"),
                             transcript_to_json(t).dump(2) + "\n");
            auto art = scoring::evaluate_transcript(hub, sopts, t);
            persist_artifacts(paths, o.debate, art);
            o.pro = art.cards.at(Role::Pro);
            o.con = art.cards.at(Role::Con);
        } catch (const debate::DebateAbort& e) {
            o.debate = debate_id(e.partial());
            util::write_file(paths.transcripts() / (o.debate + ".partial.json"),
                             transcript_to_json(e.partial()).dump(2) + "\n");
            o.error = e.what();
        } catch (const Error& e) {
            o.error = e.what();
        }
    });

    std::map<std::string, std::vector<ScoreCard>> by_engine;
    std::map<std::string, std::map<std::string, ScoreCard>> debate_scores;
    std::vector<std::string> failures;
    for (const Outcome& o : outcomes) {
        if (!o.error.empty()) {
            failures.push_back(o.debate.empty() ? o.error : o.debate + ": " + o.error);
            continue;
        }
        if (o.pro) {
            by_engine[o.pro_engine].push_back(*o.pro);
            debate_scores[o.debate]["pro"] = *o.pro;
        }
        if (o.con) {
            by_engine[o.con_engine].push_back(*o.con);
            debate_scores[o.debate]["con"] = *o.con;
        }
    }

    std::vector<arena::RankingRow> ranking = arena::rank(by_engine);
    arena::emit_reports(paths.report(), ranking, debate_scores);
    write_summary(paths, hub, failures);
    finish_manifest(paths, manifest);

    for (const arena::RankingRow& row : ranking)
        out << row.engine << "  overall " << util::format_fixed(row.card.overall, 3) << " ("
            << row.debates << " debates)\n";
    if (interrupt_flag().load()) throw Error("interrupted; partial artifacts flushed");
    if (!failures.empty())
        throw Error(std::to_string(failures.size()) + " debates failed (see summary.json)");
    out << "run directory: " << paths.root.string() << "\n";
    return 0;
}

int cmd_evaluate(const CommonFlags& flags, const std::string& run_dir, const std::string& dims_csv,
                 std::ostream& out) {
    RunConfig config = apply_overrides(load_config(flags.config_path), flags);
    RunPaths paths{fs::path(run_dir)};
    if (!fs::exists(paths.transcripts()))
        throw ValidationError("no transcripts directory under " + run_dir);

    std::set<DimensionId> dims;
    if (dims_csv.empty()) {
        dims.insert(kAllDimensions.begin(), kAllDimensions.end());
    } else {
        for (const std::string& d : util::split(dims_csv, ','))
            if (!util::trim(d).empty()) dims.insert(dimension_from_string(d));
    }

    gateways::GatewayHub hub = make_hub(config, flags, &paths);
    scoring::PipelineOptions sopts = pipeline_options(config);

    std::vector<fs::path> files;
    for (const fs::path& p : util::list_files(paths.transcripts()))
        if (p.extension() == ".json" && p.string().find(".partial.") == std::string::npos)
            files.push_back(p);
    if (files.empty()) throw ValidationError("no transcripts found under " + run_dir);

    std::map<std::string, std::map<std::string, ScoreCard>> debate_scores;
    Json partial = Json::object();
    std::mutex collect_mutex;
    std::vector<std::string> failures;

    util::parallel_for(files.size(), config.jobs, [&](size_t i) {
        if (interrupt_flag().load()) return;
        DebateTranscript t = transcript_from_json(Json::parse(util::read_file(files[i])));
        std::string id = debate_id(t);
        try {
            auto art = scoring::evaluate_transcript(hub, sopts, t, dims);
            persist_artifacts(paths, id, art);
            std::lock_guard<std::mutex> lock(collect_mutex);
            Json sides = Json::object();
            for (Role side : {Role::Pro, Role::Con}) {
                Json scores = Json::object();
                for (const auto& [dim, v] : art.scores.at(side)) scores[to_string(dim)] = v;
                sides[to_string(side)] = scores;
                if (art.cards.at(side)) debate_scores[id][to_string(side)] = *art.cards.at(side);
            }
            partial[id] = sides;
        } catch (const Error& e) {
            std::lock_guard<std::mutex> lock(collect_mutex);
            failures.push_back(id + ": " + e.what());
        }
    });

    util::ensure_dir(paths.report());
    util::write_file(paths.report() / "partial_scores.json",
                     Json{{"schema", "inspire/partial-scores/v1"},
                          {"dims", dims_csv.empty() ? "all" : dims_csv},
                          {"debates", partial}}
                             .dump(2) +
                         "\n");
    if (dims.size() == kAllDimensions.size() && !debate_scores.empty()) {
        std::map<std::string, std::vector<ScoreCard>> by_engine;
        for (const auto& [id, sides] : debate_scores) {
            DebateTranscript t = transcript_from_json(
                Json::parse(util::read_file(paths.transcripts() / (id + ".json"))));
            if (sides.count("pro")) by_engine[t.pro_engine].push_back(sides.at("pro"));
            if (sides.count("con")) by_engine[t.con_engine].push_back(sides.at("con"));
        }
        arena::emit_reports(paths.report(), arena::rank(by_engine), debate_scores);
    }
    write_summary(paths, hub, failures);
    out << "evaluated " << (files.size() - failures.size()) << "/" << files.size()
        << " transcripts\n";
    if (!failures.empty())
        throw Error(std::to_string(failures.size()) + " transcripts failed (see summary.json)");
    return 0;
}

int cmd_build_sft(const CommonFlags& flags, const std::string& topics_path,
                  const std::string& teacher, std::ostream& out) {
    RunConfig config = apply_overrides(load_config(flags.config_path), flags);
    std::string engine = teacher.empty() ? config.judge_engine : teacher;
    if (!config.engines.count(engine))
        throw ValidationError("unknown teacher engine id: " + engine);
    std::vector<Topic> topics = load_topics(topics_path);

    RunManifest manifest;
    manifest.engine_ids = {engine};
    for (const Topic& t : topics) manifest.topic_ids.push_back(t.id);
    RunPaths paths = create_run(config, flags, manifest);
    gateways::GatewayHub hub = make_hub(config, flags, &paths);

    train::SftBuildStats stats;
    std::vector<train::SftRecord> records = train::build_sft_dataset(
        hub, engine, topics, &stats, config.debate_temperature, config.max_tokens);
    train::write_sft_jsonl(paths.sft(), records);
    write_summary(paths, hub, {});
    finish_manifest(paths, manifest);
    out << "sft records: " << stats.accepted << " accepted, " << stats.skipped << " skipped -> "
        << paths.sft().string() << "\n";
    return 0;
}

int cmd_build_dpo(const CommonFlags& flags, const std::string& topics_path,
                  const std::string& debater, int k, double epsilon, const std::string& dimension,
                  int self_rounds, std::ostream& out) {
    RunConfig config = apply_overrides(load_config(flags.config_path), flags);
    std::string engine = debater.empty() ? config.judge_engine : debater;
    if (!config.engines.count(engine))
        throw ValidationError("unknown debater engine id: " + engine);
    std::vector<Topic> topics = load_topics(topics_path);

    std::optional<DimensionId> dim;
    if (!dimension.empty() && util::to_lower(dimension) != "overall")
        dim = dimension_from_string(dimension);

    RunManifest manifest;
    manifest.engine_ids = {engine};
    for (const Topic& t : topics) manifest.topic_ids.push_back(t.id);
    RunPaths paths = create_run(config, flags, manifest);
    gateways::GatewayHub hub = make_hub(config, flags, &paths);

    train::CandidateGenOptions gopts;
    gopts.debater_engine = engine;
    gopts.k = k > 0 ? k : config.k_candidates;
    gopts.sample_temperature = config.sample_temperature;
    gopts.debate_temperature = config.debate_temperature;
    gopts.rounds = self_rounds > 0 ? self_rounds : 1;
    gopts.max_tokens = config.max_tokens;
    gopts.scoring = pipeline_options(config);

    std::vector<train::CandidateGroup> groups =
        train::generate_candidate_groups(hub, gopts, topics);
    double eps = epsilon >= 0 ? epsilon : config.epsilon;
    std::vector<train::PreferencePair> pairs = train::build_dpo_pairs(groups, dim, eps);
    train::write_dpo_jsonl(paths.dpo(), pairs, dim, eps);
    write_summary(paths, hub, {});
    finish_manifest(paths, manifest);
    out << "dpo pairs: " << pairs.size() << " from " << groups.size() << " groups -> "
        << paths.dpo().string() << "\n";
    return 0;
}

int cmd_analyze(const std::string& run_dir, const std::string& human_csv, std::ostream& out) {
    RunPaths paths{fs::path(run_dir)};
    fs::path scores_file = paths.report() / "scores.json";
    if (!fs::exists(scores_file))
        throw ValidationError("no report/scores.json under " + run_dir +
                              " (run tournament or evaluate first)");
    Json scores = Json::parse(util::read_file(scores_file));
    std::vector<arena::HumanScoreRecord> human = arena::load_human_scores_csv(human_csv);

    // Join machine and human samples on (debate_id, side).
    std::map<DimensionId, std::pair<std::vector<double>, std::vector<double>>> per_dim;
    std::vector<double> machine_overall, human_overall;
    std::vector<double> pred_shares, human_shares;
    int excluded_shares = 0;

    for (const arena::HumanScoreRecord& h : human) {
        const Json& debates = scores.at("debates");
        if (!debates.contains(h.debate_id)) continue;
        const Json& sides = debates.at(h.debate_id);
        const char* side_key = h.side == Role::Pro ? "pro" : "con";
        if (!sides.contains(side_key)) continue;
        ScoreCard card = scorecard_from_json(sides.at(side_key));
        double h_sum = 0;
        for (DimensionId dim : kAllDimensions) {
            per_dim[dim].first.push_back(card.scores.at(dim));
            per_dim[dim].second.push_back(h.scores.at(dim));
            h_sum += h.scores.at(dim);
        }
        machine_overall.push_back(card.overall);
        human_overall.push_back(h_sum / 6.0);

        if (h.side == Role::Pro && h.winner_share && sides.contains("pro") &&
            sides.contains("con")) {
            double s_pro = scorecard_from_json(sides.at("pro")).overall;
            double s_con = scorecard_from_json(sides.at("con")).overall;
            auto share = arena::predicted_pro_share(s_pro, s_con);
            if (share) {
                pred_shares.push_back(*share);
                human_shares.push_back(*h.winner_share);
            } else {
                ++excluded_shares;
                util::log_warn("excluded debate with zero overall scores: ", h.debate_id);
            }
        }
    }
    if (machine_overall.size() < 3)
        throw ValidationError("need at least 3 joined samples to correlate, got " +
                              std::to_string(machine_overall.size()));

    auto report_json = [](const arena::CorrelationReport& r) {
        Json j{{"n", r.n}};
        j["pearson"] = r.pearson ? Json(*r.pearson) : Json(nullptr);
        j["spearman"] = r.spearman ? Json(*r.spearman) : Json(nullptr);
        j["kendall"] = r.kendall ? Json(*r.kendall) : Json(nullptr);
        if (!r.notes.empty()) j["notes"] = r.notes;
        return j;
    };

    Json analysis{{"schema", "inspire/analysis/v1"}};
    Json dims = Json::object();
    for (DimensionId dim : kAllDimensions)
        dims[to_string(dim)] = report_json(arena::correlate(per_dim[dim].first,
                                                            per_dim[dim].second));
    analysis["per_dimension"] = dims;
    arena::CorrelationReport overall = arena::correlate(machine_overall, human_overall);
    analysis["overall"] = report_json(overall);
    if (!pred_shares.empty()) {
        analysis["rmse_winner"] = Json{{"value", arena::rmse_winner(pred_shares, human_shares)},
                                       {"n", static_cast<int>(pred_shares.size())},
                                       {"excluded", excluded_shares}};
    }
    util::ensure_dir(paths.report());
    util::write_file(paths.report() / "analysis.json", analysis.dump(2) + "\n");

    out << "overall correlation: pearson "
        << (overall.pearson ? util::format_fixed(*overall.pearson, 3) : "n/a") << ", spearman "
        << (overall.spearman ? util::format_fixed(*overall.spearman, 3) : "n/a") << ", kendall "
        << (overall.kendall ? util::format_fixed(*overall.kendall, 3) : "n/a") << " (n="
        << overall.n << ")\n";
    if (!pred_shares.empty())
        out << "winner-prediction RMSE: "
            << util::format_fixed(arena::rmse_winner(pred_shares, human_shares), 3) << " over "
            << pred_shares.size() << " debates\n";
    out << "analysis written to " << (paths.report() / "analysis.json").string() << "\n";
    return 0;
}

int cmd_fol_check(const std::string& file, std::ostream& out) {
    fol::FolDocument doc = fol::parse_document(util::read_file(file));
    for (const fol::ParseIssue& issue : doc.issues)
        out << "warning: " << issue.section << " line " << issue.line << ": " << issue.message
            << "\n";
    if (doc.conclusions.empty()) throw ValidationError("document has no well-formed conclusions");

    for (size_t i = 0; i < doc.conclusions.size(); ++i) {
        fol::EvalResult r = fol::evaluate_conclusion(doc, doc.conclusions[i]);
        out << "Conclusion " << (i + 1) << ": " << fol::to_string(r.verdict);
        if (r.verdict == fol::Verdict::Unknown) out << " [strict]";
        out << "\n";
        if (r.inconsistent_premises) out << "  note: premise set is inconsistent\n";
        if (r.derivation) {
            for (size_t s = 0; s < r.derivation->steps.size(); ++s) {
                const fol::ProofStep& step = r.derivation->steps[s];
                out << "  " << (s + 1) << ". " << step.formula << "  [";
                if (!step.label.empty()) out << step.label;
                else out << step.rule;
                if (!step.antecedents.empty()) {
                    out << " from ";
                    for (size_t a = 0; a < step.antecedents.size(); ++a)
                        out << (a ? "," : "") << (step.antecedents[a] + 1);
                }
                out << "]\n";
            }
        }
    }
    return 0;
}

int cmd_report(const std::string& run_dir, std::ostream& out) {
    RunPaths paths{fs::path(run_dir)};
    fs::path scores_file = paths.report() / "scores.json";
    if (!fs::exists(scores_file))
        throw ValidationError("no report/scores.json under " + run_dir);
    Json scores = Json::parse(util::read_file(scores_file));

    std::map<std::string, std::map<std::string, ScoreCard>> debate_scores;
    std::map<std::string, std::vector<ScoreCard>> by_engine;
    for (auto it = scores.at("debates").begin(); it != scores.at("debates").end(); ++it) {
        DebateTranscript t = transcript_from_json(
            Json::parse(util::read_file(paths.transcripts() / (it.key() + ".json"))));
        for (auto side = it.value().begin(); side != it.value().end(); ++side) {
            ScoreCard card = scorecard_from_json(side.value());
            debate_scores[it.key()][side.key()] = card;
            by_engine[side.key() == "pro" ? t.pro_engine : t.con_engine].push_back(card);
        }
    }
    arena::emit_reports(paths.report(), arena::rank(by_engine), debate_scores);
    out << "report refreshed under " << paths.report().string() << "\n";
    return 0;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"InspireScore/InspireDebate pipeline", "inspire"};
    app.require_subcommand(1);
    int rc = 0;

    CommonFlags flags;

    // debate
    auto* debate_cmd = app.add_subcommand("debate", "run one Pro/Con debate");
    std::string topic_text, topic_id = "topic", pro, con;
    bool web_rag = false;
    debate_cmd->add_option("--topic", topic_text, "debate motion text")->required();
    debate_cmd->add_option("--topic-id", topic_id, "identifier used in filenames");
    debate_cmd->add_option("--pro", pro, "affirmative engine id")->required();
    debate_cmd->add_option("--con", con, "negative engine id")->required();
    debate_cmd->add_flag("--web-rag", web_rag, "two-stage retrieval grounding per turn");
    add_common(debate_cmd, flags);
    debate_cmd->callback(
        [&] { rc = cmd_debate(flags, topic_text, topic_id, pro, con, web_rag, out); });

    // tournament
    auto* tournament_cmd = app.add_subcommand("tournament", "round-robin: debate, score, rank");
    std::string engines_csv, topics_path;
    tournament_cmd->add_option("--engines", engines_csv, "comma-separated engine ids");
    tournament_cmd->add_option("--topics", topics_path, "topics file (one per line)")->required();
    add_common(tournament_cmd, flags);
    tournament_cmd->callback([&] { rc = cmd_tournament(flags, engines_csv, topics_path, out); });

    // evaluate
    auto* evaluate_cmd = app.add_subcommand("evaluate", "score existing transcripts");
    std::string run_dir, dims_csv;
    evaluate_cmd->add_option("--run", run_dir, "run directory with transcripts/")->required();
    evaluate_cmd->add_option("--dims", dims_csv, "dimension subset, e.g. LV or EA,AC,AA,TR");
    add_common(evaluate_cmd, flags, false);
    evaluate_cmd->callback([&] { rc = cmd_evaluate(flags, run_dir, dims_csv, out); });

    // build-sft
    auto* sft_cmd = app.add_subcommand("build-sft", "teacher-generated instruction dataset");
    std::string sft_topics, teacher;
    sft_cmd->add_option("--topics", sft_topics, "topics file")->required();
    sft_cmd->add_option("--teacher", teacher, "teacher engine id (default: judge)");
    add_common(sft_cmd, flags, false);
    sft_cmd->callback([&] { rc = cmd_build_sft(flags, sft_topics, teacher, out); });

    // build-dpo
    auto* dpo_cmd = app.add_subcommand("build-dpo", "score-filtered preference pairs");
    std::string dpo_topics, debater, dimension;
    int k = 0, self_rounds = 0;
    double epsilon = -1;
    dpo_cmd->add_option("--topics", dpo_topics, "topics file")->required();
    dpo_cmd->add_option("--debater", debater, "self-debating engine id (default: judge)");
    dpo_cmd->add_option("--k", k, "candidates per prompt context");
    dpo_cmd->add_option("--epsilon", epsilon, "minimum reward margin");
    dpo_cmd->add_option("--dimension", dimension, "reward dimension (overall or EA/AC/AA/TR/FA/LV)");
    dpo_cmd->add_option("--self-rounds", self_rounds, "self-debate rounds (default 1)");
    add_common(dpo_cmd, flags, false);
    dpo_cmd->callback([&] {
        rc = cmd_build_dpo(flags, dpo_topics, debater, k, epsilon, dimension, self_rounds, out);
    });

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "correlate/rmse against a human-score CSV");
    std::string analyze_run, human_csv;
    analyze_cmd->add_option("--run", analyze_run, "run directory")->required();
    analyze_cmd->add_option("--human", human_csv, "human-score CSV")->required();
    analyze_cmd->callback([&] { rc = cmd_analyze(analyze_run, human_csv, out); });

    // fol-check
    auto* fol_cmd = app.add_subcommand("fol-check", "offline FOL parse + verdicts");
    std::string fol_file;
    fol_cmd->add_option("file", fol_file, "FOL document file")->required();
    fol_cmd->callback([&] { rc = cmd_fol_check(fol_file, out); });

    // report
    auto* report_cmd = app.add_subcommand("report", "re-emit ranking CSV and radar chart");
    std::string report_run;
    report_cmd->add_option("--run", report_run, "run directory")->required();
    report_cmd->callback([&] { rc = cmd_report(report_run, out); });

    std::vector<std::string> argv(args.rbegin(), args.rend());  // CLI11 wants reversed args
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 1;
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const fol::ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const fol::DocumentError& e) {
        err << "document error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "pipeline failure: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "pipeline failure: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace inspire::cli
