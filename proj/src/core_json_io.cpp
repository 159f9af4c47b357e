#include "inspire/core/json_io.hpp"

namespace inspire {

Json topic_to_json(const Topic& topic) {
    return Json{{"id", topic.id}, {"statement", topic.statement}};
}

Topic topic_from_json(const Json& j) {
    return make_topic(j.at("id").get<std::string>(), j.at("statement").get<std::string>());
}

Json transcript_to_json(const DebateTranscript& t) {
    Json turns = Json::array();
    for (const DebateTurn& turn : t.turns) {
        Json evidence = Json::array();
        for (const std::string& e : turn.evidence) evidence.push_back(e);
        turns.push_back(Json{{"round", turn.round_index},
                             {"role", to_string(turn.role)},
                             {"reasoning", turn.reasoning},
                             {"argument", turn.argument},
                             {"evidence", evidence}});
    }
    return Json{{"schema", "inspire/transcript/v1"},
                {"topic", topic_to_json(t.topic)},
                {"pro_engine", t.pro_engine},
                {"con_engine", t.con_engine},
                {"rounds", t.rounds},
                {"turns", turns}};
}

DebateTranscript transcript_from_json(const Json& j) {
    DebateTranscript t;
    t.topic = topic_from_json(j.at("topic"));
    t.pro_engine = j.at("pro_engine").get<std::string>();
    t.con_engine = j.at("con_engine").get<std::string>();
    t.rounds = j.at("rounds").get<int>();
    for (const Json& jt : j.at("turns")) {
        DebateTurn turn;
        turn.round_index = jt.at("round").get<int>();
        turn.role = role_from_string(jt.at("role").get<std::string>());
        turn.reasoning = jt.at("reasoning").get<std::string>();
        turn.argument = jt.at("argument").get<std::string>();
        if (jt.contains("evidence"))
            for (const Json& e : jt.at("evidence")) turn.evidence.push_back(e.get<std::string>());
        t.turns.push_back(std::move(turn));
    }
    return t;
}

Json scorecard_to_json(const ScoreCard& card) {
    Json scores;
    for (DimensionId dim : kAllDimensions) scores[to_string(dim)] = card.scores.at(dim);
    return Json{{"scores", scores},
                {"subjective_avg", card.subjective_avg},
                {"objective_avg", card.objective_avg},
                {"overall", card.overall}};
}

ScoreCard scorecard_from_json(const Json& j) {
    DimensionScores scores;
    for (auto it = j.at("scores").begin(); it != j.at("scores").end(); ++it)
        scores[dimension_from_string(it.key())] = it.value().get<double>();
    return aggregate_scorecard(scores);
}

Json manifest_to_json(const RunManifest& m) {
    return Json{{"schema", "inspire/manifest/v1"},
                {"run_id", m.run_id},
                {"engines", m.engine_ids},
                {"topics", m.topic_ids},
                {"created_at", m.created_at},
                {"finished_at", m.finished_at}};
}

}  // namespace inspire
