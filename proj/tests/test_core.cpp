#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "inspire/core/json_io.hpp"
#include "inspire/core/types.hpp"

using namespace inspire;

namespace {

DimensionScores row_scores(const testutil::TableRow& row) {
    return DimensionScores{{DimensionId::EA, row.ea}, {DimensionId::AC, row.ac},
                           {DimensionId::AA, row.aa}, {DimensionId::TR, row.tr},
                           {DimensionId::FA, row.fa}, {DimensionId::LV, row.lv}};
}

DebateTranscript make_transcript(int rounds) {
    DebateTranscript t;
    t.topic = make_topic("t1", "We should adopt the motion.");
    t.pro_engine = "a";
    t.con_engine = "b";
    t.rounds = rounds;
    for (int r = 1; r <= rounds; ++r) {
        for (Role role : {Role::Pro, Role::Con}) {
            DebateTurn turn;
            turn.round_index = r;
            turn.role = role;
            turn.reasoning = "because of round " + std::to_string(r);
            turn.argument = "argument of round " + std::to_string(r);
            t.turns.push_back(turn);
        }
    }
    return t;
}

}  // namespace

TEST_CASE("aggregate reproduces both published tables within 0.0015") {
    for (const auto& rows : {testutil::machine_eval_rows(), testutil::human_eval_rows()}) {
        for (const auto& row : rows) {
            ScoreCard card = aggregate_scorecard(row_scores(row));
            INFO(row.name);
            CHECK(std::abs(card.subjective_avg - row.subj_avg) <= 0.0015);
            CHECK(std::abs(card.objective_avg - row.obj_avg) <= 0.0015);
            CHECK(std::abs(card.overall - row.overall) <= 0.0015);
        }
    }
}

TEST_CASE("aggregate zero case and weighted-mean identity") {
    DimensionScores zeros;
    for (DimensionId dim : kAllDimensions) zeros[dim] = 0.0;
    ScoreCard card = aggregate_scorecard(zeros);
    CHECK(card.subjective_avg == 0.0);
    CHECK(card.objective_avg == 0.0);
    CHECK(card.overall == 0.0);

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        DimensionScores s;
        for (DimensionId dim : kAllDimensions) s[dim] = uni(rng);
        ScoreCard c = aggregate_scorecard(s);
        double weighted = (4.0 * c.subjective_avg + 2.0 * c.objective_avg) / 6.0;
        CHECK(std::abs(c.overall - weighted) <= 1e-15);
    }
}

TEST_CASE("aggregate is permutation-invariant within each block") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        double a = uni(rng), b = uni(rng), c = uni(rng), d = uni(rng);
        double e = uni(rng), f = uni(rng);
        ScoreCard base = aggregate_scorecard({{DimensionId::EA, a},
                                              {DimensionId::AC, b},
                                              {DimensionId::AA, c},
                                              {DimensionId::TR, d},
                                              {DimensionId::FA, e},
                                              {DimensionId::LV, f}});
        ScoreCard permuted = aggregate_scorecard({{DimensionId::EA, d},
                                                  {DimensionId::AC, c},
                                                  {DimensionId::AA, b},
                                                  {DimensionId::TR, a},
                                                  {DimensionId::FA, f},
                                                  {DimensionId::LV, e}});
        CHECK(base.subjective_avg == doctest::Approx(permuted.subjective_avg).epsilon(1e-15));
        CHECK(base.objective_avg == doctest::Approx(permuted.objective_avg).epsilon(1e-15));
        CHECK(base.overall == doctest::Approx(permuted.overall).epsilon(1e-15));
    }
}

TEST_CASE("aggregate rejects incomplete and out-of-range inputs") {
    DimensionScores s = row_scores(testutil::machine_eval_rows()[0]);
    s.erase(DimensionId::LV);
    CHECK_THROWS_AS(aggregate_scorecard(s), IncompleteScorecardError);

    s = row_scores(testutil::machine_eval_rows()[0]);
    s[DimensionId::EA] = 1.2;
    CHECK_THROWS_AS(aggregate_scorecard(s), ScoreRangeError);
    s[DimensionId::EA] = -0.1;
    CHECK_THROWS_AS(aggregate_scorecard(s), ScoreRangeError);
}

TEST_CASE("dimension ids parse with the AR alias") {
    CHECK(dimension_from_string("AA") == DimensionId::AA);
    CHECK(dimension_from_string("AR") == DimensionId::AA);
    CHECK(dimension_from_string("lv") == DimensionId::LV);
    CHECK_THROWS_AS(dimension_from_string("XX"), ValidationError);
}

TEST_CASE("topic statement must be non-empty") {
    CHECK_THROWS_AS(make_topic("t", "   \n"), ValidationError);
    CHECK(make_topic("t", "We should ban junk food.").id == "t");
}

TEST_CASE("validate_transcript reports the spec violations") {
    CHECK(validate_transcript(make_transcript(4)).empty());

    DebateTranscript two_pro = make_transcript(1);
    two_pro.turns[1].role = Role::Pro;
    auto report = validate_transcript(two_pro);
    bool found = false;
    for (const std::string& v : report)
        if (v == "alternation violated at index 2") found = true;
    CHECK(found);

    DebateTranscript short_run = make_transcript(2);
    short_run.rounds = 3;  // m=3 but 4 turns
    report = validate_transcript(short_run);
    found = false;
    for (const std::string& v : report)
        if (v == "turn count != 2m") found = true;
    CHECK(found);

    DebateTranscript no_arg = make_transcript(1);
    no_arg.turns[0].argument = "  ";
    CHECK(!validate_transcript(no_arg).empty());
}

TEST_CASE("transcript JSON round-trips") {
    DebateTranscript t = make_transcript(3);
    t.turns[2].evidence = {"snippet one", "snippet two"};
    Json j = transcript_to_json(t);
    DebateTranscript back = transcript_from_json(j);
    CHECK(transcript_to_json(back).dump() == j.dump());
    CHECK(back.turns[2].evidence.size() == 2);
    CHECK(debate_id(t) == "t1__a__b");
}

TEST_CASE("scorecard JSON round-trips at full precision") {
    ScoreCard card = aggregate_scorecard(row_scores(testutil::machine_eval_rows()[7]));
    ScoreCard back = scorecard_from_json(scorecard_to_json(card));
    CHECK(back.overall == card.overall);
    CHECK(back.scores.at(DimensionId::FA) == card.scores.at(DimensionId::FA));
}
