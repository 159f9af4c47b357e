#include "inspire/scoring/pipeline.hpp"

namespace inspire::scoring {

EvaluationArtifacts evaluate_transcript(gateways::GatewayHub& hub, const PipelineOptions& opts,
                                        const DebateTranscript& t,
                                        const std::set<DimensionId>& dims) {
    EvaluationArtifacts art;
    bool want_subjective = dims.count(DimensionId::EA) || dims.count(DimensionId::AC) ||
                           dims.count(DimensionId::AA) || dims.count(DimensionId::TR);

    if (want_subjective) {
        for (int round = 1; round <= t.rounds; ++round) {
            try {
                art.judgements.push_back(judge_round(hub, t, round, opts.judge_engine));
            } catch (const JudgingError&) {
                if (!opts.allow_partial) throw;
            }
        }
        for (Role side : {Role::Pro, Role::Con}) {
            auto means = mean_subjective(art.judgements, side);
            for (DimensionId dim : kSubjectiveDimensions)
                if (dims.count(dim)) art.scores[side][dim] = means.at(dim);
        }
    }

    std::string formalizer =
        opts.formalizer_engine.empty() ? opts.judge_engine : opts.formalizer_engine;

    for (Role side : {Role::Pro, Role::Con}) {
        if (dims.count(DimensionId::FA)) {
            FactPipelineOptions fopts;
            fopts.engine = opts.judge_engine;
            fopts.search_top_k = opts.search_top_k;
            fopts.allow_partial = opts.allow_partial;
            art.scores[side][DimensionId::FA] = score_fact_authenticity(
                hub, fopts, t, side, &art.fact_reports[side]);
        }
        if (dims.count(DimensionId::LV)) {
            LogicPipelineOptions lopts;
            lopts.formalizer_engine = formalizer;
            lopts.judge_engine = opts.judge_engine;
            lopts.mode = opts.logic_mode;
            lopts.allow_partial = opts.allow_partial;
            art.scores[side][DimensionId::LV] = score_logical_validity(
                hub, lopts, t, side, &art.logic_turns[side], &art.logic_verdicts[side]);
        }
        if (art.scores[side].size() == kAllDimensions.size())
            art.cards[side] = aggregate_scorecard(art.scores[side]);
        else
            art.cards[side] = std::nullopt;
    }
    return art;
}

}  // namespace inspire::scoring
