#include "abstain/core/types.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace abstain::core {

bool point_equal(const Point& a, const Point& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<PointId>(a))
        return std::get<PointId>(a) == std::get<PointId>(b);
    return std::get<Vec>(a) == std::get<Vec>(b);
}

std::string point_to_string(const Point& p) {
    if (std::holds_alternative<PointId>(p))
        return std::to_string(std::get<PointId>(p));
    const Vec& v = std::get<Vec>(p);
    std::ostringstream out;
    char buf[40];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        if (i) out << ';';
        out << buf;
    }
    return out.str();
}

FiniteHypothesisClass::FiniteHypothesisClass(std::int64_t num_hypotheses,
                                             std::int64_t num_points)
    : n_(num_hypotheses), p_(num_points) {
    if (n_ < 1 || p_ < 1)
        throw std::invalid_argument(
            "FiniteHypothesisClass needs at least one hypothesis and one point");
    table_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(p_),
                  static_cast<std::int8_t>(Label::neg));
}

void FiniteHypothesisClass::set_truth_index(std::int64_t h) {
    if (h < 0 || h >= n_)
        throw std::invalid_argument("truth_index out of range");
    truth_ = h;
}

Label FiniteHypothesisClass::truth_label(std::int64_t point) const {
    if (!truth_)
        throw std::logic_error("class has no designated truth hypothesis");
    return pred(*truth_, point);
}

std::string_view outcome_name(Outcome o) {
    switch (o) {
        case Outcome::correct: return "correct";
        case Outcome::mistake: return "mistake";
        case Outcome::abstain: break;
    }
    return "abstain";
}

Outcome judge(const std::optional<Vec>& predicted, const Vec& truth,
              double accuracy_eps) {
    if (!predicted) return Outcome::abstain;
    if (predicted->size() != truth.size()) return Outcome::mistake;
    double err = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i)
        err = std::max(err, std::fabs((*predicted)[i] - truth[i]));
    if (accuracy_eps == 0.0) return err == 0.0 ? Outcome::correct : Outcome::mistake;
    return err < accuracy_eps ? Outcome::correct : Outcome::mistake;
}

void KwikTranscript::add_round(Point p, std::optional<Vec> predicted, Vec truth) {
    Outcome o = judge(predicted, truth, accuracy_eps);
    if (o == Outcome::mistake) ++mistakes;
    if (o == Outcome::abstain) ++abstentions;
    rounds.push_back(
        TranscriptRound{std::move(p), std::move(predicted), std::move(truth), o});
}

std::pair<std::int64_t, std::int64_t> KwikTranscript::recount() const {
    std::int64_t m = 0, a = 0;
    for (const auto& r : rounds) {
        Outcome o = judge(r.predicted, r.truth, accuracy_eps);
        if (o == Outcome::mistake) ++m;
        if (o == Outcome::abstain) ++a;
    }
    return {m, a};
}

}  // namespace abstain::core
