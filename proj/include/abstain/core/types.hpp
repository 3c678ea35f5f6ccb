#pragma once
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace abstain::core {

// ---------------------------------------------------------------------------
// Labels and decisions
// ---------------------------------------------------------------------------

enum class Label : std::int8_t { neg = -1, pos = +1 };

constexpr int to_int(Label l) { return static_cast<int>(l); }
constexpr Label flip(Label l) { return l == Label::pos ? Label::neg : Label::pos; }

inline Label label_from_int(int v) {
    if (v == 1) return Label::pos;
    if (v == -1) return Label::neg;
    throw std::invalid_argument("label must be +1 or -1");
}

// sign(x) mapped to a label; zero counts as negative so the map is total.
constexpr Label label_from_sign(double x) {
    return x > 0.0 ? Label::pos : Label::neg;
}

// A selective output: commit to a label or abstain.
struct Decision {
    std::optional<Label> label;

    static Decision predict(Label l) { return Decision{l}; }
    static Decision abstain() { return Decision{std::nullopt}; }
    bool is_abstain() const { return !label.has_value(); }
    bool is_predict() const { return label.has_value(); }
};

// ---------------------------------------------------------------------------
// Points: finite-domain problems index points by id, geometric problems use
// real vectors. Both flow through the same decision/label vocabulary.
// ---------------------------------------------------------------------------

using PointId = std::int64_t;
using Vec = std::vector<double>;
using Point = std::variant<PointId, Vec>;

bool point_equal(const Point& a, const Point& b);
std::string point_to_string(const Point& p);

// ---------------------------------------------------------------------------
// Finite hypothesis class: a +-1 prediction table, hypotheses x points.
// Stored point-major so a per-point prediction column is contiguous (the
// vote/filter kernels run down columns).
// ---------------------------------------------------------------------------

class FiniteHypothesisClass {
  public:
    FiniteHypothesisClass(std::int64_t num_hypotheses, std::int64_t num_points);

    std::int64_t num_hypotheses() const { return n_; }
    std::int64_t num_points() const { return p_; }

    Label pred(std::int64_t h, std::int64_t point) const {
        return static_cast<Label>(table_[static_cast<std::size_t>(point) *
                                             static_cast<std::size_t>(n_) +
                                         static_cast<std::size_t>(h)]);
    }
    void set_pred(std::int64_t h, std::int64_t point, Label l) {
        table_[static_cast<std::size_t>(point) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(h)] = static_cast<std::int8_t>(l);
    }

    // Contiguous column of all hypotheses' predictions at `point`.
    const std::int8_t* column(std::int64_t point) const {
        return table_.data() +
               static_cast<std::size_t>(point) * static_cast<std::size_t>(n_);
    }

    const std::optional<std::int64_t>& truth_index() const { return truth_; }
    void set_truth_index(std::int64_t h);
    Label truth_label(std::int64_t point) const;

    const std::vector<std::int8_t>& raw_table() const { return table_; }

  private:
    std::int64_t n_;  // hypotheses
    std::int64_t p_;  // domain points
    std::vector<std::int8_t> table_;
    std::optional<std::int64_t> truth_;
};

// ---------------------------------------------------------------------------
// Version spaces
// ---------------------------------------------------------------------------

// Explicit index subset of a finite class, as a 0/1 live mask.
struct ExplicitVersionSpace {
    std::vector<std::uint8_t> live;
    std::int64_t live_count = 0;

    static ExplicitVersionSpace full(std::int64_t n) {
        ExplicitVersionSpace v;
        v.live.assign(static_cast<std::size_t>(n), 1);
        v.live_count = n;
        return v;
    }
    bool contains(std::int64_t h) const {
        return live[static_cast<std::size_t>(h)] != 0;
    }
};

// Homogeneous halfspace constraints intersected with the unit ball. Each
// direction d requires d.w > 0 of a candidate w.
struct PolytopeVersionSpace {
    int ambient_dim = 0;
    std::vector<Vec> constraint_dirs;
};

using VersionSpace = std::variant<ExplicitVersionSpace, PolytopeVersionSpace>;

// ---------------------------------------------------------------------------
// Labeled data
// ---------------------------------------------------------------------------

struct LabeledSet {
    std::vector<std::pair<Point, Label>> items;

    std::int64_t size() const { return static_cast<std::int64_t>(items.size()); }
    void add(Point p, Label y) { items.emplace_back(std::move(p), y); }
};

// ---------------------------------------------------------------------------
// Selective classifiers and their evaluation
// ---------------------------------------------------------------------------

class SelectiveClassifier {
  public:
    virtual ~SelectiveClassifier() = default;
    virtual Decision classify(const Point& x) const = 0;
    virtual std::string name() const { return "classifier"; }
};

struct RiskCoveragePoint {
    double coverage = 0.0;
    // Unset exactly when no point was predicted on; never a sentinel value.
    std::optional<double> risk_on_predicted;
    std::string params;

    std::int64_t predicted_count = 0;
    std::int64_t wrong_count = 0;
    std::int64_t m = 0;
};

RiskCoveragePoint evaluate_selective(const SelectiveClassifier& c,
                                     const LabeledSet& test,
                                     std::string params_tag = {});

// ---------------------------------------------------------------------------
// Online transcripts
// ---------------------------------------------------------------------------

enum class Outcome : std::int8_t { correct, mistake, abstain };

std::string_view outcome_name(Outcome o);

// One protocol round. Predictions and truths are stored as small real
// vectors so classification (+-1, size 1), scalar regression (size 1) and
// distribution learners (size n) share one record type.
struct TranscriptRound {
    Point point;
    std::optional<Vec> predicted;  // nullopt = abstained
    Vec truth;
    Outcome outcome = Outcome::abstain;
};

struct KwikTranscript {
    std::vector<TranscriptRound> rounds;
    std::int64_t mistakes = 0;
    std::int64_t abstentions = 0;
    // Accuracy for judging a real-valued prediction correct (|y_hat - y| <
    // eps, sup-norm). Zero means exact match, the classification case.
    double accuracy_eps = 0.0;
    bool ended_early = false;

    void add_round(Point p, std::optional<Vec> predicted, Vec truth);
    // Recount mistakes/abstentions from the round log; used by invariants.
    std::pair<std::int64_t, std::int64_t> recount() const;
};

Outcome judge(const std::optional<Vec>& predicted, const Vec& truth,
              double accuracy_eps);

// ---------------------------------------------------------------------------
// Error taxonomy
// ---------------------------------------------------------------------------

// The version space emptied while the protocol assumed a realizable stream.
struct RealizabilityViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Observed labels contradict the declared noise model.
struct NoiseModelViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No strictly interior point exists (separability violated).
struct InfeasibleVersionSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace abstain::core
