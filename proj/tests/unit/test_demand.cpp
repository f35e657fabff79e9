#include "certinv/demand.hpp"

#include <gtest/gtest.h>

#include <memory>
#include <random>

using namespace certinv;

TEST(PeriodicDemand, FormulaExamples) {
    EXPECT_DOUBLE_EQ(periodic_demand(0, 0.0), 20.0);
    EXPECT_NEAR(periodic_demand(13, 0.0), 39.960534568565436, 1e-12);
    EXPECT_EQ(periodic_demand(0, 100.0), 50.0);
    EXPECT_EQ(periodic_demand(38, -100.0), 0.0);
}

namespace {

class Fixed final : public DemandGenerator {
public:
    explicit Fixed(double v) : DemandGenerator(50.0), v_(v) {}
    std::string name() const override { return "fixed"; }

protected:
    double generate(const StepView&) override { return v_; }

private:
    double v_;
};

} // namespace

TEST(DemandGenerator, EmittedValuesStayBelowCapacity) {
    Fixed at_cap(50.0);
    EXPECT_LT(at_cap.draw({}), 50.0);
    EXPECT_GT(at_cap.draw({}), 49.999999);
    Fixed negative(-1.0);
    EXPECT_EQ(negative.draw({}), 0.0);
}

TEST(SirDemand, StepExamples) {
    auto [w0, s0] = sir_step({.S = 1.0, .I = 0.0, .R = 0.0}, false);
    EXPECT_EQ(w0, 0.0);
    EXPECT_EQ(s0.I, 0.0);

    auto [w1, s1] = sir_step({.S = 0.9, .I = 0.1, .R = 0.0}, false);
    EXPECT_NEAR(s1.I, 0.125, 1e-15);
    EXPECT_NEAR(w1, 6.25, 1e-13);

    auto [w2, s2] = sir_step({.S = 0.9, .I = 0.0, .R = 0.1}, true);
    EXPECT_NEAR(w2, 0.064975, 1e-12);
    EXPECT_NEAR(s2.S, 0.9985005, 1e-12);
    EXPECT_NEAR(s2.R, 0.0002, 1e-15);
}

TEST(SirDemand, DiseaseFreeStaysAtZeroWithoutReinfection) {
    SirState s{.S = 0.7, .I = 0.0, .R = 0.3};
    for (int i = 0; i < 100; ++i) {
        auto [w, next] = sir_step(s, false);
        ASSERT_EQ(w, 0.0);
        s = next;
    }
}

TEST(SirDemand, PopulationConserved) {
    std::mt19937_64 rng(59);
    std::bernoulli_distribution e(0.03);
    SirState s;
    for (int i = 0; i < 100000; ++i) {
        s = sir_step(s, e(rng)).second;
        ASSERT_NEAR(s.S + s.I + s.R, 1.0, 1e-9);
        ASSERT_GE(s.I, 0.0);
    }
}

TEST(FeedbackDemand, FormulaExamples) {
    EXPECT_EQ(feedback_demand(0, 0), 5.0);
    EXPECT_EQ(feedback_demand(100, 0.3), 49.999);
    EXPECT_EQ(feedback_demand(10, 4), 19.0);
    EXPECT_THROW(feedback_demand(-1, 0), std::invalid_argument);
}

TEST(FeedbackDemand, ReactsToPreviousStock) {
    FeedbackDemand g(1);
    const double first = g.draw({.t = 0, .stock = 40.0});
    EXPECT_LT(first, 5.0 + 40.0); // uses the initial previous stock 0, not 40
    EXPECT_GE(first, 5.0);
    EXPECT_GE(g.draw({.t = 1, .stock = 0.0}), 45.0);
}

TEST(AdversarialDemand, StrikesWheneverItCanCauseAStockout) {
    AdversarialDemand g(3, 50.0, 1e-3, 0.0);
    EXPECT_EQ(g.draw({.t = 0, .stock = 10.0, .order = 20.0}), 50.0 - 1e-3);
    for (int i = 0; i < 100; ++i) {
        const double w = g.draw({.t = i, .stock = 10.0, .order = 40.0});
        ASSERT_TRUE(w == 0.0 || w == 50.0 - 1e-3);
    }
}

TEST(DemandGenerators, RangeOnAMillionDraws) {
    std::mt19937_64 rng(61);
    std::uniform_real_distribution<double> stock(0.0, 50.0);
    std::vector<std::unique_ptr<DemandGenerator>> gens;
    gens.push_back(std::make_unique<PeriodicDemand>(1));
    gens.push_back(std::make_unique<SirDemand>(2));
    gens.push_back(std::make_unique<FeedbackDemand>(3));
    gens.push_back(std::make_unique<AdversarialDemand>(4, 50.0, 1e-3, 0.0));
    for (auto& g : gens) {
        for (int t = 0; t < 1000000; ++t) {
            const double x = stock(rng);
            const double w = g->draw({t, x, (50.0 - x) * 0.5});
            ASSERT_GE(w, 0.0) << g->name();
            ASSERT_LT(w, 50.0) << g->name();
        }
    }
}

TEST(DemandGenerators, SameSeedSameSequence) {
    auto sequence = [](DemandGenerator& g) {
        std::vector<double> out;
        for (int t = 0; t < 500; ++t) out.push_back(g.draw({t, 0.1 * (t % 300), 1.0}));
        return out;
    };
    PeriodicDemand p1(9), p2(9), p3(10);
    EXPECT_EQ(sequence(p1), sequence(p2));
    EXPECT_NE(sequence(p1), sequence(p3));
    SirDemand s1(9), s2(9);
    EXPECT_EQ(sequence(s1), sequence(s2));
    FeedbackDemand f1(9), f2(9);
    EXPECT_EQ(sequence(f1), sequence(f2));
}

TEST(SeriesDemand, ReplaysByAbsoluteTime) {
    SeriesDemand g({0.1, 0.2, 0.3}, -1, 1.0, "series");
    EXPECT_EQ(g.draw({.t = -1}), 0.1);
    EXPECT_EQ(g.draw({.t = 1}), 0.3);
    EXPECT_THROW(g.draw({.t = 2}), std::invalid_argument);
}
